#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "luk/formula.hpp"
#include "luk/schema.hpp"

namespace luk {

struct AxiomJust {
  AxiomId id;
};
struct MpJust {
  std::size_t premise;      // 1-based index of the step proving a
  std::size_t implication;  // 1-based index of the step proving a -> b
};
struct HypJust {
  std::size_t index;  // 1-based index into the hypothesis list
};
using Justification = std::variant<AxiomJust, MpJust, HypJust>;

struct ProofStep {
  Formula formula;
  Justification justification;
};

// Hilbert-style proof: hypotheses, then numbered steps; the conclusion is
// the last step's formula.
struct Proof {
  std::vector<Formula> hypotheses;
  std::vector<ProofStep> steps;

  const Formula& conclusion() const { return steps.back().formula; }
};

// Binding under which the schema instantiates to f, or nullopt. Matching
// is purely structural; no equivalence rewriting.
std::optional<Binding> match_schema(const Formula& f, AxiomId id);

struct CheckResult {
  bool accepted;
  std::size_t step;    // 1-based step of the first failure (0 if accepted)
  std::string reason;  // empty if accepted

  explicit operator bool() const { return accepted; }
};

// Accepts iff every step is a correct schema instance, a correct modus
// ponens application (the implication step's formula is exactly
// Implies(premise step's formula, this step's formula), both strictly
// earlier), or a listed hypothesis.
CheckResult check_proof(const Proof& proof);

class ProofParseError : public std::runtime_error {
 public:
  ProofParseError(const std::string& message, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Line-oriented proof file:
//   hyp: <formula>                (zero or more, first)
//   n. <formula> ; A0|A1|A2|A3|A4|MP i j|HYP k
// Steps must be numbered 1,2,... in order. Blank lines and lines starting
// with '#' are ignored.
Proof parse_proof(std::string_view text);
std::string format_proof(const Proof& proof);

}  // namespace luk
