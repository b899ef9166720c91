#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "luk/formula.hpp"

namespace luk {

enum class MetaVar : std::uint8_t { Alpha = 0, Beta = 1, Gamma = 2 };

enum class PatternKind : std::uint8_t { Bottom, Meta, Not, Implies };

// Formula template over the metavariables alpha, beta, gamma. Axiom
// schemata are patterns; their instances are obtained by substitution.
class Pattern {
 public:
  Pattern() = default;

  static Pattern bottom();
  static Pattern meta(MetaVar m);
  static Pattern negate(Pattern p);
  static Pattern implies(Pattern lhs, Pattern rhs);

  PatternKind kind() const;
  MetaVar meta_var() const;
  const Pattern& child() const;
  const Pattern& lhs() const;
  const Pattern& rhs() const;

 private:
  struct Node;
  explicit Pattern(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Metavariable -> formula. Slots indexed by MetaVar.
using Binding = std::array<std::optional<Formula>, 3>;

// Simultaneous replacement of metavariables. Throws std::invalid_argument
// if the pattern mentions an unbound metavariable.
Formula substitute(const Pattern& pattern, const Binding& binding);

// Structural matching: extends `binding` so that substitute(pattern,
// binding) == f, or returns false on a clash. Two occurrences of the same
// metavariable must bind structurally identical subtrees.
bool match(const Pattern& pattern, const Formula& f, Binding& binding);

// The Lukasiewicz calculus:
//   A0:  0 -> a
//   A1:  a -> (b -> a)
//   A2:  (a -> b) -> ((b -> c) -> (a -> c))
//   A3:  ((a -> b) -> b) -> ((b -> a) -> a)
//   A4:  (~a -> ~b) -> (b -> a)
enum class AxiomId : std::uint8_t { A0, A1, A2, A3, A4 };

inline constexpr std::array<AxiomId, 5> kAllAxioms = {
    AxiomId::A0, AxiomId::A1, AxiomId::A2, AxiomId::A3, AxiomId::A4};

const Pattern& axiom_schema(AxiomId id);
std::size_t schema_meta_count(AxiomId id);  // metavariables used by the schema
std::string_view axiom_name(AxiomId id);    // "A0" ... "A4"
std::optional<AxiomId> axiom_by_name(std::string_view name);

}  // namespace luk
