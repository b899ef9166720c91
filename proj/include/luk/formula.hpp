#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace luk {

enum class FormulaKind : std::uint8_t { Bottom, Var, Not, Implies };

// Immutable propositional formula over the core language {0, Xn, ~, ->}.
// Derived connectives are expanded at construction time, so every Formula
// that exists is already in core form. Nodes are shared behind
// shared_ptr; copies are cheap and formulas are safe to read from any
// number of threads.
class Formula {
 public:
  Formula() = default;  // empty handle; assign before use

  static Formula bottom();
  static Formula var(unsigned index);  // index >= 1
  static Formula negate(Formula f);
  static Formula implies(Formula lhs, Formula rhs);

  FormulaKind kind() const;
  unsigned var_index() const;   // Var nodes only
  const Formula& child() const;  // Not nodes only
  const Formula& lhs() const;    // Implies nodes only
  const Formula& rhs() const;    // Implies nodes only

  bool valid() const { return node_ != nullptr; }

  // Stable identity of the shared node. Formulas built by the axiomatizer
  // reuse subterms heavily, so recursive walks memoise on this key rather
  // than expand the DAG into a tree.
  const void* node_id() const { return node_.get(); }

  // Structural equality (with a shared-node shortcut).
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// The derived connectives and their expansions into the core language:
//   1         := ~0
//   a \/ b    := (a -> b) -> b
//   a /\ b    := ~(~a \/ ~b)
//   a <-> b   := (a -> b) /\ (b -> a)
//   a (+) b   := ~a -> b
//   a (.) b   := ~(a -> ~b)
//   a (-) b   := ~(a -> b)
enum class Connective : std::uint8_t { Verum, And, Or, Iff, Oplus, Odot, Ominus };

Formula expand(Connective op);                        // Verum only
Formula expand(Connective op, Formula a, Formula b);  // binary connectives

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Concrete grammar (ASCII, whitespace insignificant):
//   constants "0", "1"; variables "X1", "X2", ...;
//   "~" unary; binary "(.)" "(-)", then "/\", then "(+)" "\/",
//   then "->" "<->" (loosest, right-associative); parentheses group.
// The result is fully desugared into the core language.
Formula parse_formula(std::string_view text);

// Core connectives only, minimal parentheses; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

// Sorted, duplicate-free indices of the variables occurring in f.
std::vector<unsigned> variables(const Formula& f);

// Node count of the fully expanded tree (shared subterms counted once per
// occurrence), saturating at `cap`. Axiomatizer output shares subterms so
// heavily that its expansion, and hence its printed form, can be
// astronomically larger than the in-memory DAG.
std::size_t tree_size(const Formula& f, std::size_t cap);

}  // namespace luk
