#include "luk/schema.hpp"

#include <stdexcept>

namespace luk {

struct Pattern::Node {
  PatternKind kind;
  MetaVar meta = MetaVar::Alpha;
  Pattern a;
  Pattern b;
};

Pattern Pattern::bottom() {
  static const Pattern instance(std::make_shared<const Node>(Node{PatternKind::Bottom}));
  return instance;
}

Pattern Pattern::meta(MetaVar m) {
  return Pattern(std::make_shared<const Node>(Node{PatternKind::Meta, m}));
}

Pattern Pattern::negate(Pattern p) {
  return Pattern(
      std::make_shared<const Node>(Node{PatternKind::Not, MetaVar::Alpha, std::move(p)}));
}

Pattern Pattern::implies(Pattern lhs, Pattern rhs) {
  return Pattern(std::make_shared<const Node>(
      Node{PatternKind::Implies, MetaVar::Alpha, std::move(lhs), std::move(rhs)}));
}

PatternKind Pattern::kind() const { return node_->kind; }
MetaVar Pattern::meta_var() const { return node_->meta; }
const Pattern& Pattern::child() const { return node_->a; }
const Pattern& Pattern::lhs() const { return node_->a; }
const Pattern& Pattern::rhs() const { return node_->b; }

Formula substitute(const Pattern& pattern, const Binding& binding) {
  switch (pattern.kind()) {
    case PatternKind::Bottom:
      return Formula::bottom();
    case PatternKind::Meta: {
      const auto& slot = binding[static_cast<std::size_t>(pattern.meta_var())];
      if (!slot) throw std::invalid_argument("unbound metavariable in substitution");
      return *slot;
    }
    case PatternKind::Not:
      return Formula::negate(substitute(pattern.child(), binding));
    case PatternKind::Implies:
      return Formula::implies(substitute(pattern.lhs(), binding),
                              substitute(pattern.rhs(), binding));
  }
  throw std::invalid_argument("unknown pattern kind");
}

bool match(const Pattern& pattern, const Formula& f, Binding& binding) {
  switch (pattern.kind()) {
    case PatternKind::Bottom:
      return f.kind() == FormulaKind::Bottom;
    case PatternKind::Meta: {
      auto& slot = binding[static_cast<std::size_t>(pattern.meta_var())];
      if (slot) return *slot == f;
      slot = f;
      return true;
    }
    case PatternKind::Not:
      return f.kind() == FormulaKind::Not && match(pattern.child(), f.child(), binding);
    case PatternKind::Implies:
      return f.kind() == FormulaKind::Implies && match(pattern.lhs(), f.lhs(), binding) &&
             match(pattern.rhs(), f.rhs(), binding);
  }
  return false;
}

namespace {

Pattern build_schema(AxiomId id) {
  const Pattern a = Pattern::meta(MetaVar::Alpha);
  const Pattern b = Pattern::meta(MetaVar::Beta);
  const Pattern c = Pattern::meta(MetaVar::Gamma);
  switch (id) {
    case AxiomId::A0:  // 0 -> a
      return Pattern::implies(Pattern::bottom(), a);
    case AxiomId::A1:  // a -> (b -> a)
      return Pattern::implies(a, Pattern::implies(b, a));
    case AxiomId::A2:  // (a -> b) -> ((b -> c) -> (a -> c))
      return Pattern::implies(
          Pattern::implies(a, b),
          Pattern::implies(Pattern::implies(b, c), Pattern::implies(a, c)));
    case AxiomId::A3:  // ((a -> b) -> b) -> ((b -> a) -> a)
      return Pattern::implies(
          Pattern::implies(Pattern::implies(a, b), b),
          Pattern::implies(Pattern::implies(b, a), a));
    case AxiomId::A4:  // (~a -> ~b) -> (b -> a)
      return Pattern::implies(
          Pattern::implies(Pattern::negate(a), Pattern::negate(b)),
          Pattern::implies(b, a));
  }
  throw std::invalid_argument("unknown axiom id");
}

}  // namespace

const Pattern& axiom_schema(AxiomId id) {
  static const Pattern schemas[5] = {
      build_schema(AxiomId::A0), build_schema(AxiomId::A1), build_schema(AxiomId::A2),
      build_schema(AxiomId::A3), build_schema(AxiomId::A4)};
  return schemas[static_cast<std::size_t>(id)];
}

std::size_t schema_meta_count(AxiomId id) {
  switch (id) {
    case AxiomId::A0:
      return 1;
    case AxiomId::A2:
      return 3;
    default:
      return 2;
  }
}

std::string_view axiom_name(AxiomId id) {
  static constexpr std::string_view names[5] = {"A0", "A1", "A2", "A3", "A4"};
  return names[static_cast<std::size_t>(id)];
}

std::optional<AxiomId> axiom_by_name(std::string_view name) {
  for (AxiomId id : kAllAxioms) {
    if (axiom_name(id) == name) return id;
  }
  return std::nullopt;
}

}  // namespace luk
