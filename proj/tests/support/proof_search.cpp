#include "proof_search.hpp"

#include <map>
#include <string>

namespace luk::testing {

namespace {

struct Fact {
  Formula formula;
  bool axiom;  // else modus ponens
  AxiomId axiom_id = AxiomId::A0;
  std::size_t premise = 0;      // fact indices
  std::size_t implication = 0;
};

class Search {
 public:
  Search(std::size_t max_facts) : max_facts_(max_facts) {}

  bool known(const Formula& f) const { return by_text_.count(print_formula(f)) > 0; }

  std::size_t index_of(const Formula& f) const { return by_text_.at(print_formula(f)); }

  bool add(Fact fact) {
    std::string key = print_formula(fact.formula);
    if (by_text_.count(key) > 0 || facts_.size() >= max_facts_) return false;
    by_text_.emplace(std::move(key), facts_.size());
    facts_.push_back(std::move(fact));
    return true;
  }

  const std::vector<Fact>& facts() const { return facts_; }

 private:
  std::size_t max_facts_;
  std::vector<Fact> facts_;
  std::map<std::string, std::size_t> by_text_;
};

void seed_axiom_instances(Search& search, const std::vector<Formula>& universe) {
  for (AxiomId id : kAllAxioms) {
    const std::size_t metas = schema_meta_count(id);
    std::vector<std::size_t> pick(metas, 0);
    for (;;) {
      Binding binding;
      for (std::size_t m = 0; m < metas; ++m) binding[m] = universe[pick[m]];
      search.add({substitute(axiom_schema(id), binding), true, id});
      std::size_t k = 0;
      while (k < metas && ++pick[k] == universe.size()) pick[k++] = 0;
      if (k == metas) break;
    }
  }
}

// Emits the dependency cone of `fact` in topological order.
std::size_t emit(const std::vector<Fact>& facts, std::size_t index,
                 std::vector<std::size_t>& order, std::map<std::size_t, std::size_t>& step_of) {
  if (auto it = step_of.find(index); it != step_of.end()) return it->second;
  const Fact& fact = facts[index];
  if (!fact.axiom) {
    emit(facts, fact.premise, order, step_of);
    emit(facts, fact.implication, order, step_of);
  }
  order.push_back(index);
  return step_of[index] = order.size();  // 1-based step numbers
}

}  // namespace

SearchOutcome bfs_prove(const Formula& goal, const std::vector<Formula>& universe,
                        std::size_t max_rounds, std::size_t max_facts) {
  Search search(max_facts);
  seed_axiom_instances(search, universe);

  for (std::size_t round = 0; round < max_rounds && !search.known(goal); ++round) {
    // Scan the snapshot known at round start; conclusions join later rounds.
    const std::size_t snapshot = search.facts().size();
    bool grew = false;
    for (std::size_t j = 0; j < snapshot; ++j) {
      const Formula& implication = search.facts()[j].formula;
      if (implication.kind() != FormulaKind::Implies) continue;
      if (!search.known(implication.lhs())) continue;
      std::size_t i = search.index_of(implication.lhs());
      if (i >= snapshot) continue;
      grew |= search.add({implication.rhs(), false, AxiomId::A0, i, j});
    }
    if (!grew) break;
  }

  SearchOutcome outcome;
  if (!search.known(goal)) return outcome;

  std::vector<std::size_t> order;
  std::map<std::size_t, std::size_t> step_of;
  emit(search.facts(), search.index_of(goal), order, step_of);

  outcome.found = true;
  for (std::size_t index : order) {
    const Fact& fact = search.facts()[index];
    Justification just = fact.axiom
                             ? Justification(AxiomJust{fact.axiom_id})
                             : Justification(MpJust{step_of.at(fact.premise),
                                                    step_of.at(fact.implication)});
    outcome.proof.steps.push_back({fact.formula, just});
  }
  return outcome;
}

}  // namespace luk::testing
