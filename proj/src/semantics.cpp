#include "luk/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace luk {

namespace {

// Evaluation against a flat slot table (variable index -> value pointer);
// the inner loop of the grid search avoids per-point map lookups.
Rational eval_slots(const Formula& f, const std::vector<const Rational*>& slots) {
  switch (f.kind()) {
    case FormulaKind::Bottom:
      return Rational(0);
    case FormulaKind::Var: {
      const Rational* v = slots[f.var_index()];
      if (v == nullptr) {
        throw std::invalid_argument("unassigned variable X" + std::to_string(f.var_index()));
      }
      return *v;
    }
    case FormulaKind::Not: {
      Rational r = eval_slots(f.child(), slots);
      return Rational(1 - r);
    }
    case FormulaKind::Implies: {
      Rational a = eval_slots(f.lhs(), slots);
      Rational b = eval_slots(f.rhs(), slots);
      if (a <= b) return Rational(1);
      return Rational(1 - (a - b));  // min{1, 1 - (a - b)}
    }
  }
  throw std::invalid_argument("invalid formula");
}

std::vector<const Rational*> slots_from_assignment(const Formula& f, const Assignment& a) {
  unsigned max_index = 0;
  for (const auto& [index, value] : a) {
    if (!in_unit_interval(value)) {
      throw std::invalid_argument("assignment value for X" + std::to_string(index) +
                                  " outside [0,1]: " + to_string(value));
    }
    max_index = std::max(max_index, index);
  }
  for (unsigned v : variables(f)) max_index = std::max(max_index, v);
  std::vector<const Rational*> slots(static_cast<std::size_t>(max_index) + 1, nullptr);
  for (const auto& [index, value] : a) slots[index] = &value;
  return slots;
}

struct GridSearch {
  std::vector<unsigned> vars;    // sorted variable indices of f
  std::vector<Rational> grid;    // ascending Farey values
  std::uint64_t total = 0;       // grid.size() ^ vars.size()

  GridSearch(const Formula& f, unsigned max_den)
      : vars(variables(f)), grid(farey_sequence(max_den)) {
    total = 1;
    const std::uint64_t m = grid.size();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (total > std::numeric_limits<std::uint64_t>::max() / 4 / m) {
        throw std::invalid_argument("grid search space too large");
      }
      total *= m;
    }
  }

  // Decodes a lexicographic index (first variable most significant) into
  // the slot table. `digits` is reusable scratch.
  void fill_slots(std::uint64_t index, std::vector<std::size_t>& digits,
                  std::vector<const Rational*>& slots) const {
    const std::uint64_t m = grid.size();
    for (std::size_t k = vars.size(); k-- > 0;) {
      digits[k] = static_cast<std::size_t>(index % m);
      index /= m;
    }
    for (std::size_t k = 0; k < vars.size(); ++k) slots[vars[k]] = &grid[digits[k]];
  }

  Counterexample make_result(const Formula& f, std::uint64_t index) const {
    std::vector<std::size_t> digits(vars.size());
    std::vector<const Rational*> slots(vars.empty() ? 1 : vars.back() + 1, nullptr);
    fill_slots(index, digits, slots);
    Assignment a;
    for (std::size_t k = 0; k < vars.size(); ++k) a[vars[k]] = grid[digits[k]];
    return Counterexample{std::move(a), eval_slots(f, slots)};
  }
};

constexpr std::uint64_t kNoHit = std::numeric_limits<std::uint64_t>::max();

}  // namespace

Rational eval(const Formula& f, const Assignment& a) {
  return eval_slots(f, slots_from_assignment(f, a));
}

std::vector<Rational> farey_sequence(unsigned max_den) {
  if (max_den == 0) throw std::invalid_argument("max denominator must be >= 1");
  std::vector<Rational> values;
  for (unsigned q = 1; q <= max_den; ++q) {
    for (unsigned p = 0; p <= q; ++p) {
      if (std::gcd(p, q) == 1) values.emplace_back(p, q);
    }
  }
  std::sort(values.begin(), values.end());
  return values;
}

std::optional<Counterexample> falsify_serial(const Formula& f, unsigned max_den) {
  GridSearch search(f, max_den);
  std::vector<std::size_t> digits(search.vars.size());
  std::vector<const Rational*> slots(search.vars.empty() ? 1 : search.vars.back() + 1, nullptr);
  for (std::uint64_t i = 0; i < search.total; ++i) {
    search.fill_slots(i, digits, slots);
    Rational v = eval_slots(f, slots);
    if (v < 1) return search.make_result(f, i);
  }
  return std::nullopt;
}

std::optional<Counterexample> falsify(const Formula& f, unsigned max_den) {
  GridSearch search(f, max_den);
  const std::uint64_t block = 4096;
  for (std::uint64_t start = 0; start < search.total; start += block) {
    const std::uint64_t end = std::min(search.total, start + block);
    std::uint64_t best = kNoHit;
#pragma omp parallel
    {
      std::vector<std::size_t> digits(search.vars.size());
      std::vector<const Rational*> slots(search.vars.empty() ? 1 : search.vars.back() + 1,
                                         nullptr);
#pragma omp for reduction(min : best) schedule(static)
      for (std::uint64_t i = start; i < end; ++i) {
        search.fill_slots(i, digits, slots);
        Rational v = eval_slots(f, slots);
        if (v < 1 && i < best) best = i;
      }
    }
    // Blocks are scanned in order, so the minimal hit of the first block
    // containing one is the global first hit.
    if (best != kNoHit) return search.make_result(f, best);
  }
  return std::nullopt;
}

}  // namespace luk
