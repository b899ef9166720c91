#pragma once

#include <random>
#include <vector>

#include "luk/formula.hpp"
#include "luk/pwl.hpp"
#include "luk/rational.hpp"

namespace luk::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, unsigned max_den) {
  std::uniform_int_distribution<unsigned> den_dist(1, max_den);
  unsigned q = den_dist(rng);
  std::uniform_int_distribution<unsigned> num_dist(0, q);
  Rational r(num_dist(rng), q);
  r.canonicalize();
  return r;
}

// Random formula over the given variables, drawn across the whole
// connective set (derived connectives desugar on construction), with the
// stated pre-desugaring depth bound.
inline Formula random_formula(Rng& rng, const std::vector<unsigned>& vars,
                              unsigned max_depth) {
  std::uniform_int_distribution<int> leaf_dist(0, static_cast<int>(vars.size()) + 1);
  auto leaf = [&] {
    int pick = leaf_dist(rng);
    if (pick == 0) return Formula::bottom();
    if (pick == 1) return expand(Connective::Verum);
    return Formula::var(vars[static_cast<std::size_t>(pick - 2)]);
  };
  if (max_depth == 0) return leaf();
  std::uniform_int_distribution<int> node_dist(0, 9);
  switch (node_dist(rng)) {
    case 0:
    case 1:
    case 2:
      return leaf();
    case 3:
      return Formula::negate(random_formula(rng, vars, max_depth - 1));
    case 4:
      return Formula::implies(random_formula(rng, vars, max_depth - 1),
                              random_formula(rng, vars, max_depth - 1));
    case 5:
      return expand(Connective::And, random_formula(rng, vars, max_depth - 1),
                    random_formula(rng, vars, max_depth - 1));
    case 6:
      return expand(Connective::Or, random_formula(rng, vars, max_depth - 1),
                    random_formula(rng, vars, max_depth - 1));
    case 7:
      return expand(Connective::Oplus, random_formula(rng, vars, max_depth - 1),
                    random_formula(rng, vars, max_depth - 1));
    case 8:
      return expand(Connective::Odot, random_formula(rng, vars, max_depth - 1),
                    random_formula(rng, vars, max_depth - 1));
    default:
      return expand(Connective::Ominus, random_formula(rng, vars, max_depth - 1),
                    random_formula(rng, vars, max_depth - 1));
  }
}

// Disjoint closed intervals with denominator-bounded endpoints; may
// include degenerate points.
inline TruthSet random_truth_set(Rng& rng, unsigned max_den, unsigned max_intervals) {
  std::uniform_int_distribution<unsigned> count_dist(0, max_intervals);
  unsigned n = count_dist(rng);
  std::vector<Rational> cuts;
  for (unsigned i = 0; i < 2 * n; ++i) cuts.push_back(random_rational(rng, max_den));
  std::sort(cuts.begin(), cuts.end());
  std::vector<TruthSet::Interval> intervals;
  for (unsigned i = 0; i + 1 < 2 * n; i += 2) intervals.push_back({cuts[i], cuts[i + 1]});
  return TruthSet::from_intervals(std::move(intervals));
}

}  // namespace luk::testing
