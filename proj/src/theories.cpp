#include "luk/theories.hpp"

#include <stdexcept>

#include "luk/axiomatizer.hpp"

namespace luk {

bool member_theta_r(const Formula& f, const Rational& r) {
  if (!in_unit_interval(r)) {
    throw std::invalid_argument("truth value outside [0,1]: " + to_string(r));
  }
  return eval_at(from_formula(f), r) == 1;
}

bool member_theta_T(const Formula& f, const TruthSet& T) {
  return one_set(from_formula(f)).contains(T);
}

TruthSet admissible_worlds(const std::vector<Formula>& premises) {
  TruthSet worlds = TruthSet::full();
  for (const Formula& premise : premises) {
    worlds = worlds.intersect(one_set(from_formula(premise)));
  }
  return worlds;
}

bool consequence_1(const std::vector<Formula>& premises, const Formula& f) {
  return one_set(from_formula(f)).contains(admissible_worlds(premises));
}

Formula separating_formula(const Rational& r, const Rational& s) {
  if (!in_unit_interval(r) || !in_unit_interval(s)) {
    throw std::invalid_argument("truth values must lie in [0,1]");
  }
  if (r == s) throw std::invalid_argument("r and s must differ");
  // axiomatize(r) holds exactly at r, so it separates r from any s != r.
  return axiomatize(r);
}

}  // namespace luk
