#include "luk/axiomatizer.hpp"

#include <stdexcept>
#include <utility>

namespace luk {

std::string path_string(const std::vector<Move>& path) {
  std::string s;
  s.reserve(path.size());
  for (Move m : path) s.push_back(static_cast<char>(m));
  return s;
}

bool FareyInterval::unimodular() const {
  // left = a/b, right = c/d: require b*c - a*d == 1 (implies left < right).
  mpz_class det(left.get_den() * right.get_num() - left.get_num() * right.get_den());
  return det == 1;
}

Rational FareyInterval::mediant() const {
  Rational m(left.get_num() + right.get_num(), left.get_den() + right.get_den());
  m.canonicalize();  // already in lowest terms for unimodular pairs
  return m;
}

namespace {

void check_input(const Rational& r, unsigned long guard) {
  if (!in_unit_interval(r)) {
    throw std::invalid_argument("value outside [0,1]: " + to_string(r));
  }
  if (r.get_den() > guard) {
    throw std::invalid_argument("denominator of " + to_string(r) +
                                " exceeds the guard (" + std::to_string(guard) + ")");
  }
}

FareyInterval root_interval() { return {Rational(0), Rational(1)}; }

}  // namespace

std::vector<Move> stern_brocot_path(const Rational& r, unsigned long guard) {
  check_input(r, guard);
  if (r == 0 || r == 1) {
    throw std::invalid_argument("endpoints have no mediant-descent path");
  }
  std::vector<Move> path;
  FareyInterval interval = root_interval();
  for (;;) {
    Rational m = interval.mediant();
    if (m == r) return path;
    if (r < m) {
      path.push_back(Move::Left);
      interval.right = std::move(m);
    } else {
      path.push_back(Move::Right);
      interval.left = std::move(m);
    }
  }
}

Formula schauder_hat(const Rational& r, unsigned long guard) {
  check_input(r, guard);
  const Formula x1 = Formula::var(1);
  if (r == 0) return Formula::negate(x1);
  if (r == 1) return x1;

  HatState state{root_interval(), Formula::negate(x1), x1};
  for (;;) {
    Rational m = state.interval.mediant();
    Formula mediant_hat = expand(Connective::And, state.hat_left, state.hat_right);
    if (m == r) return mediant_hat;
    if (r < m) {
      state.hat_left = expand(Connective::Ominus, state.hat_left, mediant_hat);
      state.hat_right = std::move(mediant_hat);
      state.interval.right = std::move(m);
    } else {
      state.hat_right = expand(Connective::Ominus, state.hat_right, mediant_hat);
      state.hat_left = std::move(mediant_hat);
      state.interval.left = std::move(m);
    }
  }
}

Formula axiomatize(const Rational& r, unsigned long guard) {
  return axiomatize_record(r, guard).formula;
}

AxiomatizeRecord axiomatize_record(const Rational& r, unsigned long guard) {
  check_input(r, guard);
  AxiomatizeRecord record;
  record.r = r;
  if (r == 0) {
    record.formula = Formula::negate(Formula::var(1));
  } else if (r == 1) {
    record.formula = Formula::var(1);
  } else {
    record.path = stern_brocot_path(r, guard);
    Formula hat = schauder_hat(r, guard);
    // q-fold strong disjunction of the hat, right-associated: the hat
    // peaks at exactly 1/q, so min{1, q*hat} is 1 only at r.
    unsigned long q = record.r.get_den().get_ui();
    Formula folded = hat;
    for (unsigned long i = 1; i < q; ++i) {
      folded = expand(Connective::Oplus, hat, folded);
    }
    record.formula = std::move(folded);
  }
  record.one_set = one_set(from_formula(record.formula));
  if (record.one_set != TruthSet::point(r)) {
    throw std::logic_error("axiomatizer self-verification failed for r = " + to_string(r) +
                           ": one-set is " + record.one_set.to_text());
  }
  return record;
}

}  // namespace luk
