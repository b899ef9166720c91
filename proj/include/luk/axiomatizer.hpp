#pragma once

#include <string>
#include <vector>

#include "luk/formula.hpp"
#include "luk/pwl.hpp"
#include "luk/rational.hpp"

namespace luk {

enum class Move : char { Left = 'L', Right = 'R' };

std::string path_string(const std::vector<Move>& path);

// Unimodular pair left = a/b < right = c/d with b*c - a*d = 1. Mediant
// descent through such pairs realises the continued-fraction expansion of
// any rational strictly between the endpoints.
struct FareyInterval {
  Rational left;
  Rational right;

  bool unimodular() const;
  Rational mediant() const;  // (a+c)/(b+d), already in lowest terms
};

// Descent state: the current interval together with the formulas whose
// McNaughton functions are the Schauder hats at its two endpoints.
struct HatState {
  FareyInterval interval;
  Formula hat_left;
  Formula hat_right;
};

// Formula size (and descent length) grows with the continued-fraction
// coefficients of r; reject denominators beyond the guard rather than
// exhaust memory.
inline constexpr unsigned long kDefaultDenominatorGuard = 1'000'000;

// Mediant-descent path from (0/1, 1/1) whose final mediant equals r.
// Requires 0 < r < 1; length is at most numerator(r) + denominator(r).
std::vector<Move> stern_brocot_path(const Rational& r,
                                    unsigned long guard = kDefaultDenominatorGuard);

// A one-variable formula whose McNaughton function is the Schauder hat at
// r = p/q: peak value 1/q attained only at r, zero outside the final
// Farey interval around r. Endpoints: hat(0) = ~X1, hat(1) = X1.
//
// Construction: descend the Stern-Brocot path keeping HatState, starting
// from hat_left = ~X1, hat_right = X1. At each interval the mediant hat
// is hat_left /\ hat_right; descending left replaces hat_left by
// hat_left (-) mediant-hat and hat_right by the mediant hat; symmetric on
// the right.
Formula schauder_hat(const Rational& r,
                     unsigned long guard = kDefaultDenominatorGuard);

// The single axiom of Theta_r for rational r: q-fold strong disjunction
// hat (+) hat (+) ... (+) hat (right-associated), with the special cases
// axiomatize(0) = ~X1 and axiomatize(1) = X1. Self-verifies that the
// one-set of the result is exactly {r} against the PWL engine and throws
// std::logic_error if that ever fails.
Formula axiomatize(const Rational& r,
                   unsigned long guard = kDefaultDenominatorGuard);

struct AxiomatizeRecord {
  Formula formula;
  Rational r;
  std::vector<Move> path;
  TruthSet one_set;  // always {[r,r]} (verified)
};

AxiomatizeRecord axiomatize_record(const Rational& r,
                                   unsigned long guard = kDefaultDenominatorGuard);

}  // namespace luk
