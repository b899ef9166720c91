#pragma once

#include <vector>

#include "luk/formula.hpp"
#include "luk/pwl.hpp"
#include "luk/rational.hpp"

namespace luk {

// Membership in Theta_r: f holds in the one world sending X1 to r,
// i.e. the McNaughton function of f is 1 at r. One-variable f; r in [0,1].
bool member_theta_r(const Formula& f, const Rational& r);

// Membership in Theta_T: f holds in every world sending X1 into T,
// i.e. one_set(f) contains T.
bool member_theta_T(const Formula& f, const TruthSet& T);

// Worlds consistent with every premise: the intersection of the premises'
// one-sets; [0,1] for an empty premise list. One-variable premises.
TruthSet admissible_worlds(const std::vector<Formula>& premises);

// Semantic consequence in the one-variable fragment: every world
// satisfying all premises satisfies f.
bool consequence_1(const std::vector<Formula>& premises, const Formula& f);

// A formula in Theta_r but not in Theta_s (witness that the two theories
// differ). Requires r != s, both in [0,1].
Formula separating_formula(const Rational& r, const Rational& s);

}  // namespace luk
