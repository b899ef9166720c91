#pragma once

#include <map>
#include <optional>
#include <vector>

#include "luk/formula.hpp"
#include "luk/rational.hpp"

namespace luk {

// Variable index -> truth value in [0,1].
using Assignment = std::map<unsigned, Rational>;

// The compositional [0,1]-valued extension of an atomic assignment:
//   w(0) = 0,  w(~a) = 1 - w(a),  w(a -> b) = min{1, 1 - (w(a) - w(b))}.
// Exact. Throws std::invalid_argument on an unassigned variable or an
// assignment value outside [0,1].
Rational eval(const Formula& f, const Assignment& a);

// All rationals in [0,1] with denominator <= max_den, in lowest terms,
// ascending (the Farey sequence of order max_den). max_den >= 1.
std::vector<Rational> farey_sequence(unsigned max_den);

struct Counterexample {
  Assignment assignment;
  Rational value;  // eval(f, assignment), strictly below 1
};

// First assignment in grid order at which f evaluates below 1, if any.
// Each variable runs over farey_sequence(max_den) in ascending value;
// assignments are ordered lexicographically with variables in index
// order. Absence is exhaustive over the grid but is not a tautology
// certificate for formulas with two or more variables.
//
// falsify() scans grid blocks with OpenMP and reduces to the minimal hit
// index, so it returns exactly what the serial reference returns.
std::optional<Counterexample> falsify(const Formula& f, unsigned max_den);
std::optional<Counterexample> falsify_serial(const Formula& f, unsigned max_den);

}  // namespace luk
