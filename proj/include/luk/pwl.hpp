#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "luk/formula.hpp"
#include "luk/rational.hpp"

namespace luk {

struct PwlPoint {
  Rational x;
  Rational y;
  bool operator==(const PwlPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const PwlPoint& o) const { return !(*this == o); }
};

// Continuous piecewise-linear function [0,1] -> [0,1] with rational
// breakpoints, linear between consecutive ones. Canonical form: the first
// breakpoint is at x=0, the last at x=1, x strictly increasing, and no
// interior breakpoint is collinear with its neighbours. Functions of
// one-variable formulas additionally have integer slope and intercept on
// every segment (McNaughton integrality); that is a consequence of the
// construction, checked by tests, not enforced here.
class PwlFunction {
 public:
  static PwlFunction constant(const Rational& c);
  static PwlFunction identity();

  // Validates (x strictly increasing from 0 to 1, all y in [0,1]) and
  // canonicalises. Throws std::invalid_argument on malformed input.
  static PwlFunction from_points(std::vector<PwlPoint> pts);

  const std::vector<PwlPoint>& points() const { return pts_; }

  // Pointwise equality; canonical forms are identical iff the functions
  // agree everywhere.
  bool operator==(const PwlFunction& o) const { return pts_ == o.pts_; }
  bool operator!=(const PwlFunction& o) const { return !(*this == o); }

  std::string to_json() const;  // {"breakpoints":[["x","y"],...]}
  std::string to_csv() const;   // one "x,y" row per breakpoint

 private:
  PwlFunction() = default;
  std::vector<PwlPoint> pts_;
};

// Pointwise semantics of the connectives on functions:
//   Neg:     1 - g
//   Implies: min{1, 1 - (g - h)}
//   Min/Max: lattice conjunction / disjunction
//   Oplus:   min{1, g + h}
//   Odot:    max{0, g + h - 1}
//   Ominus:  max{0, g - h}
enum class PwlOp : std::uint8_t { Neg, Implies, Min, Max, Oplus, Odot, Ominus };

PwlFunction combine(PwlOp op, const PwlFunction& g);                        // Neg only
PwlFunction combine(PwlOp op, const PwlFunction& g, const PwlFunction& h);  // binary ops

// The McNaughton function of a one-variable formula: the canonical g with
// g(x) = eval(f, {X1 -> x}) on all of [0,1]. Throws if f mentions any
// variable other than X1.
PwlFunction from_formula(const Formula& f);

// Exact linear interpolation; x must lie in [0,1].
Rational eval_at(const PwlFunction& g, const Rational& x);

// The minimum of a PWL function is attained at a breakpoint.
Rational minimum(const PwlFunction& g);
// First breakpoint attaining the minimum (deterministic witness).
PwlPoint minimum_point(const PwlFunction& g);

// Finite union of disjoint closed rational intervals within [0,1]
// (degenerate points allowed), sorted and maximal: touching intervals are
// merged on construction.
class TruthSet {
 public:
  struct Interval {
    Rational lo;
    Rational hi;
    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
  };

  TruthSet() = default;  // empty set

  static TruthSet empty();
  static TruthSet full();  // [0,1]
  static TruthSet point(const Rational& r);
  static TruthSet interval(const Rational& lo, const Rational& hi);
  // Normalises arbitrary input intervals (sorts, merges overlap/touch).
  // Throws std::invalid_argument if some interval has lo > hi or leaves [0,1].
  static TruthSet from_intervals(std::vector<Interval> intervals);

  // ASCII literal: "[a,b]+[c,d]+..." with rational endpoints; "[]" or the
  // empty string denotes the empty set.
  static TruthSet parse(std::string_view text);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool is_empty() const { return intervals_.empty(); }
  bool contains_point(const Rational& r) const;
  bool contains(const TruthSet& other) const;  // this superset-of other
  TruthSet intersect(const TruthSet& other) const;

  bool operator==(const TruthSet& o) const { return intervals_ == o.intervals_; }
  bool operator!=(const TruthSet& o) const { return !(*this == o); }

  std::string to_json() const;  // [["lo","hi"],...]
  std::string to_text() const;  // the ASCII literal form

 private:
  std::vector<Interval> intervals_;
};

// {x : g(x) = 1}, exact. Closed by continuity; every endpoint is a
// breakpoint of g.
TruthSet one_set(const PwlFunction& g);

}  // namespace luk
