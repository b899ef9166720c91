#include "luk/pwl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace luk {

namespace {

// Drops every interior point that is collinear with its neighbours.
// Collinearity of (a,b,c): (b.y-a.y)*(c.x-b.x) == (c.y-b.y)*(b.x-a.x).
std::vector<PwlPoint> canonicalize(std::vector<PwlPoint> pts) {
  std::vector<PwlPoint> out;
  out.reserve(pts.size());
  for (auto& p : pts) {
    while (out.size() >= 2) {
      const PwlPoint& a = out[out.size() - 2];
      const PwlPoint& b = out.back();
      Rational lhs((b.y - a.y) * (p.x - b.x));
      Rational rhs((p.y - b.y) * (b.x - a.x));
      if (lhs == rhs) {
        out.pop_back();
      } else {
        break;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

Rational interpolate(const PwlPoint& a, const PwlPoint& b, const Rational& x) {
  if (x == a.x) return a.y;
  if (x == b.x) return b.y;
  return Rational(a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x));
}

}  // namespace

PwlFunction PwlFunction::constant(const Rational& c) {
  return from_points({{Rational(0), c}, {Rational(1), c}});
}

PwlFunction PwlFunction::identity() {
  return from_points({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
}

PwlFunction PwlFunction::from_points(std::vector<PwlPoint> pts) {
  if (pts.size() < 2) throw std::invalid_argument("need at least the two endpoint breakpoints");
  if (pts.front().x != 0 || pts.back().x != 1) {
    throw std::invalid_argument("breakpoints must span [0,1]");
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i].x < pts[i + 1].x)) {
      throw std::invalid_argument("breakpoint x-coordinates must strictly increase");
    }
  }
  for (const auto& p : pts) {
    if (!in_unit_interval(p.y)) throw std::invalid_argument("breakpoint value outside [0,1]");
  }
  PwlFunction g;
  g.pts_ = canonicalize(std::move(pts));
  return g;
}

std::string PwlFunction::to_json() const {
  std::ostringstream out;
  out << "{\"breakpoints\":[";
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (i > 0) out << ',';
    out << "[\"" << to_string(pts_[i].x) << "\",\"" << to_string(pts_[i].y) << "\"]";
  }
  out << "]}";
  return out.str();
}

std::string PwlFunction::to_csv() const {
  std::ostringstream out;
  for (const auto& p : pts_) out << to_string(p.x) << ',' << to_string(p.y) << '\n';
  return out.str();
}

namespace {

Rational apply_op(PwlOp op, const Rational& a, const Rational& b) {
  switch (op) {
    case PwlOp::Neg:
      return Rational(1 - a);
    case PwlOp::Implies:
      return a <= b ? Rational(1) : Rational(1 - (a - b));
    case PwlOp::Min:
      return std::min(a, b);
    case PwlOp::Max:
      return std::max(a, b);
    case PwlOp::Oplus: {
      Rational s(a + b);
      return s >= 1 ? Rational(1) : s;
    }
    case PwlOp::Odot: {
      Rational s(a + b - 1);
      return s <= 0 ? Rational(0) : s;
    }
    case PwlOp::Ominus: {
      Rational d(a - b);
      return d <= 0 ? Rational(0) : d;
    }
  }
  throw std::invalid_argument("unknown op");
}

// The clamp boundary each binary op can hit, expressed as a linear
// combination of the operand values: where that expression crosses the
// target, the combined function changes linear piece.
struct CrossingExpr {
  int coeff_b;     // expression is a + coeff_b * b
  Rational target;
};

CrossingExpr crossing_expr(PwlOp op) {
  switch (op) {
    case PwlOp::Min:
    case PwlOp::Max:
    case PwlOp::Ominus:
    case PwlOp::Implies:
      return {-1, Rational(0)};  // a - b crosses 0
    case PwlOp::Oplus:
    case PwlOp::Odot:
      return {+1, Rational(1)};  // a + b crosses 1
    default:
      throw std::invalid_argument("not a binary op");
  }
}

}  // namespace

PwlFunction combine(PwlOp op, const PwlFunction& g) {
  if (op != PwlOp::Neg) throw std::invalid_argument("binary op needs two operands");
  std::vector<PwlPoint> pts;
  pts.reserve(g.points().size());
  for (const auto& p : g.points()) pts.push_back({p.x, Rational(1 - p.y)});
  return PwlFunction::from_points(std::move(pts));
}

PwlFunction combine(PwlOp op, const PwlFunction& g, const PwlFunction& h) {
  if (op == PwlOp::Neg) throw std::invalid_argument("negation is unary");

  // Merged breakpoint grid of both operands.
  std::vector<Rational> xs;
  xs.reserve(g.points().size() + h.points().size());
  {
    std::size_t i = 0, j = 0;
    const auto& gp = g.points();
    const auto& hp = h.points();
    while (i < gp.size() || j < hp.size()) {
      if (j == hp.size() || (i < gp.size() && gp[i].x < hp[j].x)) {
        xs.push_back(gp[i++].x);
      } else if (i == gp.size() || hp[j].x < gp[i].x) {
        xs.push_back(hp[j++].x);
      } else {
        xs.push_back(gp[i].x);
        ++i;
        ++j;
      }
    }
  }

  const CrossingExpr expr = crossing_expr(op);
  auto expr_at = [&](const Rational& a, const Rational& b) -> Rational {
    return a + expr.coeff_b * b - expr.target;
  };

  // Refine with the points where the pre-clamp expression crosses the
  // boundary strictly inside a segment; on each side the result is linear.
  std::vector<Rational> refined;
  refined.reserve(xs.size() * 2);
  Rational ga = eval_at(g, xs[0]);
  Rational ha = eval_at(h, xs[0]);
  refined.push_back(xs[0]);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    Rational gb = eval_at(g, xs[i + 1]);
    Rational hb = eval_at(h, xs[i + 1]);
    Rational ea = expr_at(ga, ha);
    Rational eb = expr_at(gb, hb);
    if ((ea < 0 && eb > 0) || (ea > 0 && eb < 0)) {
      // Linear in x: crossing at x_i + (-ea) * (x_{i+1} - x_i) / (eb - ea).
      Rational cross(xs[i] + (-ea) * (xs[i + 1] - xs[i]) / (eb - ea));
      refined.push_back(cross);
    }
    refined.push_back(xs[i + 1]);
    ga = gb;
    ha = hb;
  }

  std::vector<PwlPoint> pts;
  pts.reserve(refined.size());
  for (const auto& x : refined) {
    pts.push_back({x, apply_op(op, eval_at(g, x), eval_at(h, x))});
  }
  return PwlFunction::from_points(std::move(pts));
}

PwlFunction from_formula(const Formula& f) {
  for (unsigned v : variables(f)) {
    if (v != 1) {
      throw std::invalid_argument("formula mentions X" + std::to_string(v) +
                                  "; only X1 is allowed");
    }
  }
  // Iterative post-order walk, memoised per shared node: formulas built by
  // the axiomatizer are DAGs whose tree expansion would be exponential.
  std::unordered_map<const void*, PwlFunction> memo;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    const Formula cur = stack.back();
    if (memo.count(cur.node_id()) > 0) {
      stack.pop_back();
      continue;
    }
    bool ready = true;
    auto require = [&](const Formula& sub) {
      if (memo.count(sub.node_id()) == 0) {
        stack.push_back(sub);
        ready = false;
      }
    };
    switch (cur.kind()) {
      case FormulaKind::Bottom:
        memo.emplace(cur.node_id(), PwlFunction::constant(Rational(0)));
        break;
      case FormulaKind::Var:
        memo.emplace(cur.node_id(), PwlFunction::identity());
        break;
      case FormulaKind::Not:
        require(cur.child());
        if (ready) {
          memo.emplace(cur.node_id(), combine(PwlOp::Neg, memo.at(cur.child().node_id())));
        }
        break;
      case FormulaKind::Implies:
        require(cur.lhs());
        require(cur.rhs());
        if (ready) {
          memo.emplace(cur.node_id(), combine(PwlOp::Implies, memo.at(cur.lhs().node_id()),
                                              memo.at(cur.rhs().node_id())));
        }
        break;
    }
    if (ready) stack.pop_back();
  }
  return memo.at(f.node_id());
}

Rational eval_at(const PwlFunction& g, const Rational& x) {
  if (!in_unit_interval(x)) {
    throw std::invalid_argument("point outside [0,1]: " + to_string(x));
  }
  const auto& pts = g.points();
  // Last breakpoint with pts[i].x <= x.
  std::size_t lo = 0, hi = pts.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (pts[mid].x <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (pts[lo].x == x) return pts[lo].y;
  return interpolate(pts[lo], pts[lo + 1], x);
}

Rational minimum(const PwlFunction& g) { return minimum_point(g).y; }

PwlPoint minimum_point(const PwlFunction& g) {
  const auto& pts = g.points();
  std::size_t best = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].y < pts[best].y) best = i;
  }
  return pts[best];
}

TruthSet one_set(const PwlFunction& g) {
  const auto& pts = g.points();
  std::vector<TruthSet::Interval> intervals;
  std::size_t i = 0;
  while (i < pts.size()) {
    if (pts[i].y != 1) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < pts.size() && pts[j + 1].y == 1) ++j;
    intervals.push_back({pts[i].x, pts[j].x});
    i = j + 1;
  }
  return TruthSet::from_intervals(std::move(intervals));
}

TruthSet TruthSet::empty() { return TruthSet(); }

TruthSet TruthSet::full() { return interval(Rational(0), Rational(1)); }

TruthSet TruthSet::point(const Rational& r) { return interval(r, r); }

TruthSet TruthSet::interval(const Rational& lo, const Rational& hi) {
  return from_intervals({{lo, hi}});
}

TruthSet TruthSet::from_intervals(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) {
    if (iv.lo > iv.hi) throw std::invalid_argument("interval with lo > hi");
    if (!in_unit_interval(iv.lo) || !in_unit_interval(iv.hi)) {
      throw std::invalid_argument("interval leaves [0,1]");
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<Interval> merged;
  for (auto& iv : intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      if (iv.hi > merged.back().hi) merged.back().hi = std::move(iv.hi);
    } else {
      merged.push_back(std::move(iv));
    }
  }
  TruthSet t;
  t.intervals_ = std::move(merged);
  return t;
}

TruthSet TruthSet::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed truth set \"" + std::string(text) + "\": " + why);
  };
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty() || compact == "[]") return TruthSet();
  std::vector<Interval> intervals;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    if (compact[pos] != '[') fail("expected '['");
    std::size_t close = compact.find(']', pos);
    if (close == std::string::npos) fail("missing ']'");
    std::string_view body(compact.data() + pos + 1, close - pos - 1);
    std::size_t comma = body.find(',');
    if (comma == std::string_view::npos) fail("expected \"lo,hi\"");
    intervals.push_back(
        {parse_rational(body.substr(0, comma)), parse_rational(body.substr(comma + 1))});
    pos = close + 1;
    if (pos < compact.size()) {
      if (compact[pos] != '+') fail("expected '+' between intervals");
      ++pos;
      if (pos == compact.size()) fail("trailing '+'");
    }
  }
  return from_intervals(std::move(intervals));
}

bool TruthSet::contains_point(const Rational& r) const {
  for (const auto& iv : intervals_) {
    if (r < iv.lo) return false;
    if (r <= iv.hi) return true;
  }
  return false;
}

bool TruthSet::contains(const TruthSet& other) const {
  std::size_t i = 0;
  for (const auto& o : other.intervals_) {
    while (i < intervals_.size() && intervals_[i].hi < o.lo) ++i;
    if (i == intervals_.size() || intervals_[i].lo > o.lo || o.hi > intervals_[i].hi) {
      return false;
    }
  }
  return true;
}

TruthSet TruthSet::intersect(const TruthSet& other) const {
  std::vector<Interval> result;
  std::size_t i = 0, j = 0;
  while (i < intervals_.size() && j < other.intervals_.size()) {
    const Interval& a = intervals_[i];
    const Interval& b = other.intervals_[j];
    Rational lo = std::max(a.lo, b.lo);
    Rational hi = std::min(a.hi, b.hi);
    if (lo <= hi) result.push_back({std::move(lo), std::move(hi)});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return from_intervals(std::move(result));
}

std::string TruthSet::to_json() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i > 0) out << ',';
    out << "[\"" << to_string(intervals_[i].lo) << "\",\"" << to_string(intervals_[i].hi)
        << "\"]";
  }
  out << ']';
  return out.str();
}

std::string TruthSet::to_text() const {
  if (intervals_.empty()) return "[]";
  std::ostringstream out;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i > 0) out << '+';
    out << '[' << to_string(intervals_[i].lo) << ',' << to_string(intervals_[i].hi) << ']';
  }
  return out.str();
}

}  // namespace luk
