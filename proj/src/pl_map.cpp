#include "bclab/pl_map.hpp"

#include <algorithm>

#include "bclab/errors.hpp"

namespace bclab {

namespace {

const Dyadic kOne(1);

std::vector<Piece> merged(std::vector<Piece> pieces) {
  std::vector<Piece> out;
  out.reserve(pieces.size());
  for (auto& p : pieces) {
    if (!out.empty() && out.back().slope_exp == p.slope_exp && out.back().offset == p.offset) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::string at(const Dyadic& x) { return "x=" + x.format(); }

}  // namespace

std::vector<Violation> structural_violations(Domain domain, const std::vector<Piece>& pieces) {
  std::vector<Violation> v;
  if (pieces.empty()) {
    v.push_back({"nonempty", "no pieces"});
    return v;
  }
  if (!pieces.front().left.is_zero()) v.push_back({"first breakpoint is 0", at(pieces.front().left)});
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Dyadic& l = pieces[i].left;
    if (l < Dyadic(0) || l >= kOne)
      v.push_back({"breakpoint in [0,1)", "piece " + std::to_string(i) + " " + at(l)});
    if (i + 1 < pieces.size()) {
      const Dyadic& r = pieces[i + 1].left;
      if (r <= l) {
        v.push_back({"breakpoints strictly increasing", "piece " + std::to_string(i + 1) + " " + at(r)});
        continue;
      }
      if (pieces[i].apply(r) != pieces[i + 1].apply(r))
        v.push_back({"continuity", "breakpoint " + at(r)});
    }
  }
  const Dyadic start = pieces.front().apply(Dyadic(0));
  const Dyadic end = pieces.back().apply(kOne);
  if (domain == Domain::Interval) {
    if (start != Dyadic(0)) v.push_back({"f(0) = 0", "f(0)=" + start.format()});
    if (end != kOne) v.push_back({"f(1) = 1", "f(1)=" + end.format()});
  } else {
    if (start < Dyadic(0) || start >= kOne)
      v.push_back({"lift normalized with F(0) in [0,1)", "F(0)=" + start.format()});
    if (end != start + kOne)
      v.push_back({"degree one: F(1) = F(0) + 1", "F(1)=" + end.format()});
  }
  return v;
}

PLMap::PLMap(Domain domain, std::vector<Piece> pieces) : domain_(domain), pieces_(std::move(pieces)) {
  images_.reserve(pieces_.size());
  for (const auto& p : pieces_) images_.push_back(p.apply(p.left));
}

PLMap PLMap::identity(Domain domain) { return PLMap(domain, {Piece{Dyadic(0), 0, Dyadic(0)}}); }

PLMap PLMap::rotation(const Dyadic& a) {
  return PLMap(Domain::Circle, {Piece{Dyadic(0), 0, mod1(a).rep()}});
}

PLMap PLMap::from_pieces(Domain domain, std::vector<Piece> pieces) {
  auto v = structural_violations(domain, pieces);
  if (!v.empty()) throw PreconditionError("invalid PL map: " + v.front().condition + " fails at " + v.front().location);
  return PLMap(domain, merged(std::move(pieces)));
}

PLMap PLMap::build(Domain domain, std::vector<Dyadic> breakpoints,
                   const std::function<Dyadic(const Dyadic&)>& value_at,
                   const std::function<long(const Dyadic&)>& slope_inside) {
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
  std::vector<Piece> pieces;
  pieces.reserve(breakpoints.size());
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const Dyadic& l = breakpoints[i];
    const Dyadic r = i + 1 < breakpoints.size() ? breakpoints[i + 1] : kOne;
    long s = slope_inside(midpoint(l, r));
    pieces.push_back(Piece{l, s, value_at(l) - l.mul_pow2(s)});
  }
  if (domain == Domain::Circle && !pieces.empty()) {
    Dyadic shift(pieces.front().offset.floor());
    for (auto& p : pieces) p.offset -= shift;
  }
  return from_pieces(domain, std::move(pieces));
}

std::size_t PLMap::piece_index(const Dyadic& x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Dyadic& v, const Piece& p) { return v < p.left; });
  return static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

std::size_t PLMap::image_index(const Dyadic& y) const {
  auto it = std::upper_bound(images_.begin(), images_.end(), y);
  return static_cast<std::size_t>(it - images_.begin()) - 1;
}

Dyadic PLMap::lift(const Dyadic& x) const {
  if (domain_ == Domain::Interval) {
    if (x < Dyadic(0) || x > kOne) throw PreconditionError("point " + x.format() + " outside [0,1]");
    return pieces_[piece_index(x)].apply(x);
  }
  Dyadic k(x.floor());
  Dyadic r = x - k;
  return pieces_[piece_index(r)].apply(r) + k;
}

long PLMap::slope_exp_at(const Dyadic& x) const {
  if (domain_ == Domain::Interval) {
    if (x < Dyadic(0) || x > kOne) throw PreconditionError("point " + x.format() + " outside [0,1]");
    return pieces_[piece_index(x)].slope_exp;
  }
  Dyadic r = x - Dyadic(x.floor());
  return pieces_[piece_index(r)].slope_exp;
}

Dyadic PLMap::lift_inverse(const Dyadic& y) const {
  if (domain_ == Domain::Interval) {
    if (y < Dyadic(0) || y > kOne) throw PreconditionError("point " + y.format() + " outside [0,1]");
    const Piece& p = pieces_[image_index(y)];
    return (y - p.offset).mul_pow2(-p.slope_exp);
  }
  Dyadic k((y - images_.front()).floor());
  Dyadic r = y - k;
  const Piece& p = pieces_[image_index(r)];
  return (r - p.offset).mul_pow2(-p.slope_exp) + k;
}

Dyadic PLMap::operator()(const Dyadic& x) const {
  if (domain_ == Domain::Circle) return mod1(lift(x)).rep();
  return lift(x);
}

CirclePoint PLMap::operator()(const CirclePoint& x) const { return mod1(lift(x.rep())); }

bool PLMap::is_identity() const {
  return pieces_.size() == 1 && pieces_[0].slope_exp == 0 && pieces_[0].offset.is_zero();
}

PLMap compose(const PLMap& f, const PLMap& g) {
  if (f.domain() != g.domain()) throw PreconditionError("compose: domain kinds differ");
  std::vector<Dyadic> breaks;
  for (const auto& p : g.pieces()) breaks.push_back(p.left);
  const Dyadic lo = g.lift(Dyadic(0));
  const Dyadic hi = g.lift(kOne);
  for (const auto& p : f.pieces()) {
    for (int shift = 0; shift <= (f.domain() == Domain::Circle ? 2 : 0); ++shift) {
      Dyadic b = p.left + Dyadic(shift);
      if (b > lo && b < hi) breaks.push_back(g.lift_inverse(b));
    }
  }
  return PLMap::build(
      f.domain(), std::move(breaks), [&](const Dyadic& x) { return f.lift(g.lift(x)); },
      [&](const Dyadic& m) { return g.slope_exp_at(m) + f.slope_exp_at(g.lift(m)); });
}

PLMap invert(const PLMap& f) {
  std::vector<Dyadic> breaks{Dyadic(0)};
  for (const auto& p : f.pieces()) {
    Dyadic y = f.lift(p.left);
    breaks.push_back(f.domain() == Domain::Circle ? mod1(y).rep() : y);
  }
  return PLMap::build(
      f.domain(), std::move(breaks), [&](const Dyadic& y) { return f.lift_inverse(y); },
      [&](const Dyadic& m) { return -f.slope_exp_at(f.lift_inverse(m)); });
}

PLMap commutator(const PLMap& f, const PLMap& g) {
  return compose(invert(f), compose(invert(g), compose(f, g)));
}

MembershipReport check_membership(Domain domain, const std::vector<Piece>& pieces, ThompsonGroup group) {
  MembershipReport report;
  report.violations = structural_violations(domain, pieces);
  if (report.violations.empty() && group == ThompsonGroup::F && domain == Domain::Circle) {
    // A circle map lies in F exactly when it fixes 0, i.e. it is a stabilizer element.
    const Dyadic start = pieces.front().apply(Dyadic(0));
    if (!start.is_zero()) report.violations.push_back({"fixes 0 (interval homeomorphism)", "F(0)=" + start.format()});
  }
  report.member = report.violations.empty();
  return report;
}

MembershipReport check_membership(const PLMap& f, ThompsonGroup group) {
  return check_membership(f.domain(), f.pieces(), group);
}

long germ(const PLMap& f, End end) {
  auto report = check_membership(f, ThompsonGroup::F);
  if (!report.member) throw PreconditionError("germ: map is not in F");
  return end == End::Zero ? f.pieces().front().slope_exp : f.pieces().back().slope_exp;
}

std::vector<OpenInterval> support(const PLMap& f) {
  struct Closed {
    mpq_class lo, hi;
  };
  std::vector<Closed> fixed;
  const auto& ps = f.pieces();
  std::vector<long> targets{0};
  if (f.domain() == Domain::Circle) targets = {-1, 0, 1};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    mpq_class l = ps[i].left.to_rational();
    mpq_class r = i + 1 < ps.size() ? ps[i + 1].left.to_rational() : mpq_class(1);
    mpq_class o = ps[i].offset.to_rational();
    mpq_class slope = Dyadic::pow2(ps[i].slope_exp).to_rational();
    for (long n : targets) {
      // Solve slope*x + o - x = n on [l, r].
      if (ps[i].slope_exp == 0) {
        if (o == n) fixed.push_back({l, r});
        continue;
      }
      mpq_class x = (mpq_class(n) - o) / (slope - 1);
      if (x >= l && x <= r) fixed.push_back({x, x});
    }
  }
  std::sort(fixed.begin(), fixed.end(), [](const Closed& a, const Closed& b) { return a.lo < b.lo; });
  std::vector<OpenInterval> out;
  mpq_class cursor = 0;
  bool started = false;
  for (const auto& c : fixed) {
    if (!started) {
      if (c.lo > 0) out.push_back({mpq_class(0), c.lo});
      cursor = c.hi;
      started = true;
      continue;
    }
    if (c.lo > cursor) out.push_back({cursor, c.lo});
    if (c.hi > cursor) cursor = c.hi;
  }
  if (!started) return {{mpq_class(0), mpq_class(1)}};
  if (cursor < 1) out.push_back({cursor, mpq_class(1)});
  return out;
}

}  // namespace bclab
