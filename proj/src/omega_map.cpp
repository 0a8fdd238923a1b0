#include "bclab/omega_map.hpp"

#include <algorithm>

#include "bclab/errors.hpp"

namespace bclab {

namespace {

const Dyadic kOne(1);

// Pieces cover [0, end); breakpoints sorted with 0 included.
std::vector<Piece> pieces_from(std::vector<Dyadic> breaks, const Dyadic& end,
                               const std::function<Dyadic(const Dyadic&)>& value_at,
                               const std::function<long(const Dyadic&)>& slope_inside) {
  breaks.push_back(Dyadic(0));
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  while (!breaks.empty() && breaks.back() >= end) breaks.pop_back();
  std::vector<Piece> out;
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    const Dyadic& l = breaks[i];
    const Dyadic r = i + 1 < breaks.size() ? breaks[i + 1] : end;
    long s = slope_inside(midpoint(l, r));
    Piece p{l, s, value_at(l) - l.mul_pow2(s)};
    if (!out.empty() && out.back().slope_exp == p.slope_exp && out.back().offset == p.offset) continue;
    out.push_back(std::move(p));
  }
  return out;
}

// Effective end of the exactly known prefix, counting a fully known map as known on [0,1].
Dyadic known_limit(const OmegaPLMap& f) { return f.fully_known() ? kOne : f.known_end(); }

}  // namespace

OmegaPLMap OmegaPLMap::identity() { return from_pieces({}, Dyadic(0), Dyadic(0), 0); }

OmegaPLMap OmegaPLMap::from_pl(const PLMap& f) {
  if (f.domain() != Domain::Interval) throw PreconditionError("OmegaPLMap needs an interval map");
  std::vector<Piece> ps = f.pieces();
  Dyadic acc = kOne;
  if (ps.back().slope_exp == 0 && ps.back().offset.is_zero()) {
    acc = ps.back().left;
    ps.pop_back();
  }
  return from_pieces(std::move(ps), acc, acc, 0);
}

OmegaPLMap OmegaPLMap::from_pieces(std::vector<Piece> pieces, const Dyadic& known_end,
                                   const Dyadic& accumulation, int depth) {
  if (known_end > accumulation || accumulation > kOne || known_end < Dyadic(0))
    throw PreconditionError("OmegaPLMap needs 0 <= known_end <= accumulation <= 1");
  if (pieces.empty() != known_end.is_zero())
    throw PreconditionError("OmegaPLMap pieces must cover exactly [0, known_end)");
  if (!pieces.empty()) {
    if (!pieces.front().left.is_zero()) throw PreconditionError("OmegaPLMap: first breakpoint must be 0");
    if (!pieces.front().offset.is_zero()) throw PreconditionError("OmegaPLMap: f(0) must be 0");
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
      const Dyadic& r = pieces[i + 1].left;
      if (r <= pieces[i].left) throw PreconditionError("OmegaPLMap: breakpoints not increasing at " + r.format());
      if (pieces[i].apply(r) != pieces[i + 1].apply(r))
        throw PreconditionError("OmegaPLMap: discontinuity at " + r.format());
    }
    if (pieces.back().left >= known_end) throw PreconditionError("OmegaPLMap: breakpoint past known_end");
    if (known_end == accumulation && pieces.back().apply(known_end) != known_end)
      throw PreconditionError("OmegaPLMap: discontinuity at identity tail " + known_end.format());
    if (pieces.back().apply(known_end) > kOne) throw PreconditionError("OmegaPLMap: image leaves [0,1]");
  }
  OmegaPLMap m;
  m.depth_ = depth;
  // Normalize: merge equal neighbours, then fold a trailing identity piece into the tail.
  for (auto& p : pieces) {
    if (!m.pieces_.empty() && m.pieces_.back().slope_exp == p.slope_exp && m.pieces_.back().offset == p.offset)
      continue;
    m.pieces_.push_back(std::move(p));
  }
  m.known_end_ = known_end;
  m.accumulation_ = accumulation;
  if (m.fully_known() && !m.pieces_.empty() && m.pieces_.back().slope_exp == 0 && m.pieces_.back().offset.is_zero()) {
    m.known_end_ = m.accumulation_ = m.pieces_.back().left;
    m.pieces_.pop_back();
  }
  return m;
}

Dyadic OmegaPLMap::operator()(const Dyadic& x) const {
  if (x < Dyadic(0) || x > kOne) throw PreconditionError("point " + x.format() + " outside [0,1]");
  if (x >= accumulation_) return x;
  if (x < known_end_) {
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](const Dyadic& v, const Piece& p) { return v < p.left; });
    return std::prev(it)->apply(x);
  }
  throw TruncationExceeded("evaluation at " + x.format() + " beyond stored depth (known up to " +
                           known_end_.format() + ")");
}

long OmegaPLMap::slope_exp_at(const Dyadic& x) const {
  if (x >= accumulation_) return 0;
  if (x < known_end_) {
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](const Dyadic& v, const Piece& p) { return v < p.left; });
    return std::prev(it)->slope_exp;
  }
  throw TruncationExceeded("slope at " + x.format() + " beyond stored depth");
}

Dyadic OmegaPLMap::known_image_end() const {
  if (pieces_.empty()) return known_end_;
  return pieces_.back().apply(known_end_);
}

Dyadic OmegaPLMap::inverse_at(const Dyadic& y) const {
  if (y >= accumulation_) return y;
  if (y < known_image_end()) {
    std::size_t i = pieces_.size() - 1;
    while (pieces_[i].apply(pieces_[i].left) > y) --i;
    return (y - pieces_[i].offset).mul_pow2(-pieces_[i].slope_exp);
  }
  throw TruncationExceeded("inverse at " + y.format() + " beyond stored depth");
}

std::optional<PLMap> OmegaPLMap::to_pl() const {
  if (!fully_known()) return std::nullopt;
  std::vector<Piece> ps = pieces_;
  if (accumulation_ < kOne) ps.push_back(Piece{accumulation_, 0, Dyadic(0)});
  if (ps.empty()) return PLMap::identity();
  return PLMap::from_pieces(Domain::Interval, std::move(ps));
}

OmegaPLMap compose(const OmegaPLMap& f, const OmegaPLMap& g) {
  const Dyadic g_limit = known_limit(g);
  Dyadic f_limit = kOne;
  if (!f.fully_known()) {
    if (g.fully_known() || f.known_end() < g.known_image_end())
      f_limit = g.inverse_at(f.known_end());
    else
      f_limit = g_limit;
  }
  const Dyadic prefix = std::min(g_limit, f_limit);
  const Dyadic acc = std::max(f.accumulation(), g.accumulation());
  const bool full = prefix >= acc;
  const Dyadic end = full ? kOne : prefix;

  std::vector<Dyadic> breaks;
  for (const auto& p : g.pieces()) breaks.push_back(p.left);
  breaks.push_back(g.known_end());
  breaks.push_back(g.accumulation());
  std::vector<Dyadic> f_breaks{f.known_end(), f.accumulation()};
  for (const auto& p : f.pieces()) f_breaks.push_back(p.left);
  for (const auto& y : f_breaks) {
    if (y >= g.accumulation()) {
      breaks.push_back(y);
    } else if (y < g.known_image_end()) {
      breaks.push_back(g.inverse_at(y));
    }
  }
  auto pieces = pieces_from(
      std::move(breaks), end, [&](const Dyadic& x) { return f(g(x)); },
      [&](const Dyadic& m) { return g.slope_exp_at(m) + f.slope_exp_at(g(m)); });
  const int depth = std::max(f.depth(), g.depth());
  if (full) {
    Dyadic tail = kOne;
    if (!pieces.empty() && pieces.back().slope_exp == 0 && pieces.back().offset.is_zero()) {
      tail = pieces.back().left;
      pieces.pop_back();
    }
    return OmegaPLMap::from_pieces(std::move(pieces), tail, tail, depth);
  }
  return OmegaPLMap::from_pieces(std::move(pieces), prefix, acc, depth);
}

OmegaPLMap invert(const OmegaPLMap& f) {
  std::vector<Piece> out;
  for (const auto& p : f.pieces()) {
    Dyadic l = p.apply(p.left);
    out.push_back(Piece{l, -p.slope_exp, (-p.offset).mul_pow2(-p.slope_exp)});
  }
  return OmegaPLMap::from_pieces(std::move(out), f.known_image_end(), f.accumulation(), f.depth());
}

OmegaPLMap commutator(const OmegaPLMap& f, const OmegaPLMap& g) {
  return compose(invert(f), compose(invert(g), compose(f, g)));
}

WindowComparison compare_on_window(const OmegaPLMap& a, const OmegaPLMap& b) {
  WindowComparison cmp;
  cmp.checked_up_to = std::min(known_limit(a), known_limit(b));
  cmp.identity_from = std::max(a.accumulation(), b.accumulation());
  std::vector<Dyadic> breaks{Dyadic(0), a.accumulation(), b.accumulation(), a.known_end(), b.known_end()};
  for (const auto& p : a.pieces()) breaks.push_back(p.left);
  for (const auto& p : b.pieces()) breaks.push_back(p.left);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  while (!breaks.empty() && breaks.back() >= cmp.checked_up_to) breaks.pop_back();
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    const Dyadic& l = breaks[i];
    const Dyadic r = i + 1 < breaks.size() ? breaks[i + 1] : cmp.checked_up_to;
    Dyadic m = midpoint(l, r);
    if (a(l) != b(l) || a.slope_exp_at(m) != b.slope_exp_at(m)) {
      cmp.equal = false;
      cmp.first_disagreement = l;
      return cmp;
    }
  }
  return cmp;
}

std::vector<Piece> restrict_to(const OmegaPLMap& f, const Dyadic& window) {
  if (window > known_limit(f))
    throw TruncationExceeded("window " + window.format() + " past stored depth " + f.known_end().format());
  std::vector<Piece> out;
  for (const auto& p : f.pieces())
    if (p.left < window) out.push_back(p);
  if (f.fully_known() && f.accumulation() < window) out.push_back(Piece{f.accumulation(), 0, Dyadic(0)});
  if (out.empty()) out.push_back(Piece{Dyadic(0), 0, Dyadic(0)});
  return out;
}

}  // namespace bclab
