#include "bclab/thompson_actions.hpp"

#include <algorithm>
#include <set>

#include "bclab/circular_cochains.hpp"
#include "bclab/errors.hpp"

namespace bclab {

bool circ_ordered(const CircTuple& t) {
  const std::size_t k = t.size();
  if (k == 0) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (t[i] == t[j]) return false;
  if (k <= 2) return true;
  std::size_t descents = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (t[(i + 1) % k] < t[i]) ++descents;
  return descents == 1;
}

std::vector<StandardInterval> standard_decomposition(const Dyadic& lo, const Dyadic& hi) {
  std::vector<StandardInterval> out;
  Dyadic cur = lo;
  while (cur < hi) {
    // The largest standard interval starting at cur has length 2^-exp(cur)
    // (or any power of two when cur is an integer); shrink until it fits.
    long n = static_cast<long>(cur.exp());
    if (cur.is_integer()) n = 0;
    while (cur + Dyadic::pow2(-n) > hi) ++n;
    StandardInterval s;
    s.n = static_cast<unsigned long>(n);
    s.m = cur.mul_pow2(n).num();
    out.push_back(s);
    cur = cur + Dyadic::pow2(-n);
  }
  return out;
}

namespace {

// Splits the largest interval (first one on ties) into its two halves.
void halve_largest(std::vector<StandardInterval>& xs) {
  auto it = std::min_element(xs.begin(), xs.end(),
                             [](const StandardInterval& a, const StandardInterval& b) { return a.n < b.n; });
  StandardInterval left{it->m * 2, it->n + 1};
  StandardInterval right{it->m * 2 + 1, it->n + 1};
  *it = right;
  xs.insert(it, left);
}

// Pieces of an increasing map sending [lo_src, hi_src] onto [lo_dst, hi_dst].
void append_interval_pieces(const Dyadic& lo_src, const Dyadic& hi_src, const Dyadic& lo_dst,
                            const Dyadic& hi_dst, std::vector<Piece>& out) {
  auto src = standard_decomposition(lo_src, hi_src);
  auto dst = standard_decomposition(lo_dst, hi_dst);
  while (src.size() < dst.size()) halve_largest(src);
  while (dst.size() < src.size()) halve_largest(dst);
  for (std::size_t i = 0; i < src.size(); ++i) {
    long s = static_cast<long>(src[i].n) - static_cast<long>(dst[i].n);
    Dyadic l = src[i].lo();
    out.push_back(Piece{l, s, dst[i].lo() - l.mul_pow2(s)});
  }
}

void require_increasing_inside(const std::vector<Dyadic>& t, const char* name) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] <= Dyadic(0) || t[i] >= Dyadic(1))
      throw PreconditionError(std::string(name) + " entry " + t[i].format() + " not in (0,1)");
    if (i > 0 && t[i] <= t[i - 1])
      throw PreconditionError(std::string(name) + " not strictly increasing at " + t[i].format());
  }
}

}  // namespace

PLMap interval_witness(const std::vector<Dyadic>& u, const std::vector<Dyadic>& v) {
  if (u.size() != v.size()) throw PreconditionError("interval_witness: length mismatch");
  require_increasing_inside(u, "source");
  require_increasing_inside(v, "target");
  std::vector<Dyadic> su{Dyadic(0)}, sv{Dyadic(0)};
  su.insert(su.end(), u.begin(), u.end());
  sv.insert(sv.end(), v.begin(), v.end());
  su.push_back(Dyadic(1));
  sv.push_back(Dyadic(1));
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < su.size(); ++i) append_interval_pieces(su[i], su[i + 1], sv[i], sv[i + 1], pieces);
  return PLMap::from_pieces(Domain::Interval, std::move(pieces));
}

namespace {

// Interior points of t after rotating t[0] to 0, as an increasing tuple in (0,1).
std::vector<Dyadic> cut_open(const CircTuple& t) {
  std::vector<Dyadic> out;
  for (std::size_t i = 1; i < t.size(); ++i) out.push_back(mod1(t[i].rep() - t[0].rep()).rep());
  return out;
}

PLMap as_circle_map(const PLMap& f) { return PLMap::from_pieces(Domain::Circle, f.pieces()); }

}  // namespace

PLMap circle_witness(const CircTuple& u, const CircTuple& v) {
  if (u.size() != v.size()) throw PreconditionError("circle_witness: length mismatch");
  if (!circ_ordered(u)) throw PreconditionError("circle_witness: source tuple not circularly ordered");
  if (!circ_ordered(v)) throw PreconditionError("circle_witness: target tuple not circularly ordered");
  PLMap middle = as_circle_map(interval_witness(cut_open(u), cut_open(v)));
  return compose(PLMap::rotation(v[0].rep()), compose(middle, PLMap::rotation(-u[0].rep())));
}

bool stabilizer_check(const PLMap& f, const CircTuple& t) {
  return std::all_of(t.begin(), t.end(), [&](const CirclePoint& p) { return f(p) == p; });
}

std::vector<Dyadic> random_interval_tuple(SplitMix64& rng, int size, int denominator_exp) {
  const std::uint64_t range = (std::uint64_t{1} << denominator_exp) - 1;
  std::set<std::uint64_t> nums;
  while (nums.size() < static_cast<std::size_t>(size)) nums.insert(1 + rng.uniform(range));
  std::vector<Dyadic> t;
  for (auto m : nums) t.push_back(Dyadic::normalize(mpz_class(static_cast<unsigned long>(m)), denominator_exp));
  return t;
}

PLMap random_t_element(SplitMix64& rng, int denominator_exp) {
  CircTuple u = random_circ_ordered(rng, 4, denominator_exp);
  CircTuple v = random_circ_ordered(rng, 4, denominator_exp);
  return circle_witness(u, v);
}

}  // namespace bclab
