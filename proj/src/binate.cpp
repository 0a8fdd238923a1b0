#include "bclab/binate.hpp"

#include <algorithm>

#include "bclab/errors.hpp"
#include "bclab/rng.hpp"

namespace bclab {

Dyadic DissipatorSpec::rung(int j) const {
  if (j < -1) throw PreconditionError("rung index must be >= -1");
  if (j == -1) return x_minus1;
  if (j == 0) return a;
  return accumulation - (b - a).mul_pow2(2 - t - j);
}

Dissipator build_dissipator(const Dyadic& a, const Dyadic& b, int depth) {
  const Dyadic zero(0), one(1);
  if (depth < 0) throw PreconditionError("depth must be >= 0");
  if (!(zero < a)) throw PreconditionError("violated inequality 0 < a (a = " + a.format() + ")");
  if (!(a < b)) throw PreconditionError("violated inequality a < b (a = " + a.format() + ", b = " + b.format() + ")");
  if (!(b < one)) throw PreconditionError("violated inequality b < 1 (b = " + b.format() + ")");
  const Dyadic x_minus1 = a.mul_pow2(1) - b;
  if (!(zero < x_minus1)) {
    const Dyadic suggested = midpoint(a, std::min(a.mul_pow2(1), one));
    throw PreconditionError("violated inequality 0 < 2a - b (2a - b = " + x_minus1.format() +
                            "); choose a smaller interval, e.g. b = " + suggested.format());
  }
  DissipatorSpec spec;
  spec.a = a;
  spec.b = b;
  spec.x_minus1 = x_minus1;
  spec.depth = depth;
  spec.t = 1;
  while (b + (b - a).mul_pow2(1 - spec.t) >= one) ++spec.t;
  spec.accumulation = b + (b - a).mul_pow2(1 - spec.t);

  std::vector<Piece> pieces;
  pieces.push_back(Piece{Dyadic(0), 0, Dyadic(0)});
  pieces.push_back(Piece{x_minus1, 1, -x_minus1});
  for (int j = 1; j <= depth + 1; ++j) {
    const long s = j == 1 ? -spec.t : -1;
    const Dyadic left = spec.rung(j - 1);
    pieces.push_back(Piece{left, s, spec.rung(j) - left.mul_pow2(s)});
  }
  OmegaPLMap rho = OmegaPLMap::from_pieces(std::move(pieces), spec.rung(depth + 1), spec.accumulation, depth);
  return Dissipator{std::move(rho), spec};
}

LadderReport dissipation_ladder(const Dissipator& d) {
  LadderReport r;
  Dyadic lo = d.spec.a, hi = d.spec.b;
  for (int k = 0; k <= d.spec.depth; ++k) {
    r.intervals.emplace_back(lo, hi);
    if (k < d.spec.depth) {
      lo = d.rho(lo);
      hi = d.rho(hi);
    }
  }
  auto sorted = r.intervals;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i].second > sorted[i + 1].first) r.disjoint = false;
  return r;
}

bool rung_slopes_ok(const Dissipator& d) {
  const auto& s = d.spec;
  if (d.rho.slope_exp_at(midpoint(Dyadic(0), s.x_minus1)) != 0) return false;
  if (d.rho.slope_exp_at(midpoint(s.x_minus1, s.a)) != 1) return false;
  for (int j = 1; j <= s.depth + 1; ++j) {
    const long expected = j == 1 ? -s.t : -1;
    if (d.rho.slope_exp_at(midpoint(s.rung(j - 1), s.rung(j))) != expected) return false;
    if (d.rho(s.rung(j - 1)) != s.rung(j)) return false;
  }
  return d.rho(s.x_minus1) == s.x_minus1 && d.rho(s.accumulation) == s.accumulation;
}

OmegaPLMap dissipate(const PLMap& g, const Dissipator& d) {
  const auto& s = d.spec;
  if (g.domain() != Domain::Interval) throw PreconditionError("dissipate needs an interval map");
  const mpq_class lo = s.a.to_rational(), hi = s.b.to_rational();
  for (const auto& iv : support(g))
    if (iv.lo < lo || iv.hi > hi)
      throw PreconditionError("support of g leaves (" + s.a.format() + ", " + s.b.format() + ")");
  if (g.is_identity()) return OmegaPLMap::identity();

  std::vector<Piece> pieces{Piece{Dyadic(0), 0, Dyadic(0)}};
  const auto& gp = g.pieces();
  for (int k = 1; k <= s.depth; ++k) {
    // A_k: (a,b) -> (x_k, x_{k+1}) affine with slope 2^-(t+k-1), equal to rho^k there.
    const long e = -(s.t + k - 1);
    const Dyadic xk = s.rung(k);
    auto A = [&](const Dyadic& x) { return xk + (x - s.a).mul_pow2(e); };
    for (std::size_t i = 0; i < gp.size(); ++i) {
      const Dyadic right = i + 1 < gp.size() ? gp[i + 1].left : Dyadic(1);
      if (right <= s.a || gp[i].left >= s.b) continue;
      const Dyadic l = std::max(gp[i].left, s.a);
      const Dyadic L = A(l);
      pieces.push_back(Piece{L, gp[i].slope_exp, A(gp[i].apply(l)) - L.mul_pow2(gp[i].slope_exp)});
    }
  }
  return OmegaPLMap::from_pieces(std::move(pieces), s.rung(s.depth + 1), s.accumulation, s.depth);
}

PLMap evaluate_word(const std::vector<PLMap>& gens, const Word& w) {
  PLMap out = PLMap::identity();
  for (const auto& [i, e] : w) {
    if (i < 0 || i >= static_cast<int>(gens.size())) throw PreconditionError("word letter out of range");
    out = compose(out, e > 0 ? gens[static_cast<std::size_t>(i)] : invert(gens[static_cast<std::size_t>(i)]));
  }
  return out;
}

OmegaPLMap evaluate_word(const std::vector<OmegaPLMap>& images, const Word& w) {
  OmegaPLMap out = OmegaPLMap::identity();
  for (const auto& [i, e] : w) {
    if (i < 0 || i >= static_cast<int>(images.size())) throw PreconditionError("word letter out of range");
    out = compose(out, e > 0 ? images[static_cast<std::size_t>(i)] : invert(images[static_cast<std::size_t>(i)]));
  }
  return out;
}

namespace {

OmegaPLMap conjugate_down(const OmegaPLMap& m, const OmegaPLMap& rho) {
  return compose(invert(rho), compose(m, rho));
}

ConditionCheck make_check(std::string name, std::string subject, const OmegaPLMap& lhs, const OmegaPLMap& rhs) {
  WindowComparison cmp = compare_on_window(lhs, rhs);
  ConditionCheck c;
  c.name = std::move(name);
  c.subject = std::move(subject);
  c.pass = cmp.equal;
  c.checked_up_to = cmp.checked_up_to;
  c.identity_from = cmp.identity_from;
  c.first_disagreement = cmp.first_disagreement;
  return c;
}

std::string word_name(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& [i, e] : w) {
    if (!s.empty()) s += "*";
    s += "h" + std::to_string(i) + (e > 0 ? "" : "^-1");
  }
  return s;
}

Word random_word(int gens, SplitMix64& rng) {
  Word w;
  const int len = 1 + static_cast<int>(rng.uniform(3));
  for (int i = 0; i < len; ++i)
    w.emplace_back(static_cast<int>(rng.uniform(static_cast<std::uint64_t>(gens))), rng.uniform(2) ? 1 : -1);
  return w;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

PseudoMitosisWitness make_witness(const std::vector<PLMap>& generators, const Dissipator& d) {
  PseudoMitosisWitness w{generators, {}, {}, invert(d.rho), d, d.spec.accumulation};
  for (const auto& h : generators) {
    OmegaPLMap p1 = dissipate(h, d);
    w.psi0.push_back(conjugate_down(p1, d.rho));
    w.psi1.push_back(std::move(p1));
  }
  return w;
}

WitnessReport verify_witness(const PseudoMitosisWitness& w, int word_pairs, std::uint64_t seed) {
  WitnessReport r;
  r.window = w.window;
  const std::size_t n = w.generators.size();
  if (w.psi0.size() != n || w.psi1.size() != n) throw PreconditionError("witness image lists do not match generators");
  std::vector<OmegaPLMap> hs;
  for (const auto& h : w.generators) hs.push_back(OmegaPLMap::from_pl(h));
  const OmegaPLMap g_inv = invert(w.g);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string hi = "h" + std::to_string(i);
    r.checks.push_back(make_check("h psi1(h) = psi0(h)", hi, compose(hs[i], w.psi1[i]), w.psi0[i]));
    for (std::size_t j = 0; j < n; ++j)
      r.checks.push_back(make_check("[h, psi1(h')] = 1", hi + ",h" + std::to_string(j), commutator(hs[i], w.psi1[j]),
                                    OmegaPLMap::identity()));
    r.checks.push_back(make_check("psi1(h) = g^-1 psi0(h) g", hi, w.psi1[i], compose(g_inv, compose(w.psi0[i], w.g))));
  }
  if (n > 0) {
    SplitMix64 rng(seed);
    const Dissipator& d = w.dissipator;
    auto psi1_of = [&](const Word& u) { return dissipate(evaluate_word(w.generators, u), d); };
    auto mu = [&](const Word& u, const Word& v) {
      return compose(OmegaPLMap::from_pl(evaluate_word(w.generators, u)), psi1_of(v));
    };
    for (int p = 0; p < word_pairs; ++p) {
      Word u1 = random_word(static_cast<int>(n), rng), u2 = random_word(static_cast<int>(n), rng);
      Word v1 = random_word(static_cast<int>(n), rng), v2 = random_word(static_cast<int>(n), rng);
      const Word u = concat(u1, u2);
      r.checks.push_back(make_check("psi1 multiplicative", word_name(u), psi1_of(u), evaluate_word(w.psi1, u)));
      r.checks.push_back(make_check("psi0 multiplicative", word_name(u), conjugate_down(psi1_of(u), d.rho),
                                    evaluate_word(w.psi0, u)));
      r.checks.push_back(make_check("mu multiplicative", word_name(u) + "," + word_name(concat(v1, v2)),
                                    mu(u, concat(v1, v2)), compose(mu(u1, v1), mu(u2, v2))));
      ++r.sampled_word_pairs;
    }
  }
  for (const auto& c : r.checks) r.pass = r.pass && c.pass;
  return r;
}

CommutatorReport binate_commutator_check(const Word& h, const PseudoMitosisWitness& w) {
  const OmegaPLMap target = OmegaPLMap::from_pl(evaluate_word(w.generators, h));
  const OmegaPLMap a = invert(evaluate_word(w.psi0, h));
  const OmegaPLMap& b = w.g;
  const OmegaPLMap forward = commutator(a, b);
  const OmegaPLMap opposite = compose(a, compose(b, compose(invert(a), invert(b))));
  const WindowComparison c1 = compare_on_window(forward, target);
  if (c1.checked_up_to < w.dissipator.spec.b)
    throw TruncationExceeded("commutator known only on [0, " + c1.checked_up_to.format() + "), support of h reaches " +
                             w.dissipator.spec.b.format() + "; increase the depth");
  const WindowComparison c2 = compare_on_window(opposite, target);
  CommutatorReport r;
  r.psi0_form_matches = c1.equal;
  r.opposite_form_matches = c2.equal && c2.checked_up_to >= w.dissipator.spec.b;
  r.checked_up_to = c1.checked_up_to;
  r.first_disagreement = c1.first_disagreement;
  r.pass = r.psi0_form_matches;
  return r;
}

}  // namespace bclab
