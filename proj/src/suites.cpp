#include "bclab/suites.hpp"

#include <algorithm>
#include <sstream>

#include "bclab/bar_complex.hpp"
#include "bclab/circular_cochains.hpp"
#include "bclab/errors.hpp"
#include "bclab/finite_group.hpp"
#include "bclab/rng.hpp"
#include "bclab/thompson_actions.hpp"

namespace bclab {

namespace {

constexpr const char* kRefAlt = "alternating cup-power identity";
constexpr const char* kRefLast = "last differential of the alternating complex";
constexpr const char* kRefOrc = "orientation cocycle pullback";
constexpr const char* kRefEuler = "bounded Euler class as half the orientation class";
constexpr const char* kRefTheta = "chain homotopy Theta between conjugation and identity";
constexpr const char* kRefPsi = "explicit inverse psi of the coboundary in degree 2";
constexpr const char* kRefModulus = "vanishing modulus";
constexpr const char* kRefUbc = "uniform boundary condition";
constexpr const char* kRefTrans = "transitivity of T on circularly ordered dyadic tuples";
constexpr const char* kRefDiss = "dissipator recipe for OmegaF'";
constexpr const char* kRefWitness = "pseudo-mitosis conditions";
constexpr const char* kRefComm = "binate commutator identity";

std::string q(const mpq_class& v) { return rational_string(v); }

Json tuple_json(const std::vector<Dyadic>& t) {
  Json a = Json::array();
  for (const auto& d : t) a.push_back(d.format());
  return a;
}

const char* mode_name(SolveMode m) { return m == SolveMode::Exact ? "exact" : "float"; }

void merge(RunReport& into, const RunReport& part, const std::string& label) {
  for (const auto& c : part.checks) into.add(label + ": " + c.name, c.paper_ref, c.expected, c.actual, c.pass);
  into.result["sections"].push_back({{"section", label}, {"pass", part.pass()}, {"result", part.result}});
}

}  // namespace

const std::vector<std::string>& standard_groups() {
  static const std::vector<std::string> groups{"C2", "C3", "C4", "C5", "C6", "S3", "C2xC2"};
  return groups;
}

std::vector<PLMap> default_witness_generators() {
  auto d = [](const char* s) { return Dyadic::parse(s); };
  return {interval_witness({d("3/2^3"), d("7/2^4"), d("1/2^1")}, {d("3/2^3"), d("13/2^5"), d("1/2^1")}),
          interval_witness({d("3/2^3"), d("25/2^6"), d("1/2^1")}, {d("3/2^3"), d("7/2^4"), d("1/2^1")})};
}

RunReport alt_identity_suite(int k, std::uint64_t seed) {
  RunReport r;
  r.command = "verify alt-identity";
  r.seed = seed;
  AltCupResult res = verify_alt_cup_identity(k, 3, seed);
  r.add("alt(f2^k) = c f_2k, k=" + std::to_string(k), kRefAlt, q(res.expected), q(res.coefficient),
        res.coefficient == res.expected);
  r.add("intermediate alt(f2 cup f_2(k-1)), k=" + std::to_string(k), kRefAlt, q(res.intermediate_expected),
        q(res.intermediate), res.intermediate == res.intermediate_expected);
  r.add("same ratio on every tuple, k=" + std::to_string(k), kRefAlt, true, res.consistent, res.consistent);
  r.result = {{"k", k},
              {"coefficient", q(res.coefficient)},
              {"intermediate", q(res.intermediate)},
              {"tuplesChecked", res.tuples_checked}};
  return r;
}

RunReport last_differential_suite(int samples, std::uint64_t seed) {
  RunReport r;
  r.command = "verify last-differential";
  r.seed = seed;
  SplitMix64 rng(seed);
  for (int k = 1; k <= 2; ++k) {
    const TupleCochain d = delta_tuple(TupleCochain::orient(2 * k));
    int nonzero = 0;
    for (int s = 0; s < samples; ++s)
      if (d(random_circ_ordered(rng, 2 * k + 2, 10)) != 0) ++nonzero;
    r.add("delta f_" + std::to_string(2 * k) + " = 0 on circularly ordered tuples", kRefLast, 0, nonzero, nonzero == 0);
  }
  r.result = {{"samples", samples}};
  return r;
}

RunReport euler_suite(int samples, std::uint64_t seed) {
  RunReport r;
  r.command = "euler cocycle-check";
  r.seed = seed;
  SplitMix64 rng(seed);
  const CirclePoint x0(Dyadic(0));
  const PLMap id = PLMap::identity(Domain::Circle);
  // Inhomogeneous form orc(g1, g2) = f2(x0, g1 x0, g1 g2 x0).
  auto orc = [&](const PLMap& g1, const PLMap& g2) { return orientation_cocycle(x0, id, g1, compose(g1, g2)); };
  int failures = 0;
  int bad_values = 0;
  for (int s = 0; s < samples; ++s) {
    PLMap g1 = random_t_element(rng), g2 = random_t_element(rng), g3 = random_t_element(rng);
    mpq_class d = orc(g2, g3) - orc(compose(g1, g2), g3) + orc(g1, compose(g2, g3)) - orc(g1, g2);
    if (d != 0) ++failures;
    mpq_class e = euler_cocycle(x0, id, g1, compose(g1, g2));
    if (e * 2 != orc(g1, g2) || abs(e) > mpq_class(1, 2)) ++bad_values;
  }
  r.add("delta orc = 0 on random triples in T", kRefOrc, 0, failures, failures == 0);
  r.add("Euler cocycle = orc / 2 with values in {0, +-1/2}", kRefEuler, 0, bad_values, bad_values == 0);

  CircTuple pts{CirclePoint(Dyadic::parse("1/2^3")), CirclePoint(Dyadic::parse("3/2^3")),
                CirclePoint(Dyadic::parse("1/2^1")), CirclePoint(Dyadic::parse("7/2^3"))};
  const TupleCochain df2 = delta_tuple(TupleCochain::orient(2));
  int orderings = 0, nonzero = 0;
  for_each_permutation(4, [&](const std::vector<int>& p, int) {
    CircTuple t;
    for (int i : p) t.push_back(pts[static_cast<std::size_t>(i)]);
    ++orderings;
    if (df2(t) != 0) ++nonzero;
  });
  r.add("delta f2 = 0 on all orderings of 4 points", kRefOrc, 0, nonzero, nonzero == 0 && orderings == 24);
  r.result = {{"samples", samples}, {"orderings", orderings}};
  return r;
}

RunReport theta_suite(const std::string& group, int degree, int trials, std::uint64_t seed) {
  if (degree < 0) throw PreconditionError("theta degree must be >= 0");
  const FiniteGroup G = FiniteGroup::parse(group);
  RunReport r;
  r.command = "theta";
  r.seed = seed;
  SplitMix64 rng(seed);
  int identity_failures = 0, norm_failures = 0, tested = 0;
  mpq_class worst = 0;
  for (int g = 0; g < G.order(); ++g) {
    for (int s = 0; s < trials; ++s) {
      Chain z = random_chain(G, degree, rng);
      Chain lhs = boundary(G, theta(G, g, z));
      if (degree >= 1) lhs += theta(G, g, boundary(G, z));
      Chain rhs = conjugation_pushforward(G, g, z) - z;
      if (!(lhs == rhs)) ++identity_failures;
      mpq_class tn = theta(G, g, z).l1_norm();
      mpq_class zn = z.l1_norm();
      if (tn > (degree + 1) * zn) ++norm_failures;
      if (zn != 0) worst = std::max(worst, mpq_class(tn / zn));
      ++tested;
    }
  }
  r.add("d Theta + Theta d = push - id, " + group + " n=" + std::to_string(degree), kRefTheta, 0, identity_failures,
        identity_failures == 0);
  r.add("||Theta z||_1 <= (n+1) ||z||_1, " + group + " n=" + std::to_string(degree), kRefTheta,
        "<= " + std::to_string(degree + 1), q(worst), norm_failures == 0);
  r.result = {{"group", group}, {"degree", degree}, {"chains", tested}, {"maxNormRatio", q(worst)}};
  return r;
}

RunReport psi_suite(const std::string& group, int trials, std::uint64_t seed) {
  const FiniteGroup G = FiniteGroup::parse(group);
  RunReport r;
  r.command = "psi";
  r.seed = seed;
  SplitMix64 rng(seed);
  int inverse_failures = 0, norm_failures = 0, tested = 0;
  for (int s = 0; s < trials; ++s) {
    Cochain c = coboundary(G, random_invariant_cochain(G, 1, rng));
    Cochain b = psi2(G, c);
    if (!(coboundary(G, b) == c) || !is_invariant(G, b)) ++inverse_failures;
    if (b.linf_norm() > c.linf_norm()) ++norm_failures;
    ++tested;
  }
  r.add("delta psi(c) = c, " + group, kRefPsi, 0, inverse_failures, inverse_failures == 0);
  r.add("||psi(c)||_inf <= ||c||_inf, " + group, kRefPsi, 0, norm_failures, norm_failures == 0);
  r.result = {{"group", group}, {"cocycles", tested}};
  return r;
}

RunReport ubc_suite(const std::string& group, int degree, int samples, std::uint64_t seed, SolveMode mode) {
  const FiniteGroup G = FiniteGroup::parse(group);
  RunReport r;
  r.command = "ubc";
  r.seed = seed;
  Estimate e = ubc_estimate(G, degree, samples, seed, mode);
  r.add("every l1 primitive certified, " + group + " n=" + std::to_string(degree), kRefUbc, true, e.certified,
        e.certified);
  r.result = {{"group", group},
              {"degree", degree},
              {"bound", e.bound},
              {"boundExact", q(e.bound_exact)},
              {"kind", "lower bound"},
              {"certified", e.certified},
              {"gap", e.max_gap},
              {"residual", e.max_residual},
              {"samples", e.samples},
              {"nonzeroSamples", e.nonzero_samples},
              {"mode", mode_name(mode)}};
  return r;
}

RunReport modulus_suite(const std::string& group, int degree, int samples, std::uint64_t seed, SolveMode mode) {
  const FiniteGroup G = FiniteGroup::parse(group);
  RunReport r;
  r.command = "modulus";
  r.seed = seed;
  Estimate e = modulus_estimate(G, degree, samples, seed, mode);
  const std::string tag = group + " n=" + std::to_string(degree);
  r.add("every sup-norm primitive certified, " + tag, kRefModulus, true, e.certified, e.certified);
  r.add("modulus estimate <= 1, " + tag, kRefModulus, "<= 1 + 1e-9", e.bound, e.bound <= 1 + kCertificateTolerance);
  Json result = {{"group", group},
                 {"degree", degree},
                 {"bound", e.bound},
                 {"boundExact", q(e.bound_exact)},
                 {"kind", "lower bound"},
                 {"certified", e.certified},
                 {"gap", e.max_gap},
                 {"residual", e.max_residual},
                 {"samples", e.samples},
                 {"nonzeroSamples", e.nonzero_samples},
                 {"mode", mode_name(mode)}};
  if (degree == 2) {
    // delta of the constant 1-cochain 1 is the constant 2-cochain 1, and its only primitive.
    Cochain one(G, 1);
    for (std::size_t i = 0; i < one.size(); ++i) one[i] = 1;
    one.set_invariant_unchecked(true);
    Cochain c = coboundary(G, one);
    LinfPrimitive p = min_linf_primitive(G, c, mode);
    mpq_class ratio = p.value / c.linf_norm();
    r.add("constant cochain witness ratio = 1, " + group, kRefModulus, "1", q(ratio),
          ratio == 1 && p.certificate.certified);
    result["constantWitnessRatio"] = q(ratio);
  }
  r.result = result;
  return r;
}

RunReport map_tuple_suite(ThompsonGroup group, const std::vector<Dyadic>& from, const std::vector<Dyadic>& to) {
  RunReport r;
  r.command = "thompson map-tuple";
  const bool circle = group == ThompsonGroup::T;
  PLMap f = PLMap::identity();
  if (circle) {
    CircTuple u, v;
    for (const auto& d : from) u.emplace_back(d);
    for (const auto& d : to) v.emplace_back(d);
    f = circle_witness(u, v);
  } else {
    f = interval_witness(from, to);
  }
  MembershipReport m = check_membership(f, group);
  r.add(std::string("witness lies in ") + (circle ? "T" : "F"), kRefTrans, true, m.member, m.member);
  Json images = Json::array();
  bool exact = true;
  for (std::size_t i = 0; i < from.size(); ++i) {
    Dyadic img = circle ? f(CirclePoint(from[i])).rep() : f(from[i]);
    Dyadic want = circle ? CirclePoint(to[i]).rep() : to[i];
    images.push_back(img.format());
    exact = exact && img == want;
  }
  r.add("exact pointwise images", kRefTrans, tuple_json(to), images, exact);
  r.result = {{"group", circle ? "T" : "F"}, {"map", to_json(f)}};
  return r;
}

RunReport transitivity_suite(int pairs, std::uint64_t seed) {
  RunReport r;
  r.command = "thompson transitivity";
  r.seed = seed;
  SplitMix64 rng(seed);
  int circle_fail = 0, interval_fail = 0;
  for (int s = 0; s < pairs; ++s) {
    CircTuple u = random_circ_ordered(rng, 4, 10), v = random_circ_ordered(rng, 4, 10);
    PLMap f = circle_witness(u, v);
    bool ok = check_membership(f, ThompsonGroup::T).member;
    for (std::size_t i = 0; i < u.size(); ++i) ok = ok && f(u[i]) == v[i];
    if (!ok) ++circle_fail;

    std::vector<Dyadic> a = random_interval_tuple(rng, 4, 10), b = random_interval_tuple(rng, 4, 10);
    PLMap g = interval_witness(a, b);
    bool ok2 = check_membership(g, ThompsonGroup::F).member;
    for (std::size_t i = 0; i < a.size(); ++i) ok2 = ok2 && g(a[i]) == b[i];
    if (!ok2) ++interval_fail;
  }
  r.add("circle_witness in T with exact images", kRefTrans, 0, circle_fail, circle_fail == 0);
  r.add("interval_witness in F with exact images", kRefTrans, 0, interval_fail, interval_fail == 0);
  r.result = {{"pairs", pairs}};
  return r;
}

RunReport dissipator_suite(const Dyadic& a, const Dyadic& b, int depth) {
  RunReport r;
  r.command = "dissipator";
  Dissipator d = build_dissipator(a, b, depth);
  LadderReport ladder = dissipation_ladder(d);
  r.add("ladder rho^k((a,b)) pairwise disjoint, k <= " + std::to_string(depth), kRefDiss, true, ladder.disjoint,
        ladder.disjoint);
  bool slopes = rung_slopes_ok(d);
  r.add("rung slopes 2, 2^-t, 1/2, ...", kRefDiss, true, slopes, slopes);
  bool tail = d.rho(Dyadic(0)) == Dyadic(0) && d.rho(d.spec.x_minus1) == d.spec.x_minus1 &&
              d.rho(d.spec.accumulation) == d.spec.accumulation && d.rho(Dyadic(1)) == Dyadic(1);
  r.add("identity outside [x_-1, accumulation]", kRefDiss, true, tail, tail);
  Json rungs = Json::array();
  for (const auto& iv : ladder.intervals) rungs.push_back(Json::array({iv.first.format(), iv.second.format()}));
  r.result = {{"a", a.format()},
              {"b", b.format()},
              {"xMinus1", d.spec.x_minus1.format()},
              {"accumulation", d.spec.accumulation.format()},
              {"firstTailStep", d.spec.t},
              {"depth", depth},
              {"ladder", rungs},
              {"rho", to_json(d.rho)}};
  return r;
}

RunReport witness_suite(const Dyadic& a, const Dyadic& b, const std::vector<PLMap>& generators, int depth,
                        std::uint64_t seed) {
  RunReport r;
  r.command = "witness";
  r.seed = seed;
  Dissipator d = build_dissipator(a, b, depth);
  PseudoMitosisWitness w = make_witness(generators, d);
  WitnessReport rep = verify_witness(w, 4, seed);
  Json conditions = Json::array();
  for (const auto& c : rep.checks) {
    Json actual = c.pass ? Json("equal") : Json("differs at " + (c.first_disagreement ? c.first_disagreement->format() : std::string("?")));
    r.add(c.name + " [" + c.subject + "]", kRefWitness,
          "equal", actual, c.pass);
    conditions.push_back({{"condition", c.name},
                          {"subject", c.subject},
                          {"pass", c.pass},
                          {"checkedUpTo", c.checked_up_to.format()},
                          {"identityFrom", c.identity_from.format()}});
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    CommutatorReport cr = binate_commutator_check(Word{{static_cast<int>(i), 1}}, w);
    r.add("h = [psi0(h)^-1, g] [h" + std::to_string(i) + "]", kRefComm, true, cr.psi0_form_matches, cr.pass);
  }
  // Negative control: replacing g by the identity must break psi1(h) = g^-1 psi0(h) g.
  PseudoMitosisWitness corrupted = w;
  corrupted.g = OmegaPLMap::identity();
  WitnessReport bad = verify_witness(corrupted, 0, seed);
  bool caught = generators.empty();
  for (const auto& c : bad.checks)
    if (c.name == "psi1(h) = g^-1 psi0(h) g" && !c.pass) caught = true;
  r.add("corrupted witness (g = 1) fails psi1(h) = g^-1 psi0(h) g", kRefWitness, true, caught, caught);
  r.result = {{"window", w.window.format()},
              {"knownUpTo", d.spec.rung(depth).format()},
              {"generators", generators.size()},
              {"sampledWordPairs", rep.sampled_word_pairs},
              {"homomorphismScope", "psi0, psi1 multiplicativity checked on sampled words only"},
              {"conditions", conditions}};
  return r;
}

RunReport all_suite(std::uint64_t seed) {
  RunReport r;
  r.command = "all";
  r.seed = seed;
  r.result["sections"] = Json::array();
  for (int k = 1; k <= 3; ++k) merge(r, alt_identity_suite(k, seed), "alt-identity k=" + std::to_string(k));
  merge(r, last_differential_suite(100, seed), "last-differential");
  merge(r, euler_suite(100, seed), "euler");
  for (const auto& g : standard_groups()) merge(r, psi_suite(g, 50, seed), "psi " + g);
  for (const auto& g : standard_groups())
    for (int n = 1; n <= 3; ++n)
      merge(r, modulus_suite(g, n, 10, seed, SolveMode::Exact), "modulus " + g + " n=" + std::to_string(n));
  for (const char* g : {"S3", "C6"})
    for (int n = 0; n <= 3; ++n) merge(r, theta_suite(g, n, 50, seed), std::string("theta ") + g + " n=" + std::to_string(n));
  for (const auto& g : standard_groups()) merge(r, ubc_suite(g, 1, 20, seed, SolveMode::Exact), "ubc " + g + " n=1");
  for (const char* g : {"C2", "C3"}) merge(r, ubc_suite(g, 2, 10, seed, SolveMode::Exact), std::string("ubc ") + g + " n=2");
  merge(r, transitivity_suite(100, seed), "transitivity");
  const Dyadic a = Dyadic::parse("3/2^3"), b = Dyadic::parse("1/2^1");
  merge(r, dissipator_suite(a, b, kDefaultDepth), "dissipator");
  merge(r, witness_suite(a, b, default_witness_generators(), kDefaultDepth, seed), "witness");
  return r;
}

}  // namespace bclab
