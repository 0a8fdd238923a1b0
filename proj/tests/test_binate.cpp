#include <doctest.h>

#include "bclab/binate.hpp"
#include "bclab/errors.hpp"
#include "test_support.hpp"

using namespace bclab;
using bclab::testing::D;

namespace {

// Rungs recomputed from the recipe: x_{-1} = 2a - b, x_0 = a, x_1 = b, then gaps halving.
std::vector<Dyadic> oracle_rungs(const Dyadic& a, const Dyadic& b, int t, int count) {
  std::vector<Dyadic> x{a + a - b, a, b};
  Dyadic gap = (b - a).mul_pow2(-t);
  for (int j = 2; j < count; ++j) {
    x.push_back(x.back() + gap);
    gap = gap.mul_pow2(-1);
  }
  return x;  // x[i] is rung i-1
}

Dyadic rho_power(const OmegaPLMap& rho, Dyadic x, int k) {
  for (int i = 0; i < k; ++i) x = rho(x);
  for (int i = 0; i > k; --i) x = rho.inverse_at(x);
  return x;
}

std::vector<PLMap> two_generators() {
  return {interval_witness({D("3/2^3"), D("7/2^4"), D("1/2^1")}, {D("3/2^3"), D("13/2^5"), D("1/2^1")}),
          interval_witness({D("3/2^3"), D("25/2^6"), D("1/2^1")}, {D("3/2^3"), D("7/2^4"), D("1/2^1")})};
}

}  // namespace

TEST_CASE("dissipator for (3/8, 1/2)") {
  const Dissipator d = build_dissipator(D("3/2^3"), D("1/2^1"), 16);
  CHECK(d.spec.x_minus1 == D("1/2^2"));
  CHECK(d.spec.t == 1);
  CHECK(d.spec.accumulation == D("5/2^3"));
  CHECK(d.rho(D("3/2^3")) == D("1/2^1"));
  CHECK(d.rho(D("1/2^1")) == D("9/2^4"));
  for (const char* x : {"0", "1/2^3", "1/2^2", "5/2^3", "3/2^2", "1"}) CHECK(d.rho(D(x)) == D(x));
  const LadderReport ladder = dissipation_ladder(d);
  CHECK(ladder.disjoint);
  REQUIRE(ladder.intervals.size() == 17);
  CHECK(ladder.intervals[1] == std::make_pair(D("1/2^1"), D("9/2^4")));
  CHECK(rung_slopes_ok(d));
  // Pairwise disjointness recomputed from the intervals.
  for (std::size_t i = 0; i < ladder.intervals.size(); ++i)
    for (std::size_t j = i + 1; j < ladder.intervals.size(); ++j)
      CHECK((ladder.intervals[i].second <= ladder.intervals[j].first ||
             ladder.intervals[j].second <= ladder.intervals[i].first));
}

TEST_CASE("dissipator matches the rung recipe") {
  const std::pair<const char*, const char*> params[] = {
      {"3/2^3", "1/2^1"}, {"1/2^2", "5/2^4"}, {"5/2^3", "11/2^4"}, {"1/2^1", "17/2^5"}, {"1/2^3", "3/2^4"}};
  for (const auto& [as, bs] : params) {
    const Dyadic a = D(as), b = D(bs);
    const Dissipator d = build_dissipator(a, b, 10);
    CAPTURE(as);
    CHECK(d.spec.accumulation < Dyadic(1));
    CHECK((d.spec.t == 1 || b + (b - a).mul_pow2(2 - d.spec.t) >= Dyadic(1)));
    const auto x = oracle_rungs(a, b, d.spec.t, 12);
    for (int j = -1; j <= 10; ++j) CHECK(d.spec.rung(j) == x[static_cast<std::size_t>(j + 1)]);
    CHECK(d.rho(x[0]) == x[0]);
    CHECK(d.rho(x[1]) == x[2]);
    for (std::size_t i = 1; i + 2 < x.size() - 1; ++i) {
      CHECK(d.rho(x[i]) == x[i + 1]);
      CHECK(d.rho(midpoint(x[i], x[i + 1])) == midpoint(x[i + 1], x[i + 2]));
    }
    CHECK(d.rho(d.spec.accumulation) == d.spec.accumulation);
    CHECK(rung_slopes_ok(d));
    CHECK(dissipation_ladder(d).disjoint);
  }
}

TEST_CASE("dissipator preconditions") {
  CHECK_THROWS_AS(build_dissipator(D("1/2^2"), D("3/2^2")), PreconditionError);
  try {
    build_dissipator(D("1/2^2"), D("3/2^2"));
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("2a - b") != std::string::npos);
  }
  CHECK_THROWS_AS(build_dissipator(D("1/2^1"), D("1/2^2")), PreconditionError);
  CHECK_THROWS_AS(build_dissipator(D("1/2^3"), D("3/2^4"), -1), PreconditionError);
}

TEST_CASE("dissipation") {
  const Dissipator d = build_dissipator(D("3/2^3"), D("1/2^1"), 12);
  CHECK(compare_on_window(dissipate(PLMap::identity(), d), OmegaPLMap::identity()).equal);
  CHECK_THROWS_AS(dissipate(interval_witness({D("1/2^2")}, {D("3/2^3")}), d), PreconditionError);
  SplitMix64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const PLMap g = testing::random_bump(rng, D("3/2^3"), D("1/2^1"));
    const OmegaPLMap phi = dissipate(g, d);
    const OmegaPLMap G = OmegaPLMap::from_pl(g);
    CHECK(compare_on_window(commutator(phi, G), OmegaPLMap::identity()).equal);
    const LadderReport ladder = dissipation_ladder(d);
    for (int k = 0; k <= 6; ++k) {
      const auto [lo, hi] = ladder.intervals[static_cast<std::size_t>(k)];
      for (int s = 0; s <= 16; ++s) {
        const Dyadic x = lo + (hi - lo) * Dyadic::normalize(s, 4);
        if (k == 0) {
          CHECK(phi(x) == x);
        } else {
          CHECK(phi(x) == rho_power(d.rho, g(rho_power(d.rho, x, -k)), k));
        }
      }
    }
    for (const char* x : {"0", "1/2^3", "1/2^2", "5/2^3", "1"}) CHECK(phi(D(x)) == D(x));
  }
}

TEST_CASE("words") {
  const auto gens = two_generators();
  const Word w{{0, 1}, {1, -1}, {0, 1}};
  const PLMap direct = compose(compose(gens[0], invert(gens[1])), gens[0]);
  CHECK(evaluate_word(gens, w) == direct);
  CHECK(evaluate_word(gens, {}).is_identity());
}

TEST_CASE("pseudo-mitosis witness") {
  const Dissipator d = build_dissipator(D("3/2^3"), D("1/2^1"), 16);
  const PseudoMitosisWitness w = make_witness(two_generators(), d);
  CHECK(w.window == D("5/2^3"));
  const WitnessReport r = verify_witness(w);
  CHECK(r.pass);
  CHECK(r.sampled_word_pairs == 4);
  int pair_checks = 0;
  for (const auto& c : r.checks) {
    CHECK(c.pass);
    if (c.name == "[h, psi1(h')] = 1") ++pair_checks;
  }
  CHECK(pair_checks == 4);
  // Conditions restated through direct composition.
  for (std::size_t i = 0; i < 2; ++i) {
    const OmegaPLMap h = OmegaPLMap::from_pl(w.generators[i]);
    CHECK(compare_on_window(compose(h, w.psi1[i]), w.psi0[i]).equal);
    CHECK(compare_on_window(compose(compose(invert(w.g), w.psi0[i]), w.g), w.psi1[i]).equal);
  }
  CHECK(verify_witness(make_witness({PLMap::identity()}, d)).pass);
  CHECK(verify_witness(make_witness({}, d)).pass);
}

TEST_CASE("corrupted witness fails the conjugation condition") {
  const Dissipator d = build_dissipator(D("3/2^3"), D("1/2^1"), 16);
  PseudoMitosisWitness w = make_witness(two_generators(), d);
  w.g = OmegaPLMap::identity();
  const WitnessReport r = verify_witness(w);
  CHECK_FALSE(r.pass);
  bool cond3_failed = false;
  for (const auto& c : r.checks)
    if (c.name == "psi1(h) = g^-1 psi0(h) g" && !c.pass) {
      cond3_failed = true;
      CHECK(c.first_disagreement.has_value());
    }
  CHECK(cond3_failed);
}

TEST_CASE("binate commutator identity") {
  const Dissipator d = build_dissipator(D("3/2^3"), D("1/2^1"), 16);
  const PseudoMitosisWitness w = make_witness(two_generators(), d);
  const CommutatorReport id = binate_commutator_check({}, w);
  CHECK(id.psi0_form_matches);
  CHECK(id.opposite_form_matches);
  for (const Word& h : std::vector<Word>{{{0, 1}}, {{1, -1}}, {{0, 1}, {1, 1}}, {{1, 1}, {0, -1}, {1, 1}}}) {
    const CommutatorReport r = binate_commutator_check(h, w);
    CHECK(r.pass);
    CHECK(r.psi0_form_matches);
  }
  const PseudoMitosisWitness shallow = make_witness(two_generators(), build_dissipator(D("3/2^3"), D("1/2^1"), 0));
  CHECK_THROWS_AS(binate_commutator_check({{0, 1}}, shallow), TruncationExceeded);
}
