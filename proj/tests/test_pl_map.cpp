#include <doctest.h>

#include <algorithm>

#include "bclab/errors.hpp"
#include "bclab/pl_map.hpp"
#include "test_support.hpp"

using namespace bclab;
using bclab::testing::D;

namespace {

PLMap example_f() {
  return PLMap::from_pieces(Domain::Interval, {Piece{D("0"), 1, D("0")}, Piece{D("1/2^2"), 0, D("1/2^2")},
                                               Piece{D("1/2^1"), -1, D("1/2^1")}});
}

std::vector<Dyadic> grid(int e) {
  std::vector<Dyadic> g;
  for (long i = 0; i <= (1L << e); ++i) g.push_back(Dyadic::normalize(i, e));
  return g;
}

bool pointwise_equal(const PLMap& a, const PLMap& b, int e) {
  for (const auto& x : grid(e))
    if (a.lift(x) != b.lift(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("evaluation examples") {
  CHECK(PLMap::identity()(D("1/2^1")) == D("1/2^1"));
  const PLMap f = example_f();
  CHECK(f(D("1/2^3")) == D("1/2^2"));
  CHECK(f(D("1/2^1")) == D("3/2^2"));
  CHECK(f(Dyadic(1)) == Dyadic(1));
  CHECK_THROWS_AS(f(D("5/2^2")), PreconditionError);
}

TEST_CASE("composition and inversion") {
  const PLMap f = example_f();
  CHECK(compose(f, invert(f)).is_identity());
  CHECK(compose(PLMap::identity(), f) == f);
  CHECK(invert(PLMap::identity()).is_identity());
  const PLMap ff = compose(f, f);
  for (const auto& x : grid(10)) CHECK(ff(x) == f(f(x)));
  const PLMap inv = invert(f);
  CHECK(inv.pieces().front().slope_exp == -1);
  CHECK(inv.pieces().front().offset.is_zero());
  CHECK(inv(D("3/2^2")) == D("1/2^1"));
}

TEST_CASE("structural violations are reported") {
  auto v = structural_violations(Domain::Interval, {Piece{D("0"), 1, D("0")}, Piece{D("1/2^2"), 0, D("0")}});
  REQUIRE_FALSE(v.empty());
  CHECK(std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.condition == "continuity"; }));
  CHECK_THROWS_AS(PLMap::from_pieces(Domain::Interval, {Piece{D("0"), 1, D("0")}}), PreconditionError);
  CHECK_THROWS_AS(PLMap::from_pieces(Domain::Interval, {}), PreconditionError);
}

TEST_CASE("membership") {
  CHECK(check_membership(PLMap::identity(), ThompsonGroup::F).member);
  CHECK(check_membership(PLMap::identity(Domain::Circle), ThompsonGroup::T).member);
  CHECK(check_membership(example_f(), ThompsonGroup::F).member);
  const PLMap rot = PLMap::rotation(D("1/2^1"));
  CHECK(check_membership(rot, ThompsonGroup::T).member);
  MembershipReport r = check_membership(rot, ThompsonGroup::F);
  CHECK_FALSE(r.member);
  CHECK_FALSE(r.violations.empty());
  CHECK(rot(CirclePoint(D("3/2^2"))).rep() == D("1/2^2"));
}

TEST_CASE("germs") {
  const PLMap f = example_f();
  CHECK(germ(PLMap::identity(), End::Zero) == 0);
  CHECK(germ(f, End::Zero) == 1);
  CHECK(germ(f, End::One) == -1);
  CHECK(germ(invert(f), End::Zero) == -1);
  CHECK_THROWS_AS(germ(PLMap::rotation(D("1/2^2")), End::Zero), PreconditionError);
}

TEST_CASE("support") {
  CHECK(support(PLMap::identity()).empty());
  auto s = support(example_f());
  REQUIRE(s.size() == 1);
  CHECK(s[0] == OpenInterval{mpq_class(0), mpq_class(1)});
  const PLMap bump = interval_witness({D("1/2^2"), D("3/2^3"), D("1/2^1")}, {D("1/2^2"), D("5/2^4"), D("1/2^1")});
  auto b = support(bump);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == OpenInterval{mpq_class(1, 4), mpq_class(1, 2)});
}

TEST_CASE("commutators") {
  const PLMap f = example_f();
  CHECK(commutator(f, f).is_identity());
  CHECK(commutator(f, PLMap::identity()).is_identity());
  const PLMap a = interval_witness({D("1/2^3"), D("3/2^4"), D("1/2^2")}, {D("1/2^3"), D("5/2^5"), D("1/2^2")});
  const PLMap b = interval_witness({D("1/2^1"), D("5/2^3"), D("3/2^2")}, {D("1/2^1"), D("11/2^4"), D("3/2^2")});
  CHECK(commutator(a, b).is_identity());
  // Convention [a,b] = a^-1 b^-1 a b checked pointwise.
  const PLMap c = commutator(f, a);
  for (const auto& x : grid(8)) CHECK(c(x) == invert(f)(invert(a)(f(a(x)))));
  CHECK(std::string(kCommutatorConvention) == "[a,b] = a^-1 b^-1 a b");
}

TEST_CASE("random elements: laws") {
  SplitMix64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const PLMap f = testing::random_f_element(rng), g = testing::random_f_element(rng);
    CHECK(invert(invert(f)) == f);
    CHECK(compose(f, invert(f)).is_identity());
    CHECK(germ(compose(f, g), End::Zero) == germ(f, End::Zero) + germ(g, End::Zero));
    CHECK(germ(compose(f, g), End::One) == germ(f, End::One) + germ(g, End::One));
    CHECK(check_membership(compose(f, g), ThompsonGroup::F).member);
    const PLMap fg = compose(f, g);
    CHECK(pointwise_equal(fg, compose(f, g), 12));
    for (const auto& x : grid(9)) CHECK(fg(x) == f(g(x)));
    // Equality of normalized pieces matches pointwise equality on a fine grid.
    CHECK((f == g) == pointwise_equal(f, g, 12));
    Dyadic x = Dyadic::normalize(static_cast<long>(rng.uniform(1024)), 10);
    Dyadic y = Dyadic::normalize(static_cast<long>(rng.uniform(1024)), 10);
    if (x < y) CHECK(f(x) < f(y));
  }
}

TEST_CASE("random circle maps: laws") {
  SplitMix64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const PLMap f = random_t_element(rng, 6), g = random_t_element(rng, 6);
    CHECK(check_membership(f, ThompsonGroup::T).member);
    CHECK(compose(f, invert(f)).is_identity());
    const PLMap fg = compose(f, g);
    CHECK(check_membership(fg, ThompsonGroup::T).member);
    for (long k = 0; k < 64; ++k) {
      CirclePoint x(Dyadic::normalize(k, 6));
      CHECK(fg(x) == f(g(x)));
    }
  }
}
