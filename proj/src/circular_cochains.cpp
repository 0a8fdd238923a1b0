#include "bclab/circular_cochains.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bclab/errors.hpp"
#include "bclab/rng.hpp"

namespace bclab {

int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

void for_each_permutation(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    visit(perm, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

int orient_fk(int k, const CircTuple& t) {
  if (k < 0 || k % 2 != 0) throw PreconditionError("orientation sign ill-defined for odd k=" + std::to_string(k));
  if (t.size() != static_cast<std::size_t>(k) + 1)
    throw PreconditionError("orient_fk: expected " + std::to_string(k + 1) + " points");
  int inversions = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[j] < t[i]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

mpq_class TupleCochain::operator()(const CircTuple& t) const {
  if (t.size() != static_cast<std::size_t>(degree_) + 1)
    throw PreconditionError("cochain of degree " + std::to_string(degree_) + " evaluated on " +
                            std::to_string(t.size()) + " points");
  return fn_(t);
}

TupleCochain TupleCochain::orient(int k) {
  if (k < 0 || k % 2 != 0) throw PreconditionError("orientation sign ill-defined for odd k=" + std::to_string(k));
  return TupleCochain(k, [k](const CircTuple& t) { return mpq_class(orient_fk(k, t)); });
}

TupleCochain TupleCochain::constant(int degree, const mpq_class& value) {
  return TupleCochain(degree, [value](const CircTuple&) { return value; });
}

TupleCochain TupleCochain::from_function(int degree, Evaluator fn) {
  // User rules may return non-canonical fractions; exact == needs canonical form.
  return TupleCochain(degree, [fn = std::move(fn)](const CircTuple& t) -> mpq_class {
    mpq_class v = fn(t);
    v.canonicalize();
    return v;
  });
}

TupleCochain cup(const TupleCochain& a, const TupleCochain& b) {
  const int p = a.degree_;
  const int q = b.degree_;
  return TupleCochain(p + q, [a, b, p](const CircTuple& t) -> mpq_class {
    CircTuple front(t.begin(), t.begin() + p + 1);
    mpq_class x = a(front);
    if (x == 0) return x;
    CircTuple back(t.begin() + p, t.end());
    return x * b(back);
  });
}

TupleCochain alt(const TupleCochain& c) {
  const int n = c.degree_ + 1;
  mpz_class fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  mpq_class norm(1, fact);
  norm.canonicalize();
  return TupleCochain(c.degree_, [c, n, norm](const CircTuple& t) -> mpq_class {
    mpq_class sum = 0;
    CircTuple permuted(t.size());
    for_each_permutation(n, [&](const std::vector<int>& perm, int sign) {
      for (int i = 0; i < n; ++i) permuted[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      mpq_class v = c(permuted);
      if (sign > 0) sum += v; else sum -= v;
    });
    return sum * norm;
  });
}

TupleCochain delta_tuple(const TupleCochain& c) {
  return TupleCochain(c.degree_ + 1, [c](const CircTuple& t) -> mpq_class {
    mpq_class sum = 0;
    CircTuple face(t.size() - 1);
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::size_t w = 0;
      for (std::size_t j = 0; j < t.size(); ++j)
        if (j != i) face[w++] = t[j];
      mpq_class v = c(face);
      if (i % 2 == 0) sum += v; else sum -= v;
    }
    return sum;
  });
}

TupleCochain cup_power(const TupleCochain& c, int power) {
  TupleCochain out = TupleCochain::constant(0, mpq_class(1));
  for (int i = 0; i < power; ++i) out = cup(out, c);
  return out;
}

CircTuple random_circ_ordered(SplitMix64& rng, int size, int denominator_exp) {
  const std::uint64_t range = std::uint64_t{1} << denominator_exp;
  std::set<std::uint64_t> nums;
  while (nums.size() < static_cast<std::size_t>(size)) nums.insert(rng.uniform(range));
  CircTuple t;
  for (auto m : nums) t.emplace_back(Dyadic::normalize(mpz_class(static_cast<unsigned long>(m)), denominator_exp));
  std::rotate(t.begin(), t.begin() + static_cast<long>(rng.uniform(t.size())), t.end());
  return t;
}

namespace {

mpq_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return mpq_class(f);
}

}  // namespace

AltCupResult verify_alt_cup_identity(int k, int extra_tuples, std::uint64_t seed) {
  if (k < 1 || k > kMaxAltIdentityK) throw PreconditionError("k out of supported range");
  AltCupResult r;
  r.k = k;
  r.expected = mpq_class(mpz_class(1) << k) * factorial(k) / factorial(2 * k);
  r.expected.canonicalize();
  r.intermediate_expected = mpq_class(1, 2 * k - 1);
  r.intermediate_expected.canonicalize();

  const TupleCochain f2 = TupleCochain::orient(2);
  const TupleCochain f2k = TupleCochain::orient(2 * k);
  const TupleCochain full = alt(cup_power(f2, k));
  const TupleCochain step = alt(cup(f2, TupleCochain::orient(2 * (k - 1))));

  std::vector<CircTuple> tuples;
  CircTuple base;
  for (int i = 0; i <= 2 * k; ++i) base.emplace_back(Dyadic::normalize(mpz_class(i), 4));
  tuples.push_back(base);
  SplitMix64 rng(seed);
  for (int i = 0; i < extra_tuples; ++i) tuples.push_back(random_circ_ordered(rng, 2 * k + 1, 10));

  for (std::size_t i = 0; i < tuples.size(); ++i) {
    mpq_class ref = f2k(tuples[i]);
    mpq_class c = full(tuples[i]) / ref;
    mpq_class a = step(tuples[i]) / ref;
    if (i == 0) {
      r.coefficient = c;
      r.intermediate = a;
    } else if (c != r.coefficient || a != r.intermediate) {
      r.consistent = false;
    }
  }
  r.tuples_checked = tuples.size();
  r.pass = r.consistent && r.coefficient == r.expected && r.intermediate == r.intermediate_expected;
  return r;
}

mpq_class pullback(const TupleCochain& c, const CirclePoint& basepoint, const std::vector<PLMap>& gammas) {
  CircTuple t;
  t.reserve(gammas.size());
  for (const auto& g : gammas) {
    if (g.domain() == Domain::Interval) {
      t.push_back(mod1(g.lift(basepoint.rep())));
    } else {
      t.push_back(g(basepoint));
    }
  }
  return c(t);
}

mpq_class orientation_cocycle(const CirclePoint& basepoint, const PLMap& g0, const PLMap& g1, const PLMap& g2) {
  return pullback(TupleCochain::orient(2), basepoint, {g0, g1, g2});
}

mpq_class euler_cocycle(const CirclePoint& basepoint, const PLMap& g0, const PLMap& g1, const PLMap& g2) {
  return orientation_cocycle(basepoint, g0, g1, g2) / 2;
}

}  // namespace bclab
