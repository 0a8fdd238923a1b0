#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "bclab/finite_group.hpp"
#include "bclab/rng.hpp"

namespace bclab {

using GroupTuple = std::vector<int>;

/// Upper bound on dense array sizes |G|^(n+1).
inline constexpr long kMaxCochainEntries = 10'000'000;

/// |G|^exp, throwing SizeCapExceeded above kMaxCochainEntries.
long checked_power(int base, int exp);

/// Big-endian index of a tuple over {0..order-1}, and its inverse.
std::size_t encode_tuple(const GroupTuple& t, int order);
GroupTuple decode_tuple(std::size_t index, int order, int length);

/// Finitely supported rational chain in the inhomogeneous bar complex.
/// Zero coefficients are never stored.
class Chain {
 public:
  explicit Chain(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<GroupTuple, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const GroupTuple& t, const mpq_class& coeff);
  mpq_class coefficient(const GroupTuple& t) const;
  mpq_class l1_norm() const;

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend bool operator==(const Chain& a, const Chain& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_;
  std::map<GroupTuple, mpq_class> terms_;
};

/// Textbook differential: d(g1..gn) = (g2..gn) + sum (-1)^i (..g_i g_{i+1}..) + (-1)^n (g1..g_{n-1}).
Chain boundary(const FiniteGroup& G, const Chain& z);

/// Pushforward along x -> g^-1 x g.
Chain conjugation_pushforward(const FiniteGroup& G, int g, const Chain& z);

/// Chain homotopy (g1..gn) -> sum_{j=1}^{n+1} (-1)^{j+1} (g1..g_{j-1}, g, g^-1 g_j g, .., g^-1 g_n g).
/// It satisfies  d theta + theta d = conjugation_pushforward(g) - id  and has l1 norm <= n+1.
Chain theta(const FiniteGroup& G, int g, const Chain& z);

/// Chain with coefficients uniform in {-1,0,1} over all tuples of the given degree.
Chain random_chain(const FiniteGroup& G, int degree, SplitMix64& rng);


/// Dense homogeneous cochain on G^(degree+1) with exact values.
class Cochain {
 public:
  /// Zero cochain; throws SizeCapExceeded above kMaxCochainEntries.
  Cochain(const FiniteGroup& G, int degree);

  int degree() const { return degree_; }
  int group_order() const { return order_; }
  std::size_t size() const { return values_.size(); }

  const mpq_class& operator[](std::size_t i) const { return values_[i]; }
  mpq_class& operator[](std::size_t i) { return values_[i]; }
  const mpq_class& at(const GroupTuple& t) const { return values_[index(t)]; }
  mpq_class& at(const GroupTuple& t) { return values_[index(t)]; }

  std::size_t index(const GroupTuple& t) const;
  GroupTuple tuple(std::size_t index) const;

  bool invariant() const { return invariant_; }
  /// Checks c(g.t) = c(t) for every g and t, then sets the flag. Throws if not invariant.
  void mark_invariant(const FiniteGroup& G);
  void set_invariant_unchecked(bool v) { invariant_ = v; }

  mpq_class linf_norm() const;
  bool is_zero() const;

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.order_ == b.order_ && a.values_ == b.values_;
  }

 private:
  int degree_;
  int order_;
  std::vector<mpq_class> values_;
  bool invariant_ = false;
};

bool is_invariant(const FiniteGroup& G, const Cochain& c);

/// Homogeneous coboundary; preserves the invariance flag.
Cochain coboundary(const FiniteGroup& G, const Cochain& c);

/// Invariant homogeneous cochain as a function of the inhomogeneous variables:
/// phi(g1..gn) = c(1, g1, g1 g2, ..., g1..gn).
struct InhomogeneousCochain {
  int degree = 0;
  int order = 0;
  std::vector<mpq_class> values;  // indexed like Cochain over G^degree
};

InhomogeneousCochain to_inhomogeneous(const FiniteGroup& G, const Cochain& c);
Cochain to_homogeneous(const FiniteGroup& G, const InhomogeneousCochain& phi);

/// Homogeneous chain (h0..hn) with rational coefficients.
using HomogeneousChain = std::map<GroupTuple, mpq_class>;
HomogeneousChain to_homogeneous(const FiniteGroup& G, const Chain& z);
/// Coinvariant reduction (h0..hn) -> (h0^-1 h1, ..., h_{n-1}^-1 h_n).
Chain to_inhomogeneous(const FiniteGroup& G, const HomogeneousChain& z, int degree);

/// Invariant cochain whose inhomogeneous values are uniform in {-1,0,1}.
Cochain random_invariant_cochain(const FiniteGroup& G, int degree, SplitMix64& rng);

/// The sequence k -> g^(2^k), split into a preperiod and a minimal cycle.
struct Pow2Orbit {
  std::vector<int> preperiod;
  std::vector<int> cycle;
  int at(std::size_t k) const {
    return k < preperiod.size() ? preperiod[k] : cycle[(k - preperiod.size()) % cycle.size()];
  }
};

Pow2Orbit pow2_orbit(const FiniteGroup& G, int g);

/// Degree-2 inverse of the coboundary on invariant cocycles:
///   psi(c)(g0,g1) = sum_k 2^-(k+1) c(1, x^(2^k), x^(2^(k+1))),  x = g0^-1 g1,
/// summed exactly as a finite prefix plus a closed-form geometric tail.
/// Throws PreconditionError unless c is an invariant 2-cocycle.
Cochain psi2(const FiniteGroup& G, const Cochain& c);

}  // namespace bclab
