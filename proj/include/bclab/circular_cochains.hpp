#pragma once

#include <functional>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "bclab/dyadic.hpp"
#include "bclab/pl_map.hpp"
#include "bclab/rng.hpp"

namespace bclab {

using CircTuple = std::vector<CirclePoint>;

/// Sign of the permutation sorting t circularly; 0 if t has a repeat.
/// k = t.size() - 1 must be even, otherwise the sign is ill-defined.
int orient_fk(int k, const CircTuple& t);

/// Function on (degree+1)-tuples of circle points, evaluated pointwise.
///
/// The orbit is infinite, so cochains are expression trees rather than
/// tables. Values are exact rationals.
class TupleCochain {
 public:
  using Evaluator = std::function<mpq_class(const CircTuple&)>;

  static TupleCochain orient(int k);
  static TupleCochain constant(int degree, const mpq_class& value);
  /// Arbitrary rule, e.g. a test indicator.
  static TupleCochain from_function(int degree, Evaluator fn);

  int degree() const { return degree_; }
  /// Evaluates on a tuple of length degree()+1; throws PreconditionError otherwise.
  mpq_class operator()(const CircTuple& t) const;

  friend TupleCochain cup(const TupleCochain& a, const TupleCochain& b);
  friend TupleCochain alt(const TupleCochain& c);
  friend TupleCochain delta_tuple(const TupleCochain& c);

 private:
  TupleCochain(int degree, Evaluator fn) : degree_(degree), fn_(std::move(fn)) {}
  int degree_ = 0;
  Evaluator fn_;
};

/// (a ∪ b)(t_0..t_{p+q}) = a(t_0..t_p) * b(t_p..t_{p+q}).
TupleCochain cup(const TupleCochain& a, const TupleCochain& b);
/// Antisymmetrization with the 1/(k+1)! factor, so alt is a projection.
TupleCochain alt(const TupleCochain& c);
/// Simplicial coboundary by face omission.
TupleCochain delta_tuple(const TupleCochain& c);
/// c cupped with itself `power` times; power 0 gives the constant 1 in degree 0.
TupleCochain cup_power(const TupleCochain& c, int power);

/// Distinct points m/2^denominator_exp, in circular order from a random starting point.
CircTuple random_circ_ordered(SplitMix64& rng, int size, int denominator_exp);

/// Sign of a permutation given as images of 0..n-1.
int permutation_sign(const std::vector<int>& perm);

/// Calls visit(perm, sign) for every permutation of 0..n-1, in lexicographic order.
void for_each_permutation(int n, const std::function<void(const std::vector<int>&, int)>& visit);

struct AltCupResult {
  int k = 0;
  mpq_class coefficient;           // alt(f2^∪k) / f_2k on circularly ordered tuples
  mpq_class expected;              // 2^k k! / (2k)!
  mpq_class intermediate;          // alt(f2 ∪ f_{2(k-1)}) / f_2k
  mpq_class intermediate_expected; // 1 / (2k-1)
  std::size_t tuples_checked = 0;
  bool consistent = true;          // same ratio on every tested tuple
  bool pass = false;
};

/// Brute-force evaluation of the cup-power alternation identity over all
/// (2k+1)! permutations, on the tuple (0, 1/2^m, ..., 2k/2^m) and on
/// `extra_tuples` further circularly ordered tuples drawn from `seed`.
AltCupResult verify_alt_cup_identity(int k, int extra_tuples = 3, std::uint64_t seed = 1);

inline constexpr int kMaxAltIdentityK = 4;

/// c(g_0 x0, ..., g_k x0) for circle maps g_i in T.
mpq_class pullback(const TupleCochain& c, const CirclePoint& basepoint, const std::vector<PLMap>& gammas);

/// Orientation cocycle of the T-action through basepoint x0 (pullback of f_2).
mpq_class orientation_cocycle(const CirclePoint& basepoint, const PLMap& g0, const PLMap& g1, const PLMap& g2);

/// Bounded Euler cocycle representative, half the orientation cocycle.
mpq_class euler_cocycle(const CirclePoint& basepoint, const PLMap& g0, const PLMap& g1, const PLMap& g2);

}  // namespace bclab
