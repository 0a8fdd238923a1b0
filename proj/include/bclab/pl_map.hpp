#pragma once

#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bclab/dyadic.hpp"

namespace bclab {

enum class Domain { Interval, Circle };

/// One affine piece x -> 2^slope_exp * x + offset on [left, next left).
struct Piece {
  Dyadic left;
  long slope_exp = 0;
  Dyadic offset;

  Dyadic apply(const Dyadic& x) const { return x.mul_pow2(slope_exp) + offset; }
  friend bool operator==(const Piece&, const Piece&) = default;
};

/// A condition failed by a candidate piece list, with where it fails.
struct Violation {
  std::string condition;
  std::string location;
};

/// Piecewise-linear homeomorphism of [0,1] or R/Z with dyadic breakpoints and
/// power-of-2 slopes.
///
/// Circle maps are stored as a lift F on [0,1] with F(0) in [0,1) and
/// F(1) = F(0) + 1; evaluation outside [0,1] uses F(x + 1) = F(x) + 1.
/// Instances are always valid and normalized (no two adjacent pieces share
/// slope and offset), so == is equality of maps.
class PLMap {
 public:
  static PLMap identity(Domain domain = Domain::Interval);
  /// Rigid rotation x -> x + a of R/Z.
  static PLMap rotation(const Dyadic& a);
  /// Validates and normalizes. Throws PreconditionError naming the first violation.
  static PLMap from_pieces(Domain domain, std::vector<Piece> pieces);

  /// Builds a map from breakpoints (sorted, first is 0) and exact callbacks for
  /// the lift value at a breakpoint and the slope exponent inside a segment.
  static PLMap build(Domain domain, std::vector<Dyadic> breakpoints,
                     const std::function<Dyadic(const Dyadic&)>& value_at,
                     const std::function<long(const Dyadic&)>& slope_inside);

  Domain domain() const { return domain_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  /// Lift value. Interval maps accept x in [0,1] only; circle lifts accept any x.
  Dyadic lift(const Dyadic& x) const;
  /// Slope exponent of the piece containing x (right-hand slope).
  long slope_exp_at(const Dyadic& x) const;
  /// Inverse of the lift.
  Dyadic lift_inverse(const Dyadic& y) const;

  /// Interval evaluation; throws PreconditionError when x is outside [0,1].
  Dyadic operator()(const Dyadic& x) const;
  CirclePoint operator()(const CirclePoint& x) const;

  bool is_identity() const;

  friend bool operator==(const PLMap& a, const PLMap& b) {
    return a.domain_ == b.domain_ && a.pieces_ == b.pieces_;
  }

 private:
  PLMap(Domain domain, std::vector<Piece> pieces);
  std::size_t piece_index(const Dyadic& x) const;
  std::size_t image_index(const Dyadic& y) const;

  Domain domain_ = Domain::Interval;
  std::vector<Piece> pieces_;
  std::vector<Dyadic> images_;  // lift(left) per piece
};

/// x -> f(g(x)).
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);
/// [f, g] = f^-1 g^-1 f g, evaluated as composition (g applied first).
PLMap commutator(const PLMap& f, const PLMap& g);

inline constexpr const char* kCommutatorConvention = "[a,b] = a^-1 b^-1 a b";

/// Checks the structural invariants of a raw piece list; empty means valid.
std::vector<Violation> structural_violations(Domain domain, const std::vector<Piece>& pieces);

enum class ThompsonGroup { F, T };

struct MembershipReport {
  bool member = false;
  std::vector<Violation> violations;
};

MembershipReport check_membership(Domain domain, const std::vector<Piece>& pieces,
                                  ThompsonGroup group);
MembershipReport check_membership(const PLMap& f, ThompsonGroup group);

enum class End { Zero, One };

/// log2 of the slope at 0 or 1. Throws PreconditionError if f is not in F.
long germ(const PLMap& f, End end);

/// Open interval with rational endpoints; fixed points of dyadic maps need not be dyadic.
struct OpenInterval {
  mpq_class lo;
  mpq_class hi;
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Maximal open subintervals of [0,1] on which f(x) != x (mod 1 for circle
/// maps). Empty iff f is the identity.
std::vector<OpenInterval> support(const PLMap& f);

}  // namespace bclab
