#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "bclab/bar_complex.hpp"
#include "bclab/finite_group.hpp"

namespace bclab {

enum class SolveMode { Exact, Float };

/// Rational simplex is offered up to this many primal tuples |G|^(n+1).
inline constexpr long kMaxExactVariables = 10'000;
/// Floating simplex refuses dense tableaux above this many entries.
inline constexpr long kMaxFloatTableau = 20'000'000;
inline constexpr double kCertificateTolerance = 1e-9;

/// Optimality evidence for one LP solve. In exact mode every number below is
/// the double image of an exact rational, and certification demands zeros.
struct LPCertificate {
  double primal_value = 0;
  double dual_value = 0;
  double gap = 0;
  /// Recomputed from the returned primitive through the complex, not the LP rows.
  double feasibility_residual = 0;
  double dual_infeasibility = 0;
  bool exact = false;
  mpq_class primal_exact = 0;
  mpq_class dual_exact = 0;
  bool certified = false;
};

struct L1Primitive {
  Chain primitive{0};
  mpq_class value = 0;  // l1 norm of the primitive
  LPCertificate certificate;
};

/// Minimal l1 primitive c of a boundary z: d c = z.
/// Throws PreconditionError if z is not a cycle or not a boundary,
/// SizeCapExceeded above the mode's cap.
L1Primitive min_l1_primitive(const FiniteGroup& G, const Chain& z, SolveMode mode = SolveMode::Exact);

struct LinfPrimitive {
  Cochain primitive;
  mpq_class value = 0;  // sup norm of the primitive
  LPCertificate certificate;
};

/// Minimal sup-norm invariant primitive b of an invariant coboundary c: delta b = c.
LinfPrimitive min_linf_primitive(const FiniteGroup& G, const Cochain& c, SolveMode mode = SolveMode::Exact);

/// Sampled lower bound; ratios[i] is the optimum ratio of the i-th nonzero sample.
struct Estimate {
  int samples = 0;
  int nonzero_samples = 0;
  mpq_class bound_exact = 0;
  double bound = 0;
  std::vector<mpq_class> ratios;
  bool certified = true;
  double max_gap = 0;
  double max_residual = 0;
};

/// max over z = d w (w with coefficients uniform in {-1,0,1}) of min ||c||_1 / ||z||_1.
Estimate ubc_estimate(const FiniteGroup& G, int degree, int samples, std::uint64_t seed,
                      SolveMode mode = SolveMode::Exact);

/// max over c = delta b (b random invariant) of min ||b'||_inf / ||c||_inf.
Estimate modulus_estimate(const FiniteGroup& G, int degree, int samples, std::uint64_t seed,
                          SolveMode mode = SolveMode::Exact);

/// Pushforward of a chain along a map of element indices (checked to be a homomorphism).
Chain pushforward(const FiniteGroup& H, const FiniteGroup& G, const std::vector<int>& hom, const Chain& z);

/// Per-instance primitives along a homomorphism H -> G: samples boundaries z in H and
/// bounds min ||c||_1 over primitives in G of hom_*(z), relative to ||z||_1.
Estimate ubc_along_homomorphism(const FiniteGroup& H, const FiniteGroup& G, const std::vector<int>& hom,
                                int degree, int samples, std::uint64_t seed,
                                SolveMode mode = SolveMode::Exact);

}  // namespace bclab
