#pragma once

#include <vector>

#include <gmpxx.h>

namespace bclab {

enum class LPStatus { Optimal, Infeasible, Unbounded, IterationLimit };

/// min c.x  subject to  A x = b, x >= 0, with A dense row-major (rows x cols).
template <class Scalar>
struct StandardLP {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> A;
  std::vector<Scalar> b;
  std::vector<Scalar> c;

  Scalar& a(int i, int j) { return A[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
  const Scalar& a(int i, int j) const {
    return A[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
  }
};

template <class Scalar>
struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  std::vector<Scalar> x;  // primal solution
  std::vector<Scalar> y;  // dual multipliers of the equality rows
  Scalar objective = 0;
  long pivots = 0;
};

/// Two-phase dense tableau simplex. Dantzig pricing with a switch to Bland's
/// rule after a run of degenerate pivots. With mpq_class every step is exact;
/// with double, entries below 1e-11 count as zero.
template <class Scalar>
LPResult<Scalar> solve_lp(const StandardLP<Scalar>& lp);

extern template LPResult<mpq_class> solve_lp(const StandardLP<mpq_class>&);
extern template LPResult<double> solve_lp(const StandardLP<double>&);

}  // namespace bclab
