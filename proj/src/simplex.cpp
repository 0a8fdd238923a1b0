#include "bclab/simplex.hpp"

#include <cmath>

namespace bclab {

namespace {

template <class Scalar>
struct Tol;

template <>
struct Tol<mpq_class> {
  static bool pos(const mpq_class& v) { return sgn(v) > 0; }
  static bool neg(const mpq_class& v) { return sgn(v) < 0; }
  static bool zero(const mpq_class& v) { return sgn(v) == 0; }
};

template <>
struct Tol<double> {
  static constexpr double eps = 1e-11;
  static bool pos(double v) { return v > eps; }
  static bool neg(double v) { return v < -eps; }
  static bool zero(double v) { return std::fabs(v) <= eps; }
};

template <class Scalar>
class Tableau {
 public:
  Tableau(int m, int n) : m_(m), n_(n), width_(n + m + 1), t_(static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(n + m + 1)) {}

  Scalar& at(int i, int j) { return t_[static_cast<std::size_t>(i) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(j)]; }
  Scalar& rhs(int i) { return at(i, width_ - 1); }
  Scalar& cost(int j) { return at(m_, j); }

  void pivot(int r, int col) {
    Scalar p = at(r, col);
    for (int j = 0; j < width_; ++j)
      if (!Tol<Scalar>::zero(at(r, j))) at(r, j) /= p;
    for (int i = 0; i <= m_; ++i) {
      if (i == r) continue;
      Scalar f = at(i, col);
      if (Tol<Scalar>::zero(f)) continue;
      for (int j = 0; j < width_; ++j) {
        const Scalar& v = at(r, j);
        if (!Tol<Scalar>::zero(v)) at(i, j) -= f * v;
      }
    }
    basis_[static_cast<std::size_t>(r)] = col;
  }

  // Runs simplex iterations on the current cost row over columns [0, allowed).
  LPStatus optimize(int allowed, long& pivots) {
    int degenerate_run = 0;
    bool bland = false;
    for (long iter = 0; iter < 200000; ++iter) {
      int enter = -1;
      Scalar best = 0;
      for (int j = 0; j < allowed; ++j) {
        if (!Tol<Scalar>::neg(cost(j))) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (enter < 0 || cost(j) < best) {
          best = cost(j);
          enter = j;
        }
      }
      if (enter < 0) return LPStatus::Optimal;
      int leave = -1;
      Scalar ratio = 0;
      for (int i = 0; i < m_; ++i) {
        if (!Tol<Scalar>::pos(at(i, enter))) continue;
        Scalar q = rhs(i) / at(i, enter);
        if (leave < 0 || q < ratio || (q == ratio && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          ratio = q;
        }
      }
      if (leave < 0) return LPStatus::Unbounded;
      if (Tol<Scalar>::zero(ratio)) {
        if (++degenerate_run > 50) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(leave, enter);
      ++pivots;
    }
    return LPStatus::IterationLimit;
  }

  int m_;
  int n_;
  int width_;
  std::vector<Scalar> t_;
  std::vector<int> basis_;
};

}  // namespace

template <class Scalar>
LPResult<Scalar> solve_lp(const StandardLP<Scalar>& lp) {
  const int m = lp.rows;
  const int n = lp.cols;
  LPResult<Scalar> result;
  Tableau<Scalar> T(m, n);
  std::vector<int> flip(static_cast<std::size_t>(m), 1);
  T.basis_.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (Tol<Scalar>::neg(lp.b[static_cast<std::size_t>(i)])) flip[static_cast<std::size_t>(i)] = -1;
    const Scalar s = flip[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) T.at(i, j) = s * lp.a(i, j);
    T.at(i, n + i) = 1;
    T.rhs(i) = s * lp.b[static_cast<std::size_t>(i)];
    T.basis_[static_cast<std::size_t>(i)] = n + i;
  }
  // Phase 1: minimize the sum of artificials.
  for (int j = 0; j < n; ++j) {
    Scalar s = 0;
    for (int i = 0; i < m; ++i) s -= T.at(i, j);
    T.cost(j) = s;
  }
  {
    Scalar s = 0;
    for (int i = 0; i < m; ++i) s -= T.rhs(i);
    T.at(m, T.width_ - 1) = s;
  }
  LPStatus st = T.optimize(n, result.pivots);
  if (st != LPStatus::Optimal) {
    result.status = st;
    return result;
  }
  if (!Tol<Scalar>::zero(T.at(m, T.width_ - 1))) {
    result.status = LPStatus::Infeasible;
    return result;
  }
  // Drive zero-level artificials out of the basis where a structural column allows it.
  for (int i = 0; i < m; ++i) {
    if (T.basis_[static_cast<std::size_t>(i)] < n) continue;
    for (int j = 0; j < n; ++j) {
      if (!Tol<Scalar>::zero(T.at(i, j))) {
        T.pivot(i, j);
        ++result.pivots;
        break;
      }
    }
  }
  // Phase 2 cost row: reduced costs c_j - c_B B^-1 A_j, artificials cost 0.
  for (int j = 0; j < T.width_; ++j) {
    Scalar s = j < n ? lp.c[static_cast<std::size_t>(j)] : Scalar(0);
    for (int i = 0; i < m; ++i) {
      int bj = T.basis_[static_cast<std::size_t>(i)];
      if (bj < n && !Tol<Scalar>::zero(lp.c[static_cast<std::size_t>(bj)])) s -= lp.c[static_cast<std::size_t>(bj)] * T.at(i, j);
    }
    T.at(m, j) = s;
  }
  st = T.optimize(n, result.pivots);
  result.status = st;
  if (st != LPStatus::Optimal) return result;

  result.x.assign(static_cast<std::size_t>(n), Scalar(0));
  for (int i = 0; i < m; ++i) {
    int bj = T.basis_[static_cast<std::size_t>(i)];
    if (bj < n) result.x[static_cast<std::size_t>(bj)] = T.rhs(i);
  }
  result.y.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    // Reduced cost of artificial i equals -y_i of the sign-normalized system.
    result.y[static_cast<std::size_t>(i)] = -T.at(m, n + i) * Scalar(flip[static_cast<std::size_t>(i)]);
  }
  Scalar obj = 0;
  for (int j = 0; j < n; ++j) obj += lp.c[static_cast<std::size_t>(j)] * result.x[static_cast<std::size_t>(j)];
  result.objective = obj;
  return result;
}

template LPResult<mpq_class> solve_lp(const StandardLP<mpq_class>&);
template LPResult<double> solve_lp(const StandardLP<double>&);

}  // namespace bclab
