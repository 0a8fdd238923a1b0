#include "bclab/ubc_opt.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <type_traits>

#include "bclab/errors.hpp"
#include "bclab/simplex.hpp"

namespace bclab {

namespace {

// Dense LP data kept in exact form; the float path converts at solve time.
struct RationalLP {
  int rows = 0;
  int cols = 0;
  std::vector<mpq_class> A;
  std::vector<mpq_class> b;
  std::vector<mpq_class> c;

  mpq_class& a(int i, int j) { return A[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
};

struct Solved {
  std::vector<mpq_class> x;
  LPCertificate certificate;
};

template <class S>
S convert(const mpq_class& v);
template <>
mpq_class convert(const mpq_class& v) {
  return v;
}
template <>
double convert(const mpq_class& v) {
  return v.get_d();
}

mpq_class to_exact(const mpq_class& v) { return v; }
mpq_class to_exact(double v) { return mpq_class(v); }

double to_double(const mpq_class& v) { return v.get_d(); }
double to_double(double v) { return v; }

template <class S>
Solved run_lp(const RationalLP& src, const std::string& infeasible_message) {
  StandardLP<S> lp;
  lp.rows = src.rows;
  lp.cols = src.cols;
  lp.A.reserve(src.A.size());
  for (const auto& v : src.A) lp.A.push_back(convert<S>(v));
  for (const auto& v : src.b) lp.b.push_back(convert<S>(v));
  for (const auto& v : src.c) lp.c.push_back(convert<S>(v));

  LPResult<S> res = solve_lp(lp);
  if (res.status == LPStatus::Infeasible) throw PreconditionError(infeasible_message);
  if (res.status != LPStatus::Optimal) throw Error("simplex did not reach an optimal basis");

  S primal = 0;
  for (int j = 0; j < lp.cols; ++j) primal += lp.c[static_cast<std::size_t>(j)] * res.x[static_cast<std::size_t>(j)];
  S dual = 0;
  for (int i = 0; i < lp.rows; ++i) dual += lp.b[static_cast<std::size_t>(i)] * res.y[static_cast<std::size_t>(i)];
  // Dual feasibility: A^T y <= c componentwise.
  S worst = 0;
  for (int j = 0; j < lp.cols; ++j) {
    S s = 0;
    for (int i = 0; i < lp.rows; ++i) {
      const S& aij = lp.a(i, j);
      if (aij != 0) s += aij * res.y[static_cast<std::size_t>(i)];
    }
    S excess = s - lp.c[static_cast<std::size_t>(j)];
    if (excess > worst) worst = excess;
  }

  Solved out;
  out.x.reserve(res.x.size());
  for (const auto& v : res.x) out.x.push_back(to_exact(v));
  LPCertificate& cert = out.certificate;
  cert.exact = std::is_same_v<S, mpq_class>;
  cert.primal_exact = to_exact(primal);
  cert.dual_exact = to_exact(dual);
  cert.primal_value = to_double(primal);
  cert.dual_value = to_double(dual);
  cert.gap = std::fabs(to_double(primal - dual));
  cert.dual_infeasibility = to_double(worst);
  return out;
}

void finish_certificate(LPCertificate& cert, const mpq_class& residual) {
  cert.feasibility_residual = residual.get_d();
  if (cert.exact) {
    cert.certified = cert.primal_exact == cert.dual_exact && residual == 0 && cert.dual_infeasibility == 0;
  } else {
    cert.certified = cert.gap <= kCertificateTolerance && cert.feasibility_residual <= kCertificateTolerance &&
                     cert.dual_infeasibility <= kCertificateTolerance;
  }
}

// Indices of a maximal independent subset of integer rows, by elimination modulo
// a large prime. Independence mod p implies independence over Q; a rank drop mod p
// is caught later by the solver-independent residual check.
std::vector<int> independent_rows(const std::vector<std::vector<std::pair<int, long>>>& rows, int cols) {
  constexpr std::uint64_t p = 2147483647ULL;
  auto mod = [&](long v) { return static_cast<std::uint64_t>(((v % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p)); };
  auto inverse = [&](std::uint64_t a) {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<int> pivots;
  std::vector<int> kept;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    std::vector<std::uint64_t> v(static_cast<std::size_t>(cols), 0);
    for (auto [j, a] : rows[r]) v[static_cast<std::size_t>(j)] = (v[static_cast<std::size_t>(j)] + mod(a)) % p;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::uint64_t f = v[static_cast<std::size_t>(pivots[k])];
      if (f == 0) continue;
      const auto& bk = basis[k];
      for (int j = 0; j < cols; ++j)
        if (bk[static_cast<std::size_t>(j)]) v[static_cast<std::size_t>(j)] = (v[static_cast<std::size_t>(j)] + (p - f) * bk[static_cast<std::size_t>(j)]) % p;
    }
    int pivot = -1;
    for (int j = 0; j < cols; ++j)
      if (v[static_cast<std::size_t>(j)]) {
        pivot = j;
        break;
      }
    if (pivot < 0) continue;
    std::uint64_t inv = inverse(v[static_cast<std::size_t>(pivot)]);
    for (auto& e : v) e = e * inv % p;
    basis.push_back(std::move(v));
    pivots.push_back(pivot);
    kept.push_back(static_cast<int>(r));
  }
  return kept;
}

std::vector<int> all_rows(std::size_t n) {
  std::vector<int> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<int>(i);
  return r;
}

void check_float_size(long rows, long cols) {
  if (rows * (rows + cols) > kMaxFloatTableau)
    throw SizeCapExceeded("LP tableau of " + std::to_string(rows) + " x " + std::to_string(rows + cols) +
                          " exceeds the floating-point cap");
}

mpq_class chain_linf(const Chain& c) {
  mpq_class m = 0;
  for (const auto& [t, v] : c.terms()) m = std::max(m, mpq_class(abs(v)));
  return m;
}

}  // namespace

L1Primitive min_l1_primitive(const FiniteGroup& G, const Chain& z, SolveMode mode) {
  const int n = z.degree();
  if (n < 0) throw PreconditionError("chain degree must be >= 0");
  if (!boundary(G, z).is_zero()) throw PreconditionError("z is not a cycle");
  L1Primitive out;
  out.primitive = Chain(n + 1);
  const long N = checked_power(G.order(), n + 1);
  if (mode == SolveMode::Exact && N > kMaxExactVariables)
    throw SizeCapExceeded("rational mode supports |G|^(n+1) <= 10^4 (here " + std::to_string(N) + ")");
  if (z.is_zero()) {
    out.certificate.exact = mode == SolveMode::Exact;
    out.certificate.certified = true;
    return out;
  }
  const long M = checked_power(G.order(), n);

  // Sparse boundary matrix, row = degree-n tuple, column = degree-(n+1) tuple.
  std::vector<std::vector<std::pair<int, long>>> rows(static_cast<std::size_t>(M));
  for (long j = 0; j < N; ++j) {
    Chain unit(n + 1);
    unit.add(decode_tuple(static_cast<std::size_t>(j), G.order(), n + 1), 1);
    const Chain faces = boundary(G, unit);
    for (const auto& [t, v] : faces.terms())
      rows[encode_tuple(t, G.order())].push_back({static_cast<int>(j), v.get_num().get_si()});
  }

  auto attempt = [&](const std::vector<int>& keep) {
    RationalLP lp;
    lp.rows = static_cast<int>(keep.size());
    lp.cols = static_cast<int>(2 * N);
    if (mode == SolveMode::Float) check_float_size(lp.rows, lp.cols);
    lp.A.assign(static_cast<std::size_t>(lp.rows) * static_cast<std::size_t>(lp.cols), 0);
    for (int i = 0; i < lp.rows; ++i) {
      for (auto [j, a] : rows[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])]) {
        lp.a(i, j) += a;
        lp.a(i, j + static_cast<int>(N)) -= a;
      }
      lp.b.push_back(z.coefficient(decode_tuple(static_cast<std::size_t>(keep[static_cast<std::size_t>(i)]), G.order(), n)));
    }
    lp.c.assign(static_cast<std::size_t>(lp.cols), 1);
    const std::string msg = "z is not a boundary";
    Solved s = mode == SolveMode::Exact ? run_lp<mpq_class>(lp, msg) : run_lp<double>(lp, msg);
    Chain c(n + 1);
    for (long j = 0; j < N; ++j) {
      mpq_class v = s.x[static_cast<std::size_t>(j)] - s.x[static_cast<std::size_t>(j + N)];
      c.add(decode_tuple(static_cast<std::size_t>(j), G.order(), n + 1), v);
    }
    mpq_class residual = chain_linf(boundary(G, c) - z);
    finish_certificate(s.certificate, residual);
    out.primitive = std::move(c);
    out.value = out.primitive.l1_norm();
    out.certificate = s.certificate;
    return residual;
  };

  std::vector<int> keep = independent_rows(rows, static_cast<int>(N));
  mpq_class residual = attempt(keep);
  if (!out.certificate.certified && keep.size() < rows.size() && residual != 0) attempt(all_rows(rows.size()));
  return out;
}

LinfPrimitive min_linf_primitive(const FiniteGroup& G, const Cochain& c, SolveMode mode) {
  const int n = c.degree();
  if (n < 1) throw PreconditionError("a primitive needs cochain degree >= 1");
  if (!is_invariant(G, c)) throw PreconditionError("c is not invariant");
  if (!coboundary(G, c).is_zero()) throw PreconditionError("c is not a cocycle");

  const int order = G.order();
  LinfPrimitive out{Cochain(G, n - 1), 0, {}};
  out.primitive.set_invariant_unchecked(true);
  const long m = checked_power(order, n - 1);
  if (mode == SolveMode::Exact && 2 * m + 1 > kMaxExactVariables)
    throw SizeCapExceeded("rational mode supports at most 10^4 LP variables");
  if (c.is_zero()) {
    out.certificate.exact = mode == SolveMode::Exact;
    out.certificate.certified = true;
    return out;
  }
  const long R = checked_power(order, n);
  const InhomogeneousCochain target = to_inhomogeneous(G, c);

  // delta in inhomogeneous coordinates: row (g1..gn) reads b on the faces
  // (g2..gn), (..g_i g_{i+1}..), (g1..g_{n-1}) with alternating signs.
  std::vector<std::vector<std::pair<int, long>>> rows(static_cast<std::size_t>(R));
  for (long r = 0; r < R; ++r) {
    GroupTuple g = decode_tuple(static_cast<std::size_t>(r), order, n);
    std::map<int, long> entries;
    for (int i = 0; i <= n; ++i) {
      GroupTuple face;
      for (int k = 0; k < n; ++k) {
        if (i == 0 && k == 0) continue;
        if (i == n && k == n - 1) continue;
        if (i > 0 && i < n && k == i) {
          face.back() = G.mul(face.back(), g[static_cast<std::size_t>(k)]);
          continue;
        }
        face.push_back(g[static_cast<std::size_t>(k)]);
      }
      entries[static_cast<int>(encode_tuple(face, order))] += (i % 2 == 0) ? 1 : -1;
    }
    for (auto [j, a] : entries)
      if (a != 0) rows[static_cast<std::size_t>(r)].push_back({j, a});
  }

  auto attempt = [&](const std::vector<int>& keep) {
    // Variables u (m), w (m), t with b = u - t: E u - (E 1) t = c, u + w = 2t.
    RationalLP lp;
    const int k = static_cast<int>(keep.size());
    lp.rows = k + static_cast<int>(m);
    lp.cols = static_cast<int>(2 * m + 1);
    const int tcol = static_cast<int>(2 * m);
    if (mode == SolveMode::Float) check_float_size(lp.rows, lp.cols);
    lp.A.assign(static_cast<std::size_t>(lp.rows) * static_cast<std::size_t>(lp.cols), 0);
    for (int i = 0; i < k; ++i) {
      long rowsum = 0;
      for (auto [j, a] : rows[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])]) {
        lp.a(i, j) += a;
        rowsum += a;
      }
      lp.a(i, tcol) = -rowsum;
      lp.b.push_back(target.values[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])]);
    }
    for (int i = 0; i < static_cast<int>(m); ++i) {
      lp.a(k + i, i) = 1;
      lp.a(k + i, static_cast<int>(m) + i) = 1;
      lp.a(k + i, tcol) = -2;
      lp.b.push_back(0);
    }
    lp.c.assign(static_cast<std::size_t>(lp.cols), 0);
    lp.c[static_cast<std::size_t>(tcol)] = 1;
    const std::string msg = "c is not a coboundary";
    Solved s = mode == SolveMode::Exact ? run_lp<mpq_class>(lp, msg) : run_lp<double>(lp, msg);
    InhomogeneousCochain phi;
    phi.degree = n - 1;
    phi.order = order;
    for (long i = 0; i < m; ++i)
      phi.values.push_back(s.x[static_cast<std::size_t>(i)] - s.x[static_cast<std::size_t>(tcol)]);
    Cochain b = to_homogeneous(G, phi);
    b.set_invariant_unchecked(true);
    Cochain d = coboundary(G, b);
    mpq_class residual = 0;
    for (std::size_t i = 0; i < d.size(); ++i) residual = std::max(residual, mpq_class(abs(d[i] - c[i])));
    finish_certificate(s.certificate, residual);
    out.value = b.linf_norm();
    out.primitive = std::move(b);
    out.certificate = s.certificate;
    return residual;
  };

  std::vector<int> keep = independent_rows(rows, static_cast<int>(m));
  mpq_class residual = attempt(keep);
  if (!out.certificate.certified && keep.size() < rows.size() && residual != 0) attempt(all_rows(rows.size()));
  return out;
}

namespace {

void record(Estimate& e, const mpq_class& ratio, const LPCertificate& cert) {
  ++e.nonzero_samples;
  e.ratios.push_back(ratio);
  if (ratio > e.bound_exact) e.bound_exact = ratio;
  e.bound = e.bound_exact.get_d();
  e.certified = e.certified && cert.certified;
  e.max_gap = std::max(e.max_gap, cert.gap);
  e.max_residual = std::max(e.max_residual, cert.feasibility_residual);
}

}  // namespace

Estimate ubc_estimate(const FiniteGroup& G, int degree, int samples, std::uint64_t seed, SolveMode mode) {
  if (degree < 1) throw PreconditionError("UBC degree must be >= 1");
  Estimate e;
  e.samples = samples;
  SplitMix64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    Chain z = boundary(G, random_chain(G, degree + 1, rng));
    if (z.is_zero()) continue;
    L1Primitive p = min_l1_primitive(G, z, mode);
    record(e, p.value / z.l1_norm(), p.certificate);
  }
  return e;
}

Estimate modulus_estimate(const FiniteGroup& G, int degree, int samples, std::uint64_t seed, SolveMode mode) {
  if (degree < 1) throw PreconditionError("modulus degree must be >= 1");
  Estimate e;
  e.samples = samples;
  SplitMix64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    Cochain c = coboundary(G, random_invariant_cochain(G, degree - 1, rng));
    if (c.is_zero()) continue;
    LinfPrimitive p = min_linf_primitive(G, c, mode);
    record(e, p.value / c.linf_norm(), p.certificate);
  }
  return e;
}

Chain pushforward(const FiniteGroup& H, const FiniteGroup& G, const std::vector<int>& hom, const Chain& z) {
  if (static_cast<int>(hom.size()) != H.order()) throw PreconditionError("homomorphism table has wrong length");
  for (int v : hom)
    if (v < 0 || v >= G.order()) throw PreconditionError("homomorphism image out of range");
  for (int a = 0; a < H.order(); ++a)
    for (int b = 0; b < H.order(); ++b)
      if (hom[static_cast<std::size_t>(H.mul(a, b))] != G.mul(hom[static_cast<std::size_t>(a)], hom[static_cast<std::size_t>(b)]))
        throw PreconditionError("map is not a homomorphism");
  Chain out(z.degree());
  for (const auto& [t, v] : z.terms()) {
    GroupTuple u;
    for (int x : t) u.push_back(hom[static_cast<std::size_t>(x)]);
    out.add(u, v);
  }
  return out;
}

Estimate ubc_along_homomorphism(const FiniteGroup& H, const FiniteGroup& G, const std::vector<int>& hom, int degree,
                                int samples, std::uint64_t seed, SolveMode mode) {
  if (degree < 1) throw PreconditionError("UBC degree must be >= 1");
  Estimate e;
  e.samples = samples;
  SplitMix64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    Chain z = boundary(H, random_chain(H, degree + 1, rng));
    if (z.is_zero()) continue;
    L1Primitive p = min_l1_primitive(G, pushforward(H, G, hom, z), mode);
    record(e, p.value / z.l1_norm(), p.certificate);
  }
  return e;
}

}  // namespace bclab
