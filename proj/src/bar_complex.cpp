#include "bclab/bar_complex.hpp"

#include <unordered_map>

#include "bclab/errors.hpp"

namespace bclab {

void Chain::add(const GroupTuple& t, const mpq_class& coeff) {
  if (coeff == 0) return;
  if (static_cast<int>(t.size()) != degree_)
    throw PreconditionError("chain of degree " + std::to_string(degree_) + " given a tuple of length " +
                            std::to_string(t.size()));
  auto [it, inserted] = terms_.try_emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

mpq_class Chain::coefficient(const GroupTuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

mpq_class Chain::l1_norm() const {
  mpq_class s = 0;
  for (const auto& [t, c] : terms_) s += abs(c);
  return s;
}

Chain& Chain::operator+=(const Chain& o) {
  if (o.degree_ != degree_) throw PreconditionError("adding chains of different degrees");
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  if (o.degree_ != degree_) throw PreconditionError("subtracting chains of different degrees");
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

Chain boundary(const FiniteGroup& G, const Chain& z) {
  const int n = z.degree();
  if (n < 1) throw PreconditionError("boundary needs degree >= 1");
  Chain out(n - 1);
  for (const auto& [t, c] : z.terms()) {
    for (int i = 0; i <= n; ++i) {
      GroupTuple face;
      face.reserve(static_cast<std::size_t>(n - 1));
      if (i == 0) {
        face.assign(t.begin() + 1, t.end());
      } else if (i == n) {
        face.assign(t.begin(), t.end() - 1);
      } else {
        face.assign(t.begin(), t.begin() + (i - 1));
        face.push_back(G.mul(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]));
        face.insert(face.end(), t.begin() + (i + 1), t.end());
      }
      out.add(face, i % 2 == 0 ? c : mpq_class(-c));
    }
  }
  return out;
}

Chain conjugation_pushforward(const FiniteGroup& G, int g, const Chain& z) {
  Chain out(z.degree());
  const int gi = G.inv(g);
  for (const auto& [t, c] : z.terms()) {
    GroupTuple u(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) u[i] = G.mul(gi, G.mul(t[i], g));
    out.add(u, c);
  }
  return out;
}

Chain theta(const FiniteGroup& G, int g, const Chain& z) {
  const int n = z.degree();
  if (n < 0) throw PreconditionError("theta needs degree >= 0");
  Chain out(n + 1);
  const int gi = G.inv(g);
  GroupTuple u(static_cast<std::size_t>(n + 1));
  for (const auto& [t, c] : z.terms()) {
    for (int j = 1; j <= n + 1; ++j) {
      std::size_t w = 0;
      for (int i = 0; i < j - 1; ++i) u[w++] = t[static_cast<std::size_t>(i)];
      u[w++] = g;
      for (int i = j - 1; i < n; ++i) u[w++] = G.mul(gi, G.mul(t[static_cast<std::size_t>(i)], g));
      out.add(u, j % 2 == 1 ? c : mpq_class(-c));
    }
  }
  return out;
}

long checked_power(int base, int exp) {
  long size = 1;
  for (int i = 0; i < exp; ++i) {
    size *= base;
    if (size > kMaxCochainEntries)
      throw SizeCapExceeded("cochain array would exceed 10^7 entries (|G|=" + std::to_string(base) +
                            ", " + std::to_string(exp) + " coordinates)");
  }
  return size;
}

GroupTuple decode_tuple(std::size_t index, int order, int length) {
  GroupTuple t(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(order));
    index /= static_cast<std::size_t>(order);
  }
  return t;
}

std::size_t encode_tuple(const GroupTuple& t, int order) {
  std::size_t idx = 0;
  for (int v : t) idx = idx * static_cast<std::size_t>(order) + static_cast<std::size_t>(v);
  return idx;
}


Chain random_chain(const FiniteGroup& G, int degree, SplitMix64& rng) {
  const long size = checked_power(G.order(), degree);
  Chain z(degree);
  for (long i = 0; i < size; ++i) {
    int c = rng.ternary();
    if (c != 0) z.add(decode_tuple(static_cast<std::size_t>(i), G.order(), degree), mpq_class(c));
  }
  return z;
}

Cochain::Cochain(const FiniteGroup& G, int degree) : degree_(degree), order_(G.order()) {
  if (degree < 0) throw PreconditionError("cochain degree must be >= 0");
  values_.resize(static_cast<std::size_t>(checked_power(order_, degree + 1)));
}

std::size_t Cochain::index(const GroupTuple& t) const {
  if (static_cast<int>(t.size()) != degree_ + 1) throw PreconditionError("cochain tuple has wrong length");
  return encode_tuple(t, order_);
}

GroupTuple Cochain::tuple(std::size_t index) const { return decode_tuple(index, order_, degree_ + 1); }

mpq_class Cochain::linf_norm() const {
  mpq_class m = 0;
  for (const auto& v : values_)
    if (abs(v) > m) m = abs(v);
  return m;
}

bool Cochain::is_zero() const {
  for (const auto& v : values_)
    if (v != 0) return false;
  return true;
}

bool is_invariant(const FiniteGroup& G, const Cochain& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    GroupTuple t = c.tuple(i);
    GroupTuple u(t.size());
    for (int g = 0; g < G.order(); ++g) {
      for (std::size_t j = 0; j < t.size(); ++j) u[j] = G.mul(g, t[j]);
      if (c.at(u) != c[i]) return false;
    }
  }
  return true;
}

void Cochain::mark_invariant(const FiniteGroup& G) {
  if (!is_invariant(G, *this)) throw PreconditionError("cochain is not G-invariant");
  invariant_ = true;
}

Cochain coboundary(const FiniteGroup& G, const Cochain& c) {
  Cochain out(G, c.degree() + 1);
  const int len = c.degree() + 2;
  GroupTuple face(static_cast<std::size_t>(len - 1));
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    GroupTuple t = out.tuple(idx);
    mpq_class sum = 0;
    for (int i = 0; i < len; ++i) {
      std::size_t w = 0;
      for (int j = 0; j < len; ++j)
        if (j != i) face[w++] = t[static_cast<std::size_t>(j)];
      if (i % 2 == 0) sum += c.at(face); else sum -= c.at(face);
    }
    out[idx] = sum;
  }
  out.set_invariant_unchecked(c.invariant());
  return out;
}

InhomogeneousCochain to_inhomogeneous(const FiniteGroup& G, const Cochain& c) {
  if (!c.invariant()) throw PreconditionError("inhomogeneous reduction needs an invariant cochain");
  InhomogeneousCochain phi;
  phi.degree = c.degree();
  phi.order = G.order();
  phi.values.resize(static_cast<std::size_t>(checked_power(G.order(), c.degree())));
  GroupTuple h(static_cast<std::size_t>(c.degree() + 1));
  for (std::size_t i = 0; i < phi.values.size(); ++i) {
    GroupTuple g = decode_tuple(i, G.order(), c.degree());
    h[0] = G.identity();
    for (std::size_t j = 0; j < g.size(); ++j) h[j + 1] = G.mul(h[j], g[j]);
    phi.values[i] = c.at(h);
  }
  return phi;
}

Cochain to_homogeneous(const FiniteGroup& G, const InhomogeneousCochain& phi) {
  Cochain c(G, phi.degree);
  GroupTuple g(static_cast<std::size_t>(phi.degree));
  for (std::size_t i = 0; i < c.size(); ++i) {
    GroupTuple h = c.tuple(i);
    for (std::size_t j = 0; j < g.size(); ++j) g[j] = G.mul(G.inv(h[j]), h[j + 1]);
    c[i] = phi.values[encode_tuple(g, G.order())];
  }
  c.set_invariant_unchecked(true);
  return c;
}

HomogeneousChain to_homogeneous(const FiniteGroup& G, const Chain& z) {
  HomogeneousChain out;
  for (const auto& [t, c] : z.terms()) {
    GroupTuple h(t.size() + 1);
    h[0] = G.identity();
    for (std::size_t j = 0; j < t.size(); ++j) h[j + 1] = G.mul(h[j], t[j]);
    out[h] += c;
  }
  return out;
}

Chain to_inhomogeneous(const FiniteGroup& G, const HomogeneousChain& z, int degree) {
  Chain out(degree);
  for (const auto& [h, c] : z) {
    if (static_cast<int>(h.size()) != degree + 1) throw PreconditionError("homogeneous chain tuple has wrong length");
    GroupTuple g(static_cast<std::size_t>(degree));
    for (std::size_t j = 0; j < g.size(); ++j) g[j] = G.mul(G.inv(h[j]), h[j + 1]);
    out.add(g, c);
  }
  return out;
}

Cochain random_invariant_cochain(const FiniteGroup& G, int degree, SplitMix64& rng) {
  InhomogeneousCochain phi;
  phi.degree = degree;
  phi.order = G.order();
  phi.values.resize(static_cast<std::size_t>(checked_power(G.order(), degree)));
  for (auto& v : phi.values) v = rng.ternary();
  return to_homogeneous(G, phi);
}

Pow2Orbit pow2_orbit(const FiniteGroup& G, int g) {
  std::vector<int> seq;
  std::unordered_map<int, std::size_t> first_seen;
  int x = g;
  while (!first_seen.count(x)) {
    first_seen[x] = seq.size();
    seq.push_back(x);
    x = G.mul(x, x);
  }
  const std::size_t start = first_seen[x];
  Pow2Orbit orbit;
  orbit.preperiod.assign(seq.begin(), seq.begin() + static_cast<long>(start));
  orbit.cycle.assign(seq.begin() + static_cast<long>(start), seq.end());
  return orbit;
}

Cochain psi2(const FiniteGroup& G, const Cochain& c) {
  if (c.degree() != 2) throw PreconditionError("psi2 needs a degree-2 cochain");
  if (!c.invariant()) throw PreconditionError("psi2 needs an invariant cochain");
  if (!coboundary(G, c).is_zero()) throw PreconditionError("psi2 needs a cocycle (delta c != 0)");
  const int e = G.identity();
  std::vector<mpq_class> by_x(static_cast<std::size_t>(G.order()));
  for (int x = 0; x < G.order(); ++x) {
    Pow2Orbit orbit = pow2_orbit(G, x);
    const std::size_t P = orbit.preperiod.size();
    const std::size_t L = orbit.cycle.size();
    auto term = [&](std::size_t k) { return c.at({e, orbit.at(k), orbit.at(k + 1)}); };
    mpq_class sum = 0;
    mpq_class weight(1, 2);  // 2^-(k+1)
    for (std::size_t k = 0; k < P; ++k) {
      sum += weight * term(k);
      weight /= 2;
    }
    mpq_class block = 0;
    for (std::size_t j = 0; j < L; ++j) {
      block += weight * term(P + j);
      weight /= 2;
    }
    // The tail repeats with ratio 2^-L: multiply one period by 1 / (1 - 2^-L).
    mpz_class twoL = mpz_class(1) << static_cast<mp_bitcnt_t>(L);
    mpq_class tail_factor(twoL, twoL - 1);
    tail_factor.canonicalize();
    sum += block * tail_factor;
    by_x[static_cast<std::size_t>(x)] = sum;
  }
  Cochain b(G, 1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    GroupTuple t = b.tuple(i);
    b[i] = by_x[static_cast<std::size_t>(G.mul(G.inv(t[0]), t[1]))];
  }
  b.set_invariant_unchecked(true);
  return b;
}

}  // namespace bclab
