#include "bclab/finite_group.hpp"

#include <algorithm>
#include <numeric>

#include "bclab/errors.hpp"

namespace bclab {

namespace {

// Factory-built groups are associative by construction; the cubic scan is
// kept for every group of this size or smaller.
constexpr long kFullAssociativityLimit = 500;

}  // namespace

void FiniteGroup::validate(bool full_associativity) {
  const int n = order_;
  if (n < 1) throw PreconditionError("group order must be >= 1");
  if (n > kMaxOrder) throw SizeCapExceeded("group order " + std::to_string(n) + " exceeds 10^4");
  if (table_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw PreconditionError("multiplication table has wrong size");
  for (int v : table_)
    if (v < 0 || v >= n) throw PreconditionError("multiplication table not closed");
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw PreconditionError("no two-sided identity");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inverse_[static_cast<std::size_t>(a)] < 0)
      throw PreconditionError("element " + std::to_string(a) + " has no two-sided inverse");
  }
  if (full_associativity || n <= kFullAssociativityLimit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw PreconditionError("table is not associative at (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ")");
  }
}

FiniteGroup FiniteGroup::from_table(std::string name, int order, std::vector<int> table) {
  if (order > kMaxOrder) throw SizeCapExceeded("group order " + std::to_string(order) + " exceeds 10^4");
  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = order;
  g.table_ = std::move(table);
  g.validate(true);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw PreconditionError("cyclic group needs n >= 1");
  if (n > kMaxOrder) throw SizeCapExceeded("group order " + std::to_string(n) + " exceeds 10^4");
  FiniteGroup g;
  g.name_ = "C" + std::to_string(n);
  g.order_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table_[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  g.validate(false);
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw PreconditionError("symmetric group supported for 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  FiniteGroup g;
  g.name_ = "S" + std::to_string(n);
  g.order_ = m;
  g.table_.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      // (a*b)(i) = a(b(i))
      for (int i = 0; i < n; ++i)
        comp[static_cast<std::size_t>(i)] = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
      auto it = std::lower_bound(perms.begin(), perms.end(), comp);
      g.table_[static_cast<std::size_t>(a * m + b)] = static_cast<int>(it - perms.begin());
    }
  }
  g.validate(false);
  return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
  const long n = static_cast<long>(g.order_) * h.order_;
  if (n > kMaxOrder) throw SizeCapExceeded("group order " + std::to_string(n) + " exceeds 10^4");
  FiniteGroup p;
  p.name_ = g.name_ + "x" + h.name_;
  p.order_ = static_cast<int>(n);
  p.table_.resize(static_cast<std::size_t>(n * n));
  const int hn = h.order_;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      p.table_[static_cast<std::size_t>(a * n + b)] =
          g.mul(a / hn, b / hn) * hn + h.mul(a % hn, b % hn);
  p.validate(false);
  return p;
}

FiniteGroup FiniteGroup::parse(const std::string& name) {
  auto x = name.find('x');
  if (x != std::string::npos) return product(parse(name.substr(0, x)), parse(name.substr(x + 1)));
  if (name.size() < 2 || (name[0] != 'C' && name[0] != 'S'))
    throw ParseError("unknown group '" + name + "' (expected C<n>, S<n> or products like C2xC2)");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("bad group size in '" + name + "'");
  }
  return name[0] == 'C' ? cyclic(n) : symmetric(n);
}

int FiniteGroup::pow(int a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int result = identity_;
  int base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

}  // namespace bclab
