#pragma once

#include <string>
#include <vector>

namespace bclab {

/// Finite group given by its multiplication table; elements are 0..order-1.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 10000;

  /// Validates closure, associativity, identity and inverses.
  static FiniteGroup from_table(std::string name, int order, std::vector<int> table);

  static FiniteGroup cyclic(int n);
  /// Permutations of {0..n-1} in lexicographic order, n <= 5; element 0 is the identity.
  static FiniteGroup symmetric(int n);
  static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);
  /// `C<n>`, `S<n>`, or factors joined by `x`, e.g. `C2xC2`.
  static FiniteGroup parse(const std::string& name);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int pow(int a, long e) const;
  int element_order(int a) const;
  bool is_abelian() const;

 private:
  FiniteGroup() = default;
  void validate(bool full_associativity);

  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

}  // namespace bclab
