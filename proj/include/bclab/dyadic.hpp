#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bclab {

/// Exact element of Z[1/2], stored as num / 2^exp with exp = 0 or num odd.
///
/// The canonical form makes structural equality coincide with numeric
/// equality, so Dyadic can be used as a map key and compared with ==.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Dyadic(const mpz_class& value) : num_(value) {}

  /// Canonicalizes num / 2^exp. Negative exponents are folded into num.
  static Dyadic normalize(mpz_class num, long exp);

  /// 2^e for any integer e.
  static Dyadic pow2(long e);

  /// Parses `[-]p/2^e` or `[-]p`. Throws ParseError naming the bad token.
  static Dyadic parse(std::string_view text);

  /// Always emits `p/2^e`, the exact interchange form.
  std::string format() const;

  const mpz_class& num() const { return num_; }
  unsigned long exp() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }
  int sign() const { return sgn(num_); }

  /// Largest integer <= value.
  mpz_class floor() const;

  /// Multiplies by 2^e exactly.
  Dyadic mul_pow2(long e) const;

  mpq_class to_rational() const;
  double to_double() const;

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  friend std::ostream& operator<<(std::ostream& os, const Dyadic& d);

 private:
  mpz_class num_ = 0;
  unsigned long exp_ = 0;
};

/// Midpoint of two dyadics; again dyadic.
Dyadic midpoint(const Dyadic& a, const Dyadic& b);

/// Point of R/Z with a dyadic representative in [0, 1).
class CirclePoint {
 public:
  CirclePoint() = default;
  /// Reduces any dyadic mod 1.
  explicit CirclePoint(const Dyadic& any);

  const Dyadic& rep() const { return rep_; }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  friend std::strong_ordering operator<=>(const CirclePoint& a, const CirclePoint& b) {
    return a.rep_ <=> b.rep_;
  }

 private:
  Dyadic rep_;
};

inline CirclePoint mod1(const Dyadic& a) { return CirclePoint(a); }

}  // namespace bclab
