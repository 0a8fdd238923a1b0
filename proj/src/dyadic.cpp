#include "bclab/dyadic.hpp"

#include <cctype>
#include <ostream>

#include "bclab/errors.hpp"

namespace bclab {

Dyadic Dyadic::normalize(mpz_class num, long exp) {
  Dyadic d;
  if (num == 0) return d;
  if (exp < 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(-exp));
    exp = 0;
  }
  unsigned long strip = mpz_scan1(num.get_mpz_t(), 0);
  if (strip > static_cast<unsigned long>(exp)) strip = static_cast<unsigned long>(exp);
  if (strip > 0) mpz_fdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), strip);
  d.num_ = std::move(num);
  d.exp_ = static_cast<unsigned long>(exp) - strip;
  return d;
}

Dyadic Dyadic::pow2(long e) { return normalize(mpz_class(1), -e); }

namespace {

mpz_class parse_integer(std::string_view tok, std::string_view whole) {
  if (tok.empty()) throw ParseError("empty integer in dyadic '" + std::string(whole) + "'");
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad token '" + std::string(tok) + "' in dyadic '" + std::string(whole) + "'");
  }
  return mpz_class(std::string(tok), 10);
}

}  // namespace

Dyadic Dyadic::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  mpz_class num;
  long exp = 0;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    num = parse_integer(s, text);
  } else {
    num = parse_integer(s.substr(0, slash), text);
    auto denom = s.substr(slash + 1);
    if (denom.size() < 3 || denom.substr(0, 2) != "2^")
      throw ParseError("bad token '" + std::string(denom) + "' in dyadic '" + std::string(text) +
                       "' (denominator must be 2^e)");
    mpz_class e = parse_integer(denom.substr(2), text);
    if (!e.fits_slong_p() || e > 1000000)
      throw ParseError("exponent '" + std::string(denom.substr(2)) + "' too large");
    exp = e.get_si();
  }
  if (negative) num = -num;
  return normalize(std::move(num), exp);
}

std::string Dyadic::format() const { return num_.get_str() + "/2^" + std::to_string(exp_); }

mpz_class Dyadic::floor() const {
  mpz_class q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), num_.get_mpz_t(), exp_);
  return q;
}

Dyadic Dyadic::mul_pow2(long e) const {
  return normalize(num_, static_cast<long>(exp_) - e);
}

mpq_class Dyadic::to_rational() const {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, exp_);
  mpq_class q(num_, den);
  q.canonicalize();
  return q;
}

double Dyadic::to_double() const { return to_rational().get_d(); }

Dyadic Dyadic::operator-() const {
  Dyadic d = *this;
  d.num_ = -d.num_;
  return d;
}

namespace {

// Scales a's numerator to the common exponent with b.
mpz_class lifted(const Dyadic& a, unsigned long target_exp) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), a.num().get_mpz_t(), target_exp - a.exp());
  return r;
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  unsigned long e = std::max(a.exp_, b.exp_);
  return Dyadic::normalize(lifted(a, e) + lifted(b, e), static_cast<long>(e));
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  unsigned long e = std::max(a.exp_, b.exp_);
  return Dyadic::normalize(lifted(a, e) - lifted(b, e), static_cast<long>(e));
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic::normalize(a.num_ * b.num_, static_cast<long>(a.exp_ + b.exp_));
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  unsigned long e = std::max(a.exp_, b.exp_);
  int c = cmp(lifted(a, e), lifted(b, e));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.format(); }

Dyadic midpoint(const Dyadic& a, const Dyadic& b) { return (a + b).mul_pow2(-1); }

CirclePoint::CirclePoint(const Dyadic& any) : rep_(any - Dyadic(any.floor())) {}

}  // namespace bclab
