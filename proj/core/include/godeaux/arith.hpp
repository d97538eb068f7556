#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace godeaux {

// Thrown for any arithmetic error: division by zero, mixing fields.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  // Accepts "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

// Euler phi for the supported cyclotomic orders.
int cyclotomic_degree(int order);
bool is_supported_order(int order);

// Element of Q(zeta_n) for n in {1,2,3,4,5}, stored as a polynomial in t = zeta_n
// of degree < phi(n), reduced modulo the n-th cyclotomic polynomial. Orders 1 and 2
// are both plain Q and are normalised to order 1.
class Scalar {
 public:
  static constexpr int kMaxDegree = 4;

  Scalar() = default;
  Scalar(long value) : coeffs_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational value, int order = 1);            // NOLINT(google-explicit-constructor)

  // zeta_n^k, with zeta_2 = -1 and zeta_1 = 1.
  static Scalar root_of_unity(int order, long k = 1);
  // Builds a + b t + c t^2 + ... and reduces it modulo Phi_n.
  static Scalar from_coefficients(int order, std::span<const Rational> coeffs);

  int order() const { return order_; }
  int degree() const { return cyclotomic_degree(order_); }
  std::span<const Rational> coefficients() const {
    return {coeffs_.data(), static_cast<std::size_t>(degree())};
  }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Throws unless is_rational().
  const Rational& rational_value() const;
  // Re-expresses a rational-valued scalar in Q(zeta_n).
  Scalar embed(int order) const;

  Scalar inverse() const;
  // Galois automorphism zeta -> zeta^k, gcd(k, n) = 1.
  Scalar conjugate(long k) const;
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(Scalar a);

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void check_compatible(const Scalar& o) const;

  std::uint8_t order_ = 1;
  std::array<Rational, kMaxDegree> coeffs_{};
};

Scalar pow(const Scalar& base, long exponent);

// Scalar literal grammar: sums/differences/products of "p", "p/q", "zN", "zN^k"
// with parentheses. `order` is the field the result lives in; a zN atom with
// N != order (and N != 1) is rejected as an incompatible field.
Scalar parse_scalar(std::string_view text, int order);

}  // namespace godeaux
