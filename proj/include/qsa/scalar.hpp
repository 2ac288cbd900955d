#pragma once

// Exact arithmetic in the rational function field Q(q).
//
// A nonzero Scalar is stored as q^shift * num(q) / den(q) where
//   - num has rational coefficients and num(0) != 0,
//   - den has integer coefficients, content 1, positive leading coefficient
//     and den(0) != 0,
//   - gcd(num, den) = 1 in Q[q].
// This form is unique, so equality is structural. Laurent polynomials in q
// (den == 1) take a fast path that never computes a gcd.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsa {

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial over Q, coefficients in ascending order,
/// no trailing (high-degree) zeros. The zero polynomial is empty.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs);
  static RatPoly constant(const mpq_class& c);
  static RatPoly monomial(const mpq_class& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& operator[](std::size_t i) const { return c_[i]; }
  const mpq_class& lead() const { return c_.back(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  /// Number of leading zero coefficients, i.e. the q-adic valuation.
  std::size_t valuation() const;
  RatPoly shifted_down(std::size_t k) const;
  RatPoly shifted_up(std::size_t k) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly operator-() const;
  RatPoly scaled(const mpq_class& s) const;

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& quo, RatPoly& rem);
  /// Monic gcd (zero if both are zero).
  static RatPoly gcd(RatPoly a, RatPoly b);

  /// Factor f with f * this integral, primitive, positive leading coefficient.
  mpq_class primitive_factor() const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;
  friend auto operator<=>(const RatPoly& a, const RatPoly& b) -> std::strong_ordering;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

class Scalar {
 public:
  Scalar();  // zero
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& v);

  /// Build num/den (both in Q[q], den nonzero) and canonicalize.
  static Scalar fraction(const RatPoly& num, const RatPoly& den);
  /// q^k for any integer k.
  static Scalar q_power(long k);
  static Scalar q() { return q_power(1); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }

  /// Returns j when the value is exactly q^j. Zero input throws.
  std::optional<long> as_q_power() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws ArithmeticError on zero
  Scalar pow(long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar&, const Scalar&) = default;
  /// Arbitrary but total order (used for deterministic containers).
  friend auto operator<=>(const Scalar& a, const Scalar& b) -> std::strong_ordering;

  long shift() const { return shift_; }
  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }

  /// Plain numerator/denominator polynomials in q (no negative powers):
  /// value == numerator(q) / denominator(q).
  RatPoly plain_numerator() const;
  RatPoly plain_denominator() const;

  /// True when the printed form starts with a minus sign.
  bool prints_negative() const;
  /// True when the printed form is a single signed term (no parentheses
  /// are needed when it is used as a factor).
  bool is_atomic() const;

  std::string to_string() const;

  /// Parse integer-coefficient rational-function syntax in q, e.g.
  /// "(q^2-1)/(q^3+2)" or "q^-1 - q". Throws ParseError.
  static Scalar parse(const std::string& text);

  /// Re-run canonicalization (idempotent; exposed for tests).
  Scalar canonical() const;

 private:
  Scalar(long shift, RatPoly num, RatPoly den, bool trusted);
  void normalize();

  long shift_ = 0;
  RatPoly num_;
  RatPoly den_;
};

std::string to_string(const RatPoly& p, long shift = 0);

}  // namespace qsa
