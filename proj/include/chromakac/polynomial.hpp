#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace chromakac {

/// Univariate polynomial in q with arbitrary-precision integer coefficients,
/// stored densely in ascending degree with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpz_class> ascending_coeffs);

  static Polynomial constant(const mpz_class& c);

  /// q^k
  static Polynomial q_power(int k);

  /// q(q-1)(q-2)...(q-k+1); the empty product for k = 0.
  static Polynomial falling_factorial(int k);

  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of q^k (zero beyond the degree).
  const mpz_class& coeff(int k) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  mpz_class operator()(const mpz_class& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const mpz_class& c, const Polynomial& p);

  Polynomial pow(int exponent) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Human rendering, e.g. "q^3 - 3q^2 + 2q"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Dense polynomial in q with exact rational coefficients. Used for the
/// weighted-path machinery, whose intermediates are rational even though
/// every final answer is an integer polynomial.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> ascending_coeffs);

  static RationalPolynomial constant(const mpq_class& c);
  static RationalPolynomial from(const Polynomial& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const mpq_class& coeff(int k) const;
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const mpq_class& c, const RationalPolynomial& p);

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  bool is_integral() const;

  /// Converts to an integer polynomial; throws integrality_error (with
  /// `context` in the message) if any coefficient has a denominator.
  Polynomial to_integer_polynomial(const std::string& context) const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

}  // namespace chromakac
