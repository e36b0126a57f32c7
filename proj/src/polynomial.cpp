#include "chromakac/polynomial.hpp"

#include <sstream>

#include "chromakac/errors.hpp"

namespace chromakac {

namespace {
const mpz_class kZeroInt = 0;
const mpq_class kZeroRat = 0;
}  // namespace

Polynomial::Polynomial(std::vector<mpz_class> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const mpz_class& c) { return Polynomial({c}); }

Polynomial Polynomial::q_power(int k) {
  std::vector<mpz_class> c(static_cast<std::size_t>(k) + 1, 0);
  c.back() = 1;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::falling_factorial(int k) {
  Polynomial result = constant(1);
  for (int i = 0; i < k; ++i)
    result = result * Polynomial({mpz_class(-i), mpz_class(1)});  // (q - i)
  return result;
}

const mpz_class& Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return kZeroInt;
  return coeffs_[static_cast<std::size_t>(k)];
}

mpz_class Polynomial::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const mpz_class& c, const Polynomial& p) {
  Polynomial out = p;
  for (auto& x : out.coeffs_) x *= c;
  out.trim();
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  Polynomial result = constant(1);
  for (int i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeff(k);
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k >= 1) {
      out << 'q';
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const mpq_class& c) {
  return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::from(const Polynomial& p) {
  std::vector<mpq_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

const mpq_class& RationalPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return kZeroRat;
  return coeffs_[static_cast<std::size_t>(k)];
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RationalPolynomial();
  std::vector<mpq_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const mpq_class& c, const RationalPolynomial& p) {
  if (c == 0) return RationalPolynomial();
  RationalPolynomial out = p;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

bool RationalPolynomial::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

Polynomial RationalPolynomial::to_integer_polynomial(const std::string& context) const {
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].get_den() != 1)
      throw integrality_error(context + ": coefficient of q^" + std::to_string(k) +
                              " is not an integer (" + coeffs_[k].get_str() + ")");
    out.push_back(coeffs_[k].get_num());
  }
  return Polynomial(std::move(out));
}

}  // namespace chromakac
