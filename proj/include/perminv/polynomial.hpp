#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace perminv {

/// Dense univariate polynomial in t with exact rational coefficients,
/// lowest degree first. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and degree kZeroDegree.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  /// c * t^power.
  static Polynomial term(const mpq_class& c, int power);
  static Polynomial one() { return term(1, 0); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Index of the lowest nonzero coefficient; kZeroDegree for zero.
  int valuation() const;

  /// Coefficient of t^k, zero beyond the degree.
  mpq_class coefficient(int k) const;
  std::span<const mpq_class> coefficients() const { return coeffs_; }
  const mpq_class& leading() const { return coeffs_.back(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const mpq_class& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpq_class& s) { return a *= s; }

  bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

  std::string to_string(char var = 't') const;

 private:
  void trim();

  std::vector<mpq_class> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

Polynomial pow(const Polynomial& base, unsigned exponent);

}  // namespace perminv
