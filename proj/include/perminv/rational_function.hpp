#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "perminv/polynomial.hpp"

namespace perminv {

/// A quotient of polynomials over Q kept in canonical form: numerator and
/// denominator coprime, denominator's lowest nonzero coefficient equal to 1,
/// zero represented as 0/1. Canonical form makes == structural.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::one()) {}
  /// Throws InvalidArgument if den is zero.
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial p) : RationalFunction(std::move(p), Polynomial::one()) {}

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator*=(const mpq_class& s);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator*(RationalFunction a, const mpq_class& s) { return a *= s; }

  bool operator==(const RationalFunction&) const = default;

  std::string to_string() const;

 private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

/// deg(numerator) - deg(denominator). Throws InvalidArgument on zero.
int rf_degree(const RationalFunction& rf);

/// First cutoff+1 power-series coefficients of num/den by long division.
/// Throws InvalidArgument if den has zero constant term.
std::vector<mpq_class> expand_quotient(const Polynomial& num, const Polynomial& den, int cutoff);

std::vector<mpq_class> expand_series(const RationalFunction& rf, int cutoff);

/// Numerator and denominator scaled to coprime integer coefficient arrays
/// (lowest degree first) with the denominator's lowest coefficient positive.
struct IntegerForm {
  std::vector<mpz_class> numerator;
  std::vector<mpz_class> denominator;
};

IntegerForm to_integer_form(const RationalFunction& rf);

}  // namespace perminv
