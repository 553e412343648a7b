#include "perminv/rational_function.hpp"

#include "perminv/error.hpp"

namespace perminv {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::one();
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const mpq_class scale =
      mpq_class(1) / den_.coefficient(den_.valuation());
  num_ *= scale;
  den_ *= scale;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  return *this += rhs * mpq_class(-1);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const mpq_class& s) {
  num_ *= s;
  canonicalize();
  return *this;
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial::one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

int rf_degree(const RationalFunction& rf) {
  if (rf.is_zero()) throw InvalidArgument("degree of the zero rational function");
  return rf.numerator().degree() - rf.denominator().degree();
}

std::vector<mpq_class> expand_quotient(const Polynomial& num, const Polynomial& den, int cutoff) {
  if (cutoff < 0) throw InvalidArgument("negative expansion cutoff");
  const mpq_class c0 = den.coefficient(0);
  if (sgn(c0) == 0) {
    throw InvalidArgument("denominator " + den.to_string() + " has zero constant term");
  }
  // den * series = num, solved coefficient by coefficient.
  std::vector<mpq_class> out(static_cast<std::size_t>(cutoff) + 1);
  for (int k = 0; k <= cutoff; ++k) {
    mpq_class acc = num.coefficient(k);
    for (int j = 1; j <= std::min(k, den.degree()); ++j) {
      acc -= den.coefficient(j) * out[static_cast<std::size_t>(k - j)];
    }
    out[static_cast<std::size_t>(k)] = acc / c0;
  }
  return out;
}

std::vector<mpq_class> expand_series(const RationalFunction& rf, int cutoff) {
  return expand_quotient(rf.numerator(), rf.denominator(), cutoff);
}

IntegerForm to_integer_form(const RationalFunction& rf) {
  mpz_class common = 1;
  for (const auto* p : {&rf.numerator(), &rf.denominator()}) {
    for (const auto& c : p->coefficients()) {
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  IntegerForm out;
  mpz_class content = 0;
  auto convert = [&](const Polynomial& p, std::vector<mpz_class>& dst) {
    for (const auto& c : p.coefficients()) {
      mpq_class scaled = c * common;
      dst.push_back(scaled.get_num());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), dst.back().get_mpz_t());
    }
  };
  convert(rf.numerator(), out.numerator);
  convert(rf.denominator(), out.denominator);
  if (content > 1) {
    for (auto& c : out.numerator) c /= content;
    for (auto& c : out.denominator) c /= content;
  }
  return out;
}

}  // namespace perminv
