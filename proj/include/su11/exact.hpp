#pragma once

// Exact rational arithmetic on top of GMP: complex rationals for terminating
// hypergeometric series, and polynomials / rational functions in one
// variable for identities that are checked symbolically.

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace su11::exact {

using Rational = mpq_class;

/// Exact conversion: every finite double is a dyadic rational.
Rational from_double(double x);
double to_double(const Rational& q);

class QComplex {
 public:
  QComplex() : re_(0), im_(0) {}
  QComplex(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT(implicit)
  QComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  QComplex(long v) : re_(v), im_(0) {}  // NOLINT(implicit)

  static QComplex from(std::complex<double> z);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  QComplex conj() const { return {re_, -im_}; }
  std::complex<double> to_complex() const;

  QComplex& operator+=(const QComplex& o);
  QComplex& operator-=(const QComplex& o);
  QComplex& operator*=(const QComplex& o);
  QComplex& operator/=(const QComplex& o);

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
  friend QComplex operator-(const QComplex& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

/// Dense univariate polynomial over Q, coefficients lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(long constant);  // NOLINT(implicit)

  /// c0 + c1*x
  static Polynomial linear(const Rational& c0, const Rational& c1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& p, int e);

/// Quotient of two polynomials; no cancellation of common factors is
/// attempted (identities are checked via is_zero of the numerator).
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}  // NOLINT(implicit)
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Value at x; throws DomainError when the denominator vanishes there.
  Rational operator()(const Rational& x) const;

  /// Order of the zero (positive) or pole (negative) at x = 0.
  int order_at_zero() const;
  /// Coefficient of x^order_at_zero() in the Laurent expansion at 0.
  Rational leading_at_zero() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace su11::exact
