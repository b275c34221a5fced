#include "su11/exact.hpp"

#include <cmath>
#include <sstream>

#include "su11/error.hpp"

namespace su11::exact {

Rational from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("from_double: non-finite value");
  Rational q(x);  // mpq_set_d is exact
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

QComplex QComplex::from(std::complex<double> z) {
  return {from_double(z.real()), from_double(z.imag())};
}

std::complex<double> QComplex::to_complex() const {
  return {to_double(re_), to_double(im_)};
}

QComplex& QComplex::operator+=(const QComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

QComplex& QComplex::operator-=(const QComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

QComplex& QComplex::operator*=(const QComplex& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

QComplex& QComplex::operator/=(const QComplex& o) {
  if (o.is_zero()) throw DomainError("QComplex: division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational d = o.re_ * o.re_ + o.im_ * o.im_;
  Rational r = (re_ * o.re_ + im_ * o.im_) / d;
  Rational i = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1) {
  return Polynomial(std::vector<Rational>{c0, c1});
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << (sgn(coeffs_[i]) > 0 ? " + " : " - ");
    else if (sgn(coeffs_[i]) < 0) os << "-";
    Rational mag = abs(coeffs_[i]);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) os << (i == 0 || mag != 1 ? "*" : "") << var << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

Polynomial pow(const Polynomial& p, int e) {
  Polynomial out(1);
  for (int i = 0; i < e; ++i) out *= p;
  return out;
}

// ------------------------------------------------------------ RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("RationalFunction: zero denominator");
}

Rational RationalFunction::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (sgn(d) == 0) throw DomainError("RationalFunction: pole at evaluation point");
  return num_(x) / d;
}

namespace {
int lowest_order(const Polynomial& p) {
  for (int i = 0; i <= p.degree(); ++i)
    if (sgn(p.coeff(i)) != 0) return i;
  return 0;
}
}  // namespace

int RationalFunction::order_at_zero() const {
  if (num_.is_zero()) return 0;
  return lowest_order(num_) - lowest_order(den_);
}

Rational RationalFunction::leading_at_zero() const {
  if (num_.is_zero()) return Rational(0);
  return num_.coeff(lowest_order(num_)) / den_.coeff(lowest_order(den_));
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.num_.is_zero()) throw DomainError("RationalFunction: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  return *this;
}

}  // namespace su11::exact
