#include "su11/specfun.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "su11/error.hpp"

namespace su11::specfun {

namespace {

constexpr double kIntTol = 1e-12;

struct Neumaier {
  double sum = 0.0, comp = 0.0;
  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) comp += (sum - t) + v;
    else comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct ComplexNeumaier {
  Neumaier re, im;
  void add(cplx v) {
    re.add(v.real());
    im.add(v.imag());
  }
  cplx value() const { return {re.value(), im.value()}; }
};

bool is_integer(cplx z, long* n) {
  if (std::abs(z.imag()) > kIntTol) return false;
  double r = std::round(z.real());
  if (std::abs(z.real() - r) > kIntTol * std::max(1.0, std::abs(r))) return false;
  if (n) *n = static_cast<long>(r);
  return true;
}

}  // namespace

cplx Leading::limit() const {
  if (order < 0) throw DomainError("Leading::limit: quantity has a pole");
  return order > 0 ? cplx{} : coeff;
}

bool is_nonpositive_integer(cplx z, int* n) {
  long v = 0;
  if (!is_integer(z, &v) || v > 0) return false;
  if (n) *n = static_cast<int>(v);
  return true;
}

// ------------------------------------------------------------------ 2F1

SeriesValue hyp2f1_terminating(int n, cplx b, cplx c, cplx x) {
  if (n < 0) throw DomainError("hyp2f1_terminating: n must be nonnegative");
  ComplexNeumaier acc;
  double abs_sum = 0.0;
  cplx term{1.0, 0.0};
  for (int j = 0; j <= n; ++j) {
    acc.add(term);
    abs_sum += std::abs(term);
    if (j == n) break;
    cplx den = (c + double(j)) * double(j + 1);
    if (std::abs(c + double(j)) == 0.0)
      throw DomainError("hyp2f1_terminating: pole of c reached before termination");
    term *= (double(j - n) * (b + double(j))) / den * x;
  }
  SeriesValue out;
  out.value = acc.value();
  out.terms = n + 1;
  double mag = std::abs(out.value);
  out.condition = mag > 0 ? abs_sum / mag : std::numeric_limits<double>::infinity();
  return out;
}

exact::QComplex hyp2f1_terminating_exact(int n, const exact::QComplex& b,
                                         const exact::QComplex& c,
                                         const exact::QComplex& x) {
  if (n < 0) throw DomainError("hyp2f1_terminating_exact: n must be nonnegative");
  exact::QComplex sum(0L), term(1L);
  for (int j = 0; j <= n; ++j) {
    sum += term;
    if (j == n) break;
    exact::QComplex cj = c + exact::QComplex(long(j));
    if (cj.is_zero())
      throw DomainError("hyp2f1_terminating_exact: pole of c reached before termination");
    term *= exact::QComplex(long(j - n)) * (b + exact::QComplex(long(j))) * x;
    term /= cj * exact::QComplex(long(j + 1));
  }
  return sum;
}

std::vector<exact::QComplex> hyp2f1_arg2_table(int n_max, const exact::QComplex& b,
                                               const exact::QComplex& c) {
  if (n_max < 0) return {};
  if (c.is_zero()) throw DomainError("hyp2f1_arg2_table: c = 0");
  std::vector<exact::QComplex> f;
  f.reserve(n_max + 1);
  f.emplace_back(1L);
  if (n_max == 0) return f;
  f.push_back(exact::QComplex(1L) - exact::QComplex(2L) * b / c);
  const exact::QComplex c_minus_2b = c - exact::QComplex(2L) * b;
  for (int n = 1; n < n_max; ++n) {
    exact::QComplex cn = c + exact::QComplex(long(n));
    if (cn.is_zero()) throw DomainError("hyp2f1_arg2_table: pole of c reached");
    exact::QComplex next = c_minus_2b * f[n] + exact::QComplex(long(n)) * f[n - 1];
    next /= cn;
    f.push_back(std::move(next));
  }
  return f;
}

namespace {

// Power series in y, 0 <= |y| < 1. `term_limit` is the first index whose
// term is structurally zero (termination), or -1.
Hyp2f1Value power_series(cplx a, cplx b, cplx c, double y) {
  constexpr int kMaxTerms = 20'000'000;
  Hyp2f1Value out;
  ComplexNeumaier acc;
  cplx term{1.0, 0.0};
  int j = 0;
  for (; j < kMaxTerms; ++j) {
    acc.add(term);
    cplx num = (a + double(j)) * (b + double(j));
    if (num == cplx{}) {
      out.terms = j + 1;
      out.value = acc.value();
      return out;
    }
    cplx den = (c + double(j)) * double(j + 1);
    if (den == cplx{}) throw DomainError("hyp2f1: c is a nonpositive integer");
    cplx ratio = num / den * y;
    term *= ratio;
    double r = std::max(std::abs(ratio), std::abs(y));
    double tail = r < 1.0 ? std::abs(term) / (1.0 - r) : std::numeric_limits<double>::infinity();
    double scale = std::max(std::abs(acc.value()), 1e-300);
    if (j > 2 && tail <= 1e-17 * scale) {
      acc.add(term);
      out.terms = j + 2;
      out.tail_bound = tail;
      out.value = acc.value();
      return out;
    }
  }
  throw DomainError("hyp2f1: series did not converge within the term cap");
}

void check_c(cplx a, cplx b, cplx c) {
  int pc = 0;
  if (!is_nonpositive_integer(c, &pc)) return;
  int pa = 0, pb = 0;
  bool ta = is_nonpositive_integer(a, &pa), tb = is_nonpositive_integer(b, &pb);
  // the series stops after |p| terms; the pole of (c)_j appears at j = |pc|+1
  int stop = std::numeric_limits<int>::max();
  if (ta) stop = std::min(stop, -pa);
  if (tb) stop = std::min(stop, -pb);
  if (stop > -pc) throw DomainError("hyp2f1: c is a nonpositive integer without earlier termination");
}

}  // namespace

Hyp2f1Value hyp2f1_direct(cplx a, cplx b, cplx c, double x) {
  if (!(std::abs(x) < 1.0)) throw DomainError("hyp2f1_direct: requires |x| < 1");
  check_c(a, b, c);
  return power_series(a, b, c, x);
}

Hyp2f1Value hyp2f1(cplx a, cplx b, cplx c, double x) {
  if (!(x < 1.0)) throw DomainError("hyp2f1: requires x < 1");
  check_c(a, b, c);
  if (x == 0.0) return {cplx{1.0, 0.0}, 1, 0.0, false};
  if (x > 0.0) return power_series(a, b, c, x);
  // keep a terminating parameter in front so the transformed series terminates too
  if (is_nonpositive_integer(b) && !is_nonpositive_integer(a)) std::swap(a, b);
  const double y = x / (x - 1.0);
  Hyp2f1Value inner = power_series(a, c - b, c, y);
  const cplx pref = std::pow(cplx{1.0 - x, 0.0}, -a);
  inner.value *= pref;
  inner.tail_bound *= std::abs(pref);
  inner.pfaff = true;
  return inner;
}

// ---------------------------------------------------------------- gamma

namespace {
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
}  // namespace

cplx lgamma(cplx z) {
  using std::numbers::pi;
  if (z.imag() == 0.0 && z.real() > 0.0) return {std::lgamma(z.real()), 0.0};
  if (z.real() < 0.5) {
    if (is_nonpositive_integer(z)) throw DomainError("lgamma: pole");
    return std::log(pi / std::sin(pi * z)) - lgamma(1.0 - z);
  }
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + double(i));
  cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx gamma(cplx z) {
  if (is_nonpositive_integer(z)) throw DomainError("gamma: pole");
  if (z.imag() == 0.0) return {std::tgamma(z.real()), 0.0};
  return std::exp(lgamma(z));
}

cplx gamma_ratio_shift(cplx z, int k) {
  if (k == 0) return {1.0, 0.0};
  if (k > 0) {
    bool hits_zero = false;
    for (int j = 0; j < k && !hits_zero; ++j) hits_zero = std::abs(z + double(j)) == 0.0;
    if (hits_zero) return {};
    if (k > 32 && z.real() > 0.0) return std::exp(lgamma(z + double(k)) - lgamma(z));
    cplx p{1.0, 0.0};
    for (int j = 0; j < k; ++j) p *= z + double(j);
    return p;
  }
  const int m = -k;
  for (int j = 1; j <= m; ++j)
    if (std::abs(z - double(j)) == 0.0)
      throw DomainError("gamma_ratio_shift: pole in the denominator");
  if (m > 32 && (z.real() - m) > 0.0) return std::exp(lgamma(z - double(m)) - lgamma(z));
  cplx p{1.0, 0.0};
  for (int j = 1; j <= m; ++j) p *= z - double(j);
  return 1.0 / p;
}

Leading gamma_ratio_shift_leading(cplx z, int k, double slope) {
  Leading out;
  if (k >= 0) {
    for (int j = 0; j < k; ++j) {
      cplx f = z + double(j);
      if (is_integer(f, nullptr) && std::abs(f) < kIntTol) {
        out.order += 1;
        out.coeff *= slope;
      } else {
        out.coeff *= f;
      }
    }
    return out;
  }
  for (int j = 1; j <= -k; ++j) {
    cplx f = z - double(j);
    if (is_integer(f, nullptr) && std::abs(f) < kIntTol) {
      out.order -= 1;
      out.coeff /= slope;
    } else {
      out.coeff /= f;
    }
  }
  return out;
}

Leading gamma_leading(cplx z, double slope) {
  int p = 0;
  if (is_nonpositive_integer(z, &p)) {
    p = -p;
    double res = (p % 2 == 0 ? 1.0 : -1.0) / std::tgamma(p + 1.0);
    return Leading{-1, cplx{res / slope, 0.0}};
  }
  return Leading::value(gamma(z));
}

// -------------------------------------------------------------- Hermite

HermiteValue hermite_psi(int n, double x) {
  if (n < 0 || n > kHermiteMaxOrder) throw DomainError("hermite_psi: order out of range");
  HermiteValue out;
  if (0.5 * x * x > 700.0) {
    out.underflow = true;
    return out;
  }
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  for (int j = 0; j < n; ++j) {
    double next = std::sqrt(2.0 / (j + 1)) * x * cur - std::sqrt(double(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
  }
  out.value = cur;
  return out;
}

std::vector<double> hermite_polynomial_part(int n_max, double x) {
  std::vector<double> h(std::max(n_max, 0) + 1);
  h[0] = std::pow(std::numbers::pi, -0.25);
  if (n_max >= 1) h[1] = std::sqrt(2.0) * x * h[0];
  for (int j = 1; j < n_max; ++j)
    h[j + 1] = std::sqrt(2.0 / (j + 1)) * x * h[j] - std::sqrt(double(j) / (j + 1)) * h[j - 1];
  return h;
}

GaussHermiteRule gauss_hermite(int order) {
  if (order < 1) throw DomainError("gauss_hermite: order must be positive");
  // Golub-Welsch for starting values, then Newton on the normalized
  // recurrence so small weights keep full relative precision.
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(order, order);
  for (int i = 0; i + 1 < order; ++i) jac(i, i + 1) = jac(i + 1, i) = std::sqrt((i + 1) / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jac, Eigen::EigenvaluesOnly);
  GaussHermiteRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = eig.eigenvalues()(i);
    double deriv = 0.0;
    for (int it = 0; it < 100; ++it) {
      auto h = hermite_polynomial_part(order, x);
      deriv = std::sqrt(2.0 * order) * h[order - 1];
      double dx = h[order] / deriv;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) {
        auto h2 = hermite_polynomial_part(order, x);
        deriv = std::sqrt(2.0 * order) * h2[order - 1];
        break;
      }
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / (deriv * deriv);
  }
  return rule;
}

double legendre_p(int tau, double u) {
  if (tau < 0) throw DomainError("legendre_p: degree must be nonnegative");
  if (tau == 0) return 1.0;
  double prev = 1.0, cur = u;
  for (int n = 1; n < tau; ++n) {
    double next = ((2.0 * n + 1.0) * u * cur - n * prev) / (n + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace su11::specfun
