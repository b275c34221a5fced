#include "su11/irrep.hpp"

#include <algorithm>
#include <cmath>

#include "su11/error.hpp"

namespace su11::irrep {

namespace {

constexpr double kZeroTol = 1e-12;

bool near_integer(cplx z, long* n) {
  if (std::abs(z.imag()) > kZeroTol) return false;
  double r = std::round(z.real());
  if (std::abs(z.real() - r) > kZeroTol) return false;
  *n = static_cast<long>(r);
  return true;
}

double sigma(Epsilon eps, int k) { return (eps == Epsilon::half && k < 0) ? -1.0 : 1.0; }

exact::Rational eps_rational(Epsilon e) {
  return e == Epsilon::half ? exact::Rational(1, 2) : exact::Rational(0);
}

exact::Polynomial constant(const exact::Rational& q) {
  return exact::Polynomial(std::vector<exact::Rational>{q});
}

/// Ladder coefficient c0 + slope*delta as a leading term.
Leading linear_leading(cplx c0, double slope) {
  if (std::abs(c0) < kZeroTol) return Leading{1, cplx{slope, 0.0}};
  return Leading{0, c0};
}

/// fills v with F_i * prod_{j=1}^{|d|} sqrt(i + j), optionally scaled first
std::vector<cplx> chain_values(const std::vector<cplx>& hyp, int d, int count, cplx scale,
                               bool scale_first) {
  std::vector<cplx> v(count);
  const int ad = std::abs(d);
  for (int i = 0; i < count; ++i) {
    cplx x = scale_first ? scale * hyp[i] : hyp[i];
    for (int j = 1; j <= ad; ++j) x *= std::sqrt(double(i + j));
    v[i] = x;
  }
  return v;
}

double rel_residual(const fock::FockOperator& lhs, const fock::FockOperator& target, int limit) {
  double diff = (lhs - target).max_abs(limit);
  double scale = std::max({1.0, lhs.max_abs(limit), target.max_abs(limit)});
  return diff / scale;
}

}  // namespace

double value(Epsilon e) { return e == Epsilon::half ? 0.5 : 0.0; }
std::string to_string(Epsilon e) { return e == Epsilon::half ? "1/2" : "0"; }

std::string to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::continuous: return "continuous";
    case SeriesKind::discrete_pair: return "discrete_pair";
    case SeriesKind::finite: return "finite";
  }
  return "unknown";
}

std::string KRange::to_string() const {
  std::string a = lo ? "[" + std::to_string(*lo) : "(-inf";
  std::string b = hi ? std::to_string(*hi) + "]" : "inf)";
  return a + "," + b;
}

bool SeriesClass::contains(long k) const {
  return std::any_of(ranges.begin(), ranges.end(), [k](const KRange& r) { return r.contains(k); });
}

const KRange& SeriesClass::range_of(long k) const {
  for (const auto& r : ranges)
    if (r.contains(k)) return r;
  throw DomainError("k = " + std::to_string(k) + " lies outside every invariant subspace");
}

SeriesClass classify(const IrrepLabel& label) {
  SeriesClass out;
  long s = 0;
  if (!near_integer(label.tau + label.epsilon(), &s)) {
    out.kind = SeriesKind::continuous;
    out.ranges = {KRange{}};
    return out;
  }
  // tau + eps = s and tau - eps = s - 2 eps are both integers
  const long top = s - (label.eps == Epsilon::half ? 1 : 0);
  if (top < 0) {
    out.kind = SeriesKind::discrete_pair;
    out.ranges = {KRange{std::nullopt, top}, KRange{-s, std::nullopt}};
  } else {
    out.kind = SeriesKind::finite;
    out.ranges = {KRange{-s, top}};
  }
  return out;
}

int d_shift(Epsilon eps, int k) { return 2 * k + (eps == Epsilon::half ? 1 : 0); }

double kprime(Epsilon eps, int k) { return k >= 0 ? k + value(eps) : -k - value(eps); }

// ----------------------------------------------------------- coefficients

cplx coefficient_c(const IrrepLabel& label, int k, int n) {
  const cplx z1 = 1.0 + label.tau + label.epsilon() + double(k + n);
  const double z2 = 1.0 + 2.0 * label.epsilon() + 2.0 * k + n;
  if (specfun::is_nonpositive_integer(z1)) throw DomainError("coefficient_c: numerator pole");
  if (z2 <= 0.0) return {};  // 1/Gamma at a nonpositive integer
  if (std::abs(z1) < 100.0 && z2 < 100.0) return specfun::gamma(z1) / std::tgamma(z2);
  return std::exp(specfun::lgamma(z1) - std::lgamma(z2));
}

exact::RationalFunction coefficient_c_normalized(const exact::Rational& tau, Epsilon eps, int k,
                                                 int n) {
  using exact::Polynomial;
  using exact::Rational;
  const Rational a0 = Rational(1) + tau + eps_rational(eps);
  const int j = k + n;
  Polynomial num(1), den(1);
  if (j >= 0) {
    for (int i = 0; i < j; ++i) num *= Polynomial::linear(a0 + i, 1);
  } else {
    for (int i = 1; i <= -j; ++i) den *= Polynomial::linear(a0 - i, 1);
  }
  const int b = 1 + (eps == Epsilon::half ? 1 : 0) + 2 * k + n;
  if (b <= 0) return exact::RationalFunction(Polynomial(0));
  Rational inv_fact(1);
  for (int i = 2; i < b; ++i) inv_fact /= i;
  num *= inv_fact;
  return exact::RationalFunction(num, den);
}

RecurrenceResidual recurrence_residuals(const exact::Rational& tau, Epsilon eps, int k, int n) {
  using exact::Polynomial;
  using exact::Rational;
  using exact::RationalFunction;
  const Rational e = eps_rational(eps);
  const Rational p = Rational(2 * k + n - 1) + 2 * e;
  auto c = [&](int kk, int nn) { return coefficient_c_normalized(tau, eps, kk, nn); };
  RecurrenceResidual r;
  r.first = RationalFunction(constant(p * n)) * c(k, n - 1) +
            RationalFunction(Polynomial::linear(Rational(k) + e + tau, 1)) * c(k - 1, n) -
            RationalFunction(constant(p * (Rational(2 * k + n) + 2 * e))) * c(k, n);
  r.second = c(k, n + 1) - c(k, n + 2) -
             RationalFunction(Polynomial::linear(Rational(k) + e - tau, -1)) * c(k + 1, n);
  return r;
}

// --------------------------------------------------------------- f and D

Leading f_prefactor(const IrrepLabel& label, int k) {
  const double kp = kprime(label.eps, k);
  Leading l = specfun::gamma_leading(1.0 + label.tau + kp, 1.0);
  l *= cplx{sigma(label.eps, k) * std::pow(2.0, kp) / std::tgamma(1.0 + 2.0 * kp), 0.0};
  return l;
}

std::vector<cplx> f_hyp_table(const IrrepLabel& label, int k, int zeta_max) {
  const double kp = kprime(label.eps, k);
  auto b = exact::QComplex::from(1.0 + label.tau + kp);
  auto c = exact::QComplex::from(cplx{1.0 + 2.0 * kp, 0.0});
  auto table = specfun::hyp2f1_arg2_table(zeta_max, b, c);
  std::vector<cplx> out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) out[i] = table[i].to_complex();
  return out;
}

cplx f_value(const IrrepLabel& label, int k, int zeta) {
  if (zeta < 0) throw DomainError("f_value: zeta must be nonnegative");
  const double kp = kprime(label.eps, k);
  auto b = exact::QComplex::from(1.0 + label.tau + kp);
  auto c = exact::QComplex::from(cplx{1.0 + 2.0 * kp, 0.0});
  cplx hyp = specfun::hyp2f1_terminating_exact(zeta, b, c, exact::QComplex(2L)).to_complex();
  return f_prefactor(label, k).limit() * hyp;
}

std::vector<cplx> f_table(const IrrepLabel& label, int k, int zeta_max) {
  cplx pref = f_prefactor(label, k).limit();
  auto t = f_hyp_table(label, k, zeta_max);
  for (auto& v : t) v *= pref;
  return t;
}

cplx f_series(const IrrepLabel& label, int k, int zeta) {
  const double kp = kprime(label.eps, k);
  cplx sum{};
  double falling = 1.0;  // zeta (zeta-1) ... (zeta-n+1) / n!
  for (int n = 0; n <= zeta; ++n) {
    if (n > 0) falling *= double(zeta - n + 1) / n;
    const cplx z1 = 1.0 + label.tau + kp + double(n);
    const double z2 = 1.0 + 2.0 * kp + n;
    const cplx c = specfun::gamma(z1) / std::tgamma(z2);
    sum += (n % 2 == 0 ? 1.0 : -1.0) * std::pow(2.0, n + kp) * c * falling;
  }
  return sigma(label.eps, k) * sum;
}

std::vector<cplx> d_column_values(const IrrepLabel& label, int k, int count) {
  if (count <= 0) return {};
  const cplx pref = f_prefactor(label, k).limit();
  return chain_values(f_hyp_table(label, k, count - 1), d_shift(label.eps, k), count, pref, true);
}

DTerm d_term(const IrrepLabel& label, int k, const fock::FockSpace& space) {
  const int d = d_shift(label.eps, k);
  const int count = std::max(0, space.dim() - std::abs(d));
  DTerm out;
  out.prefactor = f_prefactor(label, k);
  std::vector<cplx> v;
  if (count > 0) v = chain_values(f_hyp_table(label, k, count - 1), d, count, 1.0, false);
  out.shape = fock::ShiftedDiagonal(space.dim(), d, std::move(v));
  return out;
}

namespace {
void require_in_range(const IrrepLabel& label, int k, const fock::FockSpace& space) {
  if (!classify(label).contains(k))
    throw DomainError("d_operator: k = " + std::to_string(k) +
                      " is outside the invariant subspaces of this label");
  if (std::abs(d_shift(label.eps, k)) >= space.dim())
    throw DomainError("d_operator: shift 2k+2eps exceeds the truncation");
}
}  // namespace

DOperator d_operator(const IrrepLabel& label, int k, const fock::FockSpace& space) {
  require_in_range(label, k, space);
  const int d = d_shift(label.eps, k);
  DOperator out;
  out.label = label;
  out.k = k;
  out.op = fock::ShiftedDiagonal(space.dim(), d, d_column_values(label, k, space.dim() - std::abs(d)));
  return out;
}

DOperator d_operator_product(const IrrepLabel& label, int k, const fock::FockSpace& space) {
  require_in_range(label, k, space);
  const int d = d_shift(label.eps, k);
  auto f = f_table(label, k, space.dim() - 1);
  fock::FockOperator op{space, fock::ShiftedDiagonal(space.dim(), 0, f)};
  if (d >= 0) {
    const auto zs = fock::creation(space);
    for (int i = 0; i < d; ++i) op = zs * op;
  } else {
    const auto z = fock::annihilation(space);
    for (int i = 0; i < -d; ++i) op = op * z;
  }
  DOperator out;
  out.label = label;
  out.k = k;
  out.op = op.diagonal(d);
  return out;
}

// ---------------------------------------------------------------- ladders

fock::FockOperator ladder_minus(const fock::FockOperator& f) {
  auto z = fock::annihilation(f.space());
  return 0.5 * fock::commutator(f, z * z);
}

fock::FockOperator ladder_plus(const fock::FockOperator& f) {
  auto zs = fock::creation(f.space());
  return 0.5 * fock::commutator(zs * zs, f);
}

fock::FockOperator ladder_h(const fock::FockOperator& f) {
  return 0.5 * fock::commutator(fock::number(f.space()), f);
}

namespace {

/// lim coeff * D_j as an operator; nullopt-free: the zero operator when the
/// combined order is positive. Throws on a net pole.
fock::FockOperator limit_target(const IrrepLabel& label, int j, Leading coeff,
                                const fock::FockSpace& space, bool* used_limit) {
  DTerm t = d_term(label, j, space);
  Leading total = coeff * t.prefactor;
  if (used_limit) *used_limit = coeff.order > 0 && t.prefactor.order < 0;
  if (total.order < 0) throw DomainError("ladder target has a pole");
  fock::FockOperator out(space);
  if (total.order > 0 || t.shape.length() == 0) return out;
  out.add(t.shape);
  out *= total.coeff;
  return out;
}

}  // namespace

LadderResult check_ladders(const IrrepLabel& label, int k, const fock::FockSpace& space) {
  const DOperator d = d_operator(label, k, space);
  const auto op = d.as_operator();
  const double e = label.epsilon();
  LadderResult r;
  r.margin = std::abs(d.shift()) + 2;
  const int limit = space.dim() - r.margin;
  if (limit <= 0) throw DomainError("check_ladders: no interior block left at this truncation");

  auto minus_t = limit_target(label, k - 1, linear_leading(-(double(k) + label.tau + e), -1.0),
                              space, &r.minus_uses_limit);
  auto plus_t = limit_target(label, k + 1, linear_leading(double(k) - label.tau + e, -1.0), space,
                             &r.plus_uses_limit);
  r.minus = rel_residual(ladder_minus(op), minus_t, limit);
  r.plus = rel_residual(ladder_plus(op), plus_t, limit);
  r.h = rel_residual(ladder_h(op), op * cplx{k + e, 0.0}, limit);
  return r;
}

WeightCheck highest_lowest_weight_check(const IrrepLabel& label, const fock::FockSpace& space,
                                        double tol) {
  auto cls = classify(label);
  if (cls.kind == SeriesKind::continuous)
    throw DomainError("highest_lowest_weight_check: label has no edges (continuous series)");
  WeightCheck out;
  out.tolerance = tol;
  auto edge = [&](int k, bool top) {
    const DOperator d = d_operator(label, k, space);
    const auto op = d.as_operator();
    const int limit = space.dim() - (std::abs(d.shift()) + 2);
    auto image = top ? ladder_plus(op) : ladder_minus(op);
    EdgeResult e;
    e.k = k;
    e.ladder = top ? "plus" : "minus";
    e.literal_norm = image.max_abs(limit) / std::max(1.0, op.max_abs(limit));
    out.passed = out.passed && e.literal_norm <= tol;
    out.edges.push_back(e);
  };
  for (const auto& r : cls.ranges) {
    if (r.hi) edge(static_cast<int>(*r.hi), true);
    if (r.lo) edge(static_cast<int>(*r.lo), false);
  }
  return out;
}

}  // namespace su11::irrep
