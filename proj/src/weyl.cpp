#include "su11/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "su11/error.hpp"
#include "su11/specfun.hpp"

namespace su11::weyl {

namespace {

cplx phase_half(int n, double angle) { return std::polar(1.0, -0.5 * n * angle); }

double max_off_identity(const Eigen::MatrixXcd& m) {
  double r = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      r = std::max(r, std::abs(m(i, j) - (i == j ? cplx{1.0, 0.0} : cplx{})));
  return r;
}

}  // namespace

std::string to_string(Source s) {
  switch (s) {
    case Source::closed_form: return "closed_form";
    case Source::quadrature: return "quadrature";
    case Source::cartan_product: return "cartan_product";
  }
  return "unknown";
}

double squeeze_entry(int m, int n, double alpha) {
  if (m < 0 || n < 0) throw DomainError("squeeze_entry: negative index");
  if ((m + n) % 2 != 0) return 0.0;
  if (m > n) return squeeze_entry(n, m, -alpha);
  const int p = (n - m) / 2;
  const double sh = std::sinh(alpha / 2), ch = std::cosh(alpha / 2);
  if (p > 0 && sh == 0.0) return 0.0;
  double logmag = -p * std::numbers::ln2 - std::lgamma(p + 1.0) +
                  0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)) -
                  0.5 * (n + m + 1) * std::log(ch);
  if (p > 0) logmag += p * std::log(std::abs(sh));
  const double sign = (sh < 0 && p % 2 == 1) ? -1.0 : 1.0;

  // F(-m/2, (1-m)/2; 1+p; -sh^2): one of the upper parameters is -floor(m/2)
  const int nt = m / 2;
  const double other = (m % 2 == 0) ? 0.5 * (1 - m) : -0.5 * m;
  const double x = -sh * sh;
  auto f = specfun::hyp2f1_terminating(nt, other, 1.0 + p, x);
  double fv = f.value.real();
  if (f.condition > 1e6) {
    using exact::QComplex;
    fv = specfun::hyp2f1_terminating_exact(nt, QComplex::from(other), QComplex::from(1.0 + p),
                                           QComplex::from(x))
             .to_complex()
             .real();
  }
  return sign * std::exp(logmag) * fv;
}

cplx weyl_entry(const grp::CartanAngles& c, int m, int n) {
  double u = squeeze_entry(m, n, c.alpha);
  if (u == 0.0) return {};
  return phase_half(m, c.phi) * u * phase_half(n, c.psi);
}

Eigen::MatrixXcd weyl_matrix(const grp::CartanAngles& c, int rows, int cols) {
  Eigen::MatrixXcd out(rows, cols);
  for (int m = 0; m < rows; ++m)
    for (int n = 0; n < cols; ++n) out(m, n) = weyl_entry(c, m, n);
  return out;
}

int padded_dim(double alpha, int n, double tol, int cap) {
  if (alpha == 0.0) return n;
  auto row_max = [&](int j) {
    double r = 0.0;
    for (int l = 0; l < n; ++l) r = std::max(r, std::abs(squeeze_entry(j, l, alpha)));
    return r;
  };
  for (int j = n; j < cap; ++j)
    if (row_max(j) < tol && row_max(j + 1) < tol) return j;
  throw DomainError("padded_dim: column tails do not decay below tolerance within the cap");
}

int inner_dim(double alpha, int n, const Truncation& tr) {
  return tr.padded ? padded_dim(alpha, n, tr.tol, tr.cap) : n;
}

UnitaryBlock u_phase(double psi, const fock::FockSpace& space) {
  UnitaryBlock u;
  u.space = space;
  u.source = Source::closed_form;
  u.angles = {0.0, 0.0, psi};
  u.entries = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  for (int n = 0; n < space.dim(); ++n) u.entries(n, n) = phase_half(n, psi);
  u.inner_dim = space.dim();
  u.unitarity_residual = max_off_identity(u.entries.adjoint() * u.entries);
  return u;
}

UnitaryBlock u_squeeze_closed(double alpha, const fock::FockSpace& space) {
  UnitaryBlock u;
  u.space = space;
  u.source = Source::closed_form;
  u.angles = {0.0, alpha, 0.0};
  u.entries = weyl_matrix(u.angles, space.dim(), space.dim());
  u.inner_dim = padded_dim(alpha, space.dim());
  u.unitarity_residual = unitarity_residual(u.angles, space.dim());
  return u;
}

UnitaryBlock u_squeeze_quadrature(double alpha, const fock::FockSpace& space) {
  const int n = space.dim();
  if (n - 1 > specfun::kHermiteMaxOrder)
    throw DomainError("u_squeeze_quadrature: N exceeds the supported Hermite order");
  // the largest entry has m + n = 2N - 2
  const int order = 2 * (2 * n - 2) + 16;
  if (order > 1200) throw DomainError("u_squeeze_quadrature: quadrature order insufficient");
  const auto rule = specfun::gauss_hermite(order);

  // Psi_m(x) Psi_n(lx) = h_m(x) h_n(lx) e^{-(1+l^2) x^2/2}; with x = y/c,
  // c^2 = (1+l^2)/2, the weight becomes e^{-y^2}.
  const double lam = std::exp(alpha / 2);
  const double c = std::sqrt(0.5 * (1.0 + lam * lam));
  Eigen::MatrixXd hx(rule.nodes.size(), n), hl(rule.nodes.size(), n);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double x = rule.nodes[i] / c;
    auto a = specfun::hermite_polynomial_part(n - 1, x);
    auto b = specfun::hermite_polynomial_part(n - 1, lam * x);
    for (int j = 0; j < n; ++j) {
      hx(i, j) = a[j] * rule.weights[i];
      hl(i, j) = b[j];
    }
  }
  UnitaryBlock u;
  u.space = space;
  u.source = Source::quadrature;
  u.angles = {0.0, alpha, 0.0};
  Eigen::MatrixXd q = (std::exp(alpha / 4) / c) * (hx.transpose() * hl);
  u.entries = q.cast<cplx>();
  u.inner_dim = n;
  u.unitarity_residual = max_off_identity(u.entries.adjoint() * u.entries);
  return u;
}

UnitaryBlock u_of_g(const grp::GroupElement& g, const fock::FockSpace& space) {
  auto dec = grp::cartan_decompose(g);
  const int n = space.dim();
  Eigen::VectorXcd left(n), right(n);
  for (int j = 0; j < n; ++j) {
    left(j) = phase_half(j, dec.angles.phi);
    right(j) = phase_half(j, dec.angles.psi);
  }
  Eigen::MatrixXcd h = weyl_matrix({0.0, dec.angles.alpha, 0.0}, n, n);
  UnitaryBlock u;
  u.space = space;
  u.source = Source::cartan_product;
  u.angles = dec.angles;
  u.sign_flag = dec.sign_flag;
  u.entries = left.asDiagonal() * h * right.asDiagonal();
  u.inner_dim = padded_dim(dec.angles.alpha, n);
  u.unitarity_residual = unitarity_residual(dec.angles, n);
  return u;
}

double unitarity_residual(const grp::CartanAngles& c, int block, const Truncation& tr) {
  const int inner = inner_dim(c.alpha, block, tr);
  Eigen::MatrixXcd u = weyl_matrix(c, inner, block);
  return max_off_identity(u.adjoint() * u);
}

HomomorphismResult homomorphism_residual(const grp::GroupElement& g1, const grp::GroupElement& g2,
                                         int block, const Truncation& tr) {
  auto c1 = grp::cartan_decompose(g1).angles;
  auto c2 = grp::cartan_decompose(g2).angles;
  auto c12 = grp::cartan_decompose(grp::compose(g1, g2)).angles;
  HomomorphismResult out;
  out.inner_dim = std::max(inner_dim(c1.alpha, block, tr), inner_dim(c2.alpha, block, tr));
  auto zp = [](const grp::CartanAngles& c) { return std::polar(1.0, -(c.phi + c.psi) / 4); };
  Eigen::MatrixXcd prod =
      (zp(c1) * zp(c2)) * (weyl_matrix(c1, block, out.inner_dim) * weyl_matrix(c2, out.inner_dim, block));
  Eigen::MatrixXcd direct = zp(c12) * weyl_matrix(c12, block, block);
  cplx ratio = prod(0, 0) / direct(0, 0);
  out.sign = ratio.real() >= 0 ? 1 : -1;
  out.phase_defect = std::abs(ratio - double(out.sign));
  out.residual = (prod - double(out.sign) * direct).cwiseAbs().maxCoeff();
  return out;
}

IntertwiningResult intertwining_residual(const grp::GroupElement& g, int block,
                                         const Truncation& tr) {
  auto c = grp::cartan_decompose(g).angles;
  const int inner = inner_dim(c.alpha, block + 1, tr) + 1;
  // only entries with one index below the block are needed
  Eigen::MatrixXcd top = weyl_matrix(c, block, inner);
  Eigen::MatrixXcd left = weyl_matrix(c, inner, block);
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(inner, inner);
  for (int t = 1; t < inner; ++t) z(t - 1, t) = std::sqrt(double(t));
  Eigen::MatrixXcd fwd = top * z * top.adjoint();
  Eigen::MatrixXcd bwd = left.adjoint() * z * left;
  Eigen::MatrixXcd zb = z.topLeftCorner(block, block);
  Eigen::MatrixXcd zsb = zb.adjoint();

  IntertwiningResult out;
  const grp::GroupElement gt = grp::transpose(g);
  auto target = [&](const grp::GroupElement& x) { return (x.a() * zb + x.b() * zsb).eval(); };
  out.candidates["forward_g"] = (fwd - target(g)).cwiseAbs().maxCoeff();
  out.candidates["forward_transpose"] = (fwd - target(gt)).cwiseAbs().maxCoeff();
  out.candidates["inverse_g"] = (bwd - target(g)).cwiseAbs().maxCoeff();
  out.candidates["inverse_transpose"] = (bwd - target(gt)).cwiseAbs().maxCoeff();
  out.residual = std::numeric_limits<double>::infinity();
  for (const auto& [name, r] : out.candidates)
    if (r < out.residual) {
      out.residual = r;
      out.orientation = name;
    }
  return out;
}

}  // namespace su11::weyl
