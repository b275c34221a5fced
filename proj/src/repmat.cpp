#include "su11/repmat.hpp"

#include <cmath>

#include "su11/error.hpp"

namespace su11::repmat {

Leading t_leading(const IrrepLabel& label, int k, int n, const grp::CartanAngles& c,
                  PhaseConvention pc) {
  const double e = label.epsilon();
  const double psi_index = pc == PhaseConvention::row_col ? n + e : k + e;
  const cplx phase = std::polar(1.0, -(k + e) * c.phi - psi_index * c.psi);

  // k < n: reflect (k, n, eps) -> (-k, -n, -eps)
  const bool direct = k >= n;
  const int kk = direct ? k : -k;
  const int nn = direct ? n : -n;
  const double ee = direct ? e : -e;
  const int p = kk - nn;

  // Gamma(1+tau-ee-nn)/Gamma(1+tau-ee-kk)/p! as a product of p factors
  const cplx z = 1.0 + label.tau - ee - double(kk);
  Leading out{0, phase};
  for (int j = 0; j < p; ++j) {
    const cplx f = z + double(j);
    if (std::abs(f) < 1e-12) {
      out.order += 1;  // the factor is delta itself
      out.coeff /= double(j + 1);
    } else {
      out.coeff *= f / double(j + 1);
    }
  }

  const double sh = std::sinh(c.alpha / 2), ch = std::cosh(c.alpha / 2);
  if (p > 0 && sh == 0.0) return Leading{Leading::kExactZero, 1.0};
  out.coeff *= std::pow(sh, p) * std::pow(ch, -(kk + nn + 2.0 * ee));
  auto f = specfun::hyp2f1(-label.tau - ee - double(nn), 1.0 + label.tau - ee - double(nn),
                           cplx{1.0 + p, 0.0}, -sh * sh);
  out *= f.value;
  return out;
}

cplx t_element(const IrrepLabel& label, int k, int n, const grp::CartanAngles& c,
               PhaseConvention pc) {
  auto cls = irrep::classify(label);
  if (cls.kind != irrep::SeriesKind::continuous) {
    bool ok = false;
    for (const auto& r : cls.ranges) ok = ok || (r.contains(k) && r.contains(n));
    if (!ok)
      throw DomainError("t_element: (k, n) = (" + std::to_string(k) + ", " + std::to_string(n) +
                        ") not inside one invariant subspace");
  }
  Leading l = t_leading(label, k, n, c, pc);
  if (l.order < 0) throw DomainError("t_element: gamma-ratio pole");
  return l.limit();
}

Eigen::MatrixXcd t_block(const IrrepLabel& label, int k_lo, int k_hi, const grp::CartanAngles& c,
                         PhaseConvention pc) {
  if (k_hi < k_lo) throw DomainError("t_block: empty range");
  const int n = k_hi - k_lo + 1;
  Eigen::MatrixXcd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = t_element(label, k_lo + i, k_lo + j, c, pc);
  return b;
}

}  // namespace su11::repmat
