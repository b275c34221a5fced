#pragma once

// Matrix elements t_kn(g) of the irreducible representations in the D_k
// basis: U(g) D_k U*(g) = sum_n t_nk(g) D_n.
//
// For k >= n
//   t_kn(h(alpha)) = Gamma(1+tau-eps-n)/Gamma(1+tau-eps-k) / (k-n)!
//                    sinh^{k-n}(alpha/2) / cosh^{k+n+2eps}(alpha/2)
//                    F(-tau-eps-n, 1+tau-eps-n; 1+k-n; -sinh^2(alpha/2)),
// and for k < n the same expression with (k, n, eps) -> (-k, -n, -eps).
// The Cartan angles enter as the phase e^{-i(k+eps)phi - i(n+eps)psi}.

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "su11/grp.hpp"
#include "su11/irrep.hpp"

namespace su11::repmat {

using cplx = std::complex<double>;
using irrep::IrrepLabel;
using specfun::Leading;

/// phi on the first index and psi on the second (default), or the literal
/// variant with k+eps in both exponents (kept for the convention test).
enum class PhaseConvention { row_col, literal_kk };

/// t_kn as a leading term in delta (tau -> tau + delta). No range check:
/// outside the invariant subspaces the gamma ratio may vanish.
Leading t_leading(const IrrepLabel& label, int k, int n, const grp::CartanAngles& c,
                  PhaseConvention pc = PhaseConvention::row_col);

/// t_kn(g). For kinds (ii)/(iii) both indices must lie in one invariant
/// subspace; throws DomainError otherwise or at a gamma-ratio pole.
cplx t_element(const IrrepLabel& label, int k, int n, const grp::CartanAngles& c,
               PhaseConvention pc = PhaseConvention::row_col);

/// Block B(i, j) = t_{k_lo+i, k_lo+j} over [k_lo, k_hi].
Eigen::MatrixXcd t_block(const IrrepLabel& label, int k_lo, int k_hi, const grp::CartanAngles& c,
                         PhaseConvention pc = PhaseConvention::row_col);

}  // namespace su11::repmat
