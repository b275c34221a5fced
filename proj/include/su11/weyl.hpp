#pragma once

// The Weyl (metaplectic) operator U(g) on Fock space.
//
// U(k(psi)) is diagonal, e^{-i n psi/2}; U(h(alpha)) has the closed
// hypergeometric matrix elements; U(g) = U(k(phi)) U(h(alpha)) U(k(psi)).
// Matrix elements are exact for any index, so products that involve U can
// be summed over a padded inner dimension instead of the N x N block.

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>

#include "su11/fock.hpp"
#include "su11/grp.hpp"

namespace su11::weyl {

using cplx = std::complex<double>;

enum class Source { closed_form, quadrature, cartan_product };
std::string to_string(Source s);

/// How the inner index of a product involving U is truncated.
struct Truncation {
  bool padded = true;  ///< false: inner dimension = N (plain truncated product)
  double tol = 1e-22;  ///< column tail threshold that fixes the padded size
  int cap = 4000;
};

struct UnitaryBlock {
  fock::FockSpace space{2};
  Eigen::MatrixXcd entries;
  Source source = Source::closed_form;
  grp::CartanAngles angles;
  bool sign_flag = false;
  double unitarity_residual = 0.0;
  int inner_dim = 0;  ///< inner dimension used for the unitarity residual
};

/// U_mn(h(alpha)), closed form; exactly 0 when m + n is odd.
double squeeze_entry(int m, int n, double alpha);
/// e^{-i m phi/2} U_mn(h(alpha)) e^{-i n psi/2}
cplx weyl_entry(const grp::CartanAngles& c, int m, int n);
/// Rows 0..rows-1, columns 0..cols-1 of U(g) for the given angles.
Eigen::MatrixXcd weyl_matrix(const grp::CartanAngles& c, int rows, int cols);

/// Smallest M >= n such that |U_jl(h(alpha))| < tol for all l < n and the
/// two rows j = M, M+1 (the column tails decay monotonically past the peak).
int padded_dim(double alpha, int n, double tol = 1e-22, int cap = 4000);
int inner_dim(double alpha, int n, const Truncation& tr);

UnitaryBlock u_phase(double psi, const fock::FockSpace& space);
UnitaryBlock u_squeeze_closed(double alpha, const fock::FockSpace& space);
/// e^{alpha/4} \int Psi_m(x) Psi_n(e^{alpha/2} x) dx by Gauss-Hermite
/// quadrature. Throws DomainError if N exceeds the supported order.
UnitaryBlock u_squeeze_quadrature(double alpha, const fock::FockSpace& space);
UnitaryBlock u_of_g(const grp::GroupElement& g, const fock::FockSpace& space);

/// max |(U^dagger U - I)_{ls}| over l, s < block.
double unitarity_residual(const grp::CartanAngles& c, int block, const Truncation& tr = {});

struct HomomorphismResult {
  double residual = 0.0;  ///< max |U'(g1)U'(g2) - sign U'(g1 g2)| on the block
  int sign = 1;           ///< metaplectic sign, fixed from the (0,0) entries
  double phase_defect = 0.0;  ///< |ratio of (0,0) entries - sign|
  int inner_dim = 0;
};

/// Compares U(g1)U(g2) with U(g1 g2). U' carries the zero-point phase
/// e^{-i(phi+psi)/4}; with it the two sides differ only by a sign.
HomomorphismResult homomorphism_residual(const grp::GroupElement& g1, const grp::GroupElement& g2,
                                         int block, const Truncation& tr = {});

struct IntertwiningResult {
  double residual = 0.0;
  std::string orientation;                  ///< winning candidate
  std::map<std::string, double> candidates;  ///< all four residuals
};

/// Residual of U z U^{-1} (or U^{-1} z U) against a z + b z* for g or its
/// transpose, on rows/columns < block; the smallest of the four wins.
IntertwiningResult intertwining_residual(const grp::GroupElement& g, int block,
                                         const Truncation& tr = {});

}  // namespace su11::weyl
