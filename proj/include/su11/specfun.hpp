#pragma once

// Scalar special-function kernels: Gauss 2F1 (terminating and convergent),
// pole-safe gamma ratios, complex log-gamma, normalized Hermite functions,
// Gauss-Hermite rules and Legendre polynomials.

#include <complex>
#include <vector>

#include "su11/exact.hpp"

namespace su11::specfun {

using cplx = std::complex<double>;

/// Double-precision result of a finite sum together with the condition
/// estimate sum|term| / |sum| (1 for cancellation-free sums).
struct SeriesValue {
  cplx value;
  double condition = 1.0;
  int terms = 0;
};

/// Leading term c * delta^order of a quantity that depends analytically on a
/// regulator delta (tau -> tau + delta). order < 0 is a pole, order > 0 a
/// zero; products of such quantities have finite limits when orders cancel.
struct Leading {
  int order = 0;
  cplx coeff{1.0, 0.0};

  /// Order given to an identically zero, delta-independent quantity; large
  /// enough that no product of poles can bring it back to a finite value.
  static constexpr int kExactZero = 1 << 20;

  static Leading value(cplx v) { return v == cplx{} ? Leading{kExactZero, 1.0} : Leading{0, v}; }
  /// Limit delta -> 0. Throws DomainError for a pole.
  cplx limit() const;
  bool is_exact_zero() const { return order >= kExactZero / 2; }
  Leading& operator*=(const Leading& o) {
    order += o.order;
    coeff *= o.coeff;
    return *this;
  }
  Leading& operator*=(cplx s) {
    if (s == cplx{}) order += kExactZero; else coeff *= s;
    return *this;
  }
  friend Leading operator*(Leading a, const Leading& b) { return a *= b; }
  friend Leading operator*(Leading a, cplx s) { return a *= s; }
};

/// True when z is (within 1e-12) a nonpositive integer; writes it to *n.
bool is_nonpositive_integer(cplx z, int* n = nullptr);

// ------------------------------------------------------------------ 2F1

/// F(-n, b; c; x) with exactly n+1 terms, Neumaier-compensated.
/// Throws DomainError when c + j = 0 for some j < n.
SeriesValue hyp2f1_terminating(int n, cplx b, cplx c, cplx x);

/// Same series evaluated in exact rational arithmetic.
exact::QComplex hyp2f1_terminating_exact(int n, const exact::QComplex& b,
                                         const exact::QComplex& c,
                                         const exact::QComplex& x);

/// Table F(-n, b; c; 2) for n = 0..n_max via the contiguous relation
/// (c+n) F_{n+1} = (c - 2b) F_n + n F_{n-1}, exact.
std::vector<exact::QComplex> hyp2f1_arg2_table(int n_max, const exact::QComplex& b,
                                               const exact::QComplex& c);

struct Hyp2f1Value {
  cplx value;
  int terms = 0;
  double tail_bound = 0.0;
  bool pfaff = false;  ///< evaluated after the Pfaff transformation
};

/// Gauss hypergeometric function for real x < 1. For x < 0 the Pfaff
/// transformation F(a,b;c;x) = (1-x)^{-a} F(a, c-b; c; x/(x-1)) maps the
/// argument into [0,1); a terminating parameter is kept in the first slot.
/// Throws DomainError for x >= 1 or a nonpositive-integer c that is reached
/// before termination.
Hyp2f1Value hyp2f1(cplx a, cplx b, cplx c, double x);

/// Plain power series for |x| < 1 with no transformation (used as the second
/// evaluation route in tests).
Hyp2f1Value hyp2f1_direct(cplx a, cplx b, cplx c, double x);

// ---------------------------------------------------------------- gamma

cplx lgamma(cplx z);
cplx gamma(cplx z);

/// Gamma(z+k)/Gamma(z), never evaluating Gamma itself at a pole: a finite
/// product for |k| <= 32 or when a factor vanishes, log-gamma differences
/// otherwise. Throws DomainError if a denominator factor is zero (k < 0).
cplx gamma_ratio_shift(cplx z, int k);

/// Gamma(z+k)/Gamma(z) with z -> z + slope*delta, as a leading term in delta.
/// Handles a vanishing factor in either orientation.
Leading gamma_ratio_shift_leading(cplx z, int k, double slope);

/// Gamma(z + slope*delta) as a leading term: residue (-1)^p/(p! slope) at the
/// pole z = -p, the ordinary value elsewhere.
Leading gamma_leading(cplx z, double slope);

// -------------------------------------------------------------- Hermite

struct HermiteValue {
  double value = 0.0;
  bool underflow = false;  ///< exp(-x^2/2) underflows; value reported as 0
};

constexpr int kHermiteMaxOrder = 128;

/// Normalized oscillator function Psi_n(x) via the three-term recurrence
/// Psi_{n+1} = sqrt(2/(n+1)) x Psi_n - sqrt(n/(n+1)) Psi_{n-1}.
HermiteValue hermite_psi(int n, double x);

/// Psi_n(x) e^{x^2/2} for n = 0..n_max (the polynomial part; no exponential,
/// so it is safe at large |x| where the Gaussian would underflow).
std::vector<double> hermite_polynomial_part(int n_max, double x);

struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;  ///< for the weight function e^{-x^2}
};

/// `order`-point Gauss-Hermite rule (exact for polynomials of degree
/// 2*order-1 against e^{-x^2}).
GaussHermiteRule gauss_hermite(int order);

/// Legendre polynomial P_tau(u) by the Bonnet recurrence.
double legendre_p(int tau, double u);

}  // namespace su11::specfun
