#pragma once

// Identity checks. Each returns a VerificationReport; passed is exactly
// residual <= tolerance (and finite).

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "su11/fock.hpp"
#include "su11/grp.hpp"
#include "su11/irrep.hpp"
#include "su11/weyl.hpp"

namespace su11::verify {

using cplx = std::complex<double>;
using irrep::IrrepLabel;
using nlohmann::json;

struct VerificationReport {
  std::string identity_id;
  json parameters = json::object();
  double residual = 0.0;
  double tolerance = 0.0;
  double tail_estimate = 0.0;
  bool passed = false;
  json diagnostics = json::object();

  void finalize();  ///< sets passed from residual and tolerance
  json to_json() const;
};

json label_json(const IrrepLabel& label);

/// Options shared by the operator-level checks.
struct CheckOptions {
  double tol = 1e-9;
  weyl::Truncation truncation{};
  /// Inner sums over Fock indices stop after this many consecutive
  /// contributions below inner_tol times the running maximum.
  double inner_tol = 1e-18;
  int inner_cap = 6000;
  /// Adaptive n-sums stop once terms fall below this fraction of the sum.
  double series_tol = 1e-14;
  int series_cap = 400;
};

// ------------------------------------------------------- addition theorem

/// U(g) D_k U*(g) = sum_n t_nk(g) D_n on the N x N block. The left side is
/// summed over Fock indices until the contributions die out (or over N
/// indices when truncation.padded is false). Terms with n outside the
/// subspace of k that survive as 0 * pole limits are reported as
/// residue_norm; they are part of the right side.
VerificationReport check_addition(const IrrepLabel& label, int k, const grp::GroupElement& g,
                                  const fock::FockSpace& space, const CheckOptions& opt = {});

/// Difference matrix LHS - RHS used by check_addition (for consistency tests).
Eigen::MatrixXcd addition_difference(const IrrepLabel& label, int k, const grp::GroupElement& g,
                                     const fock::FockSpace& space, const CheckOptions& opt = {});

using Point = std::pair<int, int>;

/// sum_{m,t} U_lm conj(U_st) (D_k)_mt = sum_n t_nk (D_n)_ls
std::vector<VerificationReport> check_sandwich_a(const IrrepLabel& label, int k,
                                                 const grp::GroupElement& g,
                                                 const std::vector<Point>& points,
                                                 const CheckOptions& opt = {});
/// sum_m U_lm (D_k)_ms = sum_n t_nk sum_m (D_n)_lm U_ms
std::vector<VerificationReport> check_sandwich_b(const IrrepLabel& label, int k,
                                                 const grp::GroupElement& g,
                                                 const std::vector<Point>& points,
                                                 const CheckOptions& opt = {});
/// (D_k)_ls = sum_n t_nk sum_{m,t} conj(U_ml) U_ts (D_n)_mt. The literal
/// index order t_kn is evaluated too and reported as literal_residual.
std::vector<VerificationReport> check_sandwich_c(const IrrepLabel& label, int k,
                                                 const grp::GroupElement& g,
                                                 const std::vector<Point>& points,
                                                 const CheckOptions& opt = {});

// -------------------------------------------- generating function, ortho

struct SeriesOptions {
  double tol = 1e-9;
  double rel_stop = 1e-14;  ///< term-ratio tail bound relative to |sum|
  double abs_floor = 1e-15;
  int cap = 20000;
};

/// sum_n Gamma(n+lam)/(n! Gamma(lam)) s^n F(-n,a;lam;2) F(-n,b;lam;2)
///   = (1-s)^{a+b-lam} (1+s)^{-a-b} F(a, b; lam; 4s/(1+s)^2)
/// Every term of the left side is computed in exact rationals.
VerificationReport check_generating_function(cplx a, cplx b, cplx lam, double s,
                                             const SeriesOptions& opt = {});

/// Structural part: tr(D_k^dagger D'_m) on the space is exactly zero when
/// the shifts differ (k != m or eps != eps').
VerificationReport check_orthogonality_structural(const IrrepLabel& l1, int k,
                                                  const IrrepLabel& l2, int m,
                                                  const fock::FockSpace& space);

/// Regulated part (eps = eps', k = m): sum_n s^n (n+2k')!/n! conj(f_k(n)) f'_k(n)
/// against 4^{k'} conj(Gamma(1+tau+k')) Gamma(1+tau'+k') / Gamma(1+2k')^2
/// Gamma(lam) GF(1+conj(tau)+k', 1+tau'+k', lam, s), lam = 1+2k'+mu. The
/// residual is taken after dividing out the gamma prefactor. The pairing
/// without conjugation is reported as a diagnostic.
VerificationReport check_orthogonality_regulated(const IrrepLabel& l1, const IrrepLabel& l2, int k,
                                                 double s, double mu = 0.0,
                                                 const SeriesOptions& opt = {});

// ------------------------------------------------------ closing identities

/// P_tau(cosh alpha) = (sqrt(pi) cosh(alpha/2))^{-1}
///   sum_n Gamma(n+1/2)/n! tanh^{2n}(alpha/2) F(-2n, 1+tau; 1; 2)
/// The variant with F(-2n, 1+tau; 1+n; -sinh^2) is reported as
/// variant_form_residual.
VerificationReport check_legendre_identity(int tau, double alpha, double tol = 1e-10);

/// Sign conventions tried for the coefficient of the unity identity.
enum class UnitySign { plus, alternating, alternating_factorial, factorial_power };
std::string to_string(UnitySign s);
/// The convention found by the exact symbolic derivation.
constexpr UnitySign kUnitySign = UnitySign::alternating;

/// sum_{n=0}^{tau} s_n (tau+n)!/((n!)^2 (tau-n)!) tanh^{2n}(alpha/2)
///   F(-tau, 1+tau; 1+n; -sinh^2(alpha/2)) = 1
VerificationReport check_unity_identity(int tau, double alpha, double tol = 1e-11,
                                        UnitySign sign = kUnitySign);

struct UnityDerivation {
  std::string log;                    ///< human-readable expansion record
  std::vector<UnitySign> consistent;  ///< conventions for which every tau works
};
/// Expands (1+x)^tau (sum - 1) with tanh^2 = x/(1+x), x = sinh^2(alpha/2),
/// as an exact polynomial in x for tau = 1..tau_max and every convention.
UnityDerivation derive_unity_sign(int tau_max = 3);

// ------------------------------------------------------- algebra, weyl

/// [H+,H-] = 2H, [H,H+] = H+, [H,H-] = -H- applied to a random banded F.
std::vector<VerificationReport> check_lie_algebra(const fock::FockSpace& space, int band,
                                                  std::uint64_t seed, double tol = 1e-9);

/// All three ladder equations for D_k, one report per equation.
std::vector<VerificationReport> check_ladder_relations(const IrrepLabel& label, int k,
                                                       const fock::FockSpace& space,
                                                       double tol = 1e-9);

VerificationReport check_weight_edges(const IrrepLabel& label, const fock::FockSpace& space,
                                      double tol = 1e-10);

/// C_kn recurrences in exact rational arithmetic (numerator identically 0).
VerificationReport check_c_recurrences(const exact::Rational& tau, irrep::Epsilon eps, int k,
                                       int n);

VerificationReport check_cartan_roundtrip(const grp::GroupElement& g, double tol = 1e-10);
VerificationReport check_generator_commutator(const grp::GroupElement& g,
                                              const fock::FockSpace& space, double tol = 1e-12);

/// closed form vs quadrature for m, n < dim; parity zeros must be exact.
VerificationReport check_weyl_oracle(double alpha, int dim, double tol = 1e-10);
VerificationReport check_unitarity(const grp::GroupElement& g, int block, double tol = 1e-9,
                                   const weyl::Truncation& tr = {});
VerificationReport check_homomorphism(const grp::GroupElement& g1, const grp::GroupElement& g2,
                                      int block, double tol = 1e-8,
                                      const weyl::Truncation& tr = {});
VerificationReport check_intertwining(const grp::GroupElement& g, int block, double tol = 1e-9,
                                      const weyl::Truncation& tr = {});

}  // namespace su11::verify
