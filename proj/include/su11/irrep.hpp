#pragma once

// Irreducible representations realized on Fock-space operators: labels
// (tau, eps), the series classification, the coefficients C_kn, the
// diagonal symbols f_k(zeta) and the basis operators D_k, plus the ladder
// superoperators, which are commutators with the quadratic generators.
//
// Normalization: f_k = sigma 2^{k'} Gamma(1+tau+k')/Gamma(1+2k') F(-zeta, 1+tau+k'; 1+2k'; 2)
// with k' = k + eps (k >= 0) or -k - eps (k < 0), and sigma = -1 only for
// eps = 1/2, k < 0. This is the normalization under which the ladder
// relations hold with coefficients -(k+tau+eps) and (k-tau+eps).

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "su11/exact.hpp"
#include "su11/fock.hpp"
#include "su11/specfun.hpp"

namespace su11::irrep {

using cplx = std::complex<double>;
using specfun::Leading;

enum class Epsilon { zero, half };
double value(Epsilon e);
std::string to_string(Epsilon e);

struct IrrepLabel {
  cplx tau;
  Epsilon eps = Epsilon::zero;
  double epsilon() const { return value(eps); }
};

enum class SeriesKind { continuous, discrete_pair, finite };
std::string to_string(SeriesKind k);

/// Integer interval; a missing bound means unbounded on that side.
struct KRange {
  std::optional<long> lo, hi;
  bool contains(long k) const { return (!lo || k >= *lo) && (!hi || k <= *hi); }
  std::string to_string() const;
};

struct SeriesClass {
  SeriesKind kind = SeriesKind::continuous;
  std::vector<KRange> ranges;  ///< one (i, iii) or two (ii) invariant subspaces
  bool contains(long k) const;
  /// The subspace containing k; throws DomainError if none does.
  const KRange& range_of(long k) const;
};

SeriesClass classify(const IrrepLabel& label);

/// Shift 2k + 2 eps of D_k.
int d_shift(Epsilon eps, int k);
/// k' = k + eps for k >= 0 and -k - eps for k < 0.
double kprime(Epsilon eps, int k);

// ----------------------------------------------------------- coefficients

/// C_kn = Gamma(1+tau+eps+k+n) / Gamma(1+2eps+2k+n); a denominator pole
/// gives 0. Throws DomainError at a numerator pole.
cplx coefficient_c(const IrrepLabel& label, int k, int n);

/// C_kn(tau + delta) / Gamma(1 + tau + eps + delta) as an exact rational
/// function of delta, for rational tau.
exact::RationalFunction coefficient_c_normalized(const exact::Rational& tau, Epsilon eps, int k,
                                                 int n);

struct RecurrenceResidual {
  /// p n C_{k,n-1} + (k+eps+tau) C_{k-1,n} - p (2k+2eps+n) C_kn, p = 2k+2eps+n-1
  exact::RationalFunction first;
  /// C_{k,n+1} - C_{k,n+2} - (k+eps-tau) C_{k+1,n}
  exact::RationalFunction second;
};

/// Both recurrences evaluated on the normalized coefficients, in tau + delta.
/// The identities hold iff both numerators are the zero polynomial.
RecurrenceResidual recurrence_residuals(const exact::Rational& tau, Epsilon eps, int k, int n);

// --------------------------------------------------------------- f and D

/// sigma 2^{k'} Gamma(1+tau+k') / Gamma(1+2k') as a leading term in delta
/// (tau -> tau + delta); a pole for discrete-series labels outside the range.
Leading f_prefactor(const IrrepLabel& label, int k);

/// F(-zeta, 1+tau+k'; 1+2k'; 2) for zeta = 0..zeta_max, exact recurrence.
std::vector<cplx> f_hyp_table(const IrrepLabel& label, int k, int zeta_max);

/// f_k(zeta); throws DomainError where the prefactor has a pole.
cplx f_value(const IrrepLabel& label, int k, int zeta);
std::vector<cplx> f_table(const IrrepLabel& label, int k, int zeta_max);

/// The defining series sum_n (-1)^n 2^{n+k'}/n! C_kn zeta(zeta-1)...(zeta-n+1)
/// (with eps -> -eps and k -> -k for k < 0, and the same sigma), summed
/// term by term in double precision. Independent oracle for f_value.
cplx f_series(const IrrepLabel& label, int k, int zeta);

struct DOperator {
  IrrepLabel label;
  int k = 0;
  fock::ShiftedDiagonal op{2, 0};
  int shift() const { return op.shift(); }
  fock::FockOperator as_operator() const { return {fock::FockSpace(op.dim()), op}; }
};

/// D_k with entries sqrt(m!/t!) f_k(t) (k >= 0) or sqrt(t!/m!) f_k(m)
/// (k < 0), m = t + 2k + 2eps. Refuses k outside classify(label) and
/// shifts that do not fit in the space.
DOperator d_operator(const IrrepLabel& label, int k, const fock::FockSpace& space);

/// Same operator assembled as (z*)^{2k'} f_k(zeta) or f_k(zeta) z^{2k'}
/// through truncated operator products.
DOperator d_operator_product(const IrrepLabel& label, int k, const fock::FockSpace& space);

/// D_k = prefactor * shape (as delta -> 0) without the range check; the
/// shape carries every finite factor. Used for limits at Gamma poles.
struct DTerm {
  Leading prefactor;
  fock::ShiftedDiagonal shape{2, 0};
};
DTerm d_term(const IrrepLabel& label, int k, const fock::FockSpace& space);
/// D_k entries at rows/columns beyond the space, for padded products:
/// (D_k)_{t+d, t} for t = 0..count-1 as a plain column-indexed vector.
std::vector<cplx> d_column_values(const IrrepLabel& label, int k, int count);

// ---------------------------------------------------------------- ladders

fock::FockOperator ladder_minus(const fock::FockOperator& f);  ///< 1/2 [F, z^2]
fock::FockOperator ladder_plus(const fock::FockOperator& f);   ///< 1/2 [z*^2, F]
fock::FockOperator ladder_h(const fock::FockOperator& f);      ///< 1/2 [zeta, F]

struct LadderResult {
  double minus = 0.0, plus = 0.0, h = 0.0;  ///< relative interior residuals
  int margin = 0;
  bool minus_uses_limit = false;  ///< target was a 0 * pole limit
  bool plus_uses_limit = false;
};

/// H- D_k = -(k+tau+eps) D_{k-1}, H+ D_k = (k-tau+eps) D_{k+1},
/// H D_k = (k+eps) D_k on the interior block N - (|2k+2eps| + 2). Targets
/// with a vanishing coefficient next to a pole use the finite limit.
LadderResult check_ladders(const IrrepLabel& label, int k, const fock::FockSpace& space);

struct EdgeResult {
  int k = 0;
  std::string ladder;        ///< "plus" at the top edge, "minus" at the bottom
  double literal_norm = 0.0;  ///< interior max |H D_k|; 0 if the edge is annihilated
};

struct WeightCheck {
  std::vector<EdgeResult> edges;
  double tolerance = 1e-10;
  bool passed = true;
};

/// H+ D_{tau-eps} = 0 and H- D_{-tau-eps} = 0 at every finite edge of the
/// invariant subspaces. Requires kind (ii) or (iii).
WeightCheck highest_lowest_weight_check(const IrrepLabel& label, const fock::FockSpace& space,
                                        double tol = 1e-10);

}  // namespace su11::irrep
