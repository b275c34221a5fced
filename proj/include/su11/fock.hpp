#pragma once

// Truncated Fock space and operators stored as sparse sets of shifted
// diagonals. Entry (m, t) of a diagonal with shift d is nonzero only when
// m = t + d; products are truncated to the N x N block, which is exactly
// what the dense N x N matrix product would give.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace su11::fock {

using cplx = std::complex<double>;

class FockSpace {
 public:
  explicit FockSpace(int dim);
  int dim() const { return dim_; }
  friend bool operator==(const FockSpace& a, const FockSpace& b) { return a.dim_ == b.dim_; }

 private:
  int dim_;
};

/// One diagonal m = t + shift. values()[i] sits at column t = first_column() + i.
class ShiftedDiagonal {
 public:
  ShiftedDiagonal(int dim, int shift);
  ShiftedDiagonal(int dim, int shift, std::vector<cplx> values);

  int dim() const { return dim_; }
  int shift() const { return shift_; }
  int first_column() const { return shift_ < 0 ? -shift_ : 0; }
  int length() const { return static_cast<int>(values_.size()); }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }

  /// Value at column t (zero when t is outside the diagonal's support).
  cplx at_column(int t) const;
  void set_column(int t, cplx v);
  ShiftedDiagonal adjoint() const;

 private:
  int dim_;
  int shift_;
  std::vector<cplx> values_;
};

class FockOperator {
 public:
  explicit FockOperator(FockSpace space) : space_(space) {}
  FockOperator(FockSpace space, const ShiftedDiagonal& diag);

  const FockSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }
  const std::map<int, std::vector<cplx>>& terms() const { return terms_; }

  /// Adds onto an existing diagonal with the same shift.
  void add(const ShiftedDiagonal& diag);
  /// Diagonal with the given shift (zeros if absent).
  ShiftedDiagonal diagonal(int shift) const;
  cplx entry(int m, int t) const;
  /// Largest |shift| present (0 for the zero operator).
  int max_shift() const;

  FockOperator adjoint() const;
  Eigen::MatrixXcd dense() const;
  static FockOperator from_dense(const Eigen::MatrixXcd& m, double drop = 0.0);

  /// max |entry(m,t)| over m, t < limit.
  double max_abs(int limit) const;
  double max_abs() const { return max_abs(dim()); }

  FockOperator& operator+=(const FockOperator& o);
  FockOperator& operator-=(const FockOperator& o);
  FockOperator& operator*=(cplx s);
  friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
  friend FockOperator operator-(FockOperator a, const FockOperator& b) { return a -= b; }
  friend FockOperator operator*(FockOperator a, cplx s) { return a *= s; }
  friend FockOperator operator*(cplx s, FockOperator a) { return a *= s; }
  /// Truncated product: shifts d1, d2 combine to d1 + d2.
  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);

 private:
  FockSpace space_;
  std::map<int, std::vector<cplx>> terms_;  // shift -> values by column offset
};

FockOperator annihilation(const FockSpace& space);
FockOperator creation(const FockSpace& space);
FockOperator number(const FockSpace& space);
FockOperator identity(const FockSpace& space);

/// AB - BA. Throws DomainError on mismatched spaces.
FockOperator commutator(const FockOperator& a, const FockOperator& b);

/// Diagonal t(t-1)...(t-n+1), equal to (z*)^n z^n.
FockOperator falling_factorial_diagonal(int n, const FockSpace& space);

/// tr(F^dagger G); only equal shifts contribute.
cplx trace_inner_product(const FockOperator& f, const FockOperator& g);

/// Random operator with diagonals on shifts -band..band, entries uniform in
/// the unit square. Deterministic for a given seed.
FockOperator random_banded(const FockSpace& space, int band, std::uint64_t seed);

}  // namespace su11::fock
