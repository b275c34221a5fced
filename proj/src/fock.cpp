#include "su11/fock.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "su11/error.hpp"

namespace su11::fock {

namespace {

int diag_length(int dim, int shift) { return std::max(0, dim - std::abs(shift)); }

void require_same(const FockSpace& a, const FockSpace& b, const char* what) {
  if (!(a == b))
    throw DomainError(std::string(what) + ": Fock space dimensions differ (" +
                      std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

}  // namespace

FockSpace::FockSpace(int dim) : dim_(dim) {
  if (dim < 2) throw DomainError("FockSpace: dim must be >= 2");
}

ShiftedDiagonal::ShiftedDiagonal(int dim, int shift)
    : dim_(dim), shift_(shift), values_(diag_length(dim, shift)) {}

ShiftedDiagonal::ShiftedDiagonal(int dim, int shift, std::vector<cplx> values)
    : dim_(dim), shift_(shift), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != diag_length(dim, shift))
    throw DomainError("ShiftedDiagonal: value count does not match N - |shift|");
}

cplx ShiftedDiagonal::at_column(int t) const {
  int i = t - first_column();
  if (i < 0 || i >= length()) return {};
  return values_[i];
}

void ShiftedDiagonal::set_column(int t, cplx v) {
  int i = t - first_column();
  if (i < 0 || i >= length()) throw DomainError("ShiftedDiagonal: column outside support");
  values_[i] = v;
}

ShiftedDiagonal ShiftedDiagonal::adjoint() const {
  // entry (t+d, t) becomes (t, t+d): column t+d of the shift -d diagonal.
  std::vector<cplx> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::conj(values_[i]);
  return {dim_, -shift_, std::move(v)};
}

// ------------------------------------------------------------ FockOperator

FockOperator::FockOperator(FockSpace space, const ShiftedDiagonal& diag) : space_(space) {
  add(diag);
}

void FockOperator::add(const ShiftedDiagonal& diag) {
  if (diag.dim() != dim()) throw DomainError("FockOperator::add: dimension mismatch");
  if (diag.length() == 0) return;
  auto [it, inserted] = terms_.try_emplace(diag.shift(), diag.values());
  if (!inserted)
    for (int i = 0; i < diag.length(); ++i) it->second[i] += diag.values()[i];
}

ShiftedDiagonal FockOperator::diagonal(int shift) const {
  auto it = terms_.find(shift);
  if (it == terms_.end()) return {dim(), shift};
  return {dim(), shift, it->second};
}

cplx FockOperator::entry(int m, int t) const {
  if (m < 0 || t < 0 || m >= dim() || t >= dim()) return {};
  auto it = terms_.find(m - t);
  if (it == terms_.end()) return {};
  int first = m - t < 0 ? t - m : 0;
  return it->second[t - first];
}

int FockOperator::max_shift() const {
  int s = 0;
  for (const auto& [d, v] : terms_) s = std::max(s, std::abs(d));
  return s;
}

FockOperator FockOperator::adjoint() const {
  FockOperator out(space_);
  for (const auto& [d, v] : terms_) out.add(ShiftedDiagonal(dim(), d, v).adjoint());
  return out;
}

Eigen::MatrixXcd FockOperator::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim(), dim());
  for (const auto& [d, v] : terms_) {
    int first = d < 0 ? -d : 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      int t = first + static_cast<int>(i);
      m(t + d, t) = v[i];
    }
  }
  return m;
}

FockOperator FockOperator::from_dense(const Eigen::MatrixXcd& m, double drop) {
  if (m.rows() != m.cols()) throw DomainError("from_dense: matrix must be square");
  const int n = static_cast<int>(m.rows());
  FockOperator out{FockSpace(n)};
  for (int d = -(n - 1); d <= n - 1; ++d) {
    ShiftedDiagonal diag(n, d);
    bool any = false;
    for (int t = diag.first_column(); t < diag.first_column() + diag.length(); ++t) {
      cplx v = m(t + d, t);
      if (std::abs(v) > drop) {
        diag.set_column(t, v);
        any = true;
      }
    }
    if (any) out.add(diag);
  }
  return out;
}

double FockOperator::max_abs(int limit) const {
  limit = std::min(limit, dim());
  double best = 0.0;
  for (const auto& [d, v] : terms_) {
    int first = d < 0 ? -d : 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      int t = first + static_cast<int>(i);
      if (t < limit && t + d < limit) best = std::max(best, std::abs(v[i]));
    }
  }
  return best;
}

FockOperator& FockOperator::operator+=(const FockOperator& o) {
  require_same(space_, o.space_, "FockOperator +");
  for (const auto& [d, v] : o.terms_) add(ShiftedDiagonal(dim(), d, v));
  return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& o) {
  require_same(space_, o.space_, "FockOperator -");
  for (const auto& [d, v] : o.terms_) {
    std::vector<cplx> neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    add(ShiftedDiagonal(dim(), d, std::move(neg)));
  }
  return *this;
}

FockOperator& FockOperator::operator*=(cplx s) {
  for (auto& [d, v] : terms_)
    for (auto& x : v) x *= s;
  return *this;
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  require_same(a.space_, b.space_, "FockOperator *");
  const int n = a.dim();
  FockOperator out(a.space_);
  for (const auto& [d2, v2] : b.terms_) {
    const int first2 = d2 < 0 ? -d2 : 0;
    for (const auto& [d1, v1] : a.terms_) {
      const int d = d1 + d2;
      if (std::abs(d) >= n) continue;
      const int first1 = d1 < 0 ? -d1 : 0;
      ShiftedDiagonal prod(n, d);
      bool any = false;
      // column t of B lands on row j = t + d2, then row m = j + d1 of A
      for (std::size_t i = 0; i < v2.size(); ++i) {
        const int t = first2 + static_cast<int>(i);
        const int j = t + d2;
        const int i1 = j - first1;
        if (i1 < 0 || i1 >= static_cast<int>(v1.size())) continue;
        prod.set_column(t, v1[i1] * v2[i]);
        any = true;
      }
      if (any) out.add(prod);
    }
  }
  return out;
}

// ---------------------------------------------------------------- builders

FockOperator annihilation(const FockSpace& space) {
  ShiftedDiagonal d(space.dim(), -1);
  for (int t = 1; t < space.dim(); ++t) d.set_column(t, std::sqrt(double(t)));
  return {space, d};
}

FockOperator creation(const FockSpace& space) { return annihilation(space).adjoint(); }

FockOperator number(const FockSpace& space) {
  ShiftedDiagonal d(space.dim(), 0);
  for (int t = 0; t < space.dim(); ++t) d.set_column(t, double(t));
  return {space, d};
}

FockOperator identity(const FockSpace& space) {
  return {space, ShiftedDiagonal(space.dim(), 0, std::vector<cplx>(space.dim(), 1.0))};
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) {
  require_same(a.space(), b.space(), "commutator");
  return a * b - b * a;
}

FockOperator falling_factorial_diagonal(int n, const FockSpace& space) {
  if (n < 0) throw DomainError("falling_factorial_diagonal: n must be nonnegative");
  ShiftedDiagonal d(space.dim(), 0);
  for (int t = 0; t < space.dim(); ++t) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) p *= double(t - j);
    d.set_column(t, p);
  }
  return {space, d};
}

cplx trace_inner_product(const FockOperator& f, const FockOperator& g) {
  require_same(f.space(), g.space(), "trace_inner_product");
  cplx sum{};
  for (const auto& [d, vf] : f.terms()) {
    auto it = g.terms().find(d);
    if (it == g.terms().end()) continue;
    for (std::size_t i = 0; i < vf.size(); ++i) sum += std::conj(vf[i]) * it->second[i];
  }
  return sum;
}

FockOperator random_banded(const FockSpace& space, int band, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return 2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0; };
  FockOperator out(space);
  for (int d = -band; d <= band; ++d) {
    if (std::abs(d) >= space.dim()) continue;
    ShiftedDiagonal diag(space.dim(), d);
    for (auto& v : diag.values()) {
      double re = unit();
      v = cplx{re, unit()};
    }
    out.add(diag);
  }
  return out;
}

}  // namespace su11::fock
