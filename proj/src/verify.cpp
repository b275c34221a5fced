#include "su11/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "su11/error.hpp"
#include "su11/repmat.hpp"
#include "su11/specfun.hpp"

namespace su11::verify {

namespace {

using exact::QComplex;
using specfun::Leading;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kInnerRun = 16;  // consecutive negligible inner contributions
constexpr int kOuterRun = 3;   // consecutive negligible n-terms

// F(-i, b; c; 2) for i = 0, 1, ... through the contiguous relation
// (c+i) F_{i+1} = (c-2b) F_i + i F_{i-1}, exact and extendable.
class ArgTwoStream {
 public:
  ArgTwoStream(const QComplex& b, const QComplex& c) : c_(c), c2b_(c - QComplex(2L) * b) {
    exact_.push_back(QComplex(1L));
    values_.push_back(1.0);
  }
  ArgTwoStream(cplx b, cplx c) : ArgTwoStream(QComplex::from(b), QComplex::from(c)) {}

  const QComplex& exact(int i) { extend(i); return exact_[i]; }
  cplx value(int i) { extend(i); return values_[i]; }

 private:
  void extend(int i) {
    while (static_cast<int>(exact_.size()) <= i) {
      const long n = static_cast<long>(exact_.size()) - 1;
      QComplex next = c2b_ * exact_[n];
      if (n > 0) next += QComplex(n) * exact_[n - 1];
      QComplex den = c_ + QComplex(n);
      if (den.is_zero()) throw DomainError("argument-2 recurrence: c + n = 0");
      next /= den;
      values_.push_back(next.to_complex());
      exact_.push_back(std::move(next));
    }
  }
  QComplex c_, c2b_;
  std::vector<QComplex> exact_;
  std::vector<cplx> values_;
};

// Entries of the D_n shape (every finite factor except the gamma prefactor),
// column-indexed: value i sits at (row(i), col(i)).
class DStream {
 public:
  DStream(const IrrepLabel& label, int n)
      : d_(irrep::d_shift(label.eps, n)),
        hyp_(1.0 + label.tau + irrep::kprime(label.eps, n),
             cplx{1.0 + 2.0 * irrep::kprime(label.eps, n), 0.0}) {}
  int shift() const { return d_; }
  int row(int i) const { return i + std::max(d_, 0); }
  int col(int i) const { return i + std::max(-d_, 0); }
  cplx value(int i) {
    cplx x = hyp_.value(i);
    for (int j = 1; j <= std::abs(d_); ++j) x *= std::sqrt(double(i + j));
    return x;
  }

 private:
  int d_;
  ArgTwoStream hyp_;
};

Leading d_prefactor(const IrrepLabel& label, int n) { return irrep::f_prefactor(label, n); }

/// (D_n)_{row, col} as a leading term; exact zero off the shift.
Leading d_entry(const IrrepLabel& label, int n, int row, int col) {
  const int d = irrep::d_shift(label.eps, n);
  if (row < 0 || col < 0 || row - col != d) return Leading{Leading::kExactZero, 1.0};
  DStream ds(label, n);
  return d_prefactor(label, n) * ds.value(std::min(row, col));
}

double rel(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)); }

json point_json(const Point& p) { return json::array({p.first, p.second}); }

bool in_subspace(const irrep::SeriesClass& cls, int k, int n) {
  if (cls.kind == irrep::SeriesKind::continuous) return true;
  for (const auto& r : cls.ranges)
    if (r.contains(k) && r.contains(n)) return true;
  return false;
}

// --------------------------------------------------------- inner Fock sums

struct InnerResult {
  std::vector<cplx> sums;
  int terms = 0;
  double tail = 0.0;  ///< sum of the bounds of the last negligible contributions
  bool converged = true;
};

/// forward:  S_p = sum_i v_i U_{l, row(i)} conj(U_{s, col(i)})
/// inverse:  S_p = sum_i v_i conj(U_{row(i), l}) U_{col(i), s}
/// with v_i the D-shape values. fixed_dim > 0 restricts rows and columns to
/// that dimension (plain truncated product); otherwise the sum runs until
/// kInnerRun consecutive contributions stay below inner_tol times the
/// largest one seen.
InnerResult inner_sums(const grp::CartanAngles& c, DStream& ds, const std::vector<Point>& pts,
                       bool inverse, const CheckOptions& opt, int fixed_dim) {
  std::vector<int> ls, ss;
  for (const auto& p : pts) {
    ls.push_back(p.first);
    ss.push_back(p.second);
  }
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  std::sort(ss.begin(), ss.end());
  ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
  std::vector<std::pair<int, int>> idx;
  for (const auto& p : pts)
    idx.emplace_back(int(std::lower_bound(ls.begin(), ls.end(), p.first) - ls.begin()),
                     int(std::lower_bound(ss.begin(), ss.end(), p.second) - ss.begin()));
  int reach = 0;
  for (const auto& p : pts) reach = std::max({reach, p.first + 1, p.second + 1});

  InnerResult out;
  out.sums.assign(pts.size(), cplx{});
  std::vector<cplx> ul(ls.size()), us(ss.size());
  double biggest = 0.0;
  int quiet = 0;
  std::vector<double> recent;
  const int i_max = fixed_dim > 0 ? fixed_dim - std::abs(ds.shift()) : opt.inner_cap;
  int i = 0;
  for (; i < i_max; ++i) {
    const int r = ds.row(i), q = ds.col(i);
    const cplx v = ds.value(i);
    double ml = 0.0, ms = 0.0;
    for (std::size_t j = 0; j < ls.size(); ++j) {
      ul[j] = inverse ? std::conj(weyl::weyl_entry(c, r, ls[j])) : weyl::weyl_entry(c, ls[j], r);
      ml = std::max(ml, std::abs(ul[j]));
    }
    for (std::size_t j = 0; j < ss.size(); ++j) {
      us[j] = inverse ? weyl::weyl_entry(c, q, ss[j]) : std::conj(weyl::weyl_entry(c, ss[j], q));
      ms = std::max(ms, std::abs(us[j]));
    }
    const double bound = std::abs(v) * ml * ms;
    if (bound > 0.0)
      for (std::size_t p = 0; p < pts.size(); ++p)
        out.sums[p] += v * ul[idx[p].first] * us[idx[p].second];
    biggest = std::max(biggest, bound);
    if (fixed_dim > 0) continue;
    if (bound <= opt.inner_tol * biggest) {
      ++quiet;
      recent.push_back(bound);
    } else {
      quiet = 0;
      recent.clear();
    }
    if (i + 1 >= reach + std::abs(ds.shift()) && quiet >= kInnerRun) {
      ++i;
      break;
    }
  }
  out.terms = i;
  for (double b : recent) out.tail += b;
  if (fixed_dim <= 0 && i >= opt.inner_cap) out.converged = false;
  return out;
}

// ------------------------------------------------------- outward n-sums

struct Term {
  std::vector<cplx> values;  ///< per point; empty = exact zero
  bool residue = false;      ///< n outside the subspace of k (0 * pole limit)
  bool beyond = false;       ///< no n further out in this direction contributes
};

struct OuterResult {
  std::vector<cplx> sums, residue;
  double tail = 0.0;  ///< absolute, geometric extrapolation of both directions
  int n_lo = 0, n_hi = 0, terms = 0;
  bool converged = true;
};

template <class Fn>
OuterResult outward_sum(int k, std::size_t npts, Fn&& term_at, double rel_stop, int cap) {
  OuterResult out;
  out.sums.assign(npts, cplx{});
  out.residue.assign(npts, cplx{});
  out.n_lo = out.n_hi = k;
  auto add = [&](const Term& t) {
    if (t.values.empty()) return 0.0;
    double m = 0.0;
    for (std::size_t p = 0; p < npts; ++p) {
      out.sums[p] += t.values[p];
      if (t.residue) out.residue[p] += t.values[p];
      m = std::max(m, std::abs(t.values[p]));
    }
    ++out.terms;
    return m;
  };
  auto acc_norm = [&] {
    double m = 0.0;
    for (const auto& v : out.sums) m = std::max(m, std::abs(v));
    return m;
  };
  Term t0 = term_at(k);
  add(t0);
  for (int dir : {+1, -1}) {
    int quiet = 0, zeros = 0;
    double last = 0.0, prev = 0.0;
    bool structural_end = false;
    int steps = 0;
    for (int n = k + dir;; n += dir) {
      if (++steps > cap) {
        out.converged = false;
        break;
      }
      Term t = term_at(n);
      if (t.beyond) {
        structural_end = true;
        break;
      }
      const double m = add(t);
      (dir > 0 ? out.n_hi : out.n_lo) = n;
      if (m > 0.0) {
        prev = last;
        last = m;
        zeros = 0;
      } else {
        ++zeros;
      }
      if (m <= rel_stop * acc_norm()) ++quiet; else quiet = 0;
      if (quiet >= kOuterRun) break;
    }
    if (structural_end || zeros >= kOuterRun || last == 0.0) continue;
    const double r = prev > 0.0 ? last / prev : 0.0;
    out.tail += r < 1.0 ? last * r / (1.0 - r) : kInf;
    if (r >= 1.0) out.converged = false;
  }
  return out;
}

// --------------------------------------------------------- generic series

/// Tail bound from the envelope of the term magnitudes: blocks of 8 give the
/// observed decay ratio r, and the tail is bounded by M r / (1 - r).
class Envelope {
 public:
  void push(double m) { mags_.push_back(m); }
  double tail() const {
    const std::size_t n = mags_.size();
    if (n < 16) return kInf;
    const double m1 = *std::max_element(mags_.end() - 8, mags_.end());
    const double m0 = *std::max_element(mags_.end() - 16, mags_.end() - 8);
    if (m1 == 0.0) return 0.0;
    if (m0 == 0.0) return kInf;
    const double r = std::pow(m1 / m0, 1.0 / 8.0);
    return r < 1.0 ? m1 * r / (1.0 - r) : kInf;
  }

 private:
  std::vector<double> mags_;
};

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

// ================================================================= reports

void VerificationReport::finalize() {
  passed = std::isfinite(residual) && residual <= tolerance;
}

json VerificationReport::to_json() const {
  json j;
  j["identity_id"] = identity_id;
  j["parameters"] = parameters;
  j["residual"] = residual;
  j["tolerance"] = tolerance;
  j["tail_estimate"] = tail_estimate;
  j["passed"] = passed;
  j["diagnostics"] = diagnostics;
  return j;
}

json label_json(const IrrepLabel& label) {
  return {{"tau_re", label.tau.real()},
          {"tau_im", label.tau.imag()},
          {"eps", irrep::to_string(label.eps)}};
}

namespace {

json base_params(const IrrepLabel& label, int k, const grp::CartanAngles& c) {
  json p = label_json(label);
  p["k"] = k;
  p["g"] = grp::to_json(c);
  return p;
}

}  // namespace

// ======================================================== addition theorem

namespace {

struct AdditionParts {
  Eigen::MatrixXcd lhs, rhs, residue;
  InnerResult inner;
  OuterResult outer;
};

AdditionParts addition_parts(const IrrepLabel& label, int k, const grp::GroupElement& g,
                             const fock::FockSpace& space, const CheckOptions& opt) {
  const auto cls = irrep::classify(label);
  if (!cls.contains(k))
    throw DomainError("check_addition: k is outside the invariant subspaces of this label");
  const int n_dim = space.dim();
  if (std::abs(irrep::d_shift(label.eps, k)) >= n_dim)
    throw DomainError("check_addition: shift of D_k exceeds the truncation");
  const auto c = grp::cartan_decompose(g).angles;

  std::vector<Point> pts;
  for (int l = 0; l < n_dim; ++l)
    for (int s = 0; s < n_dim; ++s) pts.emplace_back(l, s);

  AdditionParts out;
  DStream ds(label, k);
  const int fixed = opt.truncation.padded ? 0 : n_dim;
  out.inner = inner_sums(c, ds, pts, false, opt, fixed);
  const cplx pref = d_prefactor(label, k).limit();
  out.lhs.resize(n_dim, n_dim);
  for (std::size_t p = 0; p < pts.size(); ++p)
    out.lhs(pts[p].first, pts[p].second) = pref * out.inner.sums[p];

  auto term_at = [&](int n) {
    Term t;
    const int d = irrep::d_shift(label.eps, n);
    if (std::abs(d) >= n_dim) {
      t.beyond = true;
      return t;
    }
    irrep::DTerm dt = irrep::d_term(label, n, space);
    Leading total = repmat::t_leading(label, n, k, c) * dt.prefactor;
    if (total.order < 0) throw DomainError("check_addition: net pole in t_nk D_n");
    if (total.order > 0) return t;
    t.residue = !in_subspace(cls, k, n);
    t.values.assign(pts.size(), cplx{});
    for (int i = 0; i < dt.shape.length(); ++i) {
      const int col = dt.shape.first_column() + i;
      const int row = col + d;
      t.values[std::size_t(row) * n_dim + col] = total.coeff * dt.shape.at_column(col);
    }
    return t;
  };
  out.outer = outward_sum(k, pts.size(), term_at, opt.series_tol, opt.series_cap);
  out.rhs.resize(n_dim, n_dim);
  out.residue.resize(n_dim, n_dim);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    out.rhs(pts[p].first, pts[p].second) = out.outer.sums[p];
    out.residue(pts[p].first, pts[p].second) = out.outer.residue[p];
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd addition_difference(const IrrepLabel& label, int k, const grp::GroupElement& g,
                                     const fock::FockSpace& space, const CheckOptions& opt) {
  auto parts = addition_parts(label, k, g, space, opt);
  return parts.lhs - parts.rhs;
}

VerificationReport check_addition(const IrrepLabel& label, int k, const grp::GroupElement& g,
                                  const fock::FockSpace& space, const CheckOptions& opt) {
  const auto c = grp::cartan_decompose(g).angles;
  VerificationReport r;
  r.identity_id = "addition";
  r.parameters = base_params(label, k, c);
  r.parameters["dim"] = space.dim();
  r.parameters["padded"] = opt.truncation.padded;
  r.tolerance = opt.tol;
  auto parts = addition_parts(label, k, g, space, opt);
  const double scale = std::max(1.0, parts.lhs.cwiseAbs().maxCoeff());
  r.residual = (parts.lhs - parts.rhs).cwiseAbs().maxCoeff() / scale;
  const double inner_tail = parts.inner.tail * std::abs(d_prefactor(label, k).limit()) / scale;
  r.tail_estimate = parts.outer.tail / scale + inner_tail;
  const double residue = parts.residue.cwiseAbs().maxCoeff();
  r.diagnostics = {{"kind", irrep::to_string(irrep::classify(label).kind)},
                   {"n_window", json::array({parts.outer.n_lo, parts.outer.n_hi})},
                   {"n_terms", parts.outer.terms},
                   {"inner_terms", parts.inner.terms},
                   {"inner_tail", inner_tail},
                   {"lhs_max", scale},
                   {"residue_norm", residue / scale},
                   {"literal_residual",
                    (parts.lhs - parts.rhs + parts.residue).cwiseAbs().maxCoeff() / scale},
                   {"converged", parts.inner.converged && parts.outer.converged}};
  r.finalize();
  return r;
}

// ============================================================== sandwiches

std::vector<VerificationReport> check_sandwich_a(const IrrepLabel& label, int k,
                                                 const grp::GroupElement& g,
                                                 const std::vector<Point>& points,
                                                 const CheckOptions& opt) {
  const auto cls = irrep::classify(label);
  if (!cls.contains(k)) throw DomainError("check_sandwich_a: k outside the subspaces");
  const auto c = grp::cartan_decompose(g).angles;
  DStream ds(label, k);
  auto inner = inner_sums(c, ds, points, false, opt, 0);
  const cplx pref = d_prefactor(label, k).limit();
  const int twoe = label.eps == irrep::Epsilon::half ? 1 : 0;

  std::vector<VerificationReport> out;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto [l, s] = points[p];
    const cplx lhs = pref * inner.sums[p];
    cplx rhs{};
    bool residue = false;
    const int d = l - s;
    if ((d - twoe) % 2 == 0) {
      const int n = (d - twoe) / 2;
      Leading total = repmat::t_leading(label, n, k, c) * d_entry(label, n, l, s);
      if (total.order < 0) throw DomainError("check_sandwich_a: net pole");
      if (total.order == 0) rhs = total.coeff;
      residue = total.order == 0 && !in_subspace(cls, k, n);
    }
    VerificationReport r;
    r.identity_id = "sandwich_a";
    r.parameters = base_params(label, k, c);
    r.parameters["point"] = point_json(points[p]);
    r.tolerance = opt.tol;
    r.residual = rel(lhs, rhs);
    r.tail_estimate = inner.tail * std::abs(pref) / std::max(1.0, std::abs(lhs));
    r.diagnostics = {{"lhs", cplx_json(lhs)}, {"rhs", cplx_json(rhs)},
                     {"inner_terms", inner.terms}, {"residue_term", residue},
                     {"converged", inner.converged}};
    r.finalize();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> check_sandwich_b(const IrrepLabel& label, int k,
                                                 const grp::GroupElement& g,
                                                 const std::vector<Point>& points,
                                                 const CheckOptions& opt) {
  const auto cls = irrep::classify(label);
  if (!cls.contains(k)) throw DomainError("check_sandwich_b: k outside the subspaces");
  const auto c = grp::cartan_decompose(g).angles;
  const int dk = irrep::d_shift(label.eps, k);
  const cplx pref = d_prefactor(label, k).limit();

  std::vector<cplx> lhs(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto [l, s] = points[p];
    const int m = s + dk;
    if (m < 0) continue;
    lhs[p] = weyl::weyl_entry(c, l, m) * d_entry(label, k, m, s).limit();
  }
  (void)pref;

  auto term_at = [&](int n) {
    Term t;
    const int dn = irrep::d_shift(label.eps, n);
    bool any = false;
    for (const auto& pt : points) any = any || pt.first - dn >= 0;
    if (!any) {
      // m = l - d_n < 0 for every point, and it only decreases further out
      if (n > k) t.beyond = true;
      return t;
    }
    const Leading tl = repmat::t_leading(label, n, k, c);
    const Leading pn = d_prefactor(label, n);
    Leading total = tl * pn;
    if (total.order < 0) throw DomainError("check_sandwich_b: net pole");
    if (total.order > 0) return t;
    t.residue = !in_subspace(cls, k, n);
    t.values.assign(points.size(), cplx{});
    DStream ds(label, n);
    for (std::size_t p = 0; p < points.size(); ++p) {
      const auto [l, s] = points[p];
      const int m = l - dn;
      if (m < 0) continue;
      t.values[p] = total.coeff * ds.value(std::min(l, m)) * weyl::weyl_entry(c, m, s);
    }
    return t;
  };
  auto outer = outward_sum(k, points.size(), term_at, opt.series_tol, opt.series_cap);

  std::vector<VerificationReport> out;
  for (std::size_t p = 0; p < points.size(); ++p) {
    VerificationReport r;
    r.identity_id = "sandwich_b";
    r.parameters = base_params(label, k, c);
    r.parameters["point"] = point_json(points[p]);
    r.tolerance = opt.tol;
    r.residual = rel(lhs[p], outer.sums[p]);
    r.tail_estimate = outer.tail / std::max(1.0, std::abs(lhs[p]));
    r.diagnostics = {{"lhs", cplx_json(lhs[p])},
                     {"rhs", cplx_json(outer.sums[p])},
                     {"residue_part", cplx_json(outer.residue[p])},
                     {"n_window", json::array({outer.n_lo, outer.n_hi})},
                     {"converged", outer.converged}};
    r.finalize();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> check_sandwich_c(const IrrepLabel& label, int k,
                                                 const grp::GroupElement& g,
                                                 const std::vector<Point>& points,
                                                 const CheckOptions& opt) {
  const auto cls = irrep::classify(label);
  if (!cls.contains(k)) throw DomainError("check_sandwich_c: k outside the subspaces");
  const auto c = grp::cartan_decompose(g).angles;

  std::vector<cplx> lhs(points.size());
  for (std::size_t p = 0; p < points.size(); ++p)
    lhs[p] = d_entry(label, k, points[p].first, points[p].second).limit();

  // literal index order t_kn, accumulated over the same window
  std::vector<cplx> literal(points.size());
  bool literal_defined = true;
  int max_inner = 0;
  bool inner_ok = true;

  auto term_at = [&](int n) {
    Term t;
    const Leading pn = d_prefactor(label, n);
    Leading total = repmat::t_leading(label, n, k, c) * pn;
    Leading lit = repmat::t_leading(label, k, n, c) * pn;
    if (total.order < 0) throw DomainError("check_sandwich_c: net pole");
    if (total.order > 0 && lit.order > 0) return t;
    if (lit.order < 0) literal_defined = false;
    DStream ds(label, n);
    auto inner = inner_sums(c, ds, points, true, opt, 0);
    max_inner = std::max(max_inner, inner.terms);
    inner_ok = inner_ok && inner.converged;
    if (lit.order == 0)
      for (std::size_t p = 0; p < points.size(); ++p) literal[p] += lit.coeff * inner.sums[p];
    if (total.order > 0) {
      t.values.assign(points.size(), cplx{});
      return t;
    }
    t.residue = !in_subspace(cls, k, n);
    t.values.resize(points.size());
    for (std::size_t p = 0; p < points.size(); ++p) t.values[p] = total.coeff * inner.sums[p];
    return t;
  };
  auto outer = outward_sum(k, points.size(), term_at, opt.series_tol, opt.series_cap);

  std::vector<VerificationReport> out;
  for (std::size_t p = 0; p < points.size(); ++p) {
    VerificationReport r;
    r.identity_id = "sandwich_c";
    r.parameters = base_params(label, k, c);
    r.parameters["point"] = point_json(points[p]);
    r.tolerance = opt.tol;
    r.residual = rel(lhs[p], outer.sums[p]);
    r.tail_estimate = outer.tail / std::max(1.0, std::abs(lhs[p]));
    r.diagnostics = {{"lhs", cplx_json(lhs[p])},
                     {"rhs", cplx_json(outer.sums[p])},
                     {"residue_part", cplx_json(outer.residue[p])},
                     {"n_window", json::array({outer.n_lo, outer.n_hi})},
                     {"inner_terms_max", max_inner},
                     {"literal_residual",
                      literal_defined ? json(rel(lhs[p], literal[p])) : json("pole")},
                     {"converged", outer.converged && inner_ok}};
    r.finalize();
    out.push_back(std::move(r));
  }
  return out;
}

// ==================================================== generating function

namespace {

struct GfSides {
  cplx lhs, rhs;
  int terms = 0;
  double tail = kInf;
  bool converged = false;
};

cplx gf_rhs(cplx a, cplx b, cplx lam, double s) {
  const cplx e1 = a + b - lam, e2 = -a - b;
  const cplx pre = std::exp(e1 * std::log1p(-s) + e2 * std::log1p(s));
  auto f = specfun::hyp2f1(a, b, lam, 4.0 * s / ((1.0 + s) * (1.0 + s)));
  return pre * f.value;
}

GfSides gf_sides(cplx a, cplx b, cplx lam, double s, const SeriesOptions& opt) {
  if (!(s >= 0.0 && s < 1.0)) throw DomainError("generating function: need 0 <= s < 1");
  if (specfun::is_nonpositive_integer(lam))
    throw DomainError("generating function: lambda is a nonpositive integer");
  GfSides out;
  ArgTwoStream fa(a, lam), fb(b, lam);
  const QComplex ql = QComplex::from(lam), qs = QComplex::from(cplx{s, 0.0});
  QComplex weight(1L);  // (lam)_n s^n / n!
  QComplex sum;
  Envelope env;
  int n = 0;
  for (; n < opt.cap; ++n) {
    if (n > 0) {
      weight *= (ql + QComplex(long(n - 1))) * qs;
      weight /= QComplex(long(n));
    }
    QComplex term = weight * fa.exact(n) * fb.exact(n);
    sum += term;
    env.push(std::abs(term.to_complex()));
    if (s == 0.0) {
      out.tail = 0.0;
      ++n;
      break;
    }
    const double tail = env.tail();
    const double mag = std::abs(sum.to_complex());
    if (tail <= opt.rel_stop * mag || tail <= opt.abs_floor) {
      out.tail = tail;
      ++n;
      break;
    }
  }
  out.terms = n;
  out.converged = n < opt.cap || out.tail < kInf;
  out.lhs = sum.to_complex();
  out.rhs = gf_rhs(a, b, lam, s);
  return out;
}

}  // namespace

VerificationReport check_generating_function(cplx a, cplx b, cplx lam, double s,
                                             const SeriesOptions& opt) {
  VerificationReport r;
  r.identity_id = "genfun";
  r.parameters = {{"a", cplx_json(a)}, {"b", cplx_json(b)}, {"lambda", cplx_json(lam)}, {"s", s}};
  r.tolerance = opt.tol;
  auto sides = gf_sides(a, b, lam, s, opt);
  r.residual = std::abs(sides.lhs - sides.rhs);
  r.tail_estimate = sides.tail;
  r.diagnostics = {{"lhs", cplx_json(sides.lhs)},
                   {"rhs", cplx_json(sides.rhs)},
                   {"relative", r.residual / std::max(1e-300, std::abs(sides.rhs))},
                   {"terms", sides.terms},
                   {"converged", sides.converged}};
  r.finalize();
  return r;
}

VerificationReport check_orthogonality_structural(const IrrepLabel& l1, int k,
                                                  const IrrepLabel& l2, int m,
                                                  const fock::FockSpace& space) {
  if (irrep::d_shift(l1.eps, k) == irrep::d_shift(l2.eps, m))
    throw DomainError("structural orthogonality needs different shifts");
  auto d1 = irrep::d_operator(l1, k, space).as_operator();
  auto d2 = irrep::d_operator(l2, m, space).as_operator();
  const cplx v = fock::trace_inner_product(d1, d2);
  VerificationReport r;
  r.identity_id = "ortho_structural";
  r.parameters = {{"label1", label_json(l1)}, {"k", k}, {"label2", label_json(l2)}, {"m", m},
                  {"dim", space.dim()}};
  r.tolerance = 0.0;
  r.residual = std::abs(v);
  r.diagnostics = {{"trace", cplx_json(v)}};
  r.finalize();
  return r;
}

VerificationReport check_orthogonality_regulated(const IrrepLabel& l1, const IrrepLabel& l2, int k,
                                                 double s, double mu, const SeriesOptions& opt) {
  if (l1.eps != l2.eps) throw DomainError("regulated orthogonality needs eps = eps'");
  if (mu < 0.0) throw DomainError("regulated orthogonality needs mu >= 0");
  if (!irrep::classify(l1).contains(k) || !irrep::classify(l2).contains(k))
    throw DomainError("regulated orthogonality: k outside the subspaces");
  const double kp = irrep::kprime(l1.eps, k);
  const double lam = 1.0 + 2.0 * kp + mu;
  const cplx a = 1.0 + std::conj(l1.tau) + kp;
  const cplx a_plain = 1.0 + l1.tau + kp;
  const cplx b = 1.0 + l2.tau + kp;

  VerificationReport r;
  r.identity_id = "ortho_regulated";
  r.parameters = {{"label1", label_json(l1)}, {"label2", label_json(l2)}, {"k", k},
                  {"s", s},   {"mu", mu}};
  r.tolerance = opt.tol;

  // closed-form gamma prefactor 4^{k'} conj(Gamma(a)) Gamma(b) / Gamma(1+2k')^2 * Gamma(lam)
  const double g1 = std::tgamma(1.0 + 2.0 * kp);
  const cplx pref =
      std::pow(4.0, kp) * specfun::gamma(a) * specfun::gamma(b) / (g1 * g1) * std::tgamma(lam);
  const cplx pref_plain =
      std::pow(4.0, kp) * specfun::gamma(a_plain) * specfun::gamma(b) / (g1 * g1) * std::tgamma(lam);

  cplx lhs{};
  int terms = 0;
  double tail = kInf;
  if (mu == 0.0) {
    // the trace sum itself, from the f tables
    const cplx p1 = irrep::f_prefactor(l1, k).limit(), p2 = irrep::f_prefactor(l2, k).limit();
    ArgTwoStream f1(1.0 + l1.tau + kp, cplx{lam, 0.0}), f2(b, cplx{lam, 0.0});
    double w = std::tgamma(lam);  // s^n (n+2k')!/n!
    Envelope env;
    cplx sum{};
    for (int n = 0; n < opt.cap; ++n) {
      if (n > 0) w *= (n + lam - 1.0) / n * s;
      const cplx term = w * std::conj(p1 * f1.value(n)) * (p2 * f2.value(n));
      sum += term;
      env.push(std::abs(term));
      terms = n + 1;
      if (s == 0.0) { tail = 0.0; break; }
      tail = env.tail();
      if (tail <= opt.rel_stop * std::abs(sum) || tail <= opt.abs_floor) break;
    }
    lhs = sum / pref;
    tail /= std::abs(pref);
  } else {
    auto sides = gf_sides(a, b, cplx{lam, 0.0}, s, opt);
    lhs = sides.lhs;
    terms = sides.terms;
    tail = sides.tail;
  }
  const cplx rhs = gf_rhs(a, b, cplx{lam, 0.0}, s);
  const cplx rhs_plain = gf_rhs(a_plain, b, cplx{lam, 0.0}, s) * pref_plain / pref;
  r.residual = std::abs(lhs - rhs);
  r.tail_estimate = tail;
  r.diagnostics = {{"lhs_normalized", cplx_json(lhs)},
                   {"rhs_normalized", cplx_json(rhs)},
                   {"gamma_prefactor", cplx_json(pref)},
                   {"regulated_sum", cplx_json(lhs * pref)},
                   {"plain_pairing_residual", std::abs(lhs - rhs_plain)},
                   {"terms", terms}};
  r.finalize();
  return r;
}

// ==================================================== closing identities

VerificationReport check_legendre_identity(int tau, double alpha, double tol) {
  if (tau < 0) throw DomainError("legendre identity: tau must be a nonnegative integer");
  if (alpha < 0.0) throw DomainError("legendre identity: alpha must be nonnegative");
  const double th2 = std::pow(std::tanh(alpha / 2), 2);
  const double sh2 = std::pow(std::sinh(alpha / 2), 2);
  const double ch = std::cosh(alpha / 2);
  const double sqrt_pi = std::sqrt(M_PI);
  ArgTwoStream hyp(cplx{1.0 + tau, 0.0}, cplx{1.0, 0.0});

  double w = sqrt_pi;  // Gamma(n+1/2)/n! tanh^{2n}
  double sum = 0.0, variant = 0.0;
  Envelope env;
  int n = 0;
  double tail = 0.0;
  const int cap = 5000;
  for (; n < cap; ++n) {
    if (n > 0) w *= (n - 0.5) / n * th2;
    const double term = w * hyp.value(2 * n).real();
    sum += term;
    variant += w * specfun::hyp2f1_terminating(2 * n, 1.0 + tau, 1.0 + n, -sh2).value.real();
    env.push(std::abs(term));
    if (th2 == 0.0) { ++n; break; }
    tail = env.tail();
    if (tail <= 1e-16 * std::abs(sum) || tail <= 1e-16) { ++n; break; }
  }
  const double norm = sqrt_pi * ch;
  const double rhs = sum / norm;
  const double exact = specfun::legendre_p(tau, std::cosh(alpha));
  VerificationReport r;
  r.identity_id = "legendre";
  r.parameters = {{"tau", tau}, {"alpha", alpha}};
  r.tolerance = tol;
  r.residual = std::abs(rhs - exact);
  r.tail_estimate = tail / norm;
  r.diagnostics = {{"series", rhs},
                   {"legendre_p", exact},
                   {"terms", n},
                   {"variant_form_residual", std::abs(variant / norm - exact)},
                   {"converged", n < cap}};
  r.finalize();
  return r;
}

std::string to_string(UnitySign s) {
  switch (s) {
    case UnitySign::plus: return "+1";
    case UnitySign::alternating: return "(-1)^n";
    case UnitySign::alternating_factorial: return "(-1)^n n!";
    case UnitySign::factorial_power: return "(-1)^(n!)";
  }
  return "?";
}

namespace {

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long sign_factor(UnitySign s, int n) {
  switch (s) {
    case UnitySign::plus: return 1;
    case UnitySign::alternating: return n % 2 ? -1 : 1;
    case UnitySign::alternating_factorial: return (n % 2 ? -1 : 1) * factorial(n);
    case UnitySign::factorial_power: return factorial(n) % 2 ? -1 : 1;
  }
  return 1;
}

// (tau+n)! / ((n!)^2 (tau-n)!)
double unity_coefficient(int tau, int n) {
  return std::exp(std::lgamma(tau + n + 1.0) - 2.0 * std::lgamma(n + 1.0) -
                  std::lgamma(tau - n + 1.0));
}

}  // namespace

VerificationReport check_unity_identity(int tau, double alpha, double tol, UnitySign sign) {
  if (tau < 0) throw DomainError("unity identity: tau must be a nonnegative integer");
  if (alpha < 0.0) throw DomainError("unity identity: alpha must be nonnegative");
  const double th2 = std::pow(std::tanh(alpha / 2), 2);
  const double sh2 = std::pow(std::sinh(alpha / 2), 2);
  double sum = 0.0;
  for (int n = 0; n <= tau; ++n) {
    const double f = specfun::hyp2f1_terminating(tau, 1.0 + tau, 1.0 + n, -sh2).value.real();
    sum += double(sign_factor(sign, n)) * std::round(unity_coefficient(tau, n)) *
           std::pow(th2, n) * f;
  }
  VerificationReport r;
  r.identity_id = "unity";
  r.parameters = {{"tau", tau}, {"alpha", alpha}, {"sign", to_string(sign)}};
  r.tolerance = tol;
  r.residual = std::abs(sum - 1.0);
  r.diagnostics = {{"sum", sum}, {"terms", tau + 1}};
  r.finalize();
  return r;
}

UnityDerivation derive_unity_sign(int tau_max) {
  using exact::Polynomial;
  using exact::Rational;
  const std::vector<UnitySign> all = {UnitySign::plus, UnitySign::alternating,
                                      UnitySign::alternating_factorial,
                                      UnitySign::factorial_power};
  std::ostringstream log;
  log << "Unity identity: sign convention by exact expansion\n";
  log << "x = sinh^2(alpha/2), tanh^2(alpha/2) = x/(1+x)\n";
  log << "E(x) = (1+x)^tau * (sum_n s_n (tau+n)!/((n!)^2 (tau-n)!) (x/(1+x))^n "
         "F(-tau,1+tau;1+n;-x) - 1)\n";
  log << "       = sum_n s_n c_n x^n (1+x)^(tau-n) F_n(x) - (1+x)^tau\n";
  log << "The identity holds for all alpha iff E is the zero polynomial.\n\n";
  // F(-tau, 1+tau; 1+n; -x) = sum_j (-tau)_j (1+tau)_j / ((1+n)_j j!) (-x)^j
  auto hyp_poly = [](int tau, int n) {
    std::vector<Rational> coeffs;
    Rational t = 1;
    for (int j = 0; j <= tau; ++j) {
      coeffs.push_back(t);
      t *= Rational(j - tau) * Rational(1 + tau + j) / (Rational(1 + n + j) * (j + 1)) * -1;
    }
    return Polynomial(coeffs);
  };
  std::map<UnitySign, bool> ok;
  for (auto s : all) ok[s] = true;
  const Polynomial one_plus_x = Polynomial::linear(1, 1);
  for (int tau = 1; tau <= tau_max; ++tau) {
    log << "tau = " << tau << "\n";
    for (int n = 0; n <= tau; ++n) {
      // F(-tau, 1+tau; 1+n; -x) = sum_j (-tau)_j (1+tau)_j / ((1+n)_j j!) (-x)^j
      log << "  F_" << n << "(x) = " << hyp_poly(tau, n).to_string() << "\n";
    }
    for (auto s : all) {
      Polynomial e = exact::pow(one_plus_x, tau) * Rational(-1);
      for (int n = 0; n <= tau; ++n) {
        Rational cn = Rational(factorial(tau + n)) /
                      (Rational(factorial(n)) * factorial(n) * factorial(tau - n));
        std::vector<Rational> xn(n + 1, Rational(0));
        xn[n] = 1;
        Polynomial term = Polynomial(xn) * exact::pow(one_plus_x, tau - n) * hyp_poly(tau, n);
        e += term * (cn * sign_factor(s, n));
      }
      const bool zero = e.is_zero();
      ok[s] = ok[s] && zero;
      log << "  s_n = " << to_string(s) << ": E(x) = " << (zero ? "0" : e.to_string()) << "\n";
    }
    log << "\n";
  }
  UnityDerivation out;
  log << "consistent for tau = 1.." << tau_max << ":";
  for (auto s : all)
    if (ok[s]) {
      out.consistent.push_back(s);
      log << " " << to_string(s);
    }
  if (out.consistent.empty()) log << " none";
  log << "\n";
  out.log = log.str();
  return out;
}

// ======================================================= algebra and weyl

std::vector<VerificationReport> check_lie_algebra(const fock::FockSpace& space, int band,
                                                  std::uint64_t seed, double tol) {
  const auto f = fock::random_banded(space, band, seed);
  const int limit = space.dim() - (band + 4);
  if (limit <= 0) throw DomainError("check_lie_algebra: band too wide for the space");
  auto hp = [](const fock::FockOperator& x) { return irrep::ladder_plus(x); };
  auto hm = [](const fock::FockOperator& x) { return irrep::ladder_minus(x); };
  auto hh = [](const fock::FockOperator& x) { return irrep::ladder_h(x); };
  struct Case {
    std::string id;
    fock::FockOperator lhs, rhs;
  };
  std::vector<Case> cases = {
      {"algebra_plus_minus", hp(hm(f)) - hm(hp(f)), 2.0 * hh(f)},
      {"algebra_h_plus", hh(hp(f)) - hp(hh(f)), hp(f)},
      {"algebra_h_minus", hh(hm(f)) - hm(hh(f)), -1.0 * hm(f)},
  };
  std::vector<VerificationReport> out;
  for (auto& c : cases) {
    VerificationReport r;
    r.identity_id = c.id;
    r.parameters = {{"dim", space.dim()}, {"band", band}, {"seed", seed}};
    r.tolerance = tol;
    r.residual =
        (c.lhs - c.rhs).max_abs(limit) / std::max({1.0, c.lhs.max_abs(limit), c.rhs.max_abs(limit)});
    r.diagnostics = {{"interior", limit}};
    r.finalize();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> check_ladder_relations(const IrrepLabel& label, int k,
                                                       const fock::FockSpace& space, double tol) {
  auto res = irrep::check_ladders(label, k, space);
  json p = label_json(label);
  p["k"] = k;
  p["dim"] = space.dim();
  std::vector<VerificationReport> out;
  const std::pair<const char*, double> parts[] = {
      {"ladder_minus", res.minus}, {"ladder_plus", res.plus}, {"ladder_h", res.h}};
  for (const auto& [id, v] : parts) {
    VerificationReport r;
    r.identity_id = id;
    r.parameters = p;
    r.tolerance = tol;
    r.residual = v;
    r.diagnostics = {{"margin", res.margin},
                     {"minus_uses_limit", res.minus_uses_limit},
                     {"plus_uses_limit", res.plus_uses_limit}};
    r.finalize();
    out.push_back(std::move(r));
  }
  return out;
}

VerificationReport check_weight_edges(const IrrepLabel& label, const fock::FockSpace& space,
                                      double tol) {
  auto w = irrep::highest_lowest_weight_check(label, space, tol);
  VerificationReport r;
  r.identity_id = "weight_edges";
  r.parameters = label_json(label);
  r.parameters["dim"] = space.dim();
  r.tolerance = tol;
  json edges = json::array();
  for (const auto& e : w.edges) {
    r.residual = std::max(r.residual, e.literal_norm);
    edges.push_back({{"k", e.k}, {"ladder", e.ladder}, {"norm", e.literal_norm}});
  }
  r.diagnostics = {{"edges", edges}};
  r.finalize();
  return r;
}

VerificationReport check_c_recurrences(const exact::Rational& tau, irrep::Epsilon eps, int k,
                                       int n) {
  auto rr = irrep::recurrence_residuals(tau, eps, k, n);
  VerificationReport r;
  r.identity_id = "c_recurrence";
  r.parameters = {{"tau", tau.get_str()}, {"eps", irrep::to_string(eps)}, {"k", k}, {"n", n}};
  r.tolerance = 0.0;
  r.residual = (rr.first.is_zero() ? 0.0 : 1.0) + (rr.second.is_zero() ? 0.0 : 1.0);
  r.diagnostics = {{"first", rr.first.is_zero() ? "0" : rr.first.numerator().to_string("delta")},
                   {"second", rr.second.is_zero() ? "0" : rr.second.numerator().to_string("delta")}};
  r.finalize();
  return r;
}

VerificationReport check_cartan_roundtrip(const grp::GroupElement& g, double tol) {
  auto d = grp::cartan_decompose(g);
  VerificationReport r;
  r.identity_id = "cartan_roundtrip";
  r.parameters = grp::to_json(g);
  r.tolerance = tol;
  r.residual = d.roundtrip_residual;
  r.diagnostics = {{"angles", grp::to_json(d.angles)}, {"sign_flag", d.sign_flag}};
  r.finalize();
  return r;
}

VerificationReport check_generator_commutator(const grp::GroupElement& g,
                                              const fock::FockSpace& space, double tol) {
  auto [gz, gzs] = grp::act_on_generators(g, space);
  auto comm = fock::commutator(gz, gzs) - fock::identity(space);
  const int limit = space.dim() - 1;
  VerificationReport r;
  r.identity_id = "generator_commutator";
  r.parameters = grp::to_json(g);
  r.parameters["dim"] = space.dim();
  r.tolerance = tol;
  r.residual = comm.max_abs(limit);
  r.diagnostics = {{"interior", limit}};
  r.finalize();
  return r;
}

VerificationReport check_weyl_oracle(double alpha, int dim, double tol) {
  fock::FockSpace space(dim);
  auto closed = weyl::u_squeeze_closed(alpha, space);
  auto quad = weyl::u_squeeze_quadrature(alpha, space);
  int parity_violations = 0;
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n)
      if ((m + n) % 2 == 1 && closed.entries(m, n) != cplx{}) ++parity_violations;
  VerificationReport r;
  r.identity_id = "weyl_oracle";
  r.parameters = {{"alpha", alpha}, {"dim", dim}};
  r.tolerance = tol;
  r.residual = (closed.entries - quad.entries).cwiseAbs().maxCoeff();
  if (parity_violations > 0) r.residual = std::max(r.residual, 1.0);
  r.diagnostics = {{"parity_violations", parity_violations}};
  r.finalize();
  return r;
}

VerificationReport check_unitarity(const grp::GroupElement& g, int block, double tol,
                                   const weyl::Truncation& tr) {
  const auto c = grp::cartan_decompose(g).angles;
  VerificationReport r;
  r.identity_id = "unitarity";
  r.parameters = grp::to_json(c);
  r.parameters["block"] = block;
  r.tolerance = tol;
  r.residual = weyl::unitarity_residual(c, block, tr);
  r.diagnostics = {{"inner_dim", weyl::inner_dim(c.alpha, block, tr)}};
  r.finalize();
  return r;
}

VerificationReport check_homomorphism(const grp::GroupElement& g1, const grp::GroupElement& g2,
                                      int block, double tol, const weyl::Truncation& tr) {
  auto h = weyl::homomorphism_residual(g1, g2, block, tr);
  VerificationReport r;
  r.identity_id = "homomorphism";
  r.parameters = {{"g1", grp::to_json(grp::cartan_decompose(g1).angles)},
                  {"g2", grp::to_json(grp::cartan_decompose(g2).angles)},
                  {"block", block}};
  r.tolerance = tol;
  r.residual = h.residual;
  r.diagnostics = {{"sign", h.sign}, {"phase_defect", h.phase_defect}, {"inner_dim", h.inner_dim}};
  r.finalize();
  return r;
}

VerificationReport check_intertwining(const grp::GroupElement& g, int block, double tol,
                                      const weyl::Truncation& tr) {
  auto in = weyl::intertwining_residual(g, block, tr);
  VerificationReport r;
  r.identity_id = "intertwining";
  r.parameters = grp::to_json(grp::cartan_decompose(g).angles);
  r.parameters["block"] = block;
  r.tolerance = tol;
  r.residual = in.residual;
  json cands = json::object();
  for (const auto& [name, v] : in.candidates) cands[name] = v;
  r.diagnostics = {{"orientation", in.orientation}, {"candidates", cands}};
  r.finalize();
  return r;
}

}  // namespace su11::verify
