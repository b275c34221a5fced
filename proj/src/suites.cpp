#include "su11/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "su11/error.hpp"

namespace su11::suites {

namespace {

using irrep::Epsilon;
using irrep::IrrepLabel;
using verify::VerificationReport;
using cplx = std::complex<double>;

constexpr Epsilon kZero = Epsilon::zero;
constexpr Epsilon kHalf = Epsilon::half;

// fixed per-suite offsets keep the suites' random streams independent
std::mt19937_64 stream(const RunConfig& cfg, std::uint64_t offset) {
  return std::mt19937_64(cfg.seed * 0x9E3779B97F4A7C15ULL + offset);
}

double unit(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

bool is_finite_kind(const IrrepLabel& l) {
  return irrep::classify(l).kind == irrep::SeriesKind::finite;
}

double kind_tolerance(const IrrepLabel& l) { return is_finite_kind(l) ? 1e-9 : 1e-8; }

void apply_tol(VerificationReport& r, const RunConfig& cfg) {
  if (cfg.tol && r.tolerance > 0.0) r.tolerance = *cfg.tol;
  r.finalize();
}

VerificationReport error_report(const std::string& id, nlohmann::json params,
                                const std::string& what) {
  VerificationReport r;
  r.identity_id = id;
  r.parameters = std::move(params);
  r.residual = std::nan("");
  r.tolerance = pinned_tolerance(id);
  r.diagnostics = {{"error", what}};
  r.finalize();
  return r;
}

/// k values in the subspaces of the label, within [-kmax, kmax], whose shift
/// leaves at least `margin` rows of the N x N space.
std::vector<int> default_ks(const IrrepLabel& l, int kmax, int dim, int margin = 1) {
  std::vector<int> out;
  const auto cls = irrep::classify(l);
  for (int k = -kmax; k <= kmax; ++k)
    if (cls.contains(k) && std::abs(irrep::d_shift(l.eps, k)) + margin <= dim) out.push_back(k);
  return out;
}

std::vector<IrrepLabel> override_labels(const RunConfig& cfg) {
  std::vector<IrrepLabel> out;
  for (cplx t : *cfg.tau) {
    if (cfg.eps) {
      out.push_back({t, *cfg.eps});
    } else {
      out.push_back({t, kZero});
    }
  }
  return out;
}

std::vector<grp::CartanAngles> random_gs(std::mt19937_64& rng, int count, double alpha_max) {
  std::vector<grp::CartanAngles> out;
  for (int i = 0; i < count; ++i) out.push_back(grp::random_angles(rng, alpha_max));
  return out;
}

/// Group elements from the overrides, or nullopt for the suite default.
std::optional<std::vector<grp::CartanAngles>> override_gs(const RunConfig& cfg,
                                                         std::mt19937_64& rng,
                                                         double alpha_max) {
  if (cfg.random_g) return random_gs(rng, cfg.count.value_or(20), alpha_max);
  if (cfg.g) return *cfg.g;
  if (cfg.alpha) {
    std::vector<grp::CartanAngles> out;
    for (double a : *cfg.alpha) out.push_back({cfg.phi, a, cfg.psi});
    return out;
  }
  return std::nullopt;
}

grp::CartanAngles pure_h(double alpha) { return {0.0, alpha, 0.0}; }

// ------------------------------------------------------- addition family

struct Config {
  IrrepLabel label;
  int k = 0;
  grp::CartanAngles g;
};

std::vector<Config> addition_configs(const RunConfig& cfg) {
  auto rng = stream(cfg, 1);
  std::vector<Config> out;
  if (cfg.tau) {
    auto gs = override_gs(cfg, rng, 1.5);
    if (!gs) gs = random_gs(rng, cfg.count.value_or(5), 1.0);
    for (const auto& l : override_labels(cfg)) {
      const auto cls = irrep::classify(l);
      std::vector<int> ks = cfg.k ? *cfg.k : default_ks(l, 3, cfg.dim);
      for (int k : ks) {
        if (!cls.contains(k)) throw ConfigError("k = " + std::to_string(k) +
                                                " is outside the subspaces of the label");
        for (const auto& g : *gs) out.push_back({l, k, g});
      }
    }
    return out;
  }
  struct Block {
    std::vector<IrrepLabel> labels;
    int count;
    double alpha_max;
  };
  const std::vector<Block> blocks = {
      {{{1.0, kZero}, {2.0, kZero}}, 20, 1.5},                   // finite, integer
      {{{1.5, kHalf}}, 5, 1.5},                                   // finite, half-integer
      {{{cplx{-0.5, 1.0}, kZero}, {cplx{-0.5, 1.0}, kHalf}}, 5, 1.0},  // continuous
      {{{-1.0, kZero}, {-1.5, kHalf}}, 5, 1.0},                   // discrete pair
  };
  for (const auto& b : blocks) {
    auto gs = override_gs(cfg, rng, b.alpha_max);
    if (!gs) gs = random_gs(rng, b.count, b.alpha_max);
    for (const auto& l : b.labels)
      for (int k : cfg.k ? *cfg.k : default_ks(l, is_finite_kind(l) ? 3 : 2, cfg.dim)) {
        if (!irrep::classify(l).contains(k)) continue;
        for (const auto& g : *gs) out.push_back({l, k, g});
      }
  }
  if (!cfg.k && !cfg.g && !cfg.random_g && !cfg.alpha) {
    out.push_back({{1.0, kZero}, 0, pure_h(1.0)});
    out.push_back({{cplx{-0.5, 1.0}, kZero}, 0, pure_h(0.5)});
    out.push_back({{1.0, kZero}, 1, pure_h(0.5)});
  }
  return out;
}

std::vector<verify::Point> sample_points(std::mt19937_64& rng, int count, int bound) {
  std::vector<verify::Point> pts;
  for (int i = 0; i < count; ++i) {
    const int l = int(unit(rng) * bound), s = int(unit(rng) * bound);
    pts.emplace_back(l, s);
  }
  return pts;
}

std::vector<VerificationReport> run_addition(const RunConfig& cfg) {
  std::vector<VerificationReport> out;
  fock::FockSpace space(cfg.dim);
  for (const auto& c : addition_configs(cfg)) {
    verify::CheckOptions opt;
    opt.tol = kind_tolerance(c.label);
    const auto g = grp::cartan_compose(c.g);
    try {
      auto r = verify::check_addition(c.label, c.k, g, space, opt);
      apply_tol(r, cfg);
      out.push_back(std::move(r));
    } catch (const DomainError& e) {
      nlohmann::json p = verify::label_json(c.label);
      p["k"] = c.k;
      p["g"] = grp::to_json(c.g);
      out.push_back(error_report("addition", p, e.what()));
    }
  }
  return out;
}

std::vector<VerificationReport> run_sandwich(const RunConfig& cfg) {
  std::vector<VerificationReport> out;
  auto rng = stream(cfg, 2);
  const int bound = std::max(2, cfg.dim / 2);
  auto configs = addition_configs(cfg);
  for (const auto& c : configs) {
    verify::CheckOptions opt;
    opt.tol = kind_tolerance(c.label);
    const auto g = grp::cartan_compose(c.g);
    auto pts = sample_points(rng, 10, bound);
    try {
      for (auto* fn : {&verify::check_sandwich_a, &verify::check_sandwich_b,
                       &verify::check_sandwich_c})
        for (auto& r : fn(c.label, c.k, g, pts, opt)) {
          apply_tol(r, cfg);
          out.push_back(std::move(r));
        }
    } catch (const DomainError& e) {
      nlohmann::json p = verify::label_json(c.label);
      p["k"] = c.k;
      p["g"] = grp::to_json(c.g);
      out.push_back(error_report("sandwich", p, e.what()));
    }
  }
  if (!cfg.tau && !cfg.k && !cfg.g && !cfg.random_g && !cfg.alpha) {
    // the worked single-entry cases
    verify::CheckOptions opt;
    opt.tol = 1e-10;
    const IrrepLabel one{1.0, kZero};
    std::vector<VerificationReport> extra;
    for (auto& r : verify::check_sandwich_a(one, 0, grp::h(1.0), {{0, 0}}, opt)) extra.push_back(r);
    for (auto& r : verify::check_sandwich_b(one, 1, grp::h(0.5), {{2, 0}}, opt)) extra.push_back(r);
    opt.tol = 1e-9;
    for (auto& r : verify::check_sandwich_c(one, 0, grp::h(1.0), {{1, 1}}, opt)) extra.push_back(r);
    for (auto& r : extra) {
      apply_tol(r, cfg);
      out.push_back(std::move(r));
    }
  }
  return out;
}

// ---------------------------------------------------- ortho and genfun

std::vector<IrrepLabel> label_grid() {
  return {{cplx{-0.5, 1.0}, kZero}, {cplx{-0.5, 1.0}, kHalf}, {-1.0, kZero}, {-1.5, kHalf},
          {-0.5, kHalf},           {0.0, kZero},            {1.0, kZero},  {2.0, kZero},
          {0.5, kHalf},            {1.5, kHalf}};
}

std::vector<VerificationReport> run_ortho(const RunConfig& cfg) {
  std::vector<VerificationReport> out;
  fock::FockSpace space(cfg.dim);
  const auto labels = cfg.tau ? override_labels(cfg) : label_grid();

  // structural zeros over every pair with different shifts
  std::vector<std::pair<IrrepLabel, int>> basis;
  for (const auto& l : labels)
    for (int k : cfg.k ? *cfg.k : default_ks(l, 3, cfg.dim))
      if (irrep::classify(l).contains(k)) basis.emplace_back(l, k);
  for (const auto& [l1, k1] : basis)
    for (const auto& [l2, k2] : basis) {
      if (irrep::d_shift(l1.eps, k1) == irrep::d_shift(l2.eps, k2)) continue;
      auto r = verify::check_orthogonality_structural(l1, k1, l2, k2, space);
      apply_tol(r, cfg);
      out.push_back(std::move(r));
    }

  // regulated sums
  std::vector<std::pair<IrrepLabel, IrrepLabel>> pairs;
  if (cfg.tau) {
    for (const auto& a : labels)
      for (const auto& b : labels)
        if (a.eps == b.eps) pairs.emplace_back(a, b);
  } else {
    const double rhos[] = {0.5, 1.0, 2.0};
    for (Epsilon e : {kZero, kHalf})
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
          pairs.push_back({{cplx{-0.5, rhos[i]}, e}, {cplx{-0.5, rhos[j]}, e}});
    pairs.push_back({{1.0, kZero}, {1.0, kZero}});
  }
  const std::vector<double> svals = {0.5, 0.9};
  for (const auto& [a, b] : pairs)
    for (int k : cfg.k ? *cfg.k : std::vector<int>{-1, 0, 1}) {
      if (!irrep::classify(a).contains(k) || !irrep::classify(b).contains(k)) continue;
      for (double s : svals) {
        verify::SeriesOptions opt;
        auto r = verify::check_orthogonality_regulated(a, b, k, s, 0.0, opt);
        apply_tol(r, cfg);
        out.push_back(std::move(r));
      }
    }
  if (!cfg.tau && !cfg.k) {
    // shifted lambda
    for (double mu : {0.05, 0.2}) {
      auto r = verify::check_orthogonality_regulated({cplx{-0.5, 1.0}, kZero},
                                                     {cplx{-0.5, 2.0}, kZero}, 0, 0.9, mu);
      apply_tol(r, cfg);
      out.push_back(std::move(r));
    }
  }
  return out;
}

struct GfSample {
  cplx a, b, lam;
  double s;
};

std::vector<GfSample> genfun_samples(const RunConfig& cfg) {
  std::vector<GfSample> out = {
      {-1.0, 2.0, 3.0, 0.4}, {0.0, 0.0, 2.0, 0.5}, {1.5, -0.5, 2.5, 0.0}, {0.0, 0.0, 0.5, 0.9}};
  auto rng = stream(cfg, 3);
  const double half_ints[] = {-2, -1.5, -1, -0.5, 0, 0.5, 1, 1.5, 2, 3};
  const double lams[] = {0.5, 1, 1.5, 2, 3, 4.5};
  const double ss[] = {0.1, 0.25, 0.4, 0.5, 0.75, 0.9};
  auto pick = [&](const auto& arr) {
    const std::size_t n = std::size(arr);
    return arr[std::min<std::size_t>(n - 1, std::size_t(unit(rng) * n))];
  };
  // rational inputs
  while (out.size() < 22) out.push_back({pick(half_ints), pick(half_ints), pick(lams), pick(ss)});
  // the orthogonality substitution with principal-series labels
  const double rhos[] = {0.25, 0.5, 1.0, 2.0};
  const double kps[] = {0.0, 0.5, 1.0, 1.5, 2.0};
  while (out.size() < 38) {
    const double r1 = pick(rhos), r2 = pick(rhos), kp = pick(kps);
    const double s = unit(rng) < 0.5 ? 0.5 : 0.9;
    out.push_back({cplx{0.5 + kp, -r1}, cplx{0.5 + kp, r2}, cplx{1.0 + 2.0 * kp, 0.0}, s});
  }
  // general complex parameters
  while (out.size() < 50) {
    cplx a{4.0 * unit(rng) - 2.0, 4.0 * unit(rng) - 2.0};
    cplx b{4.0 * unit(rng) - 2.0, 4.0 * unit(rng) - 2.0};
    cplx lam{0.5 + 2.5 * unit(rng), 0.0};
    out.push_back({a, b, lam, 0.8 * unit(rng)});
  }
  return out;
}

std::vector<VerificationReport> run_genfun(const RunConfig& cfg) {
  std::vector<VerificationReport> out;
  for (const auto& g : genfun_samples(cfg)) {
    auto r = verify::check_generating_function(g.a, g.b, g.lam, g.s);
    apply_tol(r, cfg);
    out.push_back(std::move(r));
  }
  return out;
}

// ------------------------------------------------- closing identities

std::vector<int> int_taus(const RunConfig& cfg) {
  if (!cfg.tau) return {0, 1, 2, 3};
  std::vector<int> out;
  for (cplx t : *cfg.tau) {
    if (t.imag() != 0.0 || t.real() != std::round(t.real()) || t.real() < 0)
      throw ConfigError("this suite needs nonnegative integer tau");
    out.push_back(int(t.real()));
  }
  return out;
}

std::vector<VerificationReport> run_legendre(const RunConfig& cfg) {
  std::vector<VerificationReport> out;
  const auto alphas = cfg.alpha ? *cfg.alpha : std::vector<double>{0.25, 0.5, 1.0, 2.0};
  for (int t : int_taus(cfg))
    for (double a : alphas) {
      if (a < 0.0) throw ConfigError("alpha must be nonnegative");
      auto r = verify::check_legendre_identity(t, a);
      apply_tol(r, cfg);
      out.push_back(std::move(r));
    }
  return out;
}

std::vector<VerificationReport> run_unity(const RunConfig& cfg) {
  std::vector<VerificationReport> out;
  const auto alphas = cfg.alpha ? *cfg.alpha : std::vector<double>{0.3, 1.0, 2.0};
  for (int t : int_taus(cfg))
    for (double a : alphas) {
      if (a < 0.0) throw ConfigError("alpha must be nonnegative");
      auto r = verify::check_unity_identity(t, a);
      apply_tol(r, cfg);
      out.push_back(std::move(r));
    }
  auto d = verify::derive_unity_sign(3);
  VerificationReport r;
  r.identity_id = "unity_derivation";
  r.parameters = {{"tau_max", 3}, {"sign", verify::to_string(verify::kUnitySign)}};
  r.tolerance = 0.0;
  const bool found = std::find(d.consistent.begin(), d.consistent.end(), verify::kUnitySign) !=
                     d.consistent.end();
  r.residual = found && d.consistent.size() == 1 ? 0.0 : 1.0;
  nlohmann::json names = nlohmann::json::array();
  for (auto s : d.consistent) names.push_back(verify::to_string(s));
  r.diagnostics = {{"consistent", names}};
  r.finalize();
  out.push_back(std::move(r));
  return out;
}

// --------------------------------------------------- algebra and weyl

std::vector<VerificationReport> run_algebra(const RunConfig& cfg) {
  std::vector<VerificationReport> out;
  fock::FockSpace space(cfg.dim);
  for (int i = 0; i < 3; ++i)
    for (int band : {1, 2, 4}) {
      if (cfg.dim - (band + 4) < 2) continue;  // no interior block left
      for (auto& r : verify::check_lie_algebra(space, band, cfg.seed + 100 * i + band)) {
        apply_tol(r, cfg);
        out.push_back(std::move(r));
      }
    }

  std::vector<IrrepLabel> labels;
  if (cfg.tau) {
    labels = override_labels(cfg);
  } else {
    for (Epsilon e : {kZero, kHalf})
      for (cplx t : {cplx{-0.5, 1.0}, cplx{-1.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0},
                     cplx{2.0, 0.0}})
        labels.push_back({t, e});
    labels.push_back({-1.5, kHalf});
    labels.push_back({0.5, kHalf});
    labels.push_back({1.5, kHalf});
  }
  for (const auto& l : labels)
    for (int k : cfg.k ? *cfg.k : default_ks(l, 6, cfg.dim, 3)) {  // ladders need an interior
      if (!irrep::classify(l).contains(k)) continue;
      for (auto& r : verify::check_ladder_relations(l, k, space)) {
        apply_tol(r, cfg);
        out.push_back(std::move(r));
      }
    }

  // edges that the ladders annihilate without a residue piece
  if (!cfg.tau) {
    for (const IrrepLabel& l : std::vector<IrrepLabel>{
             {0.0, kZero}, {1.0, kZero}, {2.0, kZero}, {0.5, kHalf}, {1.5, kHalf}, {-0.5, kHalf}}) {
      auto r = verify::check_weight_edges(l, space);
      apply_tol(r, cfg);
      out.push_back(std::move(r));
    }

    // exact recurrences
    const exact::Rational taus[] = {exact::Rational(-1), exact::Rational(-1, 2), exact::Rational(0),
                                    exact::Rational(1, 2), exact::Rational(1), exact::Rational(2)};
    for (const auto& t : taus)
      for (Epsilon e : {kZero, kHalf})
        for (int k = -4; k <= 4; ++k)
          for (int n = 0; n <= 10; ++n) out.push_back(verify::check_c_recurrences(t, e, k, n));
  }
  return out;
}

std::vector<VerificationReport> run_weyl(const RunConfig& cfg) {
  std::vector<VerificationReport> out;
  auto rng = stream(cfg, 4);
  auto push = [&](VerificationReport r) {
    apply_tol(r, cfg);
    out.push_back(std::move(r));
  };
  const auto oracle_alphas = cfg.alpha ? *cfg.alpha : std::vector<double>{0.3, 1.0, 2.0};
  for (double a : oracle_alphas) push(verify::check_weyl_oracle(a, 21));

  std::vector<grp::CartanAngles> unit_gs;
  if (auto o = override_gs(cfg, rng, 2.0)) {
    unit_gs = *o;
  } else {
    for (double a : {0.25, 0.5, 1.0, 1.5, 2.0}) unit_gs.push_back(pure_h(a));
    unit_gs.push_back({0.7, 0.0, 0.0});
    for (auto& g : random_gs(rng, 10, 2.0)) unit_gs.push_back(g);
  }
  for (const auto& c : unit_gs) {
    if (c.alpha > 2.0 + 1e-12 && !cfg.g) continue;
    push(verify::check_unitarity(grp::cartan_compose(c), cfg.dim));
  }

  const int pairs = cfg.count.value_or(100);
  for (int i = 0; i < pairs; ++i) {
    auto g1 = grp::cartan_compose(grp::random_angles(rng, 1.0));
    auto g2 = grp::cartan_compose(grp::random_angles(rng, 1.0));
    push(verify::check_homomorphism(g1, g2, cfg.dim));
  }

  const int block = std::max(2, cfg.dim * 3 / 4);
  push(verify::check_intertwining(grp::h(1.0), block));
  for (auto& c : random_gs(rng, 5, 1.0)) push(verify::check_intertwining(grp::cartan_compose(c), block));

  for (int i = 0; i < 200; ++i) {
    const double ab = std::sinh(unit(rng) * 1.5);
    const double pa = 4.0 * M_PI * unit(rng), pb = 4.0 * M_PI * unit(rng);
    grp::GroupElement g(std::polar(std::sqrt(1.0 + ab * ab), pa), std::polar(ab, pb));
    push(verify::check_cartan_roundtrip(g));
  }
  fock::FockSpace small(16);
  for (auto& c : random_gs(rng, 10, 2.0))
    push(verify::check_generator_commutator(grp::cartan_compose(c), small));
  return out;
}

}  // namespace

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::addition, Suite::sandwich, Suite::ortho, Suite::genfun, Suite::legendre,
                  Suite::unity, Suite::algebra, Suite::weyl, Suite::all})
    if (to_string(s) == name) return s;
  throw io::ParseError("unknown suite '" + name + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::addition: return "addition";
    case Suite::sandwich: return "sandwich";
    case Suite::ortho: return "ortho";
    case Suite::genfun: return "genfun";
    case Suite::legendre: return "legendre";
    case Suite::unity: return "unity";
    case Suite::algebra: return "algebra";
    case Suite::weyl: return "weyl";
    case Suite::all: return "all";
  }
  return "?";
}

std::vector<Suite> concrete_suites() {
  return {Suite::weyl,  Suite::algebra,  Suite::addition, Suite::sandwich,
          Suite::ortho, Suite::genfun,   Suite::legendre, Suite::unity};
}

void validate(const RunConfig& cfg) {
  if (cfg.dim < 8) throw ConfigError("--dim must be at least 8");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw ConfigError("--tol must be positive");
  if (cfg.count && *cfg.count < 1) throw ConfigError("--count must be at least 1");
  if (cfg.alpha)
    for (double a : *cfg.alpha)
      if (!(a >= 0.0)) throw ConfigError("--alpha must be nonnegative");
  if (cfg.k && !cfg.tau) throw ConfigError("--k needs --tau");
}

double pinned_tolerance(const std::string& id) {
  static const std::map<std::string, double> table = {
      {"weyl_oracle", 1e-10},        {"unitarity", 1e-9},
      {"homomorphism", 1e-8},        {"intertwining", 1e-9},
      {"cartan_roundtrip", 1e-10},   {"generator_commutator", 1e-12},
      {"algebra_plus_minus", 1e-9},  {"algebra_h_plus", 1e-9},
      {"algebra_h_minus", 1e-9},     {"ladder_minus", 1e-9},
      {"ladder_plus", 1e-9},         {"ladder_h", 1e-9},
      {"weight_edges", 1e-10},       {"c_recurrence", 0.0},
      {"addition", 1e-8},            {"sandwich", 1e-8},
      {"sandwich_a", 1e-8},          {"sandwich_b", 1e-8},
      {"sandwich_c", 1e-8},          {"genfun", 1e-9},
      {"ortho_structural", 0.0},     {"ortho_regulated", 1e-9},
      {"legendre", 1e-10},           {"unity", 1e-11},
      {"unity_derivation", 0.0}};
  auto it = table.find(id);
  return it == table.end() ? 1e-9 : it->second;
}

std::vector<VerificationReport> run(Suite s, const RunConfig& cfg) {
  validate(cfg);
  std::vector<VerificationReport> out;
  switch (s) {
    case Suite::addition: out = run_addition(cfg); break;
    case Suite::sandwich: out = run_sandwich(cfg); break;
    case Suite::ortho: out = run_ortho(cfg); break;
    case Suite::genfun: out = run_genfun(cfg); break;
    case Suite::legendre: out = run_legendre(cfg); break;
    case Suite::unity: out = run_unity(cfg); break;
    case Suite::algebra: out = run_algebra(cfg); break;
    case Suite::weyl: out = run_weyl(cfg); break;
    case Suite::all:
      for (Suite c : concrete_suites()) {
        auto part = run(c, cfg);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      }
      break;
  }
  // deterministic order, whatever produced the reports
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i)
    keys.emplace_back(out[i].identity_id + "\x1f" + out[i].parameters.dump(), i);
  std::stable_sort(keys.begin(), keys.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<VerificationReport> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(out[i]));
  return sorted;
}

nlohmann::json manifest(const RunConfig& cfg) {
  using nlohmann::json;
  json tol = json::object();
  for (const char* id :
       {"weyl_oracle", "unitarity", "homomorphism", "intertwining", "cartan_roundtrip",
        "generator_commutator", "algebra_plus_minus", "algebra_h_plus", "algebra_h_minus",
        "ladder_minus", "ladder_plus", "ladder_h", "weight_edges", "c_recurrence", "genfun",
        "ortho_structural", "ortho_regulated", "legendre", "unity", "unity_derivation"})
    tol[id] = pinned_tolerance(id);
  tol["addition|sandwich_*"] = {{"finite", 1e-9}, {"continuous|discrete_pair", 1e-8}};
  json labels = json::array();
  for (const auto& l : label_grid()) labels.push_back(verify::label_json(l));
  return {
      {"dim", cfg.dim},
      {"seed", cfg.seed},
      {"tolerances", tol},
      {"suites",
       {{"weyl",
         {{"oracle", "closed form vs Gauss-Hermite, m,n <= 20, alpha in {0.3, 1, 2}"},
          {"unitarity", "h(alpha), alpha in {0.25, 0.5, 1, 1.5, 2}; k(0.7); 10 random g, alpha <= 2"},
          {"homomorphism", "100 random pairs, alpha <= 1"},
          {"intertwining", "h(1) and 5 random g, block 3N/4"},
          {"cartan_roundtrip", "200 random (a, b) with alpha <= 3"},
          {"generator_commutator", "10 random g at N = 16"}}},
        {"algebra",
         {{"lie_algebra", "3 seeds x bands {1, 2, 4}"},
          {"ladders", "tau in {-1/2+i, -1, 0, 1, 2} x eps in {0, 1/2}, plus (-3/2, 1/2), "
                      "(1/2, 1/2), (3/2, 1/2); every k in the subspaces with |k| <= 6 whose "
                      "shift leaves an interior block"},
          {"weight_edges", "(0,0) (1,0) (2,0) (1/2,1/2) (3/2,1/2) (-1/2,1/2); edges next to a "
                           "gamma pole carry a residue piece and are excluded"},
          {"c_recurrence", "tau in {-1, -1/2, 0, 1/2, 1, 2}, both eps, k in [-4, 4], n <= 10"}}},
        {"addition",
         {{"finite", "tau in {1, 2} eps 0 with 20 random g (alpha <= 1.5); tau 3/2 eps 1/2 with 5"},
          {"continuous", "tau = -1/2+i, both eps, |k| <= 2, 5 random g (alpha <= 1)"},
          {"discrete_pair", "(-1, 0) and (-3/2, 1/2), |k| <= 2, 5 random g (alpha <= 1)"},
          {"examples", "(1,0) k=0 h(1); (-1/2+i,0) k=0 h(0.5); (1,0) k=1 h(0.5)"}}},
        {"sandwich", "a, b, c at 10 sampled (l, s) < N/2 for every addition configuration, "
                     "plus the three worked single-entry cases"},
        {"ortho",
         {{"structural", "all pairs with different shifts over the label grid, |k| <= 3"},
          {"regulated", "principal pairs rho in {0.5, 1, 2}, both eps, k in {-1, 0, 1}, "
                        "s in {0.5, 0.9}; (1,0) with itself; mu in {0.05, 0.2}"},
          {"labels", labels}}},
        {"genfun", "50 samples: 4 fixed, 18 half-integer rational, 16 orthogonality "
                   "substitutions with principal-series labels, 12 complex"},
        {"legendre", "tau in 0..3 x alpha in {0.25, 0.5, 1, 2}"},
        {"unity", "tau in 0..3 x alpha in {0.3, 1, 2}, plus the sign derivation"}}}};
}

}  // namespace su11::suites
