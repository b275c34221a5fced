// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Tolerances and runtime bounds are the pinned ones; nothing here is
// relaxed relative to the library defaults.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "su11/suites.hpp"
#include "su11/verify.hpp"

using namespace su11;
using verify::VerificationReport;
using cplx = std::complex<double>;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Tally {
  int n = 0, failed = 0;
  double worst = 0.0;
  std::string first_failure;
  void add(const VerificationReport& r, bool extra_ok = true, const std::string& why = "") {
    ++n;
    if (std::isfinite(r.residual)) worst = std::max(worst, r.residual);
    if (!r.passed || !extra_ok) {
      ++failed;
      if (first_failure.empty())
        first_failure = r.identity_id + (why.empty() ? "" : " (" + why + ")") + " " +
                        r.parameters.dump();
    }
  }
  bool ok() const { return failed == 0 && n > 0; }
  std::string text() const {
    std::ostringstream os;
    os << n << " checks, " << failed << " failed, max residual " << worst;
    if (!first_failure.empty()) os << "; first failure: " << first_failure;
    return os.str();
  }
};

bool infinite_kind(const nlohmann::json& p) {
  const irrep::IrrepLabel l{cplx(p.at("tau_re").get<double>(), p.at("tau_im").get<double>()),
                            p.at("eps") == "0" ? irrep::Epsilon::zero : irrep::Epsilon::half};
  return irrep::classify(l).kind != irrep::SeriesKind::finite;
}

bool converged(const VerificationReport& r) {
  return !r.diagnostics.contains("converged") || r.diagnostics.at("converged").get<bool>();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// ------------------------------------------------------------ criteria

Outcome weyl_oracle() {
  Tally t;
  for (double a : {0.3, 1.0, 2.0}) {
    auto r = verify::check_weyl_oracle(a, 21, 1e-10);
    t.add(r, r.diagnostics.value("parity_violations", 0) == 0, "parity");
  }
  return {t.ok(), t.text()};
}

Outcome unitarity_group_law() {
  Tally u, h;
  for (double a : {0.25, 0.5, 1.0, 1.5, 2.0}) u.add(verify::check_unitarity(grp::h(a), 32, 1e-9));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i)
    u.add(verify::check_unitarity(grp::cartan_compose(grp::random_angles(rng, 2.0)), 32, 1e-9));
  int plus = 0, minus = 0;
  for (int i = 0; i < 100; ++i) {
    const auto g1 = grp::cartan_compose(grp::random_angles(rng, 1.0));
    const auto g2 = grp::cartan_compose(grp::random_angles(rng, 1.0));
    auto r = verify::check_homomorphism(g1, g2, 32, 1e-8);
    const int s = r.diagnostics.value("sign", 0);
    (s > 0 ? plus : minus) += 1;
    h.add(r, s == 1 || s == -1, "sign unresolved");
  }
  return {u.ok() && h.ok(), "unitarity: " + u.text() + " | homomorphism: " + h.text() +
                                " | signs +" + std::to_string(plus) + "/-" + std::to_string(minus)};
}

Outcome lie_and_ladders() {
  const fock::FockSpace space(32);
  Tally lie, lad;
  for (std::uint64_t seed : {1u, 2u, 3u})
    for (int band : {1, 2, 4})
      for (auto& r : verify::check_lie_algebra(space, band, seed, 1e-9)) lie.add(r);
  for (irrep::Epsilon e : {irrep::Epsilon::zero, irrep::Epsilon::half})
    for (cplx tau : {cplx(-0.5, 1.0), cplx(-1.0), cplx(0.0), cplx(1.0), cplx(2.0)}) {
      const irrep::IrrepLabel l{tau, e};
      const auto cls = irrep::classify(l);
      for (int k = -6; k <= 6; ++k)
        if (cls.contains(k))
          for (auto& r : verify::check_ladder_relations(l, k, space, 1e-9)) lad.add(r);
    }
  return {lie.ok() && lad.ok(), "commutators: " + lie.text() + " | ladders: " + lad.text()};
}

Outcome recurrences() {
  Tally t;
  using exact::Rational;
  for (const Rational& tau : {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2),
                              Rational(1), Rational(2)})
    for (irrep::Epsilon e : {irrep::Epsilon::zero, irrep::Epsilon::half})
      for (int k = -4; k <= 4; ++k)
        for (int n = 0; n <= 10; ++n) t.add(verify::check_c_recurrences(tau, e, k, n));
  return {t.ok(), t.text()};
}

Outcome addition_theorems() {
  suites::RunConfig cfg;
  Tally fin, inf, sand;
  for (const auto& r : suites::run(suites::Suite::addition, cfg)) {
    if (infinite_kind(r.parameters)) {
      const bool tail_ok = r.tail_estimate <= 1e-12 && converged(r);
      inf.add(r, tail_ok && r.tolerance <= 1e-8, "tail or convergence");
    } else {
      fin.add(r, r.tolerance <= 1e-9, "tolerance");
    }
  }
  for (const auto& r : suites::run(suites::Suite::sandwich, cfg)) {
    const bool inf_kind = infinite_kind(r.parameters);
    const bool extra = !inf_kind || (r.tail_estimate <= 1e-12 && converged(r));
    sand.add(r, extra, "tail or convergence");
  }
  // the fixed finite grid: tau in {1, 2}, 20 random g
  Tally grid;
  const fock::FockSpace space(32);
  std::mt19937_64 rng(20);
  for (double tau : {1.0, 2.0}) {
    const irrep::IrrepLabel l{tau, irrep::Epsilon::zero};
    for (int i = 0; i < 20; ++i) {
      const auto g = grp::cartan_compose(grp::random_angles(rng, 1.5));
      for (int k = -int(tau); k <= int(tau); ++k) {
        verify::CheckOptions opt;
        opt.tol = 1e-9;
        grid.add(verify::check_addition(l, k, g, space, opt));
      }
    }
  }
  return {fin.ok() && inf.ok() && sand.ok() && grid.ok(),
          "finite: " + fin.text() + " | tau{1,2} x 20 g: " + grid.text() +
              " | infinite: " + inf.text() + " | sandwiches: " + sand.text()};
}

Outcome genfun_and_structure() {
  suites::RunConfig cfg;
  Tally gf, st, reg;
  for (const auto& r : suites::run(suites::Suite::genfun, cfg)) gf.add(r, r.tolerance <= 1e-9);
  for (const auto& r : suites::run(suites::Suite::ortho, cfg)) {
    if (r.identity_id == "ortho_structural")
      st.add(r, r.residual == 0.0, "not exactly zero");
    else
      reg.add(r);
  }
  return {gf.ok() && gf.n == 50 && st.ok() && reg.ok(),
          "genfun: " + gf.text() + " | structural: " + st.text() + " | regulated: " + reg.text()};
}

Outcome closing_identities() {
  Tally leg, uni;
  for (int tau = 0; tau <= 3; ++tau) {
    for (double a : {0.25, 0.5, 1.0, 2.0}) leg.add(verify::check_legendre_identity(tau, a, 1e-10));
    for (double a : {0.3, 1.0, 2.0}) uni.add(verify::check_unity_identity(tau, a, 1e-11));
  }
  const auto d = verify::derive_unity_sign(3);
  const bool unique = d.consistent.size() == 1 && d.consistent[0] == verify::kUnitySign;
  const std::string log_path = std::string(SU11_SOURCE_DIR) + "/docs/unity_sign_derivation.log";
  const bool committed = std::filesystem::exists(log_path) && slurp(log_path) == d.log;
  std::string extra = unique ? "sign derived uniquely" : "sign derivation ambiguous";
  extra += committed ? ", log committed and current" : ", log missing or stale at " + log_path;
  return {leg.ok() && uni.ok() && unique && committed,
          "legendre: " + leg.text() + " | unity: " + uni.text() + " | " + extra};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("su11_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string a = (dir / "a.jsonl").string(), b = (dir / "b.jsonl").string();
  const std::string cli = SU11_CLI;
  const int ca = std::system((cli + " verify all --seed 7 --out " + a + " 2>/dev/null").c_str());
  const int cb = std::system((cli + " verify all --seed 7 --out " + b + " 2>/dev/null").c_str());
  const std::string sa = slurp(a), sb = slurp(b);
  fs::remove_all(dir);
  const bool same = !sa.empty() && sa == sb;
  std::ostringstream os;
  os << sa.size() << " bytes per run, " << (same ? "identical" : "DIFFERENT")
     << ", exit codes " << WEXITSTATUS(ca) << "/" << WEXITSTATUS(cb);
  return {same && ca != -1 && cb != -1, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double max_seconds;  // 0: no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "weyl oracle equivalence", 5.0, weyl_oracle},
      {2, "unitarity and group law", 30.0, unitarity_group_law},
      {3, "lie algebra and ladder relations", 20.0, lie_and_ladders},
      {4, "exact C_kn recurrences", 0.0, recurrences},
      {5, "addition theorems and sandwiches", 60.0, addition_theorems},
      {6, "generating function and orthogonality", 0.0, genfun_and_structure},
      {7, "closing identities", 0.0, closing_identities},
      {8, "determinism of verify all", 0.0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.max_seconds <= 0.0 || secs < c.max_seconds;
    const bool pass = o.ok && in_time;
    failures += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs%s", secs,
                  c.max_seconds > 0 ? (in_time ? "" : " over budget") : "");
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.name
              << " [" << timing << "]  " << o.detail << "\n";
  }
  return failures ? 1 : 0;
}
