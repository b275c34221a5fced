// su11: tables of the representation objects, plus the verification suites.
//
//   su11 table {u,t,f,d} [params]
//   su11 verify <suite> [params]
//   su11 derive unity
//   su11 manifest
//
// Exit code 0 means every check passed and 1 that one failed. Bad input of any
// kind gives 2.
// Every flag also reads SU11_<FLAG> from the environment (dashes become
// underscores), e.g. SU11_DIM=48 or SU11_ZETA_MAX=12.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "su11/error.hpp"
#include "su11/grp.hpp"
#include "su11/io.hpp"
#include "su11/irrep.hpp"
#include "su11/repmat.hpp"
#include "su11/suites.hpp"
#include "su11/verify.hpp"
#include "su11/weyl.hpp"

namespace {

using namespace su11;

struct Flags {
  int dim = 32;
  std::string tol, format, seed = "7", out;
  std::string tau, eps, k, krange, alpha, phi = "0", psi = "0", g, count;
  int zeta_max = 8;
};

std::string env_name(const std::string& flag) {
  std::string out = "SU11_";
  for (char c : flag) out += c == '-' ? '_' : char(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

void add(CLI::App* app, const std::string& name, std::string& target, const std::string& help) {
  app->add_option("--" + name, target, help)->envname(env_name(name));
}

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--dim", f.dim, "truncation N of the Fock space (default 32)")
      ->envname("SU11_DIM");
  add(app, "format", f.format, "json, csv or text");
  add(app, "out", f.out, "output file (default stdout)");
}

/// Writes to --out or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw suites::ConfigError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

double real_flag(const std::string& text, const char* name) {
  auto v = io::parse_real_list(text);
  if (v.size() != 1) throw io::ParseError(std::string("--") + name + " takes one value");
  return v[0];
}

int int_flag(const std::string& text, const char* name) {
  auto v = io::parse_int_list(text);
  if (v.size() != 1) throw io::ParseError(std::string("--") + name + " takes one value");
  return v[0];
}

/// The group element of a table: --g phi,alpha,psi or the separate angles.
grp::CartanAngles table_angles(const Flags& f) {
  if (!f.g.empty()) return io::parse_angles(f.g);
  grp::CartanAngles c{real_flag(f.phi, "phi"), 0.0, real_flag(f.psi, "psi")};
  if (!f.alpha.empty()) c.alpha = real_flag(f.alpha, "alpha");
  if (c.alpha < 0.0) throw io::ParseError("alpha must be nonnegative");
  return c;
}

irrep::IrrepLabel table_label(const Flags& f) {
  if (f.tau.empty()) throw io::ParseError("--tau is required");
  return {io::parse_complex(f.tau), f.eps.empty() ? irrep::Epsilon::zero : io::parse_epsilon(f.eps)};
}

void label_meta(io::Metadata& m, const irrep::IrrepLabel& l) {
  m.add("tau", io::format_complex(l.tau));
  m.add("eps", irrep::to_string(l.eps));
}

std::string angles_text(const grp::CartanAngles& c) {
  return io::format_double(c.phi) + "," + io::format_double(c.alpha) + "," +
         io::format_double(c.psi);
}

int cmd_table(const std::string& kind, const Flags& f) {
  if (f.dim < 1) throw suites::ConfigError("--dim must be positive");
  const io::Format fmt = f.format.empty() ? io::Format::csv : io::parse_format(f.format);
  if (fmt == io::Format::text) throw io::ParseError("tables are written as csv or json");
  Sink sink(f.out);
  io::Metadata meta;
  meta.add("table", kind);

  if (kind == "u") {
    const auto c = table_angles(f);
    const fock::FockSpace space(f.dim);
    const auto u = weyl::u_of_g(grp::cartan_compose(c), space);
    meta.add("N", std::to_string(f.dim));
    meta.add("g", angles_text(c));
    meta.add("source", weyl::to_string(u.source));
    meta.add("unitarity_residual", io::format_double(u.unitarity_residual));
    meta.add("inner_dim", std::to_string(u.inner_dim));
    io::write_matrix(sink.os(), u.entries, meta, fmt);
    return 0;
  }

  const auto label = table_label(f);
  label_meta(meta, label);
  std::vector<io::TableRow> rows;

  if (kind == "t") {
    if (f.krange.empty()) throw io::ParseError("--krange is required");
    const auto [lo, hi] = io::parse_krange(f.krange);
    const auto c = table_angles(f);
    meta.add("phi", io::format_double(c.phi));
    meta.add("alpha", io::format_double(c.alpha));
    meta.add("psi", io::format_double(c.psi));
    const auto block = repmat::t_block(label, lo, hi, c);
    for (int i = 0; i < block.rows(); ++i)
      for (int j = 0; j < block.cols(); ++j) rows.push_back({lo + i, lo + j, block(i, j)});
    io::write_table(sink.os(), rows, "k", "n", meta, fmt);
    return 0;
  }

  if (f.k.empty()) throw io::ParseError("--k is required");
  const int k = int_flag(f.k, "k");
  if (kind == "f") {
    if (f.zeta_max < 0) throw suites::ConfigError("--zeta-max must be nonnegative");
    meta.add("N", std::to_string(f.zeta_max + 1));
    const auto vals = irrep::f_table(label, k, f.zeta_max);
    for (int t = 0; t <= f.zeta_max; ++t) rows.push_back({k, t, vals[t]});
  } else if (kind == "d") {
    meta.add("N", std::to_string(f.dim));
    const auto d = irrep::d_operator(label, k, fock::FockSpace(f.dim));
    meta.add("shift", std::to_string(d.shift()));
    const int t0 = d.op.first_column();
    for (int t = t0; t < t0 + d.op.length(); ++t) rows.push_back({k, t, d.op.at_column(t)});
  } else {
    throw io::ParseError("table kind must be u, t, f or d");
  }
  io::write_table(sink.os(), rows, "k", "t", meta, fmt);
  return 0;
}

suites::RunConfig run_config(const Flags& f) {
  suites::RunConfig cfg;
  cfg.dim = f.dim;
  if (!f.tol.empty()) cfg.tol = real_flag(f.tol, "tol");
  cfg.format = f.format.empty() ? io::Format::json : io::parse_format(f.format);
  {
    const auto s = io::parse_int_list(f.seed);
    if (s.size() != 1 || s[0] < 0) throw io::ParseError("--seed takes one nonnegative integer");
    cfg.seed = std::uint64_t(s[0]);
  }
  cfg.out = f.out;
  if (!f.tau.empty()) cfg.tau = io::parse_complex_list(f.tau);
  if (!f.eps.empty()) cfg.eps = io::parse_epsilon(f.eps);
  if (!f.k.empty() && !f.krange.empty()) throw io::ParseError("give --k or --krange, not both");
  if (!f.k.empty()) cfg.k = io::parse_int_list(f.k);
  if (!f.krange.empty()) {
    const auto [lo, hi] = io::parse_krange(f.krange);
    std::vector<int> ks;
    for (int k = lo; k <= hi; ++k) ks.push_back(k);
    cfg.k = ks;
  }
  if (!f.alpha.empty()) cfg.alpha = io::parse_real_list(f.alpha);
  cfg.phi = real_flag(f.phi, "phi");
  cfg.psi = real_flag(f.psi, "psi");
  if (f.g == "random") {
    cfg.random_g = true;
  } else if (!f.g.empty()) {
    std::vector<grp::CartanAngles> gs;
    std::istringstream is(f.g);
    for (std::string item; std::getline(is, item, ';');) gs.push_back(io::parse_angles(item));
    cfg.g = gs;
  }
  if (!f.count.empty()) cfg.count = int_flag(f.count, "count");
  suites::validate(cfg);
  return cfg;
}

int cmd_verify(const std::string& suite_name, const Flags& f) {
  const auto suite = suites::parse_suite(suite_name);
  const auto cfg = run_config(f);
  const auto reports = suites::run(suite, cfg);
  Sink sink(cfg.out);
  io::write_reports(sink.os(), reports, cfg.format);
  sink.os().flush();
  io::write_summary(std::cerr, io::summarize(reports),
                    cfg.format == io::Format::csv ? io::Format::csv : io::Format::text);
  for (const auto& r : reports)
    if (!r.passed) return 1;
  return 0;
}

int cmd_derive(const std::string& what, const Flags& f) {
  if (what != "unity") throw io::ParseError("only 'derive unity' is available");
  const auto d = verify::derive_unity_sign(3);
  Sink sink(f.out);
  sink.os() << d.log;
  for (auto s : d.consistent)
    if (s == verify::kUnitySign) return d.consistent.size() == 1 ? 0 : 1;
  return 1;
}

int cmd_manifest(const Flags& f) {
  suites::RunConfig cfg;
  cfg.dim = f.dim;
  suites::validate(cfg);
  Sink sink(f.out);
  sink.os() << suites::manifest(cfg).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(1,1) representations on Fock space: tables and identity checks"};
  app.require_subcommand(1);
  Flags f;
  std::string kind, suite, what;

  auto* table = app.add_subcommand("table", "write U(g), t_kn, f_k or D_k");
  table->add_option("kind", kind, "u, t, f or d")->required();
  add_common(table, f);
  add(table, "tau", f.tau, "label tau as RE+IMi");
  add(table, "eps", f.eps, "0 or 1/2");
  add(table, "k", f.k, "basis index (f, d)");
  add(table, "krange", f.krange, "index block a:b (t)");
  add(table, "alpha", f.alpha, "boost parameter of g");
  add(table, "phi", f.phi, "first rotation angle of g");
  add(table, "psi", f.psi, "second rotation angle of g");
  add(table, "g", f.g, "g as phi,alpha,psi (overrides the separate angles)");
  table->add_option("--zeta-max", f.zeta_max, "last zeta of an f table (default 8)")
      ->envname("SU11_ZETA_MAX");

  auto* verify = app.add_subcommand(
      "verify", "run a verification suite; reports go to --out or stdout, the summary to stderr");
  verify->add_option("suite", suite,
                     "addition, sandwich, ortho, genfun, legendre, unity, algebra, weyl or all")
      ->required();
  add_common(verify, f);
  add(verify, "tol", f.tol, "replace every pinned positive tolerance");
  add(verify, "seed", f.seed, "seed of the sampled grids (default 7)");
  add(verify, "tau", f.tau, "list of labels, e.g. 0..3 or -0.5+1i,1");
  add(verify, "eps", f.eps, "0 or 1/2 for every --tau label");
  add(verify, "k", f.k, "list of basis indices");
  add(verify, "krange", f.krange, "basis indices a:b");
  add(verify, "alpha", f.alpha, "list of boost parameters");
  add(verify, "phi", f.phi, "rotation used with --alpha");
  add(verify, "psi", f.psi, "rotation used with --alpha");
  add(verify, "g", f.g, "'random' or phi,alpha,psi;phi,alpha,psi;...");
  add(verify, "count", f.count, "number of random group elements or pairs");
  verify->footer(
      "Default grids (see 'su11 manifest' for the full list):\n"
      "  weyl      oracle alpha in {0.3,1,2}; unitarity alpha <= 2; 100 random pairs\n"
      "  algebra   3 seeds x bands {1,2,4}; ladders |k| <= 6; exact recurrences\n"
      "  addition  finite tau {1,2} x 20 g, 3/2; principal -1/2+i; discrete -1, -3/2\n"
      "  sandwich  a, b, c at 10 (l,s) per addition configuration\n"
      "  ortho     structural zeros over the label grid; regulated sums at s {0.5,0.9}\n"
      "  genfun    50 samples including the orthogonality substitution\n"
      "  legendre  tau 0..3 x alpha {0.25,0.5,1,2}\n"
      "  unity     tau 0..3 x alpha {0.3,1,2} and the sign derivation");

  auto* derive = app.add_subcommand("derive", "write the unity sign derivation log");
  derive->add_option("what", what, "unity")->required();
  add(derive, "out", f.out, "output file (default stdout)");

  auto* manifest = app.add_subcommand("manifest", "default grids and tolerances as JSON");
  add_common(manifest, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table) return cmd_table(kind, f);
    if (*verify) return cmd_verify(suite, f);
    if (*derive) return cmd_derive(what, f);
    if (*manifest) return cmd_manifest(f);
  } catch (const std::invalid_argument& e) {  // ParseError, ConfigError
    std::cerr << "su11: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "su11: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
