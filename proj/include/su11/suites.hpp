#pragma once

// Verification suites: default parameter grids per identity family, the
// run configuration that overrides them, and a manifest describing both.
// Reports come back sorted by (identity_id, parameters) so the output never
// depends on evaluation order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "su11/grp.hpp"
#include "su11/io.hpp"
#include "su11/verify.hpp"

namespace su11::suites {

enum class Suite { addition, sandwich, ortho, genfun, legendre, unity, algebra, weyl, all };
Suite parse_suite(const std::string& name);  ///< throws io::ParseError
std::string to_string(Suite s);
/// Every concrete suite, in the order "all" runs them.
std::vector<Suite> concrete_suites();

/// Bad option values; the CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

struct RunConfig {
  int dim = 32;
  /// Replaces every pinned positive tolerance when set.
  std::optional<double> tol;
  io::Format format = io::Format::json;
  std::uint64_t seed = 7;
  std::string out;  ///< empty: stdout

  // grid overrides (unset: the suite default)
  std::optional<std::vector<std::complex<double>>> tau;
  std::optional<irrep::Epsilon> eps;
  std::optional<std::vector<int>> k;
  std::optional<std::vector<double>> alpha;
  double phi = 0.0, psi = 0.0;
  /// Explicit group elements; ignored when random_g is set.
  std::optional<std::vector<grp::CartanAngles>> g;
  bool random_g = false;
  std::optional<int> count;  ///< number of random group elements
};

/// Throws ConfigError when N < 8 or a numeric option is out of range.
void validate(const RunConfig& cfg);

/// Pinned default tolerance of an identity family.
double pinned_tolerance(const std::string& identity_id);

std::vector<verify::VerificationReport> run(Suite s, const RunConfig& cfg);

/// Default grids and tolerances as a JSON document.
nlohmann::json manifest(const RunConfig& cfg);

}  // namespace su11::suites
