#pragma once

// Text formats: complex numbers as RE+IMi, integer ranges a..b, k-ranges
// a:b, Cartan triples phi,alpha,psi; matrix and table dumps; report
// streams and suite summaries.

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "su11/grp.hpp"
#include "su11/irrep.hpp"
#include "su11/verify.hpp"

namespace su11::io {

using cplx = std::complex<double>;

/// Malformed user input (maps to exit code 2 in the CLI).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// "1", "-0.5+1i", "2i", "-i", "1e-3-2.5e-1i"
cplx parse_complex(const std::string& text);
/// Shortest round-trip text in the same syntax.
std::string format_complex(cplx z);
std::string format_double(double x);

/// Comma-separated items; an item "a..b" expands to the integers a..b.
std::vector<cplx> parse_complex_list(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);
/// "a:b" (inclusive)
std::pair<int, int> parse_krange(const std::string& text);
/// "phi,alpha,psi"
grp::CartanAngles parse_angles(const std::string& text);
irrep::Epsilon parse_epsilon(const std::string& text);

enum class Format { json, csv, text };
Format parse_format(const std::string& text);

struct Metadata {
  std::vector<std::pair<std::string, std::string>> fields;
  void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
  nlohmann::json to_json() const;
};

/// Row-major dump. CSV: "# key=value" header lines, then one row per line
/// with RE+IMi cells. JSON: metadata fields plus "re" and "im" arrays.
void write_matrix(std::ostream& os, const Eigen::MatrixXcd& m, const Metadata& meta, Format f);

/// Long-format table with columns (<c1>, <c2>, re, im).
struct TableRow {
  int i = 0, j = 0;
  cplx value;
};
void write_table(std::ostream& os, const std::vector<TableRow>& rows, const std::string& c1,
                 const std::string& c2, const Metadata& meta, Format f);

/// Reports as JSON lines, CSV rows or a text listing.
void write_reports(std::ostream& os, const std::vector<verify::VerificationReport>& reports,
                   Format f);

struct SummaryRow {
  std::string identity_id;
  int passed = 0, failed = 0;
  double max_residual = 0.0;
};
std::vector<SummaryRow> summarize(const std::vector<verify::VerificationReport>& reports);
void write_summary(std::ostream& os, const std::vector<SummaryRow>& rows, Format f);

}  // namespace su11::io
