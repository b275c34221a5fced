#include "su11/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace su11::io {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size())
    throw ParseError("not a real number: '" + text + "'");
  return v;
}

int parse_int(const std::string& text) {
  const std::string t = trim(text);
  int v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size())
    throw ParseError("not an integer: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

bool is_range(const std::string& item, int* lo, int* hi) {
  const auto pos = item.find("..");
  if (pos == std::string::npos) return false;
  *lo = parse_int(item.substr(0, pos));
  *hi = parse_int(item.substr(pos + 2));
  if (*hi < *lo) throw ParseError("empty range: '" + item + "'");
  return true;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

cplx parse_complex(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError("empty complex number");
  if (t.back() != 'i') return {parse_real(t), 0.0};
  t.pop_back();
  // split at the last sign that is not an exponent sign and not leading
  std::size_t cut = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;)
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      cut = i;
      break;
    }
  std::string re = cut == std::string::npos ? "" : t.substr(0, cut);
  std::string im = cut == std::string::npos ? t : t.substr(cut);
  if (im == "+" || im.empty()) im = "1";
  if (im == "-") im = "-1";
  if (im[0] == '+') im = im.substr(1);
  return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, p);
}

std::string format_complex(cplx z) {
  std::string out = format_double(z.real());
  const double im = z.imag();
  if (im == 0.0) return out;
  out += std::signbit(im) ? "-" : "+";
  out += format_double(std::abs(im));
  return out + "i";
}

std::vector<cplx> parse_complex_list(const std::string& text) {
  std::vector<cplx> out;
  for (const auto& item : split(text, ',')) {
    int lo = 0, hi = 0;
    if (is_range(item, &lo, &hi)) {
      for (int v = lo; v <= hi; ++v) out.emplace_back(v, 0.0);
    } else {
      out.push_back(parse_complex(item));
    }
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    int lo = 0, hi = 0;
    if (is_range(item, &lo, &hi)) {
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_real(item));
    }
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    int lo = 0, hi = 0;
    if (is_range(item, &lo, &hi)) {
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_int(item));
    }
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::pair<int, int> parse_krange(const std::string& text) {
  // the leading minus of the lower bound must not be taken as a separator
  const auto pos = text.find(':');
  if (pos == std::string::npos) throw ParseError("k-range must look like a:b");
  int lo = parse_int(text.substr(0, pos)), hi = parse_int(text.substr(pos + 1));
  if (hi < lo) throw ParseError("empty k-range: '" + text + "'");
  return {lo, hi};
}

grp::CartanAngles parse_angles(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 3) throw ParseError("Cartan angles must look like phi,alpha,psi");
  grp::CartanAngles c{parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2])};
  if (c.alpha < 0.0) throw ParseError("alpha must be nonnegative");
  return c;
}

irrep::Epsilon parse_epsilon(const std::string& text) {
  const std::string t = trim(text);
  if (t == "0") return irrep::Epsilon::zero;
  if (t == "1/2" || t == "0.5" || t == ".5") return irrep::Epsilon::half;
  throw ParseError("eps must be 0 or 1/2");
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw ParseError("format must be json, csv or text");
}

nlohmann::json Metadata::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : fields) j[k] = v;
  return j;
}

void write_matrix(std::ostream& os, const Eigen::MatrixXcd& m, const Metadata& meta, Format f) {
  if (f == Format::json) {
    nlohmann::json j = meta.to_json();
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (int r = 0; r < m.rows(); ++r) {
      nlohmann::json rr = nlohmann::json::array(), ri = nlohmann::json::array();
      for (int c = 0; c < m.cols(); ++c) {
        rr.push_back(m(r, c).real());
        ri.push_back(m(r, c).imag());
      }
      re.push_back(rr);
      im.push_back(ri);
    }
    j["re"] = re;
    j["im"] = im;
    os << j.dump() << "\n";
    return;
  }
  for (const auto& [k, v] : meta.fields) os << "# " << k << "=" << v << "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) os << (c ? "," : "") << format_complex(m(r, c));
    os << "\n";
  }
}

void write_table(std::ostream& os, const std::vector<TableRow>& rows, const std::string& c1,
                 const std::string& c2, const Metadata& meta, Format f) {
  if (f == Format::json) {
    nlohmann::json j = meta.to_json();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{c1, r.i}, {c2, r.j}, {"re", r.value.real()}, {"im", r.value.imag()}});
    j["rows"] = arr;
    os << j.dump() << "\n";
    return;
  }
  for (const auto& [k, v] : meta.fields) os << "# " << k << "=" << v << "\n";
  os << c1 << "," << c2 << ",re,im\n";
  for (const auto& r : rows)
    os << r.i << "," << r.j << "," << format_double(r.value.real()) << ","
       << format_double(r.value.imag()) << "\n";
}

void write_reports(std::ostream& os, const std::vector<verify::VerificationReport>& reports,
                   Format f) {
  switch (f) {
    case Format::json:
      for (const auto& r : reports) os << r.to_json().dump() << "\n";
      break;
    case Format::csv:
      os << "identity_id,passed,residual,tolerance,tail_estimate,parameters\n";
      for (const auto& r : reports)
        os << r.identity_id << "," << (r.passed ? "true" : "false") << ","
           << format_double(r.residual) << "," << format_double(r.tolerance) << ","
           << format_double(r.tail_estimate) << "," << csv_quote(r.parameters.dump()) << "\n";
      break;
    case Format::text:
      for (const auto& r : reports)
        os << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(22) << r.identity_id
           << " residual=" << format_double(r.residual) << " tol=" << format_double(r.tolerance)
           << " " << r.parameters.dump() << "\n";
      break;
  }
}

std::vector<SummaryRow> summarize(const std::vector<verify::VerificationReport>& reports) {
  std::map<std::string, SummaryRow> rows;
  for (const auto& r : reports) {
    auto& s = rows[r.identity_id];
    s.identity_id = r.identity_id;
    (r.passed ? s.passed : s.failed) += 1;
    // a NaN residual is a failure and shows up as such
    if (!std::isnan(s.max_residual) && !(r.residual <= s.max_residual)) s.max_residual = r.residual;
  }
  std::vector<SummaryRow> out;
  for (auto& [id, s] : rows) out.push_back(s);
  return out;
}

void write_summary(std::ostream& os, const std::vector<SummaryRow>& rows, Format f) {
  if (f == Format::csv) {
    os << "identity,pass,fail,max_residual\n";
    for (const auto& s : rows)
      os << s.identity_id << "," << s.passed << "," << s.failed << ","
         << format_double(s.max_residual) << "\n";
    return;
  }
  if (f == Format::json) {
    for (const auto& s : rows)
      os << nlohmann::json{{"identity", s.identity_id},
                           {"pass", s.passed},
                           {"fail", s.failed},
                           {"max_residual", s.max_residual}}
                .dump()
         << "\n";
    return;
  }
  os << std::left << std::setw(24) << "identity" << std::right << std::setw(7) << "pass"
     << std::setw(7) << "fail" << "  max residual\n";
  int p = 0, q = 0;
  for (const auto& s : rows) {
    os << std::left << std::setw(24) << s.identity_id << std::right << std::setw(7) << s.passed
       << std::setw(7) << s.failed << "  " << format_double(s.max_residual) << "\n";
    p += s.passed;
    q += s.failed;
  }
  os << std::left << std::setw(24) << "total" << std::right << std::setw(7) << p << std::setw(7)
     << q << "\n";
}

}  // namespace su11::io
