#include <gtest/gtest.h>

#include <sstream>

#include "su11/suites.hpp"

using namespace su11;
using namespace su11::suites;

namespace {
std::string dump(const std::vector<verify::VerificationReport>& rs) {
  std::ostringstream os;
  io::write_reports(os, rs, io::Format::json);
  return os.str();
}
}  // namespace

TEST(Suites, Names) {
  for (Suite s : concrete_suites()) EXPECT_EQ(parse_suite(to_string(s)), s);
  EXPECT_EQ(parse_suite("all"), Suite::all);
  EXPECT_THROW(parse_suite("nope"), io::ParseError);
}

TEST(Suites, Validation) {
  RunConfig c;
  c.dim = 7;
  EXPECT_THROW(validate(c), ConfigError);
  c.dim = 8;
  validate(c);
  c.tol = 0.0;
  EXPECT_THROW(validate(c), ConfigError);
  c.tol.reset();
  c.count = 0;
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(Suites, LegendreOverrideGrid) {
  RunConfig c;
  c.tau = std::vector<std::complex<double>>{0, 1, 2, 3};
  c.alpha = std::vector<double>{0.25, 0.5, 1.0};
  const auto rs = run(Suite::legendre, c);
  EXPECT_EQ(rs.size(), 12u);
  for (const auto& r : rs) EXPECT_TRUE(r.passed);
}

TEST(Suites, NonIntegerTauRejectedForClosingIdentities) {
  RunConfig c;
  c.tau = std::vector<std::complex<double>>{0.5};
  EXPECT_THROW(run(Suite::unity, c), ConfigError);
}

TEST(Suites, SeededAdditionIsReproducible) {
  RunConfig c;
  c.tau = std::vector<std::complex<double>>{1.0};
  c.eps = irrep::Epsilon::zero;
  c.random_g = true;
  c.count = 20;
  c.seed = 7;
  const auto a = run(Suite::addition, c), b = run(Suite::addition, c);
  EXPECT_EQ(a.size(), 60u);  // k in {-1, 0, 1} x 20
  EXPECT_EQ(dump(a), dump(b));
  c.seed = 8;
  EXPECT_NE(dump(run(Suite::addition, c)), dump(a));
}

TEST(Suites, ToleranceOverrideLeavesExactChecksExact) {
  RunConfig c;
  c.tol = 1e-3;
  for (const auto& r : run(Suite::unity, c)) {
    if (r.identity_id == "unity_derivation")
      EXPECT_EQ(r.tolerance, 0.0);
    else
      EXPECT_EQ(r.tolerance, 1e-3);
  }
}

TEST(Suites, ReportsAreSorted) {
  const auto rs = run(Suite::genfun, RunConfig{});
  EXPECT_EQ(rs.size(), 50u);
  for (std::size_t i = 1; i < rs.size(); ++i)
    EXPECT_LE(rs[i - 1].parameters.dump(), rs[i].parameters.dump());
}

TEST(Suites, ManifestListsEverySuite) {
  const auto m = manifest(RunConfig{});
  for (Suite s : concrete_suites()) EXPECT_TRUE(m.at("suites").contains(to_string(s)));
  EXPECT_EQ(m.at("tolerances").at("legendre").get<double>(), 1e-10);
}
