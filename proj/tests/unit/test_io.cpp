#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "su11/io.hpp"

using namespace su11;
using namespace su11::io;

TEST(Parse, ComplexForms) {
  EXPECT_EQ(parse_complex("1"), cplx(1.0, 0.0));
  EXPECT_EQ(parse_complex("-0.5+1i"), cplx(-0.5, 1.0));
  EXPECT_EQ(parse_complex("2i"), cplx(0.0, 2.0));
  EXPECT_EQ(parse_complex("-i"), cplx(0.0, -1.0));
  EXPECT_EQ(parse_complex("i"), cplx(0.0, 1.0));
  EXPECT_EQ(parse_complex("1e-3-2.5e-1i"), cplx(1e-3, -0.25));
  EXPECT_EQ(parse_complex(" 3 "), cplx(3.0, 0.0));
  for (const char* bad : {"", "x", "1+", "1+2j", "i1", "--1"})
    EXPECT_THROW(parse_complex(bad), ParseError) << bad;
}

TEST(Parse, FormatRoundTrip) {
  for (cplx z : {cplx(-0.5, 1.0), cplx(0.1, -1e-300), cplx(3.0, 0.0), cplx(0.0, 2.0)})
    EXPECT_EQ(parse_complex(format_complex(z)), z) << format_complex(z);
  EXPECT_EQ(format_complex(cplx(1.0, -0.0)), "1");
  EXPECT_EQ(format_double(0.0), "0");
}

TEST(Parse, Lists) {
  EXPECT_EQ(parse_int_list("0..3"), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(parse_int_list("-2,5,7..8"), (std::vector<int>{-2, 5, 7, 8}));
  EXPECT_EQ(parse_real_list("0.25,0.5,1"), (std::vector<double>{0.25, 0.5, 1.0}));
  const auto taus = parse_complex_list("-0.5+1i,0..1");
  ASSERT_EQ(taus.size(), 3u);
  EXPECT_EQ(taus[0], cplx(-0.5, 1.0));
  EXPECT_EQ(taus[2], cplx(1.0, 0.0));
  EXPECT_THROW(parse_int_list("3..1"), ParseError);
  EXPECT_THROW(parse_int_list("1,,2"), ParseError);
  EXPECT_THROW(parse_real_list(""), ParseError);
}

TEST(Parse, RangesAnglesEpsilon) {
  EXPECT_EQ(parse_krange("-3:3"), std::make_pair(-3, 3));
  EXPECT_THROW(parse_krange("3:-3"), ParseError);
  EXPECT_THROW(parse_krange("3"), ParseError);
  const auto c = parse_angles("0.1,2,3.5");
  EXPECT_EQ(c.phi, 0.1);
  EXPECT_EQ(c.alpha, 2.0);
  EXPECT_EQ(c.psi, 3.5);
  EXPECT_THROW(parse_angles("0,-1,0"), ParseError);
  EXPECT_THROW(parse_angles("0,1"), ParseError);
  EXPECT_EQ(parse_epsilon("1/2"), irrep::Epsilon::half);
  EXPECT_EQ(parse_epsilon("0"), irrep::Epsilon::zero);
  EXPECT_THROW(parse_epsilon("1"), ParseError);
  EXPECT_THROW(parse_format("xml"), ParseError);
}

TEST(Write, MatrixCsvHasHeaderAndRows) {
  Eigen::MatrixXcd m(2, 2);
  m << cplx(1, 0), cplx(0, -2), cplx(0.5, 0.5), cplx(0, 0);
  Metadata meta;
  meta.add("N", "2");
  std::ostringstream os;
  write_matrix(os, m, meta, Format::csv);
  EXPECT_EQ(os.str(), "# N=2\n1,0-2i\n0.5+0.5i,0\n");
  std::ostringstream js;
  write_matrix(js, m, meta, Format::json);
  const auto j = nlohmann::json::parse(js.str());
  EXPECT_EQ(j.at("N"), "2");
  EXPECT_EQ(j.at("im")[0][1].get<double>(), -2.0);
}

TEST(Write, TableAndReports) {
  Metadata meta;
  meta.add("tau", "1");
  std::ostringstream os;
  write_table(os, {{1, 0, cplx(2, 0)}, {1, 1, cplx(-2, 0)}}, "k", "t", meta, Format::csv);
  EXPECT_EQ(os.str(), "# tau=1\nk,t,re,im\n1,0,2,0\n1,1,-2,0\n");

  verify::VerificationReport a, b;
  a.identity_id = "x";
  a.residual = 1e-12;
  a.tolerance = 1e-9;
  a.finalize();
  b.identity_id = "x";
  b.residual = std::nan("");
  b.tolerance = 1e-9;
  b.finalize();
  const auto rows = summarize({a, b});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].passed, 1);
  EXPECT_EQ(rows[0].failed, 1);
  EXPECT_TRUE(std::isnan(rows[0].max_residual));

  std::ostringstream lines;
  write_reports(lines, {a}, Format::json);
  const auto j = nlohmann::json::parse(lines.str());
  EXPECT_EQ(j.at("identity_id"), "x");
  EXPECT_TRUE(j.at("passed").get<bool>());
}
