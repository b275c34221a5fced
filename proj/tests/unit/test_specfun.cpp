#include <gtest/gtest.h>

#include <cmath>

#include "su11/error.hpp"
#include "su11/specfun.hpp"

using namespace su11::specfun;
using su11::DomainError;
using su11::exact::QComplex;
using su11::exact::Rational;

TEST(Hyp2f1, TerminatingEmptySeries) {
  EXPECT_EQ(hyp2f1_terminating(0, {3.0, 1.0}, 2.5, 7.0).value, cplx(1.0));
}

TEST(Hyp2f1, TerminatingMatchesBinomial) {
  // F(-n, b; b; x) = (1 - x)^n
  for (int n : {1, 4, 9}) {
    const auto v = hyp2f1_terminating(n, 1.7, 1.7, 0.3);
    EXPECT_NEAR(v.value.real(), std::pow(0.7, n), 1e-14);
  }
}

TEST(Hyp2f1, ExactAndTableAgree) {
  const QComplex b(Rational(3, 2), Rational(1)), c(Rational(2));
  const auto table = hyp2f1_arg2_table(12, b, c);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(table[n], hyp2f1_terminating_exact(n, b, c, 2));
  // the unity-argument value F(-1,3;3;2) = -1
  EXPECT_EQ(hyp2f1_terminating_exact(1, 3, 3, 2), QComplex(-1));
}

TEST(Hyp2f1, LogarithmOracle) {
  EXPECT_NEAR(hyp2f1(1.0, 1.0, 2.0, 0.5).value.real(), -std::log(0.5) / 0.5, 1e-14);
  EXPECT_NEAR(hyp2f1(1.0, 1.0, 2.0, 0.95).value.real(), -std::log(0.05) / 0.95, 1e-12);
}

TEST(Hyp2f1, PfaffBranchAgreesWithDirectSeries) {
  const cplx a{0.3, 0.4}, b{-1.2, 0.5}, c{2.1, -0.3};
  const double x = -0.4;
  const auto t = hyp2f1(a, b, c, x);
  EXPECT_TRUE(t.pfaff);
  EXPECT_LT(std::abs(t.value - hyp2f1_direct(a, b, c, x).value), 1e-13);
}

TEST(Hyp2f1, PowerOracle) {
  // F(a, b; b; x) = (1 - x)^{-a}
  const cplx a{0.7, -0.2};
  EXPECT_LT(std::abs(hyp2f1(a, 1.3, 1.3, 0.6).value - std::pow(cplx(0.4), -a)), 1e-13);
}

TEST(Hyp2f1, RejectsArgumentAtOrPastOne) {
  EXPECT_THROW(hyp2f1(0.5, 0.5, 1.5, 1.0), DomainError);
}

TEST(Gamma, MatchesStdTgammaOnReals) {
  for (double x : {0.5, 1.0, 2.5, 7.25, -0.5, -2.5})
    EXPECT_NEAR(su11::specfun::gamma(cplx(x)).real() / std::tgamma(x), 1.0, 1e-13) << x;
}

TEST(Gamma, FunctionalEquationComplex) {
  const cplx z{-0.5, 2.0};
  EXPECT_LT(std::abs(gamma(z + 1.0) / (z * gamma(z)) - 1.0), 1e-13);
}

TEST(Gamma, RatioShift) {
  EXPECT_EQ(gamma_ratio_shift(1.0, 0), cplx(1.0));
  EXPECT_NEAR(gamma_ratio_shift(1.0, 3).real(), 6.0, 1e-14);
  const cplx z{-0.5, 2.0};
  EXPECT_LT(std::abs(gamma_ratio_shift(z, 2) - z * (z + 1.0)), 1e-14);
  // log-gamma route for long shifts against the product
  cplx p = 1.0;
  for (int j = 0; j < 40; ++j) p *= z + double(j);
  EXPECT_LT(std::abs(gamma_ratio_shift(z, 40) / p - 1.0), 1e-11);
}

TEST(Gamma, LeadingTermAtPole) {
  // Gamma(-2 + delta) ~ (1/2) / delta
  const auto l = gamma_leading(-2.0, 1.0);
  EXPECT_EQ(l.order, -1);
  EXPECT_NEAR(l.coeff.real(), 0.5, 1e-15);
  EXPECT_THROW(l.limit(), DomainError);
  // Gamma(z+k)/Gamma(z) at z = -1, k = 2: factor (z+1) vanishes
  const auto r = gamma_ratio_shift_leading(-1.0, 2, 1.0);
  EXPECT_EQ(r.order, 1);
}

TEST(Hermite, OrthonormalUnderQuadrature) {
  const auto rule = gauss_hermite(40);
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  EXPECT_NEAR(wsum, std::sqrt(M_PI), 1e-13);
  for (int m = 0; m < 12; ++m)
    for (int n = 0; n < 12; ++n) {
      double s = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const auto p = hermite_polynomial_part(std::max(m, n), rule.nodes[i]);
        s += rule.weights[i] * p[m] * p[n];
      }
      EXPECT_NEAR(s, m == n ? 1.0 : 0.0, 1e-12) << m << "," << n;
    }
}

TEST(Hermite, GroundState) {
  EXPECT_NEAR(hermite_psi(0, 0.7).value, std::pow(M_PI, -0.25) * std::exp(-0.245), 1e-15);
  EXPECT_TRUE(hermite_psi(3, 60.0).underflow);
}

TEST(Legendre, LowOrders) {
  for (double u : {-0.3, 1.0, 1.5430806348152437, 3.0}) {
    EXPECT_DOUBLE_EQ(legendre_p(0, u), 1.0);
    EXPECT_DOUBLE_EQ(legendre_p(1, u), u);
    EXPECT_NEAR(legendre_p(2, u), 0.5 * (3 * u * u - 1), 1e-13);
    EXPECT_NEAR(legendre_p(3, u), 0.5 * (5 * u * u * u - 3 * u), 1e-12);
  }
}
