#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "su11/weyl.hpp"

using namespace su11;
using namespace su11::weyl;

TEST(Weyl, ParityZerosAreExact) {
  for (int m = 0; m < 20; ++m)
    for (int n = 0; n < 20; ++n)
      if ((m + n) % 2) EXPECT_EQ(squeeze_entry(m, n, 1.3), 0.0);
}

TEST(Weyl, SqueezedVacuumColumn) {
  // U(h) |0> is a vacuum squeezed in x: amplitudes sqrt((2j)!)/(2^j j!) (-tanh)^j / sqrt(cosh)
  for (double alpha : {0.3, 1.0, 2.0}) {
    const double c = std::cosh(alpha / 2), t = std::tanh(alpha / 2);
    for (int j = 0; j < 10; ++j) {
      const double coef = std::exp(0.5 * std::lgamma(2.0 * j + 1) - j * std::log(2.0) -
                                   std::lgamma(j + 1.0));
      EXPECT_NEAR(squeeze_entry(2 * j, 0, alpha), coef * std::pow(-t, j) / std::sqrt(c), 1e-14);
    }
  }
}

TEST(Weyl, ReflectionSymmetry) {
  for (int m = 0; m < 10; ++m)
    for (int n = 0; n < 10; ++n)
      EXPECT_NEAR(squeeze_entry(m, n, 0.7), squeeze_entry(n, m, -0.7), 1e-14);
}

TEST(Weyl, ClosedFormAgreesWithQuadrature) {
  const fock::FockSpace s(21);
  for (double alpha : {0.3, 1.0, 2.0}) {
    const auto a = u_squeeze_closed(alpha, s), b = u_squeeze_quadrature(alpha, s);
    EXPECT_LT((a.entries - b.entries).cwiseAbs().maxCoeff(), 1e-10) << alpha;
  }
}

TEST(Weyl, PhaseOperatorDoubleCover) {
  const fock::FockSpace s(4);
  EXPECT_LT(std::abs(u_phase(2 * M_PI, s).entries(1, 1) + 1.0), 1e-15);
  EXPECT_LT(std::abs(u_phase(M_PI, s).entries(2, 2) + 1.0), 1e-15);
  EXPECT_LT((u_phase(0.0, s).entries - Eigen::MatrixXcd::Identity(4, 4)).norm(), 1e-15);
}

TEST(Weyl, IdentityElement) {
  const fock::FockSpace s(10);
  EXPECT_LT((u_squeeze_closed(0.0, s).entries - Eigen::MatrixXcd::Identity(10, 10)).norm(), 1e-13);
  EXPECT_LT((u_of_g(grp::identity(), s).entries - Eigen::MatrixXcd::Identity(10, 10)).norm(),
            1e-13);
}

TEST(Weyl, ProductOfFactorsMatchesDirectEntries) {
  const grp::CartanAngles c{0.4, 0.9, 1.7};
  const fock::FockSpace s(12);
  const auto u = u_of_g(grp::cartan_compose(c), s);
  for (int m = 0; m < 12; ++m)
    for (int n = 0; n < 12; ++n) EXPECT_LT(std::abs(u.entries(m, n) - weyl_entry(c, m, n)), 1e-13);
}

TEST(Weyl, UnitarityNeedsPadding) {
  const grp::CartanAngles c{0.0, 2.0, 0.0};
  EXPECT_LT(unitarity_residual(c, 32), 1e-9);
  Truncation plain;
  plain.padded = false;
  // the plain N x N product loses column mass past the cutoff
  EXPECT_GT(unitarity_residual(c, 32, plain), 1e-6);
}

TEST(Weyl, HomomorphismUpToSign) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto g1 = grp::cartan_compose(grp::random_angles(rng, 1.0));
    const auto g2 = grp::cartan_compose(grp::random_angles(rng, 1.0));
    const auto r = homomorphism_residual(g1, g2, 32);
    EXPECT_LT(r.residual, 1e-8);
    EXPECT_TRUE(r.sign == 1 || r.sign == -1);
    EXPECT_LT(r.phase_defect, 1e-8);
  }
}

TEST(Weyl, IntertwiningPureBoost) {
  const auto r = intertwining_residual(grp::h(1.0), 24);
  EXPECT_LT(r.residual, 1e-9);
  EXPECT_EQ(r.candidates.size(), 4u);
}

TEST(Weyl, PaddedDimensionGrowsWithAlpha) {
  EXPECT_GE(padded_dim(0.5, 32), 32);
  EXPECT_LT(padded_dim(0.5, 32), padded_dim(2.0, 32));
}
