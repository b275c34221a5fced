#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "su11/error.hpp"
#include "su11/repmat.hpp"
#include "su11/specfun.hpp"

using namespace su11;
using irrep::Epsilon;
using irrep::IrrepLabel;
using cplx = std::complex<double>;

TEST(Repmat, IdentityIsDiagonalPhase) {
  const IrrepLabel l{cplx(-0.5, 1.0), Epsilon::half};
  for (int k = -3; k <= 3; ++k)
    for (int n = -3; n <= 3; ++n) {
      const cplx t = repmat::t_element(l, k, n, {0.0, 0.0, 0.0});
      if (k == n)
        EXPECT_NEAR(std::abs(t), 1.0, 1e-14);
      else
        EXPECT_EQ(t, cplx(0.0));
    }
}

TEST(Repmat, ZonalFunctionIsLegendre) {
  // t_00 of the integer finite label on h(alpha) is P_tau(cosh alpha)
  for (int tau = 0; tau <= 4; ++tau)
    for (double a : {0.25, 1.0, 2.0}) {
      const cplx t = repmat::t_element({double(tau), Epsilon::zero}, 0, 0, {0.0, a, 0.0});
      EXPECT_NEAR(t.real(), specfun::legendre_p(tau, std::cosh(a)),
                  1e-12 * std::max(1.0, std::abs(t)));
      EXPECT_NEAR(t.imag(), 0.0, 1e-14);
    }
}

TEST(Repmat, FiniteBlocksMultiply) {
  // U(g1 g2) D_k U* = sum t_mn(g1) t_nk(g2) D_m, so the blocks compose as matrices
  std::mt19937_64 rng(21);
  const std::vector<std::pair<IrrepLabel, std::pair<int, int>>> cases = {
      {{1.0, Epsilon::zero}, {-1, 1}}, {{2.0, Epsilon::zero}, {-2, 2}}, {{1.5, Epsilon::half}, {-2, 1}}};
  for (const auto& [l, r] : cases)
    for (int t = 0; t < 5; ++t) {
      const auto c1 = grp::random_angles(rng, 1.2), c2 = grp::random_angles(rng, 1.2);
      const auto g12 = grp::cartan_decompose(grp::compose(grp::cartan_compose(c1), grp::cartan_compose(c2)));
      const auto b1 = repmat::t_block(l, r.first, r.second, c1);
      const auto b2 = repmat::t_block(l, r.first, r.second, c2);
      const auto b12 = repmat::t_block(l, r.first, r.second, g12.angles);
      const double scale = std::max(1.0, b12.cwiseAbs().maxCoeff());
      EXPECT_LT((b1 * b2 - b12).cwiseAbs().maxCoeff() / scale, 1e-11);
    }
}

TEST(Repmat, PrincipalBlockApproachesUnitary) {
  // the central column of B(h) has unit norm once the block is wide enough
  const IrrepLabel l{cplx(-0.5, 1.0), Epsilon::zero};
  double prev = 1e300;
  for (int K : {2, 6, 14, 30}) {
    const auto b = repmat::t_block(l, -K, K, {0.0, 1.0, 0.0});
    const double defect = std::abs((b.adjoint() * b)(K, K) - 1.0);
    EXPECT_LT(defect, prev);
    prev = defect;
  }
  EXPECT_LT(prev, 1e-8);
}

TEST(Repmat, RowColumnPhase) {
  const IrrepLabel l{2.0, Epsilon::zero};
  const grp::CartanAngles c{0.3, 0.8, 1.1};
  const cplx pure = repmat::t_element(l, 1, -1, {0.0, 0.8, 0.0});
  const cplx full = repmat::t_element(l, 1, -1, c);
  const cplx phase = std::exp(cplx(0.0, -1.0 * 0.3 + 1.0 * 1.1));
  EXPECT_LT(std::abs(full - pure * phase), 1e-13);
}

TEST(Repmat, OutsideSubspaceThrows) {
  EXPECT_THROW(repmat::t_element({1.0, Epsilon::zero}, 2, 0, {0.0, 0.5, 0.0}), DomainError);
  EXPECT_THROW(repmat::t_element({-1.0, Epsilon::zero}, 1, -1, {0.0, 0.5, 0.0}), DomainError);
}
