#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "su11/error.hpp"
#include "su11/verify.hpp"

using namespace su11;
using namespace su11::verify;
using irrep::Epsilon;
using irrep::IrrepLabel;
using cplx = std::complex<double>;

namespace {
const IrrepLabel kOne{1.0, Epsilon::zero};
const IrrepLabel kPrincipal{cplx(-0.5, 1.0), Epsilon::zero};
}  // namespace

TEST(Report, PassedIffResidualWithinTolerance) {
  VerificationReport r;
  r.residual = 1e-10;
  r.tolerance = 1e-9;
  r.finalize();
  EXPECT_TRUE(r.passed);
  r.residual = std::nan("");
  r.finalize();
  EXPECT_FALSE(r.passed);
  r.residual = 0.0;
  r.tolerance = 0.0;
  r.finalize();
  EXPECT_TRUE(r.passed);
  const auto j = r.to_json();
  for (const char* key : {"identity_id", "parameters", "residual", "tolerance", "tail_estimate",
                          "passed", "diagnostics"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Addition, IdentityElementIsExact) {
  const fock::FockSpace s(24);
  const auto r = check_addition(kPrincipal, 1, grp::identity(), s);
  EXPECT_LT(r.residual, 1e-13);
}

TEST(Addition, FiniteSeriesRandomElements) {
  const fock::FockSpace s(32);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto g = grp::cartan_compose(grp::random_angles(rng, 1.5));
    for (int k = -1; k <= 1; ++k) {
      const auto r = check_addition(kOne, k, g, s);
      EXPECT_TRUE(r.passed) << r.to_json().dump();
    }
  }
}

TEST(Addition, InfiniteKindsConvergeWithSmallTail) {
  const fock::FockSpace s(32);
  CheckOptions opt;
  opt.tol = 1e-8;
  for (const IrrepLabel& l : {kPrincipal, IrrepLabel{cplx(-0.5, 1.0), Epsilon::half},
                              IrrepLabel{-1.0, Epsilon::zero}, IrrepLabel{-1.5, Epsilon::half}}) {
    const int k = irrep::classify(l).contains(1) ? 1 : -1;
    const auto r = check_addition(l, k, grp::cartan_compose({0.4, 0.8, 1.3}), s, opt);
    EXPECT_TRUE(r.passed) << r.to_json().dump();
    EXPECT_LE(r.tail_estimate, 1e-12);
    EXPECT_TRUE(r.diagnostics.at("converged").get<bool>());
  }
}

TEST(Addition, ResiduePieceOfDiscretePair) {
  // tau = -1: U D_1 U* has a multiple of the identity outside the subspace
  const auto r = check_addition({-1.0, Epsilon::zero}, 1, grp::h(0.7), fock::FockSpace(24));
  EXPECT_TRUE(r.passed);
  EXPECT_GT(r.diagnostics.at("residue_norm").get<double>(), 1e-3);
  EXPECT_GT(r.diagnostics.at("literal_residual").get<double>(), 1e-3);
}

TEST(Addition, FixedInnerTruncationImprovesWithN) {
  // the plain N x N product is limited by the cutoff; on a fixed interior block
  // the residual falls at least geometrically as N grows
  CheckOptions opt;
  opt.truncation.padded = false;
  const auto g = grp::h(0.6);
  std::vector<double> res;
  for (int n : {24, 32, 48}) {
    const auto d = addition_difference(kOne, 0, g, fock::FockSpace(n), opt);
    res.push_back(d.topLeftCorner(8, 8).cwiseAbs().maxCoeff());
  }
  EXPECT_LT(res[1], res[0]);
  EXPECT_LT(res[2], res[1]);
  // ratio per step of 8 at least as good at the second step as at the first
  EXPECT_LT(res[2] / res[1], std::pow(res[1] / res[0], 2.0) * 1.5);
}

TEST(Sandwich, MatchesAdditionDifference) {
  const fock::FockSpace s(32);
  const auto g = grp::cartan_compose({0.2, 0.9, 2.0});
  const auto diff = addition_difference(kOne, 1, g, s);
  const std::vector<Point> pts = {{0, 0}, {2, 0}, {5, 3}, {7, 9}};
  const auto reports = check_sandwich_a(kOne, 1, g, pts, {});
  ASSERT_EQ(reports.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [l, c] = pts[i];
    const auto& dj = reports[i].diagnostics;
    const cplx lhs(dj.at("lhs")[0].get<double>(), dj.at("lhs")[1].get<double>());
    const cplx rhs(dj.at("rhs")[0].get<double>(), dj.at("rhs")[1].get<double>());
    EXPECT_LT(std::abs((lhs - rhs) - diff(l, c)), 1e-13 * std::max(1.0, std::abs(lhs)));
  }
}

TEST(Sandwich, WorkedExamples) {
  CheckOptions opt;
  opt.tol = 1e-10;
  EXPECT_TRUE(check_sandwich_a(kOne, 0, grp::h(1.0), {{0, 0}}, opt)[0].passed);
  EXPECT_TRUE(check_sandwich_b(kOne, 1, grp::h(0.5), {{2, 0}}, opt)[0].passed);
  opt.tol = 1e-9;
  const auto c = check_sandwich_c(kOne, 0, grp::h(1.0), {{1, 1}}, opt)[0];
  EXPECT_TRUE(c.passed);
  for (const auto& r : check_sandwich_b(kPrincipal, 0, grp::identity(), {{3, 3}, {0, 4}}, opt))
    EXPECT_LT(r.residual, 1e-13);
}

TEST(Sandwich, LiteralIndexOrderIsWrong) {
  // the t_kn order in the third identity fails away from pure boosts
  const auto r = check_sandwich_c(kOne, 1, grp::cartan_compose({0.7, 1.0, 0.4}), {{2, 0}}, {})[0];
  EXPECT_TRUE(r.passed);
  const auto& lit = r.diagnostics.at("literal_residual");
  EXPECT_TRUE(lit.is_string() || lit.get<double>() > 1e-3) << lit.dump();
}

TEST(GeneratingFunction, Examples) {
  EXPECT_TRUE(check_generating_function(-1.0, 2.0, 3.0, 0.4).passed);
  const auto zero = check_generating_function(0.0, 0.0, 2.5, 0.6);
  EXPECT_TRUE(zero.passed);
  EXPECT_NEAR(zero.diagnostics.at("rhs")[0].get<double>(), std::pow(0.4, -2.5), 1e-12);
  const auto s0 = check_generating_function({0.3, 1.0}, {1.0, -2.0}, 1.5, 0.0);
  EXPECT_NEAR(s0.diagnostics.at("lhs")[0].get<double>(), 1.0, 1e-15);
  EXPECT_THROW(check_generating_function(0.5, 0.5, 1.0, 1.2), DomainError);
}

TEST(Orthogonality, StructuralZeros) {
  const fock::FockSpace s(24);
  const auto r = check_orthogonality_structural(kPrincipal, 0, kPrincipal, 1, s);
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_TRUE(r.passed);
  const auto e = check_orthogonality_structural(kPrincipal, 0, {cplx(-0.5, 2.0), Epsilon::half}, 0, s);
  EXPECT_EQ(e.residual, 0.0);
  EXPECT_THROW(check_orthogonality_structural(kPrincipal, 1, kOne, 1, s), DomainError);
}

TEST(Orthogonality, RegulatedPairingAndTrend) {
  const IrrepLabel a{cplx(-0.5, 1.0), Epsilon::zero}, b{cplx(-0.5, 2.0), Epsilon::zero};
  const auto r = check_orthogonality_regulated(a, b, 0, 0.9);
  EXPECT_TRUE(r.passed) << r.to_json().dump();
  EXPECT_GT(r.diagnostics.at("plain_pairing_residual").get<double>(), 1e-3);
  // the regulated sum grows as s approaches 1
  double prev = 0.0;
  for (double s : {0.3, 0.6, 0.9}) {
    const auto q = check_orthogonality_regulated(a, a, 0, s);
    const auto v = q.diagnostics.at("regulated_sum");
    const double mag = std::hypot(v[0].get<double>(), v[1].get<double>());
    EXPECT_GT(mag, prev);
    prev = mag;
  }
}

TEST(Legendre, AlphaZeroAndOracle) {
  for (int t = 0; t <= 3; ++t) EXPECT_NEAR(check_legendre_identity(t, 0.0).diagnostics.at("series").get<double>(), 1.0, 1e-15);
  const auto r = check_legendre_identity(1, 1.0);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.diagnostics.at("series").get<double>(), std::cosh(1.0), 1e-12);
  EXPECT_GT(r.diagnostics.at("variant_form_residual").get<double>(), 1e-3);
}

TEST(Unity, DerivedSignIsUnique) {
  const auto d = derive_unity_sign(3);
  ASSERT_EQ(d.consistent.size(), 1u);
  EXPECT_EQ(d.consistent[0], UnitySign::alternating);
  EXPECT_EQ(kUnitySign, UnitySign::alternating);
  EXPECT_FALSE(d.log.empty());
  for (int t = 0; t <= 3; ++t) EXPECT_TRUE(check_unity_identity(t, 1.0).passed);
  EXPECT_FALSE(check_unity_identity(2, 1.0, 1e-11, UnitySign::plus).passed);
}

TEST(Algebra, LieRelationsAndLadders) {
  const fock::FockSpace s(32);
  for (const auto& r : check_lie_algebra(s, 2, 11)) EXPECT_TRUE(r.passed) << r.identity_id;
  for (const auto& r : check_ladder_relations({-1.0, Epsilon::zero}, 1, s))
    EXPECT_TRUE(r.passed) << r.identity_id;
  EXPECT_FALSE(check_weight_edges({-1.0, Epsilon::zero}, s).passed);
  EXPECT_TRUE(check_weight_edges({2.0, Epsilon::zero}, s).passed);
}

TEST(Algebra, RecurrencesExact) {
  const auto r = check_c_recurrences(exact::Rational(-1, 2), Epsilon::half, -3, 7);
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_TRUE(r.passed);
}

TEST(WeylChecks, OracleAndGroupLaw) {
  EXPECT_TRUE(check_weyl_oracle(1.0, 21).passed);
  EXPECT_TRUE(check_unitarity(grp::h(2.0), 32).passed);
  EXPECT_TRUE(check_homomorphism(grp::h(0.5), grp::cartan_compose({1.0, 0.7, 2.0}), 32).passed);
  EXPECT_TRUE(check_intertwining(grp::cartan_compose({1.0, 0.7, 2.0}), 24).passed);
  EXPECT_TRUE(check_cartan_roundtrip(grp::cartan_compose({3.0, 1.2, 0.5})).passed);
  EXPECT_TRUE(check_generator_commutator(grp::h(0.8), fock::FockSpace(16)).passed);
}
