#include <gtest/gtest.h>

#include <random>

#include "su11/error.hpp"
#include "su11/grp.hpp"

using namespace su11::grp;
using cplx = std::complex<double>;

namespace {
double gap(const GroupElement& x, const GroupElement& y) {
  return std::abs(x.a() - y.a()) + std::abs(x.b() - y.b());
}
}  // namespace

TEST(Group, CartanComposeExamples) {
  EXPECT_LT(gap(cartan_compose({0, 0, 0}), identity()), 1e-15);
  EXPECT_LT(gap(cartan_compose({0, 0.8, 0}), h(0.8)), 1e-15);
  const auto g = cartan_compose({M_PI, 1.0, 0.0});
  const cplx i{0.0, 1.0};
  EXPECT_LT(std::abs(g.a() - i * std::cosh(0.5)), 1e-15);
  EXPECT_LT(std::abs(g.b() - i * std::sinh(0.5)), 1e-15);
}

TEST(Group, InverseAndAssociativity) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto x = cartan_compose(random_angles(rng, 1.5));
    const auto y = cartan_compose(random_angles(rng, 1.5));
    const auto z = cartan_compose(random_angles(rng, 1.5));
    EXPECT_LT(gap(compose(x, inverse(x)), identity()), 1e-12);
    EXPECT_LT(gap(compose(compose(x, y), z), compose(x, compose(y, z))), 1e-11);
    EXPECT_LT(compose(x, y).constraint_residual(), 1e-12);
  }
}

TEST(Group, DecomposeRoundTrip) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto c = random_angles(rng, 2.0);
    EXPECT_LE(c.alpha, 2.0);
    const auto d = cartan_decompose(cartan_compose(c));
    EXPECT_LT(d.roundtrip_residual, 1e-10);
    EXPECT_NEAR(d.angles.alpha, c.alpha, 1e-10);
  }
  const auto e = cartan_decompose(identity());
  EXPECT_EQ(e.angles.alpha, 0.0);
  EXPECT_EQ(e.angles.psi, 0.0);
}

TEST(Group, RejectsSpacelikePair) {
  EXPECT_THROW(GroupElement(cplx(0.5), cplx(0.9)), su11::DomainError);
}

TEST(Group, JsonRoundTrip) {
  const CartanAngles c{0.3, 1.1, 2.2};
  const auto back = angles_from_json(to_json(c));
  EXPECT_EQ(back.phi, c.phi);
  EXPECT_EQ(back.alpha, c.alpha);
  const auto g = h(0.4);
  EXPECT_LT(gap(group_from_json(to_json(g)), g), 1e-15);
}

TEST(Group, GeneratorActionAtIdentity) {
  const su11::fock::FockSpace s(8);
  const auto [za, zs] = act_on_generators(identity(), s);
  EXPECT_LT((za.dense() - su11::fock::annihilation(s).dense()).norm(), 1e-15);
  EXPECT_LT((zs.dense() - su11::fock::creation(s).dense()).norm(), 1e-15);
}
