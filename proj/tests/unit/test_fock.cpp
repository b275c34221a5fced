#include <gtest/gtest.h>

#include "su11/error.hpp"
#include "su11/fock.hpp"

using namespace su11::fock;

TEST(Fock, CanonicalCommutatorOnInterior) {
  const FockSpace s(12);
  const auto c = commutator(annihilation(s), creation(s));
  const Eigen::MatrixXcd d = c.dense();
  // the truncation only spoils the last diagonal entry
  for (int i = 0; i + 1 < 12; ++i) EXPECT_NEAR(std::abs(d(i, i) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(d.topLeftCorner(11, 11).norm(), std::sqrt(11.0), 1e-13);
}

TEST(Fock, ShiftsAdd) {
  const FockSpace s(16);
  const auto a = random_banded(s, 1, 3), b = random_banded(s, 2, 4);
  const auto p = a * b;
  EXPECT_LE(p.max_shift(), 3);
  EXPECT_LT((p.dense() - a.dense() * b.dense()).norm(), 1e-12);
}

TEST(Fock, RandomBandedIsDeterministic) {
  const FockSpace s(10);
  EXPECT_EQ(random_banded(s, 2, 11).dense(), random_banded(s, 2, 11).dense());
  EXPECT_NE(random_banded(s, 2, 11).dense(), random_banded(s, 2, 12).dense());
}

TEST(Fock, FallingFactorial) {
  const FockSpace s(8);
  const auto zn = creation(s) * creation(s) * annihilation(s) * annihilation(s);
  EXPECT_NEAR(std::abs(zn.entry(5, 5) - 20.0), 0.0, 1e-12);
  EXPECT_EQ(falling_factorial_diagonal(2, s).entry(5, 5), std::complex<double>(20.0));
  EXPECT_EQ(falling_factorial_diagonal(3, s).entry(2, 2), std::complex<double>(0.0));
  EXPECT_EQ(falling_factorial_diagonal(0, s).dense(), identity(s).dense());
}

TEST(Fock, TraceInnerProduct) {
  const FockSpace s(9);
  const auto f = random_banded(s, 2, 1), g = random_banded(s, 3, 2);
  const auto dense = (f.dense().adjoint() * g.dense()).trace();
  EXPECT_LT(std::abs(trace_inner_product(f, g) - dense), 1e-12);
  // no common shift
  EXPECT_EQ(trace_inner_product(annihilation(s), creation(s)), std::complex<double>(0.0));
}

TEST(Fock, MismatchedSpacesThrow) {
  EXPECT_THROW(commutator(number(FockSpace(4)), number(FockSpace(5))), su11::DomainError);
}
