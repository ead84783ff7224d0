#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sdt/cyclo.hpp"

using namespace sdt;

TEST(EulerPhi, SmallValues) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(8), 4);
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(euler_phi(16), 8);
  EXPECT_EQ(euler_phi(20), 8);
  EXPECT_EQ(euler_phi(24), 8);
}

TEST(CyclotomicPolynomial, KnownPolynomials) {
  // Phi_8 = x^4 + 1, Phi_12 = x^4 - x^2 + 1
  EXPECT_EQ(cyclotomic_polynomial(8), IntPolynomial({1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), IntPolynomial({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(1), IntPolynomial({-1, 1}));
}

TEST(CyclotomicPolynomial, DegreeIsPhiAndProductIsXkMinusOne) {
  for (int k = 1; k <= 40; ++k) {
    EXPECT_EQ(cyclotomic_polynomial(k).degree(), euler_phi(k)) << k;
    IntPolynomial prod({1});
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) prod = prod * cyclotomic_polynomial(d);
    EXPECT_EQ(prod, IntPolynomial::monomial(k) - IntPolynomial({1})) << k;
  }
}

TEST(IntPolynomial, DivisionRoundTrip) {
  const IntPolynomial p({3, -2, 0, 5, 1});
  const IntPolynomial q({1, 0, 1});
  const IntPolynomial r = p.mod(q);
  EXPECT_LT(r.degree(), q.degree());
  EXPECT_EQ((p - r).exact_div(q) * q + r, p);
  EXPECT_THROW(p.exact_div(q), std::domain_error);
}

TEST(CycloInt, RootPowerIdentities) {
  for (int N : {8, 12, 16, 20, 24}) {
    const int half = N / 2;
    EXPECT_EQ(CycloInt::root_power(N, half), CycloInt(N, BigInt(-1))) << N;
    EXPECT_EQ(CycloInt::root_power(N, N), CycloInt::one(N)) << N;
    EXPECT_EQ(CycloInt::root_power(N, -1) * CycloInt::root_power(N, 1), CycloInt::one(N));
    for (int e = -2 * N; e <= 2 * N; ++e) {
      EXPECT_EQ(CycloInt::root_power(N, e), CycloInt::root_power(N, e + N));
      const auto z = CycloInt::root_power(N, e).to_complex();
      EXPECT_NEAR(z.real(), std::cos(2 * M_PI * e / N), 1e-12);
      EXPECT_NEAR(z.imag(), std::sin(2 * M_PI * e / N), 1e-12);
    }
  }
}

TEST(CycloInt, SumOfAllRootsVanishes) {
  for (int N : {8, 12, 16}) {
    CycloInt s = CycloInt::zero(N);
    for (int e = 0; e < N; ++e) s += CycloInt::root_power(N, e);
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(CycloInt, ZeroTestIsExact) {
  // 2cos(pi/4)^2 = 2 in Z[zeta_8]
  const int N = 8;
  const CycloInt c = CycloInt::root_power(N, 1) + CycloInt::root_power(N, -1);
  EXPECT_EQ(c * c, CycloInt(N, BigInt(2)));
  EXPECT_FALSE(c.is_zero());
  EXPECT_EQ(c.as_integer(), std::nullopt);
  EXPECT_EQ((c * c).as_integer(), BigInt(2));
  // zeta_8^2 + zeta_8^6 = i - i = 0
  EXPECT_TRUE((CycloInt::root_power(N, 2) + CycloInt::root_power(N, 6)).is_zero());
}

TEST(CycloInt, ConjugateInvertsRoots) {
  for (int e = 0; e < 12; ++e)
    EXPECT_EQ(CycloInt::root_power(12, e).conjugate(), CycloInt::root_power(12, -e));
}

TEST(CycloInt, RingAxiomsOnRandomElements) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int N : {8, 12, 20, 24}) {
    auto random = [&] {
      std::vector<BigInt> c(static_cast<std::size_t>(N));
      for (auto& x : c) x = coeff(rng);
      return CycloInt(N, c);
    };
    for (int trial = 0; trial < 25; ++trial) {
      const CycloInt x = random(), y = random(), z = random();
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x - x, CycloInt::zero(N));
      EXPECT_EQ(x * CycloInt::one(N), x);
      EXPECT_EQ((x * y).conjugate(), x.conjugate() * y.conjugate());
      const auto prod = (x * y).to_complex(), expect = x.to_complex() * y.to_complex();
      EXPECT_NEAR(std::abs(prod - expect), 0.0, 1e-6 * (1 + std::abs(expect)));
    }
  }
}

TEST(CycloInt, OrderMismatchThrows) {
  EXPECT_THROW(CycloInt::one(8) + CycloInt::one(12), OrderMismatch);
  EXPECT_THROW((void)(CycloInt::one(8) == CycloInt::one(12)), OrderMismatch);
  EXPECT_THROW(CycloInt(10, BigInt(1)), std::invalid_argument);
}

TEST(CycloInt, BigCoefficientsStayExact) {
  const int N = 8;
  CycloInt x = CycloInt(N, BigInt(3)) + CycloInt::root_power(N, 1);
  for (int i = 0; i < 12; ++i) x *= x;  // coefficients far beyond 64 bits
  EXPECT_EQ(x, x.conjugate().conjugate());
  EXPECT_EQ(x - x, CycloInt::zero(N));
}

TEST(CycloInt, ToStringListsCoefficients) {
  EXPECT_EQ(CycloInt(8, BigInt(1)).to_string(), "{1,0,0,0}");
  EXPECT_EQ(CycloInt::root_power(8, 5).to_string(), "{0,-1,0,0}");
}
