#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "branchlab/cyclo.hpp"

using namespace branchlab;

namespace {

unsigned euler_phi(unsigned n) {
  unsigned count = 0;
  for (unsigned k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

std::complex<double> zeta(unsigned n, unsigned k) {
  const double a = 2 * M_PI * k / n;
  return {std::cos(a), std::sin(a)};
}

Cyclo random_cyclo(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Cyclo x(n);
  for (unsigned j = 0; j < n; ++j) x.add_term(j, coef(rng));
  return x;
}

}  // namespace

TEST(Cyclo, CyclotomicPolynomialsHaveTheRightDegreeAndRoots) {
  for (unsigned n = 1; n <= 60; ++n) {
    const auto& p = cyclotomic_polynomial(n);
    EXPECT_EQ(p.size() - 1, euler_phi(n)) << n;
    std::complex<double> v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * zeta(n, 1) + static_cast<double>(p[i]);
    EXPECT_LT(std::abs(v), 1e-8) << n;
  }
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long long>{1, -1, 1}));
}

TEST(Cyclo, ArithmeticAgreesWithComplexNumbers) {
  std::mt19937 rng(11);
  for (unsigned n : {1u, 2u, 3u, 4u, 6u, 8u, 12u, 16u, 24u, 48u}) {
    for (int t = 0; t < 30; ++t) {
      const Cyclo x = random_cyclo(rng, n), y = random_cyclo(rng, n);
      EXPECT_LT(std::abs((x * y).to_complex() - x.to_complex() * y.to_complex()), 1e-7);
      EXPECT_LT(std::abs((x + y).to_complex() - (x.to_complex() + y.to_complex())), 1e-9);
      EXPECT_LT(std::abs(x.conj().to_complex() - std::conj(x.to_complex())), 1e-9);
      // Equality is decided by the canonical remainder, so it must match numerics.
      EXPECT_EQ(x == y, std::abs(x.to_complex() - y.to_complex()) < 1e-9);
      EXPECT_EQ(x.reduced(), x);
    }
  }
}

TEST(Cyclo, RelationsAmongRoots) {
  for (unsigned n = 2; n <= 24; ++n) {
    Cyclo s(n);
    for (unsigned k = 0; k < n; ++k) s += Cyclo::root(n, k);
    EXPECT_TRUE(s.is_zero()) << n;
    EXPECT_EQ(Cyclo::root(n, 1) * Cyclo::root(n, n - 1), Cyclo::integer(1));
  }
  EXPECT_EQ(Cyclo::root(4, 2), Cyclo::integer(-1));
  EXPECT_EQ(Cyclo::root(6, 1) + Cyclo::root(6, 5), Cyclo::integer(1));
}

TEST(Cyclo, RescalingKeepsTheValue) {
  const Cyclo x = Cyclo::root(4, 1) * 3 + Cyclo::integer(2, 4);
  const Cyclo y = x.rescaled(12);
  EXPECT_EQ(y.modulus(), 12u);
  EXPECT_LT(std::abs(x.to_complex() - y.to_complex()), 1e-12);
  EXPECT_EQ(x + Cyclo::root(3, 1), y + Cyclo::root(3, 1).rescaled(12));
}

TEST(Cyclo, IntegersAndDivision) {
  EXPECT_EQ((Cyclo::root(3, 1) + Cyclo::root(3, 2)).to_integer(), std::optional<long long>(-1));
  EXPECT_FALSE(Cyclo::root(4, 1).to_integer().has_value());
  EXPECT_THROW(Cyclo::root(4, 1).require_integer(), NotRational);
  EXPECT_EQ((Cyclo::root(8, 3) * 6).div_exact(3), Cyclo::root(8, 3) * 2);
  EXPECT_THROW((Cyclo::root(8, 3) * 5).div_exact(3), std::domain_error);
}

TEST(Cyclo, TextForm) {
  EXPECT_EQ(Cyclo::integer(0, 8).str(), "0");
  EXPECT_EQ(Cyclo::integer(5, 8).str(), "5");
  const Cyclo x = Cyclo::integer(2, 8) - Cyclo::root(8, 3);
  EXPECT_EQ(x.str(), "2-z^3");
  EXPECT_EQ(x.terms(), 2u);
}
