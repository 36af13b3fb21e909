#include <gtest/gtest.h>

#include <random>
#include <set>

#include "branchlab/ring.hpp"

using namespace branchlab;

namespace {

std::vector<RingSpec> small_rings() {
  std::vector<RingSpec> out;
  for (unsigned r = 1; r <= 4; ++r) {
    out.push_back(RingSpec::make(RingKind::char0_unramified, 2, r));
    out.push_back(RingSpec::make(RingKind::char2_equal, 2, r));
    out.push_back(RingSpec::make(RingKind::char0_eisenstein, 2, r));
  }
  for (unsigned r = 1; r <= 3; ++r) out.push_back(RingSpec::make(RingKind::char2_equal, 4, r));
  return out;
}

std::string label(const RingSpec& R) { return R.kind_name() + " r=" + std::to_string(R.r()); }

// F_4 = {0, 1, w, w+1} coded b0 | b1 << 1 with w^2 = w + 1.
unsigned f4_mul(unsigned x, unsigned y) {
  static const unsigned table[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return table[x][y];
}

// Schoolbook product in F_q[t]/t^r on coefficient vectors.
std::uint32_t poly_mul(unsigned q, unsigned r, std::uint32_t x, std::uint32_t y) {
  const unsigned m = q == 4 ? 2 : 1;
  const std::uint32_t mask = (1u << m) - 1;
  std::vector<unsigned> out(r, 0);
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; i + j < r; ++j) {
      const unsigned a = (x >> (m * i)) & mask, b = (y >> (m * j)) & mask;
      out[i + j] ^= q == 4 ? f4_mul(a, b) : (a & b);
    }
  std::uint32_t code = 0;
  for (unsigned i = 0; i < r; ++i) code |= out[i] << (m * i);
  return code;
}

}  // namespace

TEST(Ring, ShapeValidation) {
  EXPECT_THROW(RingShape::make(RingKind::char0_unramified, 4, 2), RingError);
  EXPECT_THROW(RingShape::make(RingKind::char2_equal, 8, 2), RingError);
  EXPECT_THROW(RingShape::make(RingKind::char2_equal, 3, 2), RingError);
  EXPECT_THROW(RingShape::make(RingKind::char2_equal, 2, 0), RingError);
  EXPECT_NO_THROW(RingShape::make(RingKind::char0_unramified, 2, 500));
  EXPECT_THROW(RingSpec::make(RingKind::char2_equal, 4, 16), RingError);
  EXPECT_EQ(shape_from_name("eis2", 5).e(), 2u);
  EXPECT_EQ(shape_from_name("z2", 5).e(), 1u);
  EXPECT_EQ(shape_from_name("f4t", 5).q, 4u);
  EXPECT_THROW(shape_from_name("z3", 2), RingError);
}

TEST(Ring, UnramifiedMatchesIntegers) {
  for (unsigned r = 1; r <= 6; ++r) {
    const RingSpec R = RingSpec::make(RingKind::char0_unramified, 2, r);
    const std::uint32_t n = 1u << r;
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y) {
        EXPECT_EQ(R.add(RingElem{x}, RingElem{y}).code, (x + y) % n);
        EXPECT_EQ(R.mul(RingElem{x}, RingElem{y}).code, (x * y) % n);
      }
    EXPECT_EQ(R.from_int(-1).code, n - 1);
  }
}

TEST(Ring, EqualCharacteristicMatchesPolynomials) {
  for (unsigned q : {2u, 4u})
    for (unsigned r = 1; r <= (q == 2 ? 5u : 3u); ++r) {
      const RingSpec R = RingSpec::make(RingKind::char2_equal, q, r);
      for (std::uint32_t x = 0; x < R.size(); ++x)
        for (std::uint32_t y = 0; y < R.size(); ++y) {
          EXPECT_EQ(R.add(RingElem{x}, RingElem{y}).code, x ^ y);
          EXPECT_EQ(R.mul(RingElem{x}, RingElem{y}).code, poly_mul(q, r, x, y)) << label(R);
        }
    }
}

TEST(Ring, EisensteinMatchesPairs) {
  // a + b pi with pi^2 = 2, reduced to a mod 2^ell, b mod 2^ell'.
  for (unsigned r = 1; r <= 6; ++r) {
    const RingSpec R = RingSpec::make(RingKind::char0_eisenstein, 2, r);
    const unsigned l = R.ell(), lp = R.ell_prime();
    auto code = [&](long long a, long long b) {
      const long long A = ((a % (1LL << l)) + (1LL << l)) % (1LL << l);
      const long long B = lp == 0 ? 0 : ((b % (1LL << lp)) + (1LL << lp)) % (1LL << lp);
      return static_cast<std::uint32_t>(A | (B << l));
    };
    for (long long a = 0; a < (1LL << l); ++a)
      for (long long b = 0; b < (1LL << lp); ++b)
        for (long long c = 0; c < (1LL << l); ++c)
          for (long long d = 0; d < (1LL << lp); ++d) {
            const RingElem x{code(a, b)}, y{code(c, d)};
            EXPECT_EQ(R.add(x, y).code, code(a + c, b + d));
            EXPECT_EQ(R.mul(x, y).code, code(a * c + 2 * b * d, a * d + b * c));
          }
    EXPECT_EQ(R.val(R.pi()), r >= 2 ? 1u : r);
    EXPECT_EQ(R.mul(R.pi(), R.pi()), R.from_int(2));
  }
}

TEST(Ring, AxiomsInverseAndValuation) {
  for (const auto& R : small_rings()) {
    const auto elems = R.elements();
    ASSERT_EQ(elems.size(), R.size()) << label(R);
    std::size_t units = 0;
    for (RingElem x : elems) {
      EXPECT_EQ(R.add(x, R.neg(x)), R.zero());
      EXPECT_EQ(R.mul(x, R.one()), x);
      if (R.is_unit(x)) {
        ++units;
        EXPECT_EQ(R.mul(x, R.inv(x)), R.one());
        EXPECT_EQ(R.val(x), 0u);
      } else {
        EXPECT_THROW(R.inv(x), RingError);
      }
      for (RingElem y : elems) {
        EXPECT_EQ(R.mul(x, y), R.mul(y, x));
        // val is a valuation on o_r (truncated at r).
        EXPECT_EQ(R.val(R.mul(x, y)), std::min(R.r(), R.val(x) + R.val(y))) << label(R);
        EXPECT_GE(R.val(R.add(x, y)), std::min(R.val(x), R.val(y)));
      }
    }
    EXPECT_EQ(units, R.unit_count());
    EXPECT_EQ(R.units().size(), R.unit_count());
    for (unsigned k = 0; k <= R.r(); ++k) EXPECT_EQ(R.val(R.pi_pow(k)), k) << label(R);
  }
}

TEST(Ring, AssociativityAndDistributivitySampled) {
  std::mt19937 rng(7);
  for (const auto& R : small_rings()) {
    std::uniform_int_distribution<std::uint32_t> pick(0, R.size() - 1);
    for (int t = 0; t < 400; ++t) {
      const RingElem x{pick(rng)}, y{pick(rng)}, z{pick(rng)};
      EXPECT_EQ(R.mul(R.mul(x, y), z), R.mul(x, R.mul(y, z)));
      EXPECT_EQ(R.mul(x, R.add(y, z)), R.add(R.mul(x, y), R.mul(x, z)));
      EXPECT_EQ(R.add(R.add(x, y), z), R.add(x, R.add(y, z)));
    }
  }
}

TEST(Ring, PsiIsANondegenerateAdditiveCharacter) {
  for (const auto& R : small_rings()) {
    const auto elems = R.elements();
    const std::uint32_t L = R.psi_order();
    auto e = [&](RingElem x) {
      const RootOfUnity z = R.psi(x);
      EXPECT_EQ(z.order, L);
      return z.exponent % L;
    };
    for (RingElem x : elems)
      for (RingElem y : elems) EXPECT_EQ(e(R.add(x, y)), (e(x) + e(y)) % L) << label(R);
    EXPECT_NE(e(R.pi_pow(R.r() - 1)), 0u) << label(R);
    // x -> psi(x * .) is injective.
    for (RingElem x : elems) {
      if (x == R.zero()) continue;
      bool nontrivial = false;
      for (RingElem y : elems) nontrivial = nontrivial || e(R.mul(x, y)) != 0;
      EXPECT_TRUE(nontrivial) << label(R) << " x=" << R.format(x);
    }
  }
}

TEST(Ring, ProjectionIsAHomomorphismAndLiftIsASection) {
  for (const auto& R : small_rings()) {
    for (unsigned s = 1; s <= R.r(); ++s) {
      const RingSpec S = R.truncated(s);
      for (RingElem x : R.elements()) {
        for (RingElem y : R.elements()) {
          EXPECT_EQ(R.proj(S, R.mul(x, y)), S.mul(R.proj(S, x), R.proj(S, y)));
          EXPECT_EQ(R.proj(S, R.add(x, y)), S.add(R.proj(S, x), R.proj(S, y)));
        }
      }
      for (RingElem z : S.elements()) EXPECT_EQ(R.proj(S, R.lift_from(S, z)), z);
    }
  }
}

TEST(Ring, FormatParseRoundTrip) {
  for (const auto& R : small_rings())
    for (RingElem x : R.elements()) EXPECT_EQ(R.parse(R.format(x)), x) << label(R);
  const RingSpec F = RingSpec::make(RingKind::char2_equal, 2, 3);
  EXPECT_EQ(F.format(F.pi()), "0,1,0");
  const RingSpec E = RingSpec::make(RingKind::char0_eisenstein, 2, 3);
  EXPECT_EQ(E.format(E.pi()), "0+1*pi");
}

TEST(Ring, GeneratorsGenerate) {
  for (const auto& R : small_rings()) {
    if (R.r() == 0) continue;
    std::set<std::uint32_t> span{R.one().code};
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto c : std::vector<std::uint32_t>(span.begin(), span.end()))
        for (RingElem g : R.unit_generators()) grew = span.insert(R.mul(RingElem{c}, g).code).second || grew;
    }
    EXPECT_EQ(span.size(), R.unit_count()) << label(R);
    std::set<std::uint32_t> add{0};
    grew = true;
    while (grew) {
      grew = false;
      for (auto c : std::vector<std::uint32_t>(add.begin(), add.end()))
        for (RingElem g : R.additive_generators()) grew = add.insert(R.add(RingElem{c}, g).code).second || grew;
    }
    EXPECT_EQ(add.size(), R.size()) << label(R);
  }
}

TEST(Ring, SquareRootsOfOneByEnumeration) {
  for (const auto& R : small_rings()) {
    std::uint64_t count = 0;
    for (RingElem x : R.units()) count += R.mul(x, x) == R.one();
    EXPECT_EQ(sqrt1_count(R), count) << label(R);
    EXPECT_EQ(sqrt1_count(R.kind(), R.q(), R.r()), count) << label(R);
  }
  EXPECT_EQ(sqrt1_count(RingKind::char0_unramified, 2, 0), 1u);
}

TEST(Ring, SquareRootsOfOneBeyondEnumeration) {
  // In characteristic 2, x^2 = 1 iff x in 1 + t^ceil(s/2) o_s.
  for (unsigned s = 1; s <= 32; ++s) {
    EXPECT_EQ(sqrt1_count(RingKind::char2_equal, 4, s), std::uint64_t{1} << (2 * (s / 2))) << s;
    EXPECT_EQ(sqrt1_count(RingKind::char2_equal, 2, s), std::uint64_t{1} << (s / 2)) << s;
  }
  EXPECT_THROW(sqrt1_count(RingKind::char0_unramified, 2, 40), RingError);
}

TEST(Ring, SquaresOfUnits) {
  const RingSpec R = RingSpec::make(RingKind::char2_equal, 2, 2);
  const auto sq = squares_of_units(R);
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq.front(), R.one());
  const RingSpec Z = RingSpec::make(RingKind::char0_unramified, 2, 4);
  EXPECT_EQ(squares_of_units(Z), (std::vector<RingElem>{RingElem{1}, RingElem{9}}));
}
