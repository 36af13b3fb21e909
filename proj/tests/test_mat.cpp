#include <gtest/gtest.h>

#include <random>

#include "branchlab/mat.hpp"

using namespace branchlab;

namespace {

std::vector<RingSpec> rings() {
  return {RingSpec::make(RingKind::char0_unramified, 2, 1), RingSpec::make(RingKind::char0_unramified, 2, 2),
          RingSpec::make(RingKind::char2_equal, 2, 2), RingSpec::make(RingKind::char0_eisenstein, 2, 2),
          RingSpec::make(RingKind::char2_equal, 4, 1)};
}

std::vector<Mat2> all_matrices(const RingSpec& R) {
  std::vector<Mat2> out;
  const auto e = R.elements();
  for (auto a : e)
    for (auto b : e)
      for (auto c : e)
        for (auto d : e) out.push_back(Mat2{a, b, c, d});
  return out;
}

// Straight from the definition: some v with {v, Av} a basis of o^2.
bool cyclic_by_definition(const RingSpec& R, const Mat2& A) {
  for (auto x : R.elements())
    for (auto y : R.elements()) {
      const Vec2 w = mat_apply(R, A, Vec2{x, y});
      if (R.is_unit(R.sub(R.mul(x, w.y), R.mul(y, w.x)))) return true;
    }
  return false;
}

}  // namespace

TEST(Mat, DeterminantIsMultiplicativeAndInverseWorks) {
  std::mt19937 rng(3);
  for (const auto& R : rings()) {
    const auto ms = all_matrices(R);
    std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
    for (int t = 0; t < 300; ++t) {
      const Mat2 x = ms[pick(rng)], y = ms[pick(rng)];
      EXPECT_EQ(det(R, mat_mul(R, x, y)), R.mul(det(R, x), det(R, y)));
      EXPECT_EQ(trace(R, mat_add(R, x, y)), R.add(trace(R, x), trace(R, y)));
      if (is_invertible(R, x)) {
        EXPECT_EQ(mat_mul(R, x, mat_inv(R, x)), mat_identity(R));
      } else {
        EXPECT_THROW(mat_inv(R, x), RingError);
      }
    }
  }
}

TEST(Mat, PackUnpackAndTextRoundTrip) {
  for (const auto& R : rings())
    for (const auto& m : all_matrices(R)) {
      EXPECT_EQ(unpack(R, pack(R, m)), m);
      EXPECT_EQ(parse_mat(R, format_mat(R, m)), m);
    }
}

TEST(Mat, CyclicMatchesDefinition) {
  for (const auto& R : rings())
    for (const auto& m : all_matrices(R)) EXPECT_EQ(is_cyclic(R, m), cyclic_by_definition(R, m));
  const RingSpec R = RingSpec::make(RingKind::char0_unramified, 2, 2);
  EXPECT_FALSE(is_cyclic(R, mat_identity(R)));
  EXPECT_TRUE(is_cyclic(R, Mat2{R.zero(), R.zero(), R.one(), R.zero()}));
}

TEST(Mat, CompanionFormConjugates) {
  for (const auto& R : rings())
    for (const auto& m : all_matrices(R)) {
      if (!is_cyclic(R, m)) {
        EXPECT_THROW(companion_form(R, m), RingError);
        continue;
      }
      const CompanionForm f = companion_form(R, m);
      EXPECT_EQ(f.a, R.one());
      EXPECT_EQ(f.alpha, R.neg(det(R, m)));
      EXPECT_EQ(f.beta, trace(R, m));
      const Mat2 c = companion_matrix(R, f.a, f.alpha, f.beta);
      EXPECT_EQ(mat_mul(R, mat_mul(R, f.conjugator, m), mat_inv(R, f.conjugator)), c);
    }
}

TEST(Mat, CentralizerAgreesWithScan) {
  for (const auto& R : rings())
    for (const auto& m : all_matrices(R)) {
      const auto fast = centralizer_units(R, m);
      const auto slow = centralizer_units_by_scan(R, m);
      EXPECT_EQ(fast.size, slow.size);
      EXPECT_EQ(fast.det_image_size, slow.det_image_size);
    }
}

TEST(Mat, ConjugateByDiag) {
  const RingSpec hi = RingSpec::make(RingKind::char0_unramified, 2, 4);
  const RingSpec lo = hi.truncated(2);
  const Mat2 A{lo.zero(), lo.from_int(1), lo.one(), lo.from_int(3)};
  const RingElem d = hi.from_int(7);
  const Mat2 D = mat_diag(lo.from_int(3), lo.one());
  EXPECT_EQ(conjugate_by_diag(lo, A, hi, d), mat_mul(lo, mat_mul(lo, D, A), mat_inv(lo, D)));
}

TEST(Mat, ProjectionAndLift) {
  const RingSpec hi = RingSpec::make(RingKind::char2_equal, 2, 3);
  const RingSpec lo = hi.truncated(1);
  for (const auto& m : all_matrices(lo)) EXPECT_EQ(mat_proj(hi, lo, mat_lift(lo, hi, m)), m);
}
