#include <gtest/gtest.h>

#include <json.hpp>

#include "branchlab/predict.hpp"

using namespace branchlab;

namespace {

RingShape shape(const char* kind, unsigned r) { return shape_from_name(kind, r); }

}  // namespace

TEST(Predict, NrMatchesSquareRootsOfOne) {
  const std::pair<const char*, unsigned> families[] = {{"z2", 14}, {"f2t", 14}, {"f4t", 7}, {"eis2", 12}};
  for (const auto& [kind, max_level] : families)
    for (unsigned lp = 1; lp <= max_level; ++lp) {
      const RingShape s = shape(kind, 2 * lp);
      const RingSpec low = RingSpec::make(s.kind, s.q, lp);
      std::uint64_t brute = 0;
      for (RingElem x : low.units()) brute += low.mul(x, x) == low.one();
      EXPECT_EQ(n_r(s), brute) << kind << " ell'=" << lp;
      EXPECT_EQ(n_r(shape(kind, 2 * lp + 1)), brute) << kind << " ell'=" << lp;
    }
}

TEST(Predict, StatementBranchDivergesOnlyAtTheBoundary) {
  // ell' = 2e: Z/4 has two square roots of 1; the displayed formula says 2q^e = 4.
  EXPECT_EQ(n_r(shape("z2", 4)), 2u);
  EXPECT_EQ(n_r_statement(shape("z2", 4)), 4u);
  EXPECT_EQ(n_r(shape("eis2", 8)), 4u);
  EXPECT_EQ(n_r_statement(shape("eis2", 8)), 8u);
  for (unsigned r = 2; r <= 40; ++r) {
    const RingShape z = shape("z2", r), e = shape("eis2", r), t = shape("f2t", r);
    EXPECT_EQ(n_r(z) != n_r_statement(z), z.ell_prime() == 2) << r;
    EXPECT_EQ(n_r(e) != n_r_statement(e), e.ell_prime() == 4) << r;
    EXPECT_EQ(n_r(t), n_r_statement(t));
  }
  EXPECT_TRUE(predict_branching(shape("z2", 4), TraceClass::nonunit).n_r_branches_diverge);
}

TEST(Predict, LargeLevelsNeedNoEnumeration) {
  const Prediction p = predict_branching(shape("z2", 50), TraceClass::nonunit);
  EXPECT_EQ(p.n_r, 4u);
  EXPECT_EQ(p.d_a, 4u);
  EXPECT_EQ(p.delta_values, (std::vector<std::uint64_t>{4}));
  EXPECT_TRUE(p.equal_dims);
  const Prediction u = predict_branching(shape("z2", 50), TraceClass::unit);
  EXPECT_EQ(u.delta_values, (std::vector<std::uint64_t>{1}));
  const Prediction c = predict_branching(shape("f2t", 50), TraceClass::nonunit);
  EXPECT_EQ(c.n_r, std::uint64_t{1} << 12);
  EXPECT_EQ(*c.delta_max, 4 * c.d_a);
}

TEST(Predict, EqualCharacteristicRules) {
  const Prediction odd = predict_branching(shape("f2t", 3), TraceClass::unit_square);
  EXPECT_EQ(odd.delta_values, (std::vector<std::uint64_t>{1}));
  const Prediction sq = predict_branching(shape("f2t", 4), TraceClass::unit_square);
  EXPECT_EQ(sq.delta_values, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_TRUE(sq.equal_dims);
  EXPECT_TRUE(sq.admits(2));
  EXPECT_FALSE(sq.admits(3));
  const Prediction ns = predict_branching(shape("f2t", 4), TraceClass::unit_nonsquare);
  EXPECT_EQ(ns.delta_values, (std::vector<std::uint64_t>{1}));
  const Prediction unknown = predict_branching(shape("f2t", 4), TraceClass::unit);
  EXPECT_EQ(unknown.delta_values, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_FALSE(unknown.notes.empty());

  const Prediction ev = predict_branching(shape("f2t", 4), TraceClass::nonunit, 1);
  EXPECT_EQ(ev.d_a, 2u);
  EXPECT_EQ(ev.delta_min, 2u);
  EXPECT_EQ(*ev.delta_max, 8u);
  const Prediction od = predict_branching(shape("f4t", 3), TraceClass::nonunit, 3);
  EXPECT_EQ(od.d_a, 1u);
  EXPECT_EQ(*od.delta_max, 64u);
  EXPECT_FALSE(od.admits(65));
}

TEST(Predict, MixedCharacteristicBelowThreshold) {
  const Prediction p = predict_branching(shape("z2", 5), TraceClass::unit);
  EXPECT_EQ(p.delta_min, 1u);
  EXPECT_FALSE(p.delta_max.has_value());
  EXPECT_TRUE(p.delta_values.empty());
  EXPECT_TRUE(p.admits(7));
  const Prediction q = predict_branching(shape("z2", 6), TraceClass::unit);
  EXPECT_EQ(q.delta_values, (std::vector<std::uint64_t>{1}));
  const Prediction e = predict_branching(shape("eis2", 9), TraceClass::nonunit);
  EXPECT_TRUE(e.delta_values.empty());
  const Prediction e10 = predict_branching(shape("eis2", 10), TraceClass::nonunit);
  EXPECT_EQ(e10.delta_values, (std::vector<std::uint64_t>{e10.d_a}));
}

TEST(Predict, RejectsBadInput) {
  EXPECT_THROW(predict_branching(shape("z2", 1), TraceClass::unit), std::invalid_argument);
  EXPECT_THROW(predict_branching(shape("z2", 6), TraceClass::nonunit, 3), std::invalid_argument);
  EXPECT_THROW(predict_branching(shape("z2", 6), TraceClass::nonunit, 0), std::invalid_argument);
  EXPECT_THROW(parse_trace_class("sometimes"), std::invalid_argument);
  EXPECT_EQ(parse_trace_class("unit-nonsquare"), TraceClass::unit_nonsquare);
}

TEST(Predict, TraceClassOfMatrices) {
  const RingSpec low = RingSpec::make(RingKind::char2_equal, 2, 2);
  const RingElem t = low.pi();
  auto A = [&](RingElem beta) { return companion_matrix(low, low.one(), low.zero(), beta); };
  EXPECT_EQ(classify_trace(low, A(low.zero())), TraceClass::nonunit);
  EXPECT_EQ(classify_trace(low, A(low.one())), TraceClass::unit_square);
  EXPECT_EQ(classify_trace(low, A(low.add(low.one(), t))), TraceClass::unit_nonsquare);
  const RingSpec z = RingSpec::make(RingKind::char0_unramified, 2, 2);
  EXPECT_EQ(classify_trace(z, companion_matrix(z, z.one(), z.zero(), z.from_int(3))), TraceClass::unit);
}

TEST(Predict, ForMatrixReadsTheCentralizer) {
  const RingSpec R = RingSpec::make(RingKind::char2_equal, 2, 4);
  const RingSpec low = R.truncated(2);
  const Prediction w = predict_for_matrix(R, companion_matrix(low, low.one(), low.zero(), low.zero()));
  EXPECT_EQ(w.d_a, 2u);
  EXPECT_FALSE(w.det_centralizer_from_witness);
  const Prediction by_witness = predict_branching(R.shape(), TraceClass::nonunit);
  EXPECT_EQ(by_witness.d_a, w.d_a);
  EXPECT_TRUE(by_witness.det_centralizer_from_witness);
}

TEST(Predict, MinDimBound) {
  const RingSpec R = RingSpec::make(RingKind::char2_equal, 2, 3);
  const RingSpec low = R.truncated(1);
  const Mat2 A = companion_matrix(low, low.one(), low.zero(), low.zero());
  // |SL_2(o_3)| = 384, |C(A)| = 2, |det C(A)| = 1: 384 * 1 * 4 / (4 * 2 * 256) = 3/4.
  EXPECT_EQ(min_dim_bound(R, A), Fraction::make(3, 4));
  EXPECT_TRUE(min_dim_bound(R, A).at_most(1));
  EXPECT_THROW(min_dim_bound(R, companion_matrix(low, low.one(), low.zero(), low.one())), std::invalid_argument);
  EXPECT_THROW(min_dim_bound(RingSpec::make(RingKind::char2_equal, 2, 4), A), std::invalid_argument);
  EXPECT_THROW(min_dim_bound(RingSpec::make(RingKind::char0_unramified, 2, 3), A), std::invalid_argument);
}

TEST(Predict, FractionArithmetic) {
  EXPECT_EQ(Fraction::make(6, 8), (Fraction{3, 4}));
  EXPECT_EQ(Fraction::make(0, 5), (Fraction{0, 1}));
  EXPECT_EQ(Fraction::make(9, 3).str(), "3");
  EXPECT_EQ(Fraction::make(3, 4).str(), "3/4");
  EXPECT_THROW(Fraction::make(1, 0), std::domain_error);
  EXPECT_FALSE(Fraction::make(5, 2).at_most(2));
  EXPECT_TRUE(Fraction::make(5, 2).at_most(3));
}

TEST(Predict, JsonShape) {
  const auto j = nlohmann::json::parse(prediction_json(predict_branching(shape("f2t", 4), TraceClass::nonunit)));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["kind"], "f2t");
  EXPECT_TRUE(j["e"].is_null());
  EXPECT_EQ(j["n_r"], 2);
  EXPECT_EQ(j["delta_min"], 2);
  EXPECT_EQ(j["delta_max"], 8);
  EXPECT_TRUE(j["det_centralizer_from_witness"].get<bool>());
  const auto z = nlohmann::json::parse(prediction_json(predict_branching(shape("z2", 5), TraceClass::unit)));
  EXPECT_EQ(z["e"], 1);
  EXPECT_TRUE(z["delta_max"].is_null());
}
