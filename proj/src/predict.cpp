#include "branchlab/predict.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "branchlab/grp.hpp"

namespace branchlab {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned k) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < k; ++i) out *= b;
  return out;
}

std::uint64_t unit_count_at(const RingShape& R, unsigned level) {
  if (level == 0) return 1;
  return (R.q - 1) * ipow(R.q, level - 1);
}

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Fraction Fraction::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::domain_error("Fraction: zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}

std::string Fraction::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t n_r(const RingShape& R) {
  const unsigned lp = R.ell_prime();
  if (R.is_char2()) return ipow(R.q, lp / 2);
  const unsigned e = R.e();
  return 2 * e < lp ? 2 * ipow(R.q, e) : ipow(R.q, lp / 2);
}

std::uint64_t n_r_statement(const RingShape& R) {
  const unsigned lp = R.ell_prime();
  if (R.is_char2()) return ipow(R.q, lp / 2);
  const unsigned e = R.e();
  return lp >= 2 * e ? 2 * ipow(R.q, e) : ipow(R.q, lp / 2);
}

std::string trace_class_name(TraceClass c) {
  switch (c) {
    case TraceClass::unit: return "unit";
    case TraceClass::unit_square: return "unit-square";
    case TraceClass::unit_nonsquare: return "unit-nonsquare";
    case TraceClass::nonunit: return "nonunit";
  }
  return "?";
}

TraceClass parse_trace_class(const std::string& text) {
  if (text == "unit") return TraceClass::unit;
  if (text == "unit-square") return TraceClass::unit_square;
  if (text == "unit-nonsquare") return TraceClass::unit_nonsquare;
  if (text == "nonunit") return TraceClass::nonunit;
  throw std::invalid_argument("unknown trace class '" + text + "'");
}

TraceClass classify_trace(const RingSpec& low, const Mat2& A) {
  const RingElem t = trace(low, A);
  if (!low.is_unit(t)) return TraceClass::nonunit;
  if (!low.is_char2()) return TraceClass::unit;
  const auto sq = squares_of_units(low);
  return std::binary_search(sq.begin(), sq.end(), t) ? TraceClass::unit_square : TraceClass::unit_nonsquare;
}

bool Prediction::admits(std::uint64_t delta) const {
  if (!delta_values.empty()) return std::find(delta_values.begin(), delta_values.end(), delta) != delta_values.end();
  if (delta < delta_min) return false;
  return !delta_max || delta <= *delta_max;
}

Prediction predict_branching(const RingShape& R, TraceClass tc, std::optional<std::uint64_t> det_centralizer) {
  if (R.r < 2) throw std::invalid_argument("predict_branching: needs r >= 2");
  Prediction p;
  p.kind = R.kind_name();
  p.q = R.q;
  p.r = R.r;
  p.e = R.e();
  p.trace_class = tc;
  p.n_r = n_r(R);
  p.n_r_statement = n_r_statement(R);
  p.n_r_branches_diverge = p.n_r != p.n_r_statement;
  if (p.n_r_branches_diverge)
    p.notes.push_back("N_r: the closed form's case split at ell' = 2e differs between its two derivations; "
                      "reporting the value that matches the count of square roots of 1");

  const std::uint64_t units_low = unit_count_at(R, R.ell_prime());
  const bool unit_trace = tc != TraceClass::nonunit;
  if (det_centralizer) {
    if (*det_centralizer == 0 || units_low % *det_centralizer != 0)
      throw std::invalid_argument("predict_branching: |det C(A)| must divide |o_ell'^x| = " + std::to_string(units_low));
    p.det_centralizer = *det_centralizer;
    if (unit_trace && *det_centralizer != units_low)
      p.notes.push_back("unit trace forces |det C(A)| = |o_ell'^x|; the supplied value disagrees");
  } else if (unit_trace) {
    p.det_centralizer = units_low;
  } else {
    // A = [[0,0],[1,0]]: det(xI + yA) = x^2, so det C(A) is the group of unit squares.
    p.det_centralizer = units_low / p.n_r;
    p.det_centralizer_from_witness = true;
  }
  p.d_a = units_low / p.det_centralizer;

  const unsigned r = R.r;
  if (!R.is_char2()) {
    const unsigned e = R.e();
    if (r >= 4 * e + 2) {
      if (unit_trace) {
        p.rules.push_back("char0/r>=4e+2/unit-trace: irreducible");
        p.delta_values = {1};
        p.delta_min = 1;
        p.delta_max = 1;
      } else {
        p.rules.push_back("char0/r>=4e+2/nonunit-trace: |D_A| constituents of equal dimension");
        p.delta_values = {p.d_a};
        p.delta_min = p.d_a;
        p.delta_max = p.d_a;
      }
      p.equal_dims = true;
    } else {
      p.rules.push_back("any/lower-bound: Delta >= |D_A|");
      p.delta_min = p.d_a;
      p.notes.push_back("r < 4e+2: only the lower bound Delta >= |D_A| is available");
    }
    return p;
  }

  if (unit_trace) {
    if (r % 2 == 1) {
      p.rules.push_back("char2/odd-r/unit-trace: irreducible");
      p.delta_values = {1};
    } else if (tc == TraceClass::unit_nonsquare) {
      p.rules.push_back("char2/even-r/nonsquare-unit-trace: irreducible");
      p.delta_values = {1};
    } else {
      p.rules.push_back("char2/even-r/square-unit-trace: irreducible or two halves");
      p.delta_values = {1, 2};
      if (tc == TraceClass::unit) p.notes.push_back("square class of the trace not given; allowing both cases");
    }
    p.delta_min = p.delta_values.front();
    p.delta_max = p.delta_values.back();
    p.equal_dims = true;
    return p;
  }

  p.delta_min = p.d_a;
  if (r % 2 == 0) {
    p.rules.push_back("char2/even-r/nonunit-trace: |D_A| <= Delta <= 4|D_A|");
    p.delta_max = 4 * p.d_a;
  } else {
    p.rules.push_back("char2/odd-r/nonunit-trace: |D_A| <= Delta <= q^3|D_A|");
    p.delta_max = ipow(R.q, 3) * p.d_a;
  }
  return p;
}

Prediction predict_for_matrix(const RingSpec& R, const Mat2& A) {
  const RingSpec low = R.truncated(R.ell_prime());
  return predict_branching(R.shape(), classify_trace(low, A), centralizer_units(low, A).det_image_size);
}

Fraction min_dim_bound(const RingSpec& R, const Mat2& A) {
  if (!R.is_char2() || R.r() <= 2 || R.r() % 2 == 0)
    throw std::invalid_argument("min_dim_bound: needs equal characteristic and odd r > 2");
  const RingSpec low = R.truncated(R.ell_prime());
  if (low.is_unit(trace(low, A))) throw std::invalid_argument("min_dim_bound: trace(A) must lie in pi o");
  if (!is_cyclic(low, A)) throw std::invalid_argument("min_dim_bound: A must be cyclic");
  const CentralizerInfo c = centralizer_units(low, A);
  const std::uint64_t q = R.q();
  const unsigned l = R.ell();
  // |SL_2| |det C| q^l / (q^2 |C| q^(4l))
  u128 num = static_cast<u128>(sl2_order(R)) * c.det_image_size * ipow(q, l);
  u128 den = static_cast<u128>(q * q) * c.size * ipow(q, 4 * l);
  const u128 g = gcd128(num, den);
  num /= g;
  den /= g;
  if (num > UINT64_MAX || den > UINT64_MAX) throw std::overflow_error("min_dim_bound: value overflows");
  return Fraction{static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den)};
}

std::string prediction_json(const Prediction& p, int indent) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["kind"] = p.kind;
  j["q"] = p.q;
  j["r"] = p.r;
  j["e"] = p.e == 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(p.e);
  j["trace_class"] = trace_class_name(p.trace_class);
  j["det_centralizer"] = p.det_centralizer;
  j["det_centralizer_from_witness"] = p.det_centralizer_from_witness;
  j["d_a"] = p.d_a;
  j["delta_min"] = p.delta_min;
  j["delta_max"] = p.delta_max ? nlohmann::ordered_json(*p.delta_max) : nlohmann::ordered_json(nullptr);
  j["delta_values"] = p.delta_values;
  j["equal_dims"] = p.equal_dims;
  j["n_r"] = p.n_r;
  j["n_r_statement_branch"] = p.n_r_statement;
  j["n_r_branches_diverge"] = p.n_r_branches_diverge;
  j["rules"] = p.rules;
  j["notes"] = p.notes;
  return j.dump(indent);
}

}  // namespace branchlab
