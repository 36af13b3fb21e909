#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "branchlab/mat.hpp"
#include "branchlab/ring.hpp"

namespace branchlab {

/// Non-negative rational number in lowest terms.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Fraction make(std::uint64_t num, std::uint64_t den);
  /// x <= n, compared exactly.
  bool at_most(std::uint64_t n) const { return num <= static_cast<unsigned __int128>(n) * den; }
  std::string str() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// N_r(o), the form that agrees with counting square roots of 1:
/// char 2 -> q^floor(ell'/2); char 0 -> 2 q^e if 2e < ell', else q^floor(ell'/2).
std::uint64_t n_r(const RingShape& R);
/// The alternative form that puts ell' = 2e in the 2 q^e case.
std::uint64_t n_r_statement(const RingShape& R);

enum class TraceClass { unit, unit_square, unit_nonsquare, nonunit };

std::string trace_class_name(TraceClass c);
TraceClass parse_trace_class(const std::string& text);
/// Classification of trace(A) for A over o_ell' (square-ness only tested in char 2).
TraceClass classify_trace(const RingSpec& low, const Mat2& A);

struct Prediction {
  std::string kind;
  unsigned q = 2;
  unsigned r = 2;
  unsigned e = 0;  ///< 0 in equal characteristic
  TraceClass trace_class = TraceClass::unit;
  std::uint64_t det_centralizer = 0;  ///< |det C_{GL_2(o_ell')}(A)|
  bool det_centralizer_from_witness = false;
  std::uint64_t d_a = 0;              ///< |D_A|
  std::uint64_t delta_min = 1;
  std::optional<std::uint64_t> delta_max;
  /// Allowed values of Delta when the rule pins them down to a small set.
  std::vector<std::uint64_t> delta_values;
  /// All constituents have dimension dim(rho) / Delta.
  bool equal_dims = false;
  std::uint64_t n_r = 1;
  std::uint64_t n_r_statement = 1;
  bool n_r_branches_diverge = false;
  std::vector<std::string> rules;       ///< the rules that were applied
  std::vector<std::string> notes;

  bool admits(std::uint64_t delta) const;
};

/// Closed-form branching prediction. Without det_centralizer the witness
/// A = [[0,0],[1,0]] is used, whose |det C(A)| is |(o_ell'^x)^2|.
Prediction predict_branching(const RingShape& R, TraceClass trace_class,
                             std::optional<std::uint64_t> det_centralizer = std::nullopt);
/// Same, reading trace class and |det C(A)| off a matrix A over o_ell'.
Prediction predict_for_matrix(const RingSpec& R, const Mat2& A);

/// |SL_2(o_r)| / (q^2 |C_SL(psi_A)|), with |C_SL(psi_A)| = |C(A)| q^(4 ell) / (|det C(A)| q^ell).
/// Needs char 2, odd r > 2, trace(A) in pi o_ell' and A cyclic; throws std::invalid_argument otherwise.
Fraction min_dim_bound(const RingSpec& R, const Mat2& A);

std::string prediction_json(const Prediction& p, int indent = 2);

}  // namespace branchlab
