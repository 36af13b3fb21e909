#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "branchlab/chartab.hpp"
#include "branchlab/clifford.hpp"
#include "branchlab/predict.hpp"
#include "branchlab/ring.hpp"

namespace branchlab {

/// Largest |GL_2(o_r)| that verify will enumerate unless told otherwise.
inline constexpr std::uint64_t kVerifyBudget = std::uint64_t{1} << 16;

/// |GL_2(o_r)| from the closed form, without building the ring.
std::uint64_t gl2_order(const RingShape& shape);

struct VerifySpec {
  RingKind kind = RingKind::char2_equal;
  unsigned q = 2;
  unsigned r = 2;
  unsigned jobs = 1;
  std::uint64_t budget = kVerifyBudget;
  std::uint64_t seed = 0;
  /// Run the Mackey path; defaults to r <= 3.
  std::optional<bool> mackey;
};

/// An irreducible character of GL_2 together with the A's whose psi_A occur in
/// its restriction to M^ell.
struct SupportInfo {
  std::size_t rho = 0;
  std::vector<Mat2> support;  ///< over o_ell'
  std::vector<long long> multiplicities;
  bool regular = false;
};

/// psi_A on M^ell for every A in M_2(o_ell'), in code order of A.
struct PsiTable {
  std::vector<Mat2> matrices;
  CharacterTable table;
};

PsiTable psi_characters(const CliffordContext& ctx);

/// Supports of all irreducibles of GL_2; regular ones are those whose
/// support consists of cyclic matrices only.
std::vector<SupportInfo> find_regular(const CliffordContext& ctx, const CharacterTable& gl_table,
                                      const PsiTable& psis);

struct CompanionTriple {
  RingElem a, alpha, beta;
  friend auto operator<=>(const CompanionTriple&, const CompanionTriple&) = default;
};

struct RhoRecord {
  std::size_t rho = 0;
  long long dim = 0;
  CompanionTriple orbit;
  TraceClass trace_class = TraceClass::unit;
  std::uint64_t d_a = 0;
  std::uint64_t delta = 0;
  std::vector<long long> constituent_dims;
  bool multiplicity_free = false;
  bool dims_equal = false;
  Prediction prediction;
  std::optional<bool> mackey;  ///< exact agreement of both paths, when run
  std::string outcome;         ///< "irreducible" or "two-halves" where only observed
  bool pass = false;
};

struct OrbitRecord {
  CompanionTriple orbit;
  Mat2 A;
  TraceClass trace_class = TraceClass::unit;
  std::size_t orbit_size = 0;
  std::size_t rho_count = 0;
  std::uint64_t d_a = 0;
  std::uint64_t d_a_formula = 0;
  std::size_t double_cosets = 0;
  std::uint64_t inertia_gl = 0;     ///< |C_GL(psi_A)|
  std::uint64_t inertia_sl = 0;     ///< |C_SL(psi_A)|
  std::uint64_t inertia_bracket = 0;///< |C_SL(psi_[A])|
  std::vector<long long> phi_dims;
  std::optional<std::string> min_dim_bound;
  std::optional<long long> min_dim_observed;
};

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string detail;  ///< first failure, or a summary
  bool pass() const noexcept { return failed == 0 && passed > 0; }
};

struct BranchReport {
  std::string kind;
  unsigned q = 2;
  unsigned r = 2;
  std::uint64_t gl_order = 0;
  std::uint64_t sl_order = 0;
  std::size_t gl_classes = 0;
  std::size_t sl_classes = 0;
  std::size_t irreducibles = 0;
  std::vector<RhoRecord> records;
  std::vector<OrbitRecord> orbits;
  std::vector<CheckResult> checks;
  std::uint64_t max_delta = 0;
  std::uint64_t n_r = 0;
  std::optional<std::uint64_t> n_r_witness_delta;
  bool pass = false;
  double seconds = 0.0;
  std::vector<std::pair<std::string, double>> phases;

  const CheckResult* check(const std::string& name) const;
};

/// Throws BudgetExceeded when |GL_2| exceeds spec.budget, std::invalid_argument
/// for r < 2 and other unusable specs.
BranchReport verify_branching(const VerifySpec& spec);

std::string report_json(const BranchReport& report, bool with_timing = true, int indent = 2);

}  // namespace branchlab
