#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "branchlab/chartab.hpp"
#include "branchlab/grp.hpp"
#include "branchlab/mat.hpp"
#include "branchlab/ring.hpp"

namespace branchlab {

/// The character psi_A(I + pi^ell B) = psi(pi^ell trace(A~ B)) of M^ell.
///
/// A lives over o_ell' and A~ is its coordinate-identity lift to o_r. Values
/// are stored as exponents of zeta_L with L = psi_order() of the ring.
struct PsiA {
  RingSpec ring;
  RingSpec low;
  Mat2 A;
  Mat2 lift;

  /// Exponent of zeta_L at m, for m in M^ell (not checked).
  std::uint32_t exponent_at(const Mat2& m) const;
  std::uint32_t order() const noexcept { return ring.psi_order(); }
};

PsiA make_psiA(const RingSpec& R, const Mat2& A);

/// GL_2(o_r) and SL_2(o_r) with the congruence subgroups the Clifford
/// analysis keeps coming back to. All Subgroup values index into gl().
class CliffordContext {
 public:
  CliffordContext(GroupPtr gl, GroupPtr sl);

  const RingSpec& ring() const noexcept { return gl_->table().ring(); }
  const GroupTable& G() const noexcept { return gl_->table(); }
  const GroupPtr& gl() const noexcept { return gl_; }
  const GroupPtr& sl() const noexcept { return sl_; }

  const Subgroup& sl_subgroup() const noexcept { return sl_sub_; }
  /// M^ell, K^ell, M^ell', K^1
  const Subgroup& M_ell() const noexcept { return m_ell_; }
  const Subgroup& K_ell() const noexcept { return k_ell_; }
  const Subgroup& M_ell_prime() const noexcept { return m_ellp_; }
  const Subgroup& K_one() const noexcept { return k_one_; }
  const GroupPtr& M_ell_group() const noexcept { return m_ell_group_; }
  const GroupPtr& K_ell_group() const noexcept { return k_ell_group_; }

  /// Index of diag(d, 1) in G.
  std::uint32_t diag_index(RingElem d) const;
  bool in_sl(std::uint32_t g) const { return det_one_[g] != 0; }

  /// Table of psi_A on M^ell, indexed by position in M_ell().members.
  std::vector<std::uint32_t> psi_table(const PsiA& psi) const;
  /// {g in candidates : psi(g^-1 m g) = psi(m) for all generators m}; with
  /// `bracket` the generators are those of K^ell (so the result stabilizes
  /// psi_[A]).
  Subgroup stabilizer(const std::vector<std::uint32_t>& table, bool bracket,
                      const Subgroup& candidates) const;

  /// Standalone classified table of a subgroup of G.
  GroupPtr classed(const Subgroup& H) const;
  /// psi_A restricted to H, where H is a subgroup of M^ell given as a classified table.
  ClassFunction psi_on(const PsiA& psi, const GroupPtr& H) const;

 private:
  GroupPtr gl_;
  GroupPtr sl_;
  Subgroup sl_sub_;
  Subgroup m_ell_, k_ell_, m_ellp_, k_one_;
  GroupPtr m_ell_group_, k_ell_group_;
  std::vector<char> det_one_;
  std::vector<std::int32_t> m_pos_;  // G index -> position in M^ell, or -1
  std::vector<std::uint32_t> m_gens_, k_gens_;
};

/// A linear character on a subgroup of G: value zeta_N^exps[i] at members[i].
struct LinearChar {
  std::uint32_t N = 1;
  std::vector<std::uint32_t> members;
  std::vector<std::uint32_t> exps;

  /// Throws std::out_of_range outside the domain.
  std::uint32_t at(std::uint32_t g) const;
  ClassFunction as_class_function(const GroupTable& G, const GroupPtr& domain) const;
};

/// psi_A on a subgroup K of M^ell.
LinearChar psi_linear(const CliffordContext& ctx, const PsiA& psi, const Subgroup& K);

/// Does the linear character psi of K <= H extend to a linear character of H?
/// This holds exactly when psi is trivial on K meet [H, H].
bool extends_to(const GroupTable& G, const LinearChar& psi, const Subgroup& H);
/// One extension, built through the abelianization: start from K[H,H] and
/// adjoin the generators of H one at a time.
std::optional<LinearChar> extension(const GroupTable& G, const LinearChar& psi, const Subgroup& H);
/// Every linear character of H restricting to psi.
std::vector<LinearChar> all_linear_extensions(const GroupTable& G, const LinearChar& psi,
                                              const Subgroup& H);

/// Data attached to o_r^x / det(C_GL(psi_A)).
struct DetCosets {
  std::vector<RingElem> reps;          ///< smallest code in each coset
  std::uint64_t det_image_size = 0;    ///< |det C_GL(psi_A)|
  CentralizerInfo low_centralizer;     ///< C_{GL_2(o_ell')}(A)
  std::uint64_t formula = 0;           ///< (q-1) q^(ell'-1) / |det C_{GL_2(o_ell')}(A)|
};

/// C_GL(psi_A) by stabilizer scan, then its determinant cosets.
DetCosets det_cosets(const CliffordContext& ctx, const PsiA& psi, const Subgroup& inertia_gl);

/// h^i = {x in o_r : 2x = 0, x(x + beta~) = 0 mod pi^i}
std::vector<RingElem> h_set(const PsiA& psi, unsigned i);
/// e_x = [[1, a~^-1 x], [0, 1]]
Mat2 e_matrix(const PsiA& psi, RingElem x);
/// {e_x : x in h^i} as a subgroup of G; throws if it is not closed.
Subgroup H_group(const CliffordContext& ctx, const PsiA& psi, unsigned i);

struct InertiaData {
  PsiA psi;
  Subgroup C_gl_psi;          ///< C_GL(psi_A), stabilizer scan
  Subgroup C_gl_lift;         ///< C_GL(A~)
  Subgroup C_sl_psi;          ///< C_SL(psi_A)
  Subgroup C_sl_bracket;      ///< C_SL(psi_[A]), stabilizer scan
  Subgroup C_S_ell;           ///< (C_GL(A~) M^ell) meet SL
  Subgroup D_S_ell;           ///< (C_GL(A~) M^ell) meet K^1
  std::vector<RingElem> h_ell, h_ell_prime;
  Subgroup H_ell, H_ell_prime;
  DetCosets D_A;
  std::size_t double_coset_count = 0;  ///< |SL \ GL / C_GL(psi_A)|
  bool gl_product_formula = false;     ///< C_GL(psi_A) = C_GL(A~) M^ell'
  bool sl_product_formula = false;     ///< C_SL(psi_[A]) = C_SL(psi_A) H^ell'
  GroupPtr C_gl_psi_group;
};

/// Requires A in companion shape [[0, *], [unit, *]].
InertiaData inertia(const CliffordContext& ctx, const PsiA& psi);

/// Irr(C_GL(psi_A) | psi_A), as characters of inertia.C_gl_psi_group. Even r
/// goes through linear extensions (confirmed to exhaust the set by a degree
/// count); otherwise, or if that count comes up short, the inertia group's
/// character table is filtered.
std::vector<ClassFunction> phi_set(const CliffordContext& ctx, const InertiaData& inertia);

/// The summands Ind_{C_SL(psi_{A_d})}^{SL} phi^d for d in D_A, with
/// phi^d(X) = phi(diag(d,1)^-1 X diag(d,1)). Throws std::logic_error when
/// C_SL(psi_{A_d}) differs from diag(d,1) C_GL(psi_A) diag(d,1)^-1 meet SL.
std::vector<ClassFunction> mackey_restriction(const CliffordContext& ctx, const InertiaData& inertia,
                                              const ClassFunction& phi);

/// E_A~ = {lambda in h^ell : psi_[A] extends to C_S^ell(A~) <e_lambda>}.
std::vector<RingElem> extension_set(const CliffordContext& ctx, const InertiaData& inertia);

}  // namespace branchlab
