#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "branchlab/clifford.hpp"

using namespace branchlab;

namespace {

struct Fixture {
  RingSpec R;
  GroupPtr gl, sl;
  CliffordContext ctx;

  explicit Fixture(RingKind kind, unsigned r)
      : R(RingSpec::make(kind, 2, r)),
        gl(classify(GroupTable::gl2(R))),
        sl(classify(GroupTable::sl2(R))),
        ctx(gl, sl) {}

  RingSpec low() const { return R.truncated(R.ell_prime()); }
  Mat2 companion(long long alpha, long long beta) const {
    const RingSpec L = low();
    return companion_matrix(L, L.one(), L.from_int(alpha), L.from_int(beta));
  }
};

// Character values rounded to a comparable key.
using Key = std::vector<std::pair<long long, long long>>;

std::pair<long long, long long> rounded(std::complex<double> z) {
  return {std::llround(z.real() * 1e6), std::llround(z.imag() * 1e6)};
}

std::vector<Mat2> all_companions(const RingSpec& low) {
  std::vector<Mat2> out;
  for (auto a : low.elements())
    for (auto b : low.elements()) out.push_back(companion_matrix(low, low.one(), a, b));
  return out;
}

// Degree-one characters of H (from its character table) that restrict to psi on K.
std::set<Key> linear_extensions_by_table(const Fixture& f, const Subgroup& H, const LinearChar& psi) {
  const GroupPtr Hg = f.ctx.classed(H);
  const CharacterTable T = dixon_table(Hg);
  std::set<Key> out;
  for (const auto& chi : T.irreducibles) {
    if (chi.degree() != 1) continue;
    bool restricts = true;
    for (std::size_t i = 0; i < psi.members.size() && restricts; ++i) {
      const auto pos = Hg->table().find(f.ctx.G().code(psi.members[i]));
      const auto want = Cyclo::root(psi.N, psi.exps[i]).to_complex();
      restricts = std::abs(chi.at_element(*pos).to_complex() - want) < 1e-9;
    }
    if (!restricts) continue;
    Key v;
    for (auto h : H.members) v.push_back(rounded(chi.at_element(*Hg->table().find(f.ctx.G().code(h))).to_complex()));
    out.insert(v);
  }
  return out;
}

Key values_of(const LinearChar& c) {
  Key v;
  for (auto e : c.exps) v.push_back(rounded(Cyclo::root(c.N, e).to_complex()));
  return v;
}

}  // namespace

TEST(Clifford, PsiAIsACharacterOfMell) {
  for (auto kind : {RingKind::char0_unramified, RingKind::char2_equal, RingKind::char0_eisenstein}) {
    const Fixture f(kind, 3);
    const GroupTable& G = f.ctx.G();
    const auto& M = f.ctx.M_ell().members;
    for (const auto& A : all_companions(f.low())) {
      const PsiA psi = make_psiA(f.R, A);
      for (auto x : M)
        for (auto y : M)
          EXPECT_EQ(psi.exponent_at(G.element(G.mul(x, y))),
                    (psi.exponent_at(G.element(x)) + psi.exponent_at(G.element(y))) % psi.order());
    }
  }
}

TEST(Clifford, StabilizerMatchesFullScan) {
  const Fixture f(RingKind::char0_unramified, 3);
  const GroupTable& G = f.ctx.G();
  for (const auto& A : all_companions(f.low())) {
    const PsiA psi = make_psiA(f.R, A);
    std::vector<std::uint32_t> brute;
    for (std::uint32_t g = 0; g < G.size(); ++g) {
      bool fixes = true;
      for (auto m : f.ctx.M_ell().members)
        fixes = fixes && psi.exponent_at(G.element(G.mul(G.mul(G.inv(g), m), g))) == psi.exponent_at(G.element(m));
      if (fixes) brute.push_back(g);
    }
    EXPECT_EQ(f.ctx.stabilizer(f.ctx.psi_table(psi), false, whole_group(G)).members, brute);
  }
}

TEST(Clifford, LinearExtensionsMatchCharacterTable) {
  for (auto kind : {RingKind::char0_unramified, RingKind::char2_equal}) {
    const Fixture f(kind, 2);
    for (const auto& A : all_companions(f.low())) {
      const PsiA psi = make_psiA(f.R, A);
      const InertiaData in = inertia(f.ctx, psi);
      for (const Subgroup& H : {in.C_gl_psi, in.C_sl_bracket}) {
        const Subgroup K = intersect(f.ctx.G(), H, f.ctx.M_ell());
        const LinearChar pk = psi_linear(f.ctx, psi, K);
        const auto oracle = linear_extensions_by_table(f, H, pk);
        const auto ext = all_linear_extensions(f.ctx.G(), pk, H);
        std::set<Key> got;
        for (const auto& c : ext) got.insert(values_of(c));
        EXPECT_EQ(got, oracle);
        EXPECT_EQ(got.size(), ext.size());
        EXPECT_EQ(extends_to(f.ctx.G(), pk, H), !oracle.empty());
        EXPECT_EQ(extension(f.ctx.G(), pk, H).has_value(), !oracle.empty());
      }
    }
  }
}

TEST(Clifford, NonExtendableCharacterIsDetected) {
  // psi_A on M^1 for A = [[0,0],[1,0]] over Z/2 is moved by GL_2(Z/4), so it
  // cannot extend to a linear character of the whole group.
  const Fixture f(RingKind::char0_unramified, 2);
  const PsiA psi = make_psiA(f.R, f.companion(0, 0));
  const LinearChar p = psi_linear(f.ctx, psi, f.ctx.M_ell());
  const Subgroup G = whole_group(f.ctx.G());
  EXPECT_FALSE(extends_to(f.ctx.G(), p, G));
  EXPECT_FALSE(extension(f.ctx.G(), p, G).has_value());
  EXPECT_TRUE(linear_extensions_by_table(f, G, p).empty());
}

TEST(Clifford, PhiSetMatchesFilteredCharacterTable) {
  for (auto kind : {RingKind::char0_unramified, RingKind::char2_equal})
    for (unsigned r : {2u, 3u}) {
      const Fixture f(kind, r);
      const GroupPtr M = f.ctx.M_ell_group();
      for (const auto& A : all_companions(f.low())) {
        const PsiA psi = make_psiA(f.R, A);
        const InertiaData in = inertia(f.ctx, psi);
        const auto phis = phi_set(f.ctx, in);
        const CharacterTable T = dixon_table(in.C_gl_psi_group);
        std::size_t expected = 0;
        for (const auto& chi : T.irreducibles) {
          if (inner(restrict_to(chi, M), f.ctx.psi_on(psi, M)) == 0) continue;
          ++expected;
          std::size_t hits = 0;
          for (const auto& phi : phis) hits += phi == chi;
          EXPECT_EQ(hits, 1u);
        }
        EXPECT_EQ(phis.size(), expected);
        // Clifford: sum of dim(phi) <Res phi, psi> over Irr(I | psi) is [I : M^ell].
        long long total = 0;
        for (const auto& phi : phis) total += phi.degree() * inner(restrict_to(phi, M), f.ctx.psi_on(psi, M));
        EXPECT_EQ(static_cast<std::uint64_t>(total), in.C_gl_psi.size() / f.ctx.M_ell().size());
      }
    }
}

TEST(Clifford, DeterminantCosetsByDirectCount) {
  const Fixture f(RingKind::char2_equal, 4);
  for (const auto& A : all_companions(f.low())) {
    const PsiA psi = make_psiA(f.R, A);
    const Subgroup C = f.ctx.stabilizer(f.ctx.psi_table(psi), false, whole_group(f.ctx.G()));
    std::set<std::uint32_t> dets;
    for (auto g : C.members) dets.insert(det(f.R, f.ctx.G().element(g)).code);
    const DetCosets d = det_cosets(f.ctx, psi, C);
    EXPECT_EQ(d.det_image_size, dets.size());
    EXPECT_EQ(d.reps.size(), f.R.unit_count() / dets.size());
    EXPECT_EQ(d.reps.size(), d.formula);
  }
}

TEST(Clifford, InertiaStructure) {
  for (auto kind : {RingKind::char0_unramified, RingKind::char2_equal})
    for (unsigned r : {2u, 3u, 4u}) {
      const Fixture f(kind, r);
      for (const auto& A : all_companions(f.low())) {
        const InertiaData in = inertia(f.ctx, make_psiA(f.R, A));
        EXPECT_TRUE(in.gl_product_formula);
        EXPECT_TRUE(in.sl_product_formula);
        EXPECT_EQ(in.double_coset_count, in.D_A.reps.size());
        EXPECT_TRUE(is_normalized_by(f.ctx.G(), in.C_sl_psi, in.C_sl_bracket.generators));
      }
    }
  const Fixture f(RingKind::char0_unramified, 2);
  EXPECT_THROW(inertia(f.ctx, make_psiA(f.R, mat_identity(f.low()))), std::invalid_argument);
}

TEST(Clifford, HSetFollowsItsDefinition) {
  const Fixture f(RingKind::char2_equal, 4);
  const PsiA psi = make_psiA(f.R, f.companion(1, 1));
  for (unsigned i : {f.R.ell_prime(), f.R.ell()}) {
    const auto h = h_set(psi, i);
    std::size_t count = 0;
    for (auto x : f.R.elements()) {
      const RingElem v = f.R.mul(x, f.R.add(x, psi.lift.d));
      count += f.R.val(v) >= i;
    }
    EXPECT_EQ(h.size(), count);
    EXPECT_TRUE(is_closed(f.ctx.G(), H_group(f.ctx, psi, i)));
  }
}

TEST(Clifford, MackeyIdentityAtLevelTwo) {
  for (auto kind : {RingKind::char0_unramified, RingKind::char2_equal, RingKind::char0_eisenstein}) {
    const Fixture f(kind, 2);
    for (const auto& A : all_companions(f.low())) {
      const InertiaData in = inertia(f.ctx, make_psiA(f.R, A));
      for (const auto& phi : phi_set(f.ctx, in)) {
        const ClassFunction lhs = restrict_to(induce(phi, f.gl), f.sl);
        ClassFunction rhs = ClassFunction::zero(f.sl);
        const auto parts = mackey_restriction(f.ctx, in, phi);
        EXPECT_EQ(parts.size(), in.D_A.reps.size());
        for (const auto& p : parts) rhs += p;
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(Clifford, ExtensionSetMatchesCharacterTable) {
  const Fixture f(RingKind::char2_equal, 2);
  const GroupTable& G = f.ctx.G();
  for (const auto& A : all_companions(f.low())) {
    const InertiaData in = inertia(f.ctx, make_psiA(f.R, A));
    const LinearChar psi = psi_linear(f.ctx, in.psi, f.ctx.K_ell());
    std::vector<RingElem> oracle;
    for (RingElem lambda : in.h_ell) {
      std::vector<std::uint32_t> gens = in.C_S_ell.generators;
      gens.push_back(G.index_of(e_matrix(in.psi, lambda)));
      if (!linear_extensions_by_table(f, subgroup_closure(G, gens), psi).empty()) oracle.push_back(lambda);
    }
    EXPECT_EQ(extension_set(f.ctx, in), oracle);
  }
}
