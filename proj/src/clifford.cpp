#include "branchlab/clifford.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace branchlab {

// ------------------------------------------------------------------ psi_A

std::uint32_t PsiA::exponent_at(const Mat2& m) const {
  const Mat2 x = mat_sub(ring, m, mat_identity(ring));
  return ring.psi(trace(ring, mat_mul(ring, lift, x))).exponent % order();
}

PsiA make_psiA(const RingSpec& R, const Mat2& A) {
  PsiA p{R, R.truncated(R.ell_prime()), A, Mat2{}};
  p.lift = mat_lift(p.low, R, A);
  return p;
}

// --------------------------------------------------------------- context

CliffordContext::CliffordContext(GroupPtr gl, GroupPtr sl) : gl_(std::move(gl)), sl_(std::move(sl)) {
  const GroupTable& T = G();
  const RingSpec& R = ring();
  if (!(sl_->table().ring() == R)) throw std::invalid_argument("CliffordContext: rings differ");
  det_one_.assign(T.size(), 0);
  std::vector<std::uint32_t> sl_members;
  for (std::uint32_t g = 0; g < T.size(); ++g)
    if (det(R, T.element(g)) == R.one()) {
      det_one_[g] = 1;
      sl_members.push_back(g);
    }
  sl_sub_ = subgroup_from_members(T, std::move(sl_members));
  m_ell_ = congruence_subgroup(T, R.ell());
  m_ellp_ = congruence_subgroup(T, R.ell_prime());
  k_ell_ = intersect(T, m_ell_, sl_sub_);
  k_one_ = intersect(T, congruence_subgroup(T, 1), sl_sub_);
  m_ell_group_ = classed(m_ell_);
  k_ell_group_ = classed(k_ell_);
  m_pos_.assign(T.size(), -1);
  for (std::size_t i = 0; i < m_ell_.members.size(); ++i)
    m_pos_[m_ell_.members[i]] = static_cast<std::int32_t>(i);
  m_gens_ = m_ell_.generators;
  k_gens_ = k_ell_.generators;
}

std::uint32_t CliffordContext::diag_index(RingElem d) const {
  return G().index_of(mat_diag(d, ring().one()));
}

std::vector<std::uint32_t> CliffordContext::psi_table(const PsiA& psi) const {
  std::vector<std::uint32_t> t(m_ell_.members.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = psi.exponent_at(G().element(m_ell_.members[i]));
  return t;
}

Subgroup CliffordContext::stabilizer(const std::vector<std::uint32_t>& table, bool bracket,
                                     const Subgroup& candidates) const {
  const GroupTable& T = G();
  const auto& gens = bracket ? k_gens_ : m_gens_;
  std::vector<std::uint32_t> out;
  for (std::uint32_t g : candidates.members) {
    const std::uint32_t gi = T.inv(g);
    bool fixes = true;
    for (std::uint32_t m : gens) {
      const std::uint32_t c = T.mul(T.mul(gi, m), g);
      if (table[m_pos_[c]] != table[m_pos_[m]]) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.push_back(g);
  }
  return subgroup_from_members(T, std::move(out));
}

GroupPtr CliffordContext::classed(const Subgroup& H) const { return classify(subgroup_table(G(), H)); }

ClassFunction CliffordContext::psi_on(const PsiA& psi, const GroupPtr& H) const {
  std::vector<Cyclo> v;
  v.reserve(H->class_count());
  for (std::size_t k = 0; k < H->class_count(); ++k)
    v.push_back(Cyclo::root(psi.order(), psi.exponent_at(H->table().element(H->rep(k)))));
  return ClassFunction(H, std::move(v));
}

// -------------------------------------------------------- linear characters

std::uint32_t LinearChar::at(std::uint32_t g) const {
  const auto it = std::lower_bound(members.begin(), members.end(), g);
  if (it == members.end() || *it != g) throw std::out_of_range("LinearChar: element outside the domain");
  return exps[static_cast<std::size_t>(it - members.begin())];
}

ClassFunction LinearChar::as_class_function(const GroupTable& G, const GroupPtr& domain) const {
  std::vector<Cyclo> v;
  v.reserve(domain->class_count());
  for (std::size_t k = 0; k < domain->class_count(); ++k) {
    const auto g = G.find(domain->table().code(domain->rep(k)));
    if (!g) throw std::invalid_argument("LinearChar: domain element outside G");
    v.push_back(Cyclo::root(N, at(*g)));
  }
  return ClassFunction(domain, std::move(v));
}

LinearChar psi_linear(const CliffordContext& ctx, const PsiA& psi, const Subgroup& K) {
  LinearChar c;
  c.N = psi.order();
  c.members = K.members;
  c.exps.reserve(K.size());
  for (auto k : K.members) c.exps.push_back(psi.exponent_at(ctx.G().element(k)));
  return c;
}

namespace {

std::uint64_t subgroup_exponent(const GroupTable& G, const Subgroup& H) {
  std::uint64_t e = 1;
  for (auto h : H.members) e = std::lcm(e, element_order(G, h));
  return e;
}

// Partial character on G indices; -1 marks "not yet in the domain".
using Partial = std::vector<std::int64_t>;

struct ExtensionState {
  Partial val;
  std::vector<std::uint32_t> domain;
};

// psi on K[H,H], or nothing if psi is nontrivial on K meet [H,H].
std::optional<ExtensionState> base_extension(const GroupTable& G, const LinearChar& psi,
                                             const Subgroup& H, std::uint32_t N) {
  const Subgroup D = derived_subgroup(G, H);
  const std::uint32_t scale = N / psi.N;
  ExtensionState st;
  st.val.assign(G.size(), -1);
  for (std::size_t i = 0; i < psi.members.size(); ++i) {
    const std::int64_t v = static_cast<std::int64_t>(psi.exps[i]) * scale % N;
    for (auto d : D.members) {
      const std::uint32_t x = G.mul(psi.members[i], d);
      if (st.val[x] < 0) {
        st.val[x] = v;
        st.domain.push_back(x);
      } else if (st.val[x] != v) {
        return std::nullopt;
      }
    }
  }
  return st;
}

// All ways to adjoin generators gens[k..] to the current domain.
void adjoin(const GroupTable& G, const std::vector<std::uint32_t>& gens, std::size_t k,
            std::uint32_t N, ExtensionState st, std::vector<ExtensionState>& out, bool first_only) {
  while (k < gens.size() && st.val[gens[k]] >= 0) ++k;
  if (k == gens.size()) {
    out.push_back(std::move(st));
    return;
  }
  const std::uint32_t g = gens[k];
  std::uint32_t o = 1;
  std::uint32_t go = g;
  while (st.val[go] < 0) {
    go = G.mul(go, g);
    ++o;
  }
  const std::int64_t target = st.val[go];
  for (std::uint32_t j = 0; j < N; ++j) {
    if ((static_cast<std::uint64_t>(o) * j) % N != static_cast<std::uint64_t>(target)) continue;
    ExtensionState next = st;
    const std::vector<std::uint32_t> base = st.domain;
    std::uint32_t gs = g;
    for (std::uint32_t s = 1; s < o; ++s) {
      for (auto b : base) {
        const std::uint32_t x = G.mul(b, gs);
        next.val[x] = (st.val[b] + static_cast<std::int64_t>(s) * j) % N;
        next.domain.push_back(x);
      }
      gs = G.mul(gs, g);
    }
    adjoin(G, gens, k + 1, N, std::move(next), out, first_only);
    if (first_only && !out.empty()) return;
  }
}

std::vector<LinearChar> extensions_impl(const GroupTable& G, const LinearChar& psi, const Subgroup& H,
                                        bool first_only) {
  const auto N = static_cast<std::uint32_t>(std::lcm<std::uint64_t>(psi.N, subgroup_exponent(G, H)));
  auto base = base_extension(G, psi, H, N);
  if (!base) return {};
  std::vector<std::uint32_t> gens = H.generators;
  if (gens.empty()) gens = H.members;
  std::vector<ExtensionState> leaves;
  adjoin(G, gens, 0, N, std::move(*base), leaves, first_only);
  std::vector<LinearChar> out;
  for (auto& st : leaves) {
    if (st.domain.size() != H.size()) throw std::logic_error("extension: domain does not fill H");
    LinearChar c;
    c.N = N;
    c.members = H.members;
    c.exps.reserve(H.size());
    for (auto h : H.members) c.exps.push_back(static_cast<std::uint32_t>(st.val[h]));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

bool extends_to(const GroupTable& G, const LinearChar& psi, const Subgroup& H) {
  const Subgroup D = derived_subgroup(G, H);
  for (std::size_t i = 0; i < psi.members.size(); ++i)
    if (psi.exps[i] % psi.N != 0 && D.contains(psi.members[i])) return false;
  return true;
}

std::optional<LinearChar> extension(const GroupTable& G, const LinearChar& psi, const Subgroup& H) {
  auto all = extensions_impl(G, psi, H, true);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::vector<LinearChar> all_linear_extensions(const GroupTable& G, const LinearChar& psi,
                                              const Subgroup& H) {
  return extensions_impl(G, psi, H, false);
}

// ---------------------------------------------------------------- inertia

DetCosets det_cosets(const CliffordContext& ctx, const PsiA& psi, const Subgroup& inertia_gl) {
  const RingSpec& R = ctx.ring();
  DetCosets out;
  std::vector<char> in_image(R.size(), 0);
  for (auto g : inertia_gl.members) in_image[det(R, ctx.G().element(g)).code] = 1;
  std::vector<RingElem> image;
  for (std::uint32_t c = 0; c < R.size(); ++c)
    if (in_image[c]) image.push_back(RingElem{c});
  out.det_image_size = image.size();
  std::vector<char> seen(R.size(), 0);
  for (RingElem u : R.units()) {
    if (seen[u.code]) continue;
    out.reps.push_back(u);
    for (RingElem d : image) seen[R.mul(u, d).code] = 1;
  }
  out.low_centralizer = centralizer_units(psi.low, psi.A);
  out.formula = psi.low.unit_count() / out.low_centralizer.det_image_size;
  return out;
}

std::vector<RingElem> h_set(const PsiA& psi, unsigned i) {
  const RingSpec& R = psi.ring;
  const RingElem beta = psi.lift.d;
  std::vector<RingElem> out;
  for (RingElem x : R.elements())
    if (R.val(R.add(x, x)) >= i && R.val(R.mul(x, R.add(x, beta))) >= i) out.push_back(x);
  return out;
}

Mat2 e_matrix(const PsiA& psi, RingElem x) {
  const RingSpec& R = psi.ring;
  return Mat2{R.one(), R.mul(R.inv(psi.lift.c), x), R.zero(), R.one()};
}

Subgroup H_group(const CliffordContext& ctx, const PsiA& psi, unsigned i) {
  std::vector<std::uint32_t> members;
  for (RingElem x : h_set(psi, i)) members.push_back(ctx.G().index_of(e_matrix(psi, x)));
  Subgroup H = subgroup_from_members(ctx.G(), std::move(members));
  if (!is_closed(ctx.G(), H)) throw std::logic_error("H_group: {e_x} is not a subgroup");
  return H;
}

namespace {

bool same_members(const Subgroup& x, const Subgroup& y) { return x.members == y.members; }

std::optional<Subgroup> try_product(const GroupTable& G, const Subgroup& H, const Subgroup& K) {
  try {
    return product(G, H, K);
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
}

}  // namespace

InertiaData inertia(const CliffordContext& ctx, const PsiA& psi) {
  const RingSpec& R = ctx.ring();
  const GroupTable& T = ctx.G();
  if (psi.lift.a != R.zero() || !R.is_unit(psi.lift.c))
    throw std::invalid_argument("inertia: A must have companion shape [[0,*],[unit,*]]");
  InertiaData d{psi, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, 0, false, false, nullptr};
  const auto table = ctx.psi_table(psi);
  d.C_gl_psi = ctx.stabilizer(table, false, whole_group(T));
  d.C_sl_psi = intersect(T, d.C_gl_psi, ctx.sl_subgroup());
  d.C_sl_bracket = ctx.stabilizer(table, true, ctx.sl_subgroup());

  std::vector<std::uint32_t> cent;
  for (std::uint32_t g = 0; g < T.size(); ++g) {
    const Mat2 x = T.element(g);
    if (mat_mul(R, x, psi.lift) == mat_mul(R, psi.lift, x)) cent.push_back(g);
  }
  d.C_gl_lift = subgroup_from_members(T, std::move(cent));
  const auto gl_prod = try_product(T, d.C_gl_lift, ctx.M_ell_prime());
  d.gl_product_formula = gl_prod && same_members(*gl_prod, d.C_gl_psi);

  const Subgroup cm = product(T, d.C_gl_lift, ctx.M_ell());
  d.C_S_ell = intersect(T, cm, ctx.sl_subgroup());
  d.D_S_ell = intersect(T, cm, ctx.K_one());

  d.h_ell = h_set(psi, R.ell());
  d.h_ell_prime = h_set(psi, R.ell_prime());
  d.H_ell = H_group(ctx, psi, R.ell());
  d.H_ell_prime = H_group(ctx, psi, R.ell_prime());
  const auto sl_prod = try_product(T, d.C_sl_psi, d.H_ell_prime);
  d.sl_product_formula = sl_prod && same_members(*sl_prod, d.C_sl_bracket);

  d.D_A = det_cosets(ctx, psi, d.C_gl_psi);
  d.double_coset_count = double_cosets(T, ctx.sl_subgroup(), d.C_gl_psi).size();
  d.C_gl_psi_group = ctx.classed(d.C_gl_psi);
  return d;
}

std::vector<ClassFunction> phi_set(const CliffordContext& ctx, const InertiaData& in) {
  const GroupTable& T = ctx.G();
  const std::uint64_t index = in.C_gl_psi.size() / ctx.M_ell().size();
  if (ctx.ring().r() % 2 == 0) {
    const LinearChar psi = psi_linear(ctx, in.psi, ctx.M_ell());
    const auto ext = all_linear_extensions(T, psi, in.C_gl_psi);
    if (ext.size() == index) {
      std::vector<ClassFunction> out;
      out.reserve(ext.size());
      for (const auto& c : ext) out.push_back(c.as_class_function(T, in.C_gl_psi_group));
      return out;
    }
  }
  const CharacterTable table = dixon_table(in.C_gl_psi_group);
  const GroupPtr M = ctx.classed(ctx.M_ell());
  const ClassFunction psi = ctx.psi_on(in.psi, M);
  std::vector<ClassFunction> out;
  for (const auto& chi : table.irreducibles)
    if (inner(restrict_to(chi, M), psi) != 0) out.push_back(chi);
  return out;
}

std::vector<ClassFunction> mackey_restriction(const CliffordContext& ctx, const InertiaData& in,
                                              const ClassFunction& phi) {
  const GroupTable& T = ctx.G();
  const RingSpec& R = ctx.ring();
  const auto& I = *in.C_gl_psi_group;
  std::vector<ClassFunction> out;
  for (RingElem d : in.D_A.reps) {
    const std::uint32_t D = ctx.diag_index(d);
    const Subgroup conj_domain = intersect(T, conjugate(T, in.C_gl_psi, D), ctx.sl_subgroup());
    const PsiA psi_d = make_psiA(R, conjugate_by_diag(in.psi.low, in.psi.A, R, d));
    const Subgroup direct = intersect(T, ctx.stabilizer(ctx.psi_table(psi_d), false, whole_group(T)),
                                      ctx.sl_subgroup());
    if (!(direct == conj_domain))
      throw std::logic_error("mackey_restriction: C_SL(psi_{A_d}) is not the conjugated inertia group");
    const GroupPtr dom = ctx.classed(conj_domain);
    std::vector<Cyclo> vals;
    vals.reserve(dom->class_count());
    const std::uint32_t Dinv = T.inv(D);
    for (std::size_t k = 0; k < dom->class_count(); ++k) {
      const std::uint32_t x = T.index_of(dom->table().element(dom->rep(k)));
      const std::uint32_t y = T.conj(Dinv, x);  // D^-1 x D
      const auto yi = I.table().find(T.code(y));
      if (!yi) throw std::logic_error("mackey_restriction: conjugate outside the inertia group");
      vals.push_back(phi.at_element(*yi));
    }
    out.push_back(induce(ClassFunction(dom, std::move(vals)), ctx.sl()));
  }
  return out;
}

std::vector<RingElem> extension_set(const CliffordContext& ctx, const InertiaData& in) {
  const GroupTable& T = ctx.G();
  const LinearChar psi = psi_linear(ctx, in.psi, ctx.K_ell());
  std::vector<RingElem> out;
  for (RingElem lambda : in.h_ell) {
    std::vector<std::uint32_t> gens = in.C_S_ell.generators;
    gens.push_back(T.index_of(e_matrix(in.psi, lambda)));
    const Subgroup H = subgroup_closure(T, gens);
    if (extends_to(T, psi, H)) out.push_back(lambda);
  }
  return out;
}

}  // namespace branchlab
