#include "branchlab/grp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace branchlab {

namespace {

constexpr unsigned kDenseIndexBits = 20;

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (out > (std::uint64_t{1} << 62) / base) throw BudgetExceeded("group order overflows 64 bits");
    out *= base;
  }
  return out;
}

void check_budget(const RingSpec& R, std::uint64_t order, std::uint64_t budget, const char* what) {
  if (4 * R.bits() > 64)
    throw BudgetExceeded(std::string(what) + ": matrix codes do not fit in 64 bits");
  if (order > budget)
    throw BudgetExceeded(std::string(what) + "(" + R.kind_name() + ", r=" + std::to_string(R.r()) +
                         ") has " + std::to_string(order) + " elements, over the budget of " +
                         std::to_string(budget) +
                         "; use `predict` for closed-form answers at this level");
}

std::vector<std::uint64_t> enumerate_matrices(const RingSpec& R, bool det_one) {
  std::vector<std::uint64_t> codes;
  const std::uint32_t n = R.size();
  const RingElem one = R.one();
  for (std::uint32_t d = 0; d < n; ++d)
    for (std::uint32_t c = 0; c < n; ++c)
      for (std::uint32_t b = 0; b < n; ++b) {
        const RingElem bc = R.mul(RingElem{b}, RingElem{c});
        for (std::uint32_t a = 0; a < n; ++a) {
          const RingElem dt = R.sub(R.mul(RingElem{a}, RingElem{d}), bc);
          if (det_one ? dt == one : R.is_unit(dt))
            codes.push_back(pack(R, Mat2{RingElem{a}, RingElem{b}, RingElem{c}, RingElem{d}}));
        }
      }
  return codes;
}

std::vector<std::uint64_t> elementary_generators(const RingSpec& R) {
  std::vector<std::uint64_t> gens;
  const RingElem one = R.one(), zero = R.zero();
  for (RingElem x : R.additive_generators()) {
    gens.push_back(pack(R, Mat2{one, x, zero, one}));
    gens.push_back(pack(R, Mat2{one, zero, x, one}));
  }
  return gens;
}

// Membership bitmap over the parent group.
std::vector<char> bitmap(const GroupTable& G, const std::vector<std::uint32_t>& members) {
  std::vector<char> in(G.size(), 0);
  for (auto m : members) in[m] = 1;
  return in;
}

// Closure of `gens` given an existing closed set `in` (modified in place) with
// members listed in `members`.
void extend_closure(const GroupTable& G, std::vector<char>& in, std::vector<std::uint32_t>& members,
                    const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint32_t> frontier = members;
  if (frontier.empty()) {
    in[G.identity()] = 1;
    members.push_back(G.identity());
    frontier.push_back(G.identity());
  }
  while (!frontier.empty()) {
    const std::uint32_t x = frontier.back();
    frontier.pop_back();
    for (std::uint32_t g : gens) {
      const std::uint32_t y = G.mul(x, g);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
        frontier.push_back(y);
      }
    }
  }
}

// Greedy generating set for a closed member list.
std::vector<std::uint32_t> greedy_generators(const GroupTable& G,
                                             const std::vector<std::uint32_t>& members) {
  std::vector<std::uint32_t> gens;
  std::vector<char> in(G.size(), 0);
  std::vector<std::uint32_t> reached;
  extend_closure(G, in, reached, gens);
  for (std::uint32_t m : members) {
    if (reached.size() == members.size()) break;
    if (in[m]) continue;
    gens.push_back(m);
    extend_closure(G, in, reached, gens);
  }
  return gens;
}

}  // namespace

std::uint64_t gl2_order(const RingSpec& R) {
  const std::uint64_t q = R.q();
  return checked_pow(q, 4 * R.r() - 3) * (q - 1) * (q * q - 1);
}

std::uint64_t sl2_order(const RingSpec& R) {
  const std::uint64_t q = R.q();
  return checked_pow(q, 3 * R.r() - 2) * (q * q - 1);
}

GroupTable::GroupTable(const RingSpec& R, Ambient ambient, std::vector<std::uint64_t> codes)
    : ring_(R), ambient_(ambient), codes_(std::move(codes)) {
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  build_index();
}

void GroupTable::build_index() {
  if (4 * ring_.bits() <= kDenseIndexBits) {
    dense_index_.assign(std::size_t{1} << (4 * ring_.bits()), -1);
    for (std::uint32_t i = 0; i < codes_.size(); ++i)
      dense_index_[codes_[i]] = static_cast<std::int32_t>(i);
  }
  const auto id = find(mat_identity(ring_));
  if (!id) throw std::logic_error("group table does not contain the identity");
  identity_ = *id;
  inverse_.resize(codes_.size());
  for (std::uint32_t i = 0; i < codes_.size(); ++i) {
    const auto j = find(mat_inv(ring_, element(i)));
    if (!j) throw std::logic_error("group table is not closed under inverses");
    inverse_[i] = *j;
  }
}

GroupTable GroupTable::gl2(const RingSpec& R, std::uint64_t budget) {
  check_budget(R, gl2_order(R), budget, "GL_2");
  GroupTable G(R, Ambient::gl2, enumerate_matrices(R, false));
  if (G.size() != gl2_order(R)) throw std::logic_error("GL_2 enumeration disagrees with order formula");
  std::vector<std::uint64_t> gens = elementary_generators(R);
  for (RingElem u : R.unit_generators()) gens.push_back(pack(R, mat_diag(u, R.one())));
  for (auto c : gens) G.generators_.push_back(*G.find(c));
  return G;
}

GroupTable GroupTable::sl2(const RingSpec& R, std::uint64_t budget) {
  check_budget(R, sl2_order(R), budget, "SL_2");
  GroupTable G(R, Ambient::sl2, enumerate_matrices(R, true));
  if (G.size() != sl2_order(R)) throw std::logic_error("SL_2 enumeration disagrees with order formula");
  for (auto c : elementary_generators(R)) G.generators_.push_back(*G.find(c));
  return G;
}

GroupTable GroupTable::from_codes(const RingSpec& R, std::vector<std::uint64_t> codes,
                                  Ambient ambient,
                                  const std::vector<std::uint64_t>& generator_codes) {
  GroupTable G(R, ambient, std::move(codes));
  if (generator_codes.empty()) {
    std::vector<std::uint32_t> all(G.size());
    std::iota(all.begin(), all.end(), 0u);
    G.generators_ = greedy_generators(G, all);
  } else {
    for (auto c : generator_codes) {
      const auto i = G.find(c);
      if (!i) throw std::logic_error("generator not in group");
      G.generators_.push_back(*i);
    }
  }
  return G;
}

std::optional<std::uint32_t> GroupTable::find(std::uint64_t code) const {
  if (!dense_index_.empty()) {
    if (code >= dense_index_.size()) return std::nullopt;
    const auto v = dense_index_[code];
    if (v < 0) return std::nullopt;
    return static_cast<std::uint32_t>(v);
  }
  const auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) return std::nullopt;
  return static_cast<std::uint32_t>(it - codes_.begin());
}

std::uint32_t GroupTable::index_of(const Mat2& x) const {
  const auto i = find(x);
  if (!i) throw std::out_of_range("matrix " + format_mat(ring_, x) + " is not in the group");
  return *i;
}

std::uint32_t GroupTable::mul(std::uint32_t i, std::uint32_t j) const {
  const auto k = find(mat_mul(ring_, element(i), element(j)));
  if (!k) throw std::logic_error("group table is not closed under products");
  return *k;
}

std::uint32_t GroupTable::pow(std::uint32_t x, std::uint64_t k) const {
  std::uint32_t result = identity_;
  while (k) {
    if (k & 1u) result = mul(result, x);
    x = mul(x, x);
    k >>= 1;
  }
  return result;
}

bool Subgroup::contains(std::uint32_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

Subgroup whole_group(const GroupTable& G) {
  Subgroup H;
  H.members.resize(G.size());
  std::iota(H.members.begin(), H.members.end(), 0u);
  H.generators = G.generators();
  return H;
}

Subgroup trivial_subgroup(const GroupTable& G) { return Subgroup{{G.identity()}, {}}; }

Subgroup subgroup_from_members(const GroupTable& G, std::vector<std::uint32_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup H;
  H.generators = greedy_generators(G, members);
  H.members = std::move(members);
  return H;
}

Subgroup congruence_subgroup(const GroupTable& G, unsigned i) {
  const RingSpec& R = G.ring();
  const RingElem one = R.one();
  std::vector<std::uint32_t> members;
  for (std::uint32_t k = 0; k < G.size(); ++k) {
    const Mat2 x = G.element(k);
    if (R.val(R.sub(x.a, one)) >= i && R.val(x.b) >= i && R.val(x.c) >= i &&
        R.val(R.sub(x.d, one)) >= i)
      members.push_back(k);
  }
  return subgroup_from_members(G, std::move(members));
}

Subgroup subgroup_closure(const GroupTable& G, const std::vector<std::uint32_t>& gens) {
  std::vector<char> in(G.size(), 0);
  Subgroup H;
  extend_closure(G, in, H.members, gens);
  std::sort(H.members.begin(), H.members.end());
  H.generators = gens;
  return H;
}

Subgroup normal_closure(const GroupTable& G, const std::vector<std::uint32_t>& seeds,
                        const std::vector<std::uint32_t>& normalizers) {
  std::vector<char> in(G.size(), 0);
  std::vector<std::uint32_t> members;
  std::vector<std::uint32_t> gens;
  extend_closure(G, in, members, gens);
  for (auto s : seeds)
    if (!in[s]) {
      gens.push_back(s);
      extend_closure(G, in, members, gens);
    }
  // Conjugates of generators are enough: the closure of a generating set
  // stable under conjugation is normal.
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (auto n : normalizers) {
      const std::uint32_t c = G.conj(n, gens[k]);
      if (!in[c]) {
        gens.push_back(c);
        extend_closure(G, in, members, gens);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members), std::move(gens)};
}

Subgroup derived_subgroup(const GroupTable& G, const Subgroup& H) {
  std::vector<std::uint32_t> comms;
  for (std::size_t i = 0; i < H.generators.size(); ++i)
    for (std::size_t j = i + 1; j < H.generators.size(); ++j) {
      const std::uint32_t x = H.generators[i], y = H.generators[j];
      comms.push_back(G.mul(G.mul(x, y), G.mul(G.inv(x), G.inv(y))));
    }
  return normal_closure(G, comms, H.generators);
}

Subgroup derived_subgroup(const GroupTable& G) { return derived_subgroup(G, whole_group(G)); }

Subgroup intersect(const GroupTable& G, const Subgroup& H, const Subgroup& K) {
  std::vector<std::uint32_t> out;
  std::set_intersection(H.members.begin(), H.members.end(), K.members.begin(), K.members.end(),
                        std::back_inserter(out));
  return subgroup_from_members(G, std::move(out));
}

Subgroup product(const GroupTable& G, const Subgroup& H, const Subgroup& K) {
  std::vector<char> in(G.size(), 0);
  std::vector<std::uint32_t> out;
  for (auto h : H.members)
    for (auto k : K.members) {
      const std::uint32_t x = G.mul(h, k);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  std::vector<std::uint32_t> gens = H.generators;
  gens.insert(gens.end(), K.generators.begin(), K.generators.end());
  for (auto g : gens)
    for (auto x : out)
      if (!in[G.mul(x, g)]) throw std::logic_error("product set HK is not a subgroup");
  std::sort(out.begin(), out.end());
  return Subgroup{std::move(out), std::move(gens)};
}

Subgroup conjugate(const GroupTable& G, const Subgroup& H, std::uint32_t g) {
  Subgroup out;
  out.members.reserve(H.size());
  for (auto h : H.members) out.members.push_back(G.conj(g, h));
  std::sort(out.members.begin(), out.members.end());
  for (auto h : H.generators) out.generators.push_back(G.conj(g, h));
  return out;
}

bool is_abelian(const GroupTable& G, const Subgroup& H) {
  for (auto x : H.generators)
    for (auto y : H.generators)
      if (G.mul(x, y) != G.mul(y, x)) return false;
  return true;
}

bool is_normalized_by(const GroupTable& G, const Subgroup& H, const std::vector<std::uint32_t>& by) {
  const auto in = bitmap(G, H.members);
  for (auto g : by)
    for (auto h : H.generators)
      if (!in[G.conj(g, h)]) return false;
  return true;
}

bool is_closed(const GroupTable& G, const Subgroup& H) {
  const auto in = bitmap(G, H.members);
  if (!in[G.identity()]) return false;
  for (auto x : H.members) {
    if (!in[G.inv(x)]) return false;
    for (auto g : H.generators)
      if (!in[G.mul(x, g)]) return false;
  }
  // Generators must lie in H and generate it.
  for (auto g : H.generators)
    if (!in[g]) return false;
  return subgroup_closure(G, H.generators).members == H.members;
}

ConjClasses conjugacy_classes(const GroupTable& G) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  ConjClasses cc;
  cc.class_of.assign(G.size(), kUnset);
  std::vector<std::uint32_t> order;
  order.reserve(G.size());
  order.push_back(G.identity());
  for (std::uint32_t i = 0; i < G.size(); ++i)
    if (i != G.identity()) order.push_back(i);
  std::vector<std::uint32_t> frontier;
  for (std::uint32_t start : order) {
    if (cc.class_of[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(cc.reps.size());
    cc.reps.push_back(start);
    std::uint64_t size = 1;
    cc.class_of[start] = id;
    frontier.assign(1, start);
    while (!frontier.empty()) {
      const std::uint32_t x = frontier.back();
      frontier.pop_back();
      for (auto g : G.generators()) {
        const std::uint32_t y = G.conj(g, x);
        if (cc.class_of[y] == kUnset) {
          cc.class_of[y] = id;
          ++size;
          frontier.push_back(y);
        }
      }
    }
    cc.sizes.push_back(size);
  }
  return cc;
}

std::vector<std::uint32_t> cosets(const GroupTable& G, const Subgroup& H) {
  std::vector<char> seen(G.size(), 0);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    if (seen[g]) continue;
    reps.push_back(g);
    for (auto h : H.members) seen[G.mul(g, h)] = 1;
  }
  return reps;
}

std::vector<std::uint32_t> double_cosets(const GroupTable& G, const Subgroup& H1,
                                         const Subgroup& H2) {
  std::vector<char> seen(G.size(), 0);
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> frontier;
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    if (seen[g]) continue;
    reps.push_back(g);
    seen[g] = 1;
    frontier.assign(1, g);
    while (!frontier.empty()) {
      const std::uint32_t x = frontier.back();
      frontier.pop_back();
      for (auto h : H1.generators) {
        const std::uint32_t y = G.mul(h, x);
        if (!seen[y]) {
          seen[y] = 1;
          frontier.push_back(y);
        }
      }
      for (auto h : H2.generators) {
        const std::uint32_t y = G.mul(x, h);
        if (!seen[y]) {
          seen[y] = 1;
          frontier.push_back(y);
        }
      }
    }
  }
  return reps;
}

std::uint64_t element_order(const GroupTable& G, std::uint32_t i) {
  std::uint64_t k = 1;
  for (std::uint32_t x = i; x != G.identity(); x = G.mul(x, i)) ++k;
  return k;
}

std::uint64_t exponent(const GroupTable& G) {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < G.size(); ++i) e = std::lcm(e, element_order(G, i));
  return e;
}

GroupTable subgroup_table(const GroupTable& G, const Subgroup& H) {
  std::vector<std::uint64_t> codes;
  codes.reserve(H.size());
  for (auto m : H.members) codes.push_back(G.code(m));
  std::vector<std::uint64_t> gens;
  for (auto g : H.generators) gens.push_back(G.code(g));
  if (gens.empty() && H.size() > 1) gens = codes;
  return GroupTable::from_codes(G.ring(), std::move(codes), Ambient::subgroup, gens);
}

}  // namespace branchlab
