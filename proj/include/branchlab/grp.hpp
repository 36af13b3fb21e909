#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "branchlab/mat.hpp"
#include "branchlab/ring.hpp"

namespace branchlab {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Ambient { gl2, sl2, subgroup };

/// |GL_2(o_r)| = q^(4r) (1 - 1/q)(1 - 1/q^2)
std::uint64_t gl2_order(const RingSpec& R);
/// |SL_2(o_r)| = |GL_2(o_r)| / |o_r^x|
std::uint64_t sl2_order(const RingSpec& R);

/// A fully enumerated finite matrix group.
///
/// Elements are packed matrix codes kept in increasing order, so element
/// indices are stable. Products are recomputed from the matrix entries.
class GroupTable {
 public:
  static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 25;

  /// Throws BudgetExceeded when the order formula exceeds `budget`.
  static GroupTable gl2(const RingSpec& R, std::uint64_t budget = kDefaultBudget);
  static GroupTable sl2(const RingSpec& R, std::uint64_t budget = kDefaultBudget);
  /// Table on an explicit set of codes, which must be closed under products.
  /// Generators are chosen greedily when none are supplied.
  static GroupTable from_codes(const RingSpec& R, std::vector<std::uint64_t> codes,
                               Ambient ambient,
                               const std::vector<std::uint64_t>& generator_codes = {});

  const RingSpec& ring() const noexcept { return ring_; }
  Ambient ambient() const noexcept { return ambient_; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(codes_.size()); }

  std::uint64_t code(std::uint32_t i) const { return codes_[i]; }
  Mat2 element(std::uint32_t i) const { return unpack(ring_, codes_[i]); }
  std::optional<std::uint32_t> find(std::uint64_t code) const;
  std::optional<std::uint32_t> find(const Mat2& x) const { return find(pack(ring_, x)); }
  /// Throws std::out_of_range when x is not in the group.
  std::uint32_t index_of(const Mat2& x) const;

  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t inv(std::uint32_t i) const { return inverse_[i]; }
  std::uint32_t identity() const noexcept { return identity_; }
  /// g x g^-1
  std::uint32_t conj(std::uint32_t g, std::uint32_t x) const { return mul(mul(g, x), inv(g)); }
  std::uint32_t pow(std::uint32_t x, std::uint64_t k) const;

  const std::vector<std::uint32_t>& generators() const noexcept { return generators_; }

 private:
  GroupTable(const RingSpec& R, Ambient ambient, std::vector<std::uint64_t> codes);
  void build_index();

  RingSpec ring_;
  Ambient ambient_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::int32_t> dense_index_;  // empty when the code space is large
  std::vector<std::uint32_t> inverse_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> generators_;
};

/// A subgroup of a GroupTable as a sorted list of element indices.
struct Subgroup {
  std::vector<std::uint32_t> members;
  std::vector<std::uint32_t> generators;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(std::uint32_t i) const;
  friend bool operator==(const Subgroup& x, const Subgroup& y) { return x.members == y.members; }
};

struct ConjClasses {
  std::vector<std::uint32_t> class_of;  ///< class id per element
  std::vector<std::uint32_t> reps;      ///< representative per class
  std::vector<std::uint64_t> sizes;     ///< class sizes

  std::size_t count() const noexcept { return reps.size(); }
};

Subgroup whole_group(const GroupTable& G);
Subgroup trivial_subgroup(const GroupTable& G);

/// M^i = I + pi^i M_2(o_r) intersected with G (so K^i when G is SL_2).
Subgroup congruence_subgroup(const GroupTable& G, unsigned i);

Subgroup subgroup_closure(const GroupTable& G, const std::vector<std::uint32_t>& gens);
/// Smallest subgroup containing `seeds` and closed under conjugation by `normalizers`.
Subgroup normal_closure(const GroupTable& G, const std::vector<std::uint32_t>& seeds,
                        const std::vector<std::uint32_t>& normalizers);
/// [H, H] as the normal closure in H of commutators of generator pairs.
Subgroup derived_subgroup(const GroupTable& G, const Subgroup& H);
Subgroup derived_subgroup(const GroupTable& G);

Subgroup intersect(const GroupTable& G, const Subgroup& H, const Subgroup& K);
/// HK; throws std::logic_error if the product set is not a subgroup.
Subgroup product(const GroupTable& G, const Subgroup& H, const Subgroup& K);
/// g H g^-1
Subgroup conjugate(const GroupTable& G, const Subgroup& H, std::uint32_t g);
/// Subgroup from a member list that is known to be closed.
Subgroup subgroup_from_members(const GroupTable& G, std::vector<std::uint32_t> members);

bool is_abelian(const GroupTable& G, const Subgroup& H);
/// Is H normalized by every element of `by`?
bool is_normalized_by(const GroupTable& G, const Subgroup& H, const std::vector<std::uint32_t>& by);
bool is_closed(const GroupTable& G, const Subgroup& H);

/// Orbits of G acting on itself by conjugation. The identity is class 0.
ConjClasses conjugacy_classes(const GroupTable& G);

/// Representatives (smallest index) of the left cosets gH.
std::vector<std::uint32_t> cosets(const GroupTable& G, const Subgroup& H);
/// Representatives (smallest index) of the double cosets H1 g H2.
std::vector<std::uint32_t> double_cosets(const GroupTable& G, const Subgroup& H1,
                                         const Subgroup& H2);

std::uint64_t element_order(const GroupTable& G, std::uint32_t i);
std::uint64_t exponent(const GroupTable& G);

/// Standalone table for H, sharing the ring and element codes.
GroupTable subgroup_table(const GroupTable& G, const Subgroup& H);

}  // namespace branchlab
