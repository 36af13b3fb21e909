#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "branchlab/cyclo.hpp"
#include "branchlab/grp.hpp"

namespace branchlab {

/// A group table together with its conjugacy classes and the data the
/// character machinery keeps asking for (inverse classes, power maps, ...).
class ClassedGroup {
 public:
  explicit ClassedGroup(GroupTable table);

  const GroupTable& table() const noexcept { return table_; }
  const ConjClasses& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.count(); }
  std::uint64_t order() const noexcept { return table_.size(); }
  std::uint64_t class_size(std::size_t j) const { return classes_.sizes[j]; }
  std::uint64_t centralizer_order(std::size_t j) const { return order() / classes_.sizes[j]; }
  std::uint32_t class_of(std::uint32_t element) const { return classes_.class_of[element]; }
  std::uint32_t rep(std::size_t j) const { return classes_.reps[j]; }
  std::uint32_t inverse_class(std::size_t j) const { return inverse_class_[j]; }
  /// Elements of class j.
  const std::vector<std::uint32_t>& members(std::size_t j) const { return members_[j]; }
  std::uint32_t rep_order(std::size_t j) const { return static_cast<std::uint32_t>(power_map_[j].size()); }
  /// Class of rep(j)^k.
  std::uint32_t power_class(std::size_t j, std::uint64_t k) const {
    return power_map_[j][k % power_map_[j].size()];
  }
  std::uint32_t exponent() const noexcept { return exponent_; }

 private:
  GroupTable table_;
  ConjClasses classes_;
  std::vector<std::uint32_t> inverse_class_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<std::vector<std::uint32_t>> power_map_;
  std::uint32_t exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const ClassedGroup>;

GroupPtr classify(GroupTable table);

/// A cyclotomic-valued function on the conjugacy classes of a group.
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<Cyclo> values);

  static ClassFunction zero(GroupPtr group);
  static ClassFunction trivial(GroupPtr group);
  static ClassFunction regular(GroupPtr group);

  const GroupPtr& group() const noexcept { return group_; }
  const Cyclo& value(std::size_t cls) const { return values_[cls]; }
  const std::vector<Cyclo>& values() const noexcept { return values_; }
  const Cyclo& at_element(std::uint32_t element) const { return values_[group_->class_of(element)]; }
  /// Value at the identity; throws NotRational if it is not an integer.
  long long degree() const { return values_[0].require_integer(); }
  /// Numerical values, one per class.
  const std::vector<std::complex<double>>& shadow() const noexcept { return shadow_; }

  ClassFunction conj() const;
  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  friend ClassFunction operator+(ClassFunction x, const ClassFunction& y) { return x += y; }
  friend ClassFunction operator-(ClassFunction x, const ClassFunction& y) { return x -= y; }
  friend ClassFunction operator*(long long s, const ClassFunction& x);
  /// Exact equality of values; both sides must live on the same group.
  friend bool operator==(const ClassFunction& x, const ClassFunction& y);

 private:
  void refresh_shadow();

  GroupPtr group_;
  std::vector<Cyclo> values_;
  std::vector<std::complex<double>> shadow_;
};

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;
  std::uint64_t prime = 0;  ///< the Dixon prime

  std::size_t size() const noexcept { return irreducibles.size(); }
  const ClassFunction& operator[](std::size_t i) const { return irreducibles[i]; }
  std::vector<long long> degrees() const;
};

/// Smallest prime p = 1 mod exponent with p > 2 sqrt(order).
std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent);

/// Full table of irreducible characters via the Dixon-Schneider method.
///
/// Common eigenvectors of the class multiplication matrices are found over
/// F_p by splitting with seeded random combinations of those matrices; the
/// values are then lifted to cyclotomic integers by discrete Fourier
/// reconstruction along each class's power map. The trivial character comes
/// first, the rest are sorted by degree and then by their exact values, so
/// the order does not depend on the seed.
CharacterTable dixon_table(const GroupPtr& group, std::uint64_t seed = 0);

/// <f, g> = |G|^-1 sum_x f(x) conj(g(x)), computed exactly.
/// Throws NotRational when the result is not an integer.
long long inner(const ClassFunction& f, const ClassFunction& g);

/// Ind_H^G f, where every element of f's group is an element of G.
ClassFunction induce(const ClassFunction& f, const GroupPtr& G);
/// Res_H f, where every element of H is an element of f's group.
ClassFunction restrict_to(const ClassFunction& f, const GroupPtr& H);

struct Constituent {
  std::size_t index;
  long long multiplicity;
};

/// Multiplicities of the irreducibles in f (nonzero ones only).
///
/// Inner products are estimated numerically and then confirmed by checking
/// sum m_i chi_i == f exactly, which pins the multiplicities down because
/// irreducible characters are linearly independent. Throws std::logic_error
/// on a negative multiplicity or a failed reconstruction.
std::vector<Constituent> decompose(const ClassFunction& f, const CharacterTable& table);

struct OrthogonalityReport {
  bool rows = false;
  bool columns = false;
  bool degrees = false;  ///< sum of squared degrees equals |G|
  bool ok() const noexcept { return rows && columns && degrees; }
};

/// Exact first and second orthogonality relations.
OrthogonalityReport check_orthogonality(const CharacterTable& table);

/// One row per irreducible, one column per class (headed by the class
/// representative); each cell is "exact;re;im" with exact a sparse
/// polynomial in z = zeta_n, n the group exponent.
std::string table_csv(const CharacterTable& table);

}  // namespace branchlab
