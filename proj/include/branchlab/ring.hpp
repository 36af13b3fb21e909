#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchlab {

/// Which family of 2-adic chain ring a RingSpec describes.
///
///  - char0_unramified: Z/2^r
///  - char2_equal:      F_q[t]/(t^r), q in {2, 4}
///  - char0_eisenstein: Z_2[pi]/(pi^2 - 2, pi^r)
enum class RingKind { char0_unramified, char2_equal, char0_eisenstein };

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of a finite chain ring, stored as its canonical coordinate code.
///
/// The code is only meaningful together with the RingSpec it came from:
///  - Z/2^r: the residue in [0, 2^r)
///  - F_q[t]/t^r: coefficient i occupies bits [m*i, m*i + m) where q = 2^m;
///    an F_4 coefficient b0 + b1*w is stored as b0 | b1 << 1 with w^2 = w + 1
///  - Eisenstein: a + b*pi stored as a | b << ell, a mod 2^ell, b mod 2^ell'
struct RingElem {
  std::uint32_t code = 0;

  friend constexpr bool operator==(RingElem, RingElem) = default;
  friend constexpr auto operator<=>(RingElem, RingElem) = default;
};

/// exp(2 pi i * exponent / order)
struct RootOfUnity {
  std::uint32_t order = 1;
  std::uint32_t exponent = 0;
};

/// Kind, q and r of a chain ring, without building it. Enough for closed
/// forms at levels far beyond what can be enumerated.
struct RingShape {
  RingKind kind = RingKind::char0_unramified;
  unsigned q = 2;
  unsigned r = 1;

  /// Validates the combination (but not the size). Throws RingError.
  static RingShape make(RingKind kind, unsigned q, unsigned r);

  /// Ramification index; 0 in equal characteristic.
  unsigned e() const noexcept;
  unsigned ell() const noexcept { return (r + 1) / 2; }
  unsigned ell_prime() const noexcept { return r / 2; }
  bool is_char2() const noexcept { return kind == RingKind::char2_equal; }
  std::string kind_name() const;
};

RingShape shape_from_name(const std::string& name, unsigned r);

namespace detail {
struct RingTables;
}

/// A finite quotient o_r = o / p^r of a 2-adic discrete valuation ring.
///
/// Immutable value type; copies share their (read-only) lookup tables.
class RingSpec {
 public:
  /// Validates (kind, q, r) and builds the ring. Throws RingError.
  static RingSpec make(RingKind kind, unsigned q, unsigned r);

  RingKind kind() const noexcept { return kind_; }
  unsigned q() const noexcept { return q_; }
  unsigned r() const noexcept { return r_; }
  /// Ramification index; 0 stands for "absent" in equal characteristic.
  unsigned e() const noexcept;
  unsigned ell() const noexcept { return (r_ + 1) / 2; }
  unsigned ell_prime() const noexcept { return r_ / 2; }
  /// log2(q)
  unsigned residue_degree() const noexcept { return m_; }
  /// Bits used by one element code (= log2 |o_r|).
  unsigned bits() const noexcept { return m_ * r_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << bits(); }
  std::uint64_t unit_count() const noexcept;
  bool is_char2() const noexcept { return kind_ == RingKind::char2_equal; }

  /// Short CLI name: z2, f2t, f4t or eis2.
  std::string kind_name() const;

  /// Same kind and q, level s (s >= 0; level 0 is the zero ring).
  RingSpec truncated(unsigned s) const;
  RingShape shape() const noexcept { return RingShape{kind_, q_, r_}; }
  bool same_family(const RingSpec& other) const noexcept {
    return kind_ == other.kind_ && q_ == other.q_;
  }
  friend bool operator==(const RingSpec& x, const RingSpec& y) noexcept {
    return x.kind_ == y.kind_ && x.q_ == y.q_ && x.r_ == y.r_;
  }

  RingElem zero() const noexcept { return RingElem{0}; }
  RingElem one() const;
  RingElem pi() const;
  RingElem pi_pow(unsigned k) const;
  /// Image of the integer n under Z -> o_r.
  RingElem from_int(long long n) const;
  RingElem from_code(std::uint32_t code) const;

  RingElem add(RingElem x, RingElem y) const;
  RingElem sub(RingElem x, RingElem y) const;
  RingElem neg(RingElem x) const;
  RingElem mul(RingElem x, RingElem y) const;
  RingElem pow(RingElem x, std::uint64_t k) const;
  /// Throws RingError for non-units.
  RingElem inv(RingElem x) const;
  bool is_unit(RingElem x) const;
  /// Valuation in [0, r]; val(0) = r.
  unsigned val(RingElem x) const;

  /// The fixed additive character psi with psi(pi^(r-1)) != 1.
  RootOfUnity psi(RingElem x) const;
  /// Order of psi as a character of (o_r, +).
  std::uint32_t psi_order() const noexcept;

  /// Natural projection o_r -> o_s (s <= r, same family).
  RingElem proj(const RingSpec& target, RingElem x) const;
  /// Coordinate-identity section of the projection target -> *this.
  RingElem lift_from(const RingSpec& source, RingElem x) const;

  std::vector<RingElem> elements() const;
  std::vector<RingElem> units() const;
  /// A small generating set of the unit group, chosen greedily in code order.
  std::vector<RingElem> unit_generators() const;
  /// Additive generators: pi^i times an F_2-basis of the residue field.
  std::vector<RingElem> additive_generators() const;

  std::string format(RingElem x) const;
  RingElem parse(const std::string& text) const;

 private:
  RingSpec(RingKind kind, unsigned q, unsigned m, unsigned r);

  RingElem add_raw(RingElem x, RingElem y) const;
  RingElem neg_raw(RingElem x) const;
  RingElem mul_raw(RingElem x, RingElem y) const;
  unsigned val_raw(RingElem x) const;

  RingKind kind_;
  unsigned q_;
  unsigned m_;
  unsigned r_;
  std::shared_ptr<const detail::RingTables> tables_;
};

/// Map of x |-> x^2 on the unit group, as the sorted list of squares.
std::vector<RingElem> squares_of_units(const RingSpec& ring);

/// |{x in o^x : x^2 = 1}|.
///
/// Enumerates the unit group when |o| <= 2^22. Larger equal-characteristic
/// rings use the fact that x^2 = 1 iff (x - 1)^2 = 0 and y -> y^2 is
/// F_2-linear, so the count is 2^(nullity) of that map.
std::uint64_t sqrt1_count(const RingSpec& ring);
/// Same count for the level-`level` quotient of the given family, also for
/// equal-characteristic levels too large to build as a RingSpec.
std::uint64_t sqrt1_count(RingKind kind, unsigned q, unsigned level);

/// Parses the CLI kind names (z2, f2t, f4t, eis2).
RingSpec ring_from_name(const std::string& name, unsigned r);

}  // namespace branchlab
