#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "branchlab/ring.hpp"

namespace branchlab {

/// Raised when a value expected to be a rational integer is not one.
class NotRational : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(std::uint32_t n);

/// An element of Z[x]/(x^n - 1), read as sum_j c_j zeta_n^j.
///
/// The representation is redundant (zeta_n satisfies Phi_n, not just x^n - 1);
/// equality, integrality and exact division go through the canonical
/// remainder modulo Phi_n.
class Cyclo {
 public:
  Cyclo() : n_(1), c_(1, 0) {}
  explicit Cyclo(std::uint32_t n) : n_(n), c_(n, 0) {}

  static Cyclo integer(long long v, std::uint32_t n = 1);
  /// zeta_n^k
  static Cyclo root(std::uint32_t n, std::uint64_t k);
  static Cyclo root(RootOfUnity z) { return root(z.order, z.exponent); }

  std::uint32_t modulus() const noexcept { return n_; }
  long long coeff(std::uint32_t j) const { return c_[j]; }
  const std::vector<long long>& coeffs() const noexcept { return c_; }
  void add_term(std::uint32_t j, long long v) { c_[j % n_] += v; }

  /// Same value written over zeta_m; m must be a multiple of n.
  Cyclo rescaled(std::uint32_t m) const;

  Cyclo& operator+=(const Cyclo& y);
  Cyclo& operator-=(const Cyclo& y);
  Cyclo& operator*=(long long s);
  friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
  friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }
  friend Cyclo operator-(Cyclo x) { return x *= -1; }
  friend Cyclo operator*(Cyclo x, long long s) { return x *= s; }
  friend Cyclo operator*(long long s, Cyclo x) { return x *= s; }
  friend Cyclo operator*(const Cyclo& x, const Cyclo& y);

  /// Complex conjugation: zeta^j -> zeta^-j.
  Cyclo conj() const;
  /// Canonical form: remainder modulo Phi_n (degree below phi(n)).
  Cyclo reduced() const;
  bool is_zero() const;
  friend bool operator==(const Cyclo& x, const Cyclo& y) { return (x - y).is_zero(); }

  /// The value as an integer when it is one.
  std::optional<long long> to_integer() const;
  /// Throws NotRational.
  long long require_integer() const;
  std::complex<double> to_complex() const;
  /// Exact division by an integer; throws std::domain_error if it does not divide.
  Cyclo div_exact(long long d) const;
  /// Number of nonzero coefficients.
  std::size_t terms() const;

  /// Sparse text form over z = zeta_n, e.g. "2-z^3+z^16"; "0" for zero.
  std::string str() const;

 private:
  std::uint32_t n_;
  std::vector<long long> c_;
};

}  // namespace branchlab
