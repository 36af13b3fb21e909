#pragma once

#include <cstdint>
#include <string>

#include "branchlab/ring.hpp"

namespace branchlab {

/// 2x2 matrix [[a, b], [c, d]] over a ring given alongside it.
struct Mat2 {
  RingElem a, b, c, d;

  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
  friend constexpr auto operator<=>(const Mat2&, const Mat2&) = default;
};

/// A column vector (x, y).
struct Vec2 {
  RingElem x, y;
};

Mat2 mat_identity(const RingSpec& R);
Mat2 mat_scalar(const RingSpec& R, RingElem s);
Mat2 mat_diag(RingElem d1, RingElem d2);
Mat2 mat_add(const RingSpec& R, const Mat2& x, const Mat2& y);
Mat2 mat_sub(const RingSpec& R, const Mat2& x, const Mat2& y);
Mat2 mat_scale(const RingSpec& R, RingElem s, const Mat2& x);
Mat2 mat_mul(const RingSpec& R, const Mat2& x, const Mat2& y);
Vec2 mat_apply(const RingSpec& R, const Mat2& x, Vec2 v);
RingElem det(const RingSpec& R, const Mat2& x);
RingElem trace(const RingSpec& R, const Mat2& x);
bool is_invertible(const RingSpec& R, const Mat2& x);
/// Throws RingError when det(x) is not a unit.
Mat2 mat_inv(const RingSpec& R, const Mat2& x);

/// Entry-wise natural projection to a lower level.
Mat2 mat_proj(const RingSpec& from, const RingSpec& to, const Mat2& x);
/// Entry-wise coordinate-identity lift to a higher level.
Mat2 mat_lift(const RingSpec& from, const RingSpec& to, const Mat2& x);

/// Packs the four entry codes into one word; requires 4 * R.bits() <= 64.
std::uint64_t pack(const RingSpec& R, const Mat2& x);
Mat2 unpack(const RingSpec& R, std::uint64_t code);

/// True iff some v makes [v | Av] invertible (v scanned over all of o_r^2).
bool is_cyclic(const RingSpec& R, const Mat2& A);

/// A cyclic matrix written as conjugator * A * conjugator^-1 = [[0, a^-1 alpha], [a, beta]].
struct CompanionForm {
  RingElem a;
  RingElem alpha;
  RingElem beta;
  Mat2 conjugator;
};

/// [[0, a^-1 alpha], [a, beta]]
Mat2 companion_matrix(const RingSpec& R, RingElem a, RingElem alpha, RingElem beta);

/// Uses the first cyclic vector v in lexicographic code order; the basis
/// {v, Av} yields a = 1, alpha = -det(A), beta = trace(A). Throws RingError
/// for non-cyclic input.
CompanionForm companion_form(const RingSpec& R, const Mat2& A);

struct CentralizerInfo {
  std::uint64_t size = 0;            ///< |C_{GL_2}(A)|
  std::uint64_t det_image_size = 0;  ///< |det(C_{GL_2}(A))|
};

/// Centralizer of A in GL_2(R). Cyclic A uses {xI + yA} over all (x, y);
/// anything else falls back to a scan over GL_2(R).
CentralizerInfo centralizer_units(const RingSpec& R, const Mat2& A);
/// Reference path: always scans all of GL_2(R).
CentralizerInfo centralizer_units_by_scan(const RingSpec& R, const Mat2& A);

/// diag(gamma(d), 1) A diag(gamma(d), 1)^-1, where A lives over `low`,
/// d is a unit of `high` and gamma is the projection high -> low.
Mat2 conjugate_by_diag(const RingSpec& low, const Mat2& A, const RingSpec& high, RingElem d);

/// "[[m11,m12],[m21,m22]]" using the ring's element encoding.
std::string format_mat(const RingSpec& R, const Mat2& x);
Mat2 parse_mat(const RingSpec& R, const std::string& text);

}  // namespace branchlab
