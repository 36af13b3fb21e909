#include "branchlab/mat.hpp"

#include <set>
#include <sstream>
#include <vector>

namespace branchlab {

Mat2 mat_identity(const RingSpec& R) { return mat_scalar(R, R.one()); }

Mat2 mat_scalar(const RingSpec& R, RingElem s) { return Mat2{s, R.zero(), R.zero(), s}; }

Mat2 mat_diag(RingElem d1, RingElem d2) { return Mat2{d1, RingElem{0}, RingElem{0}, d2}; }

Mat2 mat_add(const RingSpec& R, const Mat2& x, const Mat2& y) {
  return Mat2{R.add(x.a, y.a), R.add(x.b, y.b), R.add(x.c, y.c), R.add(x.d, y.d)};
}

Mat2 mat_sub(const RingSpec& R, const Mat2& x, const Mat2& y) {
  return Mat2{R.sub(x.a, y.a), R.sub(x.b, y.b), R.sub(x.c, y.c), R.sub(x.d, y.d)};
}

Mat2 mat_scale(const RingSpec& R, RingElem s, const Mat2& x) {
  return Mat2{R.mul(s, x.a), R.mul(s, x.b), R.mul(s, x.c), R.mul(s, x.d)};
}

Mat2 mat_mul(const RingSpec& R, const Mat2& x, const Mat2& y) {
  return Mat2{R.add(R.mul(x.a, y.a), R.mul(x.b, y.c)), R.add(R.mul(x.a, y.b), R.mul(x.b, y.d)),
              R.add(R.mul(x.c, y.a), R.mul(x.d, y.c)), R.add(R.mul(x.c, y.b), R.mul(x.d, y.d))};
}

Vec2 mat_apply(const RingSpec& R, const Mat2& x, Vec2 v) {
  return Vec2{R.add(R.mul(x.a, v.x), R.mul(x.b, v.y)), R.add(R.mul(x.c, v.x), R.mul(x.d, v.y))};
}

RingElem det(const RingSpec& R, const Mat2& x) { return R.sub(R.mul(x.a, x.d), R.mul(x.b, x.c)); }

RingElem trace(const RingSpec& R, const Mat2& x) { return R.add(x.a, x.d); }

bool is_invertible(const RingSpec& R, const Mat2& x) { return R.is_unit(det(R, x)); }

Mat2 mat_inv(const RingSpec& R, const Mat2& x) {
  const RingElem dt = det(R, x);
  if (!R.is_unit(dt)) throw RingError("matrix " + format_mat(R, x) + " is not invertible");
  const RingElem di = R.inv(dt);
  return Mat2{R.mul(di, x.d), R.neg(R.mul(di, x.b)), R.neg(R.mul(di, x.c)), R.mul(di, x.a)};
}

Mat2 mat_proj(const RingSpec& from, const RingSpec& to, const Mat2& x) {
  return Mat2{from.proj(to, x.a), from.proj(to, x.b), from.proj(to, x.c), from.proj(to, x.d)};
}

Mat2 mat_lift(const RingSpec& from, const RingSpec& to, const Mat2& x) {
  return Mat2{to.lift_from(from, x.a), to.lift_from(from, x.b), to.lift_from(from, x.c),
              to.lift_from(from, x.d)};
}

std::uint64_t pack(const RingSpec& R, const Mat2& x) {
  const unsigned w = R.bits();
  return std::uint64_t{x.a.code} | (std::uint64_t{x.b.code} << w) |
         (std::uint64_t{x.c.code} << (2 * w)) | (std::uint64_t{x.d.code} << (3 * w));
}

Mat2 unpack(const RingSpec& R, std::uint64_t code) {
  const unsigned w = R.bits();
  const std::uint64_t mask = (std::uint64_t{1} << w) - 1;
  return Mat2{RingElem{static_cast<std::uint32_t>(code & mask)},
              RingElem{static_cast<std::uint32_t>((code >> w) & mask)},
              RingElem{static_cast<std::uint32_t>((code >> (2 * w)) & mask)},
              RingElem{static_cast<std::uint32_t>((code >> (3 * w)) & mask)}};
}

namespace {

// First v in lexicographic order with [v | Av] invertible.
bool find_cyclic_vector(const RingSpec& R, const Mat2& A, Vec2& out) {
  for (std::uint32_t x = 0; x < R.size(); ++x) {
    for (std::uint32_t y = 0; y < R.size(); ++y) {
      const Vec2 v{RingElem{x}, RingElem{y}};
      const Vec2 av = mat_apply(R, A, v);
      if (R.is_unit(R.sub(R.mul(v.x, av.y), R.mul(av.x, v.y)))) {
        out = v;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

bool is_cyclic(const RingSpec& R, const Mat2& A) {
  Vec2 v;
  return find_cyclic_vector(R, A, v);
}

Mat2 companion_matrix(const RingSpec& R, RingElem a, RingElem alpha, RingElem beta) {
  return Mat2{R.zero(), R.mul(R.inv(a), alpha), a, beta};
}

CompanionForm companion_form(const RingSpec& R, const Mat2& A) {
  Vec2 v;
  if (!find_cyclic_vector(R, A, v))
    throw RingError("companion_form: " + format_mat(R, A) + " is not cyclic");
  const Vec2 av = mat_apply(R, A, v);
  const Mat2 basis{v.x, av.x, v.y, av.y};
  return CompanionForm{R.one(), R.neg(det(R, A)), trace(R, A), mat_inv(R, basis)};
}

CentralizerInfo centralizer_units_by_scan(const RingSpec& R, const Mat2& A) {
  CentralizerInfo info;
  std::set<std::uint32_t> dets;
  const std::uint32_t n = R.size();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < n; ++d) {
          const Mat2 X{RingElem{a}, RingElem{b}, RingElem{c}, RingElem{d}};
          const RingElem dt = det(R, X);
          if (!R.is_unit(dt)) continue;
          if (mat_mul(R, A, X) != mat_mul(R, X, A)) continue;
          ++info.size;
          dets.insert(dt.code);
        }
  info.det_image_size = dets.size();
  return info;
}

CentralizerInfo centralizer_units(const RingSpec& R, const Mat2& A) {
  if (!is_cyclic(R, A)) return centralizer_units_by_scan(R, A);
  CentralizerInfo info;
  std::vector<char> seen(R.size(), 0);
  for (std::uint32_t x = 0; x < R.size(); ++x)
    for (std::uint32_t y = 0; y < R.size(); ++y) {
      const Mat2 X = mat_add(R, mat_scalar(R, RingElem{x}), mat_scale(R, RingElem{y}, A));
      const RingElem dt = det(R, X);
      if (!R.is_unit(dt)) continue;
      ++info.size;
      if (!seen[dt.code]) {
        seen[dt.code] = 1;
        ++info.det_image_size;
      }
    }
  return info;
}

Mat2 conjugate_by_diag(const RingSpec& low, const Mat2& A, const RingSpec& high, RingElem d) {
  if (!high.is_unit(d)) throw RingError("conjugate_by_diag: d = " + high.format(d) + " is not a unit");
  const RingElem g = high.proj(low, d);
  const Mat2 D = mat_diag(g, low.one());
  return mat_mul(low, mat_mul(low, D, A), mat_inv(low, D));
}

std::string format_mat(const RingSpec& R, const Mat2& x) {
  return "[[" + R.format(x.a) + "," + R.format(x.b) + "],[" + R.format(x.c) + "," +
         R.format(x.d) + "]]";
}

Mat2 parse_mat(const RingSpec& R, const std::string& text) {
  std::string flat;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != ' ') flat += ch;
  std::vector<std::string> tokens;
  std::stringstream ss(flat);
  std::string item;
  while (std::getline(ss, item, ',')) tokens.push_back(item);
  const std::size_t per = R.is_char2() ? R.r() : 1;
  if (tokens.size() != 4 * per)
    throw RingError("cannot parse matrix '" + text + "': expected " + std::to_string(4 * per) +
                    " entries");
  RingElem e[4];
  for (std::size_t i = 0; i < 4; ++i) {
    std::string joined;
    for (std::size_t j = 0; j < per; ++j) {
      if (j) joined += ',';
      joined += tokens[i * per + j];
    }
    e[i] = R.parse(joined);
  }
  return Mat2{e[0], e[1], e[2], e[3]};
}

}  // namespace branchlab
