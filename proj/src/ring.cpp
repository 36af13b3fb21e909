#include "branchlab/ring.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <regex>
#include <sstream>

namespace branchlab {

namespace detail {

// Lookup tables for rings small enough that |o_r|^2 entries are cheap.
struct RingTables {
  std::uint32_t n = 0;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  std::vector<std::uint16_t> neg;
  std::vector<std::uint8_t> val;
};

}  // namespace detail

namespace {

constexpr std::uint32_t kTableLimit = 1024;

bool is_power_of_two(unsigned q) { return q != 0 && (q & (q - 1)) == 0; }

// F_4 = F_2[w]/(w^2 + w + 1), elements b0 + b1 w encoded as b0 | b1 << 1.
std::uint32_t gf4_mul(std::uint32_t a, std::uint32_t b) {
  std::uint32_t p = 0;
  if (b & 1u) p ^= a;
  if (b & 2u) p ^= a << 1;
  if (p & 4u) p ^= 0b111u;
  return p & 3u;
}

std::uint32_t low_mask(unsigned bits) {
  return bits >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << bits) - 1u;
}

}  // namespace

RingSpec::RingSpec(RingKind kind, unsigned q, unsigned m, unsigned r)
    : kind_(kind), q_(q), m_(m), r_(r) {
  if (size() > kTableLimit) return;
  auto t = std::make_shared<detail::RingTables>();
  const std::uint32_t n = size();
  t->n = n;
  t->add.resize(std::size_t{n} * n);
  t->mul.resize(std::size_t{n} * n);
  t->neg.resize(n);
  t->val.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    t->neg[x] = static_cast<std::uint16_t>(neg_raw(RingElem{x}).code);
    t->val[x] = static_cast<std::uint8_t>(val_raw(RingElem{x}));
    for (std::uint32_t y = 0; y < n; ++y) {
      t->add[std::size_t{x} * n + y] =
          static_cast<std::uint16_t>(add_raw(RingElem{x}, RingElem{y}).code);
      t->mul[std::size_t{x} * n + y] =
          static_cast<std::uint16_t>(mul_raw(RingElem{x}, RingElem{y}).code);
    }
  }
  tables_ = std::move(t);
}

RingShape RingShape::make(RingKind kind, unsigned q, unsigned r) {
  if (!is_power_of_two(q) || q < 2)
    throw RingError("residue field size q must be a power of 2, got " + std::to_string(q));
  if (r < 1) throw RingError("level r must be at least 1");
  switch (kind) {
    case RingKind::char0_unramified:
      if (q != 2) throw RingError("unramified characteristic-0 rings are supported only for q = 2");
      break;
    case RingKind::char2_equal:
      if (q != 2 && q != 4) throw RingError("equal-characteristic rings are supported for q in {2, 4}");
      break;
    case RingKind::char0_eisenstein:
      if (q != 2) throw RingError("the Eisenstein ring is supported only for q = 2");
      break;
  }
  return RingShape{kind, q, r};
}

unsigned RingShape::e() const noexcept {
  switch (kind) {
    case RingKind::char0_unramified: return 1;
    case RingKind::char0_eisenstein: return 2;
    case RingKind::char2_equal: return 0;
  }
  return 0;
}

std::string RingShape::kind_name() const {
  switch (kind) {
    case RingKind::char0_unramified: return "z2";
    case RingKind::char0_eisenstein: return "eis2";
    case RingKind::char2_equal: return q == 2 ? "f2t" : "f4t";
  }
  return "?";
}

RingShape shape_from_name(const std::string& name, unsigned r) {
  if (name == "z2") return RingShape::make(RingKind::char0_unramified, 2, r);
  if (name == "f2t") return RingShape::make(RingKind::char2_equal, 2, r);
  if (name == "f4t") return RingShape::make(RingKind::char2_equal, 4, r);
  if (name == "eis2") return RingShape::make(RingKind::char0_eisenstein, 2, r);
  throw RingError("unknown ring kind '" + name + "' (expected z2, f2t, f4t or eis2)");
}

RingSpec RingSpec::make(RingKind kind, unsigned q, unsigned r) {
  RingShape::make(kind, q, r);
  const unsigned m = static_cast<unsigned>(std::countr_zero(q));
  if (m * r > 30) throw RingError("ring too large: q^r must be below 2^31");
  return RingSpec(kind, q, m, r);
}

unsigned RingSpec::e() const noexcept { return shape().e(); }

std::uint64_t RingSpec::unit_count() const noexcept {
  if (r_ == 0) return 1;
  return std::uint64_t{q_ - 1} << (m_ * (r_ - 1));
}

std::string RingSpec::kind_name() const { return shape().kind_name(); }

RingSpec RingSpec::truncated(unsigned s) const { return RingSpec(kind_, q_, m_, s); }

RingElem RingSpec::one() const { return from_int(1); }

RingElem RingSpec::pi() const {
  if (r_ <= 1) return zero();
  switch (kind_) {
    case RingKind::char0_unramified: return RingElem{2};
    case RingKind::char2_equal: return RingElem{std::uint32_t{1} << m_};
    case RingKind::char0_eisenstein: return RingElem{std::uint32_t{1} << ell()};
  }
  return zero();
}

RingElem RingSpec::pi_pow(unsigned k) const {
  RingElem x = one();
  for (unsigned i = 0; i < k && x.code != 0; ++i) x = mul(x, pi());
  return x;
}

RingElem RingSpec::from_int(long long n) const {
  if (r_ == 0) return zero();
  switch (kind_) {
    case RingKind::char0_unramified: {
      const long long mod = 1LL << r_;
      return RingElem{static_cast<std::uint32_t>(((n % mod) + mod) % mod)};
    }
    case RingKind::char2_equal:
      return RingElem{static_cast<std::uint32_t>(((n % 2) + 2) % 2)};
    case RingKind::char0_eisenstein: {
      const long long mod = 1LL << ell();
      return RingElem{static_cast<std::uint32_t>(((n % mod) + mod) % mod)};
    }
  }
  return zero();
}

RingElem RingSpec::from_code(std::uint32_t code) const {
  if (code >= size()) throw RingError("element code out of range");
  return RingElem{code};
}

RingElem RingSpec::add_raw(RingElem x, RingElem y) const {
  switch (kind_) {
    case RingKind::char0_unramified: return RingElem{(x.code + y.code) & low_mask(r_)};
    case RingKind::char2_equal: return RingElem{x.code ^ y.code};
    case RingKind::char0_eisenstein: {
      const unsigned l = ell();
      const std::uint32_t am = low_mask(l), bm = low_mask(ell_prime());
      const std::uint32_t a = ((x.code & am) + (y.code & am)) & am;
      const std::uint32_t b = ((x.code >> l) + (y.code >> l)) & bm;
      return RingElem{a | (b << l)};
    }
  }
  return zero();
}

RingElem RingSpec::neg_raw(RingElem x) const {
  switch (kind_) {
    case RingKind::char0_unramified: return RingElem{(0u - x.code) & low_mask(r_)};
    case RingKind::char2_equal: return x;
    case RingKind::char0_eisenstein: {
      const unsigned l = ell();
      const std::uint32_t a = (0u - (x.code & low_mask(l))) & low_mask(l);
      const std::uint32_t b = (0u - (x.code >> l)) & low_mask(ell_prime());
      return RingElem{a | (b << l)};
    }
  }
  return zero();
}

RingElem RingSpec::mul_raw(RingElem x, RingElem y) const {
  switch (kind_) {
    case RingKind::char0_unramified:
      return RingElem{static_cast<std::uint32_t>(
          (std::uint64_t{x.code} * y.code) & low_mask(r_))};
    case RingKind::char2_equal: {
      if (m_ == 1) {
        std::uint64_t p = 0;
        for (unsigned i = 0; i < r_; ++i)
          if ((x.code >> i) & 1u) p ^= std::uint64_t{y.code} << i;
        return RingElem{static_cast<std::uint32_t>(p) & low_mask(r_)};
      }
      std::uint32_t p = 0;
      for (unsigned i = 0; i < r_; ++i) {
        const std::uint32_t xi = (x.code >> (2 * i)) & 3u;
        if (xi == 0) continue;
        for (unsigned j = 0; i + j < r_; ++j) {
          const std::uint32_t yj = (y.code >> (2 * j)) & 3u;
          p ^= gf4_mul(xi, yj) << (2 * (i + j));
        }
      }
      return RingElem{p};
    }
    case RingKind::char0_eisenstein: {
      // (a + b pi)(c + d pi) = (ac + 2bd) + (ad + bc) pi
      const unsigned l = ell();
      const std::uint64_t a = x.code & low_mask(l), b = x.code >> l;
      const std::uint64_t c = y.code & low_mask(l), d = y.code >> l;
      const std::uint32_t s = static_cast<std::uint32_t>((a * c + 2 * b * d) & low_mask(l));
      const std::uint32_t t = static_cast<std::uint32_t>((a * d + b * c) & low_mask(ell_prime()));
      return RingElem{s | (t << l)};
    }
  }
  return zero();
}

unsigned RingSpec::val_raw(RingElem x) const {
  if (x.code == 0) return r_;
  switch (kind_) {
    case RingKind::char0_unramified: return static_cast<unsigned>(std::countr_zero(x.code));
    case RingKind::char2_equal: return static_cast<unsigned>(std::countr_zero(x.code)) / m_;
    case RingKind::char0_eisenstein: {
      const unsigned l = ell();
      const std::uint32_t a = x.code & low_mask(l), b = x.code >> l;
      const unsigned va = a ? 2u * static_cast<unsigned>(std::countr_zero(a)) : r_;
      const unsigned vb = b ? 2u * static_cast<unsigned>(std::countr_zero(b)) + 1u : r_;
      return std::min(va, vb);
    }
  }
  return r_;
}

RingElem RingSpec::add(RingElem x, RingElem y) const {
  if (tables_) return RingElem{tables_->add[std::size_t{x.code} * tables_->n + y.code]};
  return add_raw(x, y);
}

RingElem RingSpec::neg(RingElem x) const {
  if (tables_) return RingElem{tables_->neg[x.code]};
  return neg_raw(x);
}

RingElem RingSpec::sub(RingElem x, RingElem y) const { return add(x, neg(y)); }

RingElem RingSpec::mul(RingElem x, RingElem y) const {
  if (tables_) return RingElem{tables_->mul[std::size_t{x.code} * tables_->n + y.code]};
  return mul_raw(x, y);
}

RingElem RingSpec::pow(RingElem x, std::uint64_t k) const {
  RingElem result = one();
  while (k) {
    if (k & 1u) result = mul(result, x);
    x = mul(x, x);
    k >>= 1;
  }
  return result;
}

unsigned RingSpec::val(RingElem x) const {
  if (tables_) return tables_->val[x.code];
  return val_raw(x);
}

bool RingSpec::is_unit(RingElem x) const { return r_ > 0 && val(x) == 0; }

RingElem RingSpec::inv(RingElem x) const {
  if (!is_unit(x)) throw RingError("inverse of non-unit " + format(x));
  return pow(x, unit_count() - 1);
}

std::uint32_t RingSpec::psi_order() const noexcept {
  if (r_ == 0) return 1;
  switch (kind_) {
    case RingKind::char0_unramified: return std::uint32_t{1} << r_;
    case RingKind::char2_equal: return 2;
    case RingKind::char0_eisenstein: return std::uint32_t{1} << ell();
  }
  return 1;
}

RootOfUnity RingSpec::psi(RingElem x) const {
  if (r_ == 0) return {1, 0};
  switch (kind_) {
    case RingKind::char0_unramified: return {psi_order(), x.code};
    case RingKind::char2_equal: {
      // (-1)^Tr(alpha * a_{r-1}) with Tr(alpha) = 1: alpha = 1 over F_2,
      // alpha = w over F_4 where Tr(w * (b0 + b1 w)) = b0 + b1.
      const std::uint32_t top = (x.code >> (m_ * (r_ - 1))) & low_mask(m_);
      const std::uint32_t bit = m_ == 1 ? top : ((top & 1u) ^ (top >> 1));
      return {2, bit};
    }
    case RingKind::char0_eisenstein: {
      const unsigned l = ell();
      const std::uint32_t a = x.code & low_mask(l), b = x.code >> l;
      const std::uint32_t k = (a + (b << (l - ell_prime()))) & low_mask(l);
      return {psi_order(), k};
    }
  }
  return {1, 0};
}

RingElem RingSpec::proj(const RingSpec& target, RingElem x) const {
  if (!same_family(target)) throw RingError("projection between different ring families");
  if (target.r_ > r_) throw RingError("projection must go to a lower level");
  switch (kind_) {
    case RingKind::char0_unramified:
    case RingKind::char2_equal:
      return RingElem{x.code & low_mask(target.bits())};
    case RingKind::char0_eisenstein: {
      const std::uint32_t a = x.code & low_mask(ell()), b = x.code >> ell();
      return RingElem{(a & low_mask(target.ell())) |
                      ((b & low_mask(target.ell_prime())) << target.ell())};
    }
  }
  return zero();
}

RingElem RingSpec::lift_from(const RingSpec& source, RingElem x) const {
  if (!same_family(source)) throw RingError("lift between different ring families");
  if (source.r_ > r_) throw RingError("lift must go to a higher level");
  if (kind_ != RingKind::char0_eisenstein) return x;
  const std::uint32_t a = x.code & low_mask(source.ell()), b = x.code >> source.ell();
  return RingElem{a | (b << ell())};
}

std::vector<RingElem> RingSpec::elements() const {
  std::vector<RingElem> out(size());
  for (std::uint32_t i = 0; i < size(); ++i) out[i] = RingElem{i};
  return out;
}

std::vector<RingElem> RingSpec::units() const {
  std::vector<RingElem> out;
  out.reserve(unit_count());
  for (std::uint32_t i = 0; i < size(); ++i)
    if (is_unit(RingElem{i})) out.push_back(RingElem{i});
  return out;
}

std::vector<RingElem> RingSpec::unit_generators() const {
  std::vector<RingElem> gens;
  std::vector<char> in(size(), 0);
  const RingElem id = one();
  in[id.code] = 1;
  std::uint64_t reached = 1;
  for (RingElem u : units()) {
    if (reached == unit_count()) break;
    if (in[u.code]) continue;
    gens.push_back(u);
    std::vector<RingElem> frontier;
    for (std::uint32_t c = 0; c < size(); ++c)
      if (in[c]) frontier.push_back(RingElem{c});
    while (!frontier.empty()) {
      const RingElem x = frontier.back();
      frontier.pop_back();
      for (RingElem g : gens) {
        const RingElem y = mul(x, g);
        if (!in[y.code]) {
          in[y.code] = 1;
          ++reached;
          frontier.push_back(y);
        }
      }
    }
  }
  return gens;
}

std::vector<RingElem> RingSpec::additive_generators() const {
  std::vector<RingElem> gens;
  switch (kind_) {
    case RingKind::char0_unramified:
      if (r_ > 0) gens.push_back(one());
      break;
    case RingKind::char2_equal:
      for (unsigned i = 0; i < r_; ++i)
        for (unsigned b = 0; b < m_; ++b) gens.push_back(RingElem{std::uint32_t{1} << (m_ * i + b)});
      break;
    case RingKind::char0_eisenstein:
      if (r_ > 0) gens.push_back(one());
      if (r_ > 1) gens.push_back(pi());
      break;
  }
  return gens;
}

std::string RingSpec::format(RingElem x) const {
  switch (kind_) {
    case RingKind::char0_unramified: return std::to_string(x.code);
    case RingKind::char2_equal: {
      std::string s;
      for (unsigned i = 0; i < r_; ++i) {
        if (i) s += ',';
        s += std::to_string((x.code >> (m_ * i)) & low_mask(m_));
      }
      return s;
    }
    case RingKind::char0_eisenstein: {
      const std::uint32_t a = x.code & low_mask(ell()), b = x.code >> ell();
      return std::to_string(a) + "+" + std::to_string(b) + "*pi";
    }
  }
  return "?";
}

RingElem RingSpec::parse(const std::string& text) const {
  auto parse_int = [&](std::string_view s) {
    long long v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
      throw RingError("cannot parse ring element '" + text + "'");
    return v;
  };
  switch (kind_) {
    case RingKind::char0_unramified: return from_int(parse_int(text));
    case RingKind::char2_equal: {
      std::vector<long long> coeffs;
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) coeffs.push_back(parse_int(item));
      if (coeffs.size() > r_) throw RingError("too many coefficients in '" + text + "'");
      std::uint32_t code = 0;
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 0 || coeffs[i] >= static_cast<long long>(q_))
          throw RingError("coefficient out of range in '" + text + "'");
        code |= static_cast<std::uint32_t>(coeffs[i]) << (m_ * i);
      }
      return RingElem{code};
    }
    case RingKind::char0_eisenstein: {
      static const std::regex re(R"(^\s*(-?\d+)\s*\+\s*(-?\d+)\s*\*\s*pi\s*$)");
      std::smatch match;
      if (!std::regex_match(text, match, re))
        throw RingError("cannot parse Eisenstein element '" + text + "' (expected a+b*pi)");
      const long long a = parse_int(match[1].str()), b = parse_int(match[2].str());
      const RingElem bpi = mul(from_int(b), pi());
      return add(from_int(a), bpi);
    }
  }
  return zero();
}

std::vector<RingElem> squares_of_units(const RingSpec& ring) {
  std::vector<RingElem> out;
  for (RingElem u : ring.units()) out.push_back(ring.mul(u, u));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t sqrt1_count(const RingSpec& ring) {
  if (ring.r() == 0) return 1;
  if (ring.bits() <= 22) {
    std::uint64_t count = 0;
    const RingElem id = ring.one();
    for (std::uint32_t c = 0; c < ring.size(); ++c) {
      const RingElem x{c};
      if (ring.is_unit(x) && ring.mul(x, x) == id) ++count;
    }
    return count;
  }
  if (!ring.is_char2())
    throw RingError("sqrt1_count: ring too large for enumeration");
  // Rank over F_2 of y -> y^2 on the coordinate basis.
  std::vector<std::uint32_t> basis(ring.bits(), 0);
  unsigned rank = 0;
  for (unsigned k = 0; k < ring.bits(); ++k) {
    const RingElem e{std::uint32_t{1} << k};
    std::uint32_t v = ring.mul(e, e).code;
    for (int b = static_cast<int>(ring.bits()) - 1; b >= 0 && v; --b) {
      if (!((v >> b) & 1u)) continue;
      if (!basis[b]) {
        basis[b] = v;
        ++rank;
        v = 0;
      } else {
        v ^= basis[b];
      }
    }
  }
  return std::uint64_t{1} << (ring.bits() - rank);
}

std::uint64_t sqrt1_count(RingKind kind, unsigned q, unsigned level) {
  const unsigned m = q == 4 ? 2 : 1;
  if (level == 0) return 1;
  if (m * level <= 30) return sqrt1_count(RingSpec::make(kind, q, level));
  if (kind != RingKind::char2_equal || m * level > 64)
    throw RingError("sqrt1_count: level " + std::to_string(level) + " is too large");
  // y -> y^2 sends the coefficient c at t^i to frob(c) at t^(2i).
  const unsigned bits = m * level;
  std::vector<std::uint64_t> basis(bits, 0);
  unsigned rank = 0;
  for (unsigned k = 0; k < bits; ++k) {
    const unsigned i = k / m, j = k % m;
    if (2 * i >= level) continue;
    const std::uint64_t frob = m == 1 ? 1 : (j == 0 ? 1 : 3);  // w^2 = 1 + w
    std::uint64_t v = frob << (m * 2 * i);
    for (int b = static_cast<int>(bits) - 1; b >= 0 && v; --b) {
      if (!((v >> b) & 1u)) continue;
      if (!basis[b]) {
        basis[b] = v;
        ++rank;
        v = 0;
      } else {
        v ^= basis[b];
      }
    }
  }
  return std::uint64_t{1} << (bits - rank);
}

RingSpec ring_from_name(const std::string& name, unsigned r) {
  const RingShape s = shape_from_name(name, r);
  return RingSpec::make(s.kind, s.q, s.r);
}

}  // namespace branchlab
