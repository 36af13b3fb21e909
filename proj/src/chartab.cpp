#include "branchlab/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace branchlab {

// ---------------------------------------------------------------- groups

ClassedGroup::ClassedGroup(GroupTable table) : table_(std::move(table)) {
  classes_ = conjugacy_classes(table_);
  const std::size_t n = classes_.count();
  members_.assign(n, {});
  for (std::uint32_t x = 0; x < table_.size(); ++x) members_[classes_.class_of[x]].push_back(x);
  inverse_class_.resize(n);
  power_map_.resize(n);
  std::uint64_t e = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint32_t g = classes_.reps[j];
    inverse_class_[j] = classes_.class_of[table_.inv(g)];
    std::uint32_t y = table_.identity();
    do {
      power_map_[j].push_back(classes_.class_of[y]);
      y = table_.mul(y, g);
    } while (y != table_.identity());
    e = std::lcm(e, power_map_[j].size());
  }
  exponent_ = static_cast<std::uint32_t>(e);
}

GroupPtr classify(GroupTable table) { return std::make_shared<const ClassedGroup>(std::move(table)); }

// ------------------------------------------------------- class functions

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclo> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->class_count())
    throw std::invalid_argument("ClassFunction: one value per class required");
  std::uint32_t m = 1;
  for (const auto& v : values_) m = std::lcm(m, v.modulus());
  for (auto& v : values_) v = v.rescaled(m);
  refresh_shadow();
}

void ClassFunction::refresh_shadow() {
  shadow_.resize(values_.size());
  for (std::size_t j = 0; j < values_.size(); ++j) shadow_[j] = values_[j].to_complex();
}

ClassFunction ClassFunction::zero(GroupPtr group) {
  std::vector<Cyclo> v(group->class_count(), Cyclo::integer(0));
  return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::trivial(GroupPtr group) {
  std::vector<Cyclo> v(group->class_count(), Cyclo::integer(1));
  return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::regular(GroupPtr group) {
  std::vector<Cyclo> v(group->class_count(), Cyclo::integer(0));
  v[0] = Cyclo::integer(static_cast<long long>(group->order()));
  return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclo> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.conj());
  return ClassFunction(group_, std::move(v));
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (group_ != other.group_) throw std::invalid_argument("ClassFunction: different groups");
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += other.values_[j];
  refresh_shadow();
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  if (group_ != other.group_) throw std::invalid_argument("ClassFunction: different groups");
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= other.values_[j];
  refresh_shadow();
  return *this;
}

ClassFunction operator*(long long s, const ClassFunction& x) {
  std::vector<Cyclo> v = x.values_;
  for (auto& c : v) c *= s;
  return ClassFunction(x.group_, std::move(v));
}

bool operator==(const ClassFunction& x, const ClassFunction& y) {
  if (x.group_ != y.group_) return false;
  for (std::size_t j = 0; j < x.values_.size(); ++j)
    if (!(x.values_[j] == y.values_[j])) return false;
  return true;
}

std::vector<long long> CharacterTable::degrees() const {
  std::vector<long long> d;
  d.reserve(irreducibles.size());
  for (const auto& chi : irreducibles) d.push_back(chi.degree());
  return d;
}

// ------------------------------------------------------ exact sums

namespace {

struct Term {
  std::uint32_t exp;
  long long coeff;
};
using Sparse = std::vector<Term>;

// Nonzero terms of x written over zeta_m.
Sparse sparse_terms(const Cyclo& x, std::uint32_t m) {
  Sparse s;
  const std::uint32_t f = m / x.modulus();
  for (std::uint32_t j = 0; j < x.modulus(); ++j)
    if (x.coeff(j) != 0) s.push_back({j * f, x.coeff(j)});
  return s;
}

// Dense accumulator for sums of weighted products a * conj(b).
class Accumulator {
 public:
  explicit Accumulator(std::uint32_t m) : m_(m), acc_(m, 0) {}

  void add_product_conj(const Sparse& a, const Sparse& b, long long w) {
    for (const auto& x : a)
      for (const auto& y : b) {
        const std::uint32_t k = (x.exp + m_ - y.exp) % m_;
        acc_[k] += static_cast<__int128>(w) * x.coeff * y.coeff;
      }
  }

  Cyclo value() const {
    Cyclo c(m_);
    for (std::uint32_t j = 0; j < m_; ++j) {
      if (acc_[j] > static_cast<__int128>(INT64_MAX) || acc_[j] < static_cast<__int128>(INT64_MIN))
        throw std::overflow_error("character sum overflows 64 bits");
      c.add_term(j, static_cast<long long>(acc_[j]));
    }
    return c;
  }

 private:
  std::uint32_t m_;
  std::vector<__int128> acc_;
};

long long integer_quotient(const Cyclo& sum, long long d) {
  const long long v = sum.require_integer();
  if (v % d != 0) throw NotRational("inner product " + std::to_string(v) + "/" + std::to_string(d) + " is not an integer");
  return v / d;
}

}  // namespace

long long inner(const ClassFunction& f, const ClassFunction& g) {
  if (f.group() != g.group()) throw std::invalid_argument("inner: different groups");
  const auto& G = *f.group();
  const std::uint32_t m = std::lcm(f.value(0).modulus(), g.value(0).modulus());
  Accumulator acc(m);
  for (std::size_t j = 0; j < G.class_count(); ++j)
    acc.add_product_conj(sparse_terms(f.value(j), m), sparse_terms(g.value(j), m),
                         static_cast<long long>(G.class_size(j)));
  return integer_quotient(acc.value(), static_cast<long long>(G.order()));
}

ClassFunction induce(const ClassFunction& f, const GroupPtr& G) {
  const auto& H = *f.group();
  if (!(H.table().ring() == G->table().ring())) throw std::invalid_argument("induce: different rings");
  const std::uint32_t m = f.value(0).modulus();
  std::vector<Cyclo> bucket(G->class_count(), Cyclo(m));
  for (std::size_t k = 0; k < H.class_count(); ++k) {
    const auto gi = G->table().find(H.table().code(H.rep(k)));
    if (!gi) throw std::invalid_argument("induce: subgroup element outside the group");
    bucket[G->class_of(*gi)] += f.value(k) * static_cast<long long>(H.class_size(k));
  }
  for (std::size_t j = 0; j < bucket.size(); ++j)
    bucket[j] = (bucket[j] * static_cast<long long>(G->centralizer_order(j)))
                    .div_exact(static_cast<long long>(H.order()));
  return ClassFunction(G, std::move(bucket));
}

ClassFunction restrict_to(const ClassFunction& f, const GroupPtr& H) {
  const auto& G = *f.group();
  if (!(H->table().ring() == G.table().ring())) throw std::invalid_argument("restrict_to: different rings");
  std::vector<Cyclo> v;
  v.reserve(H->class_count());
  for (std::size_t k = 0; k < H->class_count(); ++k) {
    const auto gi = G.table().find(H->table().code(H->rep(k)));
    if (!gi) throw std::invalid_argument("restrict_to: subgroup element outside the group");
    v.push_back(f.value(G.class_of(*gi)));
  }
  return ClassFunction(H, std::move(v));
}

std::vector<Constituent> decompose(const ClassFunction& f, const CharacterTable& table) {
  if (f.group() != table.group) throw std::invalid_argument("decompose: different groups");
  const auto& G = *table.group;
  const double order = static_cast<double>(G.order());
  std::vector<long long> mult(table.size(), 0);
  bool numeric_ok = true;
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::complex<double> s{0.0, 0.0};
    const auto& chi = table[i].shadow();
    for (std::size_t j = 0; j < G.class_count(); ++j)
      s += static_cast<double>(G.class_size(j)) * f.shadow()[j] * std::conj(chi[j]);
    s /= order;
    const double r = std::round(s.real());
    if (std::abs(s - std::complex<double>(r, 0.0)) > 0.25) numeric_ok = false;
    mult[i] = static_cast<long long>(r);
  }

  auto reconstructs = [&] {
    for (std::size_t j = 0; j < G.class_count(); ++j) {
      Cyclo sum = f.value(j) * -1;
      for (std::size_t i = 0; i < table.size(); ++i)
        if (mult[i] != 0) sum += table[i].value(j) * mult[i];
      if (!sum.is_zero()) return false;
    }
    return true;
  };

  if (!numeric_ok || !reconstructs()) {
    for (std::size_t i = 0; i < table.size(); ++i) mult[i] = inner(f, table[i]);
    if (!reconstructs()) throw std::logic_error("decompose: not a combination of irreducible characters");
  }
  std::vector<Constituent> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (mult[i] < 0) throw std::logic_error("decompose: negative multiplicity (virtual character)");
    if (mult[i] > 0) out.push_back({i, mult[i]});
  }
  return out;
}

OrthogonalityReport check_orthogonality(const CharacterTable& table) {
  OrthogonalityReport rep;
  const auto& G = *table.group;
  const std::size_t n = G.class_count();
  const std::size_t c = table.size();
  if (c == 0) return rep;
  const std::uint32_t m = table[0].value(0).modulus();
  for (std::size_t i = 0; i < c; ++i)
    if (table[i].value(0).modulus() != m) throw std::logic_error("check_orthogonality: mixed moduli");

  std::vector<std::vector<Sparse>> terms(c, std::vector<Sparse>(n));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < n; ++j) terms[i][j] = sparse_terms(table[i].value(j), m);

  rep.rows = c == n;
  for (std::size_t i = 0; i < c && rep.rows; ++i)
    for (std::size_t k = i; k < c && rep.rows; ++k) {
      Accumulator acc(m);
      for (std::size_t j = 0; j < n; ++j)
        acc.add_product_conj(terms[i][j], terms[k][j], static_cast<long long>(G.class_size(j)));
      const Cyclo s = acc.value();
      const auto v = s.to_integer();
      rep.rows = v && *v == (i == k ? static_cast<long long>(G.order()) : 0);
    }

  rep.columns = c == n;
  for (std::size_t j = 0; j < n && rep.columns; ++j)
    for (std::size_t k = j; k < n && rep.columns; ++k) {
      Accumulator acc(m);
      for (std::size_t i = 0; i < c; ++i) acc.add_product_conj(terms[i][j], terms[i][k], 1);
      const auto v = acc.value().to_integer();
      rep.columns = v && *v == (j == k ? static_cast<long long>(G.centralizer_order(j)) : 0);
    }

  long long sum = 0;
  for (std::size_t i = 0; i < c; ++i) {
    const auto d = table[i].value(0).to_integer();
    if (!d) return rep;
    sum += *d * *d;
  }
  rep.degrees = sum == static_cast<long long>(G.order());
  return rep;
}

// -------------------------------------------------------- Dixon-Schneider

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 k) const {
    u64 r = 1;
    a %= p;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    return pow(a, p - 2);
  }
};

u64 primitive_root(const Field& F) {
  std::vector<u64> factors;
  u64 m = F.p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < F.p; ++g) {
    bool ok = true;
    for (u64 f : factors)
      if (F.pow(g, (F.p - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // p = 2
}

// Row-reduce `rows` in place (reduced echelon form); returns pivot columns.
std::vector<std::size_t> rref(const Field& F, std::vector<Vec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const u64 s = F.inv(rows[r][col]);
    for (auto& v : rows[r]) v = F.mul(v, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const u64 f = rows[i][col];
      for (std::size_t k = col; k < ncols; ++k) rows[i][k] = F.sub(rows[i][k], F.mul(f, rows[r][k]));
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// A subspace of F_p^n given by a reduced echelon basis.
struct Space {
  std::vector<Vec> basis;
  std::vector<std::size_t> pivots;
  std::size_t dim() const { return basis.size(); }
};

using Matrix = std::vector<Vec>;  // row major

// Characteristic polynomial (low degree first) via reduction to Hessenberg form.
Vec charpoly(const Field& F, Matrix H) {
  const std::size_t d = H.size();
  for (std::size_t m = 1; m + 1 < d + 1 && m < d; ++m) {
    const std::size_t j = m - 1;
    std::size_t i = m;
    while (i < d && H[i][j] == 0) ++i;
    if (i == d) continue;
    if (i != m) {
      std::swap(H[i], H[m]);
      for (auto& row : H) std::swap(row[i], row[m]);
    }
    const u64 inv = F.inv(H[m][j]);
    for (std::size_t k = m + 1; k < d; ++k) {
      if (H[k][j] == 0) continue;
      const u64 u = F.mul(H[k][j], inv);
      for (std::size_t c = 0; c < d; ++c) H[k][c] = F.sub(H[k][c], F.mul(u, H[m][c]));
      for (std::size_t r = 0; r < d; ++r) H[r][m] = F.add(H[r][m], F.mul(u, H[r][k]));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i t_i h_{k-i,k} p_{k-i-1}, 1-based.
  std::vector<Vec> p(d + 1);
  p[0] = Vec{1};
  for (std::size_t m = 1; m <= d; ++m) {
    Vec next(m + 1, 0);
    const Vec& prev = p[m - 1];
    const u64 h = H[m - 1][m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] = F.add(next[k + 1], prev[k]);
      next[k] = F.sub(next[k], F.mul(h, prev[k]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = F.mul(t, H[m - i][m - i - 1]);
      if (t == 0) break;
      const u64 f = F.mul(t, H[m - i - 1][m - 1]);
      if (f == 0) continue;
      const Vec& q = p[m - i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) next[k] = F.sub(next[k], F.mul(f, q[k]));
    }
    p[m] = std::move(next);
  }
  return p[d];
}

u64 eval(const Field& F, const Vec& poly, u64 x) {
  u64 v = 0;
  for (std::size_t k = poly.size(); k-- > 0;) v = F.add(F.mul(v, x), poly[k]);
  return v;
}

// Divide by (x - a); returns quotient, sets `rem`.
Vec deflate(const Field& F, const Vec& poly, u64 a, u64& rem) {
  Vec q(poly.size() - 1, 0);
  u64 carry = 0;
  for (std::size_t k = poly.size(); k-- > 0;) {
    const u64 c = F.add(poly[k], F.mul(carry, a));
    if (k == 0) rem = c;
    else q[k - 1] = c;
    carry = c;
  }
  return q;
}

Vec mat_vec(const Field& F, const Matrix& A, const Vec& v) {
  Vec out(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i) {
    u64 s = 0;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0 && A[i][k] != 0) s = (s + A[i][k] * v[k]) % F.p;
    out[i] = s;
  }
  return out;
}

class DixonSolver {
 public:
  DixonSolver(const GroupPtr& G, std::uint64_t seed) : G_(*G), F_{dixon_prime(G->order(), G->exponent())}, rng_(seed) {}

  std::vector<Vec> eigenvectors() {
    const std::size_t n = G_.class_count();
    std::vector<Space> open;
    std::vector<Vec> done;
    {
      Space full;
      for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        full.basis.push_back(std::move(e));
        full.pivots.push_back(i);
      }
      open.push_back(std::move(full));
    }
    if (n == 1) return {open[0].basis[0]};
    for (int pass = 0; !open.empty(); ++pass) {
      if (pass > 64) throw std::runtime_error("dixon_table: splitting does not terminate");
      const Matrix S = random_class_combination();
      std::vector<Space> next;
      for (auto& sp : open)
        for (auto& piece : split(sp, S)) {
          if (piece.dim() == 1) done.push_back(std::move(piece.basis[0]));
          else next.push_back(std::move(piece));
        }
      open = std::move(next);
    }
    return done;
  }

  const Field& field() const { return F_; }

 private:
  // S[k][l] = sum_x c_class(x) [class(x^-1 g_l) = k]
  Matrix random_class_combination() {
    const std::size_t n = G_.class_count();
    const auto& T = G_.table();
    std::uniform_int_distribution<u64> dist(0, F_.p - 1);
    Vec c(n);
    for (auto& v : c) v = dist(rng_);
    Matrix S(n, Vec(n, 0));
    for (std::size_t l = 0; l < n; ++l) {
      const std::uint32_t g = G_.rep(l);
      for (std::uint32_t x = 0; x < T.size(); ++x) {
        const std::uint32_t k = G_.class_of(T.mul(T.inv(x), g));
        S[k][l] += c[G_.class_of(x)];
      }
      for (std::size_t k = 0; k < n; ++k) S[k][l] %= F_.p;
    }
    return S;
  }

  std::vector<Space> split(const Space& sp, const Matrix& S) {
    const std::size_t d = sp.dim();
    Matrix R(d, Vec(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      const Vec sb = mat_vec(F_, S, sp.basis[i]);
      for (std::size_t r = 0; r < d; ++r) R[r][i] = sb[sp.pivots[r]];
    }
    const Vec cp = charpoly(F_, R);
    std::vector<u64> roots;
    std::vector<std::size_t> mult;
    for (u64 x = 0; x < F_.p && roots.size() < d; ++x) {
      if (eval(F_, cp, x) != 0) continue;
      Vec poly = cp;
      std::size_t m = 0;
      for (;;) {
        u64 rem = 0;
        Vec q = deflate(F_, poly, x, rem);
        if (rem != 0) break;
        poly = std::move(q);
        ++m;
      }
      roots.push_back(x);
      mult.push_back(m);
    }
    if (std::accumulate(mult.begin(), mult.end(), std::size_t{0}) != d)
      throw std::logic_error("dixon_table: characteristic polynomial does not split");
    if (roots.size() == 1) return {sp};

    // Minimal polynomial of the diagonalizable R: product of (x - root).
    Vec minpoly{1};
    for (u64 a : roots) {
      Vec next(minpoly.size() + 1, 0);
      for (std::size_t k = 0; k < minpoly.size(); ++k) {
        next[k + 1] = F_.add(next[k + 1], minpoly[k]);
        next[k] = F_.sub(next[k], F_.mul(a, minpoly[k]));
      }
      minpoly = std::move(next);
    }
    const std::size_t D = roots.size();
    const std::size_t t = *std::max_element(mult.begin(), mult.end());

    for (int attempt = 0; attempt < 16; ++attempt) {
      // Krylov sequences of t random vectors.
      std::uniform_int_distribution<u64> dist(0, F_.p - 1);
      std::vector<std::vector<Vec>> kry(t);
      for (auto& seq : kry) {
        Vec v(d);
        for (auto& x : v) x = dist(rng_);
        seq.push_back(std::move(v));
        for (std::size_t k = 1; k < D; ++k) seq.push_back(mat_vec(F_, R, seq.back()));
      }
      std::vector<Space> pieces;
      bool ok = true;
      for (std::size_t r = 0; r < D && ok; ++r) {
        u64 rem = 0;
        const Vec q = deflate(F_, minpoly, roots[r], rem);
        std::vector<Vec> vecs;
        for (const auto& seq : kry) {
          Vec u(d, 0);
          for (std::size_t k = 0; k < q.size(); ++k) {
            if (q[k] == 0) continue;
            for (std::size_t i = 0; i < d; ++i) u[i] = F_.add(u[i], F_.mul(q[k], seq[k][i]));
          }
          vecs.push_back(std::move(u));
        }
        rref(F_, vecs);
        if (vecs.size() != mult[r]) {
          ok = false;
          break;
        }
        Space piece;
        for (const auto& u : vecs) {
          const Vec Ru = mat_vec(F_, R, u);
          for (std::size_t i = 0; i < d; ++i)
            if (Ru[i] != F_.mul(roots[r], u[i])) throw std::logic_error("dixon_table: class matrices not diagonalizable");
          Vec w(sp.basis[0].size(), 0);
          for (std::size_t i = 0; i < d; ++i) {
            if (u[i] == 0) continue;
            for (std::size_t k = 0; k < w.size(); ++k) w[k] = F_.add(w[k], F_.mul(u[i], sp.basis[i][k]));
          }
          piece.basis.push_back(std::move(w));
        }
        piece.pivots = rref(F_, piece.basis);
        pieces.push_back(std::move(piece));
      }
      if (ok) return pieces;
    }
    throw std::runtime_error("dixon_table: eigenspace extraction keeps failing");
  }

  const ClassedGroup& G_;
  Field F_;
  std::mt19937_64 rng_;
};

bool value_less(const ClassFunction& x, const ClassFunction& y) {
  const long long dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy;
  for (std::size_t j = 0; j < x.values().size(); ++j) {
    const auto a = x.value(j).reduced().coeffs();
    const auto b = y.value(j).reduced().coeffs();
    if (a != b) return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
  return false;
}

}  // namespace

std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent) {
  // p > 2 sqrt(order)  <=>  p^2 > 4 order
  std::uint64_t p = exponent + 1;
  while (p * p <= 4 * order || !is_prime(p)) p += exponent;
  return p;
}

CharacterTable dixon_table(const GroupPtr& group, std::uint64_t seed) {
  const auto& G = *group;
  const std::size_t n = G.class_count();
  DixonSolver solver(group, seed);
  const Field& F = solver.field();
  const std::uint32_t e = G.exponent();
  const u64 z = F.pow(primitive_root(F), (F.p - 1) / e);
  const std::vector<Vec> omegas = solver.eigenvectors();
  if (omegas.size() != n) throw std::logic_error("dixon_table: wrong number of characters");

  const u64 order_mod = G.order() % F.p;
  CharacterTable table;
  table.group = group;
  table.prime = F.p;
  for (Vec w : omegas) {
    const u64 s0 = F.inv(w[0]);
    for (auto& v : w) v = F.mul(v, s0);
    u64 norm = 0;
    for (std::size_t j = 0; j < n; ++j)
      norm = F.add(norm, F.mul(F.mul(w[j], w[G.inverse_class(j)]), F.inv(G.class_size(j) % F.p)));
    const u64 deg2 = F.mul(order_mod, F.inv(norm));
    long long deg = 0;
    for (long long d = 1; static_cast<u64>(d * d) <= G.order(); ++d)
      if (F.mul(d, d) == deg2) {
        deg = d;
        break;
      }
    if (deg == 0) throw std::logic_error("dixon_table: degree not found");
    Vec chi(n);
    for (std::size_t j = 0; j < n; ++j)
      chi[j] = F.mul(F.mul(w[j], static_cast<u64>(deg)), F.inv(G.class_size(j) % F.p));

    std::vector<Cyclo> values;
    values.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t o = G.rep_order(j);
      const u64 zo = F.pow(z, e / o);
      const u64 inv_o = F.inv(o);
      Cyclo val(e);
      for (std::uint32_t k = 0; k < o; ++k) {
        u64 m = 0;
        const u64 step = F.pow(zo, (static_cast<u64>(o) - k) % o);  // zo^-k
        u64 pw = 1;
        for (std::uint32_t t = 0; t < o; ++t) {
          m = F.add(m, F.mul(chi[G.power_class(j, t)], pw));
          pw = F.mul(pw, step);
        }
        m = F.mul(m, inv_o);
        if (m > static_cast<u64>(deg)) throw std::logic_error("dixon_table: eigenvalue multiplicity out of range");
        if (m) val.add_term(k * (e / o), static_cast<long long>(m));
      }
      values.push_back(std::move(val));
    }
    table.irreducibles.emplace_back(group, std::move(values));
  }

  const auto trivial = ClassFunction::trivial(group);
  std::sort(table.irreducibles.begin(), table.irreducibles.end(), [&](const auto& x, const auto& y) {
    const bool tx = x == trivial, ty = y == trivial;
    if (tx != ty) return tx;
    return value_less(x, y);
  });
  long long sum = 0;
  for (const auto& chi : table.irreducibles) sum += chi.degree() * chi.degree();
  if (sum != static_cast<long long>(G.order())) throw std::logic_error("dixon_table: degrees do not add up");
  return table;
}

std::string table_csv(const CharacterTable& table) {
  const auto& G = *table.group;
  std::ostringstream out;
  out << "character";
  for (std::size_t j = 0; j < G.class_count(); ++j)
    out << ",\"" << format_mat(G.table().ring(), G.table().element(G.rep(j))) << "\"";
  out << '\n';
  out << "class_size";
  for (std::size_t j = 0; j < G.class_count(); ++j) out << ',' << G.class_size(j);
  out << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << "chi" << i;
    for (std::size_t j = 0; j < G.class_count(); ++j) {
      const auto& v = table[i].value(j);
      const auto c = table[i].shadow()[j];
      out << ',' << v.reduced().str() << ';' << c.real() << ';' << c.imag();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace branchlab
