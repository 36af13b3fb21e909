#include "branchlab/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace branchlab {

namespace {

using Poly = std::vector<long long>;

// Exact quotient of a by monic b.
Poly poly_div_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("poly_div_exact: degree too small");
  Poly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const long long lead = a[k];
    q[k - db] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= lead * b[j];
  }
  for (std::size_t j = 0; j < db; ++j)
    if (a[j] != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, Poly> cache;
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::lock_guard<std::mutex> lock(mu);
  // Build Phi_d for all divisors in increasing order; std::map references are stable.
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    Poly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (std::uint32_t e = 1; e < d; ++e)
      if (d % e == 0) p = poly_div_exact(std::move(p), cache.at(e));
    cache.emplace(d, std::move(p));
  }
  return cache.at(n);
}

Cyclo Cyclo::integer(long long v, std::uint32_t n) {
  Cyclo x(n);
  x.c_[0] = v;
  return x;
}

Cyclo Cyclo::root(std::uint32_t n, std::uint64_t k) {
  Cyclo x(n);
  x.c_[k % n] = 1;
  return x;
}

Cyclo Cyclo::rescaled(std::uint32_t m) const {
  if (m % n_ != 0) throw std::invalid_argument("Cyclo::rescaled: modulus must be a multiple");
  if (m == n_) return *this;
  Cyclo y(m);
  const std::uint32_t f = m / n_;
  for (std::uint32_t j = 0; j < n_; ++j) y.c_[j * f] = c_[j];
  return y;
}

Cyclo& Cyclo::operator+=(const Cyclo& y) {
  if (y.n_ == n_) {
    for (std::uint32_t j = 0; j < n_; ++j) c_[j] += y.c_[j];
    return *this;
  }
  const auto m = static_cast<std::uint32_t>(std::lcm(n_, y.n_));
  *this = rescaled(m);
  const Cyclo yy = y.rescaled(m);
  for (std::uint32_t j = 0; j < m; ++j) c_[j] += yy.c_[j];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& y) { return *this += -y; }

Cyclo& Cyclo::operator*=(long long s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Cyclo operator*(const Cyclo& x, const Cyclo& y) {
  const auto m = static_cast<std::uint32_t>(std::lcm(x.n_, y.n_));
  const std::uint32_t fx = m / x.n_, fy = m / y.n_;
  Cyclo out(m);
  for (std::uint32_t i = 0; i < x.n_; ++i) {
    if (x.c_[i] == 0) continue;
    for (std::uint32_t j = 0; j < y.n_; ++j) {
      if (y.c_[j] == 0) continue;
      out.c_[(i * fx + j * fy) % m] += x.c_[i] * y.c_[j];
    }
  }
  return out;
}

Cyclo Cyclo::conj() const {
  Cyclo y(n_);
  for (std::uint32_t j = 0; j < n_; ++j) y.c_[(n_ - j) % n_] = c_[j];
  return y;
}

Cyclo Cyclo::reduced() const {
  const Poly& phi = cyclotomic_polynomial(n_);
  const std::size_t deg = phi.size() - 1;
  Cyclo y = *this;
  for (std::size_t k = n_; k-- > deg;) {
    const long long lead = y.c_[k];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) y.c_[k - deg + j] -= lead * phi[j];
  }
  return y;
}

bool Cyclo::is_zero() const {
  for (auto v : reduced().c_)
    if (v != 0) return false;
  return true;
}

std::optional<long long> Cyclo::to_integer() const {
  const Cyclo y = reduced();
  for (std::uint32_t j = 1; j < n_; ++j)
    if (y.c_[j] != 0) return std::nullopt;
  return y.c_[0];
}

long long Cyclo::require_integer() const {
  const auto v = to_integer();
  if (!v) throw NotRational("value " + str() + " (modulus " + std::to_string(n_) + ") is not rational");
  return *v;
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (std::uint32_t j = 0; j < n_; ++j) {
    if (c_[j] == 0) continue;
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_);
    z += static_cast<double>(c_[j]) * std::complex<double>(std::cos(t), std::sin(t));
  }
  return z;
}

Cyclo Cyclo::div_exact(long long d) const {
  if (d == 0) throw std::domain_error("Cyclo::div_exact: division by zero");
  Cyclo y = reduced();
  for (auto& v : y.c_) {
    if (v % d != 0) throw std::domain_error("Cyclo::div_exact: " + str() + " not divisible by " + std::to_string(d));
    v /= d;
  }
  return y;
}

std::size_t Cyclo::terms() const {
  std::size_t k = 0;
  for (auto v : c_)
    if (v != 0) ++k;
  return k;
}

std::string Cyclo::str() const {
  std::string s;
  for (std::uint32_t j = 0; j < n_; ++j) {
    const long long v = c_[j];
    if (v == 0) continue;
    if (j == 0) {
      s += std::to_string(v);
      continue;
    }
    if (v < 0) s += '-';
    else if (!s.empty()) s += '+';
    const long long a = v < 0 ? -v : v;
    if (a != 1) s += std::to_string(a) + "*";
    s += "z^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

}  // namespace branchlab
