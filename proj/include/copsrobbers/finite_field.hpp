#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "copsrobbers/errors.hpp"

namespace copsrobbers {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// Legendre symbol (a | p) for an odd prime p: 1, -1, or 0.
inline int legendre(std::int64_t a, std::int64_t p) {
  auto r = ((a % p) + p) % p;
  if (r == 0) return 0;
  auto e = pow_mod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>((p - 1) / 2), static_cast<std::uint64_t>(p));
  return e == 1 ? 1 : -1;
}

// GF(p^k) with elements encoded as integers 0..q-1 (base-p coefficient digits)
// and multiplication through a full table. Meant for q up to a few hundred.
class FiniteField {
 public:
  explicit FiniteField(int q) : q_(q) {
    if (q < 2) throw InvalidInput("field order must be >= 2");
    int p = 2;
    while (q % p != 0) ++p;
    int k = 0;
    for (int m = q; m > 1; m /= p) {
      if (m % p != 0) throw InvalidInput("field order " + std::to_string(q) + " is not a prime power");
      ++k;
    }
    p_ = p;
    k_ = k;
    auto modulus = find_irreducible();
    add_.assign(static_cast<std::size_t>(q * q), 0);
    mul_.assign(static_cast<std::size_t>(q * q), 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[idx(a, b)] = encode(poly_add(decode(a), decode(b)));
        mul_[idx(a, b)] = encode(poly_mod(poly_mul(decode(a), decode(b)), modulus));
      }
  }

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }

 private:
  using Poly = std::vector<int>;  // coefficients, low degree first

  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * q_ + b); }

  Poly decode(int a) const {
    Poly c(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i, a /= p_) c[static_cast<std::size_t>(i)] = a % p_;
    return c;
  }

  int encode(const Poly& c) const {
    int a = 0;
    for (int i = k_ - 1; i >= 0; --i) a = a * p_ + (static_cast<std::size_t>(i) < c.size() ? c[static_cast<std::size_t>(i)] : 0);
    return a;
  }

  Poly poly_add(const Poly& a, const Poly& b) const {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = ((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0)) % p_;
    return c;
  }

  Poly poly_mul(const Poly& a, const Poly& b) const {
    Poly c(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
    return c;
  }

  // Remainder modulo a monic polynomial.
  Poly poly_mod(Poly a, const Poly& m) const {
    const std::size_t deg = m.size() - 1;
    for (std::size_t i = a.size(); i-- > deg;) {
      int coef = a[i];
      if (coef == 0) continue;
      for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] = ((a[i - deg + j] - coef * m[j]) % p_ + p_) % p_;
    }
    a.resize(deg);
    return a;
  }

  bool divides(const Poly& d, const Poly& a) const {
    auto r = poly_mod(a, d);
    for (int c : r)
      if (c != 0) return false;
    return true;
  }

  // Smallest monic irreducible polynomial of degree k (trial division).
  Poly find_irreducible() const {
    if (k_ == 1) return {0, 1};
    int count = 1;
    for (int i = 0; i < k_; ++i) count *= p_;
    for (int low = 0; low < count; ++low) {
      Poly m(static_cast<std::size_t>(k_) + 1, 0);
      int x = low;
      for (int i = 0; i < k_; ++i, x /= p_) m[static_cast<std::size_t>(i)] = x % p_;
      m[static_cast<std::size_t>(k_)] = 1;
      bool irreducible = true;
      for (int deg = 1; deg <= k_ / 2 && irreducible; ++deg) {
        int dcount = 1;
        for (int i = 0; i < deg; ++i) dcount *= p_;
        for (int dl = 0; dl < dcount && irreducible; ++dl) {
          Poly d(static_cast<std::size_t>(deg) + 1, 0);
          int y = dl;
          for (int i = 0; i < deg; ++i, y /= p_) d[static_cast<std::size_t>(i)] = y % p_;
          d[static_cast<std::size_t>(deg)] = 1;
          if (divides(d, m)) irreducible = false;
        }
      }
      if (irreducible) return m;
    }
    throw InternalError("no irreducible polynomial found");
  }

  int q_;
  int p_ = 0;
  int k_ = 0;
  std::vector<int> add_;
  std::vector<int> mul_;
};

}  // namespace copsrobbers
