#pragma once

#include "integer.hpp"

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace metator {

/// Exact zero test for sums of E-th roots of unity.
///
/// An element a = sum c_k zeta^k of Z[zeta_E] is tested by evaluating it at
/// every primitive E-th root of unity modulo a prime p = 1 (mod E). If a were
/// nonzero, each prime of Z[zeta_E] above p would divide a, so p^phi(E)
/// would divide the nonzero norm of a, whose absolute value is at most
/// (sum |c_k|)^phi(E). Requiring sum |c_k| < p therefore makes the test exact.
class CyclotomicZeroTest {
public:
  explicit CyclotomicZeroTest(std::int64_t order) : order_(order) {
    if (order <= 0) throw error("root of unity order must be positive");
    if (order > (std::int64_t{1} << 24)) throw error("root of unity order too large");
    // Smallest prime p = 1 mod E above 2^30.
    std::int64_t k = ((std::int64_t{1} << 30) / order) + 1;
    for (;; ++k) {
      const std::int64_t cand = k * order + 1;
      if (is_prime(cand)) {
        prime_ = cand;
        break;
      }
    }
    if (prime_ >= (std::int64_t{1} << 31)) throw error("no suitable prime below 2^31");
    const auto ell = factorize(order);
    for (std::int64_t x = 2;; ++x) {
      const std::int64_t w = powmod(x, (prime_ - 1) / order);
      bool primitive = true;
      for (const auto& [l, e] : ell) primitive = primitive && powmod(w, order / l) != 1;
      if (primitive) {
        root_ = w;
        break;
      }
    }
    powers_.resize(static_cast<std::size_t>(order));
    std::int64_t acc = 1;
    for (std::int64_t i = 0; i < order; ++i) {
      powers_[static_cast<std::size_t>(i)] = acc;
      acc = mulmod(acc, root_);
    }
    for (std::int64_t j = 1; j <= order; ++j)
      if (std::gcd(j % order, order) == 1) units_.push_back(j % order);
  }

  std::int64_t order() const { return order_; }
  std::int64_t prime() const { return prime_; }

  /// Sparse element: pairs (exponent, coefficient).
  bool is_zero(const std::vector<std::pair<std::int64_t, std::int64_t>>& terms) const {
    std::int64_t mass = 0;
    for (const auto& [e, c] : terms) mass += c < 0 ? -c : c;
    check_mass(mass);
    if (mass == 0) return true;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> reduced;
    reduced.reserve(terms.size());
    for (const auto& [e, c] : terms)
      if (c != 0)
        reduced.emplace_back(static_cast<std::uint64_t>(mod(e, order_)),
                             static_cast<std::uint64_t>(mod(c, prime_)));
    const auto e = static_cast<std::uint64_t>(order_);
    const auto p = static_cast<std::uint64_t>(prime_);
    for (std::int64_t j : units_) {
      std::uint64_t acc = 0;
      for (const auto& [k, c] : reduced)
        acc = (acc + c * static_cast<std::uint64_t>(powers_[(k * static_cast<std::uint64_t>(j)) % e])) % p;
      if (acc != 0) return false;
    }
    return true;
  }

  /// Dense element: coefficient of zeta^k at position k.
  bool is_zero_dense(const std::vector<std::int64_t>& coeff) const {
    std::vector<std::pair<std::int64_t, std::int64_t>> terms;
    for (std::size_t k = 0; k < coeff.size(); ++k)
      if (coeff[k] != 0) terms.emplace_back(static_cast<std::int64_t>(k), coeff[k]);
    return is_zero(terms);
  }

private:
  void check_mass(std::int64_t mass) const {
    if (mass >= prime_) throw error("cyclotomic coefficient mass exceeds the exactness bound");
  }

  static std::int64_t mod(std::int64_t a, std::int64_t n) {
    a %= n;
    return a < 0 ? a + n : a;
  }

  std::int64_t mulmod(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % prime_);
  }

  std::int64_t powmod(std::int64_t b, std::int64_t e) const {
    std::int64_t r = 1;
    b %= prime_;
    while (e > 0) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  }

  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
      if (n % p == 0) return false;
    return true;
  }

  std::int64_t order_;
  std::int64_t prime_ = 0;
  std::int64_t root_ = 0;
  std::vector<std::int64_t> powers_;
  std::vector<std::int64_t> units_;
};

}  // namespace metator
