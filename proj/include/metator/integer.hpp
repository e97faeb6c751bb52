#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace metator {

// Arbitrary precision everywhere; nothing in the lattice layer may wrap.
using Int = boost::multiprecision::cpp_int;
using Vector = std::vector<Int>;

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class dimension_error : public error {
public:
  using error::error;
};

/// Thrown when an enumeration would exceed its configured budget.
class cap_exceeded : public error {
public:
  cap_exceeded(const std::string& what, Int required, Int cap)
      : error(what), required(std::move(required)), cap(std::move(cap)) {}
  Int required;
  Int cap;
};

/// Least nonnegative residue.
inline Int mod_floor(const Int& a, const Int& n) {
  Int r = a % n;
  if (r < 0) r += (n < 0 ? -n : n);
  return r;
}

/// Quotient rounded toward negative infinity.
inline Int div_floor(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

inline Int ipow(Int base, std::uint64_t exp) {
  Int result = 1;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    base *= base;
    exp >>= 1U;
  }
  return result;
}

inline bool fits_int64(const Int& a) {
  return a >= std::numeric_limits<std::int64_t>::min() &&
         a <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Int& a) {
  if (!fits_int64(a)) throw error("integer does not fit in 64 bits: " + a.str());
  return static_cast<std::int64_t>(a);
}

/// Trial-division factorization into (prime, exponent) pairs.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace metator
