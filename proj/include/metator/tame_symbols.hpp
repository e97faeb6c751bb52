#pragma once

#include "integer.hpp"

#include <cstdint>

namespace metator {

/// The two standard generators: a uniformizer and the Teichmueller generator
/// of the residue field of L.
enum class Generator { pi, theta };

/// Tame symbol data for residue cardinality q, degree d and cover degree n.
///
/// Roots of unity are written additively as exponents of zeta_L, a fixed
/// primitive (q^d - 1)-th root of unity with (pi, theta) = zeta_L.
class SymbolTable {
public:
  SymbolTable() = default;

  SymbolTable(std::int64_t q, std::uint64_t d, std::int64_t n) : q_(q), d_(d), n_(n) {
    if (q < 2 || q > (std::int64_t{1} << 31)) throw error("q must lie in [2, 2^31]");
    const auto fac = factorize(q);
    if (fac.size() != 1) throw error("q is not a prime power");
    p_ = fac.front().first;
    if (d == 0) throw error("d must be positive");
    if (n <= 0) throw error("n must be positive");
    if ((q - 1) % n != 0) throw error("n does not divide q - 1");
    big_n_ = ipow(Int(q), d) - 1;
    m_ = (q - 1) / n;
    r_ = big_n_ / (q - 1);
    h_ = (q % 2 == 1) ? Int(big_n_ / 2) : Int(0);
  }

  std::int64_t q() const { return q_; }
  std::uint64_t d() const { return d_; }
  std::int64_t n() const { return n_; }
  std::int64_t p() const { return p_; }
  /// q^d - 1, the order of zeta_L.
  const Int& modulus() const { return big_n_; }
  std::int64_t m() const { return m_; }
  const Int& r() const { return r_; }
  /// Exponent of (pi, pi): N/2 for odd q, 0 for even q.
  const Int& h() const { return h_; }

private:
  std::int64_t q_ = 2;
  std::uint64_t d_ = 1;
  std::int64_t n_ = 1;
  std::int64_t p_ = 2;
  Int big_n_ = 1;
  std::int64_t m_ = 1;
  Int r_ = 1;
  Int h_ = 0;
};

/// Exponent of (a, b)_{L, q^d - 1} in Z/N.
inline Int generator_symbol_exponent(Generator a, Generator b, const SymbolTable& t) {
  if (a == Generator::pi && b == Generator::pi) return t.h();
  if (a == Generator::pi && b == Generator::theta) return mod_floor(1, t.modulus());
  if (a == Generator::theta && b == Generator::pi) return mod_floor(-1, t.modulus());
  return 0;
}

/// An element pi^a theta^b of F^x / F^x(q-1).
struct SplitUnit {
  Int a;
  Int b;
};

/// Exponent of (u, v)_{F, q-1} for split (d = 1) tables, in Z/(q - 1).
inline Int split_symbol_exponent(const SplitUnit& u, const SplitUnit& v, const SymbolTable& t) {
  if (t.d() != 1) throw error("split symbols need d = 1");
  const Int e = u.a * v.a * generator_symbol_exponent(Generator::pi, Generator::pi, t) +
                u.a * v.b * generator_symbol_exponent(Generator::pi, Generator::theta, t) +
                u.b * v.a * generator_symbol_exponent(Generator::theta, Generator::pi, t) +
                u.b * v.b * generator_symbol_exponent(Generator::theta, Generator::theta, t);
  return mod_floor(e, t.modulus());
}

}  // namespace metator
