#pragma once

#include "sublattice.hpp"

#include <cstddef>
#include <vector>

namespace metator {

/// Finite abelian group A/B in invariant-factor form.
///
/// `factors` are the invariant factors (all >= 2, each dividing the next).
/// `generators` holds, column by column, lifts in the ambient lattice of the
/// canonical generators. `coordinate_map` sends coefficients on the basis of
/// the numerator lattice A to factor coordinates (reduce entry i mod factor i).
struct FiniteAbelianPresentation {
  Vector factors;
  Matrix generators;
  Matrix coordinate_map;
  Sublattice numerator;
  Sublattice denominator;

  Int order() const {
    Int o = 1;
    for (const auto& f : factors) o *= f;
    return o;
  }

  bool trivial() const { return factors.empty(); }

  /// Factor coordinates of an element of the numerator lattice.
  Vector project(const Vector& v) const {
    auto c = numerator.coordinates(v);
    if (!c) throw error("element is not in the numerator lattice");
    Vector out = coordinate_map * *c;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_floor(out[i], factors[i]);
    return out;
  }
};

/// Structure of `a / b` for finite-index `b` inside `a`.
inline FiniteAbelianPresentation quotient_structure(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw dimension_error("ambient rank mismatch");
  if (!a.contains(b)) throw error("quotient_structure: denominator is not contained in numerator");
  if (a.rank() != b.rank()) throw error("quotient_structure: denominator has infinite index");
  const std::size_t k = a.rank();
  // Columns of x express the denominator basis in numerator coordinates.
  Matrix x(k, k);
  const auto bvecs = b.basis_vectors();
  for (std::size_t j = 0; j < k; ++j) {
    Vector c = *a.coordinates(bvecs[j]);
    for (std::size_t i = 0; i < k; ++i) x(i, j) = c[i];
  }
  SmithForm s = smith_form(x);
  FiniteAbelianPresentation p;
  p.numerator = a;
  p.denominator = b;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < k; ++i)
    if (s.diagonal[i] != 1) kept.push_back(i);
  p.factors.reserve(kept.size());
  p.generators = Matrix(a.ambient_rank(), kept.size());
  p.coordinate_map = Matrix(kept.size(), k);
  const Matrix abasis = a.basis();
  for (std::size_t t = 0; t < kept.size(); ++t) {
    const std::size_t i = kept[t];
    p.factors.push_back(s.diagonal[i]);
    Vector g = abasis * s.u_inv.column(i);
    for (std::size_t r = 0; r < g.size(); ++r) p.generators(r, t) = g[r];
    for (std::size_t c = 0; c < k; ++c) p.coordinate_map(t, c) = s.u(i, c);
  }
  return p;
}

/// A subgroup of (Z/N)^k, stored as its full preimage lattice in Z^k.
class ResidueSubgroup {
public:
  ResidueSubgroup() = default;

  /// Subgroup generated by the reductions of the given columns mod `modulus`.
  static ResidueSubgroup generated_by(const Matrix& generators, std::size_t ambient,
                                      const Int& modulus) {
    if (modulus <= 0) throw error("modulus must be positive");
    Sublattice base = Sublattice::scaled_full(ambient, modulus);
    if (generators.cols() != 0) base = base + Sublattice::from_generators(ambient, generators);
    return ResidueSubgroup(std::move(base), modulus);
  }

  /// Preimage lattice given directly; it must contain modulus * Z^k.
  static ResidueSubgroup from_lattice(Sublattice lattice, const Int& modulus) {
    if (modulus <= 0) throw error("modulus must be positive");
    if (!lattice.contains(Sublattice::scaled_full(lattice.ambient_rank(), modulus)))
      throw error("lattice does not contain modulus * Z^k");
    return ResidueSubgroup(std::move(lattice), modulus);
  }

  static ResidueSubgroup whole(std::size_t ambient, const Int& modulus) {
    return ResidueSubgroup(Sublattice::full(ambient), modulus);
  }

  const Sublattice& lattice() const { return lattice_; }
  const Int& modulus() const { return modulus_; }
  std::size_t ambient_rank() const { return lattice_.ambient_rank(); }

  Int order() const {
    return ipow(modulus_, lattice_.ambient_rank()) / lattice_.index();
  }

  bool contains(const Vector& v) const { return lattice_.contains(v); }
  bool contains(const ResidueSubgroup& other) const { return lattice_.contains(other.lattice_); }

  /// Canonical generators: Hermite basis vectors reduced mod N, zero ones dropped.
  std::vector<Vector> generators() const {
    std::vector<Vector> out;
    for (auto v : lattice_.basis_vectors()) {
      v = reduce_mod(std::move(v), modulus_);
      bool zero = true;
      for (const auto& x : v) zero = zero && x == 0;
      if (!zero) out.push_back(std::move(v));
    }
    return out;
  }

  /// The abstract group structure of this subgroup.
  FiniteAbelianPresentation structure() const {
    return quotient_structure(lattice_, Sublattice::scaled_full(ambient_rank(), modulus_));
  }

  ResidueSubgroup operator+(const ResidueSubgroup& other) const {
    check_compatible(other);
    return ResidueSubgroup(lattice_ + other.lattice_, modulus_);
  }

  ResidueSubgroup intersect(const ResidueSubgroup& other) const {
    check_compatible(other);
    return ResidueSubgroup(lattice_.intersect(other.lattice_), modulus_);
  }

  friend bool operator==(const ResidueSubgroup& a, const ResidueSubgroup& b) {
    return a.modulus_ == b.modulus_ && a.lattice_ == b.lattice_;
  }

private:
  ResidueSubgroup(Sublattice lattice, Int modulus)
      : lattice_(std::move(lattice)), modulus_(std::move(modulus)) {}

  void check_compatible(const ResidueSubgroup& other) const {
    if (other.modulus_ != modulus_ || other.ambient_rank() != ambient_rank())
      throw dimension_error("residue subgroups live in different groups");
  }

  Sublattice lattice_;
  Int modulus_ = 1;
};

/// Quotient of two nested subgroups of the same (Z/N)^k.
inline FiniteAbelianPresentation quotient_structure(const ResidueSubgroup& a,
                                                    const ResidueSubgroup& b) {
  if (a.modulus() != b.modulus()) throw dimension_error("residue subgroups use different moduli");
  return quotient_structure(a.lattice(), b.lattice());
}

/// Image of a sublattice of Y in Y/NY.
inline ResidueSubgroup image_in_quotient(const Sublattice& s, const Int& modulus) {
  if (modulus <= 0) throw error("modulus must be positive");
  return ResidueSubgroup::generated_by(s.basis(), s.ambient_rank(), modulus);
}

}  // namespace metator
