#pragma once

#include "normal_form.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace metator {

/// A Z-submodule of Z^ambient, stored by its canonical Hermite basis.
class Sublattice {
public:
  Sublattice() = default;

  /// Lattice spanned by the columns of `generators` (ambient x k).
  static Sublattice from_generators(std::size_t ambient, const Matrix& generators) {
    if (generators.cols() != 0 && generators.rows() != ambient)
      throw dimension_error("generator matrix does not match ambient rank");
    return from_rows(ambient, generators.transpose());
  }

  static Sublattice from_vectors(std::size_t ambient, const std::vector<Vector>& generators) {
    if (generators.empty()) return zero(ambient);
    return from_rows(ambient, Matrix::from_rows(generators, ambient));
  }

  static Sublattice full(std::size_t ambient) {
    return from_rows(ambient, Matrix::identity(ambient));
  }

  static Sublattice zero(std::size_t ambient) {
    Sublattice s;
    s.ambient_ = ambient;
    s.echelon_ = Matrix(0, ambient);
    return s;
  }

  /// N * Z^ambient.
  static Sublattice scaled_full(std::size_t ambient, const Int& n) {
    return from_rows(ambient, Matrix::identity(ambient) * n);
  }

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return echelon_.rows(); }

  /// Basis vectors as the columns of an ambient x rank matrix.
  Matrix basis() const { return echelon_.transpose(); }
  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < echelon_.rows(); ++i) out.push_back(echelon_.row(i));
    return out;
  }
  const Matrix& echelon() const { return echelon_; }

  /// Coefficients of `v` on the basis, or nullopt when v is not in the lattice.
  std::optional<Vector> coordinates(const Vector& v) const {
    if (v.size() != ambient_) throw dimension_error("vector does not match ambient rank");
    Vector rest = v;
    Vector coeff(rank());
    std::size_t col = 0;
    for (std::size_t i = 0; i < echelon_.rows(); ++i) {
      const std::size_t p = pivots_[i];
      for (; col < p; ++col)
        if (rest[col] != 0) return std::nullopt;
      const Int& piv = echelon_(i, p);
      if (rest[p] % piv != 0) return std::nullopt;
      coeff[i] = rest[p] / piv;
      for (std::size_t c = p; c < ambient_; ++c) rest[c] -= coeff[i] * echelon_(i, c);
      col = p + 1;
    }
    for (; col < ambient_; ++col)
      if (rest[col] != 0) return std::nullopt;
    return coeff;
  }

  bool contains(const Vector& v) const { return coordinates(v).has_value(); }

  bool contains(const Sublattice& other) const {
    if (other.ambient_ != ambient_) throw dimension_error("ambient rank mismatch");
    for (std::size_t i = 0; i < other.echelon_.rows(); ++i)
      if (!contains(other.echelon_.row(i))) return false;
    return true;
  }

  /// Index in Z^ambient; only defined for full-rank lattices.
  Int index() const {
    if (rank() != ambient_) throw error("index of a lattice that is not of full rank");
    Int det = 1;
    for (std::size_t i = 0; i < rank(); ++i) det *= echelon_(i, i);
    return det;
  }

  Sublattice operator+(const Sublattice& other) const {
    if (other.ambient_ != ambient_) throw dimension_error("ambient rank mismatch");
    std::vector<Vector> gens = basis_vectors();
    for (auto& v : other.basis_vectors()) gens.push_back(std::move(v));
    return from_vectors(ambient_, gens);
  }

  Sublattice intersect(const Sublattice& other) const {
    if (other.ambient_ != ambient_) throw dimension_error("ambient rank mismatch");
    if (rank() == 0 || other.rank() == 0) return zero(ambient_);
    // x = A u = B v  <=>  [A | -B] (u, v) = 0.
    Matrix a = basis();
    Matrix b = other.basis() * Int(-1);
    Matrix k = integer_kernel(Matrix::hstack(a, b));
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < k.cols(); ++j) {
      Vector u(rank());
      for (std::size_t i = 0; i < rank(); ++i) u[i] = k(i, j);
      gens.push_back(a * u);
    }
    return from_vectors(ambient_, gens);
  }

  /// Image under a linear map given by a square or rectangular matrix.
  Sublattice image(const Matrix& map) const {
    if (map.cols() != ambient_) throw dimension_error("map does not match ambient rank");
    if (rank() == 0) return zero(map.rows());
    return from_generators(map.rows(), map * basis());
  }

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_ == b.ambient_ && a.echelon_ == b.echelon_;
  }

private:
  static Sublattice from_rows(std::size_t ambient, Matrix rows) {
    if (rows.cols() != ambient) throw dimension_error("generator length mismatch");
    Sublattice s;
    s.ambient_ = ambient;
    s.echelon_ = hermite_rows(std::move(rows));
    s.pivots_ = pivot_columns(s.echelon_);
    return s;
  }

  std::size_t ambient_ = 0;
  Matrix echelon_;
  std::vector<std::size_t> pivots_;
};

/// { x in Z^cols : map x in target }.
inline Sublattice preimage(const Matrix& map, const Sublattice& target) {
  if (map.rows() != target.ambient_rank()) throw dimension_error("map does not land in target");
  const std::size_t c = map.cols();
  if (target.rank() == 0) return Sublattice::from_generators(c, integer_kernel(map));
  const Matrix k = integer_kernel(Matrix::hstack(map, target.basis() * Int(-1)));
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < k.cols(); ++j) {
    Vector x(c);
    for (std::size_t i = 0; i < c; ++i) x[i] = k(i, j);
    gens.push_back(std::move(x));
  }
  return Sublattice::from_vectors(c, gens);
}

/// a + b inside Z^(m + k), with a in the first m coordinates.
inline Sublattice direct_sum(const Sublattice& a, const Sublattice& b) {
  const std::size_t m = a.ambient_rank();
  const std::size_t k = b.ambient_rank();
  std::vector<Vector> gens;
  for (const auto& v : a.basis_vectors()) {
    Vector w(m + k);
    for (std::size_t i = 0; i < m; ++i) w[i] = v[i];
    gens.push_back(std::move(w));
  }
  for (const auto& v : b.basis_vectors()) {
    Vector w(m + k);
    for (std::size_t i = 0; i < k; ++i) w[m + i] = v[i];
    gens.push_back(std::move(w));
  }
  return Sublattice::from_vectors(m + k, gens);
}

}  // namespace metator
