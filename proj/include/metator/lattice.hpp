#pragma once

#include "finite_abelian.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace metator {

/// A free Z-module of rank `rank` with the generator of a cyclic group of
/// order `d` acting by the integer matrix `gamma`.
class GammaLattice {
public:
  GammaLattice() = default;

  GammaLattice(Matrix gamma, std::uint64_t d) : gamma_(std::move(gamma)), d_(d) {
    if (!gamma_.is_square() || gamma_.rows() == 0)
      throw dimension_error("gamma must be a non-empty square matrix");
    if (d_ == 0) throw error("group order d must be positive");
    if (!(gamma_.pow(d_) == Matrix::identity(rank())))
      throw error("gamma^d is not the identity");
    const Int det = determinant(gamma_);
    if (det != 1 && det != -1) throw error("gamma is not unimodular");
  }

  std::size_t rank() const { return gamma_.rows(); }
  std::uint64_t d() const { return d_; }
  const Matrix& gamma() const { return gamma_; }

  /// Smallest e >= 1 with gamma^e = 1; divides d.
  std::uint64_t true_order() const {
    Matrix p = gamma_;
    for (std::uint64_t e = 1; e <= d_; ++e) {
      if (p == Matrix::identity(rank())) return e;
      p = p * gamma_;
    }
    return d_;
  }

  std::vector<std::string> warnings() const {
    std::vector<std::string> w;
    if (true_order() != d_)
      w.push_back("gamma has order " + std::to_string(true_order()) + " strictly dividing d = " +
                  std::to_string(d_));
    return w;
  }

private:
  Matrix gamma_;
  std::uint64_t d_ = 1;
};

/// Integer quadratic form Q(y) = y^T M y with M upper triangular.
class QuadraticForm {
public:
  QuadraticForm() = default;

  explicit QuadraticForm(Matrix upper) : upper_(std::move(upper)) {
    if (!upper_.is_square()) throw dimension_error("quadratic form matrix must be square");
    for (std::size_t i = 0; i < upper_.rows(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (upper_(i, j) != 0) throw error("quadratic form matrix must be upper triangular");
  }

  /// Upper-triangular representative of y -> y^T m y for an arbitrary square m.
  static QuadraticForm from_full(const Matrix& m) {
    if (!m.is_square()) throw dimension_error("quadratic form matrix must be square");
    Matrix u(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      u(i, i) = m(i, i);
      for (std::size_t j = i + 1; j < m.cols(); ++j) u(i, j) = m(i, j) + m(j, i);
    }
    return QuadraticForm(std::move(u));
  }

  std::size_t rank() const { return upper_.rows(); }
  const Matrix& upper() const { return upper_; }

  Int operator()(const Vector& y) const { return dot(y, upper_ * y); }

  /// B(y1, y2) = Q(y1 + y2) - Q(y1) - Q(y2), i.e. the Gram matrix M + M^T.
  Matrix bilinear() const { return upper_ + upper_.transpose(); }

  Int pair(const Vector& a, const Vector& b) const { return dot(a, bilinear() * b); }

private:
  Matrix upper_;
};

inline Matrix bilinear_form(const QuadraticForm& qf) { return qf.bilinear(); }

inline bool check_gamma_invariance(const GammaLattice& lat, const QuadraticForm& qf) {
  if (lat.rank() != qf.rank()) throw dimension_error("lattice and form have different ranks");
  const Matrix& g = lat.gamma();
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    const Vector e = unit_vector(lat.rank(), i);
    if (qf(g * e) != qf(e)) return false;
  }
  const Matrix b = qf.bilinear();
  return g.transpose() * b * g == b;
}

enum class GammaOperator { trace, twisted_trace, delta, twisted_delta };

/// Matrix of Tr = sum gamma^i, Tr_q = sum q^i gamma^i, delta = gamma - 1 or
/// delta_q = q gamma - 1.
inline Matrix operator_matrix(GammaOperator op, const GammaLattice& lat, const Int& q = 1) {
  const std::size_t r = lat.rank();
  const Matrix id = Matrix::identity(r);
  switch (op) {
    case GammaOperator::trace:
    case GammaOperator::twisted_trace: {
      const Int step = op == GammaOperator::trace ? Int(1) : q;
      Matrix sum(r, r);
      Matrix power = id;
      Int coeff = 1;
      for (std::uint64_t i = 0; i < lat.d(); ++i) {
        sum += power * coeff;
        power = power * lat.gamma();
        coeff *= step;
      }
      return sum;
    }
    case GammaOperator::delta:
      return lat.gamma() - id;
    case GammaOperator::twisted_delta:
      return lat.gamma() * q - id;
  }
  throw error("unknown operator");
}

inline Vector apply_operator(GammaOperator op, const GammaLattice& lat, const Int& q,
                             const Vector& v) {
  return operator_matrix(op, lat, q) * v;
}

inline Sublattice apply_operator(GammaOperator op, const GammaLattice& lat, const Int& q,
                                 const Sublattice& s) {
  return s.image(operator_matrix(op, lat, q));
}

/// Y^Gamma = ker(gamma - 1).
inline Sublattice invariant_sublattice(const GammaLattice& lat) {
  return Sublattice::from_generators(lat.rank(),
                                     integer_kernel(operator_matrix(GammaOperator::delta, lat)));
}

/// W^# = { y in Y : B(y, w) in nZ for every w in W }.
inline Sublattice sharp_sublattice(const QuadraticForm& qf, const Int& n, const Sublattice& w) {
  if (n <= 0) throw error("n must be positive");
  if (w.ambient_rank() != qf.rank()) throw dimension_error("W does not live in Y");
  if (w.rank() == 0) return Sublattice::full(qf.rank());
  // Rows of w^T B are the functionals y -> B(w_j, y).
  const Matrix conditions = w.basis().transpose() * qf.bilinear();
  return Sublattice::from_generators(qf.rank(), kernel_mod(conditions, n));
}

/// Elementary divisors of B and the exponents e_j = n / gcd(d_j, n).
///
/// With u B v = D from the Smith form, B(y1, y2) = D(alpha y1, beta y2) for
/// alpha = u^{-T} and beta = v^{-1}, so Y^# = alpha^{-1}(e_1 Z + ... + e_r Z).
struct SmithDivisors {
  Vector d;
  Vector e;
  Matrix alpha;
  Matrix beta;
  Matrix alpha_inverse;

  /// alpha^{-1}(e_1 Z + ... + e_r Z).
  Sublattice sharp_prediction() const {
    return Sublattice::from_generators(alpha_inverse.rows(), alpha_inverse * Matrix::diagonal(e));
  }
};

inline SmithDivisors smith_elementary_divisors(const Matrix& b, const Int& n) {
  if (!b.is_square()) throw dimension_error("Gram matrix must be square");
  if (n <= 0) throw error("n must be positive");
  SmithForm s = smith_form(b);
  SmithDivisors out;
  out.d = s.diagonal;
  for (const auto& dj : out.d) out.e.push_back(n / gcd(dj, n));
  out.alpha = s.u_inv.transpose();
  out.beta = s.v_inv;
  out.alpha_inverse = s.u.transpose();
  return out;
}

}  // namespace metator
