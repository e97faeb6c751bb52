#pragma once

#include "lattice.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace metator {

inline constexpr std::int64_t kDefaultRealCap = 10'000'000;

/// Double cover (n = 2) of a real torus; gamma is complex conjugation.
class RealInstance {
public:
  RealInstance(GammaLattice lattice, QuadraticForm form)
      : lattice_(std::move(lattice)), form_(std::move(form)) {
    if (lattice_.d() != 1 && lattice_.d() != 2) throw error("real tori need d in {1, 2}");
    if (lattice_.rank() != form_.rank()) throw dimension_error("form and lattice ranks differ");
    if (!check_gamma_invariance(lattice_, form_)) throw error("quadratic form is not gamma-invariant");
  }

  const GammaLattice& lattice() const { return lattice_; }
  const QuadraticForm& form() const { return form_; }
  std::size_t rank() const { return lattice_.rank(); }
  static Int n() { return 2; }

  Sublattice fixed() const { return invariant_sublattice(lattice_); }
  Sublattice sharp() const { return sharp_sublattice(form_, n(), Sublattice::full(rank())); }
  Sublattice gamma_sharp() const { return sharp_sublattice(form_, n(), fixed()); }
  /// (1 + gamma) Y.
  Sublattice norms() const {
    return Sublattice::full(rank()).image(Matrix::identity(rank()) + lattice_.gamma());
  }

private:
  GammaLattice lattice_;
  QuadraticForm form_;
};

/// pi_0 of the real points, Y^Gamma / (1 + gamma) Y, written in coordinates
/// on a basis V of Y^Gamma.
struct ComponentGroup {
  Matrix fixed_basis;
  /// (1 + gamma) Y + 2 Y^Gamma in V-coordinates: the kernel of Ybar^Gamma -> pi_0.
  Sublattice kernel;
  FiniteAbelianPresentation structure;

  std::size_t fixed_rank() const { return fixed_basis.cols(); }

  Sublattice coordinates_of(const Sublattice& s) const {
    const Sublattice v = Sublattice::from_generators(fixed_basis.rows(), fixed_basis);
    std::vector<Vector> coords;
    for (const auto& b : s.basis_vectors()) {
      auto c = v.coordinates(b);
      if (!c) throw error("sublattice is not contained in the fixed lattice");
      coords.push_back(std::move(*c));
    }
    return Sublattice::from_vectors(fixed_rank(), coords);
  }

  /// Image of a sublattice of Y^Gamma in pi_0, as its preimage in V-coordinates.
  Sublattice image_of(const Sublattice& s) const { return coordinates_of(s) + kernel; }
};

inline ComponentGroup component_group(const RealInstance& inst) {
  ComponentGroup g;
  g.fixed_basis = inst.fixed().basis();
  const std::size_t k = g.fixed_rank();
  g.kernel = g.coordinates_of(inst.norms()) + Sublattice::scaled_full(k, 2);
  g.structure = quotient_structure(Sublattice::full(k), g.kernel);
  return g;
}

/// (-1)^{B(y, y')} for gamma-fixed lifts; returns +1 or -1.
inline int real_commutator(const Vector& y, const Vector& y2, const RealInstance& inst) {
  const Matrix delta = operator_matrix(GammaOperator::delta, inst.lattice());
  for (const auto* v : {&y, &y2}) {
    if (v->size() != inst.rank()) throw dimension_error("point does not match the lattice rank");
    for (const auto& x : delta * *v)
      if (x != 0) throw error("point is not gamma-fixed");
  }
  return mod_floor(inst.form().pair(y, y2), 2) == 0 ? 1 : -1;
}

struct RealCenterReport {
  ComponentGroup components;
  /// Preimages in V-coordinates of the center image, by enumeration and by lattice.
  Sublattice oracle;
  Sublattice lattice;
  bool agrees = false;
  bool kernel_in_radical = false;
  bool radical_codimension_even = false;
  std::int64_t enumerated = 0;

  bool ok() const { return agrees && kernel_in_radical && radical_codimension_even; }
};

/// Z^dag image in pi_0, both as the radical of (-1)^B on Ybar^Gamma pushed
/// forward and as the image of Y^{Gamma #} cap Y^Gamma.
inline RealCenterReport real_center(const RealInstance& inst, std::int64_t cap = kDefaultRealCap) {
  RealCenterReport r;
  r.components = component_group(inst);
  const ComponentGroup& pc = r.components;
  const std::size_t k = pc.fixed_rank();
  if (k >= 62 || (std::int64_t{1} << k) > cap)
    throw cap_exceeded("real center enumeration needs 2^" + std::to_string(k) + " elements",
                       Int(1) << k, cap);
  // Gram matrix of B on V, mod 2.
  const Matrix gram = pc.fixed_basis.transpose() * inst.form().bilinear() * pc.fixed_basis;
  std::vector<std::uint64_t> rows(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (mod_floor(gram(i, j), 2) != 0) rows[i] |= std::uint64_t{1} << j;
  std::vector<Vector> radical;
  const std::uint64_t total = std::uint64_t{1} << k;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < total; ++x) {
    bool central = true;
    for (std::size_t i = 0; i < k && central; ++i)
      central = (__builtin_popcountll(rows[i] & x) & 1) == 0;
    if (!central) continue;
    ++count;
    Vector v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = (x >> i) & 1U;
    radical.push_back(std::move(v));
  }
  r.enumerated = static_cast<std::int64_t>(total);
  const Sublattice rad = Sublattice::from_vectors(k, radical) + Sublattice::scaled_full(k, 2);
  r.oracle = rad + pc.kernel;
  r.lattice = pc.image_of(inst.gamma_sharp().intersect(inst.fixed()));
  r.agrees = r.oracle == r.lattice;
  r.kernel_in_radical = rad.contains(pc.kernel);
  // |Ybar^Gamma / radical| = 2^k / count must be an even power of two.
  std::uint64_t codim = 0;
  for (std::uint64_t c = total / count; c > 1; c >>= 1) ++codim;
  r.radical_codimension_even = codim % 2 == 0 && (count << codim) == total;
  return r;
}

struct RealPacketReport {
  FiniteAbelianPresentation pi0;
  FiniteAbelianPresentation center_image;
  FiniteAbelianPresentation isogeny_image;
  FiniteAbelianPresentation packet;
  bool isogeny_in_center = false;
  bool orders_multiply = false;

  bool ok() const { return isogeny_in_center && orders_multiply; }
};

/// iota-image = image of Y^{# Gamma}; P^dag = image of Y^{Gamma # Gamma} over it.
inline RealPacketReport real_isogeny_image_and_packet(const RealInstance& inst) {
  const ComponentGroup pc = component_group(inst);
  const std::size_t k = pc.fixed_rank();
  const Sublattice center = pc.image_of(inst.gamma_sharp().intersect(inst.fixed()));
  const Sublattice iota = pc.image_of(inst.sharp().intersect(inst.fixed()));
  RealPacketReport r;
  r.pi0 = pc.structure;
  r.isogeny_in_center = center.contains(iota) && Sublattice::full(k).contains(center);
  r.center_image = quotient_structure(center, pc.kernel);
  r.isogeny_image = quotient_structure(iota, pc.kernel);
  if (!r.isogeny_in_center) return r;
  r.packet = quotient_structure(center, iota);
  r.orders_multiply = r.center_image.order() == r.isogeny_image.order() * r.packet.order();
  return r;
}

}  // namespace metator
