#pragma once

#include "heisenberg.hpp"
#include "lattice.hpp"
#include "tame_symbols.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace metator {

inline constexpr std::int64_t kDefaultCenterCap = 10'000'000;

/// Tame cover of an unramified torus: lattice, Gamma-invariant form and
/// symbol data for (q, d, n).
class UnramifiedInstance {
public:
  UnramifiedInstance(GammaLattice lattice, QuadraticForm form, std::int64_t q, std::int64_t n)
      : lattice_(std::move(lattice)), form_(std::move(form)), table_(q, lattice_.d(), n) {
    if (lattice_.rank() != form_.rank()) throw dimension_error("form and lattice ranks differ");
    if (!check_gamma_invariance(lattice_, form_)) throw error("quadratic form is not gamma-invariant");
  }

  const GammaLattice& lattice() const { return lattice_; }
  const QuadraticForm& form() const { return form_; }
  const SymbolTable& table() const { return table_; }
  std::size_t rank() const { return lattice_.rank(); }
  const Int& modulus() const { return table_.modulus(); }
  Int q() const { return Int(table_.q()); }
  Int n() const { return Int(table_.n()); }

  Matrix bilinear() const { return form_.bilinear(); }
  Matrix twisted_trace() const { return operator_matrix(GammaOperator::twisted_trace, lattice_, q()); }
  Matrix twisted_delta() const { return operator_matrix(GammaOperator::twisted_delta, lattice_, q()); }

  Sublattice fixed() const { return invariant_sublattice(lattice_); }
  /// Y^#.
  Sublattice sharp() const { return sharp_sublattice(form_, n(), Sublattice::full(rank())); }
  /// Y^{Gamma #}.
  Sublattice gamma_sharp() const { return sharp_sublattice(form_, n(), fixed()); }
  /// Y^{# Gamma}.
  Sublattice sharp_fixed() const { return sharp().intersect(fixed()); }

private:
  GammaLattice lattice_;
  QuadraticForm form_;
  SymbolTable table_;
};

/// An F-rational point y1(pi) ybar2(theta_L), modulo the pro-p part.
/// y1 is in Y (and gamma-fixed); y2bar is any lift of an element of Ybar^{Gamma,q}.
struct TorusPointModel {
  Vector y1;
  Vector y2bar;
};

/// Ybar^{Gamma,q}: the kernel of q gamma - 1 on Y / NY.
inline ResidueSubgroup residual_fixed_points(const UnramifiedInstance& inst) {
  const Matrix k = kernel_mod(inst.twisted_delta(), inst.modulus());
  return ResidueSubgroup::generated_by(k, inst.rank(), inst.modulus());
}

inline void check_point(const TorusPointModel& t, const UnramifiedInstance& inst) {
  if (t.y1.size() != inst.rank() || t.y2bar.size() != inst.rank())
    throw dimension_error("torus point does not match the lattice rank");
  for (const auto& x : operator_matrix(GammaOperator::delta, inst.lattice()) * t.y1)
    if (x != 0) throw error("y1 is not gamma-fixed");
  for (const auto& x : inst.twisted_delta() * t.y2bar)
    if (mod_floor(x, inst.modulus()) != 0) throw error("y2bar is not fixed by q gamma");
}

/// Exponent of C_L(t, t') as a power of zeta_L, expanded over the two
/// generators. No validation; used in inner loops.
inline Int commutator_exponent_raw(const Vector& y1, const Vector& y2, const Vector& z1,
                                   const Vector& z2, const Matrix& b, const SymbolTable& table) {
  using G = Generator;
  const Int e = dot(y1, b * z1) * generator_symbol_exponent(G::pi, G::pi, table) +
                dot(y1, b * z2) * generator_symbol_exponent(G::pi, G::theta, table) +
                dot(y2, b * z1) * generator_symbol_exponent(G::theta, G::pi, table) +
                dot(y2, b * z2) * generator_symbol_exponent(G::theta, G::theta, table);
  return mod_floor(e * table.m(), table.modulus());
}

inline Int commutator_exponent(const TorusPointModel& t, const TorusPointModel& u,
                               const UnramifiedInstance& inst) {
  check_point(t, inst);
  check_point(u, inst);
  return commutator_exponent_raw(t.y1, t.y2bar, u.y1, u.y2bar, inst.bilinear(), inst.table());
}

/// The finite group G = Y^Gamma / N Y^Gamma x Ybar^{Gamma,q}.
///
/// Elements are vectors in (Z/N)^(k + rk): k coefficients on the basis V of
/// Y^Gamma, followed by a lift of ybar2.
class TorusModel {
public:
  explicit TorusModel(const UnramifiedInstance& inst)
      : inst_(&inst),
        fixed_basis_(inst.fixed().basis()),
        fixed_q_(residual_fixed_points(inst)),
        bilinear_(inst.bilinear()) {
    group_ = ResidueSubgroup::from_lattice(
        direct_sum(Sublattice::full(fixed_rank()), fixed_q_.lattice()), inst.modulus());
  }

  const UnramifiedInstance& instance() const { return *inst_; }
  std::size_t fixed_rank() const { return fixed_basis_.cols(); }
  std::size_t ambient() const { return fixed_rank() + inst_->rank(); }
  const Int& modulus() const { return inst_->modulus(); }
  /// Columns form a basis of Y^Gamma.
  const Matrix& fixed_basis() const { return fixed_basis_; }
  const ResidueSubgroup& residual_fixed() const { return fixed_q_; }
  const ResidueSubgroup& group() const { return group_; }

  TorusPointModel point(const Vector& g) const {
    if (g.size() != ambient()) throw dimension_error("element does not live in G");
    const std::size_t k = fixed_rank();
    Vector x(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(k));
    Vector y2(g.begin() + static_cast<std::ptrdiff_t>(k), g.end());
    TorusPointModel t;
    t.y1 = k == 0 ? Vector(inst_->rank()) : fixed_basis_ * x;
    t.y2bar = std::move(y2);
    return t;
  }

  Int pairing(const Vector& g, const Vector& h) const {
    const TorusPointModel a = point(g);
    const TorusPointModel b = point(h);
    return commutator_exponent_raw(a.y1, a.y2bar, b.y1, b.y2bar, bilinear_, inst_->table());
  }

  /// Generators of G: unit vectors for the pi-part, Hermite generators of
  /// Ybar^{Gamma,q} for the theta-part.
  std::vector<Vector> generators() const {
    std::vector<Vector> out;
    const std::size_t k = fixed_rank();
    for (std::size_t i = 0; i < k; ++i) out.push_back(unit_vector(ambient(), i));
    for (const auto& v : fixed_q_.generators()) out.push_back(embed_theta(v));
    return out;
  }

  /// Lift of a V-coordinate subgroup and a Ybar subgroup to G.
  ResidueSubgroup product(const Sublattice& pi_part, const Sublattice& theta_part) const {
    const Int& n = modulus();
    return ResidueSubgroup::from_lattice(
        direct_sum(pi_part + Sublattice::scaled_full(fixed_rank(), n),
                   theta_part + Sublattice::scaled_full(inst_->rank(), n)),
        n);
  }

  /// V-coordinates of a sublattice of Y^Gamma.
  Sublattice fixed_coordinates(const Sublattice& s) const {
    const Sublattice v = Sublattice::from_generators(inst_->rank(), fixed_basis_);
    std::vector<Vector> coords;
    for (const auto& b : s.basis_vectors()) {
      auto c = v.coordinates(b);
      if (!c) throw error("sublattice is not contained in the fixed lattice");
      coords.push_back(std::move(*c));
    }
    return Sublattice::from_vectors(fixed_rank(), coords);
  }

  Vector embed_theta(const Vector& v) const {
    Vector w(ambient());
    for (std::size_t i = 0; i < v.size(); ++i) w[fixed_rank() + i] = v[i];
    return w;
  }

private:
  const UnramifiedInstance* inst_;
  Matrix fixed_basis_;
  ResidueSubgroup fixed_q_;
  ResidueSubgroup group_;
  Matrix bilinear_;
};

/// Z^dag in G from the lattice description: pi-part Y^{# Gamma}, theta-part
/// the image of Tr_q(Y^{Gamma #}).
inline ResidueSubgroup center_lattice(const TorusModel& g) {
  const auto& inst = g.instance();
  return g.product(g.fixed_coordinates(inst.sharp_fixed()),
                   inst.gamma_sharp().image(inst.twisted_trace()));
}

/// Same subgroup from the representative-wise criteria: y2 in Y^# and
/// delta_q y2 in N Y^{Gamma #}.
inline ResidueSubgroup center_by_representatives(const TorusModel& g) {
  const auto& inst = g.instance();
  const Sublattice target =
      Sublattice::from_generators(inst.rank(), inst.gamma_sharp().basis() * inst.modulus());
  const Sublattice theta = inst.sharp().intersect(preimage(inst.twisted_delta(), target));
  return g.product(g.fixed_coordinates(inst.sharp_fixed()), theta);
}

/// Image of T^#(F): pi-part Y^{# Gamma}, theta-part the image of Tr_q(Y^#).
inline ResidueSubgroup isogeny_image(const TorusModel& g) {
  const auto& inst = g.instance();
  return g.product(g.fixed_coordinates(inst.sharp_fixed()),
                   inst.sharp().image(inst.twisted_trace()));
}

struct BruteForceCenter {
  ResidueSubgroup subgroup;
  Int enumerated = 0;
  Int radical_count = 0;
  bool pairing_descends = true;
};

/// Number of elements the brute-force center would enumerate: the sum of the
/// orders of the primary components of G.
inline Int bruteforce_size(const TorusModel& g) {
  const Int& n = g.modulus();
  if (n >= (Int(1) << 31)) return -1;
  const auto st = g.residual_fixed().structure();
  std::vector<Int> orders(g.fixed_rank(), n);
  for (const auto& f : st.factors) orders.push_back(f);
  Int total = 0;
  for (const auto& [p, e] : factorize(to_int64(n))) {
    Int part = 1;
    for (const auto& o : orders) {
      Int x = o;
      while (x % p == 0) {
        part *= p;
        x /= p;
      }
    }
    total += part;
  }
  return total;
}

namespace detail {

/// Radical of the pairing restricted to one primary component.
struct PrimaryRadical {
  std::vector<std::vector<std::int64_t>> generators;  // digit vectors
  std::int64_t count = 0;
  bool descends = true;
};

inline PrimaryRadical primary_radical(const std::vector<std::int64_t>& orders,
                                      const std::vector<std::vector<std::int64_t>>& pairing,
                                      std::int64_t modulus) {
  const std::size_t k = orders.size();
  const std::size_t t = k == 0 ? 0 : pairing.front().size();
  PrimaryRadical out;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < t; ++j)
      if ((orders[i] % modulus) * pairing[i][j] % modulus != 0) out.descends = false;

  std::int64_t size = 1;
  for (auto o : orders) size *= o;
  std::vector<char> radical(static_cast<std::size_t>(size), 0);
  std::vector<std::int64_t> digits(k, 0);
  std::vector<std::int64_t> acc(t, 0);
  for (std::int64_t idx = 0;; ++idx) {
    bool central = true;
    for (std::size_t j = 0; j < t && central; ++j) central = acc[j] == 0;
    if (central) {
      radical[static_cast<std::size_t>(idx)] = 1;
      ++out.count;
    }
    std::size_t i = 0;
    for (; i < k; ++i) {
      for (std::size_t j = 0; j < t; ++j) acc[j] = (acc[j] + pairing[i][j]) % modulus;
      if (++digits[i] < orders[i]) break;
      digits[i] = 0;
      // orders[i] * pairing[i] vanishes when the pairing descends; undo otherwise
      for (std::size_t j = 0; j < t; ++j)
        acc[j] = ((acc[j] - (orders[i] % modulus) * pairing[i][j]) % modulus + modulus) % modulus;
    }
    if (i == k) break;
  }

  // Greedy generating set, tracking the span in a membership table.
  const auto decode = [&](std::int64_t idx) {
    std::vector<std::int64_t> d(k);
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = idx % orders[i];
      idx /= orders[i];
    }
    return d;
  };
  const auto encode_sum = [&](std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < k; ++i) {
      r += ((a % orders[i] + b % orders[i]) % orders[i]) * scale;
      a /= orders[i];
      b /= orders[i];
      scale *= orders[i];
    }
    return r;
  };
  std::vector<char> span(static_cast<std::size_t>(size), 0);
  std::vector<std::int64_t> members{0};
  span[0] = 1;
  for (std::int64_t idx = 0; idx < size; ++idx) {
    if (!radical[static_cast<std::size_t>(idx)] || span[static_cast<std::size_t>(idx)]) continue;
    out.generators.push_back(decode(idx));
    const std::vector<std::int64_t> base = members;
    std::int64_t shift = idx;
    while (!span[static_cast<std::size_t>(shift)]) {
      for (auto x : base) {
        const std::int64_t y = encode_sum(x, shift);
        span[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
      shift = encode_sum(shift, idx);
    }
  }
  if (static_cast<std::int64_t>(members.size()) != out.count) out.descends = false;
  return out;
}

}  // namespace detail

/// Z^dag in G by exhaustive search: elements pairing trivially with every
/// generator of G. G is split into primary components, each enumerated in
/// full; the cap bounds the total number of enumerated elements.
inline BruteForceCenter center_bruteforce(const TorusModel& g,
                                          std::int64_t cap = kDefaultCenterCap) {
  const Int size = bruteforce_size(g);
  if (size < 0)
    throw cap_exceeded("modulus q^d - 1 = " + g.modulus().str() +
                           " is too large for the enumeration oracle",
                       g.modulus(), Int(1) << 31);
  if (size > cap)
    throw cap_exceeded("center enumeration needs " + size.str() + " elements, cap is " +
                           std::to_string(cap),
                       size, cap);
  const Int& n = g.modulus();
  const std::int64_t n64 = to_int64(n);
  const std::size_t amb = g.ambient();

  // Invariant-factor generators of G with their orders.
  std::vector<Vector> gens;
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < g.fixed_rank(); ++i) {
    gens.push_back(unit_vector(amb, i));
    orders.push_back(n64);
  }
  const auto st = g.residual_fixed().structure();
  for (std::size_t t = 0; t < st.factors.size(); ++t) {
    gens.push_back(g.embed_theta(reduce_mod(st.generators.column(t), n)));
    orders.push_back(to_int64(st.factors[t]));
  }
  const std::vector<Vector> tests = g.generators();

  BruteForceCenter out;
  out.enumerated = size;
  out.radical_count = 1;
  std::vector<Vector> radical_gens;
  for (const auto& [p, e] : factorize(n64)) {
    std::vector<Vector> pgens;
    std::vector<std::int64_t> porders;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::int64_t pp = 1;
      std::int64_t x = orders[i];
      while (x % p == 0) {
        pp *= p;
        x /= p;
      }
      if (pp == 1) continue;
      pgens.push_back(reduce_mod(scale(gens[i], x), n));
      porders.push_back(pp);
    }
    std::vector<std::vector<std::int64_t>> pairing(pgens.size(),
                                                   std::vector<std::int64_t>(tests.size()));
    for (std::size_t i = 0; i < pgens.size(); ++i)
      for (std::size_t j = 0; j < tests.size(); ++j)
        pairing[i][j] = to_int64(g.pairing(pgens[i], tests[j]));
    const auto rad = detail::primary_radical(porders, pairing, n64);
    out.pairing_descends = out.pairing_descends && rad.descends;
    out.radical_count *= rad.count;
    for (const auto& d : rad.generators) {
      Vector v(amb);
      for (std::size_t i = 0; i < d.size(); ++i) v = add(std::move(v), scale(pgens[i], d[i]));
      radical_gens.push_back(reduce_mod(std::move(v), n));
    }
  }
  out.subgroup = ResidueSubgroup::generated_by(
      radical_gens.empty() ? Matrix(amb, 0) : Matrix::from_columns(radical_gens, amb), amb, n);
  return out;
}

struct CenterReport {
  ResidueSubgroup group;
  ResidueSubgroup bruteforce;
  ResidueSubgroup lattice;
  ResidueSubgroup representatives;
  Int enumerated = 0;
  bool oracle_agrees = false;
  bool representatives_agree = false;
  bool radical_count_matches = false;
  bool pairing_descends = false;
  Int index = 0;
  bool index_is_square = false;
  /// An element of G lying in exactly one of the two computed centers.
  std::optional<Vector> witness;

  bool ok() const {
    return oracle_agrees && representatives_agree && radical_count_matches && pairing_descends &&
           index_is_square;
  }
};

inline bool is_square(const Int& x) {
  if (x < 0) return false;
  const Int r = boost::multiprecision::sqrt(x);
  return r * r == x;
}

inline std::optional<Vector> symmetric_difference_witness(const ResidueSubgroup& a,
                                                          const ResidueSubgroup& b) {
  for (const auto& v : a.generators())
    if (!b.contains(v)) return v;
  for (const auto& v : b.generators())
    if (!a.contains(v)) return v;
  return std::nullopt;
}

inline CenterReport center_report(const TorusModel& g, std::int64_t cap = kDefaultCenterCap) {
  CenterReport r;
  r.group = g.group();
  const BruteForceCenter bf = center_bruteforce(g, cap);
  r.bruteforce = bf.subgroup;
  r.enumerated = bf.enumerated;
  r.lattice = center_lattice(g);
  r.representatives = center_by_representatives(g);
  r.oracle_agrees = r.bruteforce == r.lattice;
  r.representatives_agree = r.representatives == r.lattice;
  r.radical_count_matches = bf.radical_count == r.bruteforce.order();
  r.pairing_descends = bf.pairing_descends;
  r.index = r.group.order() / r.lattice.order();
  r.index_is_square = is_square(r.index) && r.group.contains(r.lattice);
  if (!r.oracle_agrees) r.witness = symmetric_difference_witness(r.bruteforce, r.lattice);
  return r;
}

struct PacketReport {
  ResidueSubgroup center_image;
  ResidueSubgroup isogeny_image;
  FiniteAbelianPresentation packet;
  bool isogeny_in_center = false;
  bool orders_multiply = false;
  /// Ybar^{Gamma,q} differs from the image of Tr_q(Ybar).
  bool residual_fixed_exceeds_trace = false;

  bool ok() const { return isogeny_in_center && orders_multiply; }
};

/// P^dag = Im(Tr_q(Y^{Gamma #})) / Im(Tr_q(Y^#)) inside Ybar.
inline PacketReport packet_group(const TorusModel& g) {
  const auto& inst = g.instance();
  const Int& n = inst.modulus();
  const Matrix tr = inst.twisted_trace();
  PacketReport r;
  r.center_image = center_lattice(g);
  r.isogeny_image = isogeny_image(g);
  const ResidueSubgroup upper = image_in_quotient(inst.gamma_sharp().image(tr), n);
  const ResidueSubgroup lower = image_in_quotient(inst.sharp().image(tr), n);
  r.packet = quotient_structure(upper, lower);
  r.isogeny_in_center = r.center_image.contains(r.isogeny_image);
  r.orders_multiply =
      r.center_image.order() == r.isogeny_image.order() * r.packet.order();
  r.residual_fixed_exceeds_trace =
      !(image_in_quotient(Sublattice::full(inst.rank()).image(tr), n) == g.residual_fixed());
  return r;
}

struct PseudosphericalReport {
  std::size_t sharp_fixed_rank = 0;
  std::size_t fixed_rank = 0;
  Sublattice sharp_fixed;
  std::vector<Vector> theta_generators;
  std::optional<FiniteAbelianPresentation> pseudo_trivial;
};

inline PseudosphericalReport pseudospherical_report(const TorusModel& g,
                                                    const std::optional<Sublattice>& v = {}) {
  const auto& inst = g.instance();
  PseudosphericalReport r;
  r.sharp_fixed = inst.sharp_fixed();
  r.sharp_fixed_rank = r.sharp_fixed.rank();
  r.fixed_rank = inst.fixed().rank();
  r.theta_generators = g.residual_fixed().generators();
  if (v) {
    if (v->ambient_rank() != inst.rank()) throw dimension_error("V does not live in Y");
    if (!r.sharp_fixed.contains(*v)) throw error("V is not contained in the sharp fixed lattice");
    if (v->rank() != r.sharp_fixed.rank()) throw error("V does not have finite index");
    r.pseudo_trivial = quotient_structure(r.sharp_fixed, *v);
  }
  return r;
}

struct LatticeChainReport {
  bool gamma_order = false;
  bool gamma_sharp_in_y = false;
  bool sharp_in_gamma_sharp = false;
  bool scaled_in_sharp = false;
  bool twisted_delta_image = false;
  bool twisted_trace_image = false;
  bool trace_delta_zero = false;
  bool twisted_identity = false;
  bool smith_prediction = false;

  bool ok() const {
    return gamma_order && gamma_sharp_in_y && sharp_in_gamma_sharp && scaled_in_sharp &&
           twisted_delta_image && twisted_trace_image && trace_delta_zero && twisted_identity &&
           smith_prediction;
  }
};

inline LatticeChainReport lattice_chain_report(const UnramifiedInstance& inst) {
  const auto& lat = inst.lattice();
  const std::size_t rk = inst.rank();
  const Int& n = inst.modulus();
  const Sublattice y = Sublattice::full(rk);
  const Sublattice gs = inst.gamma_sharp();
  const Sublattice s = inst.sharp();
  LatticeChainReport r;
  r.gamma_order = lat.gamma().pow(lat.d()) == Matrix::identity(rk);
  r.gamma_sharp_in_y = y.contains(gs);
  r.sharp_in_gamma_sharp = gs.contains(s);
  r.scaled_in_sharp = s.contains(Sublattice::scaled_full(rk, n));
  r.twisted_delta_image = gs.contains(y.image(inst.twisted_delta()));
  r.twisted_trace_image = s.contains(gs.image(inst.twisted_trace()));
  r.trace_delta_zero = (operator_matrix(GammaOperator::trace, lat) *
                        operator_matrix(GammaOperator::delta, lat))
                           .is_zero();
  r.twisted_identity = inst.twisted_trace() * inst.twisted_delta() == Matrix::identity(rk) * n;
  r.smith_prediction = smith_elementary_divisors(inst.bilinear(), inst.n()).sharp_prediction() == s;
  return r;
}

/// Every commutator between generators of G is a multiple of m r, i.e. the
/// pairing lands in mu_n.
inline bool commutators_in_mu_n(const TorusModel& g) {
  const auto& t = g.instance().table();
  const Int step = Int(t.m()) * t.r();
  auto gens = g.generators();
  const auto st = g.residual_fixed().structure();
  for (std::size_t i = 0; i < st.factors.size(); ++i)
    gens.push_back(g.embed_theta(st.generators.column(i)));
  for (const auto& a : gens)
    for (const auto& b : gens)
      if (g.pairing(a, b) % step != 0) return false;
  return true;
}

/// Center predicates are unchanged when each theta lift moves by N e_j.
inline bool lift_independent(const TorusModel& g, const std::vector<Vector>& shifts) {
  const auto& inst = g.instance();
  const Int& n = inst.modulus();
  const Sublattice sharp = inst.sharp();
  const Sublattice target =
      Sublattice::from_generators(inst.rank(), inst.gamma_sharp().basis() * n);
  const Matrix dq = inst.twisted_delta();
  const auto holds = [&](const Vector& y2) { return sharp.contains(y2) && target.contains(dq * y2); };
  const auto theta = center_by_representatives(g);
  for (const auto& gen : theta.generators()) {
    const Vector y2(gen.begin() + static_cast<std::ptrdiff_t>(g.fixed_rank()), gen.end());
    const bool base = holds(y2);
    for (const auto& z : shifts)
      if (holds(add(y2, scale(z, n))) != base) return false;
  }
  for (const auto& gen : g.residual_fixed().generators()) {
    const bool base = holds(gen);
    for (const auto& z : shifts)
      if (holds(add(gen, scale(z, n))) != base) return false;
  }
  return true;
}

struct SplitReport {
  bool applicable = false;
  bool center_is_isogeny_image = false;
  bool smith_matches = false;
  bool trivial_packet = false;

  bool ok() const { return !applicable || (center_is_isogeny_image && smith_matches && trivial_packet); }
};

/// d = 1: center equals the isogeny image and both are cut out by the Smith
/// prediction alpha^{-1}(e_1 Z + ... + e_r Z) in each coordinate.
inline SplitReport split_report(const TorusModel& g) {
  const auto& inst = g.instance();
  SplitReport r;
  r.applicable = inst.lattice().d() == 1;
  if (!r.applicable) return r;
  const auto center = center_lattice(g);
  r.center_is_isogeny_image = center == isogeny_image(g);
  const Sublattice pred = smith_elementary_divisors(inst.bilinear(), inst.n()).sharp_prediction();
  r.smith_matches = center == g.product(g.fixed_coordinates(pred), pred);
  r.trivial_packet = packet_group(g).packet.trivial();
  return r;
}

/// G with its commutator pushed into Z/n, as a Heisenberg group over the
/// invariant-factor decomposition of G. beta is the strictly upper part of the
/// commutator matrix, which reproduces the same alternating form.
inline FiniteHeisenberg heisenberg_model(const TorusModel& g) {
  const auto& t = g.instance().table();
  const Int step = Int(t.m()) * t.r();
  const auto st = g.group().structure();
  const std::size_t k = st.factors.size();
  std::vector<std::int64_t> factors;
  for (const auto& f : st.factors) factors.push_back(to_int64(f));
  std::vector<std::vector<std::int64_t>> beta(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Int c = g.pairing(st.generators.column(i), st.generators.column(j));
      if (c % step != 0) throw error("commutator is not mu_n-valued");
      beta[i][j] = to_int64(mod_floor(c / step, Int(t.n())));
    }
  return FiniteHeisenberg(std::move(factors), t.n(), std::move(beta));
}

}  // namespace metator
