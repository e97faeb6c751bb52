#pragma once

#include "cyclotomic.hpp"
#include "finite_abelian.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace metator {

inline constexpr std::int64_t kDefaultHeisenbergCap = 1'000'000;
inline constexpr std::int64_t kDigitTableLimit = std::int64_t{1} << 20;

/// An element (z, a) of Z/n x A.
struct HeisenbergElement {
  std::int64_t z = 0;
  std::int64_t a = 0;
  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

/// Central extension of A = Z/f_1 x ... x Z/f_k by Z/n with the bi-additive
/// cocycle beta: (z1, a1)(z2, a2) = (z1 + z2 + beta(a1, a2), a1 + a2).
///
/// Elements of A are encoded as mixed-radix indices over the factors.
class FiniteHeisenberg {
public:
  FiniteHeisenberg(std::vector<std::int64_t> factors, std::int64_t n,
                   std::vector<std::vector<std::int64_t>> beta)
      : factors_(std::move(factors)), n_(n), beta_(std::move(beta)) {
    if (n_ <= 0) throw error("central order n must be positive");
    const std::size_t k = factors_.size();
    if (beta_.size() != k) throw dimension_error("beta must be k x k");
    for (auto f : factors_)
      if (f < 2) throw error("factors must be at least 2");
    order_ = 1;
    exponent_ = 1;
    for (auto f : factors_) {
      if (order_ > (std::int64_t{1} << 40) / f) throw error("base group too large");
      order_ *= f;
      exponent_ = std::lcm(exponent_, f);
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (beta_[i].size() != k) throw dimension_error("beta must be k x k");
      for (std::size_t j = 0; j < k; ++j) {
        auto& b = beta_[i][j];
        b = ((b % n_) + n_) % n_;
        if ((factors_[i] * b) % n_ != 0 || (b * factors_[j]) % n_ != 0)
          throw error("beta does not descend to the factor groups");
      }
    }
    std::int64_t st = 1;
    for (auto f : factors_) {
      stride_.push_back(st);
      st *= f;
    }
    if (order_ <= kDigitTableLimit) {
      table_.resize(static_cast<std::size_t>(order_) * k);
      for (std::int64_t a = 0; a < order_; ++a)
        for (std::size_t i = 0; i < k; ++i)
          table_[static_cast<std::size_t>(a) * k + i] =
              static_cast<std::int32_t>((a / stride_[i]) % factors_[i]);
    }
  }

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::int64_t n() const { return n_; }
  const std::vector<std::vector<std::int64_t>>& beta_matrix() const { return beta_; }
  std::size_t rank() const { return factors_.size(); }
  /// |A|.
  std::int64_t base_order() const { return order_; }
  /// |H| = n |A|.
  std::int64_t order() const { return order_ * n_; }
  std::int64_t exponent() const { return exponent_; }
  /// Exponent modulus for character values: a multiple of the exponent of H.
  std::int64_t value_modulus() const { return n_ * exponent_; }

  std::vector<std::int64_t> digits(std::int64_t a) const {
    std::vector<std::int64_t> d(rank());
    for (std::size_t i = 0; i < rank(); ++i) d[i] = digit(a, i);
    return d;
  }

  std::int64_t digit(std::int64_t a, std::size_t i) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * rank() + i];
    return (a / stride_[i]) % factors_[i];
  }

  std::int64_t index(const std::vector<std::int64_t>& d) const {
    std::int64_t a = 0;
    for (std::size_t i = rank(); i-- > 0;) {
      const std::int64_t v = ((d[i] % factors_[i]) + factors_[i]) % factors_[i];
      a = a * factors_[i] + v;
    }
    return a;
  }

  std::int64_t generator(std::size_t i) const {
    std::vector<std::int64_t> d(rank());
    d.at(i) = 1;
    return index(d);
  }

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    std::int64_t r = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      std::int64_t x = digit(a, i) + digit(b, i);
      if (x >= factors_[i]) x -= factors_[i];
      r += x * stride_[i];
    }
    return r;
  }

  std::int64_t negate(std::int64_t a) const {
    std::int64_t r = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      const std::int64_t x = digit(a, i);
      r += (x == 0 ? 0 : factors_[i] - x) * stride_[i];
    }
    return r;
  }

  std::int64_t beta(std::int64_t a, std::int64_t b) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      const std::int64_t x = digit(a, i);
      if (x == 0) continue;
      std::int64_t row = 0;
      for (std::size_t j = 0; j < rank(); ++j) row += beta_[i][j] * digit(b, j);
      s = (s + x * (row % n_)) % n_;
    }
    return s;
  }

  /// The alternating form C(a, b) = beta(a, b) - beta(b, a) in Z/n.
  std::int64_t commutator(std::int64_t a, std::int64_t b) const {
    return ((beta(a, b) - beta(b, a)) % n_ + n_) % n_;
  }

  HeisenbergElement multiply(const HeisenbergElement& x, const HeisenbergElement& y) const {
    return {(x.z + y.z + beta(x.a, y.a)) % n_, add(x.a, y.a)};
  }

  HeisenbergElement inverse(const HeisenbergElement& x) const {
    const std::int64_t na = negate(x.a);
    return {((-x.z - beta(x.a, na)) % n_ + 2 * n_) % n_, na};
  }

  HeisenbergElement power(HeisenbergElement x, std::int64_t e) const {
    HeisenbergElement r{};
    for (std::int64_t i = 0; i < e; ++i) r = multiply(r, x);
    return r;
  }

  std::int64_t element_index(const HeisenbergElement& x) const { return x.a * n_ + x.z; }

private:
  std::vector<std::int64_t> factors_;
  std::int64_t n_;
  std::vector<std::vector<std::int64_t>> beta_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
  std::vector<std::int64_t> stride_;
  std::vector<std::int32_t> table_;
};

/// Subgroup of A held as a membership table plus its element list.
struct Subgroup {
  std::vector<char> member;
  std::vector<std::int64_t> elements;
  std::vector<std::int64_t> generators;

  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
  bool contains(std::int64_t a) const { return member[static_cast<std::size_t>(a)] != 0; }
};

inline void adjoin(const FiniteHeisenberg& h, Subgroup& s, std::int64_t g) {
  if (s.contains(g)) return;
  s.generators.push_back(g);
  const std::vector<std::int64_t> base = s.elements;
  std::int64_t shift = g;
  while (!s.contains(shift)) {
    for (std::int64_t x : base) {
      const std::int64_t y = h.add(x, shift);
      s.member[static_cast<std::size_t>(y)] = 1;
      s.elements.push_back(y);
    }
    shift = h.add(shift, g);
  }
}

inline Subgroup span(const FiniteHeisenberg& h, const std::vector<std::int64_t>& gens) {
  Subgroup s;
  s.member.assign(static_cast<std::size_t>(h.base_order()), 0);
  s.member[0] = 1;
  s.elements.push_back(0);
  for (auto g : gens) adjoin(h, s, g);
  return s;
}

inline void check_cap(const FiniteHeisenberg& h, std::int64_t cap) {
  const std::int64_t work = h.base_order() * std::max<std::int64_t>(1, h.rank());
  if (work > cap)
    throw cap_exceeded("Heisenberg enumeration needs " + std::to_string(work) +
                           " pairing tests, cap is " + std::to_string(cap),
                       work, cap);
}

/// Z^dag(A): the radical of the commutator form, by exhaustive search.
inline Subgroup center(const FiniteHeisenberg& h, std::int64_t cap = kDefaultHeisenbergCap) {
  check_cap(h, cap);
  std::vector<std::int64_t> radical;
  for (std::int64_t a = 0; a < h.base_order(); ++a) {
    bool central = true;
    for (std::size_t i = 0; i < h.rank() && central; ++i)
      central = h.commutator(a, h.generator(i)) == 0;
    if (central) radical.push_back(a);
  }
  Subgroup s;
  s.member.assign(static_cast<std::size_t>(h.base_order()), 0);
  for (auto a : radical) s.member[static_cast<std::size_t>(a)] = 1;
  s.elements = radical;
  // Minimal generating data for later use.
  Subgroup closure = span(h, {});
  for (auto a : radical) adjoin(h, closure, a);
  s.generators = closure.generators;
  return s;
}

/// Greedy maximal isotropic subgroup containing `base`, scanning candidates
/// in the given order. One pass suffices: rejected candidates fail to commute
/// with a subgroup of the final answer.
inline Subgroup maximal_isotropic(const FiniteHeisenberg& h, const Subgroup& base,
                                  const std::vector<std::int64_t>& candidate_order) {
  Subgroup m = span(h, base.generators);
  for (std::int64_t a : candidate_order) {
    if (m.contains(a)) continue;
    bool isotropic = true;
    for (std::size_t i = 0; i < m.generators.size() && isotropic; ++i)
      isotropic = h.commutator(a, m.generators[i]) == 0;
    if (isotropic) adjoin(h, m, a);
  }
  return m;
}

inline Subgroup maximal_isotropic(const FiniteHeisenberg& h, const Subgroup& base) {
  std::vector<std::int64_t> order(static_cast<std::size_t>(h.base_order()));
  std::iota(order.begin(), order.end(), 0);
  return maximal_isotropic(h, base, order);
}

inline bool is_isotropic(const FiniteHeisenberg& h, const Subgroup& s) {
  for (auto a : s.generators)
    for (auto b : s.generators)
      if (h.commutator(a, b) != 0) return false;
  return true;
}

class GenuineCharacter;

/// Invariant-factor coordinates on the preimage of an isotropic subgroup S.
///
/// S~ is abelian, generated by the central (1, 0) and lifts (0, m_i) of an
/// invariant-factor basis m_i of S; (0, m_i)^{o_i} = (z_i, 0).
class AbelianSection : public std::enable_shared_from_this<AbelianSection> {
public:
  AbelianSection(const FiniteHeisenberg& h, Subgroup s) : h_(&h), s_(std::move(s)) {
    if (!is_isotropic(h, s_)) throw error("subgroup is not isotropic; its preimage is not abelian");
    build_basis();
    build_table();
  }

  const FiniteHeisenberg& group() const { return *h_; }
  const Subgroup& subgroup() const { return s_; }
  const std::vector<std::int64_t>& basis() const { return basis_; }
  const std::vector<std::int64_t>& basis_orders() const { return orders_; }
  const std::vector<std::int64_t>& power_offsets() const { return power_offsets_; }

  /// Number of genuine characters of S~, equal to |S|.
  std::int64_t character_count() const { return s_.order(); }

  /// Coefficients c and offset f with prod (0, m_i)^{c_i} = (f, a).
  const std::vector<std::int64_t>& coordinates(std::int64_t a) const {
    return coords_[slot(a)];
  }
  std::int64_t offset(std::int64_t a) const { return offsets_[slot(a)]; }

  GenuineCharacter character(std::int64_t index) const;

private:
  std::size_t slot(std::int64_t a) const {
    const auto sl = slot_[static_cast<std::size_t>(a)];
    if (sl < 0) throw error("element is outside the subgroup");
    return static_cast<std::size_t>(sl);
  }

  void build_basis() {
    const FiniteHeisenberg& h = *h_;
    const std::size_t k = h.rank();
    if (k == 0) return;
    std::vector<Vector> rel;
    for (std::size_t i = 0; i < k; ++i) rel.push_back(scale(unit_vector(k, i), h.factors()[i]));
    Sublattice relations = Sublattice::from_vectors(k, rel);
    std::vector<Vector> gens = rel;
    for (auto g : s_.generators) {
      Vector v;
      for (auto x : h.digits(g)) v.emplace_back(x);
      gens.push_back(std::move(v));
    }
    const auto pres = quotient_structure(Sublattice::from_vectors(k, gens), relations);
    for (std::size_t t = 0; t < pres.factors.size(); ++t) {
      std::vector<std::int64_t> d(k);
      for (std::size_t i = 0; i < k; ++i)
        d[i] = to_int64(mod_floor(pres.generators(i, t), h.factors()[i]));
      basis_.push_back(h.index(d));
      orders_.push_back(to_int64(pres.factors[t]));
    }
  }

  void build_table() {
    const FiniteHeisenberg& h = *h_;
    slot_.assign(static_cast<std::size_t>(h.base_order()), -1);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const auto p = h.power({0, basis_[i]}, orders_[i]);
      if (p.a != 0) throw error("internal: basis order mismatch");
      power_offsets_.push_back(p.z);
    }
    std::vector<std::int64_t> c(basis_.size(), 0);
    for (;;) {
      HeisenbergElement x{};
      for (std::size_t i = 0; i < c.size(); ++i)
        x = h.multiply(x, h.power({0, basis_[i]}, c[i]));
      auto& sl = slot_[static_cast<std::size_t>(x.a)];
      if (sl >= 0) throw error("internal: invariant-factor basis is not independent");
      sl = static_cast<std::int64_t>(coords_.size());
      coords_.push_back(c);
      offsets_.push_back(x.z);
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == orders_[i]) c[i++] = 0;
      if (i == c.size()) break;
    }
    if (static_cast<std::int64_t>(coords_.size()) != s_.order())
      throw error("internal: invariant-factor basis does not span the subgroup");
  }

  const FiniteHeisenberg* h_;
  Subgroup s_;
  std::vector<std::int64_t> basis_;
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> power_offsets_;
  std::vector<std::int64_t> slot_;
  std::vector<std::vector<std::int64_t>> coords_;
  std::vector<std::int64_t> offsets_;
};

/// A character of S~ restricting to the identity embedding on Z/n.
/// Values are exponents of a primitive E-th root of unity, E = value_modulus().
class GenuineCharacter {
public:
  GenuineCharacter(std::shared_ptr<const AbelianSection> section, std::vector<std::int64_t> omega)
      : section_(std::move(section)), omega_(std::move(omega)) {
    const auto& h = section_->group();
    const std::int64_t e = h.value_modulus();
    const auto& o = section_->basis_orders();
    const auto& z = section_->power_offsets();
    for (std::size_t i = 0; i < o.size(); ++i)
      if ((((o[i] * omega_[i] - z[i] * (e / h.n())) % e) + e) % e != 0)
        throw error("character values violate the power relations");
  }

  const AbelianSection& section() const { return *section_; }
  const std::vector<std::int64_t>& omega() const { return omega_; }

  std::int64_t value(const HeisenbergElement& x) const {
    const auto& h = section_->group();
    const std::int64_t e = h.value_modulus();
    const auto& c = section_->coordinates(x.a);
    std::int64_t v = (e / h.n()) * (x.z - section_->offset(x.a));
    for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * omega_[i];
    return ((v % e) + e) % e;
  }

private:
  std::shared_ptr<const AbelianSection> section_;
  std::vector<std::int64_t> omega_;
};

inline GenuineCharacter AbelianSection::character(std::int64_t index) const {
  const std::int64_t e = h_->value_modulus();
  std::vector<std::int64_t> omega(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::int64_t j = index % orders_[i];
    index /= orders_[i];
    omega[i] = (power_offsets_[i] * (e / h_->n()) / orders_[i] + j * (e / orders_[i])) % e;
  }
  return GenuineCharacter(shared_from_this(), std::move(omega));
}

/// Extensions of a genuine character of the center to a larger abelian section.
inline std::vector<GenuineCharacter> extensions(const GenuineCharacter& chi,
                                                const std::shared_ptr<const AbelianSection>& target) {
  std::vector<GenuineCharacter> out;
  const auto& zgens = chi.section().basis();
  for (std::int64_t idx = 0; idx < target->character_count(); ++idx) {
    GenuineCharacter cand = target->character(idx);
    bool match = true;
    for (std::size_t i = 0; i < zgens.size() && match; ++i) {
      const HeisenbergElement g{0, zgens[i]};
      match = cand.value(g) == chi.value(g);
    }
    if (match) out.push_back(std::move(cand));
  }
  return out;
}

/// Class function on H stored as multisets of root-of-unity exponents.
struct InducedCharacter {
  std::vector<std::vector<std::int64_t>> terms;  // indexed by a * n + z
  std::int64_t dimension = 0;
};

inline InducedCharacter induce(const GenuineCharacter& chi) {
  const auto& h = chi.section().group();
  const auto& m = chi.section().subgroup();
  InducedCharacter out;
  out.terms.resize(static_cast<std::size_t>(h.order()));
  std::vector<char> covered(static_cast<std::size_t>(h.base_order()), 0);
  std::vector<std::int64_t> reps;
  for (std::int64_t b = 0; b < h.base_order(); ++b) {
    if (covered[static_cast<std::size_t>(b)]) continue;
    reps.push_back(b);
    for (auto x : m.elements) covered[static_cast<std::size_t>(h.add(b, x))] = 1;
  }
  out.dimension = static_cast<std::int64_t>(reps.size());
  std::vector<std::pair<HeisenbergElement, HeisenbergElement>> xs;
  for (auto b : reps) {
    const HeisenbergElement x{0, b};
    xs.emplace_back(x, h.inverse(x));
  }
  for (std::int64_t a = 0; a < h.base_order(); ++a)
    for (std::int64_t z = 0; z < h.n(); ++z) {
      const HeisenbergElement g{z, a};
      auto& t = out.terms[static_cast<std::size_t>(h.element_index(g))];
      for (const auto& [x, xinv] : xs) {
        const HeisenbergElement c = h.multiply(h.multiply(xinv, g), x);
        if (m.contains(c.a)) t.push_back(chi.value(c));
      }
    }
  return out;
}

/// <chi1, chi2> * |H| as a dense element of Z[zeta_E].
inline std::vector<std::int64_t> scaled_inner_product(const FiniteHeisenberg& h,
                                                      const InducedCharacter& a,
                                                      const InducedCharacter& b) {
  const std::int64_t e = h.value_modulus();
  std::vector<std::int64_t> bucket(static_cast<std::size_t>(e), 0);
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    for (auto x : a.terms[i])
      for (auto y : b.terms[i]) ++bucket[static_cast<std::size_t>(((x - y) % e + e) % e)];
  return bucket;
}

struct SvnReport {
  std::int64_t dimension = 0;
  std::int64_t second_dimension = 0;
  std::int64_t center_index = 0;
  bool extension_found = false;
  bool irreducible = false;
  bool central_character_matches = false;
  bool choice_independent = false;
  bool index_is_square = false;

  bool ok() const {
    return extension_found && irreducible && central_character_matches && choice_independent &&
           index_is_square && dimension == second_dimension &&
           dimension * dimension == center_index;
  }
};

/// Everything needed to run the Stone-von Neumann checks for many central
/// characters of one group: the center and two maximal isotropic subgroups
/// found by scanning A in opposite orders.
class SvnContext {
public:
  explicit SvnContext(const FiniteHeisenberg& h, std::int64_t cap = kDefaultHeisenbergCap)
      : h_(&h), zero_test_(h.value_modulus()) {
    check_cap(h, cap);
    Subgroup z = center(h, cap);
    std::vector<std::int64_t> forward(static_cast<std::size_t>(h.base_order()));
    std::iota(forward.begin(), forward.end(), 0);
    std::vector<std::int64_t> backward(forward.rbegin(), forward.rend());
    first_ = std::make_shared<const AbelianSection>(h, maximal_isotropic(h, z, forward));
    second_ = std::make_shared<const AbelianSection>(h, maximal_isotropic(h, z, backward));
    center_ = std::make_shared<const AbelianSection>(h, std::move(z));
  }

  const FiniteHeisenberg& group() const { return *h_; }
  const AbelianSection& center_section() const { return *center_; }
  const AbelianSection& first_isotropic() const { return *first_; }
  const AbelianSection& second_isotropic() const { return *second_; }

  std::int64_t central_character_count() const { return center_->character_count(); }
  GenuineCharacter central_character(std::int64_t index) const {
    return center_->character(index);
  }

  SvnReport verify(const GenuineCharacter& chi) const {
    const FiniteHeisenberg& h = *h_;
    SvnReport r;
    r.center_index = h.base_order() / center_->subgroup().order();
    std::int64_t root = 0;
    while (root * root < r.center_index) ++root;
    r.index_is_square = root * root == r.center_index;

    const auto ext1 = extensions(chi, first_);
    const auto ext2 = extensions(chi, second_);
    r.extension_found = !ext1.empty() && !ext2.empty();
    if (!r.extension_found) return r;

    const InducedCharacter ind1 = induce(ext1.front());
    const InducedCharacter ind2 = induce(ext2.back());
    r.dimension = ind1.dimension;
    r.second_dimension = ind2.dimension;

    auto norm = scaled_inner_product(h, ind1, ind1);
    norm[0] -= h.order();
    r.irreducible = zero_test_.is_zero_dense(norm);

    r.central_character_matches = true;
    for (auto a : center_->subgroup().elements)
      for (std::int64_t z = 0; z < h.n() && r.central_character_matches; ++z) {
        const HeisenbergElement g{z, a};
        const auto& t = ind1.terms[static_cast<std::size_t>(h.element_index(g))];
        const std::int64_t expected = chi.value(g);
        if (static_cast<std::int64_t>(t.size()) == ind1.dimension &&
            std::all_of(t.begin(), t.end(), [&](std::int64_t x) { return x == expected; }))
          continue;
        std::vector<std::pair<std::int64_t, std::int64_t>> diff;
        for (auto x : ind1.terms[static_cast<std::size_t>(h.element_index(g))])
          diff.emplace_back(x, 1);
        diff.emplace_back(chi.value(g), -ind1.dimension);
        r.central_character_matches = zero_test_.is_zero(diff);
      }

    r.choice_independent = true;
    for (std::size_t i = 0; i < ind1.terms.size() && r.choice_independent; ++i) {
      if (ind1.terms[i].empty() && ind2.terms[i].empty()) continue;
      auto t1 = ind1.terms[i];
      auto t2 = ind2.terms[i];
      std::sort(t1.begin(), t1.end());
      std::sort(t2.begin(), t2.end());
      if (t1 == t2) continue;
      std::vector<std::pair<std::int64_t, std::int64_t>> diff;
      for (auto x : ind1.terms[i]) diff.emplace_back(x, 1);
      for (auto x : ind2.terms[i]) diff.emplace_back(x, -1);
      r.choice_independent = zero_test_.is_zero(diff);
    }
    return r;
  }

private:
  const FiniteHeisenberg* h_;
  CyclotomicZeroTest zero_test_;
  std::shared_ptr<const AbelianSection> center_;
  std::shared_ptr<const AbelianSection> first_;
  std::shared_ptr<const AbelianSection> second_;
};

inline SvnReport svn_verify(const FiniteHeisenberg& h, const GenuineCharacter& chi,
                            std::int64_t cap = kDefaultHeisenbergCap) {
  return SvnContext(h, cap).verify(chi);
}

struct SvnSummary {
  std::int64_t base_order = 0;
  std::int64_t center_order = 0;
  std::int64_t genuine_central_characters = 0;
  std::int64_t verified_irreducibles = 0;
  std::int64_t dimension = 0;
  std::int64_t sum_of_squared_dimensions = 0;
  bool every_maximal_isotropic_balanced = false;
  bool all_claims = false;

  bool ok() const {
    return all_claims && every_maximal_isotropic_balanced &&
           verified_irreducibles == center_order &&
           genuine_central_characters == center_order && sum_of_squared_dimensions == base_order;
  }
};

/// Runs every claim for every genuine central character.
inline SvnSummary svn_verify_all(const FiniteHeisenberg& h,
                                 std::int64_t cap = kDefaultHeisenbergCap) {
  SvnContext ctx(h, cap);
  SvnSummary s;
  s.base_order = h.base_order();
  s.center_order = ctx.center_section().subgroup().order();
  s.genuine_central_characters = ctx.central_character_count();
  const std::int64_t zi = s.base_order / s.center_order;
  const auto balanced = [&](const AbelianSection& m) {
    const std::int64_t am = s.base_order / m.subgroup().order();
    return am * am == zi;
  };
  s.every_maximal_isotropic_balanced =
      balanced(ctx.first_isotropic()) && balanced(ctx.second_isotropic());
  s.all_claims = true;
  for (std::int64_t i = 0; i < s.genuine_central_characters; ++i) {
    const SvnReport r = ctx.verify(ctx.central_character(i));
    if (!r.ok()) {
      s.all_claims = false;
      continue;
    }
    ++s.verified_irreducibles;
    s.dimension = r.dimension;
    s.sum_of_squared_dimensions += r.dimension * r.dimension;
  }
  return s;
}

}  // namespace metator
