#pragma once

// Brute-force reference computations for the tests. Everything here works on
// explicit residues with machine integers and never calls the normal-form
// code it is meant to check.

#include <metator/metator.hpp>

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Residue = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

inline IntMatrix to_int(const metator::Matrix& m) {
  IntMatrix out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<std::int64_t>(m(i, j));
  return out;
}

inline metator::Vector to_vector(const Residue& r) {
  metator::Vector v;
  for (auto x : r) v.emplace_back(x);
  return v;
}

inline Residue apply(const IntMatrix& a, const Residue& v) {
  Residue out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline std::int64_t form(const IntMatrix& b, const Residue& x, const Residue& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * b[i][j] * y[j];
  return s;
}

/// Calls f on every vector of [0, n)^k.
inline void for_each_residue(std::size_t k, std::int64_t n, const std::function<void(const Residue&)>& f) {
  Residue r(k, 0);
  for (;;) {
    f(r);
    std::size_t i = 0;
    while (i < k && ++r[i] == n) r[i++] = 0;
    if (i == k) return;
  }
}

inline Residue reduce(Residue r, std::int64_t n) {
  for (auto& x : r) x = mod(x, n);
  return r;
}

/// All elements of the subgroup of (Z/n)^k generated by gens.
inline std::set<Residue> closure(std::size_t k, std::int64_t n, const std::vector<Residue>& gens) {
  std::set<Residue> s{Residue(k, 0)};
  std::vector<Residue> frontier{Residue(k, 0)};
  while (!frontier.empty()) {
    std::vector<Residue> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Residue y(k);
        for (std::size_t i = 0; i < k; ++i) y[i] = mod(x[i] + g[i], n);
        if (s.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return s;
}

/// Residues y mod n with B(y, w) = 0 mod n for every w in ws.
inline std::set<Residue> sharp_residues(const IntMatrix& b, std::int64_t n, const std::vector<Residue>& ws) {
  std::set<Residue> out;
  for_each_residue(b.size(), n, [&](const Residue& y) {
    for (const auto& w : ws)
      if (mod(form(b, y, w), n) != 0) return;
    out.insert(y);
  });
  return out;
}

/// Elements of the finite model G listed explicitly: pi-part coefficients on
/// the fixed basis, then a residue fixed by q gamma mod N.
struct ExplicitModel {
  std::int64_t modulus = 0;
  std::size_t fixed_rank = 0;
  IntMatrix fixed_basis;  // rank x fixed_rank
  IntMatrix bilinear;
  std::vector<Residue> elements;
  std::int64_t m = 0;
  std::int64_t h = 0;
};

inline ExplicitModel explicit_model(const metator::UnramifiedInstance& inst,
                                    const metator::Matrix& fixed_basis) {
  ExplicitModel g;
  g.modulus = static_cast<std::int64_t>(inst.modulus());
  g.fixed_rank = fixed_basis.cols();
  g.fixed_basis = to_int(fixed_basis);
  g.bilinear = to_int(inst.bilinear());
  g.m = inst.table().m();
  g.h = static_cast<std::int64_t>(inst.table().h());
  const std::size_t rk = inst.rank();
  const IntMatrix gamma = to_int(inst.lattice().gamma());
  const std::int64_t q = inst.table().q();
  std::vector<Residue> theta;
  for_each_residue(rk, g.modulus, [&](const Residue& y) {
    const Residue gy = apply(gamma, y);
    for (std::size_t i = 0; i < rk; ++i)
      if (mod(q * gy[i] - y[i], g.modulus) != 0) return;
    theta.push_back(y);
  });
  for_each_residue(g.fixed_rank, g.modulus, [&](const Residue& x) {
    for (const auto& t : theta) {
      Residue e = x;
      e.insert(e.end(), t.begin(), t.end());
      g.elements.push_back(std::move(e));
    }
  });
  return g;
}

/// c(t, t') = m (h B(y1, y1') + B(y1, y2') - B(y2, y1')) mod N, written out directly.
inline std::int64_t pairing(const ExplicitModel& g, const Residue& a, const Residue& b) {
  const std::size_t k = g.fixed_rank;
  const std::size_t rk = g.bilinear.size();
  Residue y1(rk, 0), z1(rk, 0), y2(a.begin() + static_cast<std::ptrdiff_t>(k), a.end()),
      z2(b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      y1[i] += g.fixed_basis[i][j] * a[j];
      z1[i] += g.fixed_basis[i][j] * b[j];
    }
  const std::int64_t n = g.modulus;
  const std::int64_t e = mod(g.h * mod(form(g.bilinear, y1, z1), n), n) + form(g.bilinear, y1, z2) -
                         form(g.bilinear, y2, z1);
  return mod(mod(e, n) * g.m, n);
}

/// Radical of the pairing by testing every pair.
inline std::set<Residue> radical(const ExplicitModel& g) {
  std::set<Residue> out;
  for (const auto& a : g.elements) {
    bool central = true;
    for (const auto& b : g.elements) {
      if (pairing(g, a, b) != 0) {
        central = false;
        break;
      }
    }
    if (central) out.insert(a);
  }
  return out;
}

/// Small deterministic generator for test data.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(between(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

private:
  std::mt19937_64 eng_;
};

inline metator::Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, std::int64_t lo, std::int64_t hi) {
  metator::Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.between(lo, hi);
  return m;
}

/// Random unimodular matrix as a product of elementary matrices.
inline metator::Matrix random_unimodular(Rng& rng, std::size_t r, int steps) {
  metator::Matrix u = metator::Matrix::identity(r);
  if (r < 2) return rng.between(0, 1) ? u : u * metator::Int(-1);
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(r) - 1));
    auto j = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(r) - 2));
    if (j >= i) ++j;
    metator::Matrix e = metator::Matrix::identity(r);
    e(i, j) = rng.between(-2, 2);
    u = e * u;
  }
  return u;
}

}  // namespace oracle

namespace oracle {

/// Random Heisenberg data whose cocycle descends to the factor groups.
struct HeisenbergData {
  std::vector<std::int64_t> factors;
  std::int64_t n = 1;
  std::vector<std::vector<std::int64_t>> beta;
  std::int64_t order() const {
    std::int64_t o = 1;
    for (auto f : factors) o *= f;
    return o;
  }
};

inline HeisenbergData random_heisenberg(Rng& rng, std::int64_t max_order) {
  static const std::vector<std::int64_t> sizes = {2, 2, 3, 4, 4, 5, 6, 8, 9, 12};
  HeisenbergData d;
  d.n = rng.pick(std::vector<std::int64_t>{1, 2, 2, 3, 4, 4, 6, 8, 12});
  const auto k = rng.between(1, 4);
  for (std::int64_t i = 0; i < k; ++i) {
    const auto f = rng.pick(sizes);
    if (d.order() * f > max_order) break;
    d.factors.push_back(f);
  }
  if (d.factors.empty()) d.factors.push_back(2);
  const std::size_t r = d.factors.size();
  d.beta.assign(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const std::int64_t step = std::lcm(d.n / std::gcd(d.n, d.factors[i]), d.n / std::gcd(d.n, d.factors[j]));
      d.beta[i][j] = (step * rng.between(0, d.n)) % d.n;
    }
  return d;
}

/// Digits of a mixed-radix index, least significant factor first.
inline Residue digits(const std::vector<std::int64_t>& factors, std::int64_t a) {
  Residue out;
  for (auto f : factors) {
    out.push_back(a % f);
    a /= f;
  }
  return out;
}

inline std::int64_t heisenberg_commutator(const HeisenbergData& d, std::int64_t a, std::int64_t b) {
  const Residue x = digits(d.factors, a), y = digits(d.factors, b);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += d.beta[i][j] * (x[i] * y[j] - y[i] * x[j]);
  return mod(s, d.n);
}

/// Radical of the commutator form by testing all pairs.
inline std::vector<std::int64_t> heisenberg_radical(const HeisenbergData& d) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 0; a < d.order(); ++a) {
    bool central = true;
    for (std::int64_t b = 0; b < d.order() && central; ++b) central = heisenberg_commutator(d, a, b) == 0;
    if (central) out.push_back(a);
  }
  return out;
}

}  // namespace oracle

namespace oracle {

/// Mod-2 enumeration for a real double cover, in coordinates on the given
/// basis of the fixed lattice. Each set is a preimage in (Z/2)^k.
struct RealOracle {
  std::size_t k = 0;
  std::set<Residue> kernel;   // (1 + gamma) Y
  std::set<Residue> center;   // radical of (-1)^B, plus the kernel
  std::set<Residue> isogeny;  // fixed vectors pairing evenly with all of Y, plus the kernel
  std::int64_t pi0_order() const { return (std::int64_t{1} << k) / static_cast<std::int64_t>(kernel.size()); }
  std::int64_t center_order() const { return static_cast<std::int64_t>(center.size() / kernel.size()); }
  std::int64_t isogeny_order() const { return static_cast<std::int64_t>(isogeny.size() / kernel.size()); }
};

inline RealOracle real_oracle(const metator::RealInstance& inst, const metator::Matrix& fixed_basis) {
  RealOracle o;
  o.k = fixed_basis.cols();
  const std::size_t rk = inst.rank();
  const auto v = to_int(fixed_basis);
  const auto b = to_int(inst.form().bilinear());
  const auto gamma = to_int(inst.lattice().gamma());
  const auto lift = [&](const Residue& x) {
    Residue y(rk, 0);
    for (std::size_t j = 0; j < o.k; ++j)
      for (std::size_t i = 0; i < rk; ++i) y[i] += v[i][j] * x[j];
    return y;
  };
  // (1 + gamma) y is fixed; only its coordinates mod 2 matter.
  const metator::Sublattice fixed = metator::Sublattice::from_generators(rk, fixed_basis);
  for_each_residue(rk, 2, [&](const Residue& y) {
    Residue norm = apply(gamma, y);
    for (std::size_t i = 0; i < rk; ++i) norm[i] += y[i];
    const auto c = fixed.coordinates(to_vector(norm));
    Residue x;
    for (const auto& e : *c) x.push_back(mod(static_cast<std::int64_t>(e), 2));
    o.kernel.insert(x);
  });
  const auto kernel_elems = closure(o.k, 2, std::vector<Residue>(o.kernel.begin(), o.kernel.end()));
  o.kernel = kernel_elems;
  std::set<Residue> radical, isogeny;
  std::vector<Residue> all;
  for_each_residue(o.k, 2, [&](const Residue& x) { all.push_back(x); });
  for (const auto& x : all) {
    const Residue y = lift(x);
    bool central = true;
    for (const auto& z : all) central = central && mod(form(b, y, lift(z)), 2) == 0;
    if (central) radical.insert(x);
    bool sharp = true;
    for (std::size_t i = 0; i < rk; ++i) {
      Residue e(rk, 0);
      e[i] = 1;
      sharp = sharp && mod(form(b, y, e), 2) == 0;
    }
    if (sharp) isogeny.insert(x);
  }
  const auto plus_kernel = [&](const std::set<Residue>& s) {
    std::set<Residue> out;
    for (const auto& x : s)
      for (const auto& kx : o.kernel) {
        Residue y(o.k);
        for (std::size_t i = 0; i < o.k; ++i) y[i] = (x[i] + kx[i]) % 2;
        out.insert(y);
      }
    return out;
  };
  o.center = plus_kernel(radical);
  o.isogeny = plus_kernel(isogeny);
  return o;
}

}  // namespace oracle

namespace oracle {

/// Every block-diagonal gamma of rank at most max_rank built from the blocks
/// [1], [-1] and the 2x2 swap, with d = 1 for the identity and 2 otherwise.
inline std::vector<metator::GammaLattice> real_gamma_family(std::size_t max_rank) {
  std::vector<metator::GammaLattice> out;
  const std::function<void(std::vector<int>, std::size_t)> grow = [&](std::vector<int> blocks, std::size_t rank) {
    if (rank > 0) {
      metator::Matrix g(rank, rank);
      std::size_t at = 0;
      bool identity = true;
      for (int b : blocks) {
        if (b == 2) {
          g(at, at + 1) = 1;
          g(at + 1, at) = 1;
          at += 2;
          identity = false;
        } else {
          g(at, at) = b;
          identity = identity && b == 1;
          ++at;
        }
      }
      out.emplace_back(g, identity ? 1 : 2);
    }
    // Blocks in non-decreasing order: 1 < -1 (coded 0 below) < swap.
    const int last = blocks.empty() ? -2 : blocks.back();
    const auto code = [](int b) { return b == 1 ? 0 : b == -1 ? 1 : 2; };
    for (int b : {1, -1, 2}) {
      const std::size_t size = b == 2 ? 2 : 1;
      if (rank + size > max_rank) continue;
      if (!blocks.empty() && code(b) < code(last)) continue;
      auto next = blocks;
      next.push_back(b);
      grow(next, rank + size);
    }
  };
  grow({}, 0);
  return out;
}

/// Sum over the cyclic group of conjugates of a random upper-triangular form.
inline metator::QuadraticForm random_invariant_form(Rng& rng, const metator::GammaLattice& lat) {
  const std::size_t r = lat.rank();
  metator::Matrix m0(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) m0(i, j) = rng.between(-3, 3);
  metator::Matrix full(r, r);
  metator::Matrix p = metator::Matrix::identity(r);
  for (std::uint64_t i = 0; i < lat.d(); ++i) {
    full += p.transpose() * m0 * p;
    p = p * lat.gamma();
  }
  return metator::QuadraticForm::from_full(full);
}

}  // namespace oracle
