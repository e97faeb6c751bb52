#pragma once

#include "instance.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace metator {

enum class Profile { standard, split, wide, real };

inline std::optional<Profile> parse_profile(const std::string& s) {
  if (s == "default") return Profile::standard;
  if (s == "split") return Profile::split;
  if (s == "wide") return Profile::wide;
  if (s == "real") return Profile::real;
  return std::nullopt;
}

inline std::string profile_name(Profile p) {
  switch (p) {
    case Profile::standard: return "default";
    case Profile::split: return "split";
    case Profile::wide: return "wide";
    case Profile::real: return "real";
  }
  return "default";
}

namespace detail {

/// mt19937_64 output is fixed by the standard; reduce it by hand so the
/// stream does not depend on the library's distributions.
class Draw {
public:
  explicit Draw(std::uint64_t seed) : eng_(seed) {}
  std::int64_t below(std::int64_t k) { return static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(k)); }
  std::int64_t between(std::int64_t lo, std::int64_t hi) { return lo + below(hi - lo + 1); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(below(static_cast<std::int64_t>(v.size())))]; }

private:
  std::mt19937_64 eng_;
};

inline Matrix block(const std::string& name) {
  if (name == "one") return Matrix{{1}};
  if (name == "neg") return Matrix{{-1}};
  if (name == "swap") return Matrix{{0, 1}, {1, 0}};
  if (name == "rot3") return Matrix{{0, -1}, {1, -1}};
  if (name == "cyc3") return Matrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  throw error("unknown block " + name);
}

/// Block-diagonal gamma of order dividing d, at least one block nontrivial
/// when the rank allows it.
inline Matrix block_gamma(Draw& rng, std::size_t rank, std::uint64_t d) {
  std::vector<std::string> kinds;
  if (d == 2) kinds = {"swap", "neg", "one"};
  else if (d == 3) kinds = {"cyc3", "rot3", "one"};
  else kinds = {"one"};
  Matrix g(rank, rank);
  std::size_t at = 0;
  bool nontrivial = false;
  while (at < rank) {
    std::vector<std::string> fit;
    for (const auto& k : kinds)
      if (block(k).rows() <= rank - at) fit.push_back(k);
    std::string k = rng.pick(fit);
    if (!nontrivial && k == "one" && fit.size() > 1 && rng.below(2) == 0) k = fit.front();
    const Matrix b = block(k);
    nontrivial = nontrivial || k != "one";
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) g(at + i, at + j) = b(i, j);
    at += b.rows();
  }
  return g;
}

/// U gamma U^{-1} for a short product U of elementary matrices.
inline Matrix conjugate(Draw& rng, const Matrix& g) {
  const std::size_t r = g.rows();
  Matrix u = Matrix::identity(r);
  Matrix u_inv = Matrix::identity(r);
  if (r < 2) return g;
  const std::int64_t steps = rng.below(3);
  for (std::int64_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.below(static_cast<std::int64_t>(r)));
    auto j = static_cast<std::size_t>(rng.below(static_cast<std::int64_t>(r) - 1));
    if (j >= i) ++j;
    const Int c = rng.below(2) == 0 ? 1 : -1;
    Matrix e = Matrix::identity(r);
    Matrix e_inv = Matrix::identity(r);
    e(i, j) = c;
    e_inv(i, j) = -c;
    u = e * u;
    u_inv = u_inv * e_inv;
  }
  return u * g * u_inv;
}

/// Averages a random form over the cyclic group generated by gamma.
inline Matrix invariant_form(Draw& rng, const Matrix& g, std::uint64_t d) {
  const std::size_t r = g.rows();
  Matrix m0(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) m0(i, j) = rng.between(-2, 2);
  Matrix full(r, r);
  Matrix p = Matrix::identity(r);
  for (std::uint64_t i = 0; i < d; ++i) {
    full += p.transpose() * m0 * p;
    p = p * g;
  }
  return QuadraticForm::from_full(full).upper();
}

}  // namespace detail

/// Deterministic function of (seed, profile); the result always validates.
inline InstanceFile random_instance(std::uint64_t seed, Profile profile) {
  detail::Draw rng(seed);
  InstanceFile f;
  f.seed = seed;
  switch (profile) {
    case Profile::standard:
      f.rank = static_cast<std::size_t>(rng.between(1, 3));
      f.d = static_cast<std::uint64_t>(rng.between(1, 3));
      break;
    case Profile::split:
      f.rank = static_cast<std::size_t>(rng.between(1, 3));
      f.d = 1;
      break;
    case Profile::wide:
      f.rank = static_cast<std::size_t>(rng.between(1, 4));
      f.d = static_cast<std::uint64_t>(rng.between(1, 3));
      break;
    case Profile::real:
      f.rank = static_cast<std::size_t>(rng.between(1, 4));
      f.d = static_cast<std::uint64_t>(rng.between(1, 2));
      break;
  }
  f.gamma = detail::conjugate(rng, detail::block_gamma(rng, f.rank, f.d));
  f.q_upper = detail::invariant_form(rng, f.gamma, f.d);
  if (profile == Profile::real) {
    f.kind = InstanceKind::real;
    f.n = 2;
  } else {
    f.kind = InstanceKind::unramified;
    f.q = rng.pick(std::vector<std::int64_t>{3, 4, 5, 7, 8, 9});
    // n = 1 makes every pairing vanish; only the wide profile keeps it.
    std::vector<std::int64_t> divisors;
    for (std::int64_t k = profile == Profile::wide ? 1 : 2; k <= f.q - 1; ++k)
      if ((f.q - 1) % k == 0) divisors.push_back(k);
    f.n = rng.pick(divisors);
  }
  return f;
}

}  // namespace metator
