#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace metator;

namespace {

Matrix symmetric_random(oracle::Rng& rng, std::size_t r, std::int64_t bound) {
  Matrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) m(i, j) = rng.between(-bound, bound);
  return QuadraticForm::from_full(m).bilinear();
}

// Y^# contains nY, so membership only depends on the residue mod n.
void expect_matches_residues(const Sublattice& s, const std::set<oracle::Residue>& expected,
                             std::size_t rank, std::int64_t n) {
  oracle::for_each_residue(rank, n, [&](const oracle::Residue& y) {
    EXPECT_EQ(s.contains(oracle::to_vector(y)), expected.count(y) == 1);
  });
}

}  // namespace

TEST(BilinearForm, Examples) {
  EXPECT_EQ(bilinear_form(QuadraticForm(Matrix{{1}})), (Matrix{{2}}));
  EXPECT_EQ(bilinear_form(QuadraticForm(Matrix{{0, 1}, {0, 0}})), (Matrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(bilinear_form(QuadraticForm(Matrix{{1, 1}, {0, 1}})), (Matrix{{2, 1}, {1, 2}}));
}

TEST(BilinearForm, DiagonalIsTwiceQ) {
  oracle::Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = static_cast<std::size_t>(rng.between(1, 4));
    Matrix up(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) up(i, j) = rng.between(-5, 5);
    const QuadraticForm qf(up);
    const Matrix b = qf.bilinear();
    EXPECT_EQ(b, b.transpose());
    const Vector y = oracle::random_matrix(rng, r, 1, -4, 4).column(0);
    EXPECT_EQ(dot(y, b * y), 2 * qf(y));
    const Vector z = oracle::random_matrix(rng, r, 1, -4, 4).column(0);
    EXPECT_EQ(qf.pair(y, z), qf(add(y, z)) - qf(y) - qf(z));
  }
}

TEST(QuadraticForm, RejectsLowerEntries) {
  EXPECT_THROW(QuadraticForm(Matrix{{1, 0}, {1, 0}}), error);
}

TEST(GammaInvariance, Examples) {
  const GammaLattice swap(Matrix{{0, 1}, {1, 0}}, 2);
  EXPECT_TRUE(check_gamma_invariance(swap, QuadraticForm(Matrix{{0, 1}, {0, 0}})));
  EXPECT_FALSE(check_gamma_invariance(swap, QuadraticForm(Matrix{{1, 0}, {0, 0}})));
  const GammaLattice id(Matrix::identity(3), 1);
  EXPECT_TRUE(check_gamma_invariance(id, QuadraticForm(Matrix{{1, 2, 3}, {0, 4, 5}, {0, 0, 6}})));
  EXPECT_THROW(check_gamma_invariance(swap, QuadraticForm(Matrix{{1}})), dimension_error);
}

TEST(GammaLattice, Validation) {
  EXPECT_THROW(GammaLattice(Matrix{{0, 1}, {1, 0}}, 3), error);
  EXPECT_THROW(GammaLattice(Matrix{{2}}, 1), error);
  EXPECT_NO_THROW(GammaLattice(Matrix{{1}}, 4));
  EXPECT_EQ(GammaLattice(Matrix{{1}}, 4).warnings().size(), 1U);
  EXPECT_TRUE(GammaLattice(Matrix{{-1}}, 2).warnings().empty());
}

TEST(InvariantSublattice, Examples) {
  EXPECT_EQ(invariant_sublattice(GammaLattice(Matrix{{0, 1}, {1, 0}}, 2)),
            Sublattice::from_vectors(2, {{1, 1}}));
  EXPECT_EQ(invariant_sublattice(GammaLattice(Matrix::identity(3), 1)), Sublattice::full(3));
  EXPECT_EQ(invariant_sublattice(GammaLattice(Matrix{{-1}}, 2)).rank(), 0U);
}

TEST(InvariantSublattice, SaturatedAndFixed) {
  oracle::Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto f = random_instance(static_cast<std::uint64_t>(t), Profile::wide);
    const GammaLattice lat = f.lattice();
    const Sublattice fx = invariant_sublattice(lat);
    for (const auto& v : fx.basis_vectors()) EXPECT_EQ(lat.gamma() * v, v);
    // Saturation: 2v fixed implies v fixed, checked on small residues.
    oracle::for_each_residue(lat.rank(), 3, [&](const oracle::Residue& r) {
      Vector v = oracle::to_vector(r);
      for (auto& x : v) x -= 1;
      EXPECT_EQ(fx.contains(v), lat.gamma() * v == v);
    });
  }
}

TEST(SharpSublattice, Examples) {
  const QuadraticForm sq(Matrix{{1}});
  EXPECT_EQ(sharp_sublattice(sq, 2, Sublattice::full(1)), Sublattice::full(1));
  const Sublattice four = sharp_sublattice(sq, 4, Sublattice::full(1));
  expect_matches_residues(four, oracle::sharp_residues({{2}}, 4, {{1}}), 1, 4);
  EXPECT_EQ(four, Sublattice::from_vectors(1, {{2}}));

  const QuadraticForm hyp(Matrix{{0, 1}, {0, 0}});
  const Sublattice w = invariant_sublattice(GammaLattice(Matrix{{0, 1}, {1, 0}}, 2));
  const Sublattice gs = sharp_sublattice(hyp, 2, w);
  expect_matches_residues(gs, oracle::sharp_residues({{0, 1}, {1, 0}}, 2, {{1, 1}}), 2, 2);
  EXPECT_TRUE(gs.contains(Vector{1, 1}));
  EXPECT_FALSE(gs.contains(Vector{1, 0}));
  EXPECT_THROW(sharp_sublattice(hyp, 0, w), error);
}

TEST(SharpSublattice, MatchesResidueEnumeration) {
  oracle::Rng rng(42);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = static_cast<std::size_t>(rng.between(1, 3));
    const std::int64_t n = rng.between(1, 12);
    const QuadraticForm qf = QuadraticForm::from_full(oracle::random_matrix(rng, r, r, -6, 6));
    const Matrix wgen = oracle::random_matrix(rng, r, static_cast<std::size_t>(rng.between(0, 2)), -3, 3);
    const Sublattice w = Sublattice::from_generators(r, wgen);
    std::vector<oracle::Residue> ws;
    for (const auto& v : w.basis_vectors()) {
      oracle::Residue x;
      for (const auto& e : v) x.push_back(static_cast<std::int64_t>(e));
      ws.push_back(x);
    }
    const auto expected = oracle::sharp_residues(oracle::to_int(qf.bilinear()), n, ws);
    expect_matches_residues(sharp_sublattice(qf, n, w), expected, r, n);
  }
}

TEST(Smith, Examples) {
  const auto a = smith_elementary_divisors(Matrix{{2}}, 2);
  EXPECT_EQ(a.d, (Vector{2}));
  EXPECT_EQ(a.e, (Vector{1}));
  const auto b = smith_elementary_divisors(Matrix{{6, 0, 0}, {0, 2, 0}, {0, 0, 1}}, 6);
  EXPECT_EQ(b.d, (Vector{1, 2, 6}));
  EXPECT_EQ(b.e, (Vector{6, 3, 1}));
  const Matrix hyp{{0, 1}, {1, 0}};
  const auto c = smith_elementary_divisors(hyp, 2);
  EXPECT_EQ(c.d, (Vector{1, 1}));
  EXPECT_EQ(c.e, (Vector{2, 2}));
  EXPECT_EQ(c.alpha.transpose() * Matrix::diagonal(c.d) * c.beta, hyp);
}

TEST(Smith, DegenerateFormImposesNoCondition) {
  const auto s = smith_elementary_divisors(Matrix(2, 2), 4);
  EXPECT_EQ(s.d, (Vector{0, 0}));
  EXPECT_EQ(s.e, (Vector{1, 1}));
  EXPECT_EQ(s.sharp_prediction(), Sublattice::full(2));
  const auto t = smith_elementary_divisors(Matrix{{2, 0}, {0, 0}}, 4);
  EXPECT_EQ(t.sharp_prediction(), sharp_sublattice(QuadraticForm(Matrix{{1, 0}, {0, 0}}), 4, Sublattice::full(2)));
}

TEST(Smith, FactorizationAndPrediction) {
  oracle::Rng rng(7);
  for (int t = 0; t < 80; ++t) {
    const std::size_t r = static_cast<std::size_t>(rng.between(1, 4));
    const std::int64_t n = rng.between(1, 30);
    const Matrix b = symmetric_random(rng, r, 5);
    const SmithForm sf = smith_form(b);
    EXPECT_EQ(sf.u * b * sf.v, sf.d);
    EXPECT_EQ(sf.u * sf.u_inv, Matrix::identity(r));
    EXPECT_EQ(sf.v * sf.v_inv, Matrix::identity(r));
    for (std::size_t i = 0; i + 1 < r; ++i) {
      EXPECT_GE(sf.diagonal[i], 0);
      if (sf.diagonal[i] != 0) EXPECT_EQ(sf.diagonal[i + 1] % sf.diagonal[i], 0);
      else EXPECT_EQ(sf.diagonal[i + 1], 0);
    }
    const auto sd = smith_elementary_divisors(b, n);
    EXPECT_EQ(sd.alpha.transpose() * Matrix::diagonal(sd.d) * sd.beta, b);
    for (std::size_t j = 0; j < r; ++j) {
      // e_j is the least positive e with d_j e in nZ.
      Int e = 1;
      while ((sd.d[j] * e) % n != 0) ++e;
      EXPECT_EQ(sd.e[j], e);
    }
  }
}

TEST(Smith, PredictionEqualsSharpForGramMatrices) {
  oracle::Rng rng(8);
  for (int t = 0; t < 80; ++t) {
    const std::size_t r = static_cast<std::size_t>(rng.between(1, 4));
    const std::int64_t n = rng.between(1, 24);
    Matrix up(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) up(i, j) = rng.between(-4, 4);
    const QuadraticForm qf(up);
    EXPECT_EQ(smith_elementary_divisors(qf.bilinear(), n).sharp_prediction(),
              sharp_sublattice(qf, n, Sublattice::full(r)));
  }
}

TEST(Operators, SplitCase) {
  const GammaLattice lat(Matrix::identity(3), 1);
  EXPECT_EQ(operator_matrix(GammaOperator::trace, lat), Matrix::identity(3));
  EXPECT_EQ(operator_matrix(GammaOperator::twisted_trace, lat, 7), Matrix::identity(3));
  EXPECT_TRUE(operator_matrix(GammaOperator::delta, lat).is_zero());
  EXPECT_EQ(operator_matrix(GammaOperator::twisted_delta, lat, 7), Matrix::identity(3) * Int(6));
}

TEST(Operators, SwapTwistedTrace) {
  const GammaLattice lat(Matrix{{0, 1}, {1, 0}}, 2);
  EXPECT_EQ(operator_matrix(GammaOperator::twisted_trace, lat, 3), (Matrix{{1, 3}, {3, 1}}));
  EXPECT_EQ(apply_operator(GammaOperator::trace, lat, 1, Vector{2, 5}), (Vector{7, 7}));
}

TEST(Operators, IdentitiesOnRandomLattices) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto f = random_instance(seed, Profile::wide);
    const GammaLattice lat = f.lattice();
    const Int q = f.q;
    const Matrix tr = operator_matrix(GammaOperator::trace, lat);
    const Matrix dl = operator_matrix(GammaOperator::delta, lat);
    EXPECT_TRUE((tr * dl).is_zero());
    EXPECT_TRUE((dl * tr).is_zero());
    const Matrix trq = operator_matrix(GammaOperator::twisted_trace, lat, q);
    const Matrix dq = operator_matrix(GammaOperator::twisted_delta, lat, q);
    EXPECT_EQ(trq * dq, Matrix::identity(lat.rank()) * (ipow(q, lat.d()) - 1));
    EXPECT_EQ(lat.gamma().pow(lat.d()), Matrix::identity(lat.rank()));
  }
}

TEST(ImageInQuotient, Examples) {
  const auto a = image_in_quotient(Sublattice::from_vectors(1, {{2}}), 4);
  EXPECT_EQ(a.order(), 2);
  EXPECT_TRUE(a.contains(Vector{2}));
  EXPECT_FALSE(a.contains(Vector{1}));
  EXPECT_EQ(image_in_quotient(Sublattice::full(3), 5).order(), 125);
  const auto d = image_in_quotient(Sublattice::from_vectors(2, {{1, 1}}), 3);
  EXPECT_EQ(d.order(), 3);
  EXPECT_EQ(d, ResidueSubgroup::generated_by(Matrix{{1}, {1}}, 2, 3));
  EXPECT_THROW(image_in_quotient(Sublattice::full(1), 0), error);
}

TEST(ImageInQuotient, MatchesClosure) {
  oracle::Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = static_cast<std::size_t>(rng.between(1, 3));
    const std::int64_t n = rng.between(2, 9);
    const Matrix gens = oracle::random_matrix(rng, k, static_cast<std::size_t>(rng.between(0, 3)), -10, 10);
    std::vector<oracle::Residue> rs;
    for (std::size_t j = 0; j < gens.cols(); ++j) {
      oracle::Residue r;
      for (std::size_t i = 0; i < k; ++i) r.push_back(oracle::mod(static_cast<std::int64_t>(gens(i, j)), n));
      rs.push_back(r);
    }
    const auto expected = oracle::closure(k, n, rs);
    const auto sub = ResidueSubgroup::generated_by(gens, k, n);
    EXPECT_EQ(sub.order(), static_cast<std::int64_t>(expected.size()));
    oracle::for_each_residue(k, n, [&](const oracle::Residue& y) {
      EXPECT_EQ(sub.contains(oracle::to_vector(y)), expected.count(y) == 1);
    });
  }
}

TEST(QuotientStructure, Examples) {
  const auto z4 = ResidueSubgroup::whole(1, 4);
  const auto two = ResidueSubgroup::generated_by(Matrix{{2}}, 1, 4);
  EXPECT_EQ(quotient_structure(z4, two).factors, (Vector{2}));
  EXPECT_TRUE(quotient_structure(two, two).trivial());

  const auto a = ResidueSubgroup::whole(2, 6);
  const auto diag = ResidueSubgroup::generated_by(Matrix{{1}, {1}}, 2, 6);
  const auto p = quotient_structure(a, diag);
  EXPECT_EQ(p.factors, (Vector{6}));
  // Oracle: six cosets, and the generator has order exactly 6 modulo the diagonal.
  const auto dset = oracle::closure(2, 6, {{1, 1}});
  std::set<std::set<oracle::Residue>> cosets;
  oracle::for_each_residue(2, 6, [&](const oracle::Residue& y) {
    std::set<oracle::Residue> c;
    for (const auto& d : dset) c.insert({oracle::mod(y[0] + d[0], 6), oracle::mod(y[1] + d[1], 6)});
    cosets.insert(c);
  });
  EXPECT_EQ(cosets.size(), 6U);
  const Vector g = reduce_mod(p.generators.column(0), 6);
  for (int k = 1; k < 6; ++k) EXPECT_FALSE(diag.contains(scale(g, k)));
  EXPECT_TRUE(diag.contains(scale(g, 6)));
  EXPECT_THROW(quotient_structure(diag, a), error);
}

TEST(QuotientStructure, OrdersAndChain) {
  oracle::Rng rng(19);
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = static_cast<std::size_t>(rng.between(1, 3));
    const Int n = rng.between(2, 12);
    const auto big = ResidueSubgroup::generated_by(oracle::random_matrix(rng, k, 3, -6, 6), k, n);
    const auto small = big.intersect(ResidueSubgroup::generated_by(oracle::random_matrix(rng, k, 2, -6, 6), k, n));
    const auto p = quotient_structure(big, small);
    EXPECT_EQ(p.order() * small.order(), big.order());
    for (std::size_t i = 0; i + 1 < p.factors.size(); ++i) EXPECT_EQ(p.factors[i + 1] % p.factors[i], 0);
    for (const auto& f : p.factors) EXPECT_GE(f, 2);
  }
}

TEST(NormalForms, HermiteIsCanonical) {
  oracle::Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = static_cast<std::size_t>(rng.between(1, 4));
    const Matrix a = oracle::random_matrix(rng, r, r, -9, 9);
    const Matrix u = oracle::random_unimodular(rng, r, 6);
    EXPECT_EQ(hermite_rows(a), hermite_rows(u * a));
    if (determinant(a) != 0) {
      const Matrix h = hermite_rows(a);
      Int prod = 1;
      for (std::size_t i = 0; i < r; ++i) prod *= h(i, i);
      EXPECT_EQ(prod, abs(determinant(a)));
    }
  }
}

TEST(NormalForms, DeterminantMatchesCofactorExpansion) {
  oracle::Rng rng(29);
  const std::function<Int(const Matrix&)> cofactor = [&](const Matrix& m) -> Int {
    if (m.rows() == 1) return m(0, 0);
    Int s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Matrix minor(m.rows() - 1, m.cols() - 1);
      for (std::size_t i = 1; i < m.rows(); ++i)
        for (std::size_t j = 0, jj = 0; j < m.cols(); ++j)
          if (j != c) minor(i - 1, jj++) = m(i, j);
      s += (c % 2 == 0 ? 1 : -1) * m(0, c) * cofactor(minor);
    }
    return s;
  };
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = static_cast<std::size_t>(rng.between(1, 4));
    const Matrix a = oracle::random_matrix(rng, r, r, -7, 7);
    EXPECT_EQ(determinant(a), cofactor(a));
  }
}

TEST(NormalForms, KernelIsExactAndSaturated) {
  oracle::Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = static_cast<std::size_t>(rng.between(1, 3));
    const std::size_t c = static_cast<std::size_t>(rng.between(1, 4));
    const Matrix a = oracle::random_matrix(rng, m, c, -3, 3);
    const Matrix k = integer_kernel(a);
    EXPECT_TRUE((a * k).is_zero());
    const Sublattice ks = Sublattice::from_generators(c, k);
    oracle::for_each_residue(c, 5, [&](const oracle::Residue& r) {
      Vector v = oracle::to_vector(r);
      for (auto& x : v) x -= 2;
      EXPECT_EQ(ks.contains(v), (a * v) == Vector(m, 0));
    });
  }
}

TEST(Sublattice, IntersectionAndSum) {
  oracle::Rng rng(37);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = static_cast<std::size_t>(rng.between(1, 3));
    const Sublattice a = Sublattice::from_generators(r, oracle::random_matrix(rng, r, 2, -4, 4));
    const Sublattice b = Sublattice::from_generators(r, oracle::random_matrix(rng, r, 2, -4, 4));
    const Sublattice i = a.intersect(b);
    const Sublattice s = a + b;
    oracle::for_each_residue(r, 9, [&](const oracle::Residue& x) {
      Vector v = oracle::to_vector(x);
      for (auto& e : v) e -= 4;
      EXPECT_EQ(i.contains(v), a.contains(v) && b.contains(v));
    });
    EXPECT_TRUE(s.contains(a));
    EXPECT_TRUE(s.contains(b));
  }
}

TEST(LatticeChain, RandomInstances) {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const auto f = random_instance(seed, Profile::standard);
    const UnramifiedInstance inst(f.lattice(), f.form(), f.q, f.n);
    EXPECT_TRUE(lattice_chain_report(inst).ok()) << seed;
    // Independent residue check of delta_q(Y) inside Y^{Gamma #}.
    const auto b = oracle::to_int(inst.bilinear());
    std::vector<oracle::Residue> fixed;
    for (const auto& v : inst.fixed().basis_vectors()) {
      oracle::Residue x;
      for (const auto& e : v) x.push_back(static_cast<std::int64_t>(e));
      fixed.push_back(x);
    }
    const auto dq = oracle::to_int(inst.twisted_delta());
    for (std::size_t i = 0; i < inst.rank(); ++i) {
      oracle::Residue e(inst.rank(), 0);
      e[i] = 1;
      const auto img = oracle::apply(dq, e);
      for (const auto& w : fixed) EXPECT_EQ(oracle::mod(oracle::form(b, img, w), f.n), 0);
    }
  }
}

TEST(Determinism, RepeatedCallsAgree) {
  const auto f = random_instance(77, Profile::wide);
  const UnramifiedInstance inst(f.lattice(), f.form(), f.q, f.n);
  EXPECT_EQ(inst.sharp(), inst.sharp());
  EXPECT_EQ(smith_form(inst.bilinear()).u, smith_form(inst.bilinear()).u);
}
