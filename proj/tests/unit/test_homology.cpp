#include <gtest/gtest.h>

#include <random>

#include "factorcomplex/errors.hpp"
#include "factorcomplex/homology.hpp"
#include "factorcomplex/poset.hpp"
#include "oracles.hpp"

using namespace fcx;

namespace {

SimplicialComplex triangle_boundary() { return face_closure({{0, 1}, {1, 2}, {0, 2}}); }

SimplicialComplex octahedron() {
  std::vector<Face> facets;
  for (int x : {0, 1}) {
    for (int y : {2, 3}) {
      for (int z : {4, 5}) facets.push_back({x, y, z});
    }
  }
  return face_closure(facets);
}

// Minimal 6-vertex triangulation of the real projective plane.
SimplicialComplex rp2() {
  return face_closure({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                       {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

std::vector<long long> q_betti(const SimplicialComplex& k) {
  return betti(ChainComplex::of(k), Coefficients::rationals());
}

SimplicialComplex random_complex(std::mt19937_64& rng, int vertices, int facets, int max_dim) {
  std::vector<Face> fs;
  for (int i = 0; i < facets; ++i) {
    const int size = 1 + static_cast<int>(rng() % (max_dim + 1));
    std::vector<int> all(vertices);
    for (int v = 0; v < vertices; ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    Face f(all.begin(), all.begin() + std::min(size, vertices));
    std::sort(f.begin(), f.end());
    fs.push_back(f);
  }
  return face_closure(fs);
}

oracle::Dense to_dense(const SparseMatrix& m) {
  oracle::Dense d(m.rows, std::vector<std::int64_t>(m.cols, 0));
  for (int c = 0; c < m.cols; ++c) {
    for (const auto& [r, v] : m.columns[c]) d[r][c] = v;
  }
  return d;
}

}  // namespace

TEST(ChainComplex, SingleEdgeBoundary) {
  const auto c = ChainComplex::of(face_closure({{0, 1}}));
  const auto& d1 = c.boundary(1);
  ASSERT_EQ(d1.rows, 2);
  ASSERT_EQ(d1.cols, 1);
  ASSERT_EQ(d1.columns[0].size(), 2u);
  EXPECT_EQ(d1.columns[0][0].second + d1.columns[0][1].second, 0);
}

TEST(ChainComplex, TriangleBoundaryRankTwo) {
  const auto c = ChainComplex::of(triangle_boundary());
  EXPECT_EQ(rank_exact(c.boundary(1)), 2u);
  EXPECT_EQ(oracle::dense_rank(to_dense(c.boundary(1))), 2u);
}

TEST(ChainComplex, FullTriangleCompositeIsZero) {
  const auto c = ChainComplex::of(face_closure({{0, 1, 2}}));
  const auto d1 = to_dense(c.boundary(1));
  const auto d2 = to_dense(c.boundary(2));
  for (std::size_t i = 0; i < d1.size(); ++i) {
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < d2.size(); ++k) sum += d1[i][k] * d2[k][0];
    EXPECT_EQ(sum, 0);
  }
}

TEST(ChainComplex, RejectsNonZeroComposite) {
  // Triangle boundary with a 2-cell whose boundary is not a cycle.
  auto d1 = SparseMatrix::from_dense({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
  auto d2 = SparseMatrix::from_dense({{1}, {1}, {1}});
  EXPECT_THROW(ChainComplex({3, 3, 1}, {d1, d2}), InvariantBreach);
  auto good = SparseMatrix::from_dense({{1}, {-1}, {1}});
  EXPECT_NO_THROW(ChainComplex({3, 3, 1}, {d1, good}));
}

TEST(ChainComplex, WitnessAccompaniesCompositeBreach) {
  auto d1 = SparseMatrix::from_dense({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
  auto d2 = SparseMatrix::from_dense({{1}, {1}, {1}});
  try {
    ChainComplex({3, 3, 1}, {d1, d2});
    FAIL() << "expected a breach";
  } catch (const InvariantBreach& e) {
    EXPECT_FALSE(e.witness().empty());
  }
}

TEST(Betti, Examples) {
  EXPECT_EQ(q_betti(triangle_boundary()), (std::vector<long long>{0, 1}));
  EXPECT_EQ(q_betti(face_closure({{0, 1}, {1, 2}, {2, 3}, {0, 3}})), (std::vector<long long>{0, 1}));
  EXPECT_EQ(q_betti(octahedron()), (std::vector<long long>{0, 0, 1}));
  EXPECT_EQ(q_betti(face_closure({{0}})), (std::vector<long long>{0}));
  EXPECT_EQ(q_betti(face_closure({{0}, {1}, {2}})), (std::vector<long long>{2}));
}

TEST(Betti, RP2DependsOnCharacteristic) {
  const auto c = ChainComplex::of(rp2());
  EXPECT_EQ(betti(c, Coefficients::rationals()), (std::vector<long long>{0, 0, 0}));
  EXPECT_EQ(betti(c, Coefficients::prime(2)), (std::vector<long long>{0, 1, 1}));
  EXPECT_EQ(betti(c, Coefficients::prime(3)), (std::vector<long long>{0, 0, 0}));
}

TEST(Coefficients, Parsing) {
  EXPECT_EQ(Coefficients::parse("Q").kind, Coefficients::Kind::Rational);
  EXPECT_EQ(Coefficients::parse("GFp:7").p, 7u);
  EXPECT_EQ(Coefficients::parse("GF(5)").p, 5u);
  EXPECT_THROW(Coefficients::parse("GFp:9"), InvalidArgument);
  EXPECT_THROW(Coefficients::parse("Z"), InvalidArgument);
  EXPECT_EQ(Coefficients::prime(3).name(), "GF(3)");
}

TEST(SmithForm, Examples) {
  EXPECT_EQ(smith_normal_form(SparseMatrix::from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
            (std::vector<BigInt>{1, 1, 1}));
  EXPECT_EQ(smith_normal_form(SparseMatrix::from_dense({{2, 0}, {0, 4}})), (std::vector<BigInt>{2, 4}));
  EXPECT_EQ(smith_normal_form(SparseMatrix::from_dense({{2, 0}, {0, 3}})), (std::vector<BigInt>{1, 6}));
  EXPECT_TRUE(smith_normal_form(SparseMatrix::from_dense({{0, 0}, {0, 0}})).empty());
}

TEST(SmithForm, EntriesBeyondMachineWords) {
  const std::int64_t big = std::int64_t{1} << 40;
  const auto f = smith_normal_form(SparseMatrix::from_dense({{big, 1}, {0, big}}));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], 1);
  EXPECT_EQ(f[1], BigInt(big) * BigInt(big));
}

TEST(SmithForm, AgreesWithTextbookOracleOnRandomMatrices) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    oracle::Dense m(rows, std::vector<std::int64_t>(cols));
    for (auto& row : m) {
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % 4 == 0 ? 0 : static_cast<int>(rng() % 13) - 6);
    }
    const auto expect = oracle::dense_snf(m);
    const auto got = smith_normal_form(SparseMatrix::from_dense(m));
    ASSERT_EQ(got.size(), expect.size()) << "trial " << trial;
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], expect[i]) << "trial " << trial;
  }
}

TEST(Rank, RationalAndModularAgreeWithDenseOracles) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 9);
    const int cols = 1 + static_cast<int>(rng() % 9);
    oracle::Dense m(rows, std::vector<std::int64_t>(cols));
    for (auto& row : m) {
      for (auto& x : row) x = rng() % 3 == 0 ? static_cast<std::int64_t>(rng() % 7) - 3 : 0;
    }
    // Plant dependent rows now and then.
    if (rows > 2 && trial % 3 == 0) {
      for (int c = 0; c < cols; ++c) m[rows - 1][c] = 2 * m[0][c] - m[1][c];
    }
    const auto s = SparseMatrix::from_dense(m);
    const auto r = oracle::dense_rank(m);
    EXPECT_EQ(rank_exact(s), r);
    EXPECT_EQ(rank_rational(s), r);
    EXPECT_EQ(rank_rational(s, RankOptions{12345}), r);
    for (std::uint32_t p : {2u, 3u, 7u}) EXPECT_EQ(rank_mod_p(s, p), oracle::dense_rank_mod(m, p));
  }
}

TEST(Betti, RandomComplexesMatchDenseOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto k = random_complex(rng, 7, 6, 3);
    const auto c = ChainComplex::of(k);
    EXPECT_EQ(betti(c, Coefficients::rationals()), oracle::reduced_betti(k)) << "trial " << trial;
    EXPECT_EQ(betti(c, Coefficients::prime(2)), oracle::reduced_betti(k, 2)) << "trial " << trial;
  }
}

TEST(Betti, ModularBettiDominatesRational) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto k = random_complex(rng, 8, 8, 3);
    const auto c = ChainComplex::of(k);
    const auto q = betti(c, Coefficients::rationals());
    for (std::uint32_t p : {2u, 3u}) {
      const auto bp = betti(c, Coefficients::prime(p));
      for (std::size_t d = 0; d < q.size(); ++d) EXPECT_GE(bp[d], q[d]);
    }
  }
}

TEST(Betti, ConesAreAcyclic) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto base = random_complex(rng, 7, 6, 2);
    const auto cone = join(base, face_closure({{100}}));
    for (long long b : q_betti(cone)) EXPECT_EQ(b, 0);
  }
}

TEST(HomologyReport, PointAndCircle) {
  const auto pt = homology_report(face_closure({{0}}));
  EXPECT_EQ(pt.betti, (std::vector<long long>{0}));
  EXPECT_TRUE(pt.torsion[0].empty());
  const auto s1 = homology_report(triangle_boundary());
  EXPECT_EQ(s1.betti, (std::vector<long long>{0, 1}));
  EXPECT_EQ(s1.euler, 0);
  for (const auto& t : s1.torsion) EXPECT_TRUE(t.empty());
}

TEST(HomologyReport, RP2Torsion) {
  const auto r = homology_report(rp2());
  EXPECT_EQ(r.betti, (std::vector<long long>{0, 0, 0}));
  ASSERT_EQ(r.torsion.size(), 3u);
  EXPECT_EQ(r.torsion[1], (std::vector<BigInt>{2}));
  EXPECT_TRUE(r.torsion[0].empty());
  EXPECT_TRUE(r.torsion[2].empty());

  HomologyOptions mod2;
  mod2.coefficients = Coefficients::prime(2);
  EXPECT_EQ(homology_report(rp2(), mod2).betti, (std::vector<long long>{0, 1, 1}));
}

TEST(HomologyReport, EulerMatchesAlternatingBettiSum) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto k = random_complex(rng, 8, 7, 3);
    const auto r = homology_report(k);
    long long chi = 0;
    for (std::size_t d = 0; d < r.face_counts.size(); ++d) {
      chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(r.face_counts[d]);
    }
    long long from_betti = 1;
    for (std::size_t d = 0; d < r.betti.size(); ++d) from_betti += (d % 2 == 0 ? 1 : -1) * r.betti[d];
    EXPECT_EQ(r.euler, chi);
    EXPECT_EQ(chi, from_betti);
  }
}
