#include <gtest/gtest.h>

#include "oracles.hpp"
#include "planar/errors.hpp"
#include "planar/markov.hpp"

using namespace planar;

namespace {

InclusionData make(std::vector<std::uint64_t> a,
                   std::vector<std::vector<std::uint64_t>> m) {
  return InclusionData::from_matrix(AlgebraDims(std::move(a)), IntMatrix::from_rows(m));
}

std::vector<mpq_class> q(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<mpq_class> out;
  for (auto [n, d] : xs) out.emplace_back(n, d);
  for (auto& x : out) x.canonicalize();
  return out;
}

}  // namespace

TEST(TraceWeights, Examples) {
  EXPECT_EQ(canonical_trace_weights(AlgebraDims{1, 1}), q({{1, 2}, {1, 2}}));
  EXPECT_EQ(canonical_trace_weights(AlgebraDims{1, 2}), q({{1, 5}, {4, 5}}));
  EXPECT_EQ(canonical_trace_weights(AlgebraDims{2, 3}), q({{4, 13}, {9, 13}}));
}

TEST(InclusionValidation, RejectsBadShapes) {
  EXPECT_THROW(make({1, 1}, {{1, 0}, {0, 0}}), InvalidInclusion);
  EXPECT_THROW(make({1}, {{1, 0}}), InvalidInclusion);
  EXPECT_THROW(make({1, 1}, {{1}}), InvalidInclusion);
  EXPECT_THROW(AlgebraDims({}), InvalidInclusion);
  EXPECT_THROW(AlgebraDims({0, 1}), InvalidInclusion);
  EXPECT_THROW(InclusionData(AlgebraDims{1}, AlgebraDims{3}, IntMatrix{{2}}),
               InvalidInclusion);
  EXPECT_NO_THROW(InclusionData(AlgebraDims{1}, AlgebraDims{2}, IntMatrix{{2}}));
}

TEST(Analyze, Examples) {
  auto r1 = analyze(make({1}, {{1, 1, 1}}));
  EXPECT_TRUE(r1.is_markov);
  EXPECT_EQ(r1.r, 3);
  EXPECT_TRUE(r1.is_abelian);

  auto r2 = analyze(make({1, 1}, {{2, 0}, {0, 2}}));
  EXPECT_TRUE(r2.is_markov);
  EXPECT_EQ(r2.r, 4);
  EXPECT_TRUE(r2.is_abelian);

  auto r3 = analyze(make({1, 1}, {{1, 1}, {1, 0}}));
  EXPECT_FALSE(r3.is_markov);
  EXPECT_EQ(r3.r, mpq_class(5, 2));
  EXPECT_EQ(r3.mb, (std::vector<mpz_class>{3, 2}));
}

TEST(Analyze, CorpusClassification) {
  for (const auto& c : oracle::corpus()) {
    SCOPED_TRACE(c.name);
    auto rep = analyze(c.inclusion());
    EXPECT_EQ(rep.is_markov, c.markov);
    EXPECT_EQ(rep.is_abelian, c.abelian);
    EXPECT_EQ(rep.r, mpq_class(c.r_num, c.r_den));
    EXPECT_FALSE(rep.index_violation);
    if (rep.is_markov) {
      EXPECT_TRUE(rep.index_integral);
    }
  }
}

TEST(Abelian, MatchesMatrixModelCommutator) {
  for (const auto& c : oracle::corpus()) {
    SCOPED_TRACE(c.name);
    EXPECT_EQ(is_abelian(c.inclusion()), oracle::brute_force_commute(c.a, c.m));
  }
}

TEST(BasicConstruction, Examples) {
  auto c2 = make({1}, {{1, 1}});
  auto bc = basic_construction(c2);
  EXPECT_EQ(bc.a(), (AlgebraDims{1, 1}));
  EXPECT_EQ(bc.b(), (AlgebraDims{2}));
  EXPECT_EQ(bc.m(), (IntMatrix{{1}, {1}}));

  auto m3 = basic_construction(make({1}, {{3}}));
  EXPECT_EQ(m3.a(), (AlgebraDims{3}));
  EXPECT_EQ(m3.b(), (AlgebraDims{9}));
  EXPECT_EQ(m3.m(), (IntMatrix{{3}}));

  auto twice = basic_construction(bc);
  EXPECT_EQ(twice.m(), (IntMatrix{{1, 1}}));
  EXPECT_EQ(twice.a(), (AlgebraDims{2}));
  EXPECT_EQ(twice.b(), (AlgebraDims{2, 2}));

  EXPECT_THROW(basic_construction(make({1, 1}, {{1, 1}, {1, 0}})), NotMarkov);
}

TEST(BasicConstruction, PreservesMarkovAndIndex) {
  for (const auto& c : oracle::markov_corpus()) {
    SCOPED_TRACE(c.name);
    auto inc = c.inclusion();
    for (int step = 0; step < 4; ++step) {
      auto next = basic_construction(inc);
      auto rep = analyze(next);
      EXPECT_TRUE(rep.is_markov);
      EXPECT_EQ(rep.r, mpq_class(c.r_num, c.r_den));
      inc = next;
    }
  }
}

TEST(JonesTower, Examples) {
  auto tower = jones_tower(make({1}, {{1, 1}}), 2);
  std::vector<AlgebraDims> expected{{1}, {1, 1}, {2}, {2, 2}, {4}, {4, 4}};
  EXPECT_EQ(tower, expected);

  auto flat = jones_tower(make({1}, {{1, 1}}), 0);
  EXPECT_EQ(flat, (std::vector<AlgebraDims>{{1}, {1, 1}}));

  auto m2 = jones_tower(make({1}, {{2}}), 1);
  EXPECT_EQ(m2, (std::vector<AlgebraDims>{{1}, {2}, {4}, {8}}));

  EXPECT_THROW(jones_tower(make({1, 1}, {{1, 1}, {1, 0}}), 1), NotMarkov);
}

TEST(JonesTower, MatchesTensorFormAndRatios) {
  for (const auto& c : oracle::markov_corpus()) {
    SCOPED_TRACE(c.name);
    auto inc = c.inclusion();
    std::uint64_t r = static_cast<std::uint64_t>(c.r_num);
    auto tower = jones_tower(inc, 4);
    std::uint64_t rk = 1;
    for (unsigned k = 0; k <= 4; ++k, rk *= r) {
      EXPECT_EQ(tower[2 * k], inc.a().scaled(rk));
      EXPECT_EQ(tower[2 * k + 1], inc.b().scaled(rk));
      mpz_class dim_a = tower[2 * k].total_dimension();
      mpz_class dim_b = tower[2 * k + 1].total_dimension();
      EXPECT_EQ(dim_b, dim_a * r);
      if (k > 0) {
        EXPECT_EQ(dim_a, tower[2 * k - 1].total_dimension() * r);
      }
    }
  }
}

TEST(RelativeCommutants, Examples) {
  auto c2 = make({1}, {{1, 1}});
  EXPECT_EQ(relative_commutant_dims(c2, 1, Flavor::BB), (AlgebraDims{2, 2}));
  EXPECT_EQ(relative_commutant_dims(c2, 0, Flavor::AA), c2.a());
  auto c3 = make({1}, {{1, 1, 1}});
  EXPECT_EQ(relative_commutant_dims(c3, 2, Flavor::AB), (AlgebraDims{9, 9, 9}));
  EXPECT_EQ(relative_commutant_dims(c3, 2, Flavor::BA), (AlgebraDims{9}));
  EXPECT_THROW(relative_commutant_dims(make({2}, {{2}}), 1, Flavor::AA), NotAbelian);
  EXPECT_THROW(relative_commutant_dims(make({1, 1}, {{1, 1}, {1, 0}}), 1, Flavor::AA),
               NotMarkov);
}

TEST(WordNorm, Examples) {
  auto c2 = make({1}, {{1, 1}});
  auto n2 = word_norm(c2, 2, WordStart::M);
  EXPECT_NEAR(n2.numeric, 2.0, 1e-12);
  EXPECT_EQ(n2.theoretical, RadicalScalar(2L));
  EXPECT_TRUE(n2.agrees);

  auto n1 = word_norm(c2, 1, WordStart::M);
  EXPECT_NEAR(n1.numeric, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(n1.theoretical, RadicalScalar::root4(2, 2));

  auto central = word_norm(make({1, 1}, {{2, 0}, {0, 2}}), 3, WordStart::M);
  EXPECT_NEAR(central.numeric, 8.0, 1e-9);
  EXPECT_EQ(central.theoretical, RadicalScalar(8L));

  EXPECT_THROW(word_norm(make({1, 1}, {{1, 1}, {1, 0}}), 1, WordStart::M), NotMarkov);
}

TEST(WordNorm, AgreesWithSvdOracle) {
  for (const auto& c : oracle::markov_corpus()) {
    SCOPED_TRACE(c.name);
    for (unsigned k = 0; k <= 6; ++k) {
      for (auto start : {WordStart::M, WordStart::MT}) {
        auto wn = word_norm(c.inclusion(), k, start);
        double svd = oracle::svd_word_norm(c.m, k, start == WordStart::M);
        EXPECT_TRUE(wn.agrees);
        EXPECT_NEAR(wn.numeric, svd, 1e-9 * svd);
        EXPECT_NEAR(wn.theoretical.to_double(), std::pow(double(c.r_num), k / 2.0),
                    1e-9 * svd);
      }
    }
  }
}

TEST(Invariants, EigenRelationsAndTraceCompatibility) {
  for (const auto& c : oracle::markov_corpus()) {
    SCOPED_TRACE(c.name);
    auto inc = c.inclusion();
    auto r = static_cast<std::uint64_t>(c.r_num);
    // (m mᵗ)^k a = r^k a, exactly, k ≤ 8.
    std::vector<mpz_class> v;
    for (auto x : inc.a().blocks()) v.emplace_back(static_cast<unsigned long>(x));
    mpz_class rk = 1;
    for (unsigned k = 1; k <= 8; ++k) {
      std::vector<mpz_class> w(inc.t(), 0), u(inc.s(), 0);
      for (std::size_t j = 0; j < inc.t(); ++j)
        for (std::size_t i = 0; i < inc.s(); ++i)
          w[j] += v[i] * static_cast<unsigned long>(inc.m()(i, j));
      for (std::size_t i = 0; i < inc.s(); ++i)
        for (std::size_t j = 0; j < inc.t(); ++j)
          u[i] += w[j] * static_cast<unsigned long>(inc.m()(i, j));
      v = u;
      rk *= static_cast<unsigned long>(r);
      for (std::size_t i = 0; i < inc.s(); ++i)
        ASSERT_EQ(v[i], rk * static_cast<unsigned long>(inc.a()[i]));
    }
    // τ_i / a_i = Σ_j m_ij τ_j / b_j
    auto ta = canonical_trace_weights(inc.a());
    auto tb = canonical_trace_weights(inc.b());
    for (std::size_t i = 0; i < inc.s(); ++i) {
      mpq_class rhs = 0;
      for (std::size_t j = 0; j < inc.t(); ++j)
        rhs += mpq_class(static_cast<unsigned long>(inc.m()(i, j))) * tb[j] /
               mpq_class(static_cast<unsigned long>(inc.b()[j]));
      EXPECT_EQ(ta[i] / mpq_class(static_cast<unsigned long>(inc.a()[i])), rhs);
    }
  }
}

TEST(LoopCount, MatchesIntegerOracle) {
  for (const auto& c : oracle::corpus()) {
    for (unsigned k = 0; k <= 6; ++k)
      EXPECT_EQ(loop_count(c.inclusion(), k), oracle::trace_mmt_power(c.m, k)) << c.name;
  }
}
