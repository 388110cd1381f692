#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fuzz.hpp"
#include "oracles.hpp"
#include "planar/errors.hpp"
#include "planar/symmetry.hpp"
#include "planar/tangle.hpp"

using namespace planar;

namespace {

InclusionData make(std::vector<std::uint64_t> a,
                   std::vector<std::vector<std::uint64_t>> m) {
  return InclusionData::from_matrix(AlgebraDims(std::move(a)), IntMatrix::from_rows(m));
}

BipartiteGraph c2() { return build_graph(make({1}, {{1, 1}})); }
BipartiteGraph c3() { return build_graph(make({1}, {{1, 1, 1}})); }

GroupAction swap_c2() {
  auto g = c2();
  return close_group(g, {make_automorphism(g, {0}, {1, 0})});
}

GroupAction rotate_c3() {
  auto g = c3();
  return close_group(g, {make_automorphism(g, {0}, {1, 2, 0})});
}

GroupAction symmetric_c3() {
  auto g = c3();
  return close_group(g, {make_automorphism(g, {0}, {1, 2, 0}),
                         make_automorphism(g, {0}, {1, 0, 2})});
}

// ℂ ⊂ M₂ with its two parallel edges exchanged.
GroupAction parallel_swap_m2() {
  auto g = build_graph(make({1}, {{2}}));
  return close_group(g, {make_automorphism(g, {0}, {0}, std::vector<std::size_t>{1, 0})});
}

// ℂ² ⊂ ℂ⁴ with the two halves exchanged.
GroupAction halves_c2c4() {
  auto g = build_graph(make({1, 1}, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
  return close_group(g, {make_automorphism(g, {1, 0}, {2, 3, 0, 1}),
                         make_automorphism(g, {0, 1}, {1, 0, 2, 3})});
}

std::vector<std::pair<std::string, GroupAction>> actions() {
  auto g = c2();
  return {
      {"trivial C<C^2", close_group(g, {})},
      {"Z2 C<C^2", swap_c2()},
      {"Z3 C<C^3", rotate_c3()},
      {"S3 C<C^3", symmetric_c3()},
      {"Z2 C<M2", parallel_swap_m2()},
      {"D4 C^2<C^4", halves_c2c4()},
  };
}

// Orbit count by explicit orbit enumeration over the loop list.
std::size_t orbit_count(const GroupAction& group, std::size_t k) {
  auto loops = enumerate_loops(group.graph(), k);
  std::set<Loop> seen;
  std::size_t orbits = 0;
  for (const auto& loop : loops) {
    if (seen.count(loop)) continue;
    ++orbits;
    for (const auto& h : group.elements()) seen.insert(act(h, loop));
  }
  return orbits;
}

}  // namespace

TEST(CloseGroup, Examples) {
  auto g = c2();
  EXPECT_EQ(close_group(g, {}).order(), 1u);
  EXPECT_EQ(close_group(g, {GraphAutomorphism::identity(g)}).order(), 1u);
  EXPECT_EQ(swap_c2().order(), 2u);
  EXPECT_EQ(rotate_c3().order(), 3u);
  EXPECT_EQ(symmetric_c3().order(), 6u);
  EXPECT_EQ(halves_c2c4().order(), 8u);
  EXPECT_EQ(swap_c2().elements().front(), GraphAutomorphism::identity(g));
}

TEST(CloseGroup, RejectsInvalidAutomorphisms) {
  // b-weights 1/√5 and 2/√5 differ; no vertex swap can be admissible.
  auto g = build_graph(make({1}, {{1, 2}}));
  EXPECT_THROW(make_automorphism(g, {0}, {1, 0}, std::vector<std::size_t>{1, 2, 0}),
               InvalidAutomorphism);
  EXPECT_THROW(make_automorphism(g, {0}, {1, 0}), InvalidAutomorphism);
  // Parallel edges need an explicit edge permutation.
  auto m2 = build_graph(make({1}, {{2}}));
  EXPECT_THROW(make_automorphism(m2, {0}, {0}), InvalidAutomorphism);
  auto c = c2();
  EXPECT_THROW(make_automorphism(c, {0}, {0, 0}), InvalidAutomorphism);
  EXPECT_THROW(make_automorphism(c, {0}, {1, 0}, std::vector<std::size_t>{0, 1}),
               InvalidAutomorphism);
  GraphAutomorphism bad{{0}, {1, 0}, {0, 1}};
  EXPECT_THROW(close_group(c, {bad}), InvalidAutomorphism);
}

TEST(CloseGroup, EnforcesLimit) {
  auto g = c3();
  auto gens = std::vector{make_automorphism(g, {0}, {1, 2, 0}),
                          make_automorphism(g, {0}, {1, 0, 2})};
  EXPECT_THROW(close_group(g, gens, 5), GroupTooLarge);
  EXPECT_EQ(close_group(g, gens, 6).order(), 6u);
}

TEST(CloseGroup, ElementsFormAGroup) {
  for (auto& [name, group] : actions()) {
    SCOPED_TRACE(name);
    std::set<GraphAutomorphism> all(group.elements().begin(), group.elements().end());
    ASSERT_EQ(all.size(), group.order());
    for (const auto& x : group.elements()) {
      EXPECT_TRUE(all.count(x.inverse()));
      for (const auto& y : group.elements()) ASSERT_TRUE(all.count(x.compose(y)));
    }
  }
}

TEST(Act, Examples) {
  auto group = swap_c2();
  const auto& g = group.graph();
  auto id = GraphAutomorphism::identity(g);
  auto s = group.elements()[1];
  auto loops = enumerate_loops(g, 1);
  std::mt19937 rng(21);
  auto x = fuzz::random_element(g, 3, rng, 1.0);
  EXPECT_EQ(act(id, x), x);
  EXPECT_EQ(act(s, loops[0]), loops[1]);
  EXPECT_EQ(act(s, loops[1]), loops[0]);
}

TEST(Act, IsAlgebraAutomorphismAndGroupAction) {
  std::mt19937 rng(22);
  for (auto& [name, group] : actions()) {
    SCOPED_TRACE(name);
    const auto& g = group.graph();
    for (std::size_t k = 0; k <= 3; ++k) {
      for (const auto& h : group.elements()) {
        auto x = fuzz::random_element(g, k, rng);
        auto y = fuzz::random_element(g, k, rng);
        ASSERT_EQ(act(h, multiply(x, y)), multiply(act(h, x), act(h, y)));
        for (const auto& h2 : group.elements())
          ASSERT_EQ(act(h.compose(h2), x), act(h, act(h2, x)));
      }
    }
  }
}

TEST(Reynolds, Examples) {
  auto group = swap_c2();
  const auto& g = group.graph();
  auto loops = enumerate_loops(g, 1);
  auto avg = reynolds(group, PlanarElement::basis(loops[0]));
  EXPECT_EQ(avg.coefficient(loops[0]), RadicalScalar(mpq_class(1, 2)));
  EXPECT_EQ(avg.coefficient(loops[1]), RadicalScalar(mpq_class(1, 2)));
  EXPECT_EQ(reynolds(group, unit(g, 2)), unit(g, 2));
}

TEST(Reynolds, IsIdempotentProjectionCommutingWithGenerators) {
  std::mt19937 rng(23);
  for (auto& [name, group] : actions()) {
    SCOPED_TRACE(name);
    const auto& g = group.graph();
    for (std::size_t k = 0; k <= 3; ++k) {
      for (int trial = 0; trial < 4; ++trial) {
        auto x = fuzz::random_element(g, k, rng);
        auto rx = reynolds(group, x);
        ASSERT_TRUE(is_invariant(group, rx));
        ASSERT_EQ(reynolds(group, rx), rx);
        ASSERT_EQ(reynolds(group, include(g, x)), include(g, rx));
        ASSERT_EQ(reynolds(group, shift(g, x)), shift(g, rx));
        if (k >= 1) {
          ASSERT_EQ(reynolds(group, expect(g, x)), expect(g, rx));
        }
        auto y = reynolds(group, fuzz::random_element(g, k, rng));
        ASSERT_EQ(reynolds(group, multiply(rx, y)), multiply(rx, y));
      }
    }
  }
}

TEST(FixedSpace, DimensionExamples) {
  auto g = c2();
  auto trivial = close_group(g, {});
  for (std::size_t k = 0; k <= 4; ++k)
    EXPECT_EQ(fixed_space_basis(trivial, k).size(), enumerate_loops(g, k).size());
  EXPECT_EQ(fixed_dims_report(trivial, 4), (std::vector<std::size_t>{1, 2, 4, 8, 16}));
  EXPECT_EQ(fixed_dims_report(swap_c2(), 3), (std::vector<std::size_t>{1, 1, 2, 4}));
  EXPECT_EQ(fixed_dims_report(rotate_c3(), 3), (std::vector<std::size_t>{1, 1, 3, 9}));

  auto basis = fixed_space_basis(swap_c2(), 1);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], unit(g, 1));
}

TEST(FixedSpace, BurnsideMatchesOrbitsAndBasisIsInvariant) {
  for (auto& [name, group] : actions()) {
    SCOPED_TRACE(name);
    for (std::size_t k = 0; k <= 6; ++k) {
      auto orbits = orbit_count(group, k);
      ASSERT_EQ(burnside_count(group, k), orbits) << "k=" << k;
      if (k <= 3) {
        auto basis = fixed_space_basis(group, k);
        ASSERT_EQ(basis.size(), orbits);
        for (const auto& b : basis) {
          ASSERT_TRUE(is_invariant(group, b));
          for (const auto& [loop, c] : b.terms()) ASSERT_EQ(c, RadicalScalar(1L));
        }
      }
    }
  }
}

TEST(Ergodicity, Examples) {
  auto trivial = close_group(c2(), {});
  auto e1 = is_centrally_ergodic(trivial);
  EXPECT_TRUE(e1.on_a);
  EXPECT_FALSE(e1.on_b);
  auto e2 = is_centrally_ergodic(swap_c2());
  EXPECT_TRUE(e2.on_a);
  EXPECT_TRUE(e2.on_b);
  auto two = build_graph(make({1, 1}, {{2, 0}, {0, 2}}));
  EXPECT_FALSE(is_centrally_ergodic(close_group(two, {})).on_a);
  auto halves = is_centrally_ergodic(halves_c2c4());
  EXPECT_TRUE(halves.on_a);
  EXPECT_TRUE(halves.on_b);

  auto nonabelian = build_graph(make({2}, {{1, 1}}));
  EXPECT_THROW(is_centrally_ergodic(close_group(nonabelian, {})), NotAbelian);
}

TEST(VerifySubalgebra, AllChecksPass) {
  for (auto& [name, group] : actions()) {
    SCOPED_TRACE(name);
    auto rep = verify_planar_subalgebra(group, 3);
    EXPECT_TRUE(rep.all_passed());
    EXPECT_EQ(rep.kmax, 3u);
    for (const auto& c : rep.checks) {
      EXPECT_TRUE(c.passed()) << c.name << " k=" << c.k;
      // Equivariance is checked per generator; the trivial group has none.
      if (!group.generators().empty() || c.name.rfind("equivariance", 0) != 0) {
        EXPECT_GT(c.cases, 0u) << c.name << " k=" << c.k;
      }
    }
  }
  EXPECT_THROW(verify_planar_subalgebra(swap_c2(), 1), PreconditionError);
}

TEST(VerifySubalgebra, RandomProgramsPreserveInvariants) {
  std::mt19937 rng(24);
  for (auto& [name, group] : actions()) {
    SCOPED_TRACE(name);
    const auto& g = group.graph();
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<std::size_t> start(0, 2), length(1, 5), pick(0, 4);
      std::size_t degree = start(rng);
      std::vector<PlanarElement> inputs{
          reynolds(group, fuzz::random_element(g, degree, rng))};
      TangleProgram program;
      for (std::size_t n = length(rng); n > 0; --n) {
        GeneratorTangle step;
        switch (pick(rng)) {
          case 0: step = {TangleKind::Multiplication, degree}; break;
          case 1: step = {TangleKind::Inclusion, degree}; break;
          case 2: step = {TangleKind::Shift, degree}; break;
          case 3: step = {TangleKind::Identity, degree}; break;
          default:
            if (degree == 0) continue;
            step = {TangleKind::Expectation, degree - 1};
        }
        if (step.output_degree() > 4) continue;
        if (step.kind == TangleKind::Multiplication)
          inputs.push_back(reynolds(group, fuzz::random_element(g, degree, rng)));
        program.steps.push_back(step);
        degree = step.output_degree();
      }
      if (program.steps.empty()) program.steps.push_back({TangleKind::Identity, degree});
      auto out = run_program(g, program, inputs);
      ASSERT_TRUE(is_invariant(group, out)) << program.to_string();
    }
  }
}
