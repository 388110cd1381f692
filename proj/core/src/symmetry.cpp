#include "planar/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "planar/errors.hpp"
#include "planar/tangle.hpp"

namespace planar {
namespace {

bool is_permutation_of(const std::vector<std::size_t>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto x : p) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::vector<std::size_t> compose_perm(const std::vector<std::size_t>& lhs,
                                      const std::vector<std::size_t>& rhs) {
  std::vector<std::size_t> out(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) out[i] = lhs[rhs[i]];
  return out;
}

std::vector<std::size_t> invert_perm(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = i;
  return out;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

GraphAutomorphism GraphAutomorphism::identity(const BipartiteGraph& g) {
  return {iota(g.a_count()), iota(g.b_count()), iota(g.edges().size())};
}

GraphAutomorphism GraphAutomorphism::compose(const GraphAutomorphism& rhs) const {
  return {compose_perm(perm_a, rhs.perm_a), compose_perm(perm_b, rhs.perm_b),
          compose_perm(perm_e, rhs.perm_e)};
}

GraphAutomorphism GraphAutomorphism::inverse() const {
  return {invert_perm(perm_a), invert_perm(perm_b), invert_perm(perm_e)};
}

namespace {

void check_vertex_perms(const BipartiteGraph& g, const GraphAutomorphism& aut) {
  if (!is_permutation_of(aut.perm_a, g.a_count())) {
    throw InvalidAutomorphism("perm_a is not a permutation of " +
                              std::to_string(g.a_count()) + " a-vertices");
  }
  if (!is_permutation_of(aut.perm_b, g.b_count())) {
    throw InvalidAutomorphism("perm_b is not a permutation of " +
                              std::to_string(g.b_count()) + " b-vertices");
  }
}

}  // namespace

void validate_automorphism(const BipartiteGraph& g, const GraphAutomorphism& aut) {
  check_vertex_perms(g, aut);
  if (!is_permutation_of(aut.perm_e, g.edges().size())) {
    throw InvalidAutomorphism("perm_e is not a permutation of " +
                              std::to_string(g.edges().size()) + " edges");
  }
  for (const Edge& e : g.edges()) {
    const Edge& image = g.edge(aut.perm_e[e.id]);
    if (image.src != aut.perm_a[e.src] || image.dst != aut.perm_b[e.dst]) {
      throw InvalidAutomorphism("edge " + std::to_string(e.id) +
                                " is not mapped compatibly with its endpoints");
    }
  }
  for (std::size_t i = 0; i < g.a_count(); ++i) {
    if (g.eta_a()[aut.perm_a[i]] != g.eta_a()[i]) {
      throw InvalidAutomorphism("a-vertex " + std::to_string(i) +
                                " is sent to a vertex of different weight");
    }
  }
  for (std::size_t j = 0; j < g.b_count(); ++j) {
    if (g.eta_b()[aut.perm_b[j]] != g.eta_b()[j]) {
      throw InvalidAutomorphism("b-vertex " + std::to_string(j) +
                                " is sent to a vertex of different weight");
    }
  }
}

GraphAutomorphism make_automorphism(const BipartiteGraph& g,
                                    std::vector<std::size_t> perm_a,
                                    std::vector<std::size_t> perm_b,
                                    std::optional<std::vector<std::size_t>> perm_e) {
  GraphAutomorphism aut{std::move(perm_a), std::move(perm_b), {}};
  if (perm_e) {
    aut.perm_e = std::move(*perm_e);
  } else {
    if (!g.is_simple()) {
      throw InvalidAutomorphism("perm_e is required when the graph has parallel edges");
    }
    check_vertex_perms(g, aut);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_ends;
    for (const Edge& e : g.edges()) by_ends[{e.src, e.dst}] = e.id;
    for (const Edge& e : g.edges()) {
      auto it = by_ends.find({aut.perm_a[e.src], aut.perm_b[e.dst]});
      if (it == by_ends.end()) {
        throw InvalidAutomorphism("edge " + std::to_string(e.id) +
                                  " has no image: vertex permutation breaks adjacency");
      }
      aut.perm_e.push_back(it->second);
    }
  }
  validate_automorphism(g, aut);
  return aut;
}

GroupAction close_group(const BipartiteGraph& g, std::vector<GraphAutomorphism> gens,
                        std::size_t limit) {
  for (const auto& gen : gens) validate_automorphism(g, gen);
  GroupAction out(g);
  out.generators_ = std::move(gens);
  std::set<GraphAutomorphism> seen;
  out.elements_.push_back(GraphAutomorphism::identity(g));
  seen.insert(out.elements_.front());
  for (std::size_t i = 0; i < out.elements_.size(); ++i) {
    for (const auto& gen : out.generators_) {
      GraphAutomorphism next = gen.compose(out.elements_[i]);
      if (seen.insert(next).second) {
        if (out.elements_.size() >= limit) {
          throw GroupTooLarge("group closure exceeds " + std::to_string(limit) +
                              " elements");
        }
        out.elements_.push_back(std::move(next));
      }
    }
  }
  return out;
}

Loop act(const GraphAutomorphism& aut, const Loop& loop) {
  Loop out{aut.perm_a[loop.base], {}};
  out.edges.reserve(loop.edges.size());
  for (auto e : loop.edges) out.edges.push_back(aut.perm_e[e]);
  return out;
}

PlanarElement act(const GraphAutomorphism& aut, const PlanarElement& x) {
  PlanarElement out(x.degree());
  for (const auto& [loop, c] : x.terms()) out.add_term(act(aut, loop), c);
  return out;
}

PlanarElement reynolds(const GroupAction& group, const PlanarElement& x) {
  PlanarElement sum(x.degree());
  for (const auto& g : group.elements()) sum += act(g, x);
  sum *= RadicalScalar(mpq_class(1, static_cast<unsigned long>(group.order())));
  return sum;
}

bool is_invariant(const GroupAction& group, const PlanarElement& x) {
  for (const auto& gen : group.generators()) {
    if (act(gen, x) != x) return false;
  }
  return true;
}

std::vector<PlanarElement> fixed_space_basis(const GroupAction& group, std::size_t k) {
  auto loops = enumerate_loops(group.graph(), k);
  std::set<Loop> visited;
  std::vector<PlanarElement> out;
  for (const auto& loop : loops) {
    if (visited.count(loop)) continue;
    PlanarElement orbit_sum(k);
    std::vector<Loop> frontier{loop};
    visited.insert(loop);
    while (!frontier.empty()) {
      Loop cur = std::move(frontier.back());
      frontier.pop_back();
      orbit_sum.add_term(cur, RadicalScalar(1L));
      for (const auto& gen : group.generators()) {
        Loop next = act(gen, cur);
        if (visited.insert(next).second) frontier.push_back(std::move(next));
      }
    }
    out.push_back(std::move(orbit_sum));
  }
  return out;
}

std::size_t burnside_count(const GroupAction& group, std::size_t k) {
  auto loops = enumerate_loops(group.graph(), k);
  std::size_t fixed = 0;
  for (const auto& g : group.elements()) {
    for (const auto& loop : loops) fixed += act(g, loop) == loop;
  }
  if (fixed % group.order() != 0) {
    throw InvariantViolation("Burnside sum " + std::to_string(fixed) +
                             " is not divisible by |G| = " +
                             std::to_string(group.order()));
  }
  return fixed / group.order();
}

Ergodicity is_centrally_ergodic(const GroupAction& group) {
  const BipartiteGraph& g = group.graph();
  if (!is_abelian(g.inclusion())) {
    throw NotAbelian("central ergodicity is only computed for abelian inclusions");
  }
  std::set<std::size_t> orbit_a, orbit_b;
  for (const auto& el : group.elements()) {
    orbit_a.insert(el.perm_a[0]);
    orbit_b.insert(el.perm_b[0]);
  }
  return {orbit_a.size() == g.a_count(), orbit_b.size() == g.b_count()};
}

bool SubalgebraReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ClosureCheck& c) { return c.passed(); });
}

SubalgebraReport verify_planar_subalgebra(const GroupAction& group, std::size_t kmax) {
  if (kmax < 2) throw PreconditionError("verify_planar_subalgebra needs kmax >= 2");
  const BipartiteGraph& g = group.graph();
  SubalgebraReport rep;
  rep.kmax = kmax;

  auto record = [&](std::string name, std::size_t k) {
    rep.checks.push_back(ClosureCheck{std::move(name), k, 0, 0});
    return rep.checks.size() - 1;
  };
  auto tally = [&](std::size_t check, bool ok) {
    ++rep.checks[check].cases;
    if (!ok) ++rep.checks[check].failures;
  };

  for (std::size_t k = 0; k <= kmax; ++k) {
    auto basis = fixed_space_basis(group, k);

    tally(record("unit", k), is_invariant(group, unit(g, k)));
    tally(record("jones", k), is_invariant(group, jones_projection(g, k)));

    auto mult = record("multiply", k);
    for (const auto& x : basis)
      for (const auto& y : basis) tally(mult, is_invariant(group, multiply(x, y)));

    auto inc = record("include", k);
    for (const auto& x : basis) tally(inc, is_invariant(group, include(g, x)));

    auto sh = record("shift", k);
    for (const auto& x : basis) tally(sh, is_invariant(group, shift(g, x)));

    if (k >= 1) {
      auto ex = record("expect", k);
      for (const auto& x : basis) tally(ex, is_invariant(group, expect(g, x)));
    }

    // Equivariance on the loop basis, one generator at a time.
    auto loops = enumerate_loops(g, k);
    auto eq_m = record("equivariance:M", k);
    auto eq_i = record("equivariance:I", k);
    auto eq_j = record("equivariance:J", k);
    auto eq_u = k >= 1 ? record("equivariance:U", k) : 0;
    for (const auto& gen : group.generators()) {
      for (const auto& l1 : loops) {
        PlanarElement x = PlanarElement::basis(l1);
        PlanarElement gx = act(gen, x);
        tally(eq_i, include(g, gx) == act(gen, include(g, x)));
        tally(eq_j, shift(g, gx) == act(gen, shift(g, x)));
        if (k >= 1) tally(eq_u, expect(g, gx) == act(gen, expect(g, x)));
        for (const auto& l2 : loops) {
          PlanarElement y = PlanarElement::basis(l2);
          tally(eq_m, multiply(gx, act(gen, y)) == act(gen, multiply(x, y)));
        }
      }
    }
  }
  return rep;
}

std::vector<std::size_t> fixed_dims_report(const GroupAction& group, std::size_t kmax) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= kmax; ++k) {
    std::size_t burnside = burnside_count(group, k);
    std::size_t orbits = fixed_space_basis(group, k).size();
    if (burnside != orbits) {
      throw InvariantViolation("degree " + std::to_string(k) + ": Burnside count " +
                               std::to_string(burnside) + " != orbit count " +
                               std::to_string(orbits));
    }
    out.push_back(burnside);
  }
  return out;
}

}  // namespace planar
