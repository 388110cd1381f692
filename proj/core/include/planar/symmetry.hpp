#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "planar/element.hpp"
#include "planar/graph.hpp"

namespace planar {

// A permutation of the vertices and edges of a bipartite graph that respects
// incidence and the weights η.
struct GraphAutomorphism {
  std::vector<std::size_t> perm_a;
  std::vector<std::size_t> perm_b;
  std::vector<std::size_t> perm_e;

  static GraphAutomorphism identity(const BipartiteGraph& g);
  // (lhs ∘ rhs)(x) = lhs(rhs(x))
  GraphAutomorphism compose(const GraphAutomorphism& rhs) const;
  GraphAutomorphism inverse() const;

  friend auto operator<=>(const GraphAutomorphism&, const GraphAutomorphism&) = default;
};

// Builds and validates an automorphism. `perm_e` may be omitted on simple
// graphs, where it is determined by the vertex permutations. Throws
// InvalidAutomorphism.
GraphAutomorphism make_automorphism(const BipartiteGraph& g,
                                    std::vector<std::size_t> perm_a,
                                    std::vector<std::size_t> perm_b,
                                    std::optional<std::vector<std::size_t>> perm_e = {});

void validate_automorphism(const BipartiteGraph& g, const GraphAutomorphism& aut);

inline constexpr std::size_t kDefaultGroupLimit = 10080;

// A finite group of graph automorphisms, stored as its full element list
// (identity first, then in order of discovery).
class GroupAction {
 public:
  const BipartiteGraph& graph() const { return graph_; }
  const std::vector<GraphAutomorphism>& generators() const { return generators_; }
  const std::vector<GraphAutomorphism>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

 private:
  friend GroupAction close_group(const BipartiteGraph&, std::vector<GraphAutomorphism>,
                                 std::size_t);
  GroupAction(BipartiteGraph g) : graph_(std::move(g)) {}

  BipartiteGraph graph_;
  std::vector<GraphAutomorphism> generators_;
  std::vector<GraphAutomorphism> elements_;
};

// Throws InvalidAutomorphism or GroupTooLarge.
GroupAction close_group(const BipartiteGraph& g, std::vector<GraphAutomorphism> gens,
                        std::size_t limit = kDefaultGroupLimit);

Loop act(const GraphAutomorphism& aut, const Loop& loop);
PlanarElement act(const GraphAutomorphism& aut, const PlanarElement& x);

// (1/|G|) Σ_g g·x
PlanarElement reynolds(const GroupAction& group, const PlanarElement& x);

bool is_invariant(const GroupAction& group, const PlanarElement& x);

// Unnormalised orbit sums of degree-k loops, ordered by smallest loop.
std::vector<PlanarElement> fixed_space_basis(const GroupAction& group, std::size_t k);

// (1/|G|) Σ_g |{loops of degree k fixed by g}|
std::size_t burnside_count(const GroupAction& group, std::size_t k);

struct Ergodicity {
  bool on_a = false;
  bool on_b = false;
};

// Transitivity on a- and b-vertices. Throws NotAbelian.
Ergodicity is_centrally_ergodic(const GroupAction& group);

struct ClosureCheck {
  std::string name;   // "multiply", "include", "expect", "shift", "jones", "unit",
                      // "equivariance:M", ...
  std::size_t k = 0;  // degree of the input side
  std::size_t cases = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

struct SubalgebraReport {
  std::size_t kmax = 0;
  std::vector<ClosureCheck> checks;
  bool all_passed() const;
};

SubalgebraReport verify_planar_subalgebra(const GroupAction& group, std::size_t kmax);

// dim P_k^G for k = 0..kmax by Burnside, cross-checked against the orbit
// basis. Throws InvariantViolation when the two disagree.
std::vector<std::size_t> fixed_dims_report(const GroupAction& group, std::size_t kmax);

}  // namespace planar
