#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "planar/markov.hpp"
#include "planar/radical.hpp"

namespace planar {

enum class Side { A, B };
enum class Direction { Up, Down };

struct Vertex {
  Side side = Side::A;
  std::size_t index = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Edge between a-vertex `src` and b-vertex `dst`; `parallel` numbers the
// copies among the m_ij edges joining the same pair.
struct Edge {
  std::size_t id = 0;
  std::size_t src = 0;
  std::size_t dst = 0;
  std::size_t parallel = 0;
};

// Bratteli diagram of a Markov inclusion, with vertex weights
//   η(i) = a_i / √dim A,  η(j) = b_j / √dim B
// forming a γ = √r eigenvector of the adjacency matrix.
class BipartiteGraph {
 public:
  // Throws NotMarkov, or EigenvectorViolation if the weights fail the
  // eigenvector identity.
  static BipartiteGraph build(const InclusionData& inc);

  const InclusionData& inclusion() const { return inc_; }
  std::uint64_t index() const { return r_; }
  const RadicalScalar& gamma() const { return gamma_; }
  const RadicalScalar& gamma_inverse() const { return gamma_inv_; }

  std::size_t a_count() const { return eta_a_.size(); }
  std::size_t b_count() const { return eta_b_.size(); }
  const RadicalScalar& eta(Vertex v) const {
    return v.side == Side::A ? eta_a_[v.index] : eta_b_[v.index];
  }
  const std::vector<RadicalScalar>& eta_a() const { return eta_a_; }
  const std::vector<RadicalScalar>& eta_b() const { return eta_b_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }
  // Edge ids incident to a vertex, ascending.
  const std::vector<std::size_t>& incident(Vertex v) const {
    return v.side == Side::A ? at_a_[v.index] : at_b_[v.index];
  }
  bool is_simple() const;

  // The endpoint of `e` opposite to `from`.
  Vertex other_end(std::size_t e, Vertex from) const;

  // √(η(dst)/η(src)) going up, the reciprocal going down.
  const RadicalScalar& spin(std::size_t e, Direction d) const {
    return d == Direction::Up ? mu_up_[e] : mu_down_[e];
  }
  // Square of spin(), computed without roots.
  const RadicalScalar& spin_squared(std::size_t e, Direction d) const {
    return d == Direction::Up ? mu2_up_[e] : mu2_down_[e];
  }

  // Exact check of Σ_{neighbours} η = γ·η at every vertex.
  bool eigenvector_identity_holds() const;

 private:
  BipartiteGraph() = default;

  InclusionData inc_ = InclusionData::from_matrix({1}, {{1}});
  std::uint64_t r_ = 1;
  RadicalScalar gamma_;
  RadicalScalar gamma_inv_;
  std::vector<RadicalScalar> eta_a_;
  std::vector<RadicalScalar> eta_b_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> at_a_;
  std::vector<std::vector<std::size_t>> at_b_;
  std::vector<RadicalScalar> mu_up_, mu_down_, mu2_up_, mu2_down_;
};

inline BipartiteGraph build_graph(const InclusionData& inc) {
  return BipartiteGraph::build(inc);
}

// Rows of a box are read left to right; the edge at (1-based) position p goes
// up when p is odd.
inline Direction row_direction(std::size_t position) {
  return position % 2 == 1 ? Direction::Up : Direction::Down;
}

RadicalScalar spin_factor(const BipartiteGraph& g, std::size_t edge,
                          Direction direction);

}  // namespace planar
