#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "planar/graph.hpp"
#include "planar/radical.hpp"

namespace planar {

// A rooted 2k-loop based at an a-vertex. Edge ids e_1 ... e_2k are stored in
// traversal order; as a box the loop reads
//
//   top    = e_1    e_2      ... e_k
//   bottom = e_2k   e_2k-1   ... e_k+1
//
// so both rows are paths of length k leaving the base vertex on the left.
struct Loop {
  std::size_t base = 0;
  std::vector<std::size_t> edges;

  std::size_t degree() const { return edges.size() / 2; }
  std::vector<std::size_t> top() const;
  std::vector<std::size_t> bottom() const;
  std::size_t top_at(std::size_t position) const { return edges[position - 1]; }
  std::size_t bottom_at(std::size_t position) const {
    return edges[edges.size() - position];
  }

  static Loop from_rows(std::size_t base, const std::vector<std::size_t>& top,
                        const std::vector<std::size_t>& bottom);

  friend auto operator<=>(const Loop&, const Loop&) = default;
  friend bool operator==(const Loop&, const Loop&) = default;
};

// Vertex reached after walking `path` (a row) from a-vertex `base`.
Vertex path_end(const BipartiteGraph& g, std::size_t base,
                const std::vector<std::size_t>& path);
// Right-hand endpoint of a loop's box.
Vertex loop_end(const BipartiteGraph& g, const Loop& loop);

// Checks that the loop is a closed, parity-respecting walk in g.
bool is_valid_loop(const BipartiteGraph& g, const Loop& loop);

// All length-k rows leaving `base`, in lexicographic edge-id order.
std::vector<std::vector<std::size_t>> paths_from(const BipartiteGraph& g,
                                                 std::size_t base,
                                                 std::size_t k);

// All 2k-loops, ordered by (base, edge sequence).
std::vector<Loop> enumerate_loops(const BipartiteGraph& g, std::size_t k);

// "i0 -e0-> j1 -e3-> i0" style rendering.
std::string render_loop(const BipartiteGraph& g, const Loop& loop);

// An element of P_k: a finite exact combination of 2k-loops.
class PlanarElement {
 public:
  using Terms = std::map<Loop, RadicalScalar>;

  explicit PlanarElement(std::size_t degree) : degree_(degree) {}
  static PlanarElement basis(const Loop& loop);

  std::size_t degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<Loop> support() const;
  RadicalScalar coefficient(const Loop& loop) const;

  // Adds c·loop, dropping the entry if it cancels.
  void add_term(const Loop& loop, const RadicalScalar& c);

  PlanarElement& operator+=(const PlanarElement& rhs);
  PlanarElement& operator-=(const PlanarElement& rhs);
  PlanarElement& operator*=(const RadicalScalar& c);

  friend PlanarElement operator+(PlanarElement lhs, const PlanarElement& rhs) {
    return lhs += rhs;
  }
  friend PlanarElement operator-(PlanarElement lhs, const PlanarElement& rhs) {
    return lhs -= rhs;
  }
  friend PlanarElement operator*(const RadicalScalar& c, PlanarElement x) {
    return x *= c;
  }
  friend bool operator==(const PlanarElement&, const PlanarElement&) = default;

 private:
  void check_degree(const PlanarElement& rhs) const;

  std::size_t degree_;
  Terms terms_;
};

PlanarElement element_add(const PlanarElement& x, const PlanarElement& y);
PlanarElement scalar_mul(const RadicalScalar& c, const PlanarElement& x);

std::string render_element(const BipartiteGraph& g, const PlanarElement& x);

}  // namespace planar
