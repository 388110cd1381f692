#include "planar/graph.hpp"

#include "planar/errors.hpp"

namespace planar {

BipartiteGraph BipartiteGraph::build(const InclusionData& inc) {
  BipartiteGraph g;
  g.inc_ = inc;
  g.r_ = markov_index(inc);
  g.gamma_ = RadicalScalar(static_cast<long>(g.r_)).sqrt();
  g.gamma_inv_ = g.gamma_.inverse();

  RadicalScalar inv_root_a =
      RadicalScalar(mpq_class(inc.a().total_dimension())).sqrt().inverse();
  RadicalScalar inv_root_b =
      RadicalScalar(mpq_class(inc.b().total_dimension())).sqrt().inverse();
  for (auto n : inc.a().blocks())
    g.eta_a_.push_back(RadicalScalar(static_cast<long>(n)) * inv_root_a);
  for (auto n : inc.b().blocks())
    g.eta_b_.push_back(RadicalScalar(static_cast<long>(n)) * inv_root_b);

  g.at_a_.resize(inc.s());
  g.at_b_.resize(inc.t());
  for (std::size_t i = 0; i < inc.s(); ++i) {
    for (std::size_t j = 0; j < inc.t(); ++j) {
      for (std::size_t p = 0; p < inc.m()(i, j); ++p) {
        Edge e{g.edges_.size(), i, j, p};
        g.at_a_[i].push_back(e.id);
        g.at_b_[j].push_back(e.id);
        g.edges_.push_back(e);
      }
    }
  }

  for (const Edge& e : g.edges_) {
    RadicalScalar ratio = g.eta_b_[e.dst] * g.eta_a_[e.src].inverse();
    g.mu2_up_.push_back(ratio);
    g.mu2_down_.push_back(ratio.inverse());
    g.mu_up_.push_back(ratio.sqrt());
    g.mu_down_.push_back(g.mu_up_.back().inverse());
  }

  if (!g.eigenvector_identity_holds()) {
    throw EigenvectorViolation("η is not a √r eigenvector of the adjacency matrix");
  }
  return g;
}

bool BipartiteGraph::is_simple() const {
  for (const Edge& e : edges_) {
    if (e.parallel > 0) return false;
  }
  return true;
}

Vertex BipartiteGraph::other_end(std::size_t e, Vertex from) const {
  const Edge& edge = edges_[e];
  return from.side == Side::A ? Vertex{Side::B, edge.dst}
                              : Vertex{Side::A, edge.src};
}

bool BipartiteGraph::eigenvector_identity_holds() const {
  for (std::size_t i = 0; i < at_a_.size(); ++i) {
    RadicalScalar sum;
    for (auto e : at_a_[i]) sum += eta_b_[edges_[e].dst];
    if (sum != gamma_ * eta_a_[i]) return false;
  }
  for (std::size_t j = 0; j < at_b_.size(); ++j) {
    RadicalScalar sum;
    for (auto e : at_b_[j]) sum += eta_a_[edges_[e].src];
    if (sum != gamma_ * eta_b_[j]) return false;
  }
  return true;
}

RadicalScalar spin_factor(const BipartiteGraph& g, std::size_t edge,
                          Direction direction) {
  if (edge >= g.edges().size()) {
    throw InputError("edge id " + std::to_string(edge) + " out of range");
  }
  return g.spin(edge, direction);
}

}  // namespace planar
