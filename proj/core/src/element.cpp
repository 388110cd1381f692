#include "planar/element.hpp"

#include <algorithm>
#include <sstream>

#include "planar/errors.hpp"

namespace planar {

std::vector<std::size_t> Loop::top() const {
  return {edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(degree())};
}

std::vector<std::size_t> Loop::bottom() const {
  return {edges.rbegin(), edges.rbegin() + static_cast<std::ptrdiff_t>(degree())};
}

Loop Loop::from_rows(std::size_t base, const std::vector<std::size_t>& top,
                     const std::vector<std::size_t>& bottom) {
  Loop out{base, top};
  out.edges.insert(out.edges.end(), bottom.rbegin(), bottom.rend());
  return out;
}

Vertex path_end(const BipartiteGraph& g, std::size_t base,
                const std::vector<std::size_t>& path) {
  Vertex v{Side::A, base};
  for (auto e : path) v = g.other_end(e, v);
  return v;
}

Vertex loop_end(const BipartiteGraph& g, const Loop& loop) {
  Vertex v{Side::A, loop.base};
  for (std::size_t p = 0; p < loop.degree(); ++p) v = g.other_end(loop.edges[p], v);
  return v;
}

bool is_valid_loop(const BipartiteGraph& g, const Loop& loop) {
  if (loop.base >= g.a_count() || loop.edges.size() % 2 != 0) return false;
  Vertex v{Side::A, loop.base};
  for (auto e : loop.edges) {
    if (e >= g.edges().size()) return false;
    const auto& inc = g.incident(v);
    if (!std::binary_search(inc.begin(), inc.end(), e)) return false;
    v = g.other_end(e, v);
  }
  return v == Vertex{Side::A, loop.base};
}

namespace {

template <typename Visit>
void walk(const BipartiteGraph& g, Vertex v, std::size_t remaining,
          std::vector<std::size_t>& path, Visit&& visit) {
  if (remaining == 0) {
    visit(v, path);
    return;
  }
  for (auto e : g.incident(v)) {
    path.push_back(e);
    walk(g, g.other_end(e, v), remaining - 1, path, visit);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> paths_from(const BipartiteGraph& g,
                                                 std::size_t base,
                                                 std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  walk(g, Vertex{Side::A, base}, k, path,
       [&](Vertex, const std::vector<std::size_t>& p) { out.push_back(p); });
  return out;
}

std::vector<Loop> enumerate_loops(const BipartiteGraph& g, std::size_t k) {
  std::vector<Loop> out;
  std::vector<std::size_t> path;
  path.reserve(2 * k);
  for (std::size_t base = 0; base < g.a_count(); ++base) {
    Vertex start{Side::A, base};
    walk(g, start, 2 * k, path, [&](Vertex end, const std::vector<std::size_t>& p) {
      if (end == start) out.push_back(Loop{base, p});
    });
  }
  return out;
}

std::string render_loop(const BipartiteGraph& g, const Loop& loop) {
  std::ostringstream os;
  Vertex v{Side::A, loop.base};
  auto name = [](Vertex x) {
    return (x.side == Side::A ? "a" : "b") + std::to_string(x.index);
  };
  os << name(v);
  for (auto e : loop.edges) {
    v = g.other_end(e, v);
    os << " -e" << e << "-> " << name(v);
  }
  return os.str();
}

PlanarElement PlanarElement::basis(const Loop& loop) {
  PlanarElement out(loop.degree());
  out.add_term(loop, RadicalScalar(1L));
  return out;
}

std::vector<Loop> PlanarElement::support() const {
  std::vector<Loop> out;
  out.reserve(terms_.size());
  for (const auto& [loop, c] : terms_) out.push_back(loop);
  return out;
}

RadicalScalar PlanarElement::coefficient(const Loop& loop) const {
  auto it = terms_.find(loop);
  return it == terms_.end() ? RadicalScalar() : it->second;
}

void PlanarElement::add_term(const Loop& loop, const RadicalScalar& c) {
  if (loop.degree() != degree_ || loop.edges.size() != 2 * degree_) {
    throw DegreeMismatch("loop of degree " + std::to_string(loop.degree()) +
                         " added to an element of degree " +
                         std::to_string(degree_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(loop, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PlanarElement::check_degree(const PlanarElement& rhs) const {
  if (rhs.degree_ != degree_) {
    throw DegreeMismatch("cannot combine elements of degrees " +
                         std::to_string(degree_) + " and " +
                         std::to_string(rhs.degree_));
  }
}

PlanarElement& PlanarElement::operator+=(const PlanarElement& rhs) {
  check_degree(rhs);
  for (const auto& [loop, c] : rhs.terms_) add_term(loop, c);
  return *this;
}

PlanarElement& PlanarElement::operator-=(const PlanarElement& rhs) {
  check_degree(rhs);
  for (const auto& [loop, c] : rhs.terms_) add_term(loop, -c);
  return *this;
}

PlanarElement& PlanarElement::operator*=(const RadicalScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [loop, coeff] : terms_) coeff *= c;
  return *this;
}

PlanarElement element_add(const PlanarElement& x, const PlanarElement& y) {
  return x + y;
}

PlanarElement scalar_mul(const RadicalScalar& c, const PlanarElement& x) {
  return c * x;
}

std::string render_element(const BipartiteGraph& g, const PlanarElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [loop, c] : x.terms()) {
    if (!first) os << "\n";
    first = false;
    os << "(" << c.to_string() << ") [" << render_loop(g, loop) << "]";
  }
  return os.str();
}

}  // namespace planar
