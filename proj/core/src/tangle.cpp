#include "planar/tangle.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "planar/errors.hpp"

namespace planar {

std::size_t GeneratorTangle::input_degree() const {
  return kind == TangleKind::Expectation ? k + 1 : k;
}

std::size_t GeneratorTangle::output_degree() const {
  switch (kind) {
    case TangleKind::Identity:
    case TangleKind::Multiplication:
    case TangleKind::Expectation:
      return k;
    case TangleKind::Inclusion:
      return k + 1;
    case TangleKind::Shift:
    case TangleKind::JonesProjection:
      return k + 2;
  }
  return k;
}

std::string GeneratorTangle::to_string() const {
  const char* tag = "?";
  switch (kind) {
    case TangleKind::Identity: tag = "Id"; break;
    case TangleKind::Multiplication: tag = "M"; break;
    case TangleKind::Inclusion: tag = "I"; break;
    case TangleKind::Shift: tag = "J"; break;
    case TangleKind::Expectation: tag = "U"; break;
    case TangleKind::JonesProjection: tag = "E"; break;
  }
  return tag + std::to_string(k);
}

TangleProgram TangleProgram::parse(std::string_view text) {
  TangleProgram out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string tok;
    for (char c : text.substr(pos, comma - pos)) {
      if (!std::isspace(static_cast<unsigned char>(c))) tok += c;
    }
    pos = comma + 1;
    if (tok.empty()) {
      if (text.find_first_not_of(" \t\n") == std::string_view::npos) break;
      throw InvalidProgram("empty tag in tangle program \"" + std::string(text) + "\"");
    }
    if (tok == "O") {
      ++out.circles;
      continue;
    }
    GeneratorTangle step;
    std::size_t digits = 1;
    if (tok.rfind("Id", 0) == 0) {
      step.kind = TangleKind::Identity;
      digits = 2;
    } else {
      switch (tok[0]) {
        case 'M': step.kind = TangleKind::Multiplication; break;
        case 'I': step.kind = TangleKind::Inclusion; break;
        case 'J': step.kind = TangleKind::Shift; break;
        case 'U': step.kind = TangleKind::Expectation; break;
        case 'E': step.kind = TangleKind::JonesProjection; break;
        default: throw InvalidProgram("unknown tangle tag \"" + tok + "\"");
      }
    }
    std::string num = tok.substr(digits);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidProgram("tangle tag \"" + tok + "\" needs a degree");
    }
    step.k = std::stoul(num);
    out.steps.push_back(step);
  }
  return out;
}

std::string TangleProgram::to_string() const {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += ',';
    out += s.to_string();
  }
  for (unsigned i = 0; i < circles; ++i) out += out.empty() ? "O" : ",O";
  return out;
}

PlanarElement identity(const PlanarElement& x) { return x; }

PlanarElement multiply(const PlanarElement& x, const PlanarElement& y) {
  if (x.degree() != y.degree()) {
    throw DegreeMismatch("multiplication of degrees " + std::to_string(x.degree()) +
                         " and " + std::to_string(y.degree()));
  }
  using Key = std::pair<std::size_t, std::vector<std::size_t>>;
  std::map<Key, std::vector<const PlanarElement::Terms::value_type*>> by_bottom;
  for (const auto& term : y.terms()) {
    by_bottom[{term.first.base, term.first.bottom()}].push_back(&term);
  }
  PlanarElement out(x.degree());
  for (const auto& [lx, cx] : x.terms()) {
    auto it = by_bottom.find({lx.base, lx.top()});
    if (it == by_bottom.end()) continue;
    auto bottom = lx.bottom();
    for (const auto* ty : it->second) {
      out.add_term(Loop::from_rows(lx.base, ty->first.top(), bottom), cx * ty->second);
    }
  }
  return out;
}

PlanarElement include(const BipartiteGraph& g, const PlanarElement& x) {
  PlanarElement out(x.degree() + 1);
  for (const auto& [loop, c] : x.terms()) {
    auto top = loop.top();
    auto bottom = loop.bottom();
    for (auto e : g.incident(loop_end(g, loop))) {
      top.push_back(e);
      bottom.push_back(e);
      out.add_term(Loop::from_rows(loop.base, top, bottom), c);
      top.pop_back();
      bottom.pop_back();
    }
  }
  return out;
}

PlanarElement shift(const BipartiteGraph& g, const PlanarElement& x) {
  PlanarElement out(x.degree() + 2);
  for (const auto& [loop, c] : x.terms()) {
    auto top = loop.top();
    auto bottom = loop.bottom();
    for (auto h : g.incident(Vertex{Side::A, loop.base})) {
      std::size_t j = g.edge(h).dst;
      for (auto e : g.incident(Vertex{Side::B, j})) {
        std::vector<std::size_t> new_top{e, h};
        std::vector<std::size_t> new_bottom{e, h};
        new_top.insert(new_top.end(), top.begin(), top.end());
        new_bottom.insert(new_bottom.end(), bottom.begin(), bottom.end());
        out.add_term(Loop::from_rows(g.edge(e).src, new_top, new_bottom), c);
      }
    }
  }
  return out;
}

PlanarElement expect(const BipartiteGraph& g, const PlanarElement& x) {
  if (x.degree() == 0) throw DegreeMismatch("expectation needs degree >= 1");
  std::size_t n = x.degree();
  Direction dir = row_direction(n);
  PlanarElement out(n - 1);
  for (const auto& [loop, c] : x.terms()) {
    std::size_t top_last = loop.top_at(n);
    std::size_t bottom_last = loop.bottom_at(n);
    if (top_last != bottom_last) continue;
    auto top = loop.top();
    auto bottom = loop.bottom();
    top.pop_back();
    bottom.pop_back();
    out.add_term(Loop::from_rows(loop.base, top, bottom),
                 c * g.spin_squared(bottom_last, dir));
  }
  return out;
}

PlanarElement jones_tangle(const BipartiteGraph& g, std::size_t k) {
  PlanarElement out(k + 2);
  Direction dir = row_direction(k + 1);
  for (std::size_t base = 0; base < g.a_count(); ++base) {
    for (auto row : paths_from(g, base, k)) {
      const auto& around = g.incident(path_end(g, base, row));
      for (auto h : around) {
        for (auto e : around) {
          auto top = row;
          auto bottom = row;
          top.insert(top.end(), {h, h});
          bottom.insert(bottom.end(), {e, e});
          out.add_term(Loop::from_rows(base, top, bottom),
                       g.spin(e, dir) * g.spin(h, dir));
        }
      }
    }
  }
  return out;
}

PlanarElement jones_projection(const BipartiteGraph& g, std::size_t k) {
  return g.gamma_inverse() * jones_tangle(g, k);
}

PlanarElement unit(const BipartiteGraph& g, std::size_t k) {
  PlanarElement out(k);
  for (std::size_t base = 0; base < g.a_count(); ++base) {
    for (const auto& row : paths_from(g, base, k)) {
      out.add_term(Loop::from_rows(base, row, row), RadicalScalar(1L));
    }
  }
  return out;
}

PlanarElement include_to(const BipartiteGraph& g, const PlanarElement& x,
                         std::size_t degree) {
  if (degree < x.degree()) {
    throw DegreeMismatch("cannot include degree " + std::to_string(x.degree()) +
                         " into degree " + std::to_string(degree));
  }
  PlanarElement out = x;
  while (out.degree() < degree) out = include(g, out);
  return out;
}

RadicalScalar trace(const BipartiteGraph& g, const PlanarElement& x) {
  PlanarElement cur = x;
  while (cur.degree() > 0) cur = expect(g, cur);
  RadicalScalar norm;
  for (const auto& eta : g.eta_a()) norm += eta * eta;
  RadicalScalar norm_inv = norm.inverse();
  RadicalScalar sum;
  for (const auto& [loop, c] : cur.terms()) {
    const auto& eta = g.eta_a()[loop.base];
    sum += c * eta * eta * norm_inv;
  }
  return g.gamma_inverse().pow(static_cast<int>(x.degree())) * sum;
}

PlanarElement run_program(const BipartiteGraph& g, const TangleProgram& program,
                          std::span<const PlanarElement> inputs) {
  if (program.steps.empty()) throw InvalidProgram("empty tangle program");
  std::size_t next_input = 0;
  std::size_t first = 0;
  PlanarElement cur(0);
  if (program.steps.front().kind == TangleKind::JonesProjection) {
    cur = jones_tangle(g, program.steps.front().k);
    first = 1;
  } else {
    if (inputs.empty()) throw InvalidProgram("program needs an input element");
    cur = inputs[next_input++];
  }
  for (std::size_t i = first; i < program.steps.size(); ++i) {
    const GeneratorTangle& step = program.steps[i];
    if (step.kind == TangleKind::JonesProjection) {
      throw InvalidProgram("step " + std::to_string(i + 1) + " (" +
                           step.to_string() + ") has no input box and must come first");
    }
    if (cur.degree() != step.input_degree()) {
      throw DegreeMismatch("step " + std::to_string(i + 1) + " (" + step.to_string() +
                           ") expects degree " + std::to_string(step.input_degree()) +
                           ", got " + std::to_string(cur.degree()));
    }
    switch (step.kind) {
      case TangleKind::Identity:
        cur = identity(cur);
        break;
      case TangleKind::Multiplication:
        if (next_input >= inputs.size()) {
          throw InvalidProgram("step " + std::to_string(i + 1) + " (" +
                               step.to_string() + ") has no input left to multiply by");
        }
        cur = multiply(cur, inputs[next_input++]);
        break;
      case TangleKind::Inclusion:
        cur = include(g, cur);
        break;
      case TangleKind::Shift:
        cur = shift(g, cur);
        break;
      case TangleKind::Expectation:
        cur = expect(g, cur);
        break;
      case TangleKind::JonesProjection:
        break;
    }
  }
  if (next_input != inputs.size()) {
    throw InvalidProgram(std::to_string(inputs.size() - next_input) +
                         " input(s) left unused by the program");
  }
  if (program.circles > 0) cur *= g.gamma().pow(static_cast<int>(program.circles));
  return cur;
}

}  // namespace planar
