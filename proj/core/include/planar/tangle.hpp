#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "planar/element.hpp"
#include "planar/graph.hpp"

namespace planar {

enum class TangleKind {
  Identity,         // 1_k       : P_k -> P_k
  Multiplication,   // M_k       : P_k x P_k -> P_k
  Inclusion,        // I_k       : P_k -> P_{k+1}, extra string at right
  Shift,            // J_k       : P_k -> P_{k+2}, two extra strings at left
  Expectation,      // U_k       : P_{k+1} -> P_k, cap at right
  JonesProjection,  // E_k       : -> P_{k+2}, two semicircles at right
};

struct GeneratorTangle {
  TangleKind kind = TangleKind::Identity;
  std::size_t k = 0;

  // Degree of the box being acted on; JonesProjection has none.
  std::size_t input_degree() const;
  std::size_t output_degree() const;
  std::string to_string() const;

  friend bool operator==(const GeneratorTangle&, const GeneratorTangle&) = default;
};

// A composite annular tangle written as a left-to-right pipeline over the
// generators. Text form: comma separated tags "Id2", "M2", "I2", "J2", "U2",
// "E2", plus "O" for each closed circle, e.g. "E1,U2,O".
struct TangleProgram {
  std::vector<GeneratorTangle> steps;
  unsigned circles = 0;

  static TangleProgram parse(std::string_view text);
  std::string to_string() const;
};

PlanarElement identity(const PlanarElement& x);

// (f/e)·(h/g) = δ_{f,g} (h/e): top row of x must match bottom row of y.
PlanarElement multiply(const PlanarElement& x, const PlanarElement& y);

PlanarElement include(const BipartiteGraph& g, const PlanarElement& x);
PlanarElement shift(const BipartiteGraph& g, const PlanarElement& x);
PlanarElement expect(const BipartiteGraph& g, const PlanarElement& x);

// E_k(1), as drawn, without the γ⁻¹ normalisation.
PlanarElement jones_tangle(const BipartiteGraph& g, std::size_t k);
// e_k = γ⁻¹ E_k(1), a projection in P_{k+2}.
PlanarElement jones_projection(const BipartiteGraph& g, std::size_t k);

// Σ (e/e) over all rows e of length k.
PlanarElement unit(const BipartiteGraph& g, std::size_t k);

// Applies `include` until x has the requested degree.
PlanarElement include_to(const BipartiteGraph& g, const PlanarElement& x,
                         std::size_t degree);

// Normalised trace γ^(-k) ε(U^k x), ε(point i) = η(i)² / Σ η(i')².
RadicalScalar trace(const BipartiteGraph& g, const PlanarElement& x);

// Evaluates the program on `inputs`. The first input is the initial box
// unless the program starts with a JonesProjection step; every
// Multiplication step consumes the next input as its right factor.
PlanarElement run_program(const BipartiteGraph& g, const TangleProgram& program,
                          std::span<const PlanarElement> inputs);

}  // namespace planar
