#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "planar/radical.hpp"

namespace planar {

// Block sizes (n_1, ..., n_s) of a multi-matrix algebra M_{n_1} + ... + M_{n_s}.
class AlgebraDims {
 public:
  AlgebraDims() = default;
  explicit AlgebraDims(std::vector<std::uint64_t> blocks);
  AlgebraDims(std::initializer_list<std::uint64_t> blocks);

  const std::vector<std::uint64_t>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  std::uint64_t operator[](std::size_t i) const { return blocks_[i]; }

  // sum of n_i^2
  mpz_class total_dimension() const;
  // Every block multiplied by `factor`; throws ResourceLimit on overflow.
  AlgebraDims scaled(std::uint64_t factor) const;

  std::string to_string() const;

  friend bool operator==(const AlgebraDims&, const AlgebraDims&) = default;

 private:
  std::vector<std::uint64_t> blocks_;
};

// Dense nonnegative integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::uint64_t>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::uint64_t& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

// A unital inclusion A ⊂ B of finite-dimensional algebras: block sizes a (s
// entries) and b (t entries) and the s×t inclusion matrix m with mᵗa = b.
class InclusionData {
 public:
  // Derives b = mᵗa.
  static InclusionData from_matrix(AlgebraDims a, IntMatrix m);
  // Checks the supplied b against mᵗa.
  InclusionData(AlgebraDims a, AlgebraDims b, IntMatrix m);

  const AlgebraDims& a() const { return a_; }
  const AlgebraDims& b() const { return b_; }
  const IntMatrix& m() const { return m_; }
  std::size_t s() const { return a_.size(); }
  std::size_t t() const { return b_.size(); }

  friend bool operator==(const InclusionData&, const InclusionData&) = default;

 private:
  AlgebraDims a_;
  AlgebraDims b_;
  IntMatrix m_;
};

struct MarkovReport {
  bool is_markov = false;
  // dim B / dim A = ‖b‖²/‖a‖², reported whether or not the inclusion is Markov.
  mpq_class r;
  bool index_integral = false;
  // Set when a Markov inclusion has non-integral index. Must never happen.
  bool index_violation = false;
  bool is_abelian = false;
  std::vector<mpz_class> mb;
};

enum class Flavor { AA, AB, BA, BB };
enum class WordStart { M, MT };

struct WordNorm {
  double numeric = 0.0;
  RadicalScalar theoretical;
  bool agrees = false;
};

// τ_i = n_i² / Σ n_j²
std::vector<mpq_class> canonical_trace_weights(const AlgebraDims& d);

MarkovReport analyze(const InclusionData& inc);

// [A, B] = 0: A commutative and each central block of B over one block of A.
bool is_abelian(const InclusionData& inc);

// Throws NotMarkov unless the inclusion is Markov with integral index.
std::uint64_t markov_index(const InclusionData& inc);

// B ⊂ A_1 with dims (b, r·a) and matrix mᵗ.
InclusionData basic_construction(const InclusionData& inc);

// A, B, A_1, B_1, ..., A_depth, B_depth.
std::vector<AlgebraDims> jones_tower(const InclusionData& inc, unsigned depth);

AlgebraDims relative_commutant_dims(const InclusionData& inc, unsigned k,
                                    Flavor flavor);

// Spectral norm of the alternating word m mᵗ m ... (or mᵗ m mᵗ ...) of the
// given length, by power iteration on W Wᵀ, against the exact r^(k/2).
WordNorm word_norm(const InclusionData& inc, unsigned length, WordStart start);

// The alternating word itself, as a dense integer matrix.
std::vector<std::vector<double>> alternating_word(const InclusionData& inc,
                                                  unsigned length,
                                                  WordStart start);

// trace((m mᵗ)^k), exactly.
mpz_class loop_count(const InclusionData& inc, unsigned k);

const char* to_string(Flavor f);
const char* to_string(WordStart w);

}  // namespace planar
