#include "planar/markov.hpp"

#include <cmath>
#include <sstream>

#include "planar/errors.hpp"

namespace planar {

AlgebraDims::AlgebraDims(std::vector<std::uint64_t> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidInclusion("algebra must have at least one block");
  for (auto n : blocks_) {
    if (n == 0) throw InvalidInclusion("block sizes must be positive");
  }
}

AlgebraDims::AlgebraDims(std::initializer_list<std::uint64_t> blocks)
    : AlgebraDims(std::vector<std::uint64_t>(blocks)) {}

mpz_class AlgebraDims::total_dimension() const {
  mpz_class sum = 0;
  for (auto n : blocks_) {
    mpz_class z(static_cast<unsigned long>(n));
    sum += z * z;
  }
  return sum;
}

AlgebraDims AlgebraDims::scaled(std::uint64_t factor) const {
  std::vector<std::uint64_t> out;
  out.reserve(blocks_.size());
  for (auto n : blocks_) {
    std::uint64_t v;
    if (__builtin_mul_overflow(n, factor, &v)) {
      throw ResourceLimit("block size overflows 64 bits");
    }
    out.push_back(v);
  }
  return AlgebraDims(std::move(out));
}

std::string AlgebraDims::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << ',';
    os << blocks_[i];
  }
  os << ')';
  return os.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(
    std::initializer_list<std::initializer_list<std::uint64_t>> rows) {
  std::vector<std::vector<std::uint64_t>> v;
  for (const auto& r : rows) v.emplace_back(r);
  *this = from_rows(v);
}

IntMatrix IntMatrix::from_rows(
    const std::vector<std::vector<std::uint64_t>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw InvalidInclusion("inclusion matrix must be nonempty");
  }
  IntMatrix out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.cols_) {
      throw InvalidInclusion("inclusion matrix rows have unequal lengths");
    }
    for (std::size_t j = 0; j < out.cols_; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

namespace {

void check_shape(const AlgebraDims& a, const IntMatrix& m) {
  if (a.size() == 0) throw InvalidInclusion("a must be nonempty");
  if (m.rows() != a.size()) {
    throw InvalidInclusion("inclusion matrix has " + std::to_string(m.rows()) +
                           " rows but a has " + std::to_string(a.size()) +
                           " entries");
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < m.cols(); ++j) any |= m(i, j) != 0;
    if (!any) throw InvalidInclusion("row " + std::to_string(i) + " of m is zero");
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool any = false;
    for (std::size_t i = 0; i < m.rows(); ++i) any |= m(i, j) != 0;
    if (!any) throw InvalidInclusion("column " + std::to_string(j) + " of m is zero");
  }
}

std::vector<std::uint64_t> transpose_apply(const IntMatrix& m,
                                           const AlgebraDims& a) {
  std::vector<std::uint64_t> b(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::uint64_t prod;
      if (__builtin_mul_overflow(m(i, j), a[i], &prod) ||
          __builtin_add_overflow(b[j], prod, &b[j])) {
        throw InvalidInclusion("mᵗa overflows 64 bits");
      }
    }
  }
  return b;
}

mpz_class mpz(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

using ZMatrix = std::vector<std::vector<mpz_class>>;

ZMatrix zmul(const ZMatrix& x, const ZMatrix& y) {
  std::size_t n = x.size(), k = y.size(), p = y.empty() ? 0 : y[0].size();
  ZMatrix out(n, std::vector<mpz_class>(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (x[i][l] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) out[i][j] += x[i][l] * y[l][j];
    }
  return out;
}

ZMatrix to_z(const IntMatrix& m) {
  ZMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = mpz(m(i, j));
  return out;
}

ZMatrix identity(std::size_t n) {
  ZMatrix out(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

}  // namespace

InclusionData InclusionData::from_matrix(AlgebraDims a, IntMatrix m) {
  check_shape(a, m);
  AlgebraDims b(transpose_apply(m, a));
  return InclusionData(std::move(a), std::move(b), std::move(m));
}

InclusionData::InclusionData(AlgebraDims a, AlgebraDims b, IntMatrix m)
    : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
  check_shape(a_, m_);
  if (m_.cols() != b_.size()) {
    throw InvalidInclusion("inclusion matrix has " + std::to_string(m_.cols()) +
                           " columns but b has " + std::to_string(b_.size()) +
                           " entries");
  }
  if (transpose_apply(m_, a_) != b_.blocks()) {
    throw InvalidInclusion("inconsistent inclusion: mᵗa != b");
  }
}

std::vector<mpq_class> canonical_trace_weights(const AlgebraDims& d) {
  mpz_class total = d.total_dimension();
  std::vector<mpq_class> out;
  out.reserve(d.size());
  for (auto n : d.blocks()) {
    mpq_class w(mpz(n) * mpz(n), total);
    w.canonicalize();
    out.push_back(w);
  }
  return out;
}

bool is_abelian(const InclusionData& inc) {
  for (auto ai : inc.a().blocks()) {
    if (ai != 1) return false;
  }
  const IntMatrix& m = inc.m();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    int support = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) support += m(i, j) != 0;
    if (support != 1) return false;
  }
  return true;
}

MarkovReport analyze(const InclusionData& inc) {
  MarkovReport rep;
  rep.r = mpq_class(inc.b().total_dimension(), inc.a().total_dimension());
  rep.r.canonicalize();
  rep.index_integral = rep.r.get_den() == 1;
  rep.is_markov = true;
  for (std::size_t i = 0; i < inc.s(); ++i) {
    mpz_class sum = 0;
    for (std::size_t j = 0; j < inc.t(); ++j) sum += mpz(inc.m()(i, j)) * mpz(inc.b()[j]);
    rep.mb.push_back(sum);
    if (mpq_class(sum) != rep.r * mpz(inc.a()[i])) rep.is_markov = false;
  }
  rep.index_violation = rep.is_markov && !rep.index_integral;
  rep.is_abelian = is_abelian(inc);
  return rep;
}

std::uint64_t markov_index(const InclusionData& inc) {
  MarkovReport rep = analyze(inc);
  if (!rep.is_markov) {
    std::ostringstream os;
    os << "inclusion is not Markov: mb = (";
    for (std::size_t i = 0; i < rep.mb.size(); ++i) os << (i ? "," : "") << rep.mb[i];
    os << ") is not " << rep.r << "·a";
    throw NotMarkov(os.str());
  }
  if (rep.index_violation) {
    throw InvariantViolation("Markov inclusion with non-integral index " +
                             rep.r.get_str());
  }
  return rep.r.get_num().get_ui();
}

InclusionData basic_construction(const InclusionData& inc) {
  std::uint64_t r = markov_index(inc);
  return InclusionData(inc.b(), inc.a().scaled(r), inc.m().transposed());
}

std::vector<AlgebraDims> jones_tower(const InclusionData& inc, unsigned depth) {
  markov_index(inc);
  std::vector<AlgebraDims> out{inc.a(), inc.b()};
  InclusionData cur = inc;
  for (unsigned k = 0; k < depth; ++k) {
    cur = basic_construction(basic_construction(cur));
    out.push_back(cur.a());
    out.push_back(cur.b());
  }
  return out;
}

AlgebraDims relative_commutant_dims(const InclusionData& inc, unsigned k,
                                    Flavor flavor) {
  std::uint64_t r = markov_index(inc);
  if (!is_abelian(inc)) {
    throw NotAbelian("relative commutants are only determined by (a, b, m) "
                     "for abelian inclusions");
  }
  std::uint64_t rk = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(rk, r, &rk)) throw ResourceLimit("r^k overflows 64 bits");
  }
  switch (flavor) {
    case Flavor::AA:
    case Flavor::BA:
      return inc.a().scaled(rk);
    case Flavor::AB:
      return inc.b().scaled(rk);
    case Flavor::BB:
      return AlgebraDims(std::vector<std::uint64_t>(inc.t(), rk));
  }
  throw InvariantViolation("unknown flavor");
}

std::vector<std::vector<double>> alternating_word(const InclusionData& inc,
                                                  unsigned length,
                                                  WordStart start) {
  ZMatrix m = to_z(inc.m());
  ZMatrix mt = to_z(inc.m().transposed());
  ZMatrix w = identity(start == WordStart::M ? inc.s() : inc.t());
  bool use_m = start == WordStart::M;
  for (unsigned i = 0; i < length; ++i) {
    w = zmul(w, use_m ? m : mt);
    use_m = !use_m;
  }
  std::vector<std::vector<double>> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (const auto& x : w[i]) out[i].push_back(x.get_d());
  return out;
}

WordNorm word_norm(const InclusionData& inc, unsigned length, WordStart start) {
  std::uint64_t r = markov_index(inc);
  auto w = alternating_word(inc, length, start);
  std::size_t n = w.size();
  std::size_t p = w.empty() ? 0 : w[0].size();

  // S = W Wᵀ, symmetric positive semidefinite.
  std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < p; ++l) gram[i][j] += w[i][l] * w[j][l];

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double lambda = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<double> next(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) next[i] += gram[i][j] * v[j];
    double rayleigh = 0.0, norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      rayleigh += v[i] * next[i];
      norm2 += next[i] * next[i];
    }
    double norm = std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) v[i] = next[i] / norm;
    bool converged = std::abs(rayleigh - lambda) < 1e-14 * rayleigh;
    lambda = rayleigh;
    if (converged) break;
  }

  WordNorm out;
  out.numeric = std::sqrt(lambda);
  out.theoretical = RadicalScalar(static_cast<long>(r)).sqrt().pow(static_cast<int>(length));
  double expected = out.theoretical.to_double();
  out.agrees = std::abs(out.numeric - expected) <= 1e-9 * expected;
  return out;
}

mpz_class loop_count(const InclusionData& inc, unsigned k) {
  ZMatrix mmt = zmul(to_z(inc.m()), to_z(inc.m().transposed()));
  ZMatrix acc = identity(inc.s());
  for (unsigned i = 0; i < k; ++i) acc = zmul(acc, mmt);
  mpz_class tr = 0;
  for (std::size_t i = 0; i < inc.s(); ++i) tr += acc[i][i];
  return tr;
}

const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::AA: return "AA";
    case Flavor::AB: return "AB";
    case Flavor::BA: return "BA";
    case Flavor::BB: return "BB";
  }
  return "?";
}

const char* to_string(WordStart w) { return w == WordStart::M ? "m" : "mt"; }

}  // namespace planar
