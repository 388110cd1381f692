#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace planar {

// Exact real number of the form
//
//   sum_t  q_t * prod_p p^(e_{t,p}/4)
//
// with q_t rational and p prime. Terms are kept in a normal form: every
// exponent numerator lies in {1, 2, 3} (integer powers are folded into the
// coefficient), no two terms share a radical, and no coefficient is zero.
// Distinct radicals are linearly independent over Q, so structural equality
// of normal forms is numeric equality.
class RadicalScalar {
 public:
  // Sorted (prime, numerator) pairs, numerator in {1, 2, 3}.
  using Radicand = std::vector<std::pair<std::uint64_t, int>>;

  RadicalScalar() = default;
  RadicalScalar(long value);  // NOLINT(google-explicit-constructor)
  RadicalScalar(mpq_class value);  // NOLINT(google-explicit-constructor)

  // q * base^(numerator/4) for a positive rational base.
  static RadicalScalar root4(const mpq_class& base, long numerator,
                             const mpq_class& coeff = 1);
  // Parses the textual form produced by to_string().
  static RadicalScalar parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_rational() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Radicand, mpq_class>& terms() const { return terms_; }

  RadicalScalar& operator+=(const RadicalScalar& rhs);
  RadicalScalar& operator-=(const RadicalScalar& rhs);
  RadicalScalar& operator*=(const RadicalScalar& rhs);
  RadicalScalar operator-() const;

  friend RadicalScalar operator+(RadicalScalar lhs, const RadicalScalar& rhs) {
    return lhs += rhs;
  }
  friend RadicalScalar operator-(RadicalScalar lhs, const RadicalScalar& rhs) {
    return lhs -= rhs;
  }
  friend RadicalScalar operator*(const RadicalScalar& lhs,
                                 const RadicalScalar& rhs);
  friend bool operator==(const RadicalScalar&, const RadicalScalar&) = default;

  // Positive square root of a monomial with positive coefficient and even
  // exponent numerators. Throws NotRepresentable otherwise.
  RadicalScalar sqrt() const;
  // Inverse of a nonzero monomial. Throws NotInvertible otherwise.
  RadicalScalar inverse() const;
  RadicalScalar pow(int exponent) const;

  double to_double() const;
  // "q * 2^(1/4) * 3^(2/4) + q' ..." with terms in canonical order.
  std::string to_string() const;

 private:
  void add_term(const Radicand& radicand, const mpq_class& coeff);

  std::map<Radicand, mpq_class> terms_;
};

RadicalScalar sqrt(const RadicalScalar& x);
RadicalScalar invert(const RadicalScalar& x);
inline double to_float(const RadicalScalar& x) { return x.to_double(); }

std::ostream& operator<<(std::ostream& os, const RadicalScalar& x);

// Prime factorisation of a positive integer by trial division.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

}  // namespace planar
