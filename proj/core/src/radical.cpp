#include "planar/radical.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

#include "planar/errors.hpp"

namespace planar {
namespace {

using Exponents = std::map<std::uint64_t, long>;

std::uint64_t to_u64(const mpz_class& z) {
  if (sgn(z) <= 0 || !mpz_fits_ulong_p(z.get_mpz_t())) {
    throw NotRepresentable("integer " + z.get_str() +
                           " is out of range for radical factorisation");
  }
  return z.get_ui();
}

mpz_class pow_u(std::uint64_t p, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, e);
  return out;
}

// Folds multiples of 4 in each exponent numerator into the coefficient and
// returns the remaining radicand.
RadicalScalar::Radicand normalize(const Exponents& exps, mpq_class& coeff) {
  RadicalScalar::Radicand out;
  for (auto [p, e] : exps) {
    long whole = e >= 0 ? e / 4 : -((-e + 3) / 4);
    long rem = e - 4 * whole;
    if (whole > 0) {
      coeff *= mpq_class(pow_u(p, static_cast<unsigned long>(whole)));
    } else if (whole < 0) {
      coeff /= mpq_class(pow_u(p, static_cast<unsigned long>(-whole)));
    }
    if (rem != 0) out.emplace_back(p, static_cast<int>(rem));
  }
  return out;
}

void accumulate(Exponents& exps, const mpz_class& z, long scale) {
  if (z == 1) return;
  for (auto [p, v] : factorize(to_u64(z))) exps[p] += scale * v;
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    int v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    if (v > 0) out.emplace_back(p, v);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

RadicalScalar::RadicalScalar(long value) : RadicalScalar(mpq_class(value)) {}

RadicalScalar::RadicalScalar(mpq_class value) {
  value.canonicalize();
  if (value != 0) terms_.emplace(Radicand{}, std::move(value));
}

RadicalScalar RadicalScalar::root4(const mpq_class& base, long numerator,
                                   const mpq_class& coeff) {
  if (sgn(base) <= 0) {
    throw NotRepresentable("radical base must be positive, got " +
                           base.get_str());
  }
  Exponents exps;
  accumulate(exps, base.get_num(), numerator);
  accumulate(exps, base.get_den(), -numerator);
  mpq_class c = coeff;
  Radicand r = normalize(exps, c);
  RadicalScalar out;
  out.add_term(r, c);
  return out;
}

bool RadicalScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void RadicalScalar::add_term(const Radicand& radicand, const mpq_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(radicand, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& rhs) {
  for (const auto& [r, c] : rhs.terms_) add_term(r, c);
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& rhs) {
  for (const auto& [r, c] : rhs.terms_) add_term(r, -c);
  return *this;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar out = *this;
  for (auto& [r, c] : out.terms_) c = -c;
  return out;
}

RadicalScalar operator*(const RadicalScalar& lhs, const RadicalScalar& rhs) {
  RadicalScalar out;
  for (const auto& [rl, cl] : lhs.terms_) {
    for (const auto& [rr, cr] : rhs.terms_) {
      mpq_class c = cl * cr;
      // Merge two sorted radicands; numerators are in 1..3 so a sum reaches
      // at most 6 and folds at most one factor of p.
      RadicalScalar::Radicand merged;
      merged.reserve(rl.size() + rr.size());
      auto a = rl.begin();
      auto b = rr.begin();
      while (a != rl.end() || b != rr.end()) {
        if (b == rr.end() || (a != rl.end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == rl.end() || b->first < a->first) {
          merged.push_back(*b++);
        } else {
          int e = a->second + b->second;
          if (e >= 4) {
            c *= mpq_class(mpz_class(static_cast<unsigned long>(a->first)));
            e -= 4;
          }
          if (e != 0) merged.emplace_back(a->first, e);
          ++a;
          ++b;
        }
      }
      out.add_term(merged, c);
    }
  }
  return out;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& rhs) {
  *this = *this * rhs;
  return *this;
}

RadicalScalar RadicalScalar::sqrt() const {
  if (is_zero()) return {};
  if (!is_monomial()) {
    throw NotRepresentable("sqrt of a multi-term value: " + to_string());
  }
  const auto& [radicand, coeff] = *terms_.begin();
  if (sgn(coeff) < 0) {
    throw NotRepresentable("sqrt of a negative value: " + to_string());
  }
  Exponents exps;
  accumulate(exps, coeff.get_num(), 2);
  accumulate(exps, coeff.get_den(), -2);
  for (auto [p, e] : radicand) {
    if (e % 2 != 0) {
      throw NotRepresentable("sqrt would need an eighth root: " + to_string());
    }
    exps[p] += e / 2;
  }
  mpq_class c = 1;
  Radicand r = normalize(exps, c);
  RadicalScalar out;
  out.add_term(r, c);
  return out;
}

RadicalScalar RadicalScalar::inverse() const {
  if (!is_monomial()) {
    throw NotInvertible(is_zero() ? "inverse of zero"
                                  : "inverse of a multi-term value: " +
                                        to_string());
  }
  const auto& [radicand, coeff] = *terms_.begin();
  Exponents exps;
  for (auto [p, e] : radicand) exps[p] = -e;
  mpq_class c = 1 / coeff;
  Radicand r = normalize(exps, c);
  RadicalScalar out;
  out.add_term(r, c);
  return out;
}

RadicalScalar RadicalScalar::pow(int exponent) const {
  RadicalScalar base = exponent < 0 ? inverse() : *this;
  RadicalScalar out(1L);
  for (int i = 0; i < std::abs(exponent); ++i) out *= base;
  return out;
}

double RadicalScalar::to_double() const {
  double sum = 0.0;
  for (const auto& [r, c] : terms_) {
    double term = c.get_d();
    for (auto [p, e] : r) term *= std::pow(static_cast<double>(p), e / 4.0);
    sum += term;
  }
  return sum;
}

std::string RadicalScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    mpq_class magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    os << magnitude.get_str();
    for (auto [p, e] : r) os << " * " << p << "^(" << e << "/4)";
  }
  return os.str();
}

RadicalScalar sqrt(const RadicalScalar& x) { return x.sqrt(); }
RadicalScalar invert(const RadicalScalar& x) { return x.inverse(); }

std::ostream& operator<<(std::ostream& os, const RadicalScalar& x) {
  return os << x.to_string();
}

// Grammar:
//   sum    := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := int '/' int | int '^(' ['-'] int '/' int ')' | int
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RadicalScalar parse_sum() {
    RadicalScalar out;
    skip_ws();
    bool negative = consume('-');
    out += signed_term(negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (consume('+')) {
        out += signed_term(false);
      } else if (consume('-')) {
        out += signed_term(true);
      } else {
        fail("expected '+' or '-'");
      }
    }
    return out;
  }

 private:
  RadicalScalar signed_term(bool negative) {
    RadicalScalar t = parse_term();
    return negative ? -t : t;
  }

  RadicalScalar parse_term() {
    RadicalScalar out = parse_factor();
    for (;;) {
      skip_ws();
      if (!consume('*')) break;
      out *= parse_factor();
    }
    return out;
  }

  RadicalScalar parse_factor() {
    skip_ws();
    mpz_class base = parse_int();
    skip_ws();
    if (consume('/')) {
      skip_ws();
      mpz_class den = parse_int();
      if (den == 0) fail("zero denominator");
      return RadicalScalar(mpq_class(base, den));
    }
    if (consume('^')) {
      skip_ws();
      expect('(');
      skip_ws();
      bool neg = consume('-');
      mpz_class num = parse_int();
      skip_ws();
      expect('/');
      skip_ws();
      mpz_class den = parse_int();
      skip_ws();
      expect(')');
      if (den != 1 && den != 2 && den != 4) fail("exponent denominator must divide 4");
      long n = num.get_si() * (4 / den.get_si());
      if (base == 0) fail("zero radical base");
      return RadicalScalar::root4(mpq_class(base), neg ? -n : n);
    }
    return RadicalScalar(mpq_class(base));
  }

  mpz_class parse_int() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool consume(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("radical parse error at offset " + std::to_string(pos_) +
                     ": " + what + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RadicalScalar RadicalScalar::parse(std::string_view text) {
  return Parser(text).parse_sum();
}

}  // namespace planar
