#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vkarrow {

using Coefficient = std::int64_t;

// Checked integer arithmetic. Overflow throws std::overflow_error.
Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);
int checked_add(int a, int b);

/// A^a_exp * prod K_i^p over k_powers. k_powers is sorted by index, every
/// index >= 1 and every power >= 1.
class ArrowMonomial {
public:
  using KPower = std::pair<unsigned, unsigned>;  // (index, power)

  ArrowMonomial() = default;
  explicit ArrowMonomial(int a_exp) : a_exp_(a_exp) {}
  ArrowMonomial(int a_exp, std::vector<KPower> k_powers);

  static ArrowMonomial k(unsigned index, unsigned power = 1) {
    return ArrowMonomial(0, {{index, power}});
  }

  int a_exp() const noexcept { return a_exp_; }
  const std::vector<KPower>& k_powers() const noexcept { return k_powers_; }
  bool has_k() const noexcept { return !k_powers_.empty(); }

  ArrowMonomial operator*(const ArrowMonomial& other) const;

  /// Same K-part, A-exponent replaced.
  ArrowMonomial with_a_exp(int a_exp) const {
    ArrowMonomial m = *this;
    m.a_exp_ = a_exp;
    return m;
  }

  friend auto operator<=>(const ArrowMonomial&, const ArrowMonomial&) = default;
  friend bool operator==(const ArrowMonomial&, const ArrowMonomial&) = default;

private:
  int a_exp_ = 0;
  std::vector<KPower> k_powers_;
};

/// Finite-support Laurent polynomial in A with integer coefficients.
class LaurentA {
public:
  using Terms = std::map<int, Coefficient>;

  LaurentA() = default;
  static LaurentA monomial(int exp, Coefficient c = 1);
  static LaurentA one() { return monomial(0); }
  /// d = -A^2 - A^-2.
  static LaurentA loop_value();

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(int exp) const;

  void add_term(int exp, Coefficient c);

  LaurentA& operator+=(const LaurentA& other);
  friend LaurentA operator+(LaurentA a, const LaurentA& b) { return a += b; }
  friend LaurentA operator*(const LaurentA& a, const LaurentA& b);
  LaurentA pow(unsigned e) const;

  friend bool operator==(const LaurentA&, const LaurentA&) = default;

private:
  Terms terms_;
};

/// Element of Z[A, A^-1][K_1, K_2, ...]. Zero coefficients are never stored,
/// so equality is structural.
class ArrowPolynomial {
public:
  using Terms = std::map<ArrowMonomial, Coefficient>;

  ArrowPolynomial() = default;
  static ArrowPolynomial one() { return from_monomial(ArrowMonomial{}); }
  static ArrowPolynomial from_monomial(const ArrowMonomial& m, Coefficient c = 1);
  static ArrowPolynomial from_laurent(const LaurentA& p);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Coefficient coefficient(const ArrowMonomial& m) const;

  void add_term(const ArrowMonomial& m, Coefficient c);

  ArrowPolynomial& operator+=(const ArrowPolynomial& other);
  ArrowPolynomial& operator-=(const ArrowPolynomial& other);
  ArrowPolynomial operator-() const;
  friend ArrowPolynomial operator+(ArrowPolynomial a, const ArrowPolynomial& b) {
    return a += b;
  }
  friend ArrowPolynomial operator-(ArrowPolynomial a, const ArrowPolynomial& b) {
    return a -= b;
  }
  friend ArrowPolynomial operator*(const ArrowPolynomial& a, const ArrowPolynomial& b);
  friend ArrowPolynomial operator*(const ArrowPolynomial& a, const LaurentA& b);

  friend bool operator==(const ArrowPolynomial&, const ArrowPolynomial&) = default;

private:
  Terms terms_;
};

/// p * d^e with d = -A^2 - A^-2.
ArrowPolynomial mul_d_power(const ArrowPolynomial& p, unsigned e);

/// p * (-A^3)^(-w).
ArrowPolynomial normalize_writhe(const ArrowPolynomial& p, int w);

/// Sets every K_i to 1.
LaurentA specialize_k_one(const ArrowPolynomial& p);

/// Substitutes A -> A^-1; the K-part of each term is unchanged.
ArrowPolynomial invert_a(const ArrowPolynomial& p);

class PolynomialParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical text: terms in ascending A-exponent, then K-part order, e.g.
/// "-A^-5 + A^-5*K1^2 - A^3*K1^2". The zero polynomial prints as "0".
std::string to_string(const ArrowPolynomial& p);
std::string to_string(const LaurentA& p);
std::string to_string(const ArrowMonomial& m);

/// Accepts the canonical form plus explicit unit coefficients and A^0
/// ("1*A^3*K1^2", "-1*A^-5"). Throws PolynomialParseError.
ArrowPolynomial parse_poly(std::string_view text);

}  // namespace vkarrow
