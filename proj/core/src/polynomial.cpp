#include "vkarrow/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace vkarrow {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

int checked_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

// ---------------------------------------------------------------------------
// ArrowMonomial

ArrowMonomial::ArrowMonomial(int a_exp, std::vector<KPower> k_powers)
    : a_exp_(a_exp), k_powers_(std::move(k_powers)) {
  std::sort(k_powers_.begin(), k_powers_.end());
  std::vector<KPower> merged;
  for (const auto& [index, power] : k_powers_) {
    if (index == 0) throw std::invalid_argument("K index must be >= 1");
    if (power == 0) continue;
    if (!merged.empty() && merged.back().first == index) {
      merged.back().second += power;
    } else {
      merged.emplace_back(index, power);
    }
  }
  k_powers_ = std::move(merged);
}

ArrowMonomial ArrowMonomial::operator*(const ArrowMonomial& other) const {
  ArrowMonomial out;
  out.a_exp_ = checked_add(a_exp_, other.a_exp_);
  out.k_powers_.reserve(k_powers_.size() + other.k_powers_.size());
  auto a = k_powers_.begin();
  auto b = other.k_powers_.begin();
  while (a != k_powers_.end() || b != other.k_powers_.end()) {
    if (b == other.k_powers_.end() || (a != k_powers_.end() && a->first < b->first)) {
      out.k_powers_.push_back(*a++);
    } else if (a == k_powers_.end() || b->first < a->first) {
      out.k_powers_.push_back(*b++);
    } else {
      out.k_powers_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// LaurentA

LaurentA LaurentA::monomial(int exp, Coefficient c) {
  LaurentA p;
  p.add_term(exp, c);
  return p;
}

LaurentA LaurentA::loop_value() {
  LaurentA d;
  d.add_term(2, -1);
  d.add_term(-2, -1);
  return d;
}

Coefficient LaurentA::coefficient(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentA::add_term(int exp, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentA& LaurentA::operator+=(const LaurentA& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentA operator*(const LaurentA& a, const LaurentA& b) {
  LaurentA out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(checked_add(ea, eb), checked_mul(ca, cb));
    }
  }
  return out;
}

LaurentA LaurentA::pow(unsigned e) const {
  LaurentA result = one();
  LaurentA base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// ArrowPolynomial

ArrowPolynomial ArrowPolynomial::from_monomial(const ArrowMonomial& m, Coefficient c) {
  ArrowPolynomial p;
  p.add_term(m, c);
  return p;
}

ArrowPolynomial ArrowPolynomial::from_laurent(const LaurentA& l) {
  ArrowPolynomial p;
  for (const auto& [e, c] : l.terms()) p.add_term(ArrowMonomial(e), c);
  return p;
}

Coefficient ArrowPolynomial::coefficient(const ArrowMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void ArrowPolynomial::add_term(const ArrowMonomial& m, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

ArrowPolynomial& ArrowPolynomial::operator+=(const ArrowPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ArrowPolynomial& ArrowPolynomial::operator-=(const ArrowPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

ArrowPolynomial ArrowPolynomial::operator-() const {
  ArrowPolynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, checked_mul(c, -1));
  return out;
}

ArrowPolynomial operator*(const ArrowPolynomial& a, const ArrowPolynomial& b) {
  ArrowPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, checked_mul(ca, cb));
  }
  return out;
}

ArrowPolynomial operator*(const ArrowPolynomial& a, const LaurentA& b) {
  ArrowPolynomial out;
  for (const auto& [m, ca] : a.terms_) {
    for (const auto& [e, cb] : b.terms()) {
      out.add_term(m.with_a_exp(checked_add(m.a_exp(), e)), checked_mul(ca, cb));
    }
  }
  return out;
}

ArrowPolynomial mul_d_power(const ArrowPolynomial& p, unsigned e) {
  if (e == 0) return p;
  return p * LaurentA::loop_value().pow(e);
}

ArrowPolynomial normalize_writhe(const ArrowPolynomial& p, int w) {
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  const Coefficient sign = (w % 2 == 0) ? 1 : -1;
  return p * LaurentA::monomial(-3 * w, sign);
}

LaurentA specialize_k_one(const ArrowPolynomial& p) {
  LaurentA out;
  for (const auto& [m, c] : p.terms()) out.add_term(m.a_exp(), c);
  return out;
}

ArrowPolynomial invert_a(const ArrowPolynomial& p) {
  ArrowPolynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term(m.with_a_exp(-m.a_exp()), c);
  return out;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Monomial body without coefficient; empty for the unit monomial.
std::string monomial_body(int a_exp, const std::vector<ArrowMonomial::KPower>& ks) {
  std::string s;
  if (a_exp == 1) {
    s = "A";
  } else if (a_exp != 0) {
    s = "A^" + std::to_string(a_exp);
  }
  for (const auto& [index, power] : ks) {
    if (!s.empty()) s += '*';
    s += 'K' + std::to_string(index);
    if (power != 1) s += '^' + std::to_string(power);
  }
  return s;
}

template <class Range, class BodyFn>
std::string join_terms(const Range& terms, BodyFn body_of) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const std::string body = body_of(key);
    const auto mag = c < 0 ? -static_cast<unsigned long long>(c)
                           : static_cast<unsigned long long>(c);
    std::string term;
    if (body.empty()) {
      term = std::to_string(mag);
    } else if (mag == 1) {
      term = body;
    } else {
      term = std::to_string(mag) + '*' + body;
    }
    if (first) {
      out += (c < 0 ? "-" : "") + term;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const ArrowMonomial& m) {
  auto s = monomial_body(m.a_exp(), m.k_powers());
  return s.empty() ? "1" : s;
}

std::string to_string(const ArrowPolynomial& p) {
  return join_terms(p.terms(), [](const ArrowMonomial& m) {
    return monomial_body(m.a_exp(), m.k_powers());
  });
}

std::string to_string(const LaurentA& p) {
  return join_terms(p.terms(), [](int e) { return monomial_body(e, {}); });
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }
  }

  ArrowPolynomial parse() {
    if (s_.empty()) fail("empty polynomial");
    ArrowPolynomial out;
    Coefficient sign = 1;
    if (peek('-') || peek('+')) sign = s_[pos_++] == '-' ? -1 : 1;
    term(out, sign);
    while (pos_ < s_.size()) {
      if (!peek('+') && !peek('-')) fail("expected '+' or '-'");
      sign = s_[pos_++] == '-' ? -1 : 1;
      term(out, sign);
    }
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw PolynomialParseError("polynomial parse error at offset " +
                               std::to_string(pos_) + ": " + why);
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  template <class Int>
  Int number(bool allow_sign) {
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    if (!allow_sign && begin != end && *begin == '-') fail("unexpected sign");
    Int v{};
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr == begin) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  void term(ArrowPolynomial& out, Coefficient sign) {
    Coefficient coeff = 1;
    int a_exp = 0;
    std::vector<ArrowMonomial::KPower> ks;
    bool any = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = number<Coefficient>(false);
      any = true;
      if (!peek('*')) {
        out.add_term(ArrowMonomial{}, checked_mul(sign, coeff));
        return;
      }
      ++pos_;
    }
    while (true) {
      if (peek('A')) {
        ++pos_;
        int e = 1;
        if (peek('^')) {
          ++pos_;
          e = number<int>(true);
        }
        a_exp = checked_add(a_exp, e);
      } else if (peek('K')) {
        ++pos_;
        const auto index = number<unsigned>(false);
        if (index == 0) fail("K index must be >= 1");
        unsigned power = 1;
        if (peek('^')) {
          ++pos_;
          power = number<unsigned>(false);
          if (power == 0) fail("K power must be >= 1");
        }
        ks.emplace_back(index, power);
      } else {
        fail(any ? "expected factor after '*'" : "expected term");
      }
      any = true;
      if (!peek('*')) break;
      ++pos_;
    }
    out.add_term(ArrowMonomial(a_exp, std::move(ks)), checked_mul(sign, coeff));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

ArrowPolynomial parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace vkarrow
