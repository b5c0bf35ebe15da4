#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pascalgeo/error.hpp"
#include "pascalgeo/rational.hpp"

namespace pascalgeo {

// Fixed variable order: a < b < c < d < e < f < t < auxiliaries (by name).
inline int compare_variables(const std::string& lhs, const std::string& rhs) {
  auto rank = [](const std::string& v) -> int {
    if (v.size() == 1 && v[0] >= 'a' && v[0] <= 'f') return v[0] - 'a';
    if (v == "t") return 6;
    return 7;
  };
  const int rl = rank(lhs);
  const int rr = rank(rhs);
  if (rl != rr) return rl < rr ? -1 : 1;
  if (rl < 7) return 0;
  return lhs.compare(rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

/// A power product of named variables, kept sorted in the fixed variable
/// order with strictly positive exponents.
class Monomial {
 public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;

  static Monomial variable(std::string name, unsigned exponent = 1) {
    Monomial m;
    if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [_, e] : factors_) d += e;
    return d;
  }

  unsigned exponent(const std::string& var) const {
    for (const auto& [v, e] : factors_) {
      if (v == var) return e;
    }
    return 0;
  }

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
    Monomial out;
    auto i = lhs.factors_.begin();
    auto j = rhs.factors_.begin();
    while (i != lhs.factors_.end() || j != rhs.factors_.end()) {
      if (j == rhs.factors_.end()) {
        out.factors_.push_back(*i++);
      } else if (i == lhs.factors_.end()) {
        out.factors_.push_back(*j++);
      } else {
        const int c = compare_variables(i->first, j->first);
        if (c < 0) {
          out.factors_.push_back(*i++);
        } else if (c > 0) {
          out.factors_.push_back(*j++);
        } else {
          out.factors_.emplace_back(i->first, i->second + j->second);
          ++i;
          ++j;
        }
      }
    }
    return out;
  }

  // Lexicographic: the first variable (in the fixed order) whose exponents
  // differ decides, larger exponent is larger.
  friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) {
    auto i = lhs.factors_.begin();
    auto j = rhs.factors_.begin();
    for (;;) {
      if (i == lhs.factors_.end() && j == rhs.factors_.end()) return std::strong_ordering::equal;
      if (i == lhs.factors_.end()) return std::strong_ordering::less;
      if (j == rhs.factors_.end()) return std::strong_ordering::greater;
      const int c = compare_variables(i->first, j->first);
      if (c < 0) return std::strong_ordering::greater;
      if (c > 0) return std::strong_ordering::less;
      if (i->second != j->second) return i->second <=> j->second;
      ++i;
      ++j;
    }
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    std::string out;
    for (const auto& [v, e] : factors_) {
      if (!out.empty() && v.size() > 1) out += '*';
      out += v;
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::vector<Factor> factors_;
};

/// Sparse multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored, so two equal polynomials compare equal
/// term by term.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static MultiPoly variable(const std::string& name) {
    MultiPoly p;
    p.terms_.emplace(Monomial::variable(name), Rational(1));
    return p;
  }

  static MultiPoly term(const Rational& coeff, const Monomial& mono) {
    MultiPoly p;
    if (coeff != 0) p.terms_.emplace(mono, coeff);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, _] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_homogeneous(unsigned degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [degree](const auto& kv) { return kv.first.degree() == degree; });
  }

  std::vector<std::string> variables() const {
    std::vector<std::string> vars;
    for (const auto& [m, _] : terms_) {
      for (const auto& [v, e] : m.factors()) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end(),
              [](const std::string& x, const std::string& y) { return compare_variables(x, y) < 0; });
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  MultiPoly& operator+=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator-(const MultiPoly& p) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, -c);
    return out;
  }

  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    MultiPoly out;
    for (const auto& [m1, c1] : lhs.terms_) {
      for (const auto& [m2, c2] : rhs.terms_) out.add_term(m1 * m2, c1 * c2);
    }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(unsigned k) const {
    MultiPoly result(1);
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return result;
  }

  /// Replaces each bound variable by its polynomial; unbound variables pass
  /// through unchanged.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const {
    std::map<std::pair<std::string, unsigned>, MultiPoly> power_cache;
    auto power = [&](const std::string& v, unsigned e) -> const MultiPoly& {
      auto key = std::make_pair(v, e);
      auto it = power_cache.find(key);
      if (it == power_cache.end()) {
        it = power_cache.emplace(key, bindings.at(v).pow(e)).first;
      }
      return it->second;
    };
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
      MultiPoly product(c);
      Monomial kept;
      for (const auto& [v, e] : m.factors()) {
        if (bindings.count(v)) {
          product *= power(v, e);
        } else {
          kept = kept * Monomial::variable(v, e);
        }
      }
      if (!kept.is_one()) product *= term(Rational(1), kept);
      out += product;
    }
    return out;
  }

  /// Sorted monomials, leading (lex-largest) first, with explicit signs.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      const bool negative = c < 0;
      Rational mag = negative ? Rational(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (m.is_one()) {
        out += pascalgeo::to_string(mag);
      } else {
        if (mag != 1) out += pascalgeo::to_string(mag) + "*";
        out += m.to_string();
      }
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  MultiPoly expr() {
    MultiPoly acc;
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
    MultiPoly first = term();
    acc = negate ? -first : first;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      MultiPoly next = term();
      if (c == '+') {
        acc += next;
      } else {
        acc -= next;
      }
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      return MultiPoly::variable(std::string(1, c));
    }
    fail("expected a term");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses expressions such as "abde - 2a^2c + (e-f)(b-c)". Variables are
/// single letters; juxtaposition and '*' both multiply.
inline MultiPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace pascalgeo
