#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pascalgeo/error.hpp"
#include "pascalgeo/multipoly.hpp"
#include "pascalgeo/rational.hpp"

namespace pascalgeo {

/// Polynomial in the arc parameter t. coeffs()[k] is the coefficient of t^k;
/// trailing zeros are trimmed so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }
  UniPoly(int c) : UniPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// c * t^k
  static UniPoly monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
  }
  static UniPoly t() { return monomial(1, 1); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  /// Order of vanishing at t = 0; empty for the zero polynomial.
  std::optional<std::size_t> valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] != 0) return k;
    }
    return std::nullopt;
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly& operator+=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator-(UniPoly p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return UniPoly(std::move(out));
  }
  UniPoly& operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  MultiPoly to_multipoly(const std::string& var = "t") const {
    MultiPoly out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      out += MultiPoly::term(coeffs_[k], Monomial::variable(var, static_cast<unsigned>(k)));
    }
    return out;
  }

  std::string to_string() const { return to_multipoly().to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Reads a polynomial whose only variable is `var` as a UniPoly.
inline UniPoly to_unipoly(const MultiPoly& p, const std::string& var = "t") {
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = 0;
    for (const auto& [v, k] : m.factors()) {
      if (v != var) throw DomainError("polynomial involves '" + v + "', expected only '" + var + "'");
      e = k;
    }
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] += c;
  }
  return UniPoly(std::move(coeffs));
}

struct TStrip {
  std::size_t valuation = 0;
  std::array<Rational, 3> limit;
};

/// Cancels the common power of t from a projective triple and sets t = 0.
inline TStrip t_strip(const std::array<UniPoly, 3>& triple) {
  std::optional<std::size_t> v;
  for (const auto& p : triple) {
    if (auto pv = p.valuation(); pv && (!v || *pv < *v)) v = pv;
  }
  if (!v) throw DomainError("indeterminate limit: the arc lies inside the indeterminacy locus");
  TStrip out;
  out.valuation = *v;
  for (std::size_t i = 0; i < 3; ++i) out.limit[i] = triple[i].coeff(*v);
  return out;
}

}  // namespace pascalgeo
