#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pascalgeo/error.hpp"
#include "pascalgeo/multipoly.hpp"

namespace pascalgeo {

inline const std::array<std::string, 6>& affine_variables() {
  static const std::array<std::string, 6> vars{"a", "b", "c", "d", "e", "f"};
  return vars;
}

/// Polynomial that has degree at most one in each of a..f, stored as
/// (coefficient, bitmask of variables present) pairs. Evaluating it on
/// homogeneous pairs (x0, x1) gives the multihomogenization of bidegree one
/// in every variable.
struct MultilinearForm {
  std::vector<std::pair<Rational, std::uint8_t>> terms;

  static MultilinearForm compile(const MultiPoly& p) {
    MultilinearForm out;
    const auto& vars = affine_variables();
    for (const auto& [m, c] : p.terms()) {
      std::uint8_t mask = 0;
      for (const auto& [v, e] : m.factors()) {
        auto it = std::find(vars.begin(), vars.end(), v);
        if (it == vars.end() || e != 1) {
          throw DomainError("not multilinear in a..f: " + p.to_string());
        }
        mask |= static_cast<std::uint8_t>(1U << (it - vars.begin()));
      }
      out.terms.emplace_back(c, mask);
    }
    return out;
  }

  /// homog[i] = (x0, x1) for the i-th variable; affine value x1 / x0.
  template <class Ring>
  Ring evaluate(const std::array<std::pair<Ring, Ring>, 6>& homog) const {
    Ring acc{};
    for (const auto& [c, mask] : terms) {
      Ring prod(c);
      for (int i = 0; i < 6; ++i) prod *= (mask & (1U << i)) ? homog[i].second : homog[i].first;
      acc += prod;
    }
    return acc;
  }
};

/// Replaces every letter v in a..f by the pair v0 (weight of x0) and v1
/// (weight of x1): each term becomes homogeneous of degree one in each pair.
inline MultiPoly multihomogenize(const MultiPoly& p) {
  std::map<std::string, MultiPoly> bindings;
  for (const auto& v : affine_variables()) bindings.emplace(v, MultiPoly::variable(v + "1"));
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::term(c, m).substitute(bindings);
    for (const auto& v : affine_variables()) {
      const unsigned e = m.exponent(v);
      if (e > 1) throw DomainError("not multilinear in a..f: " + p.to_string());
      if (e == 0) term *= MultiPoly::variable(v + "0");
    }
    out += term;
  }
  return out;
}

/// Line coordinates <u0, u1, u2> of the Pascal of [ABC/FED] with A = tau(a),
/// ..., F = tau(f), and their multihomogenized forms.
struct PascalFormula {
  std::array<MultiPoly, 3> u;
  std::array<MultiPoly, 3> homogenized;
  std::array<MultilinearForm, 3> compiled;
};

inline const PascalFormula& pascal_formula() {
  static const PascalFormula formula = [] {
    PascalFormula f;
    f.u[0] = parse_poly("abde - abdf - acde + acef + bcdf - bcef");
    f.u[1] = parse_poly("-abe + abf + acd - acf + adf - aef - bcd + bce - bde + bef + cde - cdf");
    f.u[2] = parse_poly("-ad + ae + bd - bf - ce + cf");
    for (int i = 0; i < 3; ++i) {
      f.homogenized[i] = multihomogenize(f.u[i]);
      f.compiled[i] = MultilinearForm::compile(f.u[i]);
    }
    return f;
  }();
  return formula;
}

}  // namespace pascalgeo
