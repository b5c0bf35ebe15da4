#pragma once

#include <map>
#include <string>
#include <vector>

#include "pascalgeo/formula.hpp"
#include "pascalgeo/multipoly.hpp"

namespace pascalgeo {

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // offending polynomial when the check fails
};

/// Symbolic verification of the decomposition u_i = P_i * delta + Q_i with
/// u2 = delta, and of the vanishing of u0, u1, u2 under each of the six
/// coincidence conditions C1..C6.
inline std::vector<IdentityCheck> verify_formula_identities() {
  const auto& u = pascal_formula().u;
  const MultiPoly p0 = parse_poly("bf - be + ce");
  const MultiPoly q0 = parse_poly("(e - f)(b - c)(ae + bd - bf - ce)");
  const MultiPoly p1 = parse_poly("-(c + f)");
  const MultiPoly q1 = parse_poly("(f - e)(b - c)(a - c + d - f)");
  // det [[1,1,1],[a,b,c],[f,e,d]] by cofactor expansion along the first row
  const MultiPoly delta = parse_poly("(bd - ce) - (ad - cf) + (ae - bf)");

  std::vector<IdentityCheck> report;
  auto expect_zero = [&report](std::string name, const MultiPoly& p) {
    report.push_back({std::move(name), p.is_zero(), p.is_zero() ? "" : p.to_string()});
  };
  expect_zero("u0 = P0*delta + Q0", u[0] - (p0 * delta + q0));
  expect_zero("u1 = P1*delta + Q1", u[1] - (p1 * delta + q1));
  expect_zero("u2 = delta", u[2] - delta);

  auto var = [](const char* v) { return MultiPoly::variable(v); };
  const std::vector<std::pair<std::string, std::map<std::string, MultiPoly>>> conditions{
      {"C1 (a=b=c)", {{"b", var("a")}, {"c", var("a")}}},
      {"C2 (d=e=f)", {{"e", var("d")}, {"f", var("d")}}},
      {"C3 (a=b, e=f)", {{"b", var("a")}, {"f", var("e")}}},
      {"C4 (b=c, d=e)", {{"c", var("b")}, {"e", var("d")}}},
      {"C5 (a=c, d=f)", {{"c", var("a")}, {"f", var("d")}}},
      {"C6 (a=f, b=e, c=d)", {{"f", var("a")}, {"e", var("b")}, {"d", var("c")}}},
  };
  for (const auto& [label, binding] : conditions) {
    for (int i = 0; i < 3; ++i) {
      expect_zero("u" + std::to_string(i) + " vanishes under " + label, u[i].substitute(binding));
    }
    expect_zero("delta vanishes under " + label, delta.substitute(binding));
    expect_zero("Q0 vanishes under " + label, q0.substitute(binding));
    expect_zero("Q1 vanishes under " + label, q1.substitute(binding));
  }

  // a = b alone is not one of the conditions; u0 must survive it.
  const MultiPoly control = u[0].substitute({{"b", var("a")}});
  report.push_back({"u0 survives a=b alone", !control.is_zero(), control.is_zero() ? "vanished" : ""});
  return report;
}

}  // namespace pascalgeo
