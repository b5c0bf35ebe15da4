#include <gtest/gtest.h>

#include "pascalgeo/formula.hpp"
#include "pascalgeo/identities.hpp"
#include "pascalgeo/random.hpp"

using namespace pascalgeo;

TEST(PascalFormula, TermStructure) {
  const auto& f = pascal_formula();
  EXPECT_EQ(f.u[2], parse_poly("-ad + ae + bd - bf - ce + cf"));
  EXPECT_EQ(f.u[2].term_count(), 6U);
  for (const auto& [m, c] : f.u[2].terms()) EXPECT_TRUE(c == 1 || c == -1);
  EXPECT_EQ(f.u[0].term_count(), 6U);
  EXPECT_TRUE(f.u[0].is_homogeneous(4));
  EXPECT_EQ(f.u[1].term_count(), 12U);
  EXPECT_TRUE(f.u[1].is_homogeneous(3));
}

TEST(PascalFormula, MultihomogeneousOfDegreeOneInEachPair) {
  const auto& f = pascal_formula();
  for (const auto& U : f.homogenized) {
    EXPECT_TRUE(U.is_homogeneous(6));
    for (const auto& [m, c] : U.terms()) {
      for (const auto& v : affine_variables()) EXPECT_EQ(m.exponent(v + "0") + m.exponent(v + "1"), 1U);
    }
  }
}

TEST(PascalFormula, DehomogenizingRecoversU) {
  const auto& f = pascal_formula();
  std::map<std::string, MultiPoly> bind;
  for (const auto& v : affine_variables()) {
    bind[v + "0"] = 1;
    bind[v + "1"] = MultiPoly::variable(v);
  }
  for (int i = 0; i < 3; ++i) EXPECT_EQ(f.homogenized[i].substitute(bind), f.u[i]);
}

TEST(PascalFormula, CompiledFormMatchesHomogenized) {
  const auto& f = pascal_formula();
  Sampler rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<std::pair<Rational, Rational>, 6> pairs;
    std::map<std::string, MultiPoly> bind;
    for (int k = 0; k < 6; ++k) {
      pairs[k] = {rng.rational(), rng.rational()};
      bind[affine_variables()[k] + "0"] = pairs[k].first;
      bind[affine_variables()[k] + "1"] = pairs[k].second;
    }
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(MultiPoly(f.compiled[i].evaluate(pairs)), f.homogenized[i].substitute(bind));
    }
  }
}

TEST(PascalFormula, HomogenizedIsAffineTimesScales) {
  const auto& f = pascal_formula();
  Sampler rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<std::pair<Rational, Rational>, 6> pairs;
    std::map<std::string, MultiPoly> affine;
    Rational scale = 1;
    for (int k = 0; k < 6; ++k) {
      const Rational x0 = rng.nonzero_rational(), value = rng.rational();
      pairs[k] = {x0, x0 * value};
      affine[affine_variables()[k]] = value;
      scale *= x0;
    }
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(MultiPoly(f.compiled[i].evaluate(pairs)), f.u[i].substitute(affine) * scale);
    }
  }
}

TEST(FormulaIdentities, AllIdentitiesHold) {
  const auto report = verify_formula_identities();
  EXPECT_EQ(report.size(), 3U + 6U * 6U + 1U);
  for (const auto& r : report) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
}

TEST(FormulaIdentities, NamedChecksPresent) {
  const auto report = verify_formula_identities();
  auto find = [&](const std::string& name) {
    for (const auto& r : report) {
      if (r.name == name) return r.pass;
    }
    ADD_FAILURE() << "missing " << name;
    return false;
  };
  EXPECT_TRUE(find("u2 = delta"));
  EXPECT_TRUE(find("u0 vanishes under C6 (a=f, b=e, c=d)"));
  EXPECT_TRUE(find("u0 survives a=b alone"));
}

TEST(FormulaIdentities, ConditionsDoNotKillGenericPolynomials) {
  const MultiPoly u0 = pascal_formula().u[0];
  EXPECT_FALSE(u0.substitute({{"b", MultiPoly::variable("a")}}).is_zero());
  EXPECT_FALSE(u0.substitute({{"f", MultiPoly::variable("a")}, {"e", MultiPoly::variable("b")}}).is_zero());
}
