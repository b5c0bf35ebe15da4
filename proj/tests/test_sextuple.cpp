#include <gtest/gtest.h>

#include "pascalgeo/random.hpp"
#include "pascalgeo/sextuple.hpp"

using namespace pascalgeo;

namespace {

Sextuple values(std::initializer_list<int> v) {
  std::array<Rational, 6> a;
  std::copy(v.begin(), v.end(), a.begin());
  return Sextuple::from_values(a);
}

}  // namespace

TEST(Theta, Examples) {
  EXPECT_EQ(theta(values({1, 2, 1, 1, 5, 5})), Partition::parse("ACD.B.EF"));
  EXPECT_EQ(theta(values({1, 2, 1, 1, 5, 5})).type(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(theta(values({1, 2, 3, 4, 5, 6})), Partition::trivial());
  EXPECT_EQ(theta(values({7, 7, 7, 7, 7, 7})).type(), (std::vector<int>{6}));
}

TEST(Theta, InfinityIsAValue) {
  const Sextuple h({P1Point::infinity(), P1Point(0, 3), P1Point::affine(1), P1Point::affine(2),
                    P1Point::affine(3), P1Point::affine(4)});
  EXPECT_EQ(theta(h), Partition::parse("AB.C.D.E.F"));
}

TEST(Theta, MobiusInvariant) {
  Sampler rng(31);
  for (const auto& pi : all_partitions()) {
    const Sextuple h = rng.on_polydiagonal(pi);
    EXPECT_EQ(theta(h), pi);
    EXPECT_EQ(theta(mobius_conjugate(rng.mobius(), h)), pi);
  }
}

TEST(Polydiagonal, Membership) {
  const Sextuple h = values({1, 2, 1, 1, 5, 5});
  EXPECT_TRUE(in_polydiagonal(h, Partition::parse("ACD.B.E.F")));
  EXPECT_TRUE(in_polydiagonal(h, Partition::trivial()));
  EXPECT_TRUE(in_polydiagonal(h, Partition::parse("ACD.B.EF")));
  EXPECT_FALSE(in_polydiagonal(h, Partition::parse("ABCD.E.F")));
  const Sextuple inj = values({1, 2, 3, 4, 5, 6});
  for (const auto& pi : all_partitions()) {
    EXPECT_EQ(in_polydiagonal(inj, pi), pi == Partition::trivial());
  }
}

TEST(HCirc, Types) {
  EXPECT_TRUE(in_H_circ(values({1, 2, 3, 3, 2, 1})));
  EXPECT_FALSE(in_H_circ(values({1, 1, 1, 2, 2, 3})));
  EXPECT_FALSE(in_H_circ(values({1, 1, 1, 1, 2, 3})));
  EXPECT_TRUE(in_H_circ(values({1, 1, 1, 2, 3, 4})));
  EXPECT_TRUE(in_H_circ(values({1, 1, 2, 2, 3, 4})));
}

TEST(HCirc, BruteForceAgainstRemovedPolydiagonals) {
  std::vector<Partition> removed;
  for (const auto& pi : all_partitions()) {
    if (pi.type() == std::vector<int>{3, 2, 1} || pi.type() == std::vector<int>{4, 1, 1}) removed.push_back(pi);
  }
  Sampler rng(32);
  for (const auto& pi : all_partitions()) {
    const Sextuple h = rng.on_polydiagonal(pi);
    bool hit = false;
    for (const auto& r : removed) hit = hit || in_polydiagonal(h, r);
    EXPECT_EQ(in_H_circ(h), !hit) << pi.to_string();
  }
}

TEST(Indeterminate, Examples) {
  const Sextuple h = values({1, 2, 3, 3, 2, 1});  // AF.BE.CD
  EXPECT_TRUE(is_indeterminate(h, PascalSymbol::parse("AED/FBC")));
  EXPECT_FALSE(is_indeterminate(h, PascalSymbol::parse("AFC/DEB")));
  const Sextuple inj = values({1, 2, 3, 4, 5, 6});
  for (const auto& s : enumerate_symbols()) EXPECT_FALSE(is_indeterminate(inj, s));
}

TEST(Indeterminate, SingleDoublePointNeverBreaksAPascal) {
  Sampler rng(33);
  for (const auto& pi : all_partitions()) {
    if (pi.type() != std::vector<int>{2, 1, 1, 1, 1}) continue;
    const Sextuple h = rng.on_polydiagonal(pi);
    for (const auto& s : enumerate_symbols()) EXPECT_FALSE(is_indeterminate(h, s));
  }
}

TEST(Indeterminate, LetterEquivariant) {
  Sampler rng(34);
  const auto partitions = all_partitions();
  for (int i = 0; i < 300; ++i) {
    const Sextuple h = rng.on_polydiagonal(partitions[static_cast<std::size_t>(rng.integer(0, 202))]);
    const LetterPermutation& sigma = rng.permutation();
    const PascalSymbol& s = enumerate_symbols()[static_cast<std::size_t>(rng.integer(0, 59))];
    EXPECT_EQ(is_indeterminate(h.relabel(sigma), PascalSymbol::canonicalize(sigma(s.grid()))),
              is_indeterminate(h, s));
  }
}

TEST(Relabel, MovesValuesWithLetters) {
  const Sextuple h = values({1, 2, 3, 4, 5, 6});
  const LetterPermutation sigma({Letter::B, Letter::C, Letter::A, Letter::D, Letter::E, Letter::F});
  const Sextuple g = h.relabel(sigma);
  EXPECT_EQ(g[Letter::B], h[Letter::A]);
  EXPECT_EQ(g[Letter::A], h[Letter::C]);
  EXPECT_EQ(theta(values({1, 1, 2, 3, 4, 5}).relabel(sigma)), Partition::parse("A.BC.D.E.F"));
}

TEST(TriSymmetric, Examples) {
  const Sextuple t({P1Point::affine(0), P1Point::affine(1), P1Point::infinity(), P1Point::affine(2),
                    P1Point::affine(Rational(1, 2)), P1Point::affine(-1)});
  const auto alpha = tri_symmetric(t);
  ASSERT_TRUE(alpha.has_value());
  EXPECT_NE(*alpha, 0);
  EXPECT_NE(*alpha, 1);

  const Sextuple n({P1Point::affine(0), P1Point::affine(1), P1Point::infinity(), P1Point::affine(5),
                    P1Point::affine(7), P1Point::affine(11)});
  EXPECT_FALSE(tri_symmetric(n).has_value());

  EXPECT_THROW(tri_symmetric(values({1, 1, 2, 3, 4, 5})), DomainError);
}

TEST(TriSymmetric, ProjectivelyInvariant) {
  Sampler rng(35);
  const Sextuple t({P1Point::affine(0), P1Point::affine(1), P1Point::infinity(), P1Point::affine(3),
                    P1Point::affine(Rational(2, 3)), P1Point::affine(Rational(-1, 2))});
  ASSERT_TRUE(tri_symmetric(t).has_value());
  for (int i = 0; i < 10; ++i) {
    EXPECT_TRUE(tri_symmetric(mobius_conjugate(rng.mobius(), t)).has_value());
    EXPECT_TRUE(tri_symmetric(t.relabel(rng.permutation())).has_value());
  }
}

TEST(TriSymmetric, WitnessReproducesTheSet) {
  const Sextuple t({P1Point::affine(0), P1Point::affine(1), P1Point::infinity(), P1Point::affine(2),
                    P1Point::affine(Rational(1, 2)), P1Point::affine(-1)});
  const Rational a = *tri_symmetric(t);
  const Sextuple model({P1Point::affine(0), P1Point::affine(1), P1Point::infinity(), P1Point::affine(a),
                        P1Point::affine((a - 1) / a), P1Point::affine(1 / (1 - a))});
  EXPECT_EQ(theta(model), Partition::trivial());
}
