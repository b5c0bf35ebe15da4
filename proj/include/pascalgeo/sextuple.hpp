#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pascalgeo/error.hpp"
#include "pascalgeo/projgeom.hpp"
#include "pascalgeo/symbols.hpp"

namespace pascalgeo {

/// A labelled sextuple on the conic: letter -> conic parameter.
class Sextuple {
 public:
  explicit Sextuple(std::array<P1Point, 6> points) : points_(std::move(points)) {}

  static Sextuple from_values(const std::array<Rational, 6>& values) {
    return Sextuple({P1Point::affine(values[0]), P1Point::affine(values[1]), P1Point::affine(values[2]),
                     P1Point::affine(values[3]), P1Point::affine(values[4]), P1Point::affine(values[5])});
  }

  const P1Point& operator[](Letter l) const { return points_[index(l)]; }
  const std::array<P1Point, 6>& points() const { return points_; }
  ProjPoint point(Letter l) const { return tau((*this)[l]); }

  /// (sigma h)(sigma x) = h(x): the same configuration with renamed letters.
  Sextuple relabel(const LetterPermutation& sigma) const {
    std::array<P1Point, 6> out = points_;
    for (Letter l : kLetters) out[index(sigma(l))] = points_[index(l)];
    return Sextuple(out);
  }

  friend bool operator==(const Sextuple&, const Sextuple&) = default;

 private:
  std::array<P1Point, 6> points_;
};

inline Sextuple mobius_conjugate(const Mobius& m, const Sextuple& h) {
  std::array<P1Point, 6> out = h.points();
  for (auto& p : out) p = m(p);
  return Sextuple(out);
}

/// Letters share a block iff they go to the same conic point.
inline Partition theta(const Sextuple& h) {
  std::vector<Partition::Block> blocks;
  Partition::Block used = 0;
  for (Letter x : kLetters) {
    if (used & (1U << index(x))) continue;
    Partition::Block b = 0;
    for (Letter y : kLetters) {
      if (h[y] == h[x]) b |= static_cast<Partition::Block>(1U << index(y));
    }
    used |= b;
    blocks.push_back(b);
  }
  return Partition::from_blocks(std::move(blocks));
}

/// h is constant on every block of pi.
inline bool in_polydiagonal(const Sextuple& h, const Partition& pi) { return refines(pi, theta(h)); }

/// Coincidence type avoids (3,2,1), (4,1,1) and everything coarser.
inline bool in_H_circ(const Sextuple& h) {
  static const std::vector<std::vector<int>> allowed{
      {1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, {2, 2, 1, 1}, {3, 1, 1, 1}, {2, 2, 2}};
  const auto t = theta(h).type();
  return std::find(allowed.begin(), allowed.end(), t) != allowed.end();
}

/// Combinatorial indeterminacy test: h lies on one of the six polydiagonals
/// attached to s.
inline bool is_indeterminate(const Sextuple& h, const PascalSymbol& s) {
  const Partition th = theta(h);
  for (const auto& pi : indeterminacy_partitions(s)) {
    if (refines(pi, th)) return true;
  }
  return false;
}

/// Searches for a rational alpha with the six values projectively equivalent
/// to {0, 1, inf, alpha, (alpha-1)/alpha, 1/(1-alpha)}.
inline std::optional<Rational> tri_symmetric(const Sextuple& h) {
  const auto& pts = h.points();
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (pts[i] == pts[j]) throw DomainError("tri-symmetry test needs six distinct points");
    }
  }
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      for (int k = 0; k < 6; ++k) {
        if (i == j || j == k || i == k) continue;
        const Mobius m = Mobius::to_standard_frame(pts[i], pts[j], pts[k]);
        std::vector<Rational> rest;
        for (int l = 0; l < 6; ++l) {
          if (l == i || l == j || l == k) continue;
          rest.push_back(*m(pts[l]).value());
        }
        std::array<int, 3> order{0, 1, 2};
        do {
          const Rational& b1 = rest[order[0]];
          const Rational& b2 = rest[order[1]];
          const Rational& b3 = rest[order[2]];
          if (b1 == 0 || b1 == 1) continue;
          if (b2 == (b1 - 1) / b1 && b3 == 1 / (1 - b1)) return b1;
        } while (std::next_permutation(order.begin(), order.end()));
      }
    }
  }
  return std::nullopt;
}

}  // namespace pascalgeo
