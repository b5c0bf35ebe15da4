#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "pascalgeo/projgeom.hpp"
#include "pascalgeo/rational.hpp"
#include "pascalgeo/sextuple.hpp"
#include "pascalgeo/symbols.hpp"

namespace pascalgeo {

/// Seeded rational sampler. Draws are reduced by plain modulo so the stream
/// is identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::int64_t numerator_bound = 1000, std::int64_t denominator_bound = 50)
      : engine_(seed), num_bound_(numerator_bound), den_bound_(denominator_bound) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  Rational rational() {
    Rational r(Integer(static_cast<long>(integer(-num_bound_, num_bound_))),
               Integer(static_cast<long>(integer(1, den_bound_))));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (r != 0) return r;
    }
  }

  /// Rationals avoiding every value in `avoid`.
  Rational rational_avoiding(const std::vector<Rational>& avoid) {
    for (;;) {
      Rational r = rational();
      if (std::find(avoid.begin(), avoid.end(), r) == avoid.end()) return r;
    }
  }

  std::vector<Rational> distinct_rationals(std::size_t n) {
    std::vector<Rational> out;
    while (out.size() < n) out.push_back(rational_avoiding(out));
    return out;
  }

  Sextuple injective_sextuple() {
    const auto v = distinct_rationals(6);
    return Sextuple::from_values({v[0], v[1], v[2], v[3], v[4], v[5]});
  }

  /// Generic point of the polydiagonal of `pi`: one fresh value per block.
  Sextuple on_polydiagonal(const Partition& pi) {
    const auto v = distinct_rationals(pi.size());
    std::array<Rational, 6> values;
    for (std::size_t k = 0; k < pi.size(); ++k) {
      for (Letter l : kLetters) {
        if (pi.blocks()[k] & (1U << index(l))) values[index(l)] = v[k];
      }
    }
    return Sextuple::from_values(values);
  }

  ProjPoint point() {
    for (;;) {
      Vec3 v{rational(), rational(), rational()};
      if (!is_zero(v)) return ProjPoint(v);
    }
  }

  ProjLine line() { return ProjLine(point().coords()); }

  P1Point p1() {
    for (;;) {
      Rational x0 = rational(), x1 = rational();
      if (x0 != 0 || x1 != 0) return P1Point(x0, x1);
    }
  }

  Mobius mobius() {
    for (;;) {
      Mobius::Mat2 m{{{rational(), rational()}, {rational(), rational()}}};
      if (m[0][0] * m[1][1] != m[0][1] * m[1][0]) return Mobius(m);
    }
  }

  const LetterPermutation& permutation() {
    static const std::vector<LetterPermutation> all = LetterPermutation::all();
    return all[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(all.size()) - 1))];
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::int64_t num_bound_;
  std::int64_t den_bound_;
};

}  // namespace pascalgeo
