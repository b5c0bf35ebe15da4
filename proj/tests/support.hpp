#pragma once

#include <vector>

#include "pascalgeo/pascal.hpp"
#include "pascalgeo/random.hpp"

namespace pascalgeo::testing {

inline std::vector<Partition> partitions_of_type(std::vector<int> type) {
  std::vector<Partition> out;
  for (const auto& p : all_partitions()) {
    if (p.type() == type) out.push_back(p);
  }
  return out;
}

/// Random valid DegenerationSpec over a base of the requested type.
inline DegenerationSpec random_spec(Sampler& rng, const std::vector<int>& type) {
  static const auto codim_3111 = partitions_of_type({3, 1, 1, 1});
  static const auto codim_2211 = partitions_of_type({2, 2, 1, 1});
  static const auto triples = partitions_of_type({2, 2, 2});
  const auto& pool = type == std::vector<int>{3, 1, 1, 1} ? codim_3111
                     : type == std::vector<int>{2, 2, 1, 1} ? codim_2211
                                                             : triples;
  const Partition pi = pool[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(pool.size()) - 1))];
  Sextuple base = rng.on_polydiagonal(pi);
  if (rng.integer(0, 3) == 0) base = mobius_conjugate(rng.mobius(), base);  // sometimes move a block to infinity
  std::vector<PascalSymbol> bad;
  for (const auto& s : enumerate_symbols()) {
    if (is_indeterminate(base, s)) bad.push_back(s);
  }
  const PascalSymbol s = bad[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(bad.size()) - 1))];
  if (type != std::vector<int>{2, 2, 2}) return {base, s, Codim2Fiber{rng.p1()}};
  if (rng.integer(0, 1) == 0) {
    for (;;) {
      const ProjPoint q = rng.point();
      int nonzero = 0;
      for (const auto& c : q.coords()) nonzero += (c != 0);
      if (nonzero > 1) return {base, s, Interior222Fiber{q}};
    }
  }
  const Partition th = theta(base);
  const auto& blocks = th.blocks();
  const auto skip = static_cast<std::size_t>(rng.integer(0, 2));
  std::array<Partition::Block, 2> marked{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != skip) marked[k++] = blocks[i];
  }
  return {base, s, LLine222Fiber{marked, rng.p1()}};
}

/// d/dt of the local coordinate of m(point + t) at t = 0, where the local
/// coordinate is z near a finite point and 1/z near infinity.
inline Rational local_derivative(const Mobius& m, const P1Point& p) {
  const auto& a = m.matrix();
  // arc (x0(t), x1(t)) = (x0, x1) + t (v0, v1)
  Rational x0 = p[0], x1 = p[1], v0 = 0, v1 = 1;
  if (p.is_infinite()) {
    x0 = 0;
    x1 = 1;
    v0 = 1;
    v1 = 0;
  } else {
    x1 = p[1] / p[0];
    x0 = 1;
  }
  const Rational y0 = a[0][0] * x0 + a[0][1] * x1, y1 = a[1][0] * x0 + a[1][1] * x1;
  const Rational w0 = a[0][0] * v0 + a[0][1] * v1, w1 = a[1][0] * v0 + a[1][1] * v1;
  if (y0 != 0) return (w1 * y0 - y1 * w0) / (y0 * y0);
  return (w0 * y1 - y0 * w1) / (y1 * y1);
}

/// The same fiber point seen after moving the base by m.
inline DegenerationSpec conjugate_spec(const Mobius& m, const DegenerationSpec& spec) {
  const Partition th = theta(spec.base);
  auto derivative_of_block = [&](Partition::Block b) {
    for (Letter l : kLetters) {
      if (b & (1U << index(l))) return local_derivative(m, spec.base[l]);
    }
    return Rational(0);
  };
  auto derivative_of_letter = [&](Letter l) { return local_derivative(m, spec.base[l]); };
  const Sextuple base = mobius_conjugate(m, spec.base);
  return std::visit(
      [&](const auto& f) -> DegenerationSpec {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Codim2Fiber>) {
          std::vector<Letter> movers;
          for (Letter l : kLetters) {
            const auto b = th.block_of(l);
            if (std::popcount(static_cast<unsigned>(b)) > 1 && (b & -b) != (1 << index(l))) movers.push_back(l);
          }
          return {base, spec.symbol,
                  Codim2Fiber{P1Point(f.coords[0] * derivative_of_letter(movers[0]),
                                      f.coords[1] * derivative_of_letter(movers[1]))}};
        } else if constexpr (std::is_same_v<F, Interior222Fiber>) {
          Vec3 q;
          std::size_t i = 0;
          for (auto b : th.blocks()) q[i] = f.coords[i] * derivative_of_block(b), ++i;
          return {base, spec.symbol, Interior222Fiber{ProjPoint(q)}};
        } else {
          return {base, spec.symbol,
                  LLine222Fiber{f.marked, P1Point(f.coords[0] * derivative_of_block(f.marked[0]),
                                                  f.coords[1] * derivative_of_block(f.marked[1]))}};
        }
      },
      spec.fiber);
}

/// Möbius map sending every base value to a finite point.
inline Mobius finite_chart(Sampler& rng, const Sextuple& h) {
  for (;;) {
    const Mobius m = rng.mobius();
    bool finite = true;
    for (const auto& p : h.points()) finite = finite && !m(p).is_infinite();
    if (finite) return m;
  }
}

}  // namespace pascalgeo::testing
