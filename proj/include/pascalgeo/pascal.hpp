#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pascalgeo/error.hpp"
#include "pascalgeo/formula.hpp"
#include "pascalgeo/projgeom.hpp"
#include "pascalgeo/sextuple.hpp"
#include "pascalgeo/symbols.hpp"
#include "pascalgeo/unipoly.hpp"

namespace pascalgeo {

/// Homogeneous coordinates (x0, x1) per letter over a commutative ring.
template <class Ring>
using LetterCoords = std::array<std::pair<Ring, Ring>, 6>;

/// Evaluates <U0, U1, U2> for the arrangement `g`. The formula is written for
/// [ABC/FED], so a..f are bound to the letters at grid positions
/// x1, x2, x3, y3, y2, y1.
template <class Ring>
std::array<Ring, 3> evaluate_pascal_formula(const Grid& g, const LetterCoords<Ring>& coords) {
  static constexpr std::array<int, 6> kSlotOfVariable{0, 1, 2, 5, 4, 3};
  std::array<std::pair<Ring, Ring>, 6> vars;
  for (int v = 0; v < 6; ++v) vars[v] = coords[index(g[kSlotOfVariable[v]])];
  const auto& compiled = pascal_formula().compiled;
  return {compiled[0].evaluate(vars), compiled[1].evaluate(vars), compiled[2].evaluate(vars)};
}

inline LetterCoords<Rational> letter_coords(const Sextuple& h) {
  LetterCoords<Rational> out;
  for (Letter l : kLetters) out[index(l)] = {h[l][0], h[l][1]};
  return out;
}

/// Pascal line of the arrangement `g`, or nothing on the indeterminacy locus.
inline std::optional<ProjLine> eval_pascal_grid(const Sextuple& h, const Grid& g) {
  const auto u = evaluate_pascal_formula(g, letter_coords(h));
  if (u[0] == 0 && u[1] == 0 && u[2] == 0) return std::nullopt;
  return ProjLine({u[0], u[1], u[2]});
}

inline std::optional<ProjLine> eval_pascal(const Sextuple& h, const PascalSymbol& s) {
  return eval_pascal_grid(h, s.grid());
}

/// All 60 Pascals in enumerate_symbols() order.
inline std::vector<std::optional<ProjLine>> all_pascals(const Sextuple& h) {
  std::vector<std::optional<ProjLine>> out;
  for (const auto& s : enumerate_symbols()) out.push_back(eval_pascal(h, s));
  return out;
}

// ---------------------------------------------------------------------------
// Cross-hair construction.

/// Line through two letters' conic points; the tangent when they coincide.
inline ProjLine chord_or_tangent(const Sextuple& h, Letter x, Letter y) {
  if (h[x] == h[y]) return tangent_at(h[x]);
  return join(h.point(x), h.point(y));
}

/// The three cross-hair points x_i y_j ^ x_j y_i, each missing when the two
/// lines coincide.
inline std::array<std::optional<ProjPoint>, 3> crosshair_points(const Sextuple& h, const Grid& g) {
  std::array<std::optional<ProjPoint>, 3> out;
  constexpr std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (int k = 0; k < 3; ++k) {
    const auto [i, j] = kPairs[k];
    const ProjLine l1 = chord_or_tangent(h, g[i], g[3 + j]);
    const ProjLine l2 = chord_or_tangent(h, g[j], g[3 + i]);
    if (l1 != l2) out[k] = meet(l1, l2);
  }
  return out;
}

inline std::optional<ProjLine> crosshair_pascal_grid(const Sextuple& h, const Grid& g) {
  const auto pts = crosshair_points(h, g);
  std::optional<ProjLine> line;
  for (int i = 0; i < 3 && !line; ++i) {
    for (int j = i + 1; j < 3 && !line; ++j) {
      if (pts[i] && pts[j] && *pts[i] != *pts[j]) line = join(*pts[i], *pts[j]);
    }
  }
  if (!line) return std::nullopt;
  for (const auto& p : pts) {
    if (p && !incident(*line, *p)) return std::nullopt;
  }
  return line;
}

inline std::optional<ProjLine> crosshair_pascal(const Sextuple& h, const PascalSymbol& s) {
  return crosshair_pascal_grid(h, s.grid());
}

// ---------------------------------------------------------------------------
// Degenerations: fiber coordinates over the blown-up polydiagonals.
//
// Within each block of theta(base) the alphabetically first letter is the
// anchor. A deviation is (non-anchor value) - (anchor value) in the affine
// coordinate, or in the local coordinate 1/z when the block sits at infinity.
// Codim2: deviations of the non-anchor letters in alphabetical order are
// fiber * t. Interior222: blocks ordered by anchor, deviations q_i * t.
// LLine222: the two marked blocks get r0 t^2 and r1 t^2, the third block t.
// For theta = AF.BE.CD this is (f-a, e-b, d-c) -> (q1, q2, q3), and the
// marked point W_{AF.BE} is [0:0:1], W_{BE.CD} is [1:0:0], W_{AF.CD} is
// [0:1:0].

struct Codim2Fiber {
  P1Point coords;
};
struct Interior222Fiber {
  ProjPoint coords;
};
struct LLine222Fiber {
  std::array<Partition::Block, 2> marked;  // the two blocks that stay merged
  P1Point coords;
};
using FiberPoint = std::variant<Codim2Fiber, Interior222Fiber, LLine222Fiber>;

inline std::string block_to_string(Partition::Block b) {
  std::string out;
  for (Letter l : kLetters) {
    if (b & (1U << index(l))) out += to_char(l);
  }
  return out;
}

/// "AF.BE" for an L-line label.
inline std::string marked_to_string(const std::array<Partition::Block, 2>& m) {
  return block_to_string(m[0]) + "." + block_to_string(m[1]);
}

inline std::array<Partition::Block, 2> parse_marked(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) throw ParseError("marked point must look like 'AF.BE'");
  auto block = [&](std::string_view part) {
    Partition::Block b = 0;
    for (char c : part) b |= static_cast<Partition::Block>(1U << index(letter_from_char(c)));
    if (std::popcount(static_cast<unsigned>(b)) != 2 || part.size() != 2) {
      throw ParseError("marked blocks must be letter pairs: '" + std::string(text) + "'");
    }
    return b;
  };
  std::array<Partition::Block, 2> m{block(text.substr(0, dot)), block(text.substr(dot + 1))};
  if (m[0] & m[1]) throw ParseError("marked blocks overlap: '" + std::string(text) + "'");
  if ((m[0] & -m[0]) > (m[1] & -m[1])) std::swap(m[0], m[1]);
  return m;
}

struct DegenerationSpec {
  Sextuple base;
  PascalSymbol symbol;
  FiberPoint fiber;
};

namespace detail {

inline bool is_type(const Partition& p, std::initializer_list<int> t) { return p.type() == std::vector<int>(t); }

inline Letter anchor_of(Partition::Block b) {
  for (Letter l : kLetters) {
    if (b & (1U << index(l))) return l;
  }
  throw std::logic_error("empty block");
}

inline std::vector<Partition::Block> merged_blocks(const Partition& p) {
  std::vector<Partition::Block> out;
  for (auto b : p.blocks()) {
    if (std::popcount(static_cast<unsigned>(b)) > 1) out.push_back(b);
  }
  return out;  // already ordered by anchor letter
}

}  // namespace detail

/// Checks the base type, the indeterminacy of the symbol at the base, and
/// that the fiber point has the right shape.
inline void validate(const DegenerationSpec& spec) {
  const Partition th = theta(spec.base);
  const bool codim2 = detail::is_type(th, {3, 1, 1, 1}) || detail::is_type(th, {2, 2, 1, 1});
  const bool triple = detail::is_type(th, {2, 2, 2});
  if (!codim2 && !triple) {
    throw DomainError("degeneration base must have coincidence type (3,1,1,1), (2,2,1,1) or (2,2,2), got " +
                      type_string(th.type()));
  }
  if (!is_indeterminate(spec.base, spec.symbol)) {
    throw DomainError("the Pascal " + spec.symbol.to_string() + " is already defined at this base");
  }
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Codim2Fiber>) {
          if (!codim2) throw DomainError("codim2 fiber needs a base of type (3,1,1,1) or (2,2,1,1)");
        } else if constexpr (std::is_same_v<F, Interior222Fiber>) {
          if (!triple) throw DomainError("interior222 fiber needs a base of type (2,2,2)");
          int nonzero = 0;
          for (const auto& c : f.coords.coords()) nonzero += (c != 0);
          if (nonzero == 1) throw DomainError("fiber point is a marked point; use L-line coordinates");
        } else {
          if (!triple) throw DomainError("lline222 fiber needs a base of type (2,2,2)");
          const auto blocks = detail::merged_blocks(th);
          for (auto m : f.marked) {
            if (std::find(blocks.begin(), blocks.end(), m) == blocks.end()) {
              throw DomainError("marked block " + block_to_string(m) + " is not a block of the base");
            }
          }
        }
      },
      spec.fiber);
}

/// Arc deviation per letter (empty for letters that stay at the base point).
using Deviations = std::array<std::optional<UniPoly>, 6>;

inline Deviations fiber_deviations(const DegenerationSpec& spec) {
  const Partition th = theta(spec.base);
  const auto blocks = detail::merged_blocks(th);
  Deviations dev;
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Codim2Fiber>) {
          std::vector<Letter> movers;
          for (Letter l : kLetters) {
            const auto b = th.block_of(l);
            if (std::popcount(static_cast<unsigned>(b)) > 1 && detail::anchor_of(b) != l) movers.push_back(l);
          }
          for (std::size_t i = 0; i < 2; ++i) dev[index(movers[i])] = UniPoly::monomial(f.coords[i], 1);
        } else if constexpr (std::is_same_v<F, Interior222Fiber>) {
          for (std::size_t i = 0; i < 3; ++i) {
            const auto b = blocks[i];
            const Letter mover = detail::anchor_of(static_cast<Partition::Block>(b & ~(b & -b)));
            dev[index(mover)] = UniPoly::monomial(f.coords[i], 1);
          }
        } else {
          std::size_t k = 0;
          for (auto b : blocks) {
            const Letter mover = detail::anchor_of(static_cast<Partition::Block>(b & ~(b & -b)));
            const bool marked = b == f.marked[0] || b == f.marked[1];
            dev[index(mover)] = marked ? UniPoly::monomial(f.coords[k++], 2) : UniPoly::t();
          }
        }
      },
      spec.fiber);
  return dev;
}

/// Homogeneous arc through the base: a finite point [x0:x1] moves to
/// [x0 : x1 + x0 d(t)], the point at infinity to [d(t) : 1].
inline LetterCoords<UniPoly> arc_from_deviations(const Sextuple& base, const Deviations& dev) {
  LetterCoords<UniPoly> arc;
  for (Letter l : kLetters) {
    const P1Point& p = base[l];
    const auto& d = dev[index(l)];
    if (!d) {
      arc[index(l)] = {UniPoly(p[0]), UniPoly(p[1])};
    } else if (p.is_infinite()) {
      arc[index(l)] = {*d, UniPoly(1)};
    } else {
      arc[index(l)] = {UniPoly(p[0]), UniPoly(p[1]) + UniPoly(p[0]) * *d};
    }
  }
  return arc;
}

/// Limit of the Pascal of `g` along an arc: cancel the common power of t
/// and set t = 0.
inline ProjLine limit_along_arc(const Grid& g, const LetterCoords<UniPoly>& arc) {
  const auto u = evaluate_pascal_formula(g, arc);
  const TStrip s = t_strip(u);
  return ProjLine(s.limit);
}

/// Value of the resolved Pascal morphism at the fiber point of `spec`.
inline ProjLine degenerate_pascal(const DegenerationSpec& spec) {
  validate(spec);
  const auto arc = arc_from_deviations(spec.base, fiber_deviations(spec));
  try {
    return limit_along_arc(spec.symbol.grid(), arc);
  } catch (const DomainError&) {
    throw std::logic_error("arc inside indeterminacy for a validated spec: " + spec.symbol.to_string());
  }
}

// ---------------------------------------------------------------------------
// The (2,2,2) classification: A,F -> P, B,E -> Q, C,D -> R.

enum class Behaviour { Constant, Pencil, Surjective };
enum class ConstantKind { Chord, PerspectiveLine, ChLine };

inline std::string to_string(Behaviour b) {
  switch (b) {
    case Behaviour::Constant:
      return "constant";
    case Behaviour::Pencil:
      return "pencil";
    case Behaviour::Surjective:
      return "surjective";
  }
  return "?";
}

inline std::string to_string(ConstantKind k) {
  switch (k) {
    case ConstantKind::Chord:
      return "chord";
    case ConstantKind::PerspectiveLine:
      return "perspective-line";
    case ConstantKind::ChLine:
      return "ch-line";
  }
  return "?";
}

struct Classification222Entry {
  PascalSymbol symbol;
  Behaviour behaviour = Behaviour::Constant;
  std::optional<ConstantKind> kind;  // set for constant maps
  std::string label;                 // "PQ", "PP'", "ch", "P" (pencil centre), "all"
  std::optional<ProjLine> line;      // the constant image
  std::optional<ProjPoint> center;   // pencil centre
  bool defined_at_base = false;
};

struct Classification222Counts {
  int constant = 0, non_constant = 0;
  std::map<std::string, int> by_label;  // "PQ" -> 8, ..., "P" -> 4, "all" -> 4
};

struct Classification222 {
  PolarTriangle geometry;
  std::vector<Classification222Entry> entries;  // enumerate_symbols() order

  Classification222Counts counts() const {
    Classification222Counts c;
    for (const auto& e : entries) {
      (e.behaviour == Behaviour::Constant ? c.constant : c.non_constant)++;
      c.by_label[e.label]++;
    }
    return c;
  }
};

/// What the block pattern of a symbol predicts at a (2,2,2) base, as
/// (behaviour, label). Blocks are P = {A,F}, Q = {B,E}, R = {C,D}.
struct PatternPrediction {
  Behaviour behaviour;
  std::optional<ConstantKind> kind;
  std::string label;
};

inline PatternPrediction classify_222_pattern(const PascalSymbol& s) {
  static constexpr std::array<int, 6> kBlockOfLetter{0, 1, 2, 2, 1, 0};  // A..F
  static constexpr std::array<char, 3> kName{'P', 'Q', 'R'};
  const Grid& g = s.grid();
  std::array<int, 3> top{}, bottom{};
  for (int c = 0; c < 3; ++c) {
    top[c] = kBlockOfLetter[index(g[c])];
    bottom[c] = kBlockOfLetter[index(g[3 + c])];
  }
  std::vector<int> pure, mixed;
  for (int c = 0; c < 3; ++c) (top[c] == bottom[c] ? pure : mixed).push_back(c);
  if (pure.size() == 3) return {Behaviour::Surjective, std::nullopt, "all"};
  if (pure.size() == 1) {
    const char x = kName[top[pure[0]]];
    if (top[mixed[0]] == top[mixed[1]]) return {Behaviour::Pencil, std::nullopt, std::string(1, x)};
    return {Behaviour::Constant, ConstantKind::PerspectiveLine, std::string(1, x) + x + "'"};
  }
  if (pure.empty()) {
    if (top[0] != top[1] && top[1] != top[2] && top[0] != top[2]) {
      return {Behaviour::Constant, ConstantKind::ChLine, "ch"};
    }
    auto repeated = [](const std::array<int, 3>& row) { return row[0] == row[1] || row[0] == row[2] ? row[0] : row[1]; };
    int x = repeated(top), z = repeated(bottom);
    if (x > z) std::swap(x, z);
    return {Behaviour::Constant, ConstantKind::Chord, std::string{kName[x], kName[z]}};
  }
  throw std::logic_error("two pure columns force the third: " + s.to_string());
}

/// Interior sample points for the classification sweep: generic, no zero
/// coordinates, pairwise distinct ratios.
inline const std::vector<ProjPoint>& classification_samples() {
  static const std::vector<ProjPoint> samples{
      make_point(1, 1, 2), make_point(2, -1, 3), make_point(3, 4, -1), make_point(-1, 2, 5),
      make_point(5, 3, 7), make_point(1, -3, -2), make_point(4, 7, 2)};
  return samples;
}

namespace detail {

/// Rank of a list of 3-vectors over Q.
inline int rank3(std::vector<Vec3> rows) {
  int rank = 0;
  for (int col = 0; col < 3 && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (int k = 0; k < 3; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Behaviour of all 60 resolved Pascal maps on the (2,2,2) fiber over
/// A=F=P, B=E=Q, C=D=R. Throws std::logic_error when the sampled behaviour
/// disagrees with the block pattern of a symbol.
inline Classification222 classify_222(const P1Point& p, const P1Point& q, const P1Point& r) {
  const PolarTriangle tri = polar_triangle(p, q, r);
  const Sextuple h({p, q, r, r, q, p});

  const std::map<std::string, std::pair<ConstantKind, ProjLine>> catalog{
      {"PQ", {ConstantKind::Chord, join(tri.p, tri.q)}},
      {"PR", {ConstantKind::Chord, join(tri.p, tri.r)}},
      {"QR", {ConstantKind::Chord, join(tri.q, tri.r)}},
      {"PP'", {ConstantKind::PerspectiveLine, join(tri.p, tri.p_pole)}},
      {"QQ'", {ConstantKind::PerspectiveLine, join(tri.q, tri.q_pole)}},
      {"RR'", {ConstantKind::PerspectiveLine, join(tri.r, tri.r_pole)}},
      {"ch", {ConstantKind::ChLine, tri.axis}},
  };
  const std::map<std::string, ProjPoint> centers{{"P", tri.p}, {"Q", tri.q}, {"R", tri.r}};

  auto tag_constant = [&](Classification222Entry& e, const ProjLine& line) {
    e.behaviour = Behaviour::Constant;
    e.line = line;
    for (const auto& [label, kl] : catalog) {
      if (kl.second == line) {
        e.kind = kl.first;
        e.label = label;
        return;
      }
    }
    throw std::logic_error("constant image of " + e.symbol.to_string() + " is not a catalogued line: " +
                           line.to_string());
  };

  Classification222 out{tri, {}};
  for (const auto& s : enumerate_symbols()) {
    Classification222Entry e;
    e.symbol = s;
    if (auto line = eval_pascal(h, s)) {
      e.defined_at_base = true;
      tag_constant(e, *line);
    } else {
      std::vector<ProjLine> lines;
      for (const auto& sample : classification_samples()) {
        lines.push_back(degenerate_pascal({h, s, Interior222Fiber{sample}}));
      }
      std::vector<Vec3> rows;
      for (const auto& l : lines) rows.push_back(l.coords());
      const int rank = detail::rank3(rows);
      if (rank == 1) {
        tag_constant(e, lines.front());
      } else if (rank == 2) {
        const auto other = std::find_if(lines.begin(), lines.end(), [&](const ProjLine& l) { return l != lines[0]; });
        const ProjPoint c = meet(lines[0], *other);
        e.behaviour = Behaviour::Pencil;
        e.center = c;
        for (const auto& [label, pt] : centers) {
          if (pt == c) e.label = label;
        }
        if (e.label.empty()) throw std::logic_error("pencil centre of " + s.to_string() + " is not P, Q or R");
      } else {
        e.behaviour = Behaviour::Surjective;
        e.label = "all";
      }
    }
    const PatternPrediction predicted = classify_222_pattern(s);
    if (predicted.behaviour != e.behaviour || predicted.label != e.label) {
      throw std::logic_error("sampler and block pattern disagree on " + s.to_string() + ": " + e.label + " vs " +
                             predicted.label);
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace pascalgeo
