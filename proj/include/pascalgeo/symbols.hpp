#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pascalgeo/error.hpp"

namespace pascalgeo {

enum class Letter : std::uint8_t { A, B, C, D, E, F };

inline constexpr std::array<Letter, 6> kLetters{Letter::A, Letter::B, Letter::C,
                                                Letter::D, Letter::E, Letter::F};

inline constexpr int index(Letter l) { return static_cast<int>(l); }
inline constexpr char to_char(Letter l) { return static_cast<char>('A' + index(l)); }

inline Letter letter_from_char(char c) {
  if (c >= 'a' && c <= 'f') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'F') throw ParseError(std::string("not a letter A..F: '") + c + "'");
  return static_cast<Letter>(c - 'A');
}

// ---------------------------------------------------------------------------
// Partitions of the six letters.

/// Set partition of {A..F}; blocks are bitmasks sorted by their lowest letter.
class Partition {
 public:
  using Block = std::uint8_t;

  static Partition from_blocks(std::vector<Block> blocks) {
    Block seen = 0;
    for (Block b : blocks) {
      if (b == 0) throw ParseError("empty block in partition");
      if (seen & b) throw ParseError("overlapping blocks in partition");
      seen |= b;
    }
    if (seen != 0x3F) throw ParseError("partition does not cover all six letters");
    Partition p;
    p.blocks_ = std::move(blocks);
    std::sort(p.blocks_.begin(), p.blocks_.end(),
              [](Block x, Block y) { return (x & -x) < (y & -y); });
    return p;
  }

  /// Strict text form such as "ACD.B.EF" covering every letter once.
  static Partition parse(std::string_view text) {
    std::vector<Block> blocks;
    Block current = 0;
    for (char c : text) {
      if (c == '.') {
        blocks.push_back(current);
        current = 0;
        continue;
      }
      const Block bit = static_cast<Block>(1U << index(letter_from_char(c)));
      if (current & bit) throw ParseError("repeated letter in partition '" + std::string(text) + "'");
      current |= bit;
    }
    blocks.push_back(current);
    return from_blocks(std::move(blocks));
  }

  /// Only the listed groups are merged, e.g. "ab.ef" -> AB.C.D.EF and
  /// "def" -> A.B.C.DEF.
  static Partition from_merged_groups(std::string_view text) {
    std::vector<Block> blocks;
    Block used = 0, current = 0;
    auto flush = [&] {
      if (current == 0) throw ParseError("empty group in '" + std::string(text) + "'");
      blocks.push_back(current);
      used |= current;
      current = 0;
    };
    for (char c : text) {
      if (c == '.') {
        flush();
        continue;
      }
      const Block bit = static_cast<Block>(1U << index(letter_from_char(c)));
      if ((current | used) & bit) throw ParseError("repeated letter in '" + std::string(text) + "'");
      current |= bit;
    }
    flush();
    for (int i = 0; i < 6; ++i) {
      if (!(used & (1U << i))) blocks.push_back(static_cast<Block>(1U << i));
    }
    return from_blocks(std::move(blocks));
  }

  static Partition trivial() { return from_merged_groups("a"); }

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  Block block_of(Letter l) const {
    for (Block b : blocks_) {
      if (b & (1U << index(l))) return b;
    }
    return 0;  // unreachable for a valid partition
  }

  bool same_block(Letter x, Letter y) const { return block_of(x) & (1U << index(y)); }

  /// Multiset of block sizes, descending, e.g. {3,2,1}.
  std::vector<int> type() const {
    std::vector<int> t;
    for (Block b : blocks_) t.push_back(std::popcount(static_cast<unsigned>(b)));
    std::sort(t.rbegin(), t.rend());
    return t;
  }

  std::string to_string() const {
    std::string out;
    for (Block b : blocks_) {
      if (!out.empty()) out += '.';
      for (Letter l : kLetters) {
        if (b & (1U << index(l))) out += to_char(l);
      }
    }
    return out;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Block> blocks_;
};

/// True when every block of `fine` lies inside a block of `coarse`.
inline bool refines(const Partition& fine, const Partition& coarse) {
  return std::all_of(fine.blocks().begin(), fine.blocks().end(), [&](Partition::Block b) {
    return std::any_of(coarse.blocks().begin(), coarse.blocks().end(),
                       [b](Partition::Block c) { return (b & c) == b; });
  });
}

inline std::string type_string(const std::vector<int>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

/// All 203 set partitions of the six letters (restricted growth strings).
inline std::vector<Partition> all_partitions() {
  std::vector<Partition> out;
  std::array<int, 6> rgs{};
  auto emit = [&] {
    std::vector<Partition::Block> blocks(7, 0);
    int used = 0;
    for (int i = 0; i < 6; ++i) {
      blocks[rgs[i]] |= static_cast<Partition::Block>(1U << i);
      used = std::max(used, rgs[i] + 1);
    }
    blocks.resize(used);
    out.push_back(Partition::from_blocks(blocks));
  };
  auto rec = [&](auto&& self, int pos, int max_so_far) -> void {
    if (pos == 6) {
      emit();
      return;
    }
    for (int v = 0; v <= max_so_far + 1; ++v) {
      rgs[pos] = v;
      self(self, pos + 1, std::max(max_so_far, v));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Pascal symbols.

/// 2x3 arrangement, row-major: top x1 x2 x3, bottom y1 y2 y3.
using Grid = std::array<Letter, 6>;

/// Permutation of the six letters, image[i] = sigma(letter i).
class LetterPermutation {
 public:
  LetterPermutation() : image_(kLetters) {}
  explicit LetterPermutation(std::array<Letter, 6> image) : image_(image) {
    int seen = 0;
    for (Letter l : image_) seen |= 1 << index(l);
    if (seen != 0x3F) throw ParseError("not a permutation of A..F");
  }

  Letter operator()(Letter l) const { return image_[index(l)]; }
  Grid operator()(const Grid& g) const {
    Grid out;
    for (int i = 0; i < 6; ++i) out[i] = (*this)(g[i]);
    return out;
  }
  Partition operator()(const Partition& p) const {
    std::vector<Partition::Block> blocks;
    for (auto b : p.blocks()) {
      Partition::Block nb = 0;
      for (Letter l : kLetters) {
        if (b & (1U << index(l))) nb |= static_cast<Partition::Block>(1U << index((*this)(l)));
      }
      blocks.push_back(nb);
    }
    return Partition::from_blocks(std::move(blocks));
  }

  LetterPermutation inverse() const {
    std::array<Letter, 6> inv{};
    for (Letter l : kLetters) inv[index(image_[index(l)])] = l;
    return LetterPermutation(inv);
  }

  const std::array<Letter, 6>& image() const { return image_; }

  /// All 720 permutations in lexicographic order of their image arrays.
  static std::vector<LetterPermutation> all() {
    std::vector<LetterPermutation> out;
    std::array<Letter, 6> img = kLetters;
    do {
      out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }

 private:
  std::array<Letter, 6> image_;
};

inline void validate_grid(const Grid& g) {
  int seen = 0;
  for (Letter l : g) {
    if (seen & (1 << index(l))) throw ParseError(std::string("letter repeated in grid: ") + to_char(l));
    seen |= 1 << index(l);
  }
}

/// The 12 images of a grid under row swap and column permutations.
inline std::array<Grid, 12> shuffles(const Grid& g) {
  std::array<Grid, 12> out{};
  std::array<int, 3> cols{0, 1, 2};
  std::size_t k = 0;
  do {
    for (int swap = 0; swap < 2; ++swap) {
      Grid h;
      for (int c = 0; c < 3; ++c) {
        h[c] = g[(swap ? 3 : 0) + cols[c]];
        h[3 + c] = g[(swap ? 0 : 3) + cols[c]];
      }
      out[k++] = h;
    }
  } while (std::next_permutation(cols.begin(), cols.end()));
  return out;
}

/// A 2x3 array of the six letters modulo row swaps and column permutations,
/// stored as its lexicographically minimal representative.
class PascalSymbol {
 public:
  static PascalSymbol canonicalize(const Grid& g) {
    validate_grid(g);
    const auto images = shuffles(g);
    PascalSymbol s;
    s.grid_ = *std::min_element(images.begin(), images.end());
    return s;
  }

  /// "ABC/FED"
  static PascalSymbol parse(std::string_view text) { return canonicalize(parse_grid(text)); }

  static Grid parse_grid(std::string_view text) {
    if (text.size() != 7 || text[3] != '/') {
      throw ParseError("symbol must look like 'ABC/FED', got '" + std::string(text) + "'");
    }
    Grid g;
    for (int i = 0; i < 3; ++i) {
      g[i] = letter_from_char(text[i]);
      g[3 + i] = letter_from_char(text[4 + i]);
    }
    validate_grid(g);
    return g;
  }

  const Grid& grid() const { return grid_; }
  std::array<Grid, 12> representatives() const { return shuffles(grid_); }

  std::string to_string() const { return grid_to_string(grid_); }

  static std::string grid_to_string(const Grid& g) {
    std::string out;
    for (int i = 0; i < 6; ++i) {
      if (i == 3) out += '/';
      out += to_char(g[i]);
    }
    return out;
  }

  friend auto operator<=>(const PascalSymbol&, const PascalSymbol&) = default;

 private:
  Grid grid_{};
};

/// The 60 symbols, sorted by canonical grid.
inline const std::vector<PascalSymbol>& enumerate_symbols() {
  static const std::vector<PascalSymbol> symbols = [] {
    std::set<PascalSymbol> seen;
    for (const auto& sigma : LetterPermutation::all()) seen.insert(PascalSymbol::canonicalize(sigma.image()));
    return std::vector<PascalSymbol>(seen.begin(), seen.end());
  }();
  return symbols;
}

/// For [x1 x2 x3 / y1 y2 y3]: the two rows, the three column pairs, and the
/// row matching {x1y1, x2y2, x3y3}.
inline std::vector<Partition> indeterminacy_partitions(const PascalSymbol& s) {
  const Grid& g = s.grid();
  auto bit = [&g](int i) { return static_cast<Partition::Block>(1U << index(g[i])); };
  auto singletons_except = [](Partition::Block used, std::vector<Partition::Block> blocks) {
    for (int i = 0; i < 6; ++i) {
      if (!(used & (1U << i))) blocks.push_back(static_cast<Partition::Block>(1U << i));
    }
    return Partition::from_blocks(std::move(blocks));
  };
  std::vector<Partition> out;
  for (int row = 0; row < 2; ++row) {
    const auto b = static_cast<Partition::Block>(bit(3 * row) | bit(3 * row + 1) | bit(3 * row + 2));
    out.push_back(singletons_except(b, {b}));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const auto top = static_cast<Partition::Block>(bit(i) | bit(j));
      const auto bottom = static_cast<Partition::Block>(bit(3 + i) | bit(3 + j));
      out.push_back(singletons_except(top | bottom, {top, bottom}));
    }
  }
  std::vector<Partition::Block> matched;
  for (int i = 0; i < 3; ++i) matched.push_back(static_cast<Partition::Block>(bit(i) | bit(3 + i)));
  out.push_back(Partition::from_blocks(std::move(matched)));
  return out;
}

// ---------------------------------------------------------------------------
// Kirkman and Steiner triples.

/// Three pairwise distinct symbols, kept sorted.
class SymbolTriple {
 public:
  SymbolTriple(PascalSymbol a, PascalSymbol b, PascalSymbol c) : members_{a, b, c} {
    std::sort(members_.begin(), members_.end());
    if (members_[0] == members_[1] || members_[1] == members_[2]) {
      throw DomainError("symbol triple members must be distinct");
    }
  }
  const std::array<PascalSymbol, 3>& members() const { return members_; }
  std::string to_string() const {
    return members_[0].to_string() + " " + members_[1].to_string() + " " + members_[2].to_string();
  }
  friend auto operator<=>(const SymbolTriple&, const SymbolTriple&) = default;

 private:
  std::array<PascalSymbol, 3> members_;
};

using KTriple = SymbolTriple;
using STriple = SymbolTriple;

/// [x1 x2 x3 / y1 y2 y3] -> [x1 y2 x3 / y3 x2 y1], [x2 y3 x1 / y1 x3 y2],
/// [x3 y1 x2 / y2 x1 y3]: the top-row letters shift cyclically and the
/// bottom-row letters anti-cyclically.
inline KTriple kirkman_triple_of(const Grid& g) {
  validate_grid(g);
  const Letter x1 = g[0], x2 = g[1], x3 = g[2], y1 = g[3], y2 = g[4], y3 = g[5];
  return KTriple(PascalSymbol::canonicalize({x1, y2, x3, y3, x2, y1}),
                 PascalSymbol::canonicalize({x2, y3, x1, y1, x3, y2}),
                 PascalSymbol::canonicalize({x3, y1, x2, y2, x1, y3}));
}

/// Top row fixed, bottom row through its cyclic shifts.
inline STriple steiner_triple_of(const Grid& g) {
  validate_grid(g);
  const Letter x1 = g[0], x2 = g[1], x3 = g[2], y1 = g[3], y2 = g[4], y3 = g[5];
  return STriple(PascalSymbol::canonicalize({x1, x2, x3, y1, y2, y3}),
                 PascalSymbol::canonicalize({x1, x2, x3, y3, y1, y2}),
                 PascalSymbol::canonicalize({x1, x2, x3, y2, y3, y1}));
}

namespace detail {

template <class Build>
std::vector<SymbolTriple> orbit_of_base(Build build) {
  const Grid base = PascalSymbol::parse_grid("ABC/FED");
  std::set<SymbolTriple> seen;
  for (const auto& sigma : LetterPermutation::all()) seen.insert(build(sigma(base)));
  return {seen.begin(), seen.end()};
}

}  // namespace detail

inline const std::vector<KTriple>& kirkman_triples() {
  static const std::vector<KTriple> triples = detail::orbit_of_base(kirkman_triple_of);
  return triples;
}

inline const std::vector<STriple>& steiner_triples() {
  static const std::vector<STriple> triples = detail::orbit_of_base(steiner_triple_of);
  return triples;
}

}  // namespace pascalgeo
