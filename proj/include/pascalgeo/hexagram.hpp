#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pascalgeo/pascal.hpp"
#include "pascalgeo/projgeom.hpp"
#include "pascalgeo/sextuple.hpp"
#include "pascalgeo/symbols.hpp"

namespace pascalgeo {

/// Common point of three Pascals: defined iff two of them are defined and
/// distinct. A defined third Pascal must pass through the meet.
inline std::optional<ProjPoint> triple_point(const Sextuple& h, const SymbolTriple& triple) {
  std::vector<ProjLine> lines;
  for (const auto& s : triple.members()) {
    if (auto l = eval_pascal(h, s)) lines.push_back(*l);
  }
  std::optional<ProjPoint> point;
  for (std::size_t i = 0; i < lines.size() && !point; ++i) {
    for (std::size_t j = i + 1; j < lines.size() && !point; ++j) {
      if (lines[i] != lines[j]) point = meet(lines[i], lines[j]);
    }
  }
  if (!point) return std::nullopt;
  for (const auto& l : lines) {
    if (!incident(l, *point)) {
      throw std::logic_error("Pascals of " + triple.to_string() + " are not concurrent");
    }
  }
  return point;
}

inline std::optional<ProjPoint> kirkman_point(const Sextuple& h, const KTriple& kt) { return triple_point(h, kt); }

inline std::optional<ProjPoint> steiner_point(const Sextuple& h, const STriple& st) { return triple_point(h, st); }

/// Polydiagonals on which the base Kirkman point [AEC/DBF], [BDA/FCE],
/// [CFB/EAD] is undefined.
inline const std::vector<Partition>& kirkman_indeterminacy_components() {
  static const std::vector<Partition> components = [] {
    std::vector<Partition> out;
    for (const char* w : {"def", "cef", "ab.ef", "bdf", "ac.df", "bc.de", "ade", "bcf", "bd.cf", "ae.cf",
                          "ad.cf", "ce.bf", "ce.bd", "ace", "ad.ce", "ae.bf", "ad.bf", "ae.bd", "abd", "abc"}) {
      out.push_back(Partition::from_merged_groups(w));
    }
    return out;
  }();
  return components;
}

inline KTriple base_kirkman_triple() {
  return kirkman_triple_of(PascalSymbol::parse_grid("ABC/FED"));
}

inline STriple base_steiner_triple() {
  return steiner_triple_of(PascalSymbol::parse_grid("ABC/FED"));
}

// ---------------------------------------------------------------------------
// Incidence discovery.

template <class Element>
struct Labeled {
  std::string label;
  Element element;
};

template <class Carrier>
struct IncidenceFamily {
  Carrier carrier;
  std::vector<std::string> members;  // sorted
};

template <class Carrier>
struct IncidenceReport {
  std::vector<IncidenceFamily<Carrier>> families;  // sorted by carrier
};

namespace detail {

/// Maximal families of pairwise-joinable elements sharing a dual carrier.
/// Duplicated elements (same canonical coordinates) all join every family
/// through them.
template <class Carrier, class Element, class Join>
IncidenceReport<Carrier> find_families(const std::vector<Labeled<Element>>& items, std::size_t min_size,
                                       Join join_fn) {
  if (min_size < 3) throw DomainError("min_size must be at least 3");
  std::set<Carrier> carriers;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (items[i].element != items[j].element) carriers.insert(join_fn(items[i].element, items[j].element));
    }
  }
  IncidenceReport<Carrier> report;
  for (const auto& c : carriers) {
    IncidenceFamily<Carrier> family{c, {}};
    for (const auto& it : items) {
      if (dot(c.coords(), it.element.coords()) == 0) family.members.push_back(it.label);
    }
    if (family.members.size() >= min_size) {
      std::sort(family.members.begin(), family.members.end());
      report.families.push_back(std::move(family));
    }
  }
  return report;
}

}  // namespace detail

inline IncidenceReport<ProjLine> find_collinear_families(const std::vector<Labeled<ProjPoint>>& points,
                                                         std::size_t min_size) {
  return detail::find_families<ProjLine>(points, min_size, [](const ProjPoint& p, const ProjPoint& q) {
    return join(p, q);
  });
}

inline IncidenceReport<ProjPoint> find_concurrent_families(const std::vector<Labeled<ProjLine>>& lines,
                                                           std::size_t min_size) {
  return detail::find_families<ProjPoint>(lines, min_size, [](const ProjLine& l, const ProjLine& m) {
    return meet(l, m);
  });
}

}  // namespace pascalgeo
