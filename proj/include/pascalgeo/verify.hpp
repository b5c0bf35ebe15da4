#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pascalgeo/error.hpp"
#include "pascalgeo/hexagram.hpp"
#include "pascalgeo/pascal.hpp"
#include "pascalgeo/identities.hpp"
#include "pascalgeo/random.hpp"

namespace pascalgeo::verify {

struct PropertyResult {
  PropertyResult(std::string n)  // NOLINT(google-explicit-constructor)
      : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::string counterexample;  // first failure, empty on success
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool pass() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass; });
  }
};

struct Options {
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;  // overrides each suite's default count
};

namespace detail {

inline std::string describe(const Sextuple& h) {
  std::string out = "{";
  for (Letter l : kLetters) {
    if (l != Letter::A) out += ", ";
    out += std::string(1, to_char(l)) + "=" + h[l].to_value_string();
  }
  return out + "}";
}

/// Counts one check; `failure` is empty on success. Keeps the first failure.
inline void record(PropertyResult& r, const std::string& failure) {
  ++r.checked;
  if (!failure.empty() && r.pass) {
    r.pass = false;
    r.counterexample = failure;
  }
}

}  // namespace detail

inline SuiteReport pedoe(const Options& o) {
  Sampler rng(o.seed);
  SuiteReport rep{"pedoe", o.seed, {{"sixty pairwise distinct Pascals"}}};
  for (std::size_t i = 0; i < o.samples.value_or(20); ++i) {
    const Sextuple h = rng.injective_sextuple();
    std::set<ProjLine> seen;
    std::string failure;
    for (const auto& l : all_pascals(h)) {
      if (!l) failure = "undefined Pascal at " + detail::describe(h);
      else seen.insert(*l);
    }
    if (failure.empty() && seen.size() != 60) {
      failure = std::to_string(seen.size()) + " distinct lines at " + detail::describe(h);
    }
    detail::record(rep.properties[0], failure);
  }
  return rep;
}

inline SuiteReport pascal(const Options& o) {
  Sampler rng(o.seed);
  SuiteReport rep{"pascal", o.seed, {{"formula agrees with cross-hair construction"}, {"representative independence"}}};
  for (std::size_t i = 0; i < o.samples.value_or(100); ++i) {
    const Sextuple h = rng.injective_sextuple();
    for (const auto& s : enumerate_symbols()) {
      const auto f = eval_pascal(h, s);
      const auto c = crosshair_pascal(h, s);
      detail::record(rep.properties[0],
                     f && f == c ? "" : s.to_string() + " at " + detail::describe(h));
      std::string rep_failure;
      for (const auto& g : s.representatives()) {
        if (eval_pascal_grid(h, g) != f) rep_failure = PascalSymbol::grid_to_string(g) + " at " + detail::describe(h);
      }
      detail::record(rep.properties[1], rep_failure);
    }
  }
  return rep;
}

inline SuiteReport kirkman(const Options& o) {
  Sampler rng(o.seed);
  SuiteReport rep{"kirkman",
                  o.seed,
                  {{"concurrency of the 60 Kirkman triples"},
                   {"undefined on the 20 listed components"},
                   {"defined at injective sextuples"},
                   {"defined with a single double point"}}};
  const std::size_t n = o.samples.value_or(200);
  for (std::size_t i = 0; i < n; ++i) {
    const Sextuple h = rng.injective_sextuple();
    for (const auto& kt : kirkman_triples()) {
      std::string failure;
      try {
        if (!kirkman_point(h, kt)) failure = kt.to_string() + " undefined at " + detail::describe(h);
      } catch (const std::logic_error& e) {
        failure = std::string(e.what()) + " at " + detail::describe(h);
      }
      detail::record(rep.properties[0], failure);
    }
  }
  const KTriple base = base_kirkman_triple();
  for (const auto& c : kirkman_indeterminacy_components()) {
    for (int k = 0; k < 5; ++k) {
      const Sextuple h = rng.on_polydiagonal(c);
      detail::record(rep.properties[1],
                     kirkman_point(h, base) ? "defined on " + c.to_string() + " at " + detail::describe(h) : "");
    }
  }
  for (std::size_t i = 0; i < std::min<std::size_t>(n, 100); ++i) {
    const Sextuple h = rng.injective_sextuple();
    detail::record(rep.properties[2], kirkman_point(h, base) ? "" : "undefined at " + detail::describe(h));
  }
  for (const auto& pi : all_partitions()) {
    if (pi.type() != std::vector<int>{2, 1, 1, 1, 1}) continue;
    const Sextuple h = rng.on_polydiagonal(pi);
    for (const auto& kt : kirkman_triples()) {
      detail::record(rep.properties[3], kirkman_point(h, kt) ? "" : kt.to_string() + " at " + detail::describe(h));
    }
  }
  return rep;
}

inline SuiteReport steiner(const Options& o) {
  Sampler rng(o.seed);
  SuiteReport rep{"steiner",
                  o.seed,
                  {{"concurrency of the 20 Steiner triples"},
                   {"tri-symmetric sextuple loses a Steiner point"},
                   {"all defined off the tri-symmetric locus"}}};
  for (std::size_t i = 0; i < o.samples.value_or(200); ++i) {
    const Sextuple h = rng.injective_sextuple();
    const bool special = tri_symmetric(h).has_value();
    for (const auto& st : steiner_triples()) {
      std::string failure;
      std::optional<ProjPoint> pt;
      try {
        pt = steiner_point(h, st);
      } catch (const std::logic_error& e) {
        failure = std::string(e.what()) + " at " + detail::describe(h);
      }
      detail::record(rep.properties[0], failure);
      if (!special) {
        detail::record(rep.properties[2], pt || !failure.empty() ? "" : st.to_string() + " at " + detail::describe(h));
      }
    }
  }
  const Sextuple t({P1Point::affine(0), P1Point::affine(1), P1Point::infinity(), P1Point::affine(2),
                    P1Point::affine(Rational(1, 2)), P1Point::affine(-1)});
  std::string failure;
  if (!tri_symmetric(t)) failure = "no tri-symmetry witness for " + detail::describe(t);
  bool lost = false;
  for (const auto& st : steiner_triples()) lost = lost || !steiner_point(t, st);
  if (!lost) failure = "all 20 Steiner points defined at " + detail::describe(t);
  detail::record(rep.properties[1], failure);
  return rep;
}

inline SuiteReport chasles(const Options& o) {
  Sampler rng(o.seed);
  SuiteReport rep{"chasles", o.seed, {{"PP', QQ', RR' concurrent"}, {"cross points collinear"}}};
  for (std::size_t i = 0; i < o.samples.value_or(20); ++i) {
    const auto v = rng.distinct_rationals(3);
    const ProjPoint p = tau(v[0]), q = tau(v[1]), r = tau(v[2]);
    const ProjPoint pp = pole(join(q, r)), qq = pole(join(p, r)), rr = pole(join(p, q));
    const std::string where = "P=" + to_string(v[0]) + ", Q=" + to_string(v[1]) + ", R=" + to_string(v[2]);
    detail::record(rep.properties[0], concurrent(join(p, pp), join(q, qq), join(r, rr)) ? "" : where);
    const ProjPoint x = meet(join(p, q), join(pp, qq)), y = meet(join(p, r), join(pp, rr)),
                    z = meet(join(q, r), join(qq, rr));
    detail::record(rep.properties[1], collinear(x, y, z) ? "" : where);
  }
  return rep;
}

/// Expected breakdown of the (2,2,2) classification.
inline const std::map<std::string, int>& classification_222_breakdown() {
  static const std::map<std::string, int> expected{{"PQ", 8},  {"PR", 8},  {"QR", 8}, {"PP'", 4},
                                                   {"QQ'", 4}, {"RR'", 4}, {"ch", 8}, {"P", 4},
                                                   {"Q", 4},   {"R", 4},   {"all", 4}};
  return expected;
}

inline SuiteReport classification_222(const Options& o) {
  Sampler rng(o.seed);
  SuiteReport rep{"classify-222", o.seed, {{"44 constant and 16 non-constant with the full breakdown"}}};
  std::vector<std::array<Rational, 3>> triples{{1, 0, -1}};
  for (std::size_t i = 0; i < o.samples.value_or(10); ++i) {
    const auto v = rng.distinct_rationals(3);
    triples.push_back({v[0], v[1], v[2]});
  }
  for (const auto& t : triples) {
    const std::string where = "P=" + to_string(t[0]) + ", Q=" + to_string(t[1]) + ", R=" + to_string(t[2]);
    std::string failure;
    try {
      const auto counts =
          classify_222(P1Point::affine(t[0]), P1Point::affine(t[1]), P1Point::affine(t[2])).counts();
      if (counts.constant != 44 || counts.non_constant != 16 || counts.by_label != classification_222_breakdown()) {
        failure = "wrong counts at " + where;
      }
    } catch (const std::logic_error& e) {
      failure = std::string(e.what()) + " at " + where;
    }
    detail::record(rep.properties[0], failure);
  }
  return rep;
}

inline SuiteReport formula_identities(const Options& o) {
  SuiteReport rep{"identities", o.seed, {}};
  for (const auto& c : verify_formula_identities()) {
    PropertyResult r{c.name};
    detail::record(r, c.pass ? "" : c.detail);
    rep.properties.push_back(std::move(r));
  }
  return rep;
}

inline const std::vector<std::pair<std::string, std::function<SuiteReport(const Options&)>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<SuiteReport(const Options&)>>> all{
      {"pedoe", pedoe},     {"kirkman", kirkman},     {"steiner", steiner}, {"chasles", chasles},
      {"classify-222", classification_222}, {"identities", formula_identities}, {"pascal", pascal}};
  return all;
}

inline const std::map<std::string, std::string>& suite_aliases() {
  static const std::map<std::string, std::string> aliases{{"thm-4-2", "classify-222"}, {"prop-2-2", "identities"}};
  return aliases;
}

/// Runs one named suite, or every suite for "all".
inline std::vector<SuiteReport> run(std::string name, const Options& o) {
  if (auto it = suite_aliases().find(name); it != suite_aliases().end()) name = it->second;
  std::vector<SuiteReport> out;
  for (const auto& [n, fn] : suites()) {
    if (name == "all" || name == n) out.push_back(fn(o));
  }
  if (out.empty()) throw ParseError("unknown suite '" + name + "'");
  return out;
}

}  // namespace pascalgeo::verify
