// pascalgeo: command-line front end for the pascalgeo library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 domain error.

#include <CLI11.hpp>

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "pascalgeo/json_io.hpp"
#include "pascalgeo/pascalgeo.hpp"
#include "pascalgeo/svg.hpp"
#include "pascalgeo/verify.hpp"

namespace {

using namespace pascalgeo;
using json_io::Json;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct Config {
  std::string input;
  std::string symbol;
  std::uint64_t seed = 1;
  std::string suite = "all";
  std::optional<std::size_t> samples;
  std::string format;
  std::string out;
  std::string markers = "none";
};

std::string read_input(const std::string& arg) {
  if (arg.empty()) throw ParseError("--input is required");
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::istream* in = &std::cin;
  std::ifstream file;
  if (arg != "-") {
    file.open(arg);
    if (!file) throw ParseError("cannot read input file '" + arg + "'");
    in = &file;
  }
  return {std::istreambuf_iterator<char>(*in), std::istreambuf_iterator<char>()};
}

Json input_json(const Config& c) { return json_io::parse_document(read_input(c.input)); }

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + c.out + "'");
  f << text;
}

void emit_json(const Config& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

std::string format_or(const Config& c, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string f = c.format.empty() ? fallback : c.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw ParseError("format '" + f + "' is not available for this command");
}

std::string line_text(const std::optional<ProjLine>& l) { return l ? l->to_string() : "undefined"; }

// ---------------------------------------------------------------------------

int cmd_pascal(const Config& c) {
  const Sextuple h = json_io::sextuple_from(input_json(c));
  if (c.symbol.empty()) throw ParseError("--symbol is required");
  const PascalSymbol s = PascalSymbol::parse(c.symbol);
  const auto line = eval_pascal(h, s);
  if (format_or(c, "json", {"json", "text"}) == "text") {
    emit(c, s.to_string() + " " + line_text(line) + "\n");
    return 0;
  }
  Json out{{"symbol", s.to_string()}, {"defined", line.has_value()}};
  if (line) out["line"] = json_io::to_json(*line);
  emit_json(c, out);
  return 0;
}

int cmd_all_pascals(const Config& c) {
  const Sextuple h = json_io::sextuple_from(input_json(c));
  const auto lines = all_pascals(h);
  const auto& symbols = enumerate_symbols();
  if (format_or(c, "json", {"json", "text"}) == "text") {
    std::string text;
    for (std::size_t i = 0; i < symbols.size(); ++i) text += symbols[i].to_string() + " " + line_text(lines[i]) + "\n";
    emit(c, text);
    return 0;
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    Json row{{"symbol", symbols[i].to_string()}, {"defined", lines[i].has_value()}};
    if (lines[i]) row["line"] = json_io::to_json(*lines[i]);
    rows.push_back(std::move(row));
  }
  emit_json(c, {{"theta", theta(h).to_string()}, {"pascals", rows}});
  return 0;
}

int cmd_degenerate(const Config& c) {
  const DegenerationSpec spec = json_io::spec_from(input_json(c));
  const ProjLine line = degenerate_pascal(spec);
  if (format_or(c, "json", {"json", "text"}) == "text") {
    emit(c, line.to_string() + "\n");
    return 0;
  }
  emit_json(c, {{"symbol", spec.symbol.to_string()}, {"line", json_io::to_json(line)}});
  return 0;
}

std::array<P1Point, 3> triangle_input(const Json& j) {
  const Json& src = j.contains("input") ? j.at("input") : j;
  return {json_io::p1_from(json_io::require(src, "P")), json_io::p1_from(json_io::require(src, "Q")),
          json_io::p1_from(json_io::require(src, "R"))};
}

int cmd_classify_222(const Config& c) {
  const auto [p, q, r] =
      c.input.empty() ? std::array<P1Point, 3>{P1Point::affine(1), P1Point::affine(0), P1Point::affine(-1)}
                      : triangle_input(input_json(c));
  const Classification222 cls = classify_222(p, q, r);
  if (format_or(c, "json", {"json", "text"}) == "text") {
    std::string text;
    for (const auto& e : cls.entries) {
      text += e.symbol.to_string() + " " + to_string(e.behaviour) + " " + e.label;
      if (e.line) text += " " + e.line->to_string();
      if (e.center) text += " " + e.center->to_string();
      text += "\n";
    }
    const auto counts = cls.counts();
    text += "constant " + std::to_string(counts.constant) + ", non-constant " + std::to_string(counts.non_constant) + "\n";
    emit(c, text);
    return 0;
  }
  Json out{{"input", {{"P", json_io::to_json(p)}, {"Q", json_io::to_json(q)}, {"R", json_io::to_json(r)}}}};
  out.update(json_io::to_json(cls));
  emit_json(c, out);
  return 0;
}

template <class PointFn>
int cmd_triple_points(const Config& c, const std::vector<SymbolTriple>& triples, PointFn point_fn) {
  const Sextuple h = json_io::sextuple_from(input_json(c));
  const bool text = format_or(c, "json", {"json", "text"}) == "text";
  std::string lines;
  Json rows = Json::array();
  for (const auto& t : triples) {
    const auto p = point_fn(h, t);
    if (text) {
      lines += t.to_string() + " " + (p ? p->to_string() : "undefined") + "\n";
    } else {
      Json row{{"triple", json_io::to_json(t)}, {"defined", p.has_value()}};
      if (p) row["point"] = json_io::to_json(*p);
      rows.push_back(std::move(row));
    }
  }
  if (text) emit(c, lines);
  else emit_json(c, {{"points", rows}});
  return 0;
}

int cmd_tri_symmetric(const Config& c) {
  const Sextuple h = json_io::sextuple_from(input_json(c));
  const auto alpha = tri_symmetric(h);
  if (format_or(c, "json", {"json", "text"}) == "text") {
    emit(c, alpha ? "tri-symmetric alpha=" + to_string(*alpha) + "\n" : "not tri-symmetric\n");
    return 0;
  }
  Json out{{"tri_symmetric", alpha.has_value()}};
  if (alpha) out["alpha"] = to_string(*alpha);
  emit_json(c, out);
  return 0;
}

int cmd_verify(const Config& c) {
  const auto reports = verify::run(c.suite, {c.seed, c.samples});
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();
  if (format_or(c, "json", {"json", "text"}) == "text") {
    std::string text;
    for (const auto& r : reports) {
      for (const auto& p : r.properties) {
        text += std::string(p.pass ? "PASS " : "FAIL ") + r.suite + ": " + p.name + " (" + std::to_string(p.checked) +
                " checks)";
        if (!p.pass) text += " counterexample: " + p.counterexample;
        text += "\n";
      }
    }
    emit(c, text);
  } else {
    Json suites = Json::array();
    for (const auto& r : reports) {
      Json props = Json::array();
      for (const auto& p : r.properties) {
        Json row{{"name", p.name}, {"pass", p.pass}, {"checked", p.checked}};
        if (!p.pass) row["counterexample"] = p.counterexample;
        props.push_back(std::move(row));
      }
      suites.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"properties", props}});
    }
    emit_json(c, {{"seed", c.seed}, {"pass", pass}, {"suites", suites}});
  }
  return pass ? 0 : kExitVerificationFailure;
}

void render_sextuple(svg::Scene& scene, const Sextuple& h, const Config& c) {
  for (Letter l : kLetters) scene.add_point(h.point(l), std::string(1, to_char(l)));
  if (!c.symbol.empty()) {
    const PascalSymbol s = PascalSymbol::parse(c.symbol);
    const auto pts = crosshair_points(h, s.grid());
    static const char* kNames[] = {"X12", "X13", "X23"};
    for (int k = 0; k < 3; ++k) {
      if (pts[k]) scene.add_point(*pts[k], kNames[k], "marker");
    }
    if (auto l = eval_pascal(h, s)) scene.add_line(*l, s.to_string());
  } else {
    const auto lines = all_pascals(h);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i]) scene.add_line(*lines[i], enumerate_symbols()[i].to_string());
    }
  }
  if (c.markers == "kirkman" || c.markers == "all") {
    for (const auto& t : kirkman_triples()) {
      if (auto p = kirkman_point(h, t)) scene.add_marker(*p, "marker");
    }
  }
  if (c.markers == "steiner" || c.markers == "all") {
    for (const auto& t : steiner_triples()) {
      if (auto p = steiner_point(h, t)) scene.add_marker(*p, "marker");
    }
  }
}

void render_triangle(svg::Scene& scene, const std::array<P1Point, 3>& in) {
  const PolarTriangle t = polar_triangle(in[0], in[1], in[2]);
  scene.add_line(join(t.p, t.q), "PQ", "aux");
  scene.add_line(join(t.p, t.r), "PR", "aux");
  scene.add_line(join(t.q, t.r), "QR", "aux");
  scene.add_line(tangent_at(in[0]), "T_P", "aux");
  scene.add_line(tangent_at(in[1]), "T_Q", "aux");
  scene.add_line(tangent_at(in[2]), "T_R", "aux");
  scene.add_line(join(t.p, t.p_pole), "PP'");
  scene.add_line(join(t.q, t.q_pole), "QQ'");
  scene.add_line(join(t.r, t.r_pole), "RR'");
  scene.add_line(t.axis, "ch");
  scene.add_point(t.p, "P");
  scene.add_point(t.q, "Q");
  scene.add_point(t.r, "R");
  scene.add_point(t.p_pole, "P'");
  scene.add_point(t.q_pole, "Q'");
  scene.add_point(t.r_pole, "R'");
  scene.add_point(t.center, "CH", "marker");
  for (const auto& x : t.cross_points) scene.add_marker(x, "marker");
}

int cmd_render(const Config& c) {
  format_or(c, "svg", {"svg"});
  if (c.markers != "none" && c.markers != "kirkman" && c.markers != "steiner" && c.markers != "all") {
    throw ParseError("--markers must be none, kirkman, steiner or all");
  }
  const Json j = input_json(c);
  svg::Scene scene;
  if (j.contains("P") || j.contains("input")) render_triangle(scene, triangle_input(j));
  else render_sextuple(scene, json_io::sextuple_from(j), c);
  emit(c, scene.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Pascal lines, their degenerations and the hexagrammum mysticum"};
  app.require_subcommand(1);
  Config cfg;

  auto add_io = [&](CLI::App* sub, bool needs_input) {
    auto* opt = sub->add_option("--input", cfg.input, "JSON input: a file path, '-' for stdin, or inline JSON");
    if (needs_input) opt->required();
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "svg", "text"}));
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  };

  std::map<CLI::App*, int (*)(const Config&)> handlers;
  auto add = [&](const char* name, const char* help, int (*fn)(const Config&), bool needs_input = true) {
    auto* sub = app.add_subcommand(name, help);
    add_io(sub, needs_input);
    handlers[sub] = fn;
    return sub;
  };

  add("pascal", "Pascal line of one symbol", cmd_pascal)->add_option("--symbol", cfg.symbol, "Symbol such as ABC/FED");
  add("all-pascals", "All 60 Pascal lines", cmd_all_pascals);
  add("degenerate", "Resolved Pascal at a blow-up fiber point", cmd_degenerate);
  add("classify-222", "Behaviour of all 60 Pascals over a (2,2,2) coincidence", cmd_classify_222, false);
  add("kirkman", "The 60 Kirkman points", [](const Config& c) {
    return cmd_triple_points(c, kirkman_triples(), [](const Sextuple& h, const KTriple& t) { return kirkman_point(h, t); });
  });
  add("steiner", "The 20 Steiner points", [](const Config& c) {
    return cmd_triple_points(c, steiner_triples(), [](const Sextuple& h, const STriple& t) { return steiner_point(h, t); });
  });
  add("tri-symmetric", "Tri-symmetry test", cmd_tri_symmetric);
  auto* verify_cmd = add("verify", "Run the randomized verification suites", cmd_verify, false);
  verify_cmd->add_option("--suite", cfg.suite, "pedoe, kirkman, steiner, chasles, classify-222 (alias thm-4-2), identities (alias prop-2-2), pascal or all");
  verify_cmd->add_option("--seed", cfg.seed, "Seed for all random sampling");
  verify_cmd->add_option("--samples", cfg.samples, "Sample count override");
  auto* render_cmd = add("render", "SVG drawing of a sextuple or a (2,2,2) triangle", cmd_render);
  render_cmd->add_option("--symbol", cfg.symbol, "Draw only this Pascal and its cross-hair points");
  render_cmd->add_option("--markers", cfg.markers, "none, kirkman, steiner or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    for (const auto& [sub, fn] : handlers) {
      if (sub->parsed()) return fn(cfg);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
