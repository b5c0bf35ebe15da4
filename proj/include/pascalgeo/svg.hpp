#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pascalgeo/projgeom.hpp"
#include "pascalgeo/rational.hpp"

namespace pascalgeo::svg {

/// Display chart: X = 2 z1 / (z0 + z2), Y = (z0 - z2) / (z0 + z2), which
/// takes the conic z0 z2 = z1^2 to the unit circle. A line <l0:l1:l2> becomes
/// l1 X + (l0 - l2) Y + (l0 + l2) = 0.
struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline std::optional<Point2> to_chart(const ProjPoint& p) {
  const auto& z = p.coords();
  const Rational w = z[0] + z[2];
  if (w == 0) return std::nullopt;
  return Point2{2 * z[1] / w, (z[0] - z[2]) / w};
}

struct Style {
  int half_width = 3;  // visible chart square is [-half_width, half_width]^2
  int pixels_per_unit = 100;
  std::string line_color = "#1f5fa8";
  std::string point_color = "#b22222";
  std::string conic_color = "#222222";
  std::string marker_color = "#2e8b57";
};

/// Formats with six decimals; negative zero prints as zero.
inline std::string fixed6(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r.get_d());
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

class Scene {
 public:
  explicit Scene(Style style = {}) : style_(std::move(style)) {}

  /// Labeled point; skipped when outside the view.
  bool add_point(const ProjPoint& p, const std::string& label, const std::string& css = "point") {
    auto q = to_chart(p);
    if (!q || !in_view(*q)) return false;
    items_.push_back(circle(*q, css) + text(*q, label));
    ++drawn_;
    return true;
  }

  /// Marker without a visible label.
  bool add_marker(const ProjPoint& p, const std::string& css) {
    auto q = to_chart(p);
    if (!q || !in_view(*q)) return false;
    items_.push_back(circle(*q, css));
    ++drawn_;
    return true;
  }

  /// Line clipped to the view square.
  bool add_line(const ProjLine& l, const std::string& label, const std::string& css = "line") {
    const auto& c = l.coords();
    const Rational a = c[1], b = c[0] - c[2], k = c[0] + c[2];
    if (a == 0 && b == 0) return false;  // the line at infinity of the chart
    const Rational s(style_.half_width);
    std::vector<Point2> hits;
    auto keep = [&](Point2 p) {
      if (in_view(p) && std::find(hits.begin(), hits.end(), p) == hits.end()) hits.push_back(p);
    };
    for (const Rational& edge : {Rational(-s), s}) {
      if (b != 0) keep({edge, -(a * edge + k) / b});
      if (a != 0) keep({-(b * edge + k) / a, edge});
    }
    if (hits.size() < 2) return false;
    std::sort(hits.begin(), hits.end(), [](const Point2& p, const Point2& q) {
      return p.x < q.x || (p.x == q.x && p.y < q.y);
    });
    const Point2& p = hits.front();
    const Point2& q = hits.back();
    std::ostringstream os;
    os << "<line class=\"" << css << "\" x1=\"" << px(p.x) << "\" y1=\"" << py(p.y) << "\" x2=\"" << px(q.x)
       << "\" y2=\"" << py(q.y) << "\"><title>" << escape(label) << "</title></line>";
    items_.push_back(os.str());
    ++drawn_;
    return true;
  }

  std::size_t drawn() const { return drawn_; }

  std::string str() const {
    const int size = 2 * style_.half_width * style_.pixels_per_unit;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
       << "<style>"
       << ".conic{fill:none;stroke:" << style_.conic_color << ";stroke-width:1.5}"
       << ".line{stroke:" << style_.line_color << ";stroke-width:1}"
       << ".aux{stroke:#888888;stroke-width:1;stroke-dasharray:4 3}"
       << ".point{fill:" << style_.point_color << "}"
       << ".marker{fill:" << style_.marker_color << "}"
       << "text{font:12px sans-serif}"
       << ".warning{fill:#b22222;font-weight:bold}"
       << "</style>\n"
       << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n"
       << "<circle class=\"conic\" cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\""
       << fixed6(Rational(style_.pixels_per_unit)) << "\"/>\n";
    for (const auto& item : items_) os << item << "\n";
    if (drawn_ == 0) {
      os << "<text class=\"warning\" x=\"10\" y=\"20\">warning: nothing renderable in view</text>\n";
    }
    os << "</svg>\n";
    return os.str();
  }

 private:
  bool in_view(const Point2& p) const {
    const Rational s(style_.half_width);
    return p.x >= -s && p.x <= s && p.y >= -s && p.y <= s;
  }
  std::string px(const Rational& x) const {
    return fixed6(Rational(style_.half_width * style_.pixels_per_unit) + style_.pixels_per_unit * x);
  }
  std::string py(const Rational& y) const {
    return fixed6(Rational(style_.half_width * style_.pixels_per_unit) - style_.pixels_per_unit * y);
  }
  std::string circle(const Point2& p, const std::string& css) const {
    return "<circle class=\"" + css + "\" cx=\"" + px(p.x) + "\" cy=\"" + py(p.y) + "\" r=\"3\"/>";
  }
  std::string text(const Point2& p, const std::string& label) const {
    return "<text x=\"" + px(p.x + Rational(1, 20)) + "\" y=\"" + py(p.y + Rational(1, 20)) + "\">" +
           escape(label) + "</text>";
  }
  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      switch (c) {
        case '<':
          out += "&lt;";
          break;
        case '>':
          out += "&gt;";
          break;
        case '&':
          out += "&amp;";
          break;
        case '"':
          out += "&quot;";
          break;
        default:
          out += c;
      }
    }
    return out;
  }

  Style style_;
  std::vector<std::string> items_;
  std::size_t drawn_ = 0;
};

}  // namespace pascalgeo::svg
