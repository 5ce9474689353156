#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "hexagram/cli.hpp"

namespace hexagram::cli {
namespace {

constexpr int kDigits = 12;
constexpr int kWidth = 600;
constexpr int kConicSamples = 400;

struct Affine {
  Rational x;
  Rational y;
  friend auto operator<=>(const Affine&, const Affine&) = default;
};

std::optional<Affine> affine(const ProjQuadratic& point) {
  const auto z = point.point_coords();
  if (z[0].is_zero()) return std::nullopt;
  return Affine{z[1] / z[0], z[2] / z[0]};
}

class Canvas {
 public:
  explicit Canvas(const Viewport& v)
      : v_(v), scale_(Rational(kWidth) / (v.xmax - v.xmin)), height_((v.ymax - v.ymin) * scale_) {}

  bool contains(const Affine& p) const {
    return v_.xmin <= p.x && p.x <= v_.xmax && v_.ymin <= p.y && p.y <= v_.ymax;
  }

  std::string px(const Rational& x) const { return ((x - v_.xmin) * scale_).to_decimal(kDigits); }
  std::string py(const Rational& y) const { return ((v_.ymax - y) * scale_).to_decimal(kDigits); }
  std::string height() const { return height_.to_decimal(kDigits); }

  /// Exact endpoints of l0 + l1 x + l2 y = 0 inside the viewport, if the
  /// visible part is a proper segment.
  std::optional<std::pair<Affine, Affine>> clip(const ProjQuadratic& line) const {
    const auto l = line.line_coords();
    std::vector<Affine> hits;
    if (!l[2].is_zero()) {
      for (const auto& x : {v_.xmin, v_.xmax}) hits.push_back({x, -(l[0] + l[1] * x) / l[2]});
    }
    if (!l[1].is_zero()) {
      for (const auto& y : {v_.ymin, v_.ymax}) hits.push_back({-(l[0] + l[2] * y) / l[1], y});
    }
    std::set<Affine> inside;
    for (const auto& h : hits) {
      if (contains(h)) inside.insert(h);
    }
    if (inside.size() < 2) return std::nullopt;
    return std::make_pair(*inside.begin(), *inside.rbegin());
  }

  std::string segment_attrs(const std::pair<Affine, Affine>& s) const {
    return "x1=\"" + px(s.first.x) + "\" y1=\"" + py(s.first.y) + "\" x2=\"" + px(s.second.x) +
           "\" y2=\"" + py(s.second.y) + "\"";
  }

  std::string segment_path(const std::pair<Affine, Affine>& s) const {
    return "M " + px(s.first.x) + " " + py(s.first.y) + " L " + px(s.second.x) + " " + py(s.second.y);
  }

  /// Sampled parabola y = x^2, broken where it leaves the viewport.
  std::string conic_path() const {
    std::string d;
    bool pen_down = false;
    const Rational step = (v_.xmax - v_.xmin) / Rational(kConicSamples);
    for (int k = 0; k <= kConicSamples; ++k) {
      const Rational x = v_.xmin + step * Rational(k);
      const Affine p{x, x * x};
      if (!contains(p)) {
        pen_down = false;
        continue;
      }
      if (!d.empty()) d += ' ';
      d += (pen_down ? "L " : "M ") + px(p.x) + " " + py(p.y);
      pen_down = true;
    }
    return d;
  }

 private:
  Viewport v_;
  Rational scale_;
  Rational height_;
};

// Joins used by the crosshairs of [P1 P2 P3; P4 P5 P6].
constexpr std::array<std::array<int, 2>, 6> kChordCells{{{0, 4}, {1, 3}, {1, 5}, {2, 4}, {0, 5}, {2, 3}}};

int cell_label(const Arrangement& arr, int cell) {
  return static_cast<int>(cell < 3 ? arr.top[cell] : arr.bottom[cell - 3]);
}

}  // namespace

std::string render_svg(const SextupleParams& params, const std::vector<PascalArray>& arrays,
                       const Viewport& viewport) {
  const Canvas canvas(viewport);
  bool visible = false;

  // Deduplicate the selection, keeping first occurrences.
  std::vector<PascalArray> selected;
  for (const auto& a : arrays) {
    if (std::find(selected.begin(), selected.end(), a) == selected.end()) selected.push_back(a);
  }

  std::ostringstream body;
  const std::string conic = canvas.conic_path();
  if (!conic.empty()) {
    visible = true;
    body << "  <path class=\"conic\" d=\"" << conic << "\"/>\n";
  }

  std::set<std::pair<int, int>> chords;
  for (const auto& a : selected) {
    for (const auto& cell : kChordCells) {
      const int p = cell_label(a.arrangement(), cell[0]);
      const int q = cell_label(a.arrangement(), cell[1]);
      chords.insert({std::min(p, q), std::max(p, q)});
    }
  }
  for (const auto& [p, q] : chords) {
    const auto line = join(params.point(static_cast<Label>(p)), params.point(static_cast<Label>(q)));
    if (const auto seg = canvas.clip(line)) {
      body << "  <path class=\"chord\" data-chord=\"" << to_char(static_cast<Label>(p))
           << to_char(static_cast<Label>(q)) << "\" d=\"" << canvas.segment_path(*seg) << "\"/>\n";
    }
  }

  std::ostringstream marks;
  for (const auto& a : selected) {
    const auto pl = pascal_line(params, a);
    if (const auto seg = canvas.clip(pl.line)) {
      visible = true;
      body << "  <line class=\"pascal\" data-array=\"" << a.code() << "\" " << canvas.segment_attrs(*seg)
           << "/>\n";
    }
    for (const auto& x : crosshairs(params, a.arrangement())) {
      const auto p = affine(x);
      if (!p || !canvas.contains(*p)) continue;
      visible = true;
      marks << "  <circle class=\"crosshair\" data-array=\"" << a.code() << "\" cx=\"" << canvas.px(p->x)
            << "\" cy=\"" << canvas.py(p->y) << "\" r=\"3\"/>\n";
    }
  }
  body << marks.str();

  // The six points are always emitted; the SVG viewport hides those outside.
  for (int i = 0; i < 6; ++i) {
    const Label label = static_cast<Label>(i);
    const Rational& t = params[label];
    const Affine p{t, t * t};
    if (canvas.contains(p)) visible = true;
    body << "  <circle class=\"point\" data-label=\"" << to_char(label) << "\" cx=\"" << canvas.px(p.x)
         << "\" cy=\"" << canvas.py(p.y) << "\" r=\"4\"/>\n";
    body << "  <text class=\"label\" x=\"" << canvas.px(p.x) << "\" y=\"" << canvas.py(p.y)
         << "\" dx=\"6\" dy=\"-6\">" << to_char(label) << "</text>\n";
  }

  if (!visible) {
    throw Error(ErrorCode::ViewportExcludesAll, "nothing of the figure falls inside the viewport");
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\""
      << canvas.height() << "\" viewBox=\"0 0 " << kWidth << " " << canvas.height() << "\">\n"
      << "  <style>\n"
      << "    .conic { fill: none; stroke: #333; stroke-width: 1.5; }\n"
      << "    .chord { stroke: #2a9d40; stroke-width: 0.8; }\n"
      << "    .pascal { stroke: #c0392b; stroke-width: 1.2; }\n"
      << "    .crosshair { fill: #ffffff; stroke: #c0392b; }\n"
      << "    .point { fill: #1f4e9c; }\n"
      << "    .label { font: 12px sans-serif; fill: #1f4e9c; }\n"
      << "  </style>\n"
      << "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << canvas.height()
      << "\" fill=\"#ffffff\"/>\n"
      << body.str() << "</svg>\n";
  return svg.str();
}

}  // namespace hexagram::cli
