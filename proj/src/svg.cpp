#include "ccc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ccc/error.hpp"
#include "ccc/io.hpp"
#include "ccc/moments.hpp"

namespace ccc {

std::string format_number(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) {
    // normalise negative zero
    if (!s.empty() && s.front() == '-') s.erase(0, 1);
  }
  return s;
}

namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string f(double v) { return format_number(v, 2); }

}  // namespace

SvgDocument::SvgDocument(double width, double height) : width_(width), height_(height) {}

SvgDocument& SvgDocument::rect(double x, double y, double w, double h, std::string_view fill,
                               std::string_view attrs) {
  body_ += "<rect x=\"" + f(x) + "\" y=\"" + f(y) + "\" width=\"" + f(w) + "\" height=\"" +
           f(h) + "\" fill=\"" + std::string(fill) + "\"";
  if (!attrs.empty()) body_ += " " + std::string(attrs);
  body_ += "/>\n";
  return *this;
}

SvgDocument& SvgDocument::line(double x1, double y1, double x2, double y2,
                               std::string_view stroke, double width, std::string_view attrs) {
  body_ += "<line x1=\"" + f(x1) + "\" y1=\"" + f(y1) + "\" x2=\"" + f(x2) + "\" y2=\"" + f(y2) +
           "\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" + f(width) + "\"";
  if (!attrs.empty()) body_ += " " + std::string(attrs);
  body_ += "/>\n";
  return *this;
}

SvgDocument& SvgDocument::polyline(std::span<const std::pair<double, double>> pts,
                                   std::string_view stroke, double width,
                                   std::string_view attrs) {
  body_ += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" +
           f(width) + "\"";
  if (!attrs.empty()) body_ += " " + std::string(attrs);
  body_ += " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) body_ += ' ';
    body_ += f(pts[i].first) + "," + f(pts[i].second);
  }
  body_ += "\"/>\n";
  return *this;
}

SvgDocument& SvgDocument::text(double x, double y, std::string_view content, double size,
                               std::string_view anchor, std::string_view attrs) {
  body_ += "<text x=\"" + f(x) + "\" y=\"" + f(y) + "\" font-size=\"" + f(size) +
           "\" text-anchor=\"" + std::string(anchor) + "\"";
  if (!attrs.empty()) body_ += " " + std::string(attrs);
  body_ += ">" + escape(content) + "</text>\n";
  return *this;
}

SvgDocument& SvgDocument::open_group(std::string_view attrs) {
  body_ += "<g " + std::string(attrs) + ">\n";
  return *this;
}

SvgDocument& SvgDocument::close_group() {
  body_ += "</g>\n";
  return *this;
}

std::string SvgDocument::str() const {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + f(width_) + "\" height=\"" +
         f(height_) + "\" viewBox=\"0 0 " + f(width_) + " " + f(height_) +
         "\" font-family=\"sans-serif\">\n" + body_ + "</svg>\n";
}

namespace {

// Linear map of a data box onto a pixel box (y grows downward).
struct Frame {
  double left, top, width, height;
  double x_min, x_max, y_min, y_max;

  double x(double v) const { return left + (v - x_min) / (x_max - x_min) * width; }
  double y(double v) const { return top + (y_max - v) / (y_max - y_min) * height; }
  double bottom() const { return top + height; }
  double right() const { return left + width; }
};

void draw_axes(SvgDocument& svg, const Frame& fr, double x_step, double y_step) {
  svg.line(fr.left, fr.top, fr.left, fr.bottom(), "#000000");
  svg.line(fr.left, fr.bottom(), fr.right(), fr.bottom(), "#000000");
  for (double t = fr.x_min; t <= fr.x_max + 1e-9; t += x_step) {
    svg.line(fr.x(t), fr.bottom(), fr.x(t), fr.bottom() + 4, "#000000");
    svg.text(fr.x(t), fr.bottom() + 16, format_number(t, 1), 10, "middle");
  }
  const double first = std::ceil(fr.y_min / y_step) * y_step;
  for (double t = first; t <= fr.y_max + 1e-9; t += y_step) {
    svg.line(fr.left - 4, fr.y(t), fr.left, fr.y(t), "#000000");
    svg.text(fr.left - 6, fr.y(t) + 3, format_number(t, y_step < 0.1 ? 2 : 1), 10, "end");
  }
}

double nice_step(double range) {
  const double raw = range / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double k : {1.0, 2.0, 5.0, 10.0}) {
    if (k * mag >= raw) return k * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string render_bplot(const AnalysisReport& report) {
  const auto& b = report.bars;
  const auto& regions = report.regions;
  double extent = 3.0;
  for (double v : b.values) extent = std::max(extent, std::abs(v));
  for (const auto& d : regions.deciles) {
    if (!d.empty()) extent = std::max({extent, std::abs(d.lower), std::abs(d.upper)});
  }
  extent *= 1.1;

  const Frame fr{60.0, 50.0, 680.0, 300.0, 0.0, 1.0, -extent, extent};
  SvgDocument svg(760.0, 420.0);
  const std::string title = b.x_label + "/" + b.y_label;
  svg.text(fr.left + fr.width / 2, 25, title, 14, "middle", "class=\"title\"");

  for (const auto& d : regions.deciles) {
    if (d.empty()) continue;
    const double x0 = fr.x((d.index - 1) / 10.0);
    const double x1 = fr.x(d.index / 10.0);
    const std::string tag = "data-decile=\"" + std::to_string(d.index) + "\"";
    const double y_lo = fr.y(d.lower);
    const double y_hi = fr.y(d.upper);
    svg.rect(x0, y_lo, x1 - x0, fr.bottom() - y_lo, kLowerStripColor, "class=\"lower\" " + tag);
    svg.rect(x0, fr.top, x1 - x0, y_hi - fr.top, kUpperStripColor, "class=\"upper\" " + tag);
    svg.rect(x0, y_hi, x1 - x0, y_lo - y_hi, kBandColor, "class=\"band\" " + tag);
  }

  svg.line(fr.left, fr.y(0.0), fr.right(), fr.y(0.0), "#555555", 0.8, "class=\"zero\"");
  const int d = b.grid.dimension();
  const double bar_width = std::max(0.8, 0.7 * fr.width / (d + 1));
  for (int j = 1; j <= d; ++j) {
    const double v = b.values[j - 1];
    const double top = fr.y(std::max(v, 0.0));
    const double bottom = fr.y(std::min(v, 0.0));
    const int decile = decile_of(j, b.grid.denominator());
    svg.rect(fr.x(b.grid.point(j)) - bar_width / 2, top, bar_width, bottom - top, "#333333",
             "class=\"bar\" data-j=\"" + std::to_string(j) + "\" data-decile=\"" +
                 std::to_string(decile) + "\"");
  }
  draw_axes(svg, fr, 0.1, nice_step(2 * extent));

  std::string caption = "D(N) = " + std::to_string(d);
  if (const auto* t = report.test(Statistic::Max)) {
    caption += ", Max = " + format_number(t->value, 3);
    if (t->exceedances == 0) {
      caption += ", p-value < " + format_number(1.0 / (t->mc_replicates + 1), 6);
    } else {
      caption += ", p-value = " + format_number(t->p_value, 4);
    }
  }
  caption += ", alpha = " + format_number(regions.alpha, 3);
  svg.text(fr.left + fr.width / 2, 400, caption, 12, "middle", "class=\"caption\"");
  return svg.str();
}

void emit_bplot(const AnalysisReport& report, const std::filesystem::path& out) {
  write_text(out, render_bplot(report));
}

std::string render_ccc_plot(std::span<const CccCurve> curves) {
  constexpr int kColumns = 3;
  constexpr double kPanelW = 300.0;
  constexpr double kPanelH = 200.0;
  const int rows = std::max<int>(1, (static_cast<int>(curves.size()) + kColumns - 1) / kColumns);
  SvgDocument svg(kColumns * kPanelW, rows * kPanelH);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    if (c.points.empty()) continue;
    const double ox = (i % kColumns) * kPanelW;
    const double oy = (i / kColumns) * kPanelH;
    double extent = 0.1;
    for (double v : c.values) extent = std::max(extent, std::abs(v));
    extent *= 1.1;
    const Frame fr{ox + 45, oy + 25, kPanelW - 60, kPanelH - 55,
                   c.points.front(), c.points.back(), -extent, extent};
    svg.open_group("class=\"panel\" data-model=\"" + std::string(to_string(c.model)) +
                   "\" data-xmin=\"" + format_number(c.points.front(), 4) + "\" data-xmax=\"" +
                   format_number(c.points.back(), 4) + "\"");
    svg.text(ox + kPanelW / 2, oy + 15, std::string(to_string(c.model)) + ": " +
                 model(c.model).description, 10, "middle");
    svg.line(fr.left, fr.y(0.0), fr.right(), fr.y(0.0), "#888888", 0.6);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(c.points.size());
    for (std::size_t k = 0; k < c.points.size(); ++k) {
      pts.emplace_back(fr.x(c.points[k]), fr.y(c.values[k]));
    }
    svg.polyline(pts, "#1f4e9c", 1.2, "class=\"ccc\"");
    draw_axes(svg, fr, 0.2, nice_step(2 * extent));
    svg.close_group();
  }
  return svg.str();
}

void emit_ccc_plot(std::span<const CccCurve> curves, const std::filesystem::path& out) {
  write_text(out, render_ccc_plot(curves));
}

VariancePanelData variance_panel_data(int m, int n, int resolution) {
  VariancePanelData d;
  d.m = m;
  d.n = n;
  for (int i = 1; i < resolution; ++i) {
    const double p = static_cast<double>(i) / resolution;
    d.p.push_back(p);
    d.var_u.push_back(exact_var_u(m, n, p));
    d.var_p.push_back(exact_var_p(m, n, p));
    d.parabola.push_back(p * (1.0 - p));
  }
  for (int i = 0; i <= resolution; ++i) {
    const double p = kDeltaRangeLow + (kDeltaRangeHigh - kDeltaRangeLow) * i / resolution;
    d.delta_p.push_back(i == resolution ? kDeltaRangeHigh : p);
    d.delta.push_back(delta_curve(m, n, d.delta_p.back()));
  }
  return d;
}

std::string render_variance_panels(std::span<const std::pair<int, int>> sizes) {
  constexpr double kPanelW = 360.0;
  constexpr double kPanelH = 220.0;
  SvgDocument svg(2 * kPanelW, std::max<std::size_t>(1, sizes.size()) * kPanelH);
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    const auto data = variance_panel_data(sizes[r].first, sizes[r].second);
    const double oy = r * kPanelH;
    const std::string label =
        "m=" + std::to_string(data.m) + ", n=" + std::to_string(data.n);

    double top = 0.25;
    for (double v : data.var_u) top = std::max(top, v);
    for (double v : data.var_p) top = std::max(top, v);
    const Frame left{45, oy + 25, kPanelW - 60, kPanelH - 55, 0.0, 1.0, 0.0, top * 1.1};
    svg.open_group("class=\"variance\" data-xmin=\"0\" data-xmax=\"1\"");
    svg.text(kPanelW / 2, oy + 15, "Var U and Var P, " + label, 11, "middle");
    auto series = [&](const std::vector<double>& xs, const std::vector<double>& ys,
                      const Frame& fr) {
      std::vector<std::pair<double, double>> pts;
      for (std::size_t i = 0; i < xs.size(); ++i) pts.emplace_back(fr.x(xs[i]), fr.y(ys[i]));
      return pts;
    };
    svg.polyline(series(data.p, data.parabola, left), kParabolaColor, 3.0, "class=\"parabola\"");
    svg.polyline(series(data.p, data.var_u, left), "#c0392b", 1.0, "class=\"var-u\"");
    svg.polyline(series(data.p, data.var_p, left), "#1f4e9c", 1.0, "class=\"var-p\"");
    draw_axes(svg, left, 0.2, nice_step(top * 1.1));
    svg.close_group();

    double lo = 0.0;
    double hi = 0.0;
    for (double v : data.delta) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const double pad = 0.1 * std::max(hi - lo, 0.1);
    const Frame right{kPanelW + 45, oy + 25, kPanelW - 60, kPanelH - 55,
                      kDeltaRangeLow, kDeltaRangeHigh, lo - pad, hi + pad};
    svg.open_group("class=\"delta\" data-xmin=\"" + format_number(kDeltaRangeLow, 2) +
                   "\" data-xmax=\"" + format_number(kDeltaRangeHigh, 2) + "\"");
    svg.text(kPanelW * 1.5, oy + 15, "Delta_N, " + label, 11, "middle");
    svg.line(right.left, right.y(0.0), right.right(), right.y(0.0), "#888888", 0.6);
    svg.polyline(series(data.delta_p, data.delta, right), "#2c3e50", 1.0, "class=\"delta-curve\"");
    draw_axes(svg, right, 0.2, nice_step(hi - lo + 2 * pad));
    svg.close_group();
  }
  return svg.str();
}

void emit_variance_panels(std::span<const std::pair<int, int>> sizes,
                          const std::filesystem::path& out) {
  write_text(out, render_variance_panels(sizes));
}

}  // namespace ccc
