#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccc/models.hpp"
#include "ccc/report.hpp"

namespace ccc {

inline constexpr std::string_view kLowerStripColor = "#FFD6D6";
inline constexpr std::string_view kUpperStripColor = "#D6D6FF";
inline constexpr std::string_view kBandColor = "#FFFFFF";
inline constexpr std::string_view kParabolaColor = "#CCCCCC";

/// Minimal append-only SVG writer. Numbers are printed with fixed precision so
/// identical input gives identical bytes.
class SvgDocument {
 public:
  SvgDocument(double width, double height);

  SvgDocument& rect(double x, double y, double w, double h, std::string_view fill,
                    std::string_view attrs = {});
  SvgDocument& line(double x1, double y1, double x2, double y2, std::string_view stroke,
                    double width = 1.0, std::string_view attrs = {});
  SvgDocument& polyline(std::span<const std::pair<double, double>> pts, std::string_view stroke,
                        double width = 1.0, std::string_view attrs = {});
  SvgDocument& text(double x, double y, std::string_view content, double size = 12.0,
                    std::string_view anchor = "start", std::string_view attrs = {});
  SvgDocument& open_group(std::string_view attrs);
  SvgDocument& close_group();

  std::string str() const;

 private:
  double width_;
  double height_;
  std::string body_;
};

std::string format_number(double v, int decimals = 3);

/// B-plot with per-decile strips: lower one-sided region in light red below
/// l^-, upper one-sided region in light blue above l^+, two-sided band in white.
std::string render_bplot(const AnalysisReport& report);
void emit_bplot(const AnalysisReport& report, const std::filesystem::path& out);

std::string render_ccc_plot(std::span<const CccCurve> curves);
void emit_ccc_plot(std::span<const CccCurve> curves, const std::filesystem::path& out);

/// Series drawn in one variance-comparison row.
struct VariancePanelData {
  int m = 0;
  int n = 0;
  std::vector<double> p;         // on (0, 1)
  std::vector<double> var_u;
  std::vector<double> var_p;
  std::vector<double> parabola;  // p(1-p)
  std::vector<double> delta_p;   // on [0.03, 0.97]
  std::vector<double> delta;
};

VariancePanelData variance_panel_data(int m, int n, int resolution = 600);
std::string render_variance_panels(std::span<const std::pair<int, int>> sizes);
void emit_variance_panels(std::span<const std::pair<int, int>> sizes,
                          const std::filesystem::path& out);

}  // namespace ccc
