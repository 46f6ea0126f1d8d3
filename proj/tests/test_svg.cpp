#include <map>
#include <regex>
#include <string>
#include <vector>

#include "support.hpp"

#include "ccc/inference.hpp"
#include "ccc/models.hpp"
#include "ccc/process.hpp"
#include "ccc/svg.hpp"

using namespace ccc;
using doctest::Approx;
using testing::check_error;

namespace {

struct Rect {
  double x, y, w, h;
  std::string cls;
  int decile = 0;
  int j = 0;
};

std::vector<Rect> rects(const std::string& svg) {
  static const std::regex re(
      R"re(<rect x="([-0-9.]+)" y="([-0-9.]+)" width="([-0-9.]+)" height="([-0-9.]+)" fill="[^"]*"(?: class="([a-z]+)")?(?: data-j="(\d+)")?(?: data-decile="(\d+)")?)re");
  std::vector<Rect> out;
  for (std::sregex_iterator it(svg.begin(), svg.end(), re), end; it != end; ++it) {
    const auto& m = *it;
    Rect r{std::stod(m[1]), std::stod(m[2]), std::stod(m[3]), std::stod(m[4]), m[5], 0, 0};
    if (m[6].matched) r.j = std::stoi(m[6]);
    if (m[7].matched) r.decile = std::stoi(m[7]);
    out.push_back(r);
  }
  return out;
}

AnalysisReport null_report(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto d = build_two_sample(testing::normal_values(50, 0.0, rng),
                                  testing::normal_values(50, 0.0, rng));
  AnalysisReport r;
  r.bars = bars(d);
  r.bars.x_label = "x";
  r.bars.y_label = "y";
  r.regions = acceptance_regions(d, 0.01, 2000, seed, 1);
  r.tests.push_back(run_test(d, Statistic::Max, 0.05, 2000, seed, 1));
  return r;
}

}  // namespace

TEST_CASE("bars stay inside their white bands when all deciles are inside") {
  const auto report = null_report(12);
  for (const auto& d : report.regions.deciles) REQUIRE(d.flag == RegionFlag::Inside);
  const auto svg = render_bplot(report);
  const auto all = rects(svg);
  std::map<int, Rect> bands;
  int bar_count = 0;
  for (const auto& r : all) {
    if (r.cls == "band") bands[r.decile] = r;
  }
  REQUIRE(bands.size() == 10);
  for (const auto& r : all) {
    if (r.cls != "bar") continue;
    ++bar_count;
    const auto& band = bands.at(r.decile);
    CHECK(r.y >= band.y - 0.011);
    CHECK(r.y + r.h <= band.y + band.h + 0.011);
  }
  CHECK(bar_count == report.bars.grid.dimension());
  CHECK(svg.find("#FFD6D6") != std::string::npos);
  CHECK(svg.find("#D6D6FF") != std::string::npos);
  CHECK(svg.find("#FFFFFF") != std::string::npos);
  CHECK(svg.find("p-value") != std::string::npos);
}

TEST_CASE("strip colours sit on the right side of each band") {
  const auto all = rects(render_bplot(null_report(12)));
  std::map<std::pair<int, std::string>, Rect> strips;
  for (const auto& r : all) {
    if (!r.cls.empty() && r.cls != "bar") strips[{r.decile, r.cls}] = r;
  }
  for (int k = 1; k <= 10; ++k) {
    const auto& lower = strips.at({k, "lower"});
    const auto& band = strips.at({k, "band"});
    const auto& upper = strips.at({k, "upper"});
    // SVG y grows downward
    CHECK(upper.y + upper.h == Approx(band.y).epsilon(1e-3));
    CHECK(band.y + band.h == Approx(lower.y).epsilon(1e-3));
  }
}

TEST_CASE("swapped report mirrors the bars") {
  const auto report = null_report(5);
  auto mirrored = report;
  for (auto& v : mirrored.bars.values) v = -v;
  for (auto& d : mirrored.regions.deciles) {
    const double lo = d.lower;
    d.lower = -d.upper;
    d.upper = -lo;
  }
  const auto a = rects(render_bplot(report));
  const auto b = rects(render_bplot(mirrored));
  std::map<int, Rect> bars_b;
  for (const auto& r : b) {
    if (r.cls == "bar") bars_b[r.j] = r;
  }
  // zero line at the vertical middle of the plotting frame: y0 = 50 + 300/2
  const double y0 = 200.0;
  int checked = 0;
  for (const auto& r : a) {
    if (r.cls != "bar") continue;
    const auto& m = bars_b.at(r.j);
    CHECK(m.x == r.x);
    CHECK(m.h == Approx(r.h).epsilon(1e-3));
    CHECK(m.y == Approx(2 * y0 - (r.y + r.h)).epsilon(1e-4));
    ++checked;
  }
  CHECK(checked == 63);
}

TEST_CASE("rendering is deterministic") {
  const auto report = null_report(7);
  CHECK(render_bplot(report) == render_bplot(null_report(7)));
  const std::vector<std::pair<int, int>> sizes{{20, 20}, {10, 30}};
  CHECK(render_variance_panels(sizes) == render_variance_panels(sizes));
  check_error(ErrorCode::WriteError, [&] { emit_bplot(report, "/nonexistent/dir/x.svg"); });
}

TEST_CASE("variance panels") {
  const auto data = variance_panel_data(20, 20);
  CHECK(data.delta_p.front() == 0.03);
  CHECK(data.delta_p.back() == 0.97);
  for (double p : data.delta_p) {
    CHECK(p >= 0.03);
    CHECK(p <= 0.97);
  }
  const auto peak = std::max_element(data.parabola.begin(), data.parabola.end());
  CHECK(*peak == 0.25);
  CHECK(data.p[peak - data.parabola.begin()] == 0.5);

  const std::vector<std::pair<int, int>> sizes{{20, 20}};
  const auto svg = render_variance_panels(sizes);
  CHECK(svg.find(R"(class="delta" data-xmin="0.03" data-xmax="0.97")") != std::string::npos);
  CHECK(svg.find(R"(class="parabola")") != std::string::npos);
  CHECK(svg.find(R"(class="var-u")") != std::string::npos);
  CHECK(svg.find(R"(class="var-p")") != std::string::npos);
}

TEST_CASE("ccc panels span the full range and the null curve is flat") {
  const auto grid = ccc_grid(0.0001, 0.9999, 200);
  std::vector<CccCurve> curves{
      estimate_ccc_curve(model(ModelId::Null), grid, 300, 100, 100, 4, false, 1),
      estimate_ccc_curve(model(ModelId::A1), grid, 300, 100, 100, 4, false, 1)};
  const auto svg = render_ccc_plot(curves);
  CHECK(svg.find(R"(data-model="NULL" data-xmin="0.0001" data-xmax="0.9999")") != std::string::npos);
  CHECK(svg.find(R"(data-model="A1")") != std::string::npos);
  for (double v : curves[0].values) CHECK(std::abs(v) < 0.25);
}
