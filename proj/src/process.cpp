#include "ccc/process.hpp"

#include <algorithm>
#include <cmath>

#include "ccc/error.hpp"
#include "ccc/numeric.hpp"

namespace ccc {

namespace {

void require_closed_unit(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::POutOfRange, "p must lie in [0, 1]");
}

void require_open_unit(double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::POutOfRange, "p must lie in (0, 1)");
}

// eta (S_i/m - T_i/n) with i 1-based.
double unweighted_at(const TwoSampleData& data, long long i) {
  const auto s = data.s_ranks()[i - 1];
  const auto t = data.t_ranks()[i - 1];
  return data.eta() * (static_cast<double>(s) / data.m() - static_cast<double>(t) / data.n());
}

}  // namespace

double weight(double p) {
  require_open_unit(p);
  return 1.0 / std::sqrt(p * (1.0 - p));
}

double process_p_hat(const TwoSampleData& data, double p) {
  require_closed_unit(p);
  const long long i = std::clamp<long long>(detail::ceil_scaled(p, data.size()), 1, data.size());
  return unweighted_at(data, i);
}

double process_p_weighted(const TwoSampleData& data, double p) {
  require_open_unit(p);
  return weight(p) * process_p_hat(data, p);
}

double process_u_hat(const TwoSampleData& data, double p) {
  require_closed_unit(p);
  const long long k = std::clamp<long long>(detail::ceil_scaled(p, data.m()), 1, data.m());
  const int r = data.r_ranks()[k - 1];
  return data.eta() * (p - static_cast<double>(r - k) / data.n());
}

std::vector<double> ccc_hat_curve(const TwoSampleData& data, std::span<const double> points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (double p : points) out.push_back(process_p_weighted(data, p) / data.eta());
  return out;
}

std::vector<double> bar_values(const TwoSampleData& data, const DyadicGrid& grid) {
  const long long denom = grid.denominator();
  const int d = grid.dimension();
  std::vector<double> out(d);
  for (int j = 1; j <= d; ++j) {
    const long long i = detail::ceil_div(j * static_cast<long long>(data.size()), denom);
    out[j - 1] = weight(grid.point(j)) * unweighted_at(data, i);
  }
  return out;
}

BarSeries bars(const TwoSampleData& data) {
  BarSeries series;
  series.grid = grid_for(data.size());
  series.values = bar_values(data, series.grid);
  series.eta = data.eta();
  series.m = data.m();
  series.n = data.n();
  series.x_label = data.x().label();
  series.y_label = data.y().label();
  return series;
}

}  // namespace ccc
