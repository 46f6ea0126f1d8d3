#pragma once

#include <span>
#include <string>
#include <vector>

#include "ccc/grid.hpp"
#include "ccc/two_sample.hpp"

namespace ccc {

/// w(p) = 1 / sqrt(p(1-p)).
double weight(double p);

/// Unweighted rank process eta_N [F_m(H_N^{-1}(p)) - G_n(H_N^{-1}(p))] on [0, 1].
/// Constant on ((i-1)/N, i/N] where it equals eta_N (S_i/m - T_i/n); p = 0 uses i = 1.
double process_p_hat(const TwoSampleData& data, double p);

/// Weighted process w(p) * process_p_hat on (0, 1). Throws POutOfRange otherwise.
double process_p_weighted(const TwoSampleData& data, double p);

/// ROC-type process eta_N [p - G_n(F_m^{-1}(p))] on [0, 1], constant-index on
/// ((k-1)/m, k/m] with G_n(X_{k:m}) = (R_k - k)/n; p = 0 uses k = 1.
double process_u_hat(const TwoSampleData& data, double p);

/// Empirical contrast comparison curve at each point (process_p_weighted / eta_N).
std::vector<double> ccc_hat_curve(const TwoSampleData& data, std::span<const double> points);

/// B-plot: the weighted process on the dyadic grid chosen by grid_for(N).
struct BarSeries {
  DyadicGrid grid{0};
  std::vector<double> values;
  double eta = 0.0;
  int m = 0;
  int n = 0;
  std::string x_label;
  std::string y_label;
};

/// Throws SampleTooSmall when N < 3.
BarSeries bars(const TwoSampleData& data);

/// Bars on an explicit grid; bar j uses pooled index ceil(j N / 2^{s+1}).
std::vector<double> bar_values(const TwoSampleData& data, const DyadicGrid& grid);

}  // namespace ccc
