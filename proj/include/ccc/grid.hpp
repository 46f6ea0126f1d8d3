#pragma once

#include <vector>

namespace ccc {

/// Dyadic inspection points p_{s,j} = j / 2^{s+1}, j = 1..d(s), d(s) = 2^{s+1} - 1.
class DyadicGrid {
 public:
  explicit DyadicGrid(int resolution);

  int resolution() const noexcept { return resolution_; }
  int dimension() const noexcept { return (1 << (resolution_ + 1)) - 1; }
  /// 2^{s+1}; p_j = j / denominator().
  long long denominator() const noexcept { return 1LL << (resolution_ + 1); }
  const std::vector<double>& points() const noexcept { return points_; }
  /// 1-based j.
  double point(int j) const noexcept { return points_[j - 1]; }

  bool operator==(const DyadicGrid& other) const noexcept {
    return resolution_ == other.resolution_;
  }

 private:
  int resolution_;
  std::vector<double> points_;
};

/// Largest grid whose dimension does not exceed N. Throws SampleTooSmall for N < 3.
DyadicGrid grid_for(int total_size);

}  // namespace ccc
