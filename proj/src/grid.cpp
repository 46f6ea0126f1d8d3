#include "ccc/grid.hpp"

#include <string>

#include "ccc/error.hpp"

namespace ccc {

DyadicGrid::DyadicGrid(int resolution) : resolution_(resolution) {
  if (resolution < 0 || resolution > 40) {
    throw Error(ErrorCode::InvalidArgument, "grid resolution out of range");
  }
  const int d = dimension();
  const double denom = static_cast<double>(denominator());
  points_.reserve(d);
  for (int j = 1; j <= d; ++j) points_.push_back(j / denom);
}

DyadicGrid grid_for(int total_size) {
  if (total_size < 3) {
    throw Error(ErrorCode::SampleTooSmall,
                "pooled size " + std::to_string(total_size) + " is below 3");
  }
  int s = 0;
  while ((1LL << (s + 2)) - 1 <= total_size) ++s;
  return DyadicGrid(s);
}

}  // namespace ccc
