#include "ccc/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <boost/math/distributions/normal.hpp>

namespace ccc {

std::vector<std::uint8_t> null_interleaving(int m, int n, Rng& rng, NullLaw law) {
  const int total = m + n;
  std::vector<std::pair<double, std::uint8_t>> pooled(total);
  const boost::math::normal standard;
  for (int i = 0; i < total; ++i) {
    const double u = open_uniform(rng);
    double v = u;
    switch (law) {
      case NullLaw::Uniform: break;
      case NullLaw::Normal: v = boost::math::quantile(standard, u); break;
      case NullLaw::Exponential: v = -std::log1p(-u); break;
    }
    pooled[i] = {v, static_cast<std::uint8_t>(i < m ? 1 : 0)};
  }
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::uint8_t> is_x(total);
  for (int i = 0; i < total; ++i) is_x[i] = pooled[i].second;
  return is_x;
}

}  // namespace ccc
