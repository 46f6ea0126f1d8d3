#include <cmath>
#include <vector>

#include "support.hpp"

#include "ccc/inference.hpp"
#include "ccc/monte_carlo.hpp"
#include "ccc/process.hpp"

using namespace ccc;

namespace {

std::vector<double> transformed(const std::vector<double>& v, int which) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    switch (which) {
      case 0: out[i] = std::exp(v[i]); break;
      case 1: out[i] = v[i] * v[i] * v[i] + 2.0 * v[i]; break;
      default: out[i] = std::atan(v[i]) * 10.0 - 3.0; break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("statistics are invariant under common increasing transforms") {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = 2 + static_cast<int>(rng() % 60);
    const int n = 2 + static_cast<int>(rng() % 60);
    const auto x = testing::normal_values(m, 0.0, rng);
    const auto y = testing::normal_values(n, 0.3, rng);
    const auto base = build_two_sample(x, y);
    const auto b0 = bars(base);
    for (int which = 0; which < 3; ++which) {
      const auto t = build_two_sample(transformed(x, which), transformed(y, which));
      CHECK(bars(t).values == b0.values);
      CHECK(ad_statistic(t) == ad_statistic(base));
      CHECK(process_u_hat(t, 0.37) == process_u_hat(base, 0.37));
    }
  }
}

TEST_CASE("swap negates the bars and leaves both statistics unchanged") {
  std::mt19937_64 rng(202);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = 2 + static_cast<int>(rng() % 80);
    const int n = 2 + static_cast<int>(rng() % 80);
    const auto x = testing::normal_values(m, 0.0, rng);
    const auto y = testing::normal_values(n, 0.5, rng);
    const auto d = build_two_sample(x, y);
    const auto s = build_two_sample(y, x);
    const auto bd = bars(d);
    const auto bs = bars(s);
    REQUIRE(bd.values.size() == bs.values.size());
    for (std::size_t j = 0; j < bd.values.size(); ++j) CHECK(bs.values[j] == -bd.values[j]);
    CHECK(max_statistic(bs) == max_statistic(bd));
    CHECK(ad_statistic(s) == ad_statistic(d));
    for (double p : {0.0, 0.13, 0.5, 0.81, 1.0}) CHECK(process_p_hat(s, p) == -process_p_hat(d, p));
    CHECK(bars(d.swapped()).values == bs.values);
  }
}

TEST_CASE("pooled counts add up for null interleavings") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = replicate_rng(55, i);
    const int m = 2 + static_cast<int>(i % 37);
    const int n = 2 + static_cast<int>((i * 7) % 41);
    const auto d = TwoSampleData::from_interleaving(null_interleaving(m, n, rng));
    for (int k = 1; k <= d.size(); ++k) CHECK(d.s_ranks()[k - 1] + d.t_ranks()[k - 1] == k);
  }
}

TEST_CASE("replicate streams do not depend on scheduling") {
  std::vector<double> serial(500), parallel(500);
  auto draw = [](std::vector<double>& out) {
    return [&out](std::size_t i) {
      auto rng = replicate_rng(8, i);
      out[i] = open_uniform(rng);
    };
  };
  parallel_for(500, draw(serial), 1);
  parallel_for(500, draw(parallel), 4);
  CHECK(serial == parallel);
}
