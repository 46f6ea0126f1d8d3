#include <cmath>
#include <limits>
#include <vector>

#include "support.hpp"

#include "ccc/grid.hpp"

using namespace ccc;
using testing::check_error;

TEST_CASE("relative ranks of the small example") {
  const auto d = testing::small_pair();
  CHECK(d.m() == 2);
  CHECK(d.n() == 2);
  CHECK(std::vector<int>(d.s_ranks().begin(), d.s_ranks().end()) == std::vector<int>{1, 1, 1, 2});
  CHECK(std::vector<int>(d.t_ranks().begin(), d.t_ranks().end()) == std::vector<int>{0, 1, 2, 2});
  CHECK(std::vector<int>(d.r_ranks().begin(), d.r_ranks().end()) == std::vector<int>{1, 4});
  CHECK(d.eta() == doctest::Approx(1.0));
  CHECK(d.lambda() == doctest::Approx(0.5));
}

TEST_CASE("fully separated samples") {
  const auto d = build_two_sample({1, 2}, {3, 4});
  CHECK(std::vector<int>(d.s_ranks().begin(), d.s_ranks().end()) == std::vector<int>{1, 2, 2, 2});
  CHECK(std::vector<int>(d.t_ranks().begin(), d.t_ranks().end()) == std::vector<int>{0, 0, 1, 2});
}

TEST_CASE("pooled count identities on random data") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = 1 + static_cast<int>(rng() % 40);
    const int n = 1 + static_cast<int>(rng() % 40);
    const auto d = build_two_sample(testing::normal_values(m, 0.0, rng),
                                    testing::normal_values(n, 0.3, rng));
    const auto s = d.s_ranks();
    const auto t = d.t_ranks();
    REQUIRE(static_cast<int>(s.size()) == m + n);
    for (int i = 1; i <= m + n; ++i) CHECK(s[i - 1] + t[i - 1] == i);
    CHECK(s.back() == m);
    // R_k is the pooled position where S first reaches k.
    for (int k = 1; k <= m; ++k) {
      const int r = d.r_ranks()[k - 1];
      CHECK(s[r - 1] == k);
      if (r > 1) CHECK(s[r - 2] == k - 1);
    }
  }
}

TEST_CASE("interleaving constructor agrees with value constructor") {
  const auto from_values = build_two_sample({0.5, 2.0, 2.5}, {1.0, 3.0});
  const auto from_mask = testing::from_pattern("xyxxy");
  CHECK(std::vector<int>(from_values.s_ranks().begin(), from_values.s_ranks().end()) ==
        std::vector<int>(from_mask.s_ranks().begin(), from_mask.s_ranks().end()));
  CHECK(std::vector<int>(from_values.r_ranks().begin(), from_values.r_ranks().end()) ==
        std::vector<int>(from_mask.r_ranks().begin(), from_mask.r_ranks().end()));
}

TEST_CASE("swapping exchanges S and T") {
  const auto d = build_two_sample({0.1, 0.7, 0.9}, {0.2, 0.3, 0.8, 1.5});
  const auto s = d.swapped();
  CHECK(s.m() == 4);
  CHECK(s.n() == 3);
  for (int i = 0; i < d.size(); ++i) {
    CHECK(s.s_ranks()[i] == d.t_ranks()[i]);
    CHECK(s.t_ranks()[i] == d.s_ranks()[i]);
  }
}

TEST_CASE("validation errors") {
  check_error(ErrorCode::EmptySample, [] { build_two_sample({}, {1.0}); });
  check_error(ErrorCode::EmptySample, [] { build_two_sample({1.0}, {}); });
  check_error(ErrorCode::NonFiniteValue,
              [] { build_two_sample({1.0, std::numeric_limits<double>::quiet_NaN()}, {2.0}); });
  check_error(ErrorCode::NonFiniteValue,
              [] { build_two_sample({1.0}, {std::numeric_limits<double>::infinity()}); });
  check_error(ErrorCode::TiesPresent, [] { build_two_sample({1.0, 2.0}, {2.0, 3.0}); });
  check_error(ErrorCode::TiesPresent, [] { build_two_sample({1.0, 1.0}, {3.0}); });
}

TEST_CASE("jitter breaks ties deterministically and keeps distinct values ordered") {
  const std::vector<double> x{1.0, 2.0, 2.0, 5.0};
  const std::vector<double> y{2.0, 3.0, 5.0, 7.0};
  const auto a = build_two_sample(x, y, TiePolicy::jitter(3));
  const auto b = build_two_sample(x, y, TiePolicy::jitter(3));
  CHECK(a.ties_applied() == TiesApplied::Jitter);
  CHECK(std::vector<double>(a.x().values().begin(), a.x().values().end()) ==
        std::vector<double>(b.x().values().begin(), b.x().values().end()));
  // Values 1 and 3 and 7 keep their pooled slots.
  CHECK(a.s_ranks()[0] == 1);
  CHECK(a.t_ranks()[a.size() - 1] == 4);
  const auto none = build_two_sample({1.0}, {2.0}, TiePolicy::jitter(3));
  CHECK(none.ties_applied() == TiesApplied::None);
}

TEST_CASE("grid dimension rule") {
  CHECK(grid_for(200).dimension() == 127);
  CHECK(grid_for(149).dimension() == 127);
  CHECK(grid_for(111).dimension() == 63);
  CHECK(grid_for(800).dimension() == 511);
  const auto g = grid_for(4);
  CHECK(g.dimension() == 3);
  CHECK(g.points() == std::vector<double>{0.25, 0.5, 0.75});
  check_error(ErrorCode::SampleTooSmall, [] { grid_for(2); });
  for (int total = 3; total <= 5000; ++total) {
    const int d = grid_for(total).dimension();
    CHECK(d <= total);
    CHECK(2 * d + 1 > total);
  }
}
