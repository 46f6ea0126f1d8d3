#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "support.hpp"

#include "ccc/laws.hpp"
#include "ccc/models.hpp"
#include "ccc/monte_carlo.hpp"

using namespace ccc;
using doctest::Approx;
using testing::check_error;

namespace {

double ks_distance(const Law& law, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(count);
  for (auto& x : v) x = law.draw(rng);
  std::sort(v.begin(), v.end());
  double d = 0.0;
  const double c = static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = law.cdf(v[i]);
    d = std::max({d, std::abs(f - i / c), std::abs((i + 1) / c - f)});
  }
  return d;
}

}  // namespace

TEST_CASE("model names") {
  CHECK(model_from_string("a7") == ModelId::A7);
  CHECK(model_from_string("NULL") == ModelId::Null);
  CHECK(model_from_string("null") == ModelId::Null);
  CHECK(to_string(ModelId::A18) == "A18");
  check_error(ErrorCode::UnknownModel, [] { model_from_string("A19"); });
  CHECK(all_models().size() == 19);
  const auto specified = fully_specified_models();
  for (auto id : {ModelId::A8, ModelId::A12, ModelId::A13, ModelId::A18}) {
    CHECK(std::find(specified.begin(), specified.end(), id) == specified.end());
    CHECK_FALSE(model(id).fully_specified);
  }
  CHECK(model(ModelId::A1).reference_power_max == 76);
  CHECK(model(ModelId::A1).reference_power_ad == 86);
  CHECK_FALSE(model(ModelId::Null).reference_power_max.has_value());
}

TEST_CASE("Pareto(1.6) median") {
  const auto law = pareto_law(1.6);
  CHECK(law->cdf(std::pow(2.0, 1.0 / 1.6)) == Approx(0.5));
  Rng rng(2024);
  std::vector<double> v(1000000);
  for (auto& x : v) x = law->draw(rng);
  std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
  CHECK(std::abs(v[v.size() / 2] - 1.5422) < 0.01);
}

TEST_CASE("closed-form cdf values") {
  CHECK(pareto_law(1.0)->cdf(4.0) == Approx(0.75));
  CHECK(pareto_law(1.6)->cdf(0.5) == 0.0);
  CHECK(laplace_law(0.4, 1.6)->cdf(0.4 + 1.6) == Approx(1.0 - 0.5 * std::exp(-1.0)));
  CHECK(laplace_law(0.0, 1.0)->cdf(-1.0) == Approx(0.5 * std::exp(-1.0)));
  CHECK(exponential_law(1.0, 0.11)->cdf(1.11) == Approx(1.0 - std::exp(-1.0)));
  CHECK(exponential_law(1.0, 0.11)->cdf(0.1) == 0.0);
  CHECK(normal_law(0.0, 1.0)->cdf(1.959963984540054) == Approx(0.975));
  CHECK(lognormal_law(0.92, 0.5)->cdf(std::exp(0.92)) == Approx(0.5));
  CHECK(cauchy_law(0.0, 0.7)->cdf(0.7) == Approx(0.75));
  CHECK(chi_squared_law(1.0)->cdf(3.841458820694124) == Approx(0.95));
  CHECK(uniform_law(0.0, 1.0)->cdf(0.3) == Approx(0.3));
  // Lehmann(theta): Phi^theta
  CHECK(lehmann_law(1.2)->cdf(0.0) == Approx(std::pow(0.5, 1.2)));
  // Anderson(theta): X |X|^theta with X standard normal; monotone, so cdf(y) = Phi(x)
  CHECK(anderson_law(1.5)->cdf(std::pow(1.0, 2.5)) == Approx(normal_law(0, 1)->cdf(1.0)));
  CHECK(anderson_law(1.5)->cdf(0.0) == Approx(0.5));
}

TEST_CASE("draws follow their cdfs") {
  const double bound = 1.5 * 1.63 / 1000.0;
  std::vector<std::pair<std::string, LawPtr>> laws = {
      {"uniform", uniform_law(0.0, 1.0)},
      {"normal", normal_law(0.45, 1.0)},
      {"lognormal", lognormal_law(1.08, 0.4)},
      {"pareto", pareto_law(1.6)},
      {"laplace", laplace_law(0.4, 1.6)},
      {"beta", beta_law(50.0, 50.0)},
      {"chi2", chi_squared_law(1.0)},
      {"cauchy", cauchy_law(0.0, 0.7)},
      {"exponential", exponential_law(1.0, 0.11)},
      {"gamma", gamma_law(1.7, 1.0)},
      {"anderson", anderson_law(1.5)},
      {"lehmann", lehmann_law(0.16)},
      {"subbotin", subbotin_law(8.0)},
      {"two-piece lognormal", two_piece_lognormal_law(1.0, 1.8)},
      {"fan", fan_law(0.66)},
      {"mason-schuenemeyer", mason_schuenemeyer_law(20.0, 0.1)},
  };
  std::uint64_t seed = 100;
  for (const auto& [name, law] : laws) {
    CAPTURE(name);
    CHECK(ks_distance(*law, 1000000, seed++) < bound);
  }
  for (auto id : all_models()) {
    CAPTURE(to_string(id));
    const auto& md = model(id);
    CHECK(ks_distance(*md.g, 200000, seed++) < 1.5 * 1.63 / std::sqrt(200000.0));
  }
}

TEST_CASE("mixture component frequencies") {
  const auto mix = std::make_shared<MixtureLaw>(std::vector<std::pair<double, LawPtr>>{
      {0.6, normal_law(-0.9, 0.37)}, {0.4, normal_law(1.0, 0.7)}});
  Rng rng(77);
  const int draws = 200000;
  int first = 0;
  for (int i = 0; i < draws; ++i) first += mix->draw_with_component(rng).second == 0 ? 1 : 0;
  const double se = std::sqrt(0.6 * 0.4 / draws);
  CHECK(std::abs(static_cast<double>(first) / draws - 0.6) < 4.0 * se);
  CHECK(mix->cdf(-0.9) == Approx(0.6 * 0.5 + 0.4 * normal_law(1.0, 0.7)->cdf(-0.9)));
}

TEST_CASE("sampling is seed deterministic") {
  const auto& md = model(ModelId::A6);
  CHECK(sample(md, Side::G, 50, 9) == sample(md, Side::G, 50, 9));
  CHECK(sample(md, Side::G, 50, 9) != sample(md, Side::G, 50, 10));
  CHECK(sample(md, Side::F, 50, 9) != sample(md, Side::G, 50, 9));
  check_error(ErrorCode::ModelNotFullySpecified,
              [] { sample(model(ModelId::A8), Side::F, 10, 1, true); });
  CHECK(sample(model(ModelId::A8), Side::F, 10, 1).size() == 10);
}

TEST_CASE("population curves") {
  const auto grid = ccc_grid(0.0001, 0.9999, 200);
  CHECK(grid.front() == 0.0001);
  CHECK(grid.back() == 0.9999);
  bool negative = false, positive = false;
  for (double p : grid) {
    CHECK(population_ccc(model(ModelId::Null), p) == Approx(0.0).epsilon(1e-9));
    CHECK(population_ccc(model(ModelId::A1), p) >= -1e-9);
    const double a7 = population_ccc(model(ModelId::A7), p);
    negative |= a7 < -1e-3;
    positive |= a7 > 1e-3;
  }
  CHECK(negative);
  CHECK(positive);
  // Scale alternative: F - G is antisymmetric about the common median.
  CHECK(population_ccc(model(ModelId::A7), 0.5) == Approx(0.0).epsilon(1e-9));
  CHECK(population_ccc(model(ModelId::A7), 0.2) ==
        Approx(-population_ccc(model(ModelId::A7), 0.8)).epsilon(1e-8));
}

TEST_CASE("estimated curves") {
  const auto grid = ccc_grid(0.0001, 0.9999, 500);
  const auto null = estimate_ccc_curve(model(ModelId::Null), grid, 400, 100, 100, 3, false, 2);
  REQUIRE(null.values.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(null.values[i]) <= 4.0 * null.standard_errors[i] + 1e-12);
  }
  const auto a1 = estimate_ccc_curve(model(ModelId::A1), grid, 400, 100, 100, 3, false, 2);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(a1.values[i] >= -4.0 * a1.standard_errors[i]);
  }
  const auto a7 = estimate_ccc_curve(model(ModelId::A7), grid, 400, 100, 100, 3, false, 2);
  for (double p : {0.1, 0.25, 0.75, 0.9}) {
    const auto i = static_cast<std::size_t>(std::lround((p - 0.0001) / (0.9998 / 499)));
    const double pop = population_ccc(model(ModelId::A7), grid[i]);
    CHECK(a7.values[i] * pop > 0.0);
    CHECK(std::abs(a7.values[i] - pop) < 0.15 + 4 * a7.standard_errors[i]);
  }
  const auto again = estimate_ccc_curve(model(ModelId::A7), grid, 400, 100, 100, 3, false, 1);
  CHECK(again.values == a7.values);
  check_error(ErrorCode::ModelNotFullySpecified, [&] {
    estimate_ccc_curve(model(ModelId::A13), grid, 10, 10, 10, 1, true);
  });
}
