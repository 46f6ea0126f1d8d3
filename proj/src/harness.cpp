#include "ccc/harness.hpp"

#include <cmath>
#include <cstdio>

#include "ccc/error.hpp"

namespace ccc {

PowerRow simulate_power(const AlternativeModel& model, int m, int n, const PowerConfig& config,
                        CriticalValueCache& cache, const std::vector<ExtraStatistic>& extras) {
  if (config.replicates < 100) {
    throw Error(ErrorCode::TooFewReplicates, "power simulation needs at least 100 replicates");
  }
  const DyadicGrid grid = grid_for(m + n);
  const double crit_max = cache.get(m, n, Statistic::Max, config.alpha, config.critical_replicates,
                                    config.critical_seed, config.workers);
  const double crit_ad = cache.get(m, n, Statistic::AD, config.alpha, config.critical_replicates,
                                   config.critical_seed, config.workers);

  const std::size_t reps = static_cast<std::size_t>(config.replicates);
  const std::size_t width = 2 + extras.size();
  std::vector<std::uint8_t> rejected(reps * width, 0);
  parallel_for(
      reps,
      [&](std::size_t r) {
        Rng rng = replicate_rng(config.seed, r);
        std::vector<double> x(m);
        std::vector<double> y(n);
        sample_into(model, Side::F, x, rng);
        sample_into(model, Side::G, y, rng);
        const auto data = build_two_sample(std::move(x), std::move(y),
                                           TiePolicy::jitter(replicate_seed(~config.seed, r)));
        auto* row = &rejected[r * width];
        row[0] = max_statistic(bar_values(data, grid)) >= crit_max;
        row[1] = ad_statistic(data) >= crit_ad;
        for (std::size_t e = 0; e < extras.size(); ++e) {
          row[2 + e] = extras[e].evaluate(data) >= extras[e].critical_value;
        }
      },
      config.workers);

  std::vector<std::size_t> counts(width, 0);
  for (std::size_t r = 0; r < reps; ++r) {
    for (std::size_t c = 0; c < width; ++c) counts[c] += rejected[r * width + c];
  }
  auto freq = [&](std::size_t c) { return static_cast<double>(counts[c]) / reps; };
  auto se = [&](double p) { return std::sqrt(p * (1.0 - p) / reps); };

  PowerRow row;
  row.model = model.id;
  row.m = m;
  row.n = n;
  row.alpha = config.alpha;
  row.replicates = config.replicates;
  row.power_max = freq(0);
  row.power_ad = freq(1);
  row.se_max = se(row.power_max);
  row.se_ad = se(row.power_ad);
  row.critical_max = crit_max;
  row.critical_ad = crit_ad;
  row.critical_replicates = config.critical_replicates;
  row.critical_seed = config.critical_seed;
  row.grid_dimension = grid.dimension();
  for (std::size_t e = 0; e < extras.size(); ++e) {
    row.extra_powers.emplace_back(extras[e].name, freq(2 + e));
  }
  return row;
}

std::vector<PowerRow> consistency_sweep(const AlternativeModel& model,
                                        const std::vector<std::pair<int, int>>& sizes,
                                        const PowerConfig& config, CriticalValueCache& cache) {
  std::vector<PowerRow> rows;
  rows.reserve(sizes.size());
  for (const auto& [m, n] : sizes) rows.push_back(simulate_power(model, m, n, config, cache));
  return rows;
}

void write_power_csv(std::ostream& out, const std::vector<PowerRow>& rows) {
  out << "model,m,n,alpha,replicates,power_max,power_ad,se\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%d,%.4g,%d,%.4f,%.4f,%.4f\n",
                  std::string(to_string(r.model)).c_str(), r.m, r.n, r.alpha, r.replicates,
                  r.power_max, r.power_ad, r.se());
    out << buf;
  }
}

}  // namespace ccc
