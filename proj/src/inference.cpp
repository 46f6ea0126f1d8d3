#include "ccc/inference.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "ccc/error.hpp"
#include "ccc/numeric.hpp"

namespace ccc {

std::string_view to_string(Statistic statistic) {
  return statistic == Statistic::Max ? "max" : "ad";
}

Statistic statistic_from_string(std::string_view name) {
  if (name == "max") return Statistic::Max;
  if (name == "ad") return Statistic::AD;
  throw Error(ErrorCode::InvalidArgument, "unknown statistic '" + std::string(name) + "'");
}

double max_statistic(std::span<const double> bar_values) {
  double best = 0.0;
  for (double b : bar_values) best = std::max(best, std::abs(b));
  return best;
}

double max_statistic(const BarSeries& series) { return max_statistic(series.values); }

double ad_statistic(const TwoSampleData& data) {
  const int total = data.size();
  const double m = data.m();
  const double n = data.n();
  const auto s = data.s_ranks();
  const auto t = data.t_ranks();
  double sum = 0.0;
  for (int k = 1; k < total; ++k) {
    const double diff = s[k - 1] / m - t[k - 1] / n;
    if (diff == 0.0) continue;
    const double ratio = (static_cast<double>(k + 1) * (total - k + 1)) /
                         (static_cast<double>(k) * (total - k));
    sum += diff * diff * std::log(ratio);
  }
  return data.eta() * std::sqrt(sum);
}

double statistic_value(const TwoSampleData& data, Statistic statistic) {
  if (statistic == Statistic::Max) return max_statistic(bar_values(data, grid_for(data.size())));
  return ad_statistic(data);
}

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::InvalidAlpha, "alpha must lie in (0, 1)");
  }
}

void require_replicates(int replicates) {
  if (replicates < 1000) {
    throw Error(ErrorCode::TooFewReplicates, "at least 1000 Monte Carlo replicates are required");
  }
}

void require_sizes(int m, int n) {
  if (m < 2 || n < 2) throw Error(ErrorCode::SampleTooSmall, "both samples need at least 2 values");
}

}  // namespace

std::size_t upper_quantile_index(std::size_t replicates, double alpha) {
  const long long idx = detail::ceil_scaled(1.0 - alpha, static_cast<long long>(replicates));
  return static_cast<std::size_t>(std::clamp<long long>(idx, 1, replicates));
}

std::size_t lower_quantile_index(std::size_t replicates, double q) {
  const long long idx = detail::floor_scaled(q, static_cast<long long>(replicates));
  return static_cast<std::size_t>(std::clamp<long long>(idx, 1, replicates));
}

double NullDistribution::critical_value(Statistic statistic, double alpha) const {
  require_alpha(alpha);
  const auto& v = values(statistic);
  return v[upper_quantile_index(v.size(), alpha) - 1];
}

std::size_t NullDistribution::count_at_least(Statistic statistic, double value) const {
  const auto& v = values(statistic);
  return static_cast<std::size_t>(v.end() - std::lower_bound(v.begin(), v.end(), value));
}

NullDistribution simulate_null(int m, int n, int replicates, std::uint64_t seed, NullLaw law,
                               unsigned workers) {
  require_sizes(m, n);
  if (replicates < 1) throw Error(ErrorCode::TooFewReplicates, "replicates must be positive");
  NullDistribution out;
  out.m = m;
  out.n = n;
  out.seed = seed;
  out.max_values.resize(replicates);
  out.ad_values.resize(replicates);
  const DyadicGrid grid = grid_for(m + n);
  parallel_for(
      static_cast<std::size_t>(replicates),
      [&](std::size_t r) {
        Rng rng = replicate_rng(seed, r);
        const auto pattern = null_interleaving(m, n, rng, law);
        const auto data = TwoSampleData::from_interleaving(pattern);
        out.max_values[r] = max_statistic(bar_values(data, grid));
        out.ad_values[r] = ad_statistic(data);
      },
      workers);
  std::sort(out.max_values.begin(), out.max_values.end());
  std::sort(out.ad_values.begin(), out.ad_values.end());
  return out;
}

double null_critical_value(int m, int n, Statistic statistic, double alpha, int replicates,
                           std::uint64_t seed, unsigned workers) {
  require_alpha(alpha);
  require_replicates(replicates);
  require_sizes(m, n);
  return simulate_null(m, n, replicates, seed, NullLaw::Uniform, workers)
      .critical_value(statistic, alpha);
}

TestReport run_test(const TwoSampleData& data, Statistic statistic, double alpha,
                    const NullDistribution& null) {
  require_alpha(alpha);
  if (null.m != data.m() || null.n != data.n()) {
    throw Error(ErrorCode::InvalidArgument, "null distribution was simulated for other sizes");
  }
  TestReport report;
  report.statistic = statistic;
  report.value = statistic_value(data, statistic);
  report.critical_value = null.critical_value(statistic, alpha);
  report.alpha = alpha;
  report.exceedances = null.count_at_least(statistic, report.value);
  report.mc_replicates = static_cast<int>(null.replicates());
  report.p_value =
      static_cast<double>(1 + report.exceedances) / static_cast<double>(null.replicates() + 1);
  report.seed = null.seed;
  report.decision = report.value >= report.critical_value ? Decision::Reject : Decision::Retain;
  report.grid_dimension = grid_for(data.size()).dimension();
  return report;
}

TestReport run_test(const TwoSampleData& data, Statistic statistic, double alpha, int replicates,
                    std::uint64_t seed, unsigned workers) {
  require_alpha(alpha);
  require_replicates(replicates);
  require_sizes(data.m(), data.n());
  const auto null = simulate_null(data.m(), data.n(), replicates, seed, NullLaw::Uniform, workers);
  return run_test(data, statistic, alpha, null);
}

// ---------------------------------------------------------------------------

CriticalValueCache::CriticalValueCache(std::filesystem::path directory)
    : directory_(std::move(directory)) {
  load();
}

std::string CriticalValueCache::key(int m, int n, Statistic statistic, double alpha,
                                    int replicates, std::uint64_t seed) {
  std::ostringstream os;
  os.precision(17);
  os << "m=" << m << ";n=" << n << ";stat=" << to_string(statistic)
     << ";D=" << grid_for(m + n).dimension() << ";reps=" << replicates << ";seed=" << seed
     << ";alpha=" << alpha;
  return os.str();
}

double CriticalValueCache::get(int m, int n, Statistic statistic, double alpha, int replicates,
                               std::uint64_t seed, unsigned workers) {
  const std::string k = key(m, n, statistic, alpha, replicates, seed);
  {
    std::lock_guard lock(mutex_);
    if (auto it = values_.find(k); it != values_.end()) return it->second;
  }
  require_alpha(alpha);
  require_replicates(replicates);
  // Both statistics come from the same stream; store both.
  const auto null = simulate_null(m, n, replicates, seed, NullLaw::Uniform, workers);
  std::lock_guard lock(mutex_);
  ++misses_;
  for (Statistic s : {Statistic::Max, Statistic::AD}) {
    values_[key(m, n, s, alpha, replicates, seed)] = null.critical_value(s, alpha);
  }
  store();
  return values_.at(k);
}

std::size_t CriticalValueCache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

std::size_t CriticalValueCache::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

void CriticalValueCache::load() {
  if (!directory_) return;
  const auto path = *directory_ / "critical_values.json";
  std::ifstream in(path);
  if (!in) return;
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& [k, v] : j.at("values").items()) values_[k] = v.get<double>();
  } catch (const nlohmann::json::exception&) {
    values_.clear();  // unreadable cache is rebuilt
  }
}

void CriticalValueCache::store() const {
  if (!directory_) return;
  std::error_code ec;
  std::filesystem::create_directories(*directory_, ec);
  nlohmann::json j;
  j["version"] = 1;
  j["values"] = values_;
  std::ofstream out(*directory_ / "critical_values.json");
  if (!out) throw Error(ErrorCode::WriteError, "cannot write critical value cache");
  out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

int decile_of(long long j, long long denominator) {
  return static_cast<int>(std::max<long long>(1, detail::ceil_div(10 * j, denominator)));
}

std::string_view to_string(RegionFlag flag) {
  switch (flag) {
    case RegionFlag::Inside: return "inside";
    case RegionFlag::Below: return "below";
    case RegionFlag::Above: return "above";
    case RegionFlag::Both: return "both";
    case RegionFlag::Empty: return "empty";
  }
  return "unknown";
}

std::vector<int> AcceptanceRegions::empty_deciles() const {
  std::vector<int> out;
  for (const auto& d : deciles) {
    if (d.empty()) out.push_back(d.index);
  }
  return out;
}

std::size_t DecileExtremes::replicates() const {
  for (const auto& v : minima) {
    if (!v.empty()) return v.size();
  }
  return 0;
}

std::pair<double, double> DecileExtremes::barriers(int decile, double alpha) const {
  require_alpha(alpha);
  const auto& lo = minima.at(decile - 1);
  const auto& hi = maxima.at(decile - 1);
  if (lo.empty()) throw Error(ErrorCode::InvalidArgument, "decile has no grid points");
  const double lower = lo[lower_quantile_index(lo.size(), alpha / 2.0) - 1];
  const double upper = hi[upper_quantile_index(hi.size(), alpha / 2.0) - 1];
  return {lower, upper};
}

namespace {

struct DecileLayout {
  std::vector<int> first;
  std::vector<int> last;
};

DecileLayout layout_for(const DyadicGrid& grid) {
  DecileLayout layout{std::vector<int>(kDeciles, 0), std::vector<int>(kDeciles, 0)};
  for (int j = 1; j <= grid.dimension(); ++j) {
    const int k = decile_of(j, grid.denominator()) - 1;
    if (layout.first[k] == 0) layout.first[k] = j;
    layout.last[k] = j;
  }
  return layout;
}

}  // namespace

DecileExtremes simulate_decile_extremes(int m, int n, int replicates, std::uint64_t seed,
                                        unsigned workers) {
  require_sizes(m, n);
  require_replicates(replicates);
  const DyadicGrid grid = grid_for(m + n);
  const DecileLayout layout = layout_for(grid);

  DecileExtremes out;
  out.m = m;
  out.n = n;
  out.grid_dimension = grid.dimension();
  out.first_point = layout.first;
  out.last_point = layout.last;
  out.minima.resize(kDeciles);
  out.maxima.resize(kDeciles);
  for (int k = 0; k < kDeciles; ++k) {
    if (layout.first[k] != 0) {
      out.minima[k].resize(replicates);
      out.maxima[k].resize(replicates);
    }
  }
  parallel_for(
      static_cast<std::size_t>(replicates),
      [&](std::size_t r) {
        Rng rng = replicate_rng(seed, r);
        const auto pattern = null_interleaving(m, n, rng);
        const auto values = bar_values(TwoSampleData::from_interleaving(pattern), grid);
        for (int k = 0; k < kDeciles; ++k) {
          if (layout.first[k] == 0) continue;
          const auto first = values.begin() + (layout.first[k] - 1);
          const auto last = values.begin() + layout.last[k];
          const auto [lo, hi] = std::minmax_element(first, last);
          out.minima[k][r] = *lo;
          out.maxima[k][r] = *hi;
        }
      },
      workers);
  for (int k = 0; k < kDeciles; ++k) {
    std::sort(out.minima[k].begin(), out.minima[k].end());
    std::sort(out.maxima[k].begin(), out.maxima[k].end());
  }
  return out;
}

AcceptanceRegions acceptance_regions(const BarSeries& observed, double alpha,
                                     const DecileExtremes& null, std::uint64_t seed) {
  require_alpha(alpha);
  if (null.m != observed.m || null.n != observed.n) {
    throw Error(ErrorCode::InvalidArgument, "null extremes were simulated for other sizes");
  }
  AcceptanceRegions regions;
  regions.alpha = alpha;
  regions.mc_replicates = static_cast<int>(null.replicates());
  regions.seed = seed;
  regions.grid_dimension = observed.grid.dimension();
  for (int k = 1; k <= kDeciles; ++k) {
    DecileRegion d;
    d.index = k;
    d.first_point = null.first_point[k - 1];
    d.last_point = null.last_point[k - 1];
    if (d.first_point == 0) {
      d.flag = RegionFlag::Empty;
      regions.deciles.push_back(d);
      continue;
    }
    std::tie(d.lower, d.upper) = null.barriers(k, alpha);
    const auto first = observed.values.begin() + (d.first_point - 1);
    const auto last = observed.values.begin() + d.last_point;
    const auto [lo, hi] = std::minmax_element(first, last);
    d.observed_min = *lo;
    d.observed_max = *hi;
    const bool below = d.observed_min < d.lower;
    const bool above = d.observed_max > d.upper;
    d.flag = below && above ? RegionFlag::Both
             : below        ? RegionFlag::Below
             : above        ? RegionFlag::Above
                            : RegionFlag::Inside;
    regions.deciles.push_back(d);
  }
  return regions;
}

AcceptanceRegions acceptance_regions(const TwoSampleData& data, double alpha, int replicates,
                                     std::uint64_t seed, unsigned workers) {
  require_alpha(alpha);
  const auto observed = bars(data);
  const auto null = simulate_decile_extremes(data.m(), data.n(), replicates, seed, workers);
  return acceptance_regions(observed, alpha, null, seed);
}

}  // namespace ccc
