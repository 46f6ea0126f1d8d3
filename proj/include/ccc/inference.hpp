#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccc/monte_carlo.hpp"
#include "ccc/process.hpp"
#include "ccc/two_sample.hpp"

namespace ccc {

enum class Statistic { Max, AD };

std::string_view to_string(Statistic statistic);
Statistic statistic_from_string(std::string_view name);

/// max_j |bar_j|, the B-plot sup statistic.
double max_statistic(const BarSeries& series);
double max_statistic(std::span<const double> bar_values);

/// Rank form of the Anderson-Darling type integral of the squared weighted process:
///   eta_N { sum_{k=1}^{N-1} (S_k/m - T_k/n)^2 log[(k+1)(N-k+1) / (k(N-k))] }^{1/2}
double ad_statistic(const TwoSampleData& data);

double statistic_value(const TwoSampleData& data, Statistic statistic);

/// Smallest order statistic index (1-based) treated as the upper (1 - alpha)
/// quantile: ceil(B (1 - alpha)).
std::size_t upper_quantile_index(std::size_t replicates, double alpha);
/// floor(B q), clamped to at least 1.
std::size_t lower_quantile_index(std::size_t replicates, double q);

/// Sorted null statistics for both global tests from one replicate stream.
struct NullDistribution {
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<double> max_values;  // ascending
  std::vector<double> ad_values;   // ascending

  const std::vector<double>& values(Statistic statistic) const {
    return statistic == Statistic::Max ? max_values : ad_values;
  }
  std::size_t replicates() const { return max_values.size(); }
  double critical_value(Statistic statistic, double alpha) const;
  /// #{null replicates with statistic >= value}
  std::size_t count_at_least(Statistic statistic, double value) const;
};

/// Simulates `replicates` pooled interleavings under F = G. Deterministic in
/// (m, n, replicates, seed, law) for any worker count.
NullDistribution simulate_null(int m, int n, int replicates, std::uint64_t seed,
                               NullLaw law = NullLaw::Uniform, unsigned workers = 0);

/// Conservative empirical (1 - alpha) quantile of the null law of `statistic`.
/// Errors: InvalidAlpha, TooFewReplicates (< 1000), SampleTooSmall (m or n < 2).
double null_critical_value(int m, int n, Statistic statistic, double alpha, int replicates,
                           std::uint64_t seed, unsigned workers = 0);

enum class Decision { Reject, Retain };

struct TestReport {
  Statistic statistic = Statistic::Max;
  double value = 0.0;
  double critical_value = 0.0;
  double alpha = 0.05;
  double p_value = 1.0;
  /// Null replicates at or above the observed value.
  std::size_t exceedances = 0;
  int mc_replicates = 0;
  std::uint64_t seed = 0;
  Decision decision = Decision::Retain;
  int grid_dimension = 0;

  bool operator==(const TestReport&) const = default;
};

/// p_value = (1 + exceedances) / (replicates + 1); reject iff value >= critical value.
TestReport run_test(const TwoSampleData& data, Statistic statistic, double alpha, int replicates,
                    std::uint64_t seed, unsigned workers = 0);

/// Same, reusing an already simulated null distribution of matching (m, n).
TestReport run_test(const TwoSampleData& data, Statistic statistic, double alpha,
                    const NullDistribution& null);

/// Critical values keyed by (m, n, statistic, D(N), replicates, seed, alpha).
/// Optionally persisted as JSON in `directory`; safe to share across threads.
class CriticalValueCache {
 public:
  CriticalValueCache() = default;
  explicit CriticalValueCache(std::filesystem::path directory);

  double get(int m, int n, Statistic statistic, double alpha, int replicates, std::uint64_t seed,
             unsigned workers = 0);
  std::size_t size() const;
  /// Number of simulations actually run (cache misses).
  std::size_t misses() const;

  static std::string key(int m, int n, Statistic statistic, double alpha, int replicates,
                         std::uint64_t seed);

 private:
  void load();
  void store() const;

  std::optional<std::filesystem::path> directory_;
  std::map<std::string, double> values_;
  std::size_t misses_ = 0;
  mutable std::mutex mutex_;
};

// ---------------------------------------------------------------------------
// Local acceptance regions over the ten deciles of H_N.

inline constexpr int kDeciles = 10;

/// Decile (1..10) containing p = j / denominator, with I_1 = [0, 0.1] and
/// I_k = ((k-1)/10, k/10].
int decile_of(long long j, long long denominator);

enum class RegionFlag { Inside, Below, Above, Both, Empty };
std::string_view to_string(RegionFlag flag);

struct DecileRegion {
  int index = 0;           // k = 1..10
  int first_point = 0;     // grid indices j in this decile, 1-based; 0 when empty
  int last_point = 0;
  double lower = 0.0;      // l^-(N, alpha/2, I_k)
  double upper = 0.0;      // l^+(N, alpha/2, I_k)
  double observed_min = 0.0;
  double observed_max = 0.0;
  RegionFlag flag = RegionFlag::Empty;

  bool empty() const { return flag == RegionFlag::Empty; }
  bool operator==(const DecileRegion&) const = default;
};

struct AcceptanceRegions {
  double alpha = 0.05;
  int mc_replicates = 0;
  std::uint64_t seed = 0;
  int grid_dimension = 0;
  std::vector<DecileRegion> deciles;

  std::vector<int> empty_deciles() const;
  bool operator==(const AcceptanceRegions&) const = default;
};

/// Null per-decile extremes of the bars: sorted L^- and L^+ for each decile.
struct DecileExtremes {
  int m = 0;
  int n = 0;
  int grid_dimension = 0;
  std::vector<int> first_point;  // per decile, 0 if empty
  std::vector<int> last_point;
  std::vector<std::vector<double>> minima;  // ascending, per decile
  std::vector<std::vector<double>> maxima;

  std::size_t replicates() const;
  /// Barriers (l^-, l^+) at level alpha for decile k (1-based).
  std::pair<double, double> barriers(int decile, double alpha) const;
};

DecileExtremes simulate_decile_extremes(int m, int n, int replicates, std::uint64_t seed,
                                        unsigned workers = 0);

/// Builds the regions for `data` from a matching null simulation.
AcceptanceRegions acceptance_regions(const BarSeries& observed, double alpha,
                                     const DecileExtremes& null, std::uint64_t seed);

/// Errors: InvalidAlpha, TooFewReplicates, SampleTooSmall. Empty deciles are
/// reported through RegionFlag::Empty rather than thrown.
AcceptanceRegions acceptance_regions(const TwoSampleData& data, double alpha, int replicates,
                                     std::uint64_t seed, unsigned workers = 0);

}  // namespace ccc
