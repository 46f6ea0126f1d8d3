#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ccc/inference.hpp"
#include "ccc/models.hpp"

namespace ccc {

/// A user-registered competitor applied alongside Max and AD.
struct ExtraStatistic {
  std::string name;
  std::function<double(const TwoSampleData&)> evaluate;
  double critical_value;  // reject iff statistic >= critical_value
};

struct PowerConfig {
  double alpha = 0.05;
  int replicates = 10000;
  std::uint64_t seed = 1;
  /// Null simulation used for the critical values.
  int critical_replicates = 100000;
  std::uint64_t critical_seed = 20240601;
  unsigned workers = 0;
};

struct PowerRow {
  ModelId model = ModelId::Null;
  int m = 0;
  int n = 0;
  double alpha = 0.05;
  int replicates = 0;
  double power_max = 0.0;
  double power_ad = 0.0;
  double se_max = 0.0;  // sqrt(p(1-p)/replicates) for each power
  double se_ad = 0.0;
  // Critical value provenance.
  double critical_max = 0.0;
  double critical_ad = 0.0;
  int critical_replicates = 0;
  std::uint64_t critical_seed = 0;
  int grid_dimension = 0;
  std::vector<std::pair<std::string, double>> extra_powers;

  /// Larger of the two standard errors.
  double se() const { return std::max(se_max, se_ad); }
};

/// Rejection frequencies of both tests over `config.replicates` sample pairs drawn
/// from the model, using fixed critical values from `cache`.
PowerRow simulate_power(const AlternativeModel& model, int m, int n, const PowerConfig& config,
                        CriticalValueCache& cache,
                        const std::vector<ExtraStatistic>& extras = {});

/// Power rows along growing sample sizes, D(N) recomputed for each size.
std::vector<PowerRow> consistency_sweep(const AlternativeModel& model,
                                        const std::vector<std::pair<int, int>>& sizes,
                                        const PowerConfig& config, CriticalValueCache& cache);

/// CSV with header model,m,n,alpha,replicates,power_max,power_ad,se.
void write_power_csv(std::ostream& out, const std::vector<PowerRow>& rows);

}  // namespace ccc
