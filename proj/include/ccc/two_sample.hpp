#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ccc {

/// One univariate sample, kept sorted ascending. Only ranks matter downstream,
/// so the original order is discarded.
class Sample {
 public:
  Sample() = default;
  /// Throws EmptySample / NonFiniteValue.
  explicit Sample(std::vector<double> values, std::string label = {});

  std::span<const double> values() const noexcept { return values_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
  std::string label_;
};

enum class TieHandling { Error, Jitter };

struct TiePolicy {
  TieHandling handling = TieHandling::Error;
  std::uint64_t seed = 0;  // only used by Jitter

  static TiePolicy error() { return {}; }
  static TiePolicy jitter(std::uint64_t seed) { return {TieHandling::Jitter, seed}; }
};

/// What build_two_sample actually did about ties.
enum class TiesApplied { None, Jitter };

/// A validated pair of samples together with their pooled relative ranks.
///
/// With Z_{1:N} <= ... <= Z_{N:N} the pooled order statistics:
///   S_i = #{X <= Z_{i:N}},  T_i = #{Y <= Z_{i:N}} = i - S_i,  i = 1..N
///   R_k = pooled rank of X_{k:m},                               k = 1..m
/// Rank vectors are stored 0-based (s_ranks()[i-1] == S_i).
class TwoSampleData {
 public:
  /// Builds the rank structure from a pooled interleaving: is_x[i] says whether
  /// the i-th smallest pooled observation came from the first sample. The
  /// stored sample values are the pooled positions 1..N, which is rank-equivalent
  /// to any data with that interleaving.
  static TwoSampleData from_interleaving(std::span<const std::uint8_t> is_x);

  const Sample& x() const noexcept { return x_; }
  const Sample& y() const noexcept { return y_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int size() const noexcept { return m_ + n_; }
  double lambda() const noexcept { return static_cast<double>(m_) / size(); }
  /// sqrt(mn/N)
  double eta() const noexcept { return eta_; }

  std::span<const int> s_ranks() const noexcept { return s_; }
  std::span<const int> t_ranks() const noexcept { return t_; }
  std::span<const int> r_ranks() const noexcept { return r_; }
  TiesApplied ties_applied() const noexcept { return ties_; }

  /// Swapped roles of the two samples.
  TwoSampleData swapped() const;

 private:
  friend TwoSampleData build_two_sample(std::vector<double>, std::vector<double>, TiePolicy);
  TwoSampleData(Sample x, Sample y, std::span<const std::uint8_t> is_x, TiesApplied ties);

  Sample x_;
  Sample y_;
  int m_ = 0;
  int n_ = 0;
  double eta_ = 0.0;
  std::vector<int> s_;
  std::vector<int> t_;
  std::vector<int> r_;
  TiesApplied ties_ = TiesApplied::None;
};

/// Validates both samples and computes the pooled relative ranks.
/// Errors: EmptySample, NonFiniteValue, TiesPresent (under TiePolicy::error()).
/// With a jitter policy every value is perturbed by seeded noise uniform on
/// +-1/4 of the minimal nonzero pooled gap, which breaks all exact duplicates
/// without reordering distinct values.
TwoSampleData build_two_sample(std::vector<double> x, std::vector<double> y,
                               TiePolicy policy = TiePolicy::error());

}  // namespace ccc
