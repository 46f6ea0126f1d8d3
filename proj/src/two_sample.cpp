#include "ccc/two_sample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include "ccc/error.hpp"

namespace ccc {

Sample::Sample(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) {
    throw Error(ErrorCode::EmptySample, "sample '" + label_ + "' has no values");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::NonFiniteValue, "sample '" + label_ + "' contains a non-finite value");
    }
  }
  std::sort(values_.begin(), values_.end());
}

TwoSampleData::TwoSampleData(Sample x, Sample y, std::span<const std::uint8_t> is_x,
                             TiesApplied ties)
    : x_(std::move(x)), y_(std::move(y)), ties_(ties) {
  const int total = static_cast<int>(is_x.size());
  s_.resize(total);
  t_.resize(total);
  int s = 0;
  for (int i = 0; i < total; ++i) {
    if (is_x[i]) {
      ++s;
      r_.push_back(i + 1);
    }
    s_[i] = s;
    t_[i] = i + 1 - s;
  }
  m_ = s;
  n_ = total - s;
  eta_ = std::sqrt(static_cast<double>(m_) * n_ / total);
}

TwoSampleData TwoSampleData::from_interleaving(std::span<const std::uint8_t> is_x) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < is_x.size(); ++i) {
    (is_x[i] ? xs : ys).push_back(static_cast<double>(i + 1));
  }
  Sample x(std::move(xs), "x");
  Sample y(std::move(ys), "y");
  return TwoSampleData(std::move(x), std::move(y), is_x, TiesApplied::None);
}

TwoSampleData TwoSampleData::swapped() const {
  std::vector<std::uint8_t> flipped(size());
  for (int i = 0; i < size(); ++i) {
    const int prev = i == 0 ? 0 : s_[i - 1];
    flipped[i] = s_[i] == prev ? 1 : 0;
  }
  return TwoSampleData(y_, x_, flipped, ties_);
}

namespace {

struct Tagged {
  double value;
  std::uint8_t is_x;
};

std::vector<Tagged> pool(std::span<const double> x, std::span<const double> y) {
  std::vector<Tagged> pooled;
  pooled.reserve(x.size() + y.size());
  for (double v : x) pooled.push_back({v, 1});
  for (double v : y) pooled.push_back({v, 0});
  std::sort(pooled.begin(), pooled.end(),
            [](const Tagged& a, const Tagged& b) { return a.value < b.value; });
  return pooled;
}

bool has_ties(const std::vector<Tagged>& pooled) {
  for (std::size_t i = 1; i < pooled.size(); ++i) {
    if (pooled[i].value == pooled[i - 1].value) return true;
  }
  return false;
}

double min_nonzero_gap(const std::vector<Tagged>& pooled) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < pooled.size(); ++i) {
    const double d = pooled[i].value - pooled[i - 1].value;
    if (d > 0.0) gap = std::min(gap, d);
  }
  return gap;
}

}  // namespace

TwoSampleData build_two_sample(std::vector<double> x, std::vector<double> y, TiePolicy policy) {
  Sample xs(std::move(x), "x");
  Sample ys(std::move(y), "y");

  auto pooled = pool(xs.values(), ys.values());
  TiesApplied applied = TiesApplied::None;
  if (has_ties(pooled)) {
    if (policy.handling == TieHandling::Error) {
      throw Error(ErrorCode::TiesPresent,
                  "duplicate values present; rerun with the jitter tie policy");
    }
    double gap = min_nonzero_gap(pooled);
    if (!std::isfinite(gap)) gap = 1.0;  // every value identical
    std::mt19937_64 rng(policy.seed);
    std::uniform_real_distribution<double> noise(-0.25 * gap, 0.25 * gap);
    std::vector<double> jx;
    std::vector<double> jy;
    do {
      jx.assign(xs.values().begin(), xs.values().end());
      jy.assign(ys.values().begin(), ys.values().end());
      for (double& v : jx) v += noise(rng);
      for (double& v : jy) v += noise(rng);
      pooled = pool(jx, jy);
    } while (has_ties(pooled));
    xs = Sample(std::move(jx), "x");
    ys = Sample(std::move(jy), "y");
    applied = TiesApplied::Jitter;
  }

  std::vector<std::uint8_t> is_x(pooled.size());
  std::transform(pooled.begin(), pooled.end(), is_x.begin(),
                 [](const Tagged& t) { return t.is_x; });
  return TwoSampleData(std::move(xs), std::move(ys), is_x, applied);
}

}  // namespace ccc
