#include "ccc/moments.hpp"

#include <cmath>
#include <string>

#include "ccc/error.hpp"
#include "ccc/numeric.hpp"
#include "ccc/process.hpp"
#include "ccc/two_sample.hpp"

namespace ccc {

namespace {

void require_half_open(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorCode::POutOfRange, "p must lie in (0, 1]");
}

void require_half_open(Rational p) {
  if (!(p > Rational(0) && p <= Rational(1))) throw Error(ErrorCode::POutOfRange, "p must lie in (0, 1]");
}

void require_sizes(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::EmptySample, "sample sizes must be positive");
}

std::int64_t ceil_times(Rational p, std::int64_t count) {
  return detail::ceil_div(p.numerator() * count, p.denominator());
}

double eta_squared(int m, int n) { return static_cast<double>(m) * n / (m + n); }

}  // namespace

double exact_mean_u(int m, int n, double p) {
  require_sizes(m, n);
  require_half_open(p);
  const auto k = static_cast<double>(detail::ceil_scaled(p, m));
  return std::sqrt(eta_squared(m, n)) * (p - k / (m + 1.0));
}

double exact_mean_p(int m, int n, double p) {
  require_sizes(m, n);
  require_half_open(p);
  return 0.0;
}

double exact_var_u(int m, int n, double p) {
  require_sizes(m, n);
  require_half_open(p);
  const auto k = static_cast<double>(detail::ceil_scaled(p, m));
  const double total = m + n;
  return eta_squared(m, n) * k * (m - k + 1.0) * (total + 1.0) /
         ((m + 1.0) * (m + 1.0) * (m + 2.0) * n);
}

double exact_var_p(int m, int n, double p) {
  require_sizes(m, n);
  require_half_open(p);
  const int total = m + n;
  const auto i = static_cast<double>(detail::ceil_scaled(p, total));
  if (total < 2) return 0.0;
  return eta_squared(m, n) * i * (total - i) / (static_cast<double>(m) * n * (total - 1.0));
}

double delta_curve(int m, int n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::POutOfRange, "p must lie in (0, 1)");
  return (exact_var_u(m, n, p) - exact_var_p(m, n, p)) / (p * (1.0 - p));
}

Rational exact_mean_u_scaled(int m, int n, Rational p) {
  require_sizes(m, n);
  require_half_open(p);
  return p - Rational(ceil_times(p, m), m + 1);
}

Rational exact_var_u_scaled(int m, int n, Rational p) {
  require_sizes(m, n);
  require_half_open(p);
  const std::int64_t k = ceil_times(p, m);
  const std::int64_t total = m + n;
  return Rational(k * (m - k + 1) * (total + 1),
                  static_cast<std::int64_t>(m + 1) * (m + 1) * (m + 2) * n);
}

Rational exact_var_p_scaled(int m, int n, Rational p) {
  require_sizes(m, n);
  require_half_open(p);
  const std::int64_t total = m + n;
  const std::int64_t i = ceil_times(p, total);
  if (total < 2) return Rational(0);
  return Rational(i * (total - i), static_cast<std::int64_t>(m) * n * (total - 1));
}

double MomentCurve::operator()(double p) const {
  if (process_ == ProcessKind::UHat) {
    return kind_ == MomentKind::Mean ? exact_mean_u(m_, n_, p) : exact_var_u(m_, n_, p);
  }
  return kind_ == MomentKind::Mean ? exact_mean_p(m_, n_, p) : exact_var_p(m_, n_, p);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

namespace {

// Visits every m-subset of {0..N-1} as a pooled interleaving.
template <class Visit>
void for_each_configuration(int m, int n, Visit&& visit) {
  const int total = m + n;
  if (total > 62) throw Error(ErrorCode::TooLargeToEnumerate, "pooled size above 62");
  const std::uint64_t count = binomial(total, m);
  if (count > kEnumerationLimit) {
    throw Error(ErrorCode::TooLargeToEnumerate,
                "C(" + std::to_string(total) + ", " + std::to_string(m) + ") = " +
                    std::to_string(count) + " configurations");
  }
  std::vector<std::uint8_t> is_x(total);
  std::uint64_t mask = (m == 0) ? 0 : ((std::uint64_t{1} << m) - 1);
  const std::uint64_t end = std::uint64_t{1} << total;
  while (mask < end) {
    for (int i = 0; i < total; ++i) is_x[i] = (mask >> i) & 1U;
    visit(std::span<const std::uint8_t>(is_x));
    if (mask == 0) break;
    // Gosper's hack: next larger integer with the same popcount.
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

struct Accumulator {
  // Integer sums of the scaled numerators.
  std::int64_t p_sum = 0;   // sum of (S n - T m)
  std::int64_t p_sq = 0;
  std::int64_t u_sum = 0;   // sum of (R_k - k)
  std::int64_t u_sq = 0;
  // Welford for the floating processes.
  double p_mean = 0.0, p_m2 = 0.0;
  double u_mean = 0.0, u_m2 = 0.0;
  std::int64_t count = 0;

  void add_float(double p_value, double u_value) {
    ++count;
    const double dp = p_value - p_mean;
    p_mean += dp / count;
    p_m2 += dp * (p_value - p_mean);
    const double du = u_value - u_mean;
    u_mean += du / count;
    u_m2 += du * (u_value - u_mean);
  }
};

}  // namespace

std::vector<EnumeratedMoments> enumerate_null_moments(int m, int n, std::span<const Rational> ps) {
  require_sizes(m, n);
  for (const auto& p : ps) require_half_open(p);
  const int total = m + n;
  std::vector<Accumulator> acc(ps.size());
  std::vector<double> p_double(ps.size());
  for (std::size_t j = 0; j < ps.size(); ++j) {
    p_double[j] = static_cast<double>(ps[j].numerator()) / static_cast<double>(ps[j].denominator());
  }

  for_each_configuration(m, n, [&](std::span<const std::uint8_t> is_x) {
    const auto data = TwoSampleData::from_interleaving(is_x);
    const auto s = data.s_ranks();
    const auto r = data.r_ranks();
    for (std::size_t j = 0; j < ps.size(); ++j) {
      const std::int64_t i = ceil_times(ps[j], total);
      const std::int64_t p_num = static_cast<std::int64_t>(s[i - 1]) * n -
                                 static_cast<std::int64_t>(i - s[i - 1]) * m;
      const std::int64_t k = ceil_times(ps[j], m);
      const std::int64_t u_num = r[k - 1] - k;
      acc[j].p_sum += p_num;
      acc[j].p_sq += p_num * p_num;
      acc[j].u_sum += u_num;
      acc[j].u_sq += u_num * u_num;
      acc[j].add_float(process_p_hat(data, p_double[j]), process_u_hat(data, p_double[j]));
    }
  });

  const std::int64_t mn = static_cast<std::int64_t>(m) * n;
  std::vector<EnumeratedMoments> out;
  out.reserve(ps.size());
  for (std::size_t j = 0; j < ps.size(); ++j) {
    const auto& a = acc[j];
    const std::int64_t count = a.count;
    EnumeratedMoments em;
    em.p = ps[j];
    em.mean_p = a.p_mean;
    em.var_p = a.p_m2 / count;
    em.mean_u = a.u_mean;
    em.var_u = a.u_m2 / count;
    // P: value / eta = (S n - T m)/(mn)
    const Rational p_first(a.p_sum, count * mn);
    const Rational p_second = Rational(a.p_sq, count) / Rational(mn * mn);
    em.mean_p_scaled = p_first;
    em.var_p_scaled = p_second - p_first * p_first;
    // U: value / eta = p - (R_k - k)/n
    const Rational u_first(a.u_sum, count * n);
    const Rational u_second = Rational(a.u_sq, count) / Rational(static_cast<std::int64_t>(n) * n);
    em.mean_u_scaled = ps[j] - u_first;
    em.var_u_scaled = u_second - u_first * u_first;
    out.push_back(em);
  }
  return out;
}

std::vector<Rational> enumerate_s_rank_law(int m, int n, int k) {
  require_sizes(m, n);
  if (k < 1 || k > m + n) throw Error(ErrorCode::InvalidArgument, "k must lie in 1..N");
  std::vector<std::int64_t> counts(m + 1, 0);
  std::int64_t total = 0;
  for_each_configuration(m, n, [&](std::span<const std::uint8_t> is_x) {
    int s = 0;
    for (int i = 0; i < k; ++i) s += is_x[i];
    ++counts[s];
    ++total;
  });
  std::vector<Rational> pmf;
  pmf.reserve(counts.size());
  for (auto c : counts) pmf.emplace_back(c, total);
  return pmf;
}

std::vector<Rational> hypergeometric_pmf(int total, int draws, int successes) {
  std::vector<Rational> pmf;
  const auto denom = static_cast<std::int64_t>(binomial(total, draws));
  for (int s = 0; s <= successes; ++s) {
    const auto num = static_cast<std::int64_t>(binomial(successes, s) *
                                               binomial(total - successes, draws - s));
    pmf.emplace_back(num, denom);
  }
  return pmf;
}

}  // namespace ccc
