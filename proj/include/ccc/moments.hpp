#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/rational.hpp>

namespace ccc {

/// Exact rational arithmetic for the small-N enumeration oracle.
using Rational = boost::rational<std::int64_t>;

// Closed-form moments of the unweighted processes under F = G (continuous).
// All require 0 < p <= 1 and throw POutOfRange otherwise. Products p*m and
// p*N within rounding error of an integer count as that integer.

/// E U_N(p) = eta_N (p - ceil(pm)/(m+1))
double exact_mean_u(int m, int n, double p);
/// E P_N(p) = 0
double exact_mean_p(int m, int n, double p);
/// Var U_N(p) = eta_N^2 ceil(pm)(m - ceil(pm) + 1)(N+1) / ((m+1)^2 (m+2) n)
double exact_var_u(int m, int n, double p);
/// Var P_N(p) = eta_N^2 ceil(pN)(N - ceil(pN)) / (mn(N-1))
double exact_var_p(int m, int n, double p);

/// Delta_N(p) = (Var U_N(p) - Var P_N(p)) / (p(1-p)), 0 < p < 1.
double delta_curve(int m, int n, double p);

/// Plotting range of Delta_N.
inline constexpr double kDeltaRangeLow = 0.03;
inline constexpr double kDeltaRangeHigh = 0.97;

// Rational forms with the eta_N factors removed: mean / eta_N and var / eta_N^2.
Rational exact_mean_u_scaled(int m, int n, Rational p);
Rational exact_var_u_scaled(int m, int n, Rational p);
Rational exact_var_p_scaled(int m, int n, Rational p);

enum class ProcessKind { UHat, PHat };
enum class MomentKind { Mean, Variance };

/// One closed-form moment function of (m, n).
class MomentCurve {
 public:
  MomentCurve(int m, int n, ProcessKind process, MomentKind kind)
      : m_(m), n_(n), process_(process), kind_(kind) {}

  double operator()(double p) const;
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  ProcessKind process() const noexcept { return process_; }
  MomentKind kind() const noexcept { return kind_; }

 private:
  int m_;
  int n_;
  ProcessKind process_;
  MomentKind kind_;
};

/// Moments at one p from exhaustive enumeration.
struct EnumeratedMoments {
  Rational p;
  // Floating values of the processes themselves (eta factors included).
  double mean_p = 0.0;
  double var_p = 0.0;
  double mean_u = 0.0;
  double var_u = 0.0;
  // Exact values with eta removed: mean/eta, var/eta^2.
  Rational mean_p_scaled;
  Rational var_p_scaled;
  Rational mean_u_scaled;
  Rational var_u_scaled;
};

/// Largest C(N, m) the oracle will walk.
inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;

std::uint64_t binomial(int n, int k);

/// Walks all C(N, m) equally likely label assignments of the pooled order and
/// returns exact moments of P_N and U_N at each p. Floating values come from
/// the core process evaluators; rational values from the rank arithmetic.
/// Throws TooLargeToEnumerate above kEnumerationLimit configurations.
std::vector<EnumeratedMoments> enumerate_null_moments(int m, int n, std::span<const Rational> ps);

/// Exact law of S_k over all configurations: pmf[s] = P(S_k = s), s = 0..m.
std::vector<Rational> enumerate_s_rank_law(int m, int n, int k);

/// Hypergeometric(N, k, m) pmf: P(S = s) = C(m, s) C(N-m, k-s) / C(N, k).
std::vector<Rational> hypergeometric_pmf(int total, int draws, int successes);

}  // namespace ccc
