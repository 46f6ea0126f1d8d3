#include <cmath>
#include <vector>

#include "support.hpp"

#include "ccc/moments.hpp"

using namespace ccc;
using doctest::Approx;
using testing::check_error;

namespace {

// Var of G_n(X_{k:m}) from Beta(k, m-k+1) moments, conditioning on X_{k:m}:
// E[G^2] = E[X(1-X)]/n + E[X^2].
Rational var_u_from_beta(int m, int n, int k) {
  const Rational ex(k, m + 1);
  const Rational ex2(static_cast<std::int64_t>(k) * (k + 1),
                     static_cast<std::int64_t>(m + 1) * (m + 2));
  const Rational eg2 = (ex - ex2) / Rational(n) + ex2;
  return eg2 - ex * ex;
}

// Var of S_k/m - T_k/n = S_k N/(mn) - k/n with hypergeometric S_k.
Rational var_p_from_hypergeometric(int m, int n, int k) {
  const int total = m + n;
  const Rational var_s(static_cast<std::int64_t>(m) * k * (total - k) * (total - m),
                       static_cast<std::int64_t>(total) * total * (total - 1));
  const Rational scale(total, static_cast<std::int64_t>(m) * n);
  return scale * scale * var_s;
}

std::int64_t ceil_rational(Rational r) {
  const auto q = r.numerator() / r.denominator();
  return q * r.denominator() == r.numerator() ? q : q + 1;
}

}  // namespace

TEST_CASE("moments at m = n = 2") {
  CHECK(exact_mean_u(2, 2, 0.5) == Approx(1.0 / 6.0));
  CHECK(exact_mean_p(2, 2, 0.5) == 0.0);
  CHECK(exact_var_p(2, 2, 0.5) == Approx(1.0 / 3.0));
  CHECK(exact_mean_u_scaled(2, 2, Rational(1, 2)) == Rational(1, 6));
  CHECK(exact_var_p_scaled(2, 2, Rational(1, 2)) == Rational(1, 3));

  const std::vector<Rational> ps{Rational(1, 2)};
  const auto e = enumerate_null_moments(2, 2, ps);
  CHECK(e[0].mean_u_scaled == Rational(1, 6));
  CHECK(e[0].var_p_scaled == Rational(1, 3));
  CHECK(e[0].mean_p_scaled == Rational(0));
  CHECK(e[0].mean_u == Approx(1.0 / 6.0));
  CHECK(e[0].var_p == Approx(1.0 / 3.0));
}

TEST_CASE("variance of P vanishes at p = 1 and approaches p(1-p)") {
  for (int m : {2, 5, 17}) {
    for (int n : {3, 8}) CHECK(exact_var_p(m, n, 1.0) == 0.0);
  }
  const double v = exact_var_p(5000, 5000, 0.3);
  CHECK(std::abs(v - 0.21) / 0.21 < 0.02);
}

TEST_CASE("domain checks") {
  check_error(ErrorCode::POutOfRange, [] { exact_var_u(5, 5, 0.0); });
  check_error(ErrorCode::POutOfRange, [] { exact_var_p(5, 5, 1.1); });
  check_error(ErrorCode::POutOfRange, [] { delta_curve(5, 5, 1.0); });
}

TEST_CASE("closed forms agree with Beta and hypergeometric derivations") {
  for (int m = 1; m <= 25; ++m) {
    for (int n = 1; n <= 25; ++n) {
      const int total = m + n;
      for (int i = 1; i <= total; ++i) {
        const Rational p(i, total);
        const int k = static_cast<int>(ceil_rational(p * Rational(m)));
        CHECK(exact_var_u_scaled(m, n, p) == var_u_from_beta(m, n, k));
        CHECK(exact_mean_u_scaled(m, n, p) == p - Rational(k, m + 1));
        if (total > 1) CHECK(exact_var_p_scaled(m, n, p) == var_p_from_hypergeometric(m, n, i));
      }
    }
  }
}

TEST_CASE("rank S_k is hypergeometric") {
  for (int total = 2; total <= 12; ++total) {
    for (int m = 1; m < total; ++m) {
      for (int k = 1; k <= total; ++k) {
        const auto law = enumerate_s_rank_law(m, total - m, k);
        const auto pmf = hypergeometric_pmf(total, k, m);
        REQUIRE(law.size() == pmf.size());
        for (std::size_t s = 0; s < law.size(); ++s) CHECK(law[s] == pmf[s]);
        Rational mean(0), second(0);
        for (std::size_t s = 0; s < pmf.size(); ++s) {
          mean += pmf[s] * Rational(static_cast<std::int64_t>(s));
          second += pmf[s] * Rational(static_cast<std::int64_t>(s * s));
        }
        CHECK(mean == Rational(static_cast<std::int64_t>(m) * k, total));
        if (total > 1) {
          CHECK(second - mean * mean ==
                Rational(static_cast<std::int64_t>(m) * k * (total - k) * (total - m),
                         static_cast<std::int64_t>(total) * total * (total - 1)));
        }
      }
    }
  }
}

TEST_CASE("enumeration matches the closed forms for C(N, m) <= 1e4") {
  int checked = 0;
  for (int m = 1; m <= 14; ++m) {
    for (int n = 1; n <= 14; ++n) {
      if (binomial(m + n, m) > 10000) continue;
      const int total = m + n;
      std::vector<Rational> ps;
      for (int i = 1; i <= total; ++i) ps.emplace_back(i, total);
      ps.emplace_back(1, 3);
      ps.emplace_back(7, 10);
      for (const auto& e : enumerate_null_moments(m, n, ps)) {
        CHECK(e.mean_u_scaled == exact_mean_u_scaled(m, n, e.p));
        CHECK(e.var_u_scaled == exact_var_u_scaled(m, n, e.p));
        CHECK(e.var_p_scaled == exact_var_p_scaled(m, n, e.p));
        CHECK(e.mean_p_scaled == Rational(0));
        const double p = boost::rational_cast<double>(e.p);
        CHECK(std::abs(e.mean_u - exact_mean_u(m, n, p)) <= 1e-12);
        CHECK(std::abs(e.var_u - exact_var_u(m, n, p)) <= 1e-12);
        CHECK(std::abs(e.var_p - exact_var_p(m, n, p)) <= 1e-12);
        CHECK(std::abs(e.mean_p) <= 1e-12);
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("enumeration refuses huge configuration counts") {
  const std::vector<Rational> ps{Rational(1, 2)};
  check_error(ErrorCode::TooLargeToEnumerate, [&] { enumerate_null_moments(15, 15, ps); });
  CHECK(binomial(30, 15) == 155117520ULL);
}

TEST_CASE("variance difference at m = n = 20") {
  // tails: U has the larger variance
  CHECK(delta_curve(20, 20, 0.01) > 0.0);
  CHECK(delta_curve(20, 20, 0.99) > 0.0);
  CHECK(delta_curve(20, 20, 0.96) > 0.0);
  CHECK(delta_curve(20, 20, 0.5) < 0.0);
  // Just right of 1/40 the P ceiling steps to 2 while the U ceiling stays at 1.
  const Rational p(1, 25);
  const Rational eta2(10);
  const Rational frozen = eta2 * (exact_var_u_scaled(20, 20, p) - exact_var_p_scaled(20, 20, p)) /
                          (p * (Rational(1) - p));
  CHECK(frozen == eta2 * (Rational(41, 441 * 22) - Rational(76, 15600)) / Rational(24, 625));
  CHECK(delta_curve(20, 20, 0.04) == Approx(boost::rational_cast<double>(frozen)).epsilon(1e-13));
  CHECK(delta_curve(20, 20, 0.04) < 0.0);
}

TEST_CASE("moment curve objects") {
  const MomentCurve vu(7, 9, ProcessKind::UHat, MomentKind::Variance);
  const MomentCurve mp(7, 9, ProcessKind::PHat, MomentKind::Mean);
  for (double p : {0.1, 0.33, 0.5, 0.9}) {
    CHECK(vu(p) == exact_var_u(7, 9, p));
    CHECK(mp(p) == 0.0);
  }
}

TEST_CASE("decimal p values pick the interval they name") {
  // 0.2 is slightly above 1/5 in binary; it still closes the first interval.
  CHECK(exact_var_p(2, 3, 0.2) == Approx(boost::rational_cast<double>(exact_var_p_scaled(2, 3, Rational(1, 5))) * 1.2));
  CHECK(exact_var_p(5, 5, 0.3) == Approx(exact_var_p(5, 5, 0.25)));
  CHECK(exact_var_u(10, 5, 0.7) == Approx(exact_var_u(10, 5, 0.65)));
  CHECK(exact_var_u(10, 5, 0.7) != Approx(exact_var_u(10, 5, 0.71)));
}
