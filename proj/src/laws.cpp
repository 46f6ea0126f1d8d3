#include "ccc/laws.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/cauchy.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/exponential.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/laplace.hpp>
#include <boost/math/distributions/lognormal.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/pareto.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/roots.hpp>

#include "ccc/error.hpp"

namespace ccc {

namespace {

namespace bm = boost::math;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double std_normal_cdf(double x) { return bm::cdf(bm::normal(), x); }

double std_normal_quantile(double u) {
  constexpr double lo = 1e-300;
  const double hi = std::nextafter(1.0, 0.0);
  return bm::quantile(bm::normal(), std::clamp(u, lo, hi));
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

// Wraps a boost distribution for the cdf and a callable for draws.
template <class Dist, class Draw>
class StandardLaw final : public Law {
 public:
  StandardLaw(Dist dist, Draw draw, std::string description)
      : dist_(dist), draw_(draw), description_(std::move(description)) {}
  double draw(Rng& rng) const override { return draw_(rng); }
  double cdf(double x) const override {
    const auto [lo, hi] = bm::support(dist_);
    if (x <= lo) return 0.0;
    if (x >= hi) return 1.0;
    return bm::cdf(dist_, x);
  }
  std::string describe() const override { return description_; }

 private:
  Dist dist_;
  Draw draw_;
  std::string description_;
};

template <class Dist, class Draw>
LawPtr make_standard(Dist dist, Draw draw, std::string description) {
  return std::make_shared<StandardLaw<Dist, Draw>>(dist, draw, std::move(description));
}

// Law given by explicit cdf and sampler callables.
template <class Cdf, class Draw>
class CustomLaw final : public Law {
 public:
  CustomLaw(Cdf cdf, Draw draw, std::string description)
      : cdf_(cdf), draw_(draw), description_(std::move(description)) {}
  double draw(Rng& rng) const override { return draw_(rng); }
  double cdf(double x) const override { return cdf_(x); }
  std::string describe() const override { return description_; }

 private:
  Cdf cdf_;
  Draw draw_;
  std::string description_;
};

template <class Cdf, class Draw>
LawPtr make_custom(Cdf cdf, Draw draw, std::string description) {
  return std::make_shared<CustomLaw<Cdf, Draw>>(cdf, draw, std::move(description));
}

}  // namespace

LawPtr uniform_law(double low, double high) {
  require(low < high, "uniform bounds must satisfy low < high");
  return make_custom(
      [=](double x) { return x <= low ? 0.0 : x >= high ? 1.0 : (x - low) / (high - low); },
      [=](Rng& rng) { return low + (high - low) * open_uniform(rng); },
      "U(" + num(low) + "," + num(high) + ")");
}

LawPtr normal_law(double mean, double sd) {
  require(sd > 0.0, "normal sd must be positive");
  return make_standard(
      bm::normal(mean, sd),
      [=](Rng& rng) { return std::normal_distribution<double>(mean, sd)(rng); },
      "N(mean=" + num(mean) + ",sd=" + num(sd) + ")");
}

LawPtr lognormal_law(double mu, double sigma) {
  require(sigma > 0.0, "lognormal sigma must be positive");
  return make_standard(
      bm::lognormal(mu, sigma),
      [=](Rng& rng) { return std::lognormal_distribution<double>(mu, sigma)(rng); },
      "LN(" + num(mu) + "," + num(sigma) + ")");
}

LawPtr pareto_law(double shape) {
  require(shape > 0.0, "pareto shape must be positive");
  return make_standard(
      bm::pareto(1.0, shape),
      [=](Rng& rng) { return std::pow(1.0 - open_uniform(rng), -1.0 / shape); },
      "Pareto(" + num(shape) + ")");
}

LawPtr laplace_law(double location, double scale) {
  require(scale > 0.0, "laplace scale must be positive");
  return make_standard(
      bm::laplace(location, scale),
      [=](Rng& rng) {
        const double u = open_uniform(rng) - 0.5;
        return location - scale * std::copysign(1.0, u) * std::log1p(-2.0 * std::abs(u));
      },
      "Laplace(" + num(location) + "," + num(scale) + ")");
}

LawPtr beta_law(double a, double b) {
  require(a > 0.0 && b > 0.0, "beta parameters must be positive");
  return make_standard(
      bm::beta_distribution<double>(a, b),
      [=](Rng& rng) {
        const double x = std::gamma_distribution<double>(a, 1.0)(rng);
        const double y = std::gamma_distribution<double>(b, 1.0)(rng);
        return x / (x + y);
      },
      "Beta(" + num(a) + "," + num(b) + ")");
}

LawPtr chi_squared_law(double dof) {
  require(dof > 0.0, "chi-squared degrees of freedom must be positive");
  return make_standard(
      bm::chi_squared(dof),
      [=](Rng& rng) { return std::chi_squared_distribution<double>(dof)(rng); },
      "ChiSq(" + num(dof) + ")");
}

LawPtr cauchy_law(double location, double scale) {
  require(scale > 0.0, "cauchy scale must be positive");
  return make_standard(
      bm::cauchy(location, scale),
      [=](Rng& rng) { return std::cauchy_distribution<double>(location, scale)(rng); },
      "Cauchy(" + num(location) + "," + num(scale) + ")");
}

LawPtr exponential_law(double rate, double shift) {
  require(rate > 0.0, "exponential rate must be positive");
  const bm::exponential dist(rate);
  return make_custom(
      [=](double x) { return x <= shift ? 0.0 : bm::cdf(dist, x - shift); },
      [=](Rng& rng) { return shift + std::exponential_distribution<double>(rate)(rng); },
      shift == 0.0 ? "Exp(" + num(rate) + ")" : "Exp(" + num(rate) + ")+" + num(shift));
}

LawPtr gamma_law(double shape, double scale) {
  require(shape > 0.0 && scale > 0.0, "gamma parameters must be positive");
  return make_standard(
      bm::gamma_distribution<double>(shape, scale),
      [=](Rng& rng) { return std::gamma_distribution<double>(shape, scale)(rng); },
      "Gamma(" + num(shape) + "," + num(scale) + ")");
}

LawPtr anderson_law(double theta) {
  require(theta >= 0.0, "anderson theta must be nonnegative");
  const double power = 1.0 + theta;
  return make_custom(
      [=](double y) {
        return std_normal_cdf(std::copysign(std::pow(std::abs(y), 1.0 / power), y));
      },
      [=](Rng& rng) {
        const double x = std::normal_distribution<double>(0.0, 1.0)(rng);
        return x * std::pow(std::abs(x), theta);
      },
      "Anderson(" + num(theta) + ")");
}

LawPtr lehmann_law(double theta) {
  require(theta > 0.0, "lehmann theta must be positive");
  return make_custom([=](double x) { return std::pow(std_normal_cdf(x), theta); },
                     [=](Rng& rng) {
                       return std_normal_quantile(std::pow(open_uniform(rng), 1.0 / theta));
                     },
                     "Lehmann(" + num(theta) + ")");
}

LawPtr subbotin_law(double beta) {
  require(beta > 0.0, "subbotin beta must be positive");
  return make_custom(
      [=](double x) {
        const double g = bm::gamma_p(1.0 / beta, std::pow(std::abs(x), beta) / beta);
        return 0.5 + std::copysign(0.5 * g, x);
      },
      [=](Rng& rng) {
        // |X|^beta / beta ~ Gamma(1/beta, 1)
        const double g = std::gamma_distribution<double>(1.0 / beta, 1.0)(rng);
        const double magnitude = std::pow(beta * g, 1.0 / beta);
        return open_uniform(rng) < 0.5 ? -magnitude : magnitude;
      },
      "Subbotin(" + num(beta) + ")");
}

LawPtr two_piece_lognormal_law(double sigma_low, double sigma_high) {
  require(sigma_low > 0.0 && sigma_high > 0.0, "two-piece lognormal sigmas must be positive");
  return make_custom(
      [=](double x) {
        if (x <= 0.0) return 0.0;
        const double l = std::log(x);
        return std_normal_cdf(l / (l <= 0.0 ? sigma_low : sigma_high));
      },
      [=](Rng& rng) {
        const double z = std::normal_distribution<double>(0.0, 1.0)(rng);
        return std::exp(z * (z <= 0.0 ? sigma_low : sigma_high));
      },
      "LNC(" + num(sigma_low) + "," + num(sigma_high) + ")");
}

LawPtr fan_law(double theta) {
  require(theta >= 0.0 && theta < 1.0, "fan theta must lie in [0, 1)");
  auto cdf = [=](double x) {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return 0.5 * (x + 1.0) + theta * std::sin(std::numbers::pi * x) / (2.0 * std::numbers::pi);
  };
  return make_custom(
      cdf,
      [=](Rng& rng) {
        const double u = open_uniform(rng);
        std::uintmax_t iterations = 200;
        const auto [lo, hi] = bm::tools::toms748_solve(
            [&](double x) { return cdf(x) - u; }, -1.0, 1.0, -u, 1.0 - u,
            bm::tools::eps_tolerance<double>(52), iterations);
        return 0.5 * (lo + hi);
      },
      "Fan(" + num(theta) + ")");
}

LawPtr mason_schuenemeyer_law(double beta, double theta) {
  require(beta > 0.0 && theta > 0.0 && theta < 0.5, "mason-schuenemeyer parameters out of range");
  return make_custom(
      [=](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        if (x <= theta) return theta * std::pow(x / theta, beta);
        if (x >= 1.0 - theta) return 1.0 - theta * std::pow((1.0 - x) / theta, beta);
        return x;
      },
      [=](Rng& rng) {
        const double u = open_uniform(rng);
        if (u <= theta) return theta * std::pow(u / theta, 1.0 / beta);
        if (u >= 1.0 - theta) return 1.0 - theta * std::pow((1.0 - u) / theta, 1.0 / beta);
        return u;
      },
      "MasonSchuenemeyer(" + num(beta) + "," + num(theta) + ")");
}

MixtureLaw::MixtureLaw(std::vector<std::pair<double, LawPtr>> components)
    : components_(std::move(components)) {
  require(!components_.empty(), "mixture needs components");
  double total = 0.0;
  for (const auto& [w, law] : components_) {
    require(w > 0.0 && law != nullptr, "mixture weights must be positive");
    total += w;
  }
  for (auto& c : components_) c.first /= total;
}

std::pair<double, std::size_t> MixtureLaw::draw_with_component(Rng& rng) const {
  const double u = open_uniform(rng);
  double acc = 0.0;
  std::size_t pick = components_.size() - 1;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    acc += components_[i].first;
    if (u < acc) {
      pick = i;
      break;
    }
  }
  return {components_[pick].second->draw(rng), pick};
}

double MixtureLaw::cdf(double x) const {
  double total = 0.0;
  for (const auto& [w, law] : components_) total += w * law->cdf(x);
  return total;
}

std::string MixtureLaw::describe() const {
  std::string out = "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += "+";
    out += "(" + num(components_[i].first) + ")" + components_[i].second->describe();
  }
  return out + "]";
}

LawPtr mixture_law(std::vector<std::pair<double, LawPtr>> components) {
  return std::make_shared<MixtureLaw>(std::move(components));
}

}  // namespace ccc
