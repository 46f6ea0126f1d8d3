#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ccc/monte_carlo.hpp"

namespace ccc {

/// A continuous univariate law that can be sampled and whose cdf is known.
class Law {
 public:
  virtual ~Law() = default;
  virtual double draw(Rng& rng) const = 0;
  virtual double cdf(double x) const = 0;
  virtual std::string describe() const = 0;
};

using LawPtr = std::shared_ptr<const Law>;

/// Location/shape constructors. Normal takes a standard deviation; the
/// registry decides how the printed second parameter maps onto it.
LawPtr uniform_law(double low, double high);
LawPtr normal_law(double mean, double sd);
LawPtr lognormal_law(double mu, double sigma);
/// Pareto(a) on [1, inf): F(x) = 1 - x^{-a}.
LawPtr pareto_law(double shape);
LawPtr laplace_law(double location, double scale);
LawPtr beta_law(double a, double b);
LawPtr chi_squared_law(double dof);
LawPtr cauchy_law(double location, double scale);
/// Exp(rate) shifted right by `shift`.
LawPtr exponential_law(double rate, double shift = 0.0);
LawPtr gamma_law(double shape, double scale);
/// X|X|^theta with X ~ N(0,1).
LawPtr anderson_law(double theta);
/// cdf Phi(x)^theta, sampled as Phi^{-1}(U^{1/theta}).
LawPtr lehmann_law(double theta);
/// Density proportional to exp(-|x|^beta / beta).
LawPtr subbotin_law(double beta);
/// Two-piece log-normal with median 1: log X ~ N(0, s1^2) below 1, N(0, s2^2) above.
LawPtr two_piece_lognormal_law(double sigma_low, double sigma_high);
/// Density (1 + theta cos(pi x)) / 2 on [-1, 1]: a smooth central bump on U(-1, 1).
LawPtr fan_law(double theta);
/// Uniform(0,1) with both tails of width theta compressed:
/// F(x) = theta (x/theta)^beta on [0, theta], x in the middle, symmetric at the top.
LawPtr mason_schuenemeyer_law(double beta, double theta);

/// Finite mixture drawn by component selection then component draw.
class MixtureLaw final : public Law {
 public:
  explicit MixtureLaw(std::vector<std::pair<double, LawPtr>> components);

  double draw(Rng& rng) const override { return draw_with_component(rng).first; }
  /// Draw together with the index of the selected component.
  std::pair<double, std::size_t> draw_with_component(Rng& rng) const;
  double cdf(double x) const override;
  std::string describe() const override;
  const std::vector<std::pair<double, LawPtr>>& components() const { return components_; }

 private:
  std::vector<std::pair<double, LawPtr>> components_;
};

LawPtr mixture_law(std::vector<std::pair<double, LawPtr>> components);

}  // namespace ccc
