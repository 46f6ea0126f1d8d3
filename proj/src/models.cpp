#include "ccc/models.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include <boost/math/tools/roots.hpp>

#include "ccc/error.hpp"
#include "ccc/process.hpp"
#include "ccc/two_sample.hpp"

namespace ccc {

namespace {

constexpr std::array<std::string_view, 19> kNames = {
    "NULL", "A1",  "A2",  "A3",  "A4",  "A5",  "A6",  "A7",  "A8",  "A9",
    "A10",  "A11", "A12", "A13", "A14", "A15", "A16", "A17", "A18",
};

struct Row {
  std::string_view description;
  int power_max;
  int power_ad;
  bool fully_specified;
};

// Table order; index 0 is the null model.
constexpr std::array<Row, 19> kRows = {{
    {"U(0,1)/U(0,1)", 0, 0, true},
    {"N(0,1)/N(0.45,1)", 76, 86, true},
    {"Pareto(1)/Pareto(1.6)", 77, 84, true},
    {"Laplace(0,1)/Laplace(0.4,1.6)", 75, 79, true},
    {"U[0,1]/[(0.58)U[0,1]+(0.42)Beta(50,50)]", 78, 79, true},
    {"LN(0.92,0.5)/LN(1.08,0.4)", 77, 77, true},
    {"N(0,1)/[(0.6)N(-0.9,0.37)+(0.4)N(1,0.7)]", 76, 73, true},
    {"N(0,1)/N(0,1.55)", 75, 69, true},
    {"Fan(0.66)/Uniform(-1,1)", 75, 63, false},
    {"N(0,1)/Anderson(1.5)", 77, 61, true},
    {"[(0.52)N(0.4,1)+(0.48)ChiSq(1)]/N(0.4,1)", 79, 59, true},
    {"N(0,1)/[(0.8)N(0,1)+(0.2)Lehmann(0.16)]", 75, 57, true},
    {"LN(0,1)/LNC(1,1.8)", 77, 52, false},
    {"Lehmann(1.2)/Subbotin(8)", 75, 41, false},
    {"N(0,1)/[(0.35)N(0,1)+(0.65)Cauchy(0,1)]", 75, 38, true},
    {"Exp(1)/[Exp(1)+0.11]", 75, 38, true},
    {"N(1.7,1.7)/Gamma(1.7,1)", 75, 38, true},
    {"N(0,1)/Cauchy(0,0.7)", 79, 26, true},
    {"U(0,1)/Mason-Schuenemeyer(20,0.1)", 75, 11, false},
}};

std::size_t index_of(ModelId id) { return static_cast<std::size_t>(id); }

}  // namespace

std::string_view to_string(ModelId id) { return kNames.at(index_of(id)); }

ModelId model_from_string(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == upper) return static_cast<ModelId>(i);
  }
  throw Error(ErrorCode::UnknownModel, "unknown model '" + std::string(name) + "'");
}

AlternativeModel make_model(ModelId id, const ModelConventions& conv) {
  // N(mu, v) and LN(mu, v) as tabulated, mapped to (mean, sd) per convention.
  auto normal = [&](double mean, double second) {
    return normal_law(mean, conv.normal_second_is_variance ? std::sqrt(second) : second);
  };
  auto lognormal = [&](double mu, double second) {
    return lognormal_law(mu, conv.lognormal_second_is_variance ? std::sqrt(second) : second);
  };

  const Row& row = kRows.at(index_of(id));
  AlternativeModel m;
  m.id = id;
  m.description = std::string(row.description);
  m.fully_specified = row.fully_specified;
  if (id != ModelId::Null) {
    m.reference_power_max = row.power_max;
    m.reference_power_ad = row.power_ad;
  }

  switch (id) {
    case ModelId::Null:
      m.f = uniform_law(0.0, 1.0);
      m.g = m.f;
      break;
    case ModelId::A1:
      m.f = normal(0.0, 1.0);
      m.g = normal(0.45, 1.0);
      m.parameters = {{"shift", 0.45}};
      break;
    case ModelId::A2:
      m.f = pareto_law(1.0);
      m.g = pareto_law(1.6);
      m.parameters = {{"f_shape", 1.0}, {"g_shape", 1.6}};
      break;
    case ModelId::A3:
      m.f = laplace_law(0.0, 1.0);
      m.g = laplace_law(0.4, 1.6);
      m.parameters = {{"g_location", 0.4}, {"g_scale", 1.6}};
      break;
    case ModelId::A4:
      m.f = uniform_law(0.0, 1.0);
      m.g = mixture_law({{0.58, uniform_law(0.0, 1.0)}, {0.42, beta_law(50.0, 50.0)}});
      m.parameters = {{"uniform_weight", 0.58}, {"beta_a", 50.0}, {"beta_b", 50.0}};
      break;
    case ModelId::A5:
      m.f = lognormal(0.92, 0.5);
      m.g = lognormal(1.08, 0.4);
      m.parameters = {{"f_mu", 0.92}, {"f_sigma", 0.5}, {"g_mu", 1.08}, {"g_sigma", 0.4}};
      break;
    case ModelId::A6:
      m.f = normal(0.0, 1.0);
      m.g = mixture_law({{0.6, normal(-0.9, 0.37)}, {0.4, normal(1.0, 0.7)}});
      m.parameters = {{"w1", 0.6}, {"mu1", -0.9}, {"v1", 0.37}, {"mu2", 1.0}, {"v2", 0.7}};
      break;
    case ModelId::A7:
      m.f = normal(0.0, 1.0);
      m.g = normal(0.0, 1.55);
      m.parameters = {{"g_second", 1.55}};
      break;
    case ModelId::A8:
      m.f = fan_law(0.66);
      m.g = uniform_law(-1.0, 1.0);
      m.parameters = {{"theta", 0.66}};
      break;
    case ModelId::A9:
      m.f = normal(0.0, 1.0);
      m.g = anderson_law(1.5);
      m.parameters = {{"theta", 1.5}};
      break;
    case ModelId::A10:
      m.f = mixture_law({{0.52, normal(0.4, 1.0)}, {0.48, chi_squared_law(1.0)}});
      m.g = normal(0.4, 1.0);
      m.parameters = {{"normal_weight", 0.52}, {"mean", 0.4}};
      break;
    case ModelId::A11:
      m.f = normal(0.0, 1.0);
      m.g = mixture_law({{0.8, normal(0.0, 1.0)}, {0.2, lehmann_law(0.16)}});
      m.parameters = {{"normal_weight", 0.8}, {"theta", 0.16}};
      break;
    case ModelId::A12:
      m.f = lognormal(0.0, 1.0);
      m.g = two_piece_lognormal_law(1.0, 1.8);
      m.parameters = {{"sigma_low", 1.0}, {"sigma_high", 1.8}};
      break;
    case ModelId::A13:
      m.f = lehmann_law(1.2);
      m.g = subbotin_law(8.0);
      m.parameters = {{"theta", 1.2}, {"beta", 8.0}};
      break;
    case ModelId::A14:
      m.f = normal(0.0, 1.0);
      m.g = mixture_law({{0.35, normal(0.0, 1.0)}, {0.65, cauchy_law(0.0, 1.0)}});
      m.parameters = {{"normal_weight", 0.35}};
      break;
    case ModelId::A15:
      m.f = exponential_law(1.0);
      m.g = exponential_law(1.0, 0.11);
      m.parameters = {{"shift", 0.11}};
      break;
    case ModelId::A16:
      // mean 1.7 and variance 1.7, matching Gamma(1.7, 1)
      m.f = normal_law(1.7, std::sqrt(1.7));
      m.g = gamma_law(1.7, 1.0);
      m.parameters = {{"shape", 1.7}, {"scale", 1.0}};
      break;
    case ModelId::A17:
      m.f = normal(0.0, 1.0);
      m.g = cauchy_law(0.0, 0.7);
      m.parameters = {{"scale", 0.7}};
      break;
    case ModelId::A18:
      m.f = uniform_law(0.0, 1.0);
      m.g = mason_schuenemeyer_law(20.0, 0.1);
      m.parameters = {{"beta", 20.0}, {"theta", 0.1}};
      break;
  }
  return m;
}

const AlternativeModel& model(ModelId id) {
  static const std::vector<AlternativeModel> registry = [] {
    std::vector<AlternativeModel> out;
    for (std::size_t i = 0; i < kRows.size(); ++i) {
      out.push_back(make_model(static_cast<ModelId>(i), ModelConventions{}));
    }
    return out;
  }();
  return registry.at(index_of(id));
}

std::vector<ModelId> all_models() {
  std::vector<ModelId> out;
  for (std::size_t i = 0; i < kRows.size(); ++i) out.push_back(static_cast<ModelId>(i));
  return out;
}

std::vector<ModelId> fully_specified_models() {
  std::vector<ModelId> out;
  for (std::size_t i = 1; i < kRows.size(); ++i) {
    if (kRows[i].fully_specified) out.push_back(static_cast<ModelId>(i));
  }
  return out;
}

namespace {

void check_strict(const AlternativeModel& m, bool strict) {
  if (strict && !m.fully_specified) {
    throw Error(ErrorCode::ModelNotFullySpecified,
                std::string(to_string(m.id)) + " uses a family defined only in an external reference");
  }
}

}  // namespace

void sample_into(const AlternativeModel& m, Side side, std::span<double> out, Rng& rng) {
  const Law& law = side == Side::F ? *m.f : *m.g;
  for (double& v : out) v = law.draw(rng);
}

std::vector<double> sample(const AlternativeModel& m, Side side, std::size_t size,
                           std::uint64_t seed, bool strict) {
  check_strict(m, strict);
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "sample size must be positive");
  Rng rng(seed);
  std::vector<double> out(size);
  sample_into(m, side, out, rng);
  return out;
}

double population_ccc(const AlternativeModel& m, double p, double lambda) {
  if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::POutOfRange, "p must lie in (0, 1)");
  auto pooled = [&](double z) { return lambda * m.f->cdf(z) + (1.0 - lambda) * m.g->cdf(z); };
  double lo = -1.0;
  double hi = 1.0;
  while (pooled(lo) >= p) lo *= 2.0;
  while (pooled(hi) < p) hi *= 2.0;
  // Bisection to the left end of {z : H(z) >= p}.
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pooled(mid) >= p) hi = mid;
    else lo = mid;
  }
  const double z = hi;
  return (m.f->cdf(z) - m.g->cdf(z)) / std::sqrt(p * (1.0 - p));
}

std::vector<double> ccc_grid(double low, double high, int count) {
  if (count < 2 || !(low > 0.0 && high < 1.0 && low < high)) {
    throw Error(ErrorCode::InvalidArgument, "grid needs count >= 2 and 0 < low < high < 1");
  }
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = low + (high - low) * i / (count - 1);
  out.back() = high;
  return out;
}

CccCurve estimate_ccc_curve(const AlternativeModel& m, std::span<const double> points,
                            int replicates, int sample_m, int sample_n, std::uint64_t seed,
                            bool strict, unsigned workers) {
  check_strict(m, strict);
  if (replicates < 2) throw Error(ErrorCode::TooFewReplicates, "need at least 2 replicates");
  for (double p : points) {
    if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::POutOfRange, "p must lie in (0, 1)");
  }
  const std::size_t k = points.size();
  std::vector<std::vector<double>> per_rep(replicates);
  parallel_for(
      static_cast<std::size_t>(replicates),
      [&](std::size_t r) {
        Rng rng = replicate_rng(seed, r);
        std::vector<double> x(sample_m);
        std::vector<double> y(sample_n);
        sample_into(m, Side::F, x, rng);
        sample_into(m, Side::G, y, rng);
        const auto data = build_two_sample(std::move(x), std::move(y),
                                           TiePolicy::jitter(replicate_seed(seed ^ 0x5bd1e995ULL, r)));
        per_rep[r] = ccc_hat_curve(data, points);
      },
      workers);

  CccCurve curve;
  curve.model = m.id;
  curve.points.assign(points.begin(), points.end());
  curve.values.assign(k, 0.0);
  curve.standard_errors.assign(k, 0.0);
  curve.replicates = replicates;
  curve.m = sample_m;
  curve.n = sample_n;
  curve.seed = seed;
  for (std::size_t j = 0; j < k; ++j) {
    double mean = 0.0;
    double m2 = 0.0;
    for (int r = 0; r < replicates; ++r) {
      const double v = per_rep[r][j];
      const double d = v - mean;
      mean += d / (r + 1);
      m2 += d * (v - mean);
    }
    curve.values[j] = mean;
    curve.standard_errors[j] = std::sqrt(m2 / (replicates - 1) / replicates);
  }
  return curve;
}

}  // namespace ccc
