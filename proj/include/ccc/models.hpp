#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccc/laws.hpp"

namespace ccc {

/// Null (F = G uniform) plus the eighteen alternatives A1..A18.
enum class ModelId {
  Null, A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12, A13, A14, A15, A16, A17, A18,
};

std::string_view to_string(ModelId id);
/// Accepts "NULL", "A1".."A18" (case-insensitive). Throws UnknownModel.
ModelId model_from_string(std::string_view name);

/// How the printed second parameter of N(mu, .) and LN(mu, .) is read.
/// The N(1.7, 1.7) partner of Gamma(1.7, 1) in A16 is moment matched and is
/// always read as (mean, variance).
struct ModelConventions {
  bool normal_second_is_variance = false;
  bool lognormal_second_is_variance = false;
};

struct ModelParameter {
  std::string name;
  double value;
};

struct AlternativeModel {
  ModelId id = ModelId::Null;
  std::string description;  // the F/G pair as tabulated
  LawPtr f;
  LawPtr g;
  /// False when the family is only defined in an external reference and the
  /// implementation here is a stand-in.
  bool fully_specified = true;
  std::vector<ModelParameter> parameters;
  /// Printed Max / AD powers in percent (absent for the null model).
  std::optional<int> reference_power_max;
  std::optional<int> reference_power_ad;
};

const AlternativeModel& model(ModelId id);
AlternativeModel make_model(ModelId id, const ModelConventions& conventions);
/// All models in table order, NULL first.
std::vector<ModelId> all_models();
/// Models whose families are completely defined in the table notes.
std::vector<ModelId> fully_specified_models();

enum class Side { F, G };

/// i.i.d. draws from one side of a model, deterministic in seed.
/// With strict = true, reference-dependent models throw ModelNotFullySpecified.
std::vector<double> sample(const AlternativeModel& m, Side side, std::size_t size,
                           std::uint64_t seed, bool strict = false);
/// Draws into `out` from an existing stream.
void sample_into(const AlternativeModel& m, Side side, std::span<double> out, Rng& rng);

/// Population contrast comparison curve at pooling fraction lambda:
/// (F - G)(H^{-1}(p)) / sqrt(p(1-p)), H = lambda F + (1 - lambda) G, found by
/// root bracketing on the analytic cdfs.
double population_ccc(const AlternativeModel& m, double p, double lambda = 0.5);

struct CccCurve {
  ModelId model = ModelId::Null;
  std::vector<double> points;
  std::vector<double> values;          // mean empirical CCC
  std::vector<double> standard_errors; // MC s.e. of each mean
  int replicates = 0;
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;
};

/// `count` equally spaced points on [low, high].
std::vector<double> ccc_grid(double low = 0.0001, double high = 0.9999, int count = 500);

/// Averages the empirical CCC over `replicates` pairs of samples of sizes m, n.
/// Throws ModelNotFullySpecified when strict and the model is reference-dependent.
CccCurve estimate_ccc_curve(const AlternativeModel& m, std::span<const double> points,
                            int replicates, int sample_m, int sample_n, std::uint64_t seed,
                            bool strict = false, unsigned workers = 0);

}  // namespace ccc
