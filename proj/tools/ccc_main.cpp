// Command-line front end: analyze two samples, simulate critical values and
// regions, run power studies and emit the diagnostic plots.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccc/error.hpp"
#include "ccc/harness.hpp"
#include "ccc/inference.hpp"
#include "ccc/io.hpp"
#include "ccc/models.hpp"
#include "ccc/moments.hpp"
#include "ccc/process.hpp"
#include "ccc/report.hpp"
#include "ccc/svg.hpp"
#include "ccc/two_sample.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitReject = 2;

struct Common {
  double alpha = 0.05;
  int mc = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::string cache_dir;
};

void add_common(CLI::App* cmd, Common& c, bool with_mc = true) {
  cmd->add_option("--alpha", c.alpha, "Significance level")->capture_default_str();
  if (with_mc) cmd->add_option("--mc", c.mc, "Monte Carlo replicates")->capture_default_str();
  cmd->add_option("--seed", c.seed, "Seed for every random stream")->required();
  cmd->add_option("--workers", c.workers, "Worker threads (0 = hardware)");
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit_json(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    ccc::write_text(out, j.dump(2) + "\n");
  }
}

std::string label_of(const std::string& path, const std::string& given) {
  return given.empty() ? fs::path(path).stem().string() : given;
}

ccc::TiePolicy tie_policy(const std::string& ties, std::uint64_t seed) {
  return ties == "jitter" ? ccc::TiePolicy::jitter(seed) : ccc::TiePolicy::error();
}

ccc::TwoSampleData load(const std::string& x_path, const std::string& y_path,
                        const std::string& ties, std::uint64_t seed) {
  auto samples = ccc::read_samples(x_path, y_path);
  std::cerr << "read " << samples.x.size() << " values from " << x_path << ", "
            << samples.y.size() << " values from " << y_path << "\n";
  return ccc::build_two_sample(std::move(samples.x), std::move(samples.y),
                               tie_policy(ties, seed));
}

std::vector<ccc::ModelId> parse_models(const std::vector<std::string>& names) {
  std::vector<ccc::ModelId> ids;
  for (const auto& name : names) {
    if (name == "all") {
      for (auto id : ccc::all_models()) ids.push_back(id);
    } else if (name == "specified") {
      ids.push_back(ccc::ModelId::Null);
      for (auto id : ccc::fully_specified_models()) ids.push_back(id);
    } else {
      ids.push_back(ccc::model_from_string(name));
    }
  }
  return ids;
}

// "20x20,50x50" -> {(20,20),(50,50)}
std::vector<std::pair<int, int>> parse_sizes(const std::string& text) {
  std::vector<std::pair<int, int>> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    try {
      if (x == std::string::npos) {
        const int v = std::stoi(item);
        sizes.emplace_back(v, v);
      } else {
        sizes.emplace_back(std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1)));
      }
    } catch (const std::exception&) {
      throw ccc::Error(ccc::ErrorCode::InvalidArgument, "bad size '" + item + "'");
    }
  }
  if (sizes.empty()) throw ccc::Error(ccc::ErrorCode::InvalidArgument, "no sizes given");
  return sizes;
}

std::string rational_text(const ccc::Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-sample comparison through the weighted rank process"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ccc::kSoftwareVersion));

  // analyze
  Common an;
  std::string an_x, an_y, an_xl, an_yl, an_ties = "error", an_out = ".", an_decide = "max";
  bool an_timestamp = false;
  auto* analyze = app.add_subcommand("analyze", "Report, tests and B-plot for two CSV samples");
  analyze->add_option("x", an_x, "CSV with the first sample")->required();
  analyze->add_option("y", an_y, "CSV with the second sample")->required();
  analyze->add_option("--x-label", an_xl);
  analyze->add_option("--y-label", an_yl);
  analyze->add_option("--ties", an_ties)->check(CLI::IsMember({"error", "jitter"}))
      ->capture_default_str();
  analyze->add_option("--out", an_out, "Output directory")->capture_default_str();
  analyze->add_option("--decide-by", an_decide, "Test behind the exit code")
      ->check(CLI::IsMember({"max", "ad", "any"}))->capture_default_str();
  analyze->add_flag("--timestamp", an_timestamp, "Record creation time in the report");
  add_common(analyze, an);

  // critical-value
  Common cv;
  int cv_m = 0, cv_n = 0;
  std::string cv_stat = "both", cv_out;
  auto* critical = app.add_subcommand("critical-value", "Null critical values for given sizes");
  critical->add_option("--m", cv_m)->required();
  critical->add_option("--n", cv_n)->required();
  critical->add_option("--stat", cv_stat)->check(CLI::IsMember({"max", "ad", "both"}))
      ->capture_default_str();
  critical->add_option("--cache-dir", cv.cache_dir, "Directory for the JSON value cache");
  critical->add_option("--out", cv_out, "JSON output file (stdout if absent)");
  add_common(critical, cv);

  // regions
  Common rg;
  std::string rg_x, rg_y, rg_ties = "error", rg_out;
  auto* regions = app.add_subcommand("regions", "Decile acceptance regions for two samples");
  regions->add_option("x", rg_x)->required();
  regions->add_option("y", rg_y)->required();
  regions->add_option("--ties", rg_ties)->check(CLI::IsMember({"error", "jitter"}))
      ->capture_default_str();
  regions->add_option("--out", rg_out, "JSON output file (stdout if absent)");
  add_common(regions, rg);

  // power
  Common pw;
  std::vector<std::string> pw_models{"specified"};
  int pw_m = 100, pw_n = 100, pw_reps = 10000;
  std::uint64_t pw_cseed = 20240601;
  std::string pw_out;
  auto* power = app.add_subcommand("power", "Rejection rates of Max and AD under the models");
  power->add_option("--model", pw_models, "A1..A18, NULL, 'specified' or 'all'")
      ->capture_default_str();
  power->add_option("--m", pw_m)->capture_default_str();
  power->add_option("--n", pw_n)->capture_default_str();
  power->add_option("--reps", pw_reps, "Replicates per model")->capture_default_str();
  power->add_option("--critical-seed", pw_cseed, "Seed of the critical value simulation")
      ->capture_default_str();
  power->add_option("--cache-dir", pw.cache_dir, "Directory for the JSON value cache");
  power->add_option("--out", pw_out, "CSV output file (stdout if absent)");
  add_common(power, pw);

  // ccc-curve
  Common cc;
  std::vector<std::string> cc_models{"A1"};
  int cc_m = 100, cc_n = 100, cc_reps = 1000, cc_points = 500;
  std::string cc_out = "ccc.svg", cc_json;
  bool cc_strict = false;
  auto* curve = app.add_subcommand("ccc-curve", "Averaged empirical CCC curves");
  curve->add_option("--model", cc_models)->capture_default_str();
  curve->add_option("--m", cc_m)->capture_default_str();
  curve->add_option("--n", cc_n)->capture_default_str();
  curve->add_option("--reps", cc_reps)->capture_default_str();
  curve->add_option("--points", cc_points)->capture_default_str();
  curve->add_flag("--strict", cc_strict, "Refuse models whose laws are stand-ins");
  curve->add_option("--out", cc_out, "SVG output file")->capture_default_str();
  curve->add_option("--json", cc_json, "Also write the curve values");
  add_common(curve, cc, false);

  // variance-compare
  std::string vc_sizes = "20x20,50x50,100x100", vc_out = "variance.svg";
  auto* variance = app.add_subcommand("variance-compare", "Exact null variances of both processes");
  variance->add_option("--sizes", vc_sizes, "Comma-separated m x n pairs")->capture_default_str();
  variance->add_option("--out", vc_out, "SVG output file")->capture_default_str();

  // enumerate-oracle
  int eo_m = 4, eo_n = 4;
  std::string eo_out;
  auto* oracle = app.add_subcommand("enumerate-oracle",
                                    "Exact null moments by enumeration against closed forms");
  oracle->add_option("--m", eo_m)->required();
  oracle->add_option("--n", eo_n)->required();
  oracle->add_option("--out", eo_out, "JSON output file (stdout if absent)");

  // models
  std::string md_out;
  auto* models = app.add_subcommand("models", "Catalog of the alternative models");
  models->add_option("--out", md_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*analyze) {
      const auto data = load(an_x, an_y, an_ties, an.seed);
      ccc::AnalysisReport report;
      report.input = {an_x, an_y, label_of(an_x, an_xl), label_of(an_y, an_yl),
                      data.m(), data.n(), an_ties,
                      data.ties_applied() == ccc::TiesApplied::Jitter};
      report.seed = an.seed;
      if (an_timestamp) report.created = utc_now();
      report.bars = ccc::bars(data);
      report.bars.x_label = report.input.x_label;
      report.bars.y_label = report.input.y_label;
      const auto null = ccc::simulate_null(data.m(), data.n(), an.mc, an.seed,
                                           ccc::NullLaw::Uniform, an.workers);
      for (auto stat : {ccc::Statistic::Max, ccc::Statistic::AD}) {
        auto t = ccc::run_test(data, stat, an.alpha, null);
        t.seed = an.seed;
        report.tests.push_back(t);
      }
      report.regions = ccc::acceptance_regions(data, an.alpha, an.mc, an.seed, an.workers);

      fs::create_directories(an_out);
      const auto stem = report.input.x_label + "_vs_" + report.input.y_label;
      ccc::write_text(fs::path(an_out) / (stem + ".json"), ccc::to_json(report).dump(2) + "\n");
      ccc::emit_bplot(report, fs::path(an_out) / (stem + ".svg"));

      bool reject = false;
      std::cout << "m=" << data.m() << " n=" << data.n()
                << " D(N)=" << report.bars.grid.dimension() << "\n";
      for (const auto& t : report.tests) {
        const bool r = t.decision == ccc::Decision::Reject;
        std::cout << ccc::to_string(t.statistic) << " = " << t.value
                  << "  critical = " << t.critical_value << "  p-value = " << t.p_value
                  << "  " << (r ? "reject" : "retain") << "\n";
        if (an_decide == "any" || ccc::to_string(t.statistic) == an_decide) reject |= r;
      }
      return reject ? kExitReject : kExitOk;
    }

    if (*critical) {
      std::unique_ptr<ccc::CriticalValueCache> cache =
          cv.cache_dir.empty() ? std::make_unique<ccc::CriticalValueCache>()
                               : std::make_unique<ccc::CriticalValueCache>(cv.cache_dir);
      json j = {{"m", cv_m}, {"n", cv_n}, {"alpha", cv.alpha}, {"mc_replicates", cv.mc},
                {"seed", cv.seed}, {"grid_dimension", ccc::grid_for(cv_m + cv_n).dimension()}};
      for (auto stat : {ccc::Statistic::Max, ccc::Statistic::AD}) {
        const auto name = std::string(ccc::to_string(stat));
        if (cv_stat != "both" && cv_stat != name) continue;
        j["critical_values"][name] =
            cache->get(cv_m, cv_n, stat, cv.alpha, cv.mc, cv.seed, cv.workers);
      }
      emit_json(j, cv_out);
      return kExitOk;
    }

    if (*regions) {
      const auto data = load(rg_x, rg_y, rg_ties, rg.seed);
      emit_json(ccc::to_json(ccc::acceptance_regions(data, rg.alpha, rg.mc, rg.seed, rg.workers)),
                rg_out);
      return kExitOk;
    }

    if (*power) {
      std::unique_ptr<ccc::CriticalValueCache> cache =
          pw.cache_dir.empty() ? std::make_unique<ccc::CriticalValueCache>()
                               : std::make_unique<ccc::CriticalValueCache>(pw.cache_dir);
      ccc::PowerConfig config;
      config.alpha = pw.alpha;
      config.replicates = pw_reps;
      config.seed = pw.seed;
      config.critical_replicates = pw.mc;
      config.critical_seed = pw_cseed;
      config.workers = pw.workers;
      std::vector<ccc::PowerRow> rows;
      for (auto id : parse_models(pw_models)) {
        rows.push_back(ccc::simulate_power(ccc::model(id), pw_m, pw_n, config, *cache));
        const auto& r = rows.back();
        std::cerr << ccc::to_string(id) << ": max " << r.power_max << ", ad " << r.power_ad << "\n";
      }
      std::ostringstream csv;
      ccc::write_power_csv(csv, rows);
      if (pw_out.empty()) {
        std::cout << csv.str();
      } else {
        ccc::write_text(pw_out, csv.str());
      }
      return kExitOk;
    }

    if (*curve) {
      const auto points = ccc::ccc_grid(0.0001, 0.9999, cc_points);
      std::vector<ccc::CccCurve> curves;
      for (auto id : parse_models(cc_models)) {
        curves.push_back(ccc::estimate_ccc_curve(ccc::model(id), points, cc_reps, cc_m, cc_n,
                                                 cc.seed, cc_strict, cc.workers));
      }
      ccc::emit_ccc_plot(curves, cc_out);
      if (!cc_json.empty()) {
        json j = json::array();
        for (const auto& c : curves) {
          j.push_back({{"model", ccc::to_string(c.model)}, {"m", c.m}, {"n", c.n},
                       {"replicates", c.replicates}, {"seed", c.seed}, {"points", c.points},
                       {"values", c.values}, {"standard_errors", c.standard_errors}});
        }
        ccc::write_text(cc_json, j.dump(2) + "\n");
      }
      return kExitOk;
    }

    if (*variance) {
      const auto sizes = parse_sizes(vc_sizes);
      ccc::emit_variance_panels(sizes, vc_out);
      for (const auto& [m, n] : sizes) {
        std::cout << "m=" << m << " n=" << n << "  Delta(0.04)=" << ccc::delta_curve(m, n, 0.04)
                  << "  Delta(0.5)=" << ccc::delta_curve(m, n, 0.5)
                  << "  Delta(0.96)=" << ccc::delta_curve(m, n, 0.96) << "\n";
      }
      return kExitOk;
    }

    if (*oracle) {
      const int total = eo_m + eo_n;
      std::vector<ccc::Rational> ps;
      for (int i = 1; i <= total; ++i) ps.emplace_back(i, total);
      const auto rows = ccc::enumerate_null_moments(eo_m, eo_n, ps);
      json j = {{"m", eo_m}, {"n", eo_n},
                {"configurations", ccc::binomial(total, eo_m)}, {"points", json::array()}};
      bool all_match = true;
      for (const auto& r : rows) {
        const auto var_u = ccc::exact_var_u_scaled(eo_m, eo_n, r.p);
        const auto var_p = ccc::exact_var_p_scaled(eo_m, eo_n, r.p);
        const auto mean_u = ccc::exact_mean_u_scaled(eo_m, eo_n, r.p);
        const bool match = var_u == r.var_u_scaled && var_p == r.var_p_scaled &&
                           mean_u == r.mean_u_scaled && r.mean_p_scaled == ccc::Rational(0);
        all_match = all_match && match;
        j["points"].push_back({{"p", rational_text(r.p)},
                               {"mean_u_scaled", rational_text(r.mean_u_scaled)},
                               {"var_u_scaled", rational_text(r.var_u_scaled)},
                               {"var_p_scaled", rational_text(r.var_p_scaled)},
                               {"closed_form_var_u_scaled", rational_text(var_u)},
                               {"closed_form_var_p_scaled", rational_text(var_p)},
                               {"mean_u", r.mean_u}, {"var_u", r.var_u},
                               {"mean_p", r.mean_p}, {"var_p", r.var_p},
                               {"match", match}});
      }
      j["all_match"] = all_match;
      emit_json(j, eo_out);
      return all_match ? kExitOk : kExitError;
    }

    if (*models) {
      json j = json::array();
      for (auto id : ccc::all_models()) {
        const auto& md = ccc::model(id);
        json params = json::object();
        for (const auto& p : md.parameters) params[p.name] = p.value;
        json entry = {{"id", ccc::to_string(id)}, {"description", md.description},
                      {"f", md.f->describe()}, {"g", md.g->describe()},
                      {"fully_specified", md.fully_specified}, {"parameters", params}};
        if (md.reference_power_max) entry["reference_power_max"] = *md.reference_power_max;
        if (md.reference_power_ad) entry["reference_power_ad"] = *md.reference_power_ad;
        j.push_back(entry);
      }
      emit_json(j, md_out);
      return kExitOk;
    }
  } catch (const ccc::Error& e) {
    std::cerr << "error (" << ccc::to_string(e.code()) << "): " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}
