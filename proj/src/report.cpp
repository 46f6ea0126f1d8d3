#include "ccc/report.hpp"

#include "ccc/error.hpp"

namespace ccc {

using nlohmann::json;

const TestReport* AnalysisReport::test(Statistic statistic) const {
  for (const auto& t : tests) {
    if (t.statistic == statistic) return &t;
  }
  return nullptr;
}

bool operator==(const BarSeries& a, const BarSeries& b) {
  return a.grid == b.grid && a.values == b.values && a.eta == b.eta && a.m == b.m &&
         a.n == b.n && a.x_label == b.x_label && a.y_label == b.y_label;
}

bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
  return a.schema_version == b.schema_version && a.software_version == b.software_version &&
         a.input == b.input && a.seed == b.seed && a.created == b.created && a.bars == b.bars &&
         a.regions == b.regions && a.tests == b.tests;
}

json to_json(const BarSeries& bars) {
  return {
      {"resolution", bars.grid.resolution()},
      {"dimension", bars.grid.dimension()},
      {"points", bars.grid.points()},
      {"values", bars.values},
      {"eta", bars.eta},
      {"m", bars.m},
      {"n", bars.n},
      {"x_label", bars.x_label},
      {"y_label", bars.y_label},
  };
}

json to_json(const AcceptanceRegions& regions) {
  json deciles = json::array();
  for (const auto& d : regions.deciles) {
    json item = {{"index", d.index}, {"flag", to_string(d.flag)}};
    if (!d.empty()) {
      item["first_point"] = d.first_point;
      item["last_point"] = d.last_point;
      item["lower"] = d.lower;
      item["upper"] = d.upper;
      item["observed_min"] = d.observed_min;
      item["observed_max"] = d.observed_max;
    }
    deciles.push_back(std::move(item));
  }
  return {
      {"alpha", regions.alpha},
      {"mc_replicates", regions.mc_replicates},
      {"seed", regions.seed},
      {"grid_dimension", regions.grid_dimension},
      {"deciles", std::move(deciles)},
  };
}

json to_json(const TestReport& t) {
  return {
      {"statistic", to_string(t.statistic)},
      {"value", t.value},
      {"critical_value", t.critical_value},
      {"alpha", t.alpha},
      {"p_value", t.p_value},
      {"exceedances", t.exceedances},
      {"mc_replicates", t.mc_replicates},
      {"seed", t.seed},
      {"decision", t.decision == Decision::Reject ? "reject" : "retain"},
      {"grid_dimension", t.grid_dimension},
  };
}

json to_json(const AnalysisReport& report) {
  json tests = json::array();
  for (const auto& t : report.tests) tests.push_back(to_json(t));
  json j = {
      {"schema_version", report.schema_version},
      {"software_version", report.software_version},
      {"input",
       {
           {"x_file", report.input.x_file},
           {"y_file", report.input.y_file},
           {"x_label", report.input.x_label},
           {"y_label", report.input.y_label},
           {"m", report.input.m},
           {"n", report.input.n},
           {"tie_policy", report.input.tie_policy},
           {"jitter_applied", report.input.jitter_applied},
       }},
      {"seed", report.seed},
      {"bars", to_json(report.bars)},
      {"regions", to_json(report.regions)},
      {"tests", std::move(tests)},
  };
  if (report.created) j["created"] = *report.created;
  return j;
}

namespace {

RegionFlag flag_from_string(const std::string& s) {
  for (auto f : {RegionFlag::Inside, RegionFlag::Below, RegionFlag::Above, RegionFlag::Both,
                 RegionFlag::Empty}) {
    if (to_string(f) == s) return f;
  }
  throw Error(ErrorCode::ParseError, "unknown region flag '" + s + "'");
}

BarSeries bars_from_json(const json& j) {
  BarSeries b;
  b.grid = DyadicGrid(j.at("resolution").get<int>());
  b.values = j.at("values").get<std::vector<double>>();
  b.eta = j.at("eta").get<double>();
  b.m = j.at("m").get<int>();
  b.n = j.at("n").get<int>();
  b.x_label = j.value("x_label", "");
  b.y_label = j.value("y_label", "");
  if (static_cast<int>(b.values.size()) != b.grid.dimension()) {
    throw Error(ErrorCode::ParseError, "bar count does not match grid dimension");
  }
  return b;
}

AcceptanceRegions regions_from_json(const json& j) {
  AcceptanceRegions r;
  r.alpha = j.at("alpha").get<double>();
  r.mc_replicates = j.at("mc_replicates").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.grid_dimension = j.at("grid_dimension").get<int>();
  for (const auto& item : j.at("deciles")) {
    DecileRegion d;
    d.index = item.at("index").get<int>();
    d.flag = flag_from_string(item.at("flag").get<std::string>());
    if (!d.empty()) {
      d.first_point = item.at("first_point").get<int>();
      d.last_point = item.at("last_point").get<int>();
      d.lower = item.at("lower").get<double>();
      d.upper = item.at("upper").get<double>();
      d.observed_min = item.at("observed_min").get<double>();
      d.observed_max = item.at("observed_max").get<double>();
    }
    r.deciles.push_back(d);
  }
  return r;
}

TestReport test_from_json(const json& j) {
  TestReport t;
  t.statistic = statistic_from_string(j.at("statistic").get<std::string>());
  t.value = j.at("value").get<double>();
  t.critical_value = j.at("critical_value").get<double>();
  t.alpha = j.at("alpha").get<double>();
  t.p_value = j.at("p_value").get<double>();
  t.exceedances = j.at("exceedances").get<std::size_t>();
  t.mc_replicates = j.at("mc_replicates").get<int>();
  t.seed = j.at("seed").get<std::uint64_t>();
  const auto decision = j.at("decision").get<std::string>();
  if (decision != "reject" && decision != "retain") {
    throw Error(ErrorCode::ParseError, "unknown decision '" + decision + "'");
  }
  t.decision = decision == "reject" ? Decision::Reject : Decision::Retain;
  t.grid_dimension = j.at("grid_dimension").get<int>();
  return t;
}

}  // namespace

AnalysisReport report_from_json(const json& j) {
  try {
    AnalysisReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version > kReportSchemaVersion) {
      throw Error(ErrorCode::ParseError,
                  "report schema " + std::to_string(r.schema_version) + " is newer than supported");
    }
    r.software_version = j.at("software_version").get<std::string>();
    const auto& in = j.at("input");
    r.input.x_file = in.value("x_file", "");
    r.input.y_file = in.value("y_file", "");
    r.input.x_label = in.value("x_label", "");
    r.input.y_label = in.value("y_label", "");
    r.input.m = in.at("m").get<int>();
    r.input.n = in.at("n").get<int>();
    r.input.tie_policy = in.value("tie_policy", "error");
    r.input.jitter_applied = in.value("jitter_applied", false);
    r.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("created")) r.created = j.at("created").get<std::string>();
    r.bars = bars_from_json(j.at("bars"));
    r.regions = regions_from_json(j.at("regions"));
    for (const auto& t : j.at("tests")) r.tests.push_back(test_from_json(t));
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace ccc
