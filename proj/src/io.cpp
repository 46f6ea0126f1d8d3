#include "ccc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ccc/error.hpp"

namespace ccc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\"");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\"");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

std::vector<double> read_column(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open " + path.string());
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = trim(line);
    // Take the first field of a comma-separated row.
    if (const auto comma = text.find(','); comma != std::string_view::npos) {
      text = trim(text.substr(0, comma));
    }
    if (text.empty()) continue;
    double v = 0.0;
    if (parse_double(text, v)) {
      values.push_back(v);
    } else if (!seen_content) {
      // header row
    } else {
      throw Error(ErrorCode::ParseError, path.string() + ":" + std::to_string(line_no) +
                                             ": not a number: '" + std::string(text) + "'");
    }
    seen_content = true;
  }
  if (values.empty()) throw Error(ErrorCode::EmptyFile, path.string() + " holds no values");
  return values;
}

SamplePair read_samples(const std::filesystem::path& path_x, const std::filesystem::path& path_y) {
  return {read_column(path_x), read_column(path_y)};
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::WriteError, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorCode::WriteError, "failed writing " + path.string());
}

}  // namespace ccc
