#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace ccc {

/// One numeric value per row; a single non-numeric first row is taken as a
/// header. Blank lines are skipped. Errors: FileNotFound, ParseError (with the
/// 1-based line number), EmptyFile.
std::vector<double> read_column(const std::filesystem::path& path);

struct SamplePair {
  std::vector<double> x;
  std::vector<double> y;
};

SamplePair read_samples(const std::filesystem::path& path_x, const std::filesystem::path& path_y);

/// Writes `content` to `path`, throwing WriteError on failure.
void write_text(const std::filesystem::path& path, const std::string& content);

}  // namespace ccc
