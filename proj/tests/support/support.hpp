#pragma once

#include <cstddef>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace sigdoc::test {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(std::string_view rel) const { return path_ / rel; }

 private:
  std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

/// Every regular file under `dir`, keyed by relative path, in sorted order.
std::vector<std::pair<std::string, std::string>> read_tree(const std::filesystem::path& dir);

std::filesystem::path source_dir();   // repository root
std::filesystem::path fixture_dir();  // tests/fixtures

/// Writes a random, syntactically valid Python corpus of `projects` projects
/// under `root`: plain and async functions, methods, nested functions,
/// annotations, defaults, missing and blank docstrings.
void generate_corpus(const std::filesystem::path& root, std::mt19937& rng, std::size_t projects = 3,
                     std::size_t files_per_project = 4);

/// Runs the command-line front end in-process.
struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace sigdoc::test
