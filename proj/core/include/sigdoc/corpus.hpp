#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sigdoc/extract.hpp"
#include "sigdoc/ratio.hpp"
#include "sigdoc/score.hpp"
#include "sigdoc/tokenize.hpp"

namespace sigdoc {

/// Project name given to files that sit directly in a scan root.
inline constexpr std::string_view kRootProject = "(root)";

struct CorpusConfig {
  /// Scan roots. With one root, each top-level directory under it is a
  /// project. With several, each root is a project named after its last
  /// path component, and file labels are prefixed with that name.
  std::vector<std::filesystem::path> roots;
  /// Lowercase substrings; a file whose root-relative path contains any of
  /// them (case-insensitively) is skipped.
  std::vector<std::string> exclude_markers{"test", "e2e"};
  std::string file_extension = ".py";
  StopWordList stop_words = StopWordList::defaults();
  bool follow_symlinks = false;
  /// Worker threads for scanning; 0 means hardware concurrency.
  std::size_t jobs = 0;
};

/// Throws ConfigError when the configuration violates its invariants.
void validate(const CorpusConfig& cfg);

struct SourceFile {
  std::filesystem::path path;  // on-disk location
  std::string label;           // forward-slash path used in every report
  std::string project;

  friend bool operator==(const SourceFile&, const SourceFile&) = default;
};

/// Project a report label belongs to: its first path component, or
/// kRootProject for a label without a directory.
std::string project_of(std::string_view label);

/// Files with the configured extension outside excluded paths, sorted by
/// label. Throws ConfigError for a missing or unreadable root.
std::vector<SourceFile> select_files(const CorpusConfig& cfg);

struct FileStats {
  std::string file;
  std::string project;
  std::size_t total_functions = 0;
  std::size_t total_empty = 0;  // functions without documentation

  std::optional<Ratio> empty_percent() const {
    if (total_functions == 0) return std::nullopt;
    return Ratio{total_empty, total_functions};
  }

  friend bool operator==(const FileStats&, const FileStats&) = default;
};

/// A ScoreRecord together with what the report layer needs to group it.
struct ScoredFunction {
  ScoreRecord score;
  std::string project;
  std::string docstring;

  friend bool operator==(const ScoredFunction&, const ScoredFunction&) = default;
};

struct ScanResult {
  std::vector<ScoredFunction> functions;  // sorted by (file, line)
  std::vector<FileStats> files;           // sorted by file; parsed files only
  std::vector<ParseFailure> failures;     // sorted by file
  std::vector<std::string> projects;      // every project with a selected file, sorted
  std::size_t files_selected = 0;

  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

/// Extracts and scores one file's contents. Used by scan_corpus for each
/// selected file; exposed for callers that already hold the bytes.
struct FileScan {
  std::optional<FileStats> stats;
  std::vector<ScoredFunction> functions;
  std::optional<ParseFailure> failure;
};
FileScan scan_source(std::string_view source, const SourceFile& file, const StopWordList& stops);

/// Runs extraction and scoring over every selected file. Files that cannot
/// be read, decoded or parsed land in `failures` and contribute nothing
/// else. Output is identical for any `jobs` value.
ScanResult scan_corpus(const CorpusConfig& cfg);

}  // namespace sigdoc
