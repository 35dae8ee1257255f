#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sigdoc/corpus.hpp"
#include "sigdoc/ratio.hpp"

namespace sigdoc {

struct CdfPoint {
  Ratio score;
  Ratio cumulative_fraction;

  friend bool operator==(const CdfPoint&, const CdfPoint&) = default;
};

/// Empirical CDF in step form: one point per distinct score, ascending.
struct Cdf {
  std::vector<CdfPoint> points;
  std::size_t sample_count = 0;

  friend bool operator==(const Cdf&, const Cdf&) = default;
};

Cdf compute_cdf(std::span<const Ratio> scores);

/// Nearest-rank quantile: the smallest score whose cumulative fraction
/// reaches `p`. Requires 0 <= p <= 1; throws NoDataError on an empty CDF.
Ratio quantile(const Cdf& cdf, const Ratio& p);

struct Band {
  Ratio lo;
  Ratio hi;
};

/// Range holding the central `mass` of the distribution: the (1-mass)/2 and
/// 1-(1-mass)/2 nearest-rank quantiles. Throws std::invalid_argument unless
/// 0 < mass < 1, NoDataError on an empty CDF.
Band central_band(const Cdf& cdf, const Ratio& mass);

/// Unweighted mean of the per-file undocumented fraction over files that
/// define one. Throws NoDataError when no file has any function.
Ratio avg_undocumented(std::span<const FileStats> stats);

struct CorpusReport {
  std::vector<std::string> projects;
  std::map<std::string, Cdf> per_project_cdfs;
  Cdf pooled_cdf;
  std::optional<Ratio> avg_undocumented_fraction;
  std::vector<ScoredFunction> functions;
  std::vector<FileStats> file_stats;
  std::vector<ParseFailure> failures;
  std::size_t files_selected = 0;
  std::size_t undefined_score_count = 0;
  /// False when rebuilt from CSV files, which do not carry docstrings.
  bool docstrings_available = true;
};

CorpusReport build_report(ScanResult scan);

struct DegeneracyThresholds {
  Ratio duplicate_share{1, 2};  // share of documented functions with one identical docstring
  Ratio zero_share{3, 10};      // share of defined scores that are exactly 0
  std::size_t min_functions = 5;  // smaller projects are never flagged
};

struct DegenerateProject {
  std::string project;
  std::string diagnostic;

  friend bool operator==(const DegenerateProject&, const DegenerateProject&) = default;
};

/// Screens projects whose score distribution looks machine-made: a single
/// docstring repeated across most documented functions, or a pile of
/// exact-zero scores. A project can be flagged once per trigger.
std::vector<DegenerateProject> flag_degenerate_projects(const CorpusReport& report,
                                                        const DegeneracyThresholds& thresholds = {});

struct EmitOptions {
  Ratio band_mass{4, 5};
  DegeneracyThresholds thresholds;
  bool svg = false;
};

std::string render_summary(const CorpusReport& report, const EmitOptions& options = {});

/// File stem used for a project's CDF, unique within `taken`, which it
/// extends. Characters outside [A-Za-z0-9._-] become '_'.
std::string cdf_stem(std::string_view project, std::set<std::string>& taken);

/// Writes functions.csv, files.csv, failures.csv, cdf_pooled.csv, one
/// cdf_<project>.csv per project, summary.txt, and with `svg` the matching
/// plots. Each file is written to a temporary name and renamed into place.
/// Returns the written paths in write order. Throws IoError.
std::vector<std::filesystem::path> emit_reports(const CorpusReport& report, const std::filesystem::path& out_dir,
                                                const EmitOptions& options = {});

/// Rebuilds a report from functions.csv, files.csv and failures.csv in
/// `dir`. Throws ConfigError on missing or malformed files.
CorpusReport load_report(const std::filesystem::path& dir);

}  // namespace sigdoc
