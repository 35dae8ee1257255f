#include "sigdoc/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <set>
#include <string_view>
#include <unordered_map>

#include "sigdoc/csv.hpp"
#include "sigdoc/errors.hpp"
#include "svg.hpp"

namespace fs = std::filesystem;

namespace sigdoc {
namespace {

const csv::Row kFunctionsHeader = {"file", "line", "function", "total_words", "meaningful_words",
                                   "meaningless_words", "meaningless", "flag"};
const csv::Row kFilesHeader = {"file", "total_functions", "total_empty", "empty_percent"};
const csv::Row kCdfHeader = {"score", "cumulative_fraction"};
const csv::Row kFailuresHeader = {"file", "reason"};

constexpr std::string_view kNoMeaningfulWords = "no_meaningful_words";

std::string cdf_csv(const Cdf& cdf) {
  std::string out = csv::format_row(kCdfHeader);
  for (const auto& p : cdf.points) out += csv::format_row({p.score.to_fixed(), p.cumulative_fraction.to_fixed()});
  return out;
}

std::string percent(const Ratio& r, int digits) { return (r * Ratio{100, 1}).to_fixed(digits); }

void write_atomically(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move report into place at " + path.string());
  }
}

std::size_t parse_count(const std::string& s, const fs::path& file, std::size_t row) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ConfigError(file.string() + " row " + std::to_string(row) + ": expected a count, got '" + s + "'");
  }
  return std::stoull(s);
}

std::vector<csv::Row> read_table(const fs::path& path, const csv::Row& header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<csv::Row> rows;
  try {
    rows = csv::parse(buf.str());
  } catch (const std::runtime_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  if (rows.empty() || rows.front() != header) throw ConfigError(path.string() + ": unexpected header");
  rows.erase(rows.begin());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != header.size()) {
      throw ConfigError(path.string() + " row " + std::to_string(i + 2) + ": expected " +
                        std::to_string(header.size()) + " fields");
    }
  }
  return rows;
}

}  // namespace

Cdf compute_cdf(std::span<const Ratio> scores) {
  std::vector<Ratio> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  Cdf cdf;
  cdf.sample_count = sorted.size();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
    cdf.points.push_back({sorted[i], Ratio{i + 1, sorted.size()}});
  }
  return cdf;
}

Ratio quantile(const Cdf& cdf, const Ratio& p) {
  if (cdf.sample_count == 0 || cdf.points.empty()) throw NoDataError("quantile of an empty distribution");
  if (p > Ratio::one()) throw std::invalid_argument("quantile level above 1");
  for (const auto& point : cdf.points) {
    if (point.cumulative_fraction >= p) return point.score;
  }
  return cdf.points.back().score;
}

Band central_band(const Cdf& cdf, const Ratio& mass) {
  if (mass == Ratio::zero() || mass >= Ratio::one()) throw std::invalid_argument("band mass must be in (0, 1)");
  if (cdf.sample_count == 0) throw NoDataError("central band of an empty distribution");
  const Ratio tail = (Ratio::one() - mass) / Ratio{2, 1};
  return Band{quantile(cdf, tail), quantile(cdf, Ratio::one() - tail)};
}

Ratio avg_undocumented(std::span<const FileStats> stats) {
  Ratio sum;
  std::size_t n = 0;
  for (const auto& s : stats) {
    if (auto f = s.empty_percent()) {
      sum = sum + *f;
      ++n;
    }
  }
  if (n == 0) throw NoDataError("no file defines an undocumented fraction");
  return sum / Ratio{n, 1};
}

CorpusReport build_report(ScanResult scan) {
  CorpusReport report;
  report.projects = std::move(scan.projects);
  report.files_selected = scan.files_selected;
  report.functions = std::move(scan.functions);
  report.file_stats = std::move(scan.files);
  report.failures = std::move(scan.failures);

  std::map<std::string, std::vector<Ratio>> by_project;
  for (const auto& p : report.projects) by_project[p];
  std::vector<Ratio> pooled;
  for (const auto& f : report.functions) {
    auto score = f.score.meaningless();
    if (!score) {
      ++report.undefined_score_count;
      continue;
    }
    by_project[f.project].push_back(*score);
    pooled.push_back(std::move(*score));
  }
  for (const auto& [project, scores] : by_project) report.per_project_cdfs[project] = compute_cdf(scores);
  report.pooled_cdf = compute_cdf(pooled);

  try {
    report.avg_undocumented_fraction = avg_undocumented(report.file_stats);
  } catch (const NoDataError&) {
    report.avg_undocumented_fraction.reset();
  }
  return report;
}

std::vector<DegenerateProject> flag_degenerate_projects(const CorpusReport& report,
                                                        const DegeneracyThresholds& thresholds) {
  struct Tally {
    std::size_t documented = 0;
    std::size_t defined = 0;
    std::size_t zeros = 0;
    std::unordered_map<std::string_view, std::size_t> docstrings;
  };
  std::map<std::string, Tally> tallies;
  for (const auto& f : report.functions) {
    Tally& t = tallies[f.project];
    ++t.documented;
    if (report.docstrings_available) ++t.docstrings[f.docstring];
    if (auto s = f.score.meaningless()) {
      ++t.defined;
      if (*s == Ratio::zero()) ++t.zeros;
    }
  }

  std::vector<DegenerateProject> out;
  for (const auto& [project, t] : tallies) {
    if (t.documented < thresholds.min_functions) continue;
    if (report.docstrings_available) {
      std::size_t top = 0;
      for (const auto& [doc, count] : t.docstrings) top = std::max(top, count);
      if (Ratio{top, t.documented} >= thresholds.duplicate_share) {
        out.push_back({project, "dominant duplicate docstring (" + std::to_string(top) + " of " +
                                    std::to_string(t.documented) + " documented functions share one docstring)"});
      }
    }
    if (t.defined >= thresholds.min_functions && Ratio{t.zeros, t.defined} >= thresholds.zero_share) {
      out.push_back({project, "excess zero scores (" + std::to_string(t.zeros) + " of " +
                                  std::to_string(t.defined) + " scores are exactly 0)"});
    }
  }
  return out;
}

std::string render_summary(const CorpusReport& report, const EmitOptions& options) {
  std::ostringstream out;
  const std::size_t parsed = report.file_stats.size();
  out << "files selected: " << report.files_selected << "\n";
  out << "files parsed: " << parsed << "\n";
  out << "parse failures: " << report.failures.size();
  if (report.files_selected > 0) {
    out << " (" << percent(Ratio{report.failures.size(), report.files_selected}, 2) << "%)";
  }
  out << "\n";

  std::size_t functions = 0;
  std::size_t undocumented = 0;
  for (const auto& f : report.file_stats) {
    functions += f.total_functions;
    undocumented += f.total_empty;
  }
  out << "functions: " << functions << "\n";
  out << "undocumented functions: " << undocumented << "\n";
  out << "documented functions: " << report.functions.size() << "\n";
  out << "average undocumented fraction per file: "
      << (report.avg_undocumented_fraction ? report.avg_undocumented_fraction->to_fixed() : "n/a") << "\n";
  out << "documented with no meaningful words: " << report.undefined_score_count << "\n";
  out << "scored functions: " << report.pooled_cdf.sample_count << "\n";

  out << "central " << percent(options.band_mass, 0) << "% of meaningless scores: ";
  if (report.pooled_cdf.sample_count > 0) {
    const Band band = central_band(report.pooled_cdf, options.band_mass);
    out << band.lo.to_fixed() << " - " << band.hi.to_fixed() << "\n";
  } else {
    out << "n/a\n";
  }

  out << "projects: " << report.projects.size() << "\n";
  for (const auto& project : report.projects) {
    const auto it = report.per_project_cdfs.find(project);
    const std::size_t n = it == report.per_project_cdfs.end() ? 0 : it->second.sample_count;
    out << "  " << project << ": " << n << " scored";
    if (n > 0) out << ", median " << quantile(it->second, Ratio{1, 2}).to_fixed();
    out << "\n";
  }

  const auto degenerate = flag_degenerate_projects(report, options.thresholds);
  std::set<std::string_view> flagged;
  for (const auto& d : degenerate) flagged.insert(d.project);
  out << "flagged projects: " << flagged.size() << "\n";
  for (const auto& d : degenerate) out << "  " << d.project << ": " << d.diagnostic << "\n";
  return out.str();
}

std::string cdf_stem(std::string_view project, std::set<std::string>& taken) {
  std::string stem = "cdf_";
  for (char c : project) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' ||
                      c == '_' || c == '-';
    stem.push_back(keep ? c : '_');
  }
  std::string candidate = stem;
  for (int n = 2; !taken.insert(candidate).second; ++n) candidate = stem + "_" + std::to_string(n);
  return candidate;
}

std::vector<fs::path> emit_reports(const CorpusReport& report, const fs::path& out_dir, const EmitOptions& options) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) throw IoError("cannot create output directory " + out_dir.string());

  std::vector<fs::path> written;
  auto write = [&](const std::string& name, const std::string& contents) {
    const fs::path path = out_dir / name;
    write_atomically(path, contents);
    written.push_back(path);
  };

  std::string functions = csv::format_row(kFunctionsHeader);
  for (const auto& f : report.functions) {
    const auto& s = f.score;
    const auto score = s.meaningless();
    functions += csv::format_row({s.file, std::to_string(s.line), s.function, std::to_string(s.total_words),
                                  std::to_string(s.meaningful_words), std::to_string(s.meaningless_words),
                                  score ? score->to_fixed() : "", score ? "" : std::string(kNoMeaningfulWords)});
  }
  write("functions.csv", functions);

  std::string files = csv::format_row(kFilesHeader);
  for (const auto& f : report.file_stats) {
    const auto pct = f.empty_percent();
    files += csv::format_row({f.file, std::to_string(f.total_functions), std::to_string(f.total_empty),
                              pct ? pct->to_fixed() : ""});
  }
  write("files.csv", files);

  std::string failures = csv::format_row(kFailuresHeader);
  for (const auto& f : report.failures) failures += csv::format_row({f.file, f.reason});
  write("failures.csv", failures);

  write("cdf_pooled.csv", cdf_csv(report.pooled_cdf));
  std::set<std::string> taken{"cdf_pooled", "cdf_projects"};
  std::vector<std::pair<std::string, std::string>> stems;
  for (const auto& [project, cdf] : report.per_project_cdfs) {
    stems.emplace_back(project, cdf_stem(project, taken));
    write(stems.back().second + ".csv", cdf_csv(cdf));
  }

  write("summary.txt", render_summary(report, options));

  if (options.svg) {
    write("cdf_pooled.svg", svg::render_cdfs({{"all projects", &report.pooled_cdf}},
                                             "Meaningless score, all documented functions"));
    std::vector<svg::Series> all;
    for (const auto& [project, stem] : stems) {
      const Cdf& cdf = report.per_project_cdfs.at(project);
      all.emplace_back(project, &cdf);
      write(stem + ".svg", svg::render_cdfs({{project, &cdf}}, "Meaningless score, " + project));
    }
    write("cdf_projects.svg", svg::render_cdfs(all, "Meaningless score by project"));
  }
  return written;
}

CorpusReport load_report(const fs::path& dir) {
  ScanResult scan;
  std::set<std::string> projects;

  const fs::path functions_path = dir / "functions.csv";
  std::size_t row = 1;
  for (auto& r : read_table(functions_path, kFunctionsHeader)) {
    ++row;
    ScoredFunction f;
    f.score.file = r[0];
    f.score.line = parse_count(r[1], functions_path, row);
    f.score.function = r[2];
    f.score.total_words = parse_count(r[3], functions_path, row);
    f.score.meaningful_words = parse_count(r[4], functions_path, row);
    f.score.meaningless_words = parse_count(r[5], functions_path, row);
    if (f.score.meaningless_words > f.score.meaningful_words || f.score.meaningful_words > f.score.total_words) {
      throw ConfigError(functions_path.string() + " row " + std::to_string(row) + ": inconsistent word counts");
    }
    f.project = project_of(f.score.file);
    scan.functions.push_back(std::move(f));
  }

  const fs::path files_path = dir / "files.csv";
  row = 1;
  for (auto& r : read_table(files_path, kFilesHeader)) {
    ++row;
    FileStats s{r[0], project_of(r[0]), parse_count(r[1], files_path, row), parse_count(r[2], files_path, row)};
    if (s.total_empty > s.total_functions) {
      throw ConfigError(files_path.string() + " row " + std::to_string(row) + ": more empty than total functions");
    }
    projects.insert(s.project);
    scan.files.push_back(std::move(s));
  }

  for (auto& r : read_table(dir / "failures.csv", kFailuresHeader)) {
    projects.insert(project_of(r[0]));
    scan.failures.push_back(ParseFailure{std::move(r[0]), std::move(r[1])});
  }
  for (const auto& f : scan.functions) projects.insert(f.project);

  scan.files_selected = scan.files.size() + scan.failures.size();
  scan.projects.assign(projects.begin(), projects.end());
  CorpusReport report = build_report(std::move(scan));
  report.docstrings_available = false;
  return report;
}

}  // namespace sigdoc
