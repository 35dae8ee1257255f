#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sigdoc/config.hpp"
#include "sigdoc/corpus.hpp"
#include "sigdoc/errors.hpp"
#include "sigdoc/extract.hpp"
#include "sigdoc/report.hpp"
#include "sigdoc/score.hpp"

namespace fs = std::filesystem;

namespace sigdoc::cli {
namespace {

// Effective settings after layering defaults, config file and flags.
struct Settings {
  std::vector<std::string> exclude{"test", "e2e"};
  std::string extension = ".py";
  std::optional<fs::path> stop_words_path;
  Ratio max_failure_rate{1, 4};
  std::size_t jobs = 0;
  bool follow_symlinks = false;
  bool svg = false;
  Ratio band_mass{4, 5};
  fs::path out = "sigdoc-report";
  DegeneracyThresholds thresholds;

  StopWordList stop_words() const {
    return stop_words_path ? StopWordList::load(*stop_words_path) : StopWordList::defaults();
  }
};

// Raw flag values; a flag only overrides the config when it was given.
struct Flags {
  std::string config;
  std::vector<std::string> exclude;
  std::string extension;
  std::string stop_words;
  std::string max_failure_rate;
  std::optional<std::size_t> jobs;
  bool follow_symlinks = false;
  bool svg = false;
  std::string band_mass;
  std::string out;
  bool deterministic = false;
};

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    std::string item(text.substr(pos, comma - pos));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(fold_case(item));
    pos = comma + 1;
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw ConfigError("config key '" + key + "': expected true or false, got '" + v + "'");
}

Ratio parse_ratio(const std::string& what, const std::string& v, bool allow_above_one = false) {
  try {
    Ratio r = Ratio::parse(v);
    if (!allow_above_one && r > Ratio::one()) throw std::invalid_argument("above 1");
    return r;
  } catch (const std::invalid_argument&) {
    throw ConfigError(what + ": expected a fraction in [0, 1], got '" + v + "'");
  }
}

std::size_t parse_size(const std::string& what, const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
    throw ConfigError(what + ": expected a non-negative integer, got '" + v + "'");
  }
  return std::stoull(v);
}

std::optional<fs::path> config_path(const Flags& flags) {
  if (!flags.config.empty()) return fs::path(flags.config);
  if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') return fs::path(env);
  return std::nullopt;
}

void apply_config(Settings& s, const ConfigFile& cfg, const fs::path& base) {
  for (const auto& [key, value] : cfg.values()) {
    const std::string what = cfg.origin() + ": " + key;
    if (key == "exclude") {
      s.exclude = split_list(value);
    } else if (key == "extension") {
      s.extension = value;
    } else if (key == "stop_words") {
      const fs::path p(value);
      s.stop_words_path = p.is_absolute() ? p : base / p;
    } else if (key == "max_failure_rate") {
      s.max_failure_rate = parse_ratio(what, value);
    } else if (key == "jobs") {
      s.jobs = parse_size(what, value);
    } else if (key == "follow_symlinks") {
      s.follow_symlinks = parse_bool(key, value);
    } else if (key == "svg") {
      s.svg = parse_bool(key, value);
    } else if (key == "band_mass") {
      s.band_mass = parse_ratio(what, value);
    } else if (key == "out") {
      const fs::path p(value);
      s.out = p.is_absolute() ? p : base / p;
    } else if (key == "duplicate_threshold") {
      s.thresholds.duplicate_share = parse_ratio(what, value);
    } else if (key == "zero_threshold") {
      s.thresholds.zero_share = parse_ratio(what, value);
    } else if (key == "min_project_functions") {
      s.thresholds.min_functions = parse_size(what, value);
    } else {
      throw ConfigError(cfg.origin() + ": unknown key '" + key + "'");
    }
  }
}

Settings resolve(const Flags& flags) {
  Settings s;
  if (const auto path = config_path(flags)) {
    apply_config(s, ConfigFile::load(*path), path->parent_path());
  }
  if (!flags.exclude.empty()) {
    s.exclude.clear();
    for (const auto& e : flags.exclude) {
      for (auto& item : split_list(e)) s.exclude.push_back(std::move(item));
    }
  }
  if (!flags.extension.empty()) s.extension = flags.extension;
  if (!flags.stop_words.empty()) s.stop_words_path = flags.stop_words;
  if (!flags.max_failure_rate.empty()) s.max_failure_rate = parse_ratio("--max-failure-rate", flags.max_failure_rate);
  if (flags.jobs) s.jobs = *flags.jobs;
  if (flags.follow_symlinks) s.follow_symlinks = true;
  if (flags.svg) s.svg = true;
  if (!flags.band_mass.empty()) s.band_mass = parse_ratio("--band-mass", flags.band_mass);
  if (!flags.out.empty()) s.out = flags.out;
  if (s.band_mass == Ratio::zero() || s.band_mass == Ratio::one()) {
    throw ConfigError("band mass must lie strictly between 0 and 1");
  }
  if (!s.extension.starts_with('.')) s.extension.insert(0, 1, '.');
  return s;
}

void add_config_option(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, std::string("Settings file (key = value); defaults to $") + kConfigEnvVar);
}

void add_stop_words_option(CLI::App* cmd, Flags& f) {
  cmd->add_option("--stop-words", f.stop_words, "Stop-word list, one word per line, '#' comments");
}

void add_selection_options(CLI::App* cmd, Flags& f) {
  cmd->add_option("--exclude", f.exclude,
                  "Path substring that excludes a file (repeatable or comma-separated; "
                  "replaces the default test,e2e)");
  cmd->add_option("--extension", f.extension, "Source file extension (default .py)");
}

void add_report_options(CLI::App* cmd, Flags& f) {
  cmd->add_flag("--svg", f.svg, "Also write SVG plots of every CDF");
  cmd->add_option("--band-mass", f.band_mass, "Probability mass of the central band in the summary (default 0.8)");
  cmd->add_flag("--deterministic", f.deterministic, "Suppress timing lines on standard output");
}

EmitOptions emit_options(const Settings& s) { return EmitOptions{s.band_mass, s.thresholds, s.svg}; }

std::string elapsed_line(std::chrono::steady_clock::time_point start) {
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "elapsed: %.3f s\n", secs);
  return buf;
}

int cmd_scan(const std::vector<std::string>& roots, const Flags& flags, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Settings s = resolve(flags);

  CorpusConfig cfg;
  cfg.roots.assign(roots.begin(), roots.end());
  cfg.exclude_markers = s.exclude;
  cfg.file_extension = s.extension;
  cfg.stop_words = s.stop_words();
  cfg.follow_symlinks = s.follow_symlinks;
  cfg.jobs = s.jobs;

  const CorpusReport report = build_report(scan_corpus(cfg));
  emit_reports(report, s.out, emit_options(s));

  out << render_summary(report, emit_options(s));
  out << "reports written to " << s.out.generic_string() << "\n";
  if (!flags.deterministic) out << elapsed_line(start);

  if (report.files_selected > 0 && Ratio{report.failures.size(), report.files_selected} > s.max_failure_rate) {
    err << "error: " << report.failures.size() << " of " << report.files_selected
        << " files failed to parse, above --max-failure-rate " << s.max_failure_rate.to_fixed() << "\n";
    return kFailureThreshold;
  }
  return kSuccess;
}

int cmd_report(const std::string& dir, const Flags& flags, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Settings s = resolve(flags);
  const CorpusReport report = load_report(dir);
  if (!flags.out.empty()) {
    emit_reports(report, s.out, emit_options(s));
  }
  out << render_summary(report, emit_options(s));
  if (!flags.out.empty()) out << "reports written to " << s.out.generic_string() << "\n";
  if (!flags.deterministic) out << elapsed_line(start);
  return kSuccess;
}

std::string join_words(const SignatureWordSet& sig) {
  std::string out;
  for (const auto& w : sig) {
    if (!out.empty()) out += ", ";
    out += w.text();
  }
  return out.empty() ? "(none)" : out;
}

int cmd_score_one(const std::string& file, const std::string& target, const Flags& flags, std::ostream& out,
                  std::ostream& err) {
  const Settings s = resolve(flags);
  const StopWordList stops = s.stop_words();

  std::error_code ec;
  std::ifstream in(file, std::ios::binary);
  if (!in || std::filesystem::is_directory(file, ec)) {
    err << "error: cannot read " << file << "\n";
    return kUsageError;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  auto result = extract_functions(buf.str(), file);
  if (const auto* failure = std::get_if<ParseFailure>(&result)) {
    err << "error: cannot parse " << file << ": " << failure->reason << "\n";
    return kUsageError;
  }
  const auto& records = std::get<std::vector<FunctionRecord>>(result);

  const bool by_line = !target.empty() && target.find_first_not_of("0123456789") == std::string::npos;
  std::vector<const FunctionRecord*> matches;
  for (const auto& rec : records) {
    if (by_line ? std::to_string(rec.line) == target : rec.name == target) matches.push_back(&rec);
  }
  if (matches.empty()) {
    err << "error: no function " << (by_line ? "at line " : "named ") << target << " in " << file << "\n";
    return kUsageError;
  }
  const FunctionRecord& rec = *matches.front();

  out << "file: " << file << "\n";
  out << "function: " << rec.name << " (line " << rec.line << ")\n";
  if (matches.size() > 1) {
    out << "note: " << matches.size() << " functions named " << target
        << "; showing the first, pass a line number to pick another\n";
  }
  const SignatureWordSet sig = signature_word_set(rec);
  out << "signature words: " << join_words(sig) << "\n";
  if (!has_documentation(rec)) {
    out << "no docstring\n";
    return kSuccess;
  }

  const DocWordBag bag = make_doc_bag(*rec.docstring, stops);
  const ScoreRecord score = score_function(bag, sig, stops);
  out << "docstring words: " << score.total_words << " total, " << score.meaningful_words << " meaningful\n";
  for (const auto& v : explain_score(bag, sig, stops)) {
    char line[160];
    const char* kind = v.verdict == Verdict::Novel ? "meaningful" : "meaningless";
    std::string why(to_string(v.verdict));
    if (v.verdict == Verdict::Shortened) why += ": contains '" + v.matched->text() + "'";
    std::snprintf(line, sizeof line, "  %-20s %-12s %s\n", v.word.text().c_str(), kind, why.c_str());
    out << line;
  }
  out << "meaningless words: " << score.meaningless_words << " of " << score.meaningful_words << "\n";
  if (const auto r = score.meaningless()) {
    out << "meaningless score: " << r->to_fixed() << " (" << r->to_fraction_string() << ")\n";
  } else {
    out << "meaningless score: undefined (no meaningful words)\n";
  }
  return kSuccess;
}

int cmd_explain(const Flags& flags, std::ostream& out) {
  const Settings s = resolve(flags);
  const StopWordList stops = s.stop_words();
  out << R"(Meaningless score of a function's header documentation

  1. Take the function signature (name, parameter names, parameter and
     return annotations) and its docstring.
  2. Docstring words: every run of non-alphanumeric characters becomes a
     space, camelCase and acronym runs are split, everything is lowercased.
     Words of one character and stop words are dropped; the rest form a bag
     (repetitions kept) of potentially meaningful words.
  3. Signature words: split the same way and collected into a set.
  4. A docstring word is meaningless if it is a signature word, or if some
     signature word longer than one character and not a stop word occurs
     inside it (a shortened form, e.g. 'info' explains 'information').
  5. Score = meaningless words / meaningful words. Near 1 the docstring
     restates the signature; near 0 it adds new vocabulary. A docstring with
     no meaningful word has no score.

Functions whose docstring is missing or blank count as undocumented. The
corpus statistic is the per-file undocumented fraction averaged over files.

)";
  out << "effective configuration\n";
  out << "  stop words (" << stops.size() << "):";
  for (const auto& w : stops.words()) out << " " << w;
  out << "\n  excluded path markers:";
  if (s.exclude.empty()) out << " (none)";
  for (const auto& e : s.exclude) out << " " << e;
  out << "\n  file extension: " << s.extension << "\n";
  out << "  max failure rate: " << s.max_failure_rate.to_fixed() << "\n";
  out << "  central band mass: " << s.band_mass.to_fixed() << "\n";
  out << "  degenerate project screen: duplicate docstring share >= " << s.thresholds.duplicate_share.to_fixed()
      << ", zero score share >= " << s.thresholds.zero_share.to_fixed() << ", at least "
      << s.thresholds.min_functions << " documented functions\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measure how much function docstrings repeat their signatures", "sigdoc"};
  app.require_subcommand(1);

  Flags flags;
  std::vector<std::string> roots;
  std::string file, target, report_dir;

  auto* scan = app.add_subcommand("scan", "Scan source trees and write CSV/CDF reports");
  scan->add_option("roots", roots, "Scan roots (one root: each top-level directory is a project)")->required();
  add_config_option(scan, flags);
  add_stop_words_option(scan, flags);
  add_selection_options(scan, flags);
  add_report_options(scan, flags);
  scan->add_option("--out", flags.out, "Output directory (default sigdoc-report)");
  scan->add_option("--max-failure-rate", flags.max_failure_rate,
                   "Exit with status 1 when the share of unparseable files exceeds this (default 0.25)");
  scan->add_option("--jobs", flags.jobs, "Worker threads; 0 = all cores, 1 = serial");
  scan->add_flag("--follow-symlinks", flags.follow_symlinks, "Descend into symlinked directories");

  auto* score_one = app.add_subcommand("score-one", "Score one function and explain every word");
  score_one->add_option("file", file, "Source file")->required();
  score_one->add_option("function", target, "Function name or line number")->required();
  add_config_option(score_one, flags);
  add_stop_words_option(score_one, flags);

  auto* report = app.add_subcommand("report", "Recompute summary and CDFs from an earlier scan's CSV files");
  report->add_option("dir", report_dir, "Directory holding functions.csv, files.csv, failures.csv")->required();
  report->add_option("--out", flags.out, "Write regenerated CDFs and summary here");
  add_config_option(report, flags);
  add_report_options(report, flags);

  auto* explain = app.add_subcommand("explain", "Describe the metric and print the effective configuration");
  add_config_option(explain, flags);
  add_stop_words_option(explain, flags);
  add_selection_options(explain, flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*scan) return cmd_scan(roots, flags, out, err);
    if (*score_one) return cmd_score_one(file, target, flags, out, err);
    if (*report) return cmd_report(report_dir, flags, out);
    if (*explain) return cmd_explain(flags, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace sigdoc::cli
