#include "sigdoc/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "sigdoc/errors.hpp"

namespace fs = std::filesystem;

namespace sigdoc {
namespace {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool excluded(std::string_view relative, const std::vector<std::string>& markers) {
  const std::string folded = fold_case(relative);
  return std::any_of(markers.begin(), markers.end(), [&](const std::string& m) {
    return !m.empty() && folded.find(m) != std::string::npos;
  });
}

std::string root_name(const fs::path& root) {
  const fs::path normal = root.lexically_normal();
  std::string name = normal.filename().string();
  if (name.empty()) name = normal.parent_path().filename().string();
  if (name.empty() || name == ".") name = fs::absolute(root).lexically_normal().filename().string();
  return name;
}

void collect(const fs::path& root, const std::string& prefix, const CorpusConfig& cfg,
             std::vector<SourceFile>& out) {
  std::error_code ec;
  auto options = fs::directory_options::skip_permission_denied;
  if (cfg.follow_symlinks) options |= fs::directory_options::follow_directory_symlink;
  fs::recursive_directory_iterator it(root, options, ec);
  if (ec) throw ConfigError("cannot read root " + root.string() + ": " + ec.message());

  const std::string ext = ascii_lower(cfg.file_extension);
  for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
    if (ec) throw ConfigError("error walking " + root.string() + ": " + ec.message());
    const fs::directory_entry& entry = *it;
    if (!cfg.follow_symlinks && entry.is_symlink(ec)) continue;
    if (!entry.is_regular_file(ec)) continue;
    if (ascii_lower(entry.path().extension().string()) != ext) continue;

    const std::string relative = entry.path().lexically_relative(root).generic_string();
    if (excluded(relative, cfg.exclude_markers)) continue;
    std::string label = prefix.empty() ? relative : prefix + "/" + relative;
    std::string project = project_of(label);
    out.push_back(SourceFile{entry.path(), std::move(label), std::move(project)});
  }
}

std::optional<std::string> read_file(const fs::path& path, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open file";
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    error = "read error";
    return std::nullopt;
  }
  return std::move(buf).str();
}

}  // namespace

void validate(const CorpusConfig& cfg) {
  if (cfg.roots.empty()) throw ConfigError("no scan roots given");
  for (const auto& m : cfg.exclude_markers) {
    if (m != fold_case(m)) throw ConfigError("exclude marker '" + m + "' must be lowercase");
  }
  if (cfg.file_extension.empty()) throw ConfigError("file extension must not be empty");
}

std::string project_of(std::string_view label) {
  const auto slash = label.find('/');
  if (slash == std::string_view::npos) return std::string(kRootProject);
  return std::string(label.substr(0, slash));
}

std::vector<SourceFile> select_files(const CorpusConfig& cfg) {
  validate(cfg);
  std::vector<SourceFile> out;
  std::set<std::string> names;
  for (const auto& root : cfg.roots) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) throw ConfigError("scan root is not a readable directory: " + root.string());
    std::string prefix;
    if (cfg.roots.size() > 1) {
      prefix = root_name(root);
      if (!names.insert(prefix).second) {
        throw ConfigError("two scan roots share the name '" + prefix + "'");
      }
    }
    collect(root, prefix, cfg, out);
  }
  std::sort(out.begin(), out.end(), [](const SourceFile& a, const SourceFile& b) { return a.label < b.label; });
  return out;
}

FileScan scan_source(std::string_view source, const SourceFile& file, const StopWordList& stops) {
  FileScan out;
  auto result = extract_functions(source, file.label);
  if (auto* failure = std::get_if<ParseFailure>(&result)) {
    out.failure = std::move(*failure);
    return out;
  }
  const auto& records = std::get<std::vector<FunctionRecord>>(result);
  FileStats stats{file.label, file.project, records.size(), 0};
  for (const auto& rec : records) {
    auto score = score_record(rec, stops);
    if (!score) {
      ++stats.total_empty;
      continue;
    }
    out.functions.push_back(ScoredFunction{std::move(*score), file.project, *rec.docstring});
  }
  out.stats = std::move(stats);
  return out;
}

ScanResult scan_corpus(const CorpusConfig& cfg) {
  const auto files = select_files(cfg);

  std::vector<FileScan> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      std::string error;
      if (auto bytes = read_file(files[i].path, error)) {
        results[i] = scan_source(*bytes, files[i], cfg.stop_words);
      } else {
        results[i].failure = ParseFailure{files[i].label, error};
      }
    }
  };

  std::size_t jobs = cfg.jobs != 0 ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(files.size(), 1));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  ScanResult scan;
  scan.files_selected = files.size();
  std::set<std::string> projects;
  for (std::size_t i = 0; i < files.size(); ++i) {
    projects.insert(files[i].project);
    auto& r = results[i];
    if (r.failure) {
      scan.failures.push_back(std::move(*r.failure));
      continue;
    }
    scan.files.push_back(std::move(*r.stats));
    std::move(r.functions.begin(), r.functions.end(), std::back_inserter(scan.functions));
  }
  std::stable_sort(scan.functions.begin(), scan.functions.end(), [](const auto& a, const auto& b) {
    return std::tie(a.score.file, a.score.line) < std::tie(b.score.file, b.score.line);
  });
  scan.projects.assign(projects.begin(), projects.end());
  return scan;
}

}  // namespace sigdoc
