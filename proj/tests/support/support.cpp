#include "support.hpp"

#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace sigdoc::test {

TempDir::TempDir() {
  static std::atomic<unsigned> counter{0};
  path_ = fs::temp_directory_path() /
          ("sigdoc-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

void write_file(const fs::path& path, std::string_view contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<std::string, std::string>> read_tree(const fs::path& dir) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    out.emplace_back(fs::relative(entry.path(), dir).generic_string(), read_file(entry.path()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

fs::path source_dir() { return SIGDOC_SOURCE_DIR; }
fs::path fixture_dir() { return source_dir() / "tests" / "fixtures"; }

namespace {

const std::vector<std::string>& vocabulary() {
  static const std::vector<std::string> v{
      "info",  "information", "set",    "sets",  "text",   "context", "tool",  "toolbar", "value",
      "path",  "name",        "file",   "user",  "parse",  "parser",  "utf8",  "count",   "index",
      "cache", "buffer",      "stream", "token", "record", "entry",   "limit", "offset",  "retry"};
  return v;
}

struct Gen {
  std::mt19937& rng;

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
  const std::string& word() { return vocabulary()[pick(vocabulary().size())]; }

  std::string identifier() {
    std::string id = word();
    std::size_t extra = pick(3);
    for (std::size_t i = 0; i < extra; ++i) {
      std::string w = word();
      if (pick(2) == 0) {
        w[0] = static_cast<char>(w[0] - 'a' + 'A');
        id += w;
      } else {
        id += "_" + w;
      }
    }
    return id;
  }

  std::string sentence() {
    static const std::vector<std::string> filler{"the", "a", "of", "and", "is", "to", "returns", "given",
                                                 "for", "each", "when", "or", "x"};
    std::string s;
    std::size_t n = 1 + pick(12);
    for (std::size_t i = 0; i < n; ++i) {
      if (i) s += " ";
      s += pick(3) == 0 ? filler[pick(filler.size())] : (pick(4) == 0 ? identifier() : word());
    }
    return s + ".";
  }

  std::string docstring(const std::string& indent) {
    switch (pick(6)) {
      case 0: return "";
      case 1: return indent + "\"\"\"   \"\"\"\n";
      case 2: return indent + "'" + sentence() + "'\n";
      case 3: return indent + "\"\"\"" + sentence() + "\n\n" + indent + sentence() + "\n" + indent + "\"\"\"\n";
      default: return indent + "\"\"\"" + sentence() + "\"\"\"\n";
    }
  }

  std::string function(const std::string& indent, int depth, bool method) {
    std::string out;
    if (pick(5) == 0) out += indent + "@decorator\n";
    out += indent + (pick(6) == 0 ? "async def " : "def ") + identifier() + "(";
    std::set<std::string> used;
    std::vector<std::string> params;
    if (method) {
      params.push_back("self");
      used.insert("self");
    }
    std::size_t n = pick(4);
    for (std::size_t i = 0; i < n; ++i) {
      std::string p = identifier();
      if (!used.insert(p).second) continue;
      if (pick(3) == 0) p += ": " + std::string(pick(2) ? "int" : "Optional[" + identifier() + "]");
      params.push_back(std::move(p));
    }
    bool defaults = false;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) out += ", ";
      out += params[i];
      if ((method && i == 0)) continue;
      if (defaults || pick(4) == 0) {
        defaults = true;
        out += pick(2) ? " = None" : " = lambda " + word() + "_arg: 0";
      }
    }
    out += ")";
    if (pick(3) == 0) out += " -> " + identifier();
    out += ":\n";
    std::string body = indent + "    ";
    out += docstring(body);
    if (depth < 2 && pick(5) == 0) out += function(body, depth + 1, false);
    out += body + "return " + (pick(2) ? "None" : "len(\"\"\"" + word() + "\"\"\")") + "\n";
    return out;
  }

  std::string module() {
    std::string out = "import os\n\n\n";
    std::size_t n = pick(6);
    for (std::size_t i = 0; i < n; ++i) {
      if (pick(4) == 0) {
        out += "class Thing" + std::to_string(i) + ":\n";
        out += pick(2) ? "    \"\"\"A class docstring is not scored.\"\"\"\n\n" : "";
        std::size_t m = 1 + pick(3);
        for (std::size_t j = 0; j < m; ++j) out += function("    ", 1, true) + "\n";
      } else {
        out += function("", 0, false) + "\n\n";
      }
    }
    if (n == 0) out += "CONSTANT = 1\n";
    return out;
  }
};

}  // namespace

void generate_corpus(const fs::path& root, std::mt19937& rng, std::size_t projects, std::size_t files_per_project) {
  Gen g{rng};
  for (std::size_t p = 0; p < projects; ++p) {
    fs::path dir = root / ("proj" + std::to_string(p));
    for (std::size_t f = 0; f < files_per_project; ++f) {
      fs::path file = dir / (f % 2 ? "pkg" : ".") / ("mod" + std::to_string(f) + ".py");
      write_file(file.lexically_normal(), g.module());
    }
  }
}

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = sigdoc::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace sigdoc::test
