#include <gtest/gtest.h>

#include <random>

#include "sigdoc/corpus.hpp"
#include "sigdoc/errors.hpp"
#include "support.hpp"

using namespace sigdoc;
using sigdoc::test::TempDir;
using sigdoc::test::write_file;

namespace fs = std::filesystem;

namespace {

std::vector<std::string> labels(const std::vector<SourceFile>& files) {
  std::vector<std::string> out;
  for (const auto& f : files) out.push_back(f.label);
  return out;
}

CorpusConfig config_for(const fs::path& root) {
  CorpusConfig cfg;
  cfg.roots = {root};
  return cfg;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST(SelectFiles, ExcludesTestAndE2eCaseInsensitively) {
  TempDir d;
  for (const char* f : {"alpha/pkg/core.py", "alpha/tests/test_core.py", "alpha/pkg/TestHelpers.py",
                        "alpha/contest.py", "beta/e2e/run.py", "beta/E2E_suite/x.py", "beta/mod.py",
                        "beta/notes.txt", "beta/mod.pyc", "script.py"})
    write_file(d / f, "X = 1\n");
  auto files = select_files(config_for(d.path()));
  EXPECT_EQ(labels(files), (Strings{"alpha/pkg/core.py", "beta/mod.py", "script.py"}));
  EXPECT_EQ(files[0].project, "alpha");
  EXPECT_EQ(files[2].project, std::string(kRootProject));
  EXPECT_EQ(files[1].path, d / "beta/mod.py");
}

TEST(SelectFiles, MarkersAndExtensionAreConfigurable) {
  TempDir d;
  for (const char* f : {"p/a.py", "p/tests/b.py", "p/vendor/c.py", "p/d.pyi"}) write_file(d / f, "");
  auto cfg = config_for(d.path());
  cfg.exclude_markers = {"vendor"};
  EXPECT_EQ(labels(select_files(cfg)), (Strings{"p/a.py", "p/tests/b.py"}));
  cfg.exclude_markers = {};
  cfg.file_extension = ".pyi";
  EXPECT_EQ(labels(select_files(cfg)), (Strings{"p/d.pyi"}));
}

TEST(SelectFiles, MarkerMatchesOnlyTheRootRelativePath) {
  TempDir d;
  write_file(d / "latest" / "proj" / "a.py", "");
  EXPECT_EQ(labels(select_files(config_for(d / "latest"))), (Strings{"proj/a.py"}));
}

TEST(SelectFiles, MultipleRootsArePrefixedProjects) {
  TempDir d;
  write_file(d / "one" / "pkg" / "a.py", "");
  write_file(d / "two" / "b.py", "");
  CorpusConfig cfg;
  cfg.roots = {d / "two", d / "one"};
  auto files = select_files(cfg);
  EXPECT_EQ(labels(files), (Strings{"one/pkg/a.py", "two/b.py"}));
  EXPECT_EQ(files[0].project, "one");
  EXPECT_EQ(files[1].project, "two");
}

TEST(SelectFiles, ConfigErrors) {
  TempDir d;
  fs::create_directories(d / "x" / "same");
  fs::create_directories(d / "y" / "same");
  CorpusConfig dup;
  dup.roots = {d / "x" / "same", d / "y" / "same"};
  EXPECT_THROW(select_files(dup), ConfigError);
  EXPECT_THROW(select_files(config_for(d / "missing")), ConfigError);
  EXPECT_THROW(select_files(CorpusConfig{}), ConfigError);
  auto upper = config_for(d.path());
  upper.exclude_markers = {"Test"};
  EXPECT_THROW(validate(upper), ConfigError);
  auto noext = config_for(d.path());
  noext.file_extension = "";
  EXPECT_THROW(validate(noext), ConfigError);
}

TEST(SelectFiles, SymlinksAreNotFollowedByDefault) {
  TempDir d;
  write_file(d / "real" / "pkg" / "a.py", "");
  fs::create_directories(d / "root" / "proj");
  write_file(d / "root" / "proj" / "own.py", "");
  fs::create_directory_symlink(d / "real" / "pkg", d / "root" / "proj" / "linked");
  fs::create_symlink(d / "real" / "pkg" / "a.py", d / "root" / "proj" / "alias.py");
  auto cfg = config_for(d / "root");
  EXPECT_EQ(labels(select_files(cfg)), (Strings{"proj/own.py"}));
  cfg.follow_symlinks = true;
  EXPECT_EQ(labels(select_files(cfg)), (Strings{"proj/alias.py", "proj/linked/a.py", "proj/own.py"}));
}

TEST(ProjectOf, FirstComponentOrRoot) {
  EXPECT_EQ(project_of("ledger/ledger/money.py"), "ledger");
  EXPECT_EQ(project_of("manage.py"), std::string(kRootProject));
}

TEST(ScanCorpus, ThreeFilesTenFunctionsFourDocumented) {
  TempDir d;
  write_file(d / "p" / "a.py",
             "def one():\n    'First function.'\n\ndef two(): pass\n\ndef three():\n    pass\n");
  write_file(d / "p" / "b.py",
             "class K:\n    def m1(self):\n        \"\"\"Method one docs.\"\"\"\n    def m2(self): pass\n"
             "    def m3(self): '   '\n");
  write_file(d / "q" / "c.py",
             "async def fetch(url):\n    'Fetch the url.'\n    def inner(): 'It was the.'\n"
             "    return inner\n\ndef f1(): pass\ndef f2(): pass\n");
  auto scan = scan_corpus(config_for(d.path()));
  ASSERT_EQ(scan.files.size(), 3u);
  EXPECT_TRUE(scan.failures.empty());
  EXPECT_EQ(scan.files_selected, 3u);
  ASSERT_EQ(scan.functions.size(), 4u);
  std::size_t total = 0, documented = 0;
  for (const auto& f : scan.files) {
    total += f.total_functions;
    documented += f.total_functions - f.total_empty;
  }
  EXPECT_EQ(total, 10u);
  EXPECT_EQ(documented, scan.functions.size());
  EXPECT_EQ(scan.functions[3].score.function, "inner");
  EXPECT_FALSE(scan.functions[3].score.meaningless());
  EXPECT_EQ(scan.projects, (Strings{"p", "q"}));
}

TEST(ScanCorpus, FileWithoutDocstringsAndFileWithoutFunctions) {
  TempDir d;
  write_file(d / "p" / "bare.py", "def a(): pass\ndef b(): pass\n");
  write_file(d / "p" / "consts.py", "X = 1\n");
  auto scan = scan_corpus(config_for(d.path()));
  ASSERT_EQ(scan.files.size(), 2u);
  EXPECT_EQ(scan.files[0].empty_percent(), Ratio::one());
  EXPECT_FALSE(scan.files[1].empty_percent());
  EXPECT_TRUE(scan.functions.empty());
}

TEST(ScanCorpus, FailuresAreIsolated) {
  TempDir d;
  write_file(d / "p" / "good.py", "def good():\n    'Good docs here.'\n");
  auto before = scan_corpus(config_for(d.path()));
  write_file(d / "p" / "junk.py", std::string("\x00\x01\xff\xfe binary", 12));
  write_file(d / "p" / "zbad.py", "def broken(:\n");
  auto after = scan_corpus(config_for(d.path()));
  ASSERT_EQ(after.failures.size(), 2u);
  EXPECT_EQ(after.failures[0].file, "p/junk.py");
  EXPECT_EQ(after.failures[1].file, "p/zbad.py");
  EXPECT_FALSE(after.failures[0].reason.empty());
  EXPECT_EQ(after.files, before.files);
  EXPECT_EQ(after.functions, before.functions);
  EXPECT_EQ(after.files_selected, 3u);
}

TEST(ScanCorpus, ScanSourceMatchesScanCorpus) {
  SourceFile file{"unused", "p/m.py", "p"};
  auto fs_ = scan_source("def f(info):\n    'Information.'\n", file, StopWordList::defaults());
  ASSERT_TRUE(fs_.stats);
  EXPECT_FALSE(fs_.failure);
  ASSERT_EQ(fs_.functions.size(), 1u);
  EXPECT_EQ(fs_.functions[0].score.meaningless(), Ratio::one());
  EXPECT_EQ(fs_.functions[0].docstring, "Information.");
  auto bad = scan_source("def f(\n", file, StopWordList::defaults());
  EXPECT_TRUE(bad.failure);
  EXPECT_FALSE(bad.stats);
  EXPECT_TRUE(bad.functions.empty());
}

TEST(ScanCorpus, JobCountDoesNotChangeResults) {
  std::mt19937 rng(77);
  for (int i = 0; i < 25; ++i) {
    TempDir d;
    sigdoc::test::generate_corpus(d.path(), rng, 3, 6);
    write_file(d / "proj1" / "broken.py", "def oops(\n");
    auto cfg = config_for(d.path());
    cfg.jobs = 1;
    auto serial = scan_corpus(cfg);
    for (std::size_t jobs : {0u, 2u, 5u, 64u}) {
      cfg.jobs = jobs;
      ASSERT_EQ(scan_corpus(cfg), serial) << "jobs=" << jobs;
    }
    ASSERT_EQ(serial.failures.size(), 1u);
  }
}
