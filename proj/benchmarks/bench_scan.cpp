#include <benchmark/benchmark.h>

#include <string>

#include "sigdoc/corpus.hpp"
#include "sigdoc/extract.hpp"
#include "sigdoc/report.hpp"

namespace {

std::string module(std::size_t functions) {
  std::string out = "import os\n\n\nclass Service:\n    \"\"\"Service wrapper.\"\"\"\n\n";
  for (std::size_t i = 0; i < functions; ++i) {
    const std::string n = std::to_string(i);
    out += "    @cached\n    async def fetch_item_" + n +
           "(self, item_id: int, *, retries: int = 3, hook=lambda e: None) -> Optional[Item]:\n"
           "        \"\"\"Fetch item " + n + " from the backing store.\n\n"
           "        Retries with exponential backoff; returns None when missing.\n        \"\"\"\n"
           "        data = {'key': [1, 2, (3, 4)], \"s\": f'{item_id}'}\n"
           "        return await self._get(item_id, data)\n\n";
  }
  return out;
}

void BM_ExtractFunctions(benchmark::State& state) {
  const std::string src = module(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sigdoc::extract_functions(src, "bench.py"));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_ExtractFunctions)->Range(1, 512);

void BM_ScanFixtureCorpus(benchmark::State& state) {
  sigdoc::CorpusConfig cfg;
  cfg.roots = {SIGDOC_FIXTURE_CORPUS};
  cfg.jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigdoc::build_report(sigdoc::scan_corpus(cfg)));
}
BENCHMARK(BM_ScanFixtureCorpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
