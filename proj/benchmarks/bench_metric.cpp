#include <benchmark/benchmark.h>

#include <string>

#include "sigdoc/score.hpp"
#include "sigdoc/tokenize.hpp"

namespace {

std::string docstring(std::size_t sentences) {
  std::string out;
  for (std::size_t i = 0; i < sentences; ++i)
    out += "Returns the parsedHTTPHeader values for requestId " + std::to_string(i) +
           ", decoding utf8Payload fields; see RFC 7230 section 3.2.\n";
  return out;
}

void BM_PartitionText(benchmark::State& state) {
  const std::string text = docstring(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sigdoc::partition_text(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_PartitionText)->Range(1, 256);

void BM_PartitionTextUnicode(benchmark::State& state) {
  std::string text;
  for (int i = 0; i < state.range(0); ++i) text += "Liefert die ÜberschriftWerte für straße Ωmega, мирТекст 日本語. ";
  for (auto _ : state) benchmark::DoNotOptimize(sigdoc::partition_text(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_PartitionTextUnicode)->Range(1, 256);

void BM_ScoreFunction(benchmark::State& state) {
  const auto& stops = sigdoc::StopWordList::defaults();
  const auto bag = sigdoc::make_doc_bag(docstring(static_cast<std::size_t>(state.range(0))), stops);
  sigdoc::SignatureWordSet sig;
  for (const char* part : {"parse_http_header", "request_id", "Optional[Dict[str, bytes]]", "payload", "HeaderMap"})
    sig.insert_text(part);
  for (auto _ : state) benchmark::DoNotOptimize(sigdoc::score_function(bag, sig, stops));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * bag.words.size()));
}
BENCHMARK(BM_ScoreFunction)->Range(1, 256);

}  // namespace
