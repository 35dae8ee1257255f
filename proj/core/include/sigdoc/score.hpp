#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigdoc/extract.hpp"
#include "sigdoc/ratio.hpp"
#include "sigdoc/tokenize.hpp"

namespace sigdoc {

/// The potentially meaningful words of a docstring, repetitions kept.
struct DocWordBag {
  std::vector<Word> words;
  std::size_t source_total = 0;  // word count before length/stop filtering
};

DocWordBag make_doc_bag(std::string_view docstring, const StopWordList& stops);

struct ScoreRecord {
  std::string file;
  std::size_t line = 0;
  std::string function;
  std::size_t total_words = 0;
  std::size_t meaningful_words = 0;   // |W_Doc|
  std::size_t meaningless_words = 0;  // |M|

  /// meaningless_words / meaningful_words, or nullopt when the docstring
  /// has no meaningful word at all.
  std::optional<Ratio> meaningless() const {
    if (meaningful_words == 0) return std::nullopt;
    return Ratio{meaningless_words, meaningful_words};
  }

  friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

enum class Verdict {
  Novel,      // adds vocabulary the signature does not carry
  Direct,     // the word itself is in the signature
  Shortened,  // a signature word is a contiguous piece of it (info -> information)
};

struct WordVerdict {
  Word word;
  Verdict verdict;
  std::optional<Word> matched;  // the signature word behind a Direct/Shortened hit
};

/// Classifies one doc word against the signature. Direct membership is
/// tried first; failing that, any signature word longer than one character
/// that is not a stop word and occurs inside `w` makes it Shortened.
WordVerdict classify_word(const Word& w, const SignatureWordSet& sig, const StopWordList& stops);

bool is_meaningless(const Word& w, const SignatureWordSet& sig, const StopWordList& stops);
bool is_meaningless(const Word& w, const SignatureWordSet& sig);

/// Counts, over the bag and with multiplicity, the words the signature
/// already explains. file/line/function are left for the caller.
ScoreRecord score_function(const DocWordBag& doc, const SignatureWordSet& sig, const StopWordList& stops);
ScoreRecord score_function(const DocWordBag& doc, const SignatureWordSet& sig);

/// Per-word classification in bag order, for explaining a score.
std::vector<WordVerdict> explain_score(const DocWordBag& doc, const SignatureWordSet& sig,
                                       const StopWordList& stops);

/// Scores a documented function record end to end. Returns nullopt when the
/// record carries no documentation.
std::optional<ScoreRecord> score_record(const FunctionRecord& rec, const StopWordList& stops);

std::string_view to_string(Verdict v);

}  // namespace sigdoc
