#include "sigdoc/score.hpp"

namespace sigdoc {

DocWordBag make_doc_bag(std::string_view docstring, const StopWordList& stops) {
  const auto all = partition_text(docstring);
  return DocWordBag{filter_meaningful(all, stops), all.size()};
}

WordVerdict classify_word(const Word& w, const SignatureWordSet& sig, const StopWordList& stops) {
  if (sig.contains(w)) return {w, Verdict::Direct, w};
  for (const Word& v : sig) {
    if (v.length() > 1 && !stops.contains(v) && w.contains(v)) return {w, Verdict::Shortened, v};
  }
  return {w, Verdict::Novel, std::nullopt};
}

bool is_meaningless(const Word& w, const SignatureWordSet& sig, const StopWordList& stops) {
  return classify_word(w, sig, stops).verdict != Verdict::Novel;
}

bool is_meaningless(const Word& w, const SignatureWordSet& sig) {
  return is_meaningless(w, sig, StopWordList::defaults());
}

ScoreRecord score_function(const DocWordBag& doc, const SignatureWordSet& sig, const StopWordList& stops) {
  ScoreRecord rec;
  rec.total_words = doc.source_total;
  rec.meaningful_words = doc.words.size();
  for (const Word& w : doc.words) {
    if (is_meaningless(w, sig, stops)) ++rec.meaningless_words;
  }
  return rec;
}

ScoreRecord score_function(const DocWordBag& doc, const SignatureWordSet& sig) {
  return score_function(doc, sig, StopWordList::defaults());
}

std::vector<WordVerdict> explain_score(const DocWordBag& doc, const SignatureWordSet& sig,
                                       const StopWordList& stops) {
  std::vector<WordVerdict> out;
  out.reserve(doc.words.size());
  for (const Word& w : doc.words) out.push_back(classify_word(w, sig, stops));
  return out;
}

std::optional<ScoreRecord> score_record(const FunctionRecord& rec, const StopWordList& stops) {
  if (!has_documentation(rec)) return std::nullopt;
  ScoreRecord out = score_function(make_doc_bag(*rec.docstring, stops), signature_word_set(rec), stops);
  out.file = rec.file;
  out.line = rec.line;
  out.function = rec.name;
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Novel: return "novel";
    case Verdict::Direct: return "direct";
    case Verdict::Shortened: return "shortened";
  }
  return "?";
}

}  // namespace sigdoc
