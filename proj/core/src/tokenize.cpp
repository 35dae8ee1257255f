#include "sigdoc/tokenize.hpp"

#include <fstream>
#include <sstream>

#include "sigdoc/errors.hpp"
#include "utf8.hpp"

namespace sigdoc {
namespace {

enum class CharClass { Upper, Lower, Other };

struct CodePoint {
  char32_t cp;
  CharClass cls;
};

CharClass classify(char32_t cp) {
  // Titlecase letters report both upper and lower; treat them as capitals.
  if (utf8::is_upper(cp)) return CharClass::Upper;
  if (utf8::is_lower(cp)) return CharClass::Lower;
  return CharClass::Other;
}

Word make_word(const std::vector<CodePoint>& cps, std::size_t begin, std::size_t end) {
  std::string text;
  text.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) utf8::append(text, utf8::to_lower(cps[i].cp));
  return Word{std::move(text)};
}

void split_run(const std::vector<CodePoint>& cps, std::vector<Word>& out) {
  std::size_t start = 0;
  for (std::size_t i = 1; i < cps.size(); ++i) {
    if (cps[i].cls != CharClass::Upper) continue;
    const bool after_non_upper = cps[i - 1].cls != CharClass::Upper;
    const bool closes_acronym = cps[i - 1].cls == CharClass::Upper && i + 1 < cps.size() &&
                                cps[i + 1].cls == CharClass::Lower;
    if (after_non_upper || closes_acronym) {
      out.push_back(make_word(cps, start, i));
      start = i;
    }
  }
  if (start < cps.size()) out.push_back(make_word(cps, start, cps.size()));
}

}  // namespace

Word::Word(std::string text) : text_(std::move(text)), length_(utf8::length(text_)) {}

const StopWordList& StopWordList::defaults() {
  static const StopWordList list{Set{"the", "an", "of", "at", "by", "in", "it", "on", "to", "that",
                                     "had", "for", "was", "were"}};
  return list;
}

StopWordList::StopWordList(Set words) {
  for (const auto& w : words) words_.insert(fold_case(w));
}

StopWordList StopWordList::parse(std::string_view text) {
  Set words;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = partition_text(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 1) {
      throw ConfigError("stop-word list line " + std::to_string(line_no) +
                        ": expected a single word, got '" + std::string(line) + "'");
    }
    words.insert(tokens.front().text());
  }
  return StopWordList{std::move(words)};
}

StopWordList StopWordList::load(const std::filesystem::path& path) {
  std::error_code ec;
  std::ifstream in(path, std::ios::binary);
  if (!in || std::filesystem::is_directory(path, ec)) throw ConfigError("cannot read stop-word file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ConfigError("cannot read stop-word file " + path.string());
  return parse(buf.str());
}

std::vector<Word> split_identifier(std::string_view token) {
  std::vector<CodePoint> cps;
  std::vector<Word> out;
  for (std::size_t pos = 0; pos < token.size();) {
    const auto d = utf8::decode(token, pos);
    pos += d.width;
    if (d.cp == utf8::kInvalid || !utf8::is_alnum(d.cp)) {
      split_run(cps, out);
      cps.clear();
      continue;
    }
    cps.push_back({d.cp, classify(d.cp)});
  }
  split_run(cps, out);
  return out;
}

std::vector<Word> partition_text(std::string_view text) {
  std::vector<Word> out;
  std::vector<CodePoint> run;
  for (std::size_t pos = 0; pos < text.size();) {
    const auto d = utf8::decode(text, pos);
    pos += d.width;
    if (d.cp != utf8::kInvalid && utf8::is_alnum(d.cp)) {
      run.push_back({d.cp, classify(d.cp)});
    } else if (!run.empty()) {
      split_run(run, out);
      run.clear();
    }
  }
  split_run(run, out);
  return out;
}

std::vector<Word> filter_meaningful(std::span<const Word> words, const StopWordList& stops) {
  std::vector<Word> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    if (w.length() > 1 && !stops.contains(w)) out.push_back(w);
  }
  return out;
}

std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const auto d = utf8::decode(text, pos);
    if (d.cp == utf8::kInvalid) {
      out.push_back(text[pos]);
    } else {
      utf8::append(out, utf8::to_lower(d.cp));
    }
    pos += d.width;
  }
  return out;
}

}  // namespace sigdoc
