#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigdoc {

/// A single lowercase alphanumeric word, stored as UTF-8.
///
/// Words are produced by the tokenizer; constructing one directly expects
/// text that is already case-folded and free of separators.
class Word {
 public:
  explicit Word(std::string text);

  const std::string& text() const noexcept { return text_; }
  /// Length in code points, not bytes.
  std::size_t length() const noexcept { return length_; }
  /// True when `other` occurs as a contiguous run inside this word.
  bool contains(const Word& other) const noexcept {
    return text_.find(other.text_) != std::string::npos;
  }

  friend bool operator==(const Word& a, const Word& b) { return a.text_ == b.text_; }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.text_ <=> b.text_;
  }

 private:
  std::string text_;
  std::size_t length_;
};

class StopWordList {
 public:
  using Set = std::set<std::string, std::less<>>;

  /// the, an, of, at, by, in, it, on, to, that, had, for, was, were.
  /// `and`, `or` and `is` are deliberately absent.
  static const StopWordList& defaults();

  /// One word per line; blank lines and `#` comments are ignored. Every
  /// non-comment line must tokenize to exactly one word. Throws ConfigError.
  static StopWordList parse(std::string_view text);
  static StopWordList load(const std::filesystem::path& path);

  StopWordList() = default;
  explicit StopWordList(Set words);

  bool contains(std::string_view word) const { return words_.contains(word); }
  bool contains(const Word& word) const { return contains(word.text()); }
  const Set& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }

  friend bool operator==(const StopWordList&, const StopWordList&) = default;

 private:
  Set words_;
};

/// Splits free text into words: every maximal alphanumeric run is a
/// candidate, which is then identifier-split and lowercased. Order and
/// duplicates are preserved. Invalid UTF-8 bytes act as separators.
std::vector<Word> partition_text(std::string_view text);

/// Splits one alphanumeric run at its internal capitalization.
///
///   setToolTipText -> set, tool, tip, text
///   HTTPServer2    -> http, server2    (acronym run keeps all but its last capital)
///   utf8           -> utf8             (letter/digit boundaries never split)
///   utf8Decoder    -> utf8, decoder    (an uppercase letter after a digit does)
std::vector<Word> split_identifier(std::string_view token);

/// Keeps words longer than one character that are not stop words.
std::vector<Word> filter_meaningful(std::span<const Word> words, const StopWordList& stops);

/// Simple one-to-one Unicode lowercase folding of a UTF-8 string. Invalid
/// bytes are passed through untouched.
std::string fold_case(std::string_view text);

}  // namespace sigdoc
