#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sigdoc/tokenize.hpp"

namespace sigdoc {

/// One function or method definition found in a source file.
struct FunctionRecord {
  std::string file;
  std::size_t line = 0;  // 1-based line of the `def` (or `async`) keyword
  std::string name;
  std::vector<std::string> param_names;
  std::vector<std::optional<std::string>> param_types;  // parallel to param_names
  std::optional<std::string> return_type;
  /// Value of the leading string-literal statement of the body, with quotes
  /// removed and escapes decoded. Present even when it is blank; use
  /// has_documentation() to ask whether it documents anything.
  std::optional<std::string> docstring;
  /// Number of enclosing function and class definitions.
  std::size_t nesting_depth = 0;
  bool is_async = false;

  friend bool operator==(const FunctionRecord&, const FunctionRecord&) = default;
};

struct ParseFailure {
  std::string file;
  std::string reason;

  friend bool operator==(const ParseFailure&, const ParseFailure&) = default;
};

using ExtractResult = std::variant<std::vector<FunctionRecord>, ParseFailure>;

/// Extracts every function definition, at any nesting depth, in source
/// order. Accepts the Python function-definition grammar: plain and async
/// definitions, decorators, nested functions, methods, positional-only and
/// keyword-only markers, annotations and defaults.
///
/// Never throws on bad input: undecodable bytes, unterminated literals,
/// unbalanced brackets, indentation errors and malformed definitions all
/// come back as a ParseFailure naming the line.
ExtractResult extract_functions(std::string_view source, std::string_view file);

/// A docstring that is absent, empty or whitespace-only is no documentation.
bool has_documentation(const FunctionRecord& rec);

/// Deduplicated set of words drawn from a function's name, parameter names,
/// parameter annotations and return annotation. Default values never
/// contribute. Members are not length- or stop-word-filtered.
class SignatureWordSet {
 public:
  using Set = std::set<Word>;

  SignatureWordSet() = default;
  explicit SignatureWordSet(Set words) : words_(std::move(words)) {}

  void insert(Word w) { words_.insert(std::move(w)); }
  void insert_text(std::string_view text);
  bool contains(const Word& w) const { return words_.contains(w); }

  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  Set::const_iterator begin() const { return words_.begin(); }
  Set::const_iterator end() const { return words_.end(); }
  const Set& words() const noexcept { return words_; }

 private:
  Set words_;
};

SignatureWordSet signature_word_set(const FunctionRecord& rec);

}  // namespace sigdoc
