#pragma once

// Tokenizer for Python source, sufficient to recover statement structure:
// logical lines, indentation blocks, bracket nesting and string literals.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigdoc::python {

enum class TokenKind { Name, Number, String, Op, Newline, Indent, Dedent, End };

struct Token {
  TokenKind kind;
  std::size_t begin;  // byte offsets into the normalized source
  std::size_t end;
  std::size_t line;
  std::string_view text;

  // String literals only.
  std::string value;  // escapes decoded unless raw
  bool is_bytes = false;
  bool is_fstring = false;

  bool is_op(std::string_view op) const { return kind == TokenKind::Op && text == op; }
  bool is_name(std::string_view n) const { return kind == TokenKind::Name && text == n; }
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Converts CRLF and lone CR to LF and drops a leading UTF-8 BOM.
std::string normalize_newlines(std::string_view raw);

/// Tokenizes normalized source. Token text views point into `source`, which
/// must outlive the result. Throws SyntaxError.
std::vector<Token> tokenize(std::string_view source);

}  // namespace sigdoc::python
