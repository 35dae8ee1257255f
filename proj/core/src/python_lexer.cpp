#include "python_lexer.hpp"

#include <array>
#include <optional>

#include "utf8.hpp"

namespace sigdoc::python {
namespace {

constexpr std::size_t kTabSize = 8;

bool ascii_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool ascii_ident_char(char c) { return ascii_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

struct StringPrefix {
  bool raw = false;
  bool bytes = false;
  bool fstring = false;
};

std::optional<StringPrefix> parse_prefix(std::string_view name) {
  if (name.size() > 2) return std::nullopt;
  StringPrefix p;
  bool unicode = false;
  for (char c : name) {
    switch (c) {
      case 'r': case 'R': if (p.raw) return std::nullopt; p.raw = true; break;
      case 'b': case 'B': if (p.bytes) return std::nullopt; p.bytes = true; break;
      case 'f': case 'F': if (p.fstring) return std::nullopt; p.fstring = true; break;
      case 'u': case 'U': if (unicode) return std::nullopt; unicode = true; break;
      default: return std::nullopt;
    }
  }
  if (unicode && name.size() != 1) return std::nullopt;
  if (p.bytes && p.fstring) return std::nullopt;
  return p;
}

// Python escape decoding for a non-raw str literal body.
std::string decode_escapes(std::string_view body, std::size_t line) {
  std::string out;
  out.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    if (c != '\\' || i + 1 >= body.size()) {
      out.push_back(c);
      continue;
    }
    const char e = body[++i];
    switch (e) {
      case '\n': break;
      case '\\': out.push_back('\\'); break;
      case '\'': out.push_back('\''); break;
      case '"': out.push_back('"'); break;
      case 'a': out.push_back('\a'); break;
      case 'b': out.push_back('\b'); break;
      case 'f': out.push_back('\f'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 't': out.push_back('\t'); break;
      case 'v': out.push_back('\v'); break;
      case '0': case '1': case '2': case '3': case '4': case '5': case '6': case '7': {
        char32_t v = static_cast<char32_t>(e - '0');
        for (int k = 0; k < 2 && i + 1 < body.size() && body[i + 1] >= '0' && body[i + 1] <= '7'; ++k) {
          v = v * 8 + static_cast<char32_t>(body[++i] - '0');
        }
        utf8::append(out, v);
        break;
      }
      case 'x': case 'u': case 'U': {
        const int width = e == 'x' ? 2 : e == 'u' ? 4 : 8;
        char32_t v = 0;
        for (int k = 0; k < width; ++k) {
          const int h = i + 1 < body.size() ? hex_value(body[i + 1]) : -1;
          if (h < 0) {
            throw SyntaxError(line, std::string("truncated \\") + e + " escape in string literal");
          }
          v = v * 16 + static_cast<char32_t>(h);
          ++i;
        }
        if (v > 0x10FFFF) throw SyntaxError(line, "illegal Unicode character in string literal");
        if (v >= 0xD800 && v <= 0xDFFF) v = 0xFFFD;
        utf8::append(out, v);
        break;
      }
      default:
        // Unknown escapes, and \N{...}, stay verbatim.
        out.push_back('\\');
        out.push_back(e);
        break;
    }
  }
  return out;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    while (true) {
      if (at_line_start_ && brackets_.empty()) {
        if (!handle_indentation()) break;
      }
      if (pos_ >= src_.size()) break;
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\f') {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '\\') {
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '\n') {
          pos_ += 2;
          ++line_;
          if (pos_ >= src_.size()) throw SyntaxError(line_, "unexpected EOF while parsing");
        } else {
          throw SyntaxError(line_, "unexpected character after line continuation character");
        }
      } else if (c == '\n') {
        ++pos_;
        if (brackets_.empty()) {
          if (line_has_tokens_) emit(TokenKind::Newline, pos_ - 1, pos_);
          line_has_tokens_ = false;
          at_line_start_ = true;
        }
        ++line_;
      } else if (c == '"' || c == '\'') {
        lex_string(pos_, StringPrefix{});
      } else if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
        lex_number();
      } else if (ascii_ident_start(c) || static_cast<unsigned char>(c) >= 0x80) {
        lex_name();
      } else {
        lex_operator();
      }
    }

    if (!brackets_.empty()) {
      const auto& open = brackets_.back();
      throw SyntaxError(open.line, std::string("'") + open.ch + "' was never closed");
    }
    if (line_has_tokens_) emit(TokenKind::Newline, src_.size(), src_.size());
    for (std::size_t i = 1; i < indents_.size(); ++i) emit(TokenKind::Dedent, src_.size(), src_.size());
    emit(TokenKind::End, src_.size(), src_.size());
    return std::move(tokens_);
  }

 private:
  struct Indent {
    std::size_t col;
    std::size_t alt_col;  // column with tab size 1, for tab/space consistency
  };
  struct Bracket {
    char ch;
    std::size_t line;
  };

  // Measures the indentation of the next non-blank line and emits
  // INDENT/DEDENT tokens. Returns false at end of input.
  bool handle_indentation() {
    while (true) {
      std::size_t col = 0;
      std::size_t alt = 0;
      std::size_t p = pos_;
      for (; p < src_.size(); ++p) {
        const char c = src_[p];
        if (c == ' ') {
          ++col, ++alt;
        } else if (c == '\t') {
          col = (col / kTabSize + 1) * kTabSize;
          ++alt;
        } else if (c == '\f') {
          col = alt = 0;
        } else {
          break;
        }
      }
      if (p >= src_.size()) {
        pos_ = p;
        return false;
      }
      if (src_[p] == '\n' || src_[p] == '#') {
        while (p < src_.size() && src_[p] != '\n') ++p;
        if (p >= src_.size()) {
          pos_ = p;
          return false;
        }
        pos_ = p + 1;
        ++line_;
        continue;
      }
      pos_ = p;
      at_line_start_ = false;

      const Indent& top = indents_.back();
      if (col > top.col) {
        if (alt <= top.alt_col) throw SyntaxError(line_, "inconsistent use of tabs and spaces in indentation");
        indents_.push_back({col, alt});
        emit(TokenKind::Indent, p, p);
      } else if (col < top.col) {
        while (indents_.size() > 1 && col < indents_.back().col) {
          indents_.pop_back();
          emit(TokenKind::Dedent, p, p);
        }
        if (col != indents_.back().col) {
          throw SyntaxError(line_, "unindent does not match any outer indentation level");
        }
        if (alt != indents_.back().alt_col) {
          throw SyntaxError(line_, "inconsistent use of tabs and spaces in indentation");
        }
      } else if (alt != top.alt_col) {
        throw SyntaxError(line_, "inconsistent use of tabs and spaces in indentation");
      }
      return true;
    }
  }

  void emit(TokenKind kind, std::size_t begin, std::size_t end) {
    tokens_.push_back(Token{kind, begin, end, line_, src_.substr(begin, end - begin), {}, false, false});
    if (kind != TokenKind::Newline && kind != TokenKind::Indent && kind != TokenKind::Dedent) {
      line_has_tokens_ = true;
    }
  }

  void lex_name() {
    const std::size_t begin = pos_;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (ascii_ident_char(c)) {
        ++pos_;
        continue;
      }
      if (static_cast<unsigned char>(c) < 0x80) break;
      const auto d = utf8::decode(src_, pos_);
      if (d.cp == utf8::kInvalid || utf8::is_space(d.cp)) {
        throw SyntaxError(line_, "invalid character in identifier");
      }
      if (pos_ == begin && !utf8::is_alpha(d.cp)) {
        throw SyntaxError(line_, "invalid character in source");
      }
      pos_ += d.width;
    }
    const std::string_view name = src_.substr(begin, pos_ - begin);
    if (pos_ < src_.size() && (src_[pos_] == '"' || src_[pos_] == '\'')) {
      if (const auto prefix = parse_prefix(name)) {
        lex_string(begin, *prefix);
        return;
      }
    }
    emit(TokenKind::Name, begin, pos_);
  }

  void lex_number() {
    const std::size_t begin = pos_;
    const bool hex = src_[pos_] == '0' && pos_ + 1 < src_.size() && (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X');
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (ascii_ident_char(c) || c == '.') {
        ++pos_;
        if (!hex && (c == 'e' || c == 'E') && pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
          ++pos_;
        }
        continue;
      }
      break;
    }
    emit(TokenKind::Number, begin, pos_);
  }

  void lex_string(std::size_t begin, StringPrefix prefix) {
    const std::size_t start_line = line_;
    const char quote = src_[pos_];
    const bool triple = pos_ + 2 < src_.size() && src_[pos_ + 1] == quote && src_[pos_ + 2] == quote;
    pos_ += triple ? 3 : 1;
    const std::size_t body_begin = pos_;
    std::size_t body_end = 0;
    while (true) {
      if (pos_ >= src_.size()) {
        throw SyntaxError(start_line, triple ? "unterminated triple-quoted string literal"
                                             : "unterminated string literal");
      }
      const char c = src_[pos_];
      if (c == '\\') {
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '\n') ++line_;
        pos_ += 2;
        continue;
      }
      if (c == '\n') {
        if (!triple) throw SyntaxError(start_line, "unterminated string literal");
        ++line_;
        ++pos_;
        continue;
      }
      if (c == quote) {
        if (!triple) {
          body_end = pos_++;
          break;
        }
        if (pos_ + 2 < src_.size() && src_[pos_ + 1] == quote && src_[pos_ + 2] == quote) {
          body_end = pos_;
          pos_ += 3;
          break;
        }
      }
      ++pos_;
    }
    Token tok{TokenKind::String, begin, pos_, start_line, src_.substr(begin, pos_ - begin), {}, prefix.bytes,
              prefix.fstring};
    const std::string_view body = src_.substr(body_begin, body_end - body_begin);
    if (prefix.raw || prefix.bytes || prefix.fstring) {
      tok.value = std::string(body);
    } else {
      tok.value = decode_escapes(body, start_line);
    }
    tokens_.push_back(std::move(tok));
    line_has_tokens_ = true;
  }

  void lex_operator() {
    static constexpr std::array<std::string_view, 5> three = {"**=", "//=", "...", ">>=", "<<="};
    static constexpr std::array<std::string_view, 19> two = {"**", "//", ">>", "<<", "<=", ">=", "==", "!=", "->",
                                                             "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "@=",
                                                             ":="};
    const std::string_view rest = src_.substr(pos_);
    for (auto op : three) {
      if (rest.starts_with(op)) return emit_op(3);
    }
    for (auto op : two) {
      if (rest.starts_with(op)) return emit_op(2);
    }
    const char c = src_[pos_];
    switch (c) {
      case '(': case '[': case '{':
        brackets_.push_back({c, line_});
        return emit_op(1);
      case ')': case ']': case '}': {
        const char open = c == ')' ? '(' : c == ']' ? '[' : '{';
        if (brackets_.empty()) throw SyntaxError(line_, std::string("unmatched '") + c + "'");
        if (brackets_.back().ch != open) {
          throw SyntaxError(line_, std::string("closing parenthesis '") + c +
                                       "' does not match opening parenthesis '" + brackets_.back().ch + "'");
        }
        brackets_.pop_back();
        return emit_op(1);
      }
      case '+': case '-': case '*': case '/': case '%': case '@': case '&': case '|': case '^': case '~':
      case '<': case '>': case ',': case ':': case '.': case ';': case '=':
        return emit_op(1);
      default:
        throw SyntaxError(line_, std::string("invalid character '") + c + "' in source");
    }
  }

  void emit_op(std::size_t width) {
    emit(TokenKind::Op, pos_, pos_ + width);
    pos_ += width;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  bool at_line_start_ = true;
  bool line_has_tokens_ = false;
  std::vector<Indent> indents_{{0, 0}};
  std::vector<Bracket> brackets_;
  std::vector<Token> tokens_;
};

}  // namespace

std::string normalize_newlines(std::string_view raw) {
  if (raw.starts_with("\xEF\xBB\xBF")) raw.remove_prefix(3);
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
    } else {
      out.push_back(raw[i]);
    }
  }
  return out;
}

std::vector<Token> tokenize(std::string_view source) { return Lexer{source}.run(); }

}  // namespace sigdoc::python
