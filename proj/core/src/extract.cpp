#include "sigdoc/extract.hpp"

#include <algorithm>
#include <array>
#include <span>

#include "python_lexer.hpp"
#include "utf8.hpp"

namespace sigdoc {
namespace {

using python::SyntaxError;
using python::Token;
using python::TokenKind;
using Tokens = std::span<const Token>;

constexpr std::array<std::string_view, 35> kKeywords = {
    "False", "None",   "True",    "and",      "as",       "assert", "async", "await", "break",
    "class", "continue", "def",   "del",      "elif",     "else",   "except", "finally", "for",
    "from",  "global", "if",      "import",   "in",       "is",     "lambda", "nonlocal", "not",
    "or",    "pass",   "raise",   "return",   "try",      "while",  "with",  "yield"};

bool is_keyword(std::string_view name) {
  return std::find(kKeywords.begin(), kKeywords.end(), name) != kKeywords.end();
}

bool opens(const Token& t) { return t.is_op("(") || t.is_op("[") || t.is_op("{"); }
bool closes(const Token& t) { return t.is_op(")") || t.is_op("]") || t.is_op("}"); }

// Index of the bracket closing the one at `open`. Brackets are already
// balanced by the lexer, so this always succeeds within a logical line.
std::size_t matching_close(Tokens toks, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < toks.size(); ++i) {
    if (opens(toks[i])) ++depth;
    if (closes(toks[i]) && --depth == 0) return i;
  }
  throw SyntaxError(toks[open].line, "unbalanced brackets");
}

// Joins tokens back into source-like text, keeping adjacency and collapsing
// any gap (whitespace, comments, line breaks) to one space.
std::string join_tokens(Tokens toks) {
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i > 0 && toks[i].begin != toks[i - 1].end) out.push_back(' ');
    out.append(toks[i].text);
  }
  return out;
}

// Splits a parameter list at top-level commas. Commas that belong to a
// lambda's own parameter list in a default value do not split.
std::vector<Tokens> split_params(Tokens toks) {
  std::vector<Tokens> parts;
  int depth = 0;
  int open_lambdas = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (opens(t)) ++depth;
    else if (closes(t)) --depth;
    else if (depth == 0 && t.is_name("lambda")) ++open_lambdas;
    else if (depth == 0 && open_lambdas > 0 && t.is_op(":")) --open_lambdas;
    else if (depth == 0 && open_lambdas == 0 && t.is_op(",")) {
      parts.push_back(toks.subspan(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(toks.subspan(start));
  return parts;
}

std::size_t find_top_level(Tokens toks, std::string_view op) {
  int depth = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (opens(toks[i])) ++depth;
    else if (closes(toks[i])) --depth;
    else if (depth == 0 && toks[i].is_op(op)) return i;
  }
  return toks.size();
}

void parse_params(Tokens toks, std::size_t line, FunctionRecord& rec) {
  const auto parts = split_params(toks);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Tokens seg = parts[p];
    if (seg.empty()) {
      if (p + 1 == parts.size() && p > 0) break;  // trailing comma
      if (parts.size() == 1) break;                // empty list
      throw SyntaxError(line, "invalid syntax in parameter list");
    }
    if (seg.size() == 1 && (seg[0].is_op("/") || seg[0].is_op("*"))) continue;

    std::size_t idx = 0;
    const bool starred = seg[0].is_op("*") || seg[0].is_op("**");
    if (starred) idx = 1;
    if (idx >= seg.size() || seg[idx].kind != TokenKind::Name || is_keyword(seg[idx].text)) {
      throw SyntaxError(seg[0].line, "invalid parameter '" + join_tokens(seg) + "'");
    }
    rec.param_names.emplace_back(seg[idx].text);

    const Tokens rest = seg.subspan(idx + 1);
    std::optional<std::string> annotation;
    if (!rest.empty()) {
      const std::size_t eq = find_top_level(rest, "=");
      if (rest[0].is_op(":")) {
        const Tokens ann = rest.subspan(1, eq - 1);
        if (ann.empty()) throw SyntaxError(rest[0].line, "empty parameter annotation");
        annotation = join_tokens(ann);
      } else if (eq != 0) {
        throw SyntaxError(rest[0].line, "invalid parameter '" + join_tokens(seg) + "'");
      }
      if (eq < rest.size()) {
        if (starred) throw SyntaxError(rest[eq].line, "starred parameter cannot have a default value");
        if (eq + 1 == rest.size()) throw SyntaxError(rest[eq].line, "expected default value expression");
      }
    }
    rec.param_types.push_back(std::move(annotation));
  }
}

// The value of a statement made only of (possibly parenthesized,
// implicitly concatenated) str literals; nullopt for anything else.
std::optional<std::string> string_statement(Tokens stmt) {
  while (stmt.size() >= 2 && stmt.front().is_op("(") && matching_close(stmt, 0) == stmt.size() - 1) {
    stmt = stmt.subspan(1, stmt.size() - 2);
  }
  if (stmt.empty()) return std::nullopt;
  bool any_bytes = false;
  bool any_text = false;
  bool any_fstring = false;
  std::string value;
  for (const Token& t : stmt) {
    if (t.kind != TokenKind::String) return std::nullopt;
    (t.is_bytes ? any_bytes : any_text) = true;
    any_fstring = any_fstring || t.is_fstring;
    value += t.value;
  }
  if (any_bytes && any_text) throw SyntaxError(stmt.front().line, "cannot mix bytes and nonbytes literals");
  if (any_bytes || any_fstring) return std::nullopt;
  return value;
}

std::optional<std::string> leading_docstring(Tokens body) {
  return string_statement(body.first(find_top_level(body, ";")));
}

enum class LineKind { Other, Definition };

class DefinitionScanner {
 public:
  DefinitionScanner(std::span<const Token> tokens, std::string_view file) : tokens_(tokens), file_(file) {}

  std::vector<FunctionRecord> run() {
    std::vector<bool> blocks;  // one entry per open indented block; true for def/class bodies
    bool expect_block = false;
    LineKind header_kind = LineKind::Other;
    std::optional<std::size_t> awaiting_docstring;

    std::size_t i = 0;
    while (true) {
      const Token& t = tokens_[i];
      if (t.kind == TokenKind::Indent) {
        if (!expect_block) throw SyntaxError(t.line, "unexpected indent");
        blocks.push_back(header_kind == LineKind::Definition);
        expect_block = false;
        ++i;
        continue;
      }
      if (t.kind == TokenKind::Dedent) {
        blocks.pop_back();
        ++i;
        continue;
      }
      if (expect_block) throw SyntaxError(t.line, "expected an indented block");
      if (t.kind == TokenKind::End) break;

      std::size_t j = i;
      while (tokens_[j].kind != TokenKind::Newline) ++j;
      const Tokens line = tokens_.subspan(i, j - i);
      i = j + 1;

      if (awaiting_docstring) {
        records_[*awaiting_docstring].docstring = leading_docstring(line);
        awaiting_docstring.reset();
      }

      const auto depth = static_cast<std::size_t>(std::count(blocks.begin(), blocks.end(), true));
      header_kind = LineKind::Other;
      if (line[0].is_name("def") || (line[0].is_name("async") && line.size() > 1 && line[1].is_name("def"))) {
        header_kind = LineKind::Definition;
        if (parse_definition(line, depth)) awaiting_docstring = records_.size() - 1;
      } else if (line[0].is_name("class")) {
        header_kind = LineKind::Definition;
      }
      expect_block = line.back().is_op(":");
    }
    return std::move(records_);
  }

 private:
  // Appends the record for a def line. Returns true when the body is an
  // indented block still to come.
  bool parse_definition(Tokens line, std::size_t depth) {
    FunctionRecord rec;
    rec.file = std::string(file_);
    rec.line = line[0].line;
    rec.nesting_depth = depth;
    std::size_t k = 0;
    if (line[0].is_name("async")) {
      rec.is_async = true;
      k = 1;
    }
    ++k;  // def
    if (k >= line.size() || line[k].kind != TokenKind::Name || is_keyword(line[k].text)) {
      throw SyntaxError(line[0].line, "expected function name after 'def'");
    }
    rec.name = std::string(line[k].text);
    ++k;
    if (k < line.size() && line[k].is_op("[")) k = matching_close(line, k) + 1;  // type parameters
    if (k >= line.size() || !line[k].is_op("(")) {
      throw SyntaxError(line[0].line, "expected '(' after function name '" + rec.name + "'");
    }
    const std::size_t close = matching_close(line, k);
    parse_params(line.subspan(k + 1, close - k - 1), line[k].line, rec);
    k = close + 1;

    if (k < line.size() && line[k].is_op("->")) {
      const Tokens after = line.subspan(k + 1);
      const std::size_t colon = find_top_level(after, ":");
      if (colon == 0) throw SyntaxError(line[k].line, "expected return annotation after '->'");
      rec.return_type = join_tokens(after.first(colon));
      k += 1 + colon;
    }
    if (k >= line.size() || !line[k].is_op(":")) {
      throw SyntaxError(line[0].line, "expected ':' after signature of '" + rec.name + "'");
    }
    const Tokens body = line.subspan(k + 1);
    if (!body.empty()) rec.docstring = leading_docstring(body);
    records_.push_back(std::move(rec));
    return body.empty();
  }

  std::span<const Token> tokens_;
  std::string_view file_;
  std::vector<FunctionRecord> records_;
};

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

}  // namespace

ExtractResult extract_functions(std::string_view source, std::string_view file) {
  if (const auto bad = utf8::first_invalid(source)) {
    return ParseFailure{std::string(file), "invalid UTF-8 at byte offset " + std::to_string(*bad) + " (line " +
                                               std::to_string(line_of_offset(source, *bad)) + ")"};
  }
  if (const auto nul = source.find('\0'); nul != std::string_view::npos) {
    return ParseFailure{std::string(file), "source contains null bytes (line " +
                                               std::to_string(line_of_offset(source, nul)) + ")"};
  }
  const std::string text = python::normalize_newlines(source);
  try {
    const auto tokens = python::tokenize(text);
    return DefinitionScanner{tokens, file}.run();
  } catch (const SyntaxError& e) {
    return ParseFailure{std::string(file), e.what()};
  }
}

bool has_documentation(const FunctionRecord& rec) {
  if (!rec.docstring) return false;
  const std::string_view doc = *rec.docstring;
  for (std::size_t pos = 0; pos < doc.size();) {
    const auto d = utf8::decode(doc, pos);
    if (!utf8::is_space(d.cp)) return true;
    pos += d.width;
  }
  return false;
}

void SignatureWordSet::insert_text(std::string_view text) {
  for (auto& w : partition_text(text)) words_.insert(std::move(w));
}

SignatureWordSet signature_word_set(const FunctionRecord& rec) {
  SignatureWordSet sig;
  sig.insert_text(rec.name);
  for (const auto& p : rec.param_names) sig.insert_text(p);
  for (const auto& t : rec.param_types) {
    if (t) sig.insert_text(*t);
  }
  if (rec.return_type) sig.insert_text(*rec.return_type);
  return sig;
}

}  // namespace sigdoc
