#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace sigdoc::utf8 {

inline constexpr char32_t kInvalid = 0xFFFFFFFF;

struct Decoded {
  char32_t cp;        // kInvalid when the bytes at the cursor are malformed
  std::size_t width;  // bytes consumed, always >= 1
};

/// Decodes one code point at `pos`. Overlong forms, surrogates and values
/// above U+10FFFF are rejected as invalid with width 1.
Decoded decode(std::string_view text, std::size_t pos);

void append(std::string& out, char32_t cp);

/// Byte offset of the first malformed sequence, or nullopt if `text` is valid.
std::optional<std::size_t> first_invalid(std::string_view text);

std::size_t length(std::string_view text);

// Unicode character classes from ICU. Alphanumeric means general category L or N.
bool is_alnum(char32_t cp);
bool is_alpha(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
bool is_space(char32_t cp);
char32_t to_lower(char32_t cp);

}  // namespace sigdoc::utf8
