#include "sigdoc/ratio.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigdoc {

using boost::multiprecision::cpp_int;

Ratio::Ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("ratio with zero denominator");
  value_ = Rep(cpp_int(num), cpp_int(den));
}

Ratio::Ratio(Rep value) : value_(std::move(value)) {
  if (value_ < 0) throw std::invalid_argument("negative ratio");
}

Ratio Ratio::parse(std::string_view text) {
  auto digits_only = [](std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  // cpp_int reads a leading 0 as an octal prefix.
  auto decimal = [](std::string s) {
    s.erase(0, std::min(s.find_first_not_of('0'), s.size()));
    return cpp_int{s.empty() ? std::string("0") : s};
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) throw std::invalid_argument("bad fraction: " + std::string(text));
    const cpp_int d = decimal(std::string(den));
    if (d == 0) throw std::invalid_argument("bad fraction: " + std::string(text));
    return Ratio{Rep(decimal(std::string(num)), d)};
  }
  const auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw std::invalid_argument("bad decimal: " + std::string(text));
  if ((!whole.empty() && !digits_only(whole)) || (!frac.empty() && !digits_only(frac))) {
    throw std::invalid_argument("bad decimal: " + std::string(text));
  }
  cpp_int scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  return Ratio{Rep(decimal(std::string(whole) + std::string(frac)), scale)};
}

double Ratio::to_double() const {
  // Rounds through a 17-significant-digit decimal so the result is the
  // nearest double for all practical magnitudes.
  return std::stod(to_fixed(17));
}

std::string Ratio::to_fixed(int digits) const {
  cpp_int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const cpp_int num = boost::multiprecision::numerator(value_) * scale;
  const cpp_int den = boost::multiprecision::denominator(value_);
  cpp_int q = num / den;
  const cpp_int twice_rem = (num % den) * 2;
  if (twice_rem > den || (twice_rem == den && (q & 1) != 0)) ++q;

  std::string s = q.str();
  if (digits == 0) return s;
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, 1, '.');
  return s;
}

std::string Ratio::to_fraction_string() const {
  return boost::multiprecision::numerator(value_).str() + "/" +
         boost::multiprecision::denominator(value_).str();
}

}  // namespace sigdoc
