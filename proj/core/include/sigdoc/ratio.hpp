#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigdoc {

/// Exact non-negative rational number.
///
/// Scores, cumulative fractions and averages are kept exact so that equal
/// ratios compare equal regardless of how they were produced (2/6 == 1/3),
/// aggregate results do not depend on summation order, and the six-digit
/// decimal rendering used in reports is rounded half-to-even without any
/// binary floating-point detour.
class Ratio {
 public:
  using Rep = boost::multiprecision::cpp_rational;

  Ratio() = default;
  Ratio(std::uint64_t num, std::uint64_t den);
  explicit Ratio(Rep value);

  static Ratio zero() { return Ratio{}; }
  static Ratio one() { return Ratio{1, 1}; }

  /// Parses a plain decimal such as "0.8", "1", ".25" or "3/4". Throws
  /// std::invalid_argument for anything else, including negative values.
  static Ratio parse(std::string_view text);

  const Rep& value() const noexcept { return value_; }
  double to_double() const;

  /// Fixed-point rendering with round-half-to-even on the exact value.
  std::string to_fixed(int digits = 6) const;
  /// "n/d" in lowest terms.
  std::string to_fraction_string() const;

  Ratio operator+(const Ratio& rhs) const { return Ratio{value_ + rhs.value_}; }
  Ratio operator-(const Ratio& rhs) const { return Ratio{value_ - rhs.value_}; }
  Ratio operator*(const Ratio& rhs) const { return Ratio{value_ * rhs.value_}; }
  Ratio operator/(const Ratio& rhs) const { return Ratio{value_ / rhs.value_}; }

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rep value_{0};
};

}  // namespace sigdoc
