#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace rfd {

/// A value in {-inf} ∪ Z ∪ {+inf}. Grades, depths, dimensions and the
/// restricted flat dimensions all live here.
class ExtendedInt {
 public:
  constexpr ExtendedInt() = default;
  constexpr ExtendedInt(long v) : kind_(Kind::finite), value_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtendedInt neg_inf() { return ExtendedInt(Kind::neg_inf); }
  static constexpr ExtendedInt pos_inf() { return ExtendedInt(Kind::pos_inf); }

  constexpr bool is_finite() const noexcept { return kind_ == Kind::finite; }
  constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::pos_inf; }
  constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::neg_inf; }

  long value() const {
    if (!is_finite()) throw std::logic_error("value() of an infinite ExtendedInt");
    return value_;
  }

  friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) noexcept {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.kind_ == Kind::finite) return a.value_ <=> b.value_;
    return std::strong_ordering::equal;
  }
  friend constexpr bool operator==(const ExtendedInt& a, const ExtendedInt& b) noexcept {
    return (a <=> b) == 0;
  }

  /// a - b. Subtracting +inf from anything finite gives -inf (a vanishing
  /// localized module contributes nothing to a sup); inf - inf of equal sign
  /// is undefined and throws.
  friend ExtendedInt operator-(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.is_finite() && b.is_finite()) return ExtendedInt(a.value_ - b.value_);
    if (a.is_finite()) return b.is_pos_inf() ? neg_inf() : pos_inf();
    if (b.is_finite()) return a;
    if (a.kind_ != b.kind_) return a;
    throw std::domain_error("undefined difference of infinities");
  }

  friend ExtendedInt operator+(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.is_finite() && b.is_finite()) return ExtendedInt(a.value_ + b.value_);
    if (a.is_finite()) return b;
    if (b.is_finite() || a.kind_ == b.kind_) return a;
    throw std::domain_error("undefined sum of opposite infinities");
  }

  ExtendedInt operator-() const {
    if (is_finite()) return ExtendedInt(-value_);
    return is_pos_inf() ? neg_inf() : pos_inf();
  }

  std::string to_string() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    return std::to_string(value_);
  }

 private:
  enum class Kind : std::uint8_t { neg_inf = 0, finite = 1, pos_inf = 2 };
  constexpr explicit ExtendedInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  long value_ = 0;
};

inline ExtendedInt max(const ExtendedInt& a, const ExtendedInt& b) { return a < b ? b : a; }
inline ExtendedInt min(const ExtendedInt& a, const ExtendedInt& b) { return a < b ? a : b; }

}  // namespace rfd
