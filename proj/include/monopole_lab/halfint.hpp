#pragma once
// Exact half-integer arithmetic for angular-momentum indices and charges.
#include <compare>
#include <cstdlib>
#include <optional>
#include <string>

namespace monopole_lab {

class HalfInt {
 public:
  constexpr HalfInt() = default;
  /// Integer value n.
  constexpr HalfInt(int n) : doubled_(2 * n) {}  // NOLINT: integers convert exactly

  static constexpr HalfInt from_doubled(int d) {
    HalfInt h;
    h.doubled_ = d;
    return h;
  }
  static constexpr HalfInt half(int numerator) { return from_doubled(numerator); }
  /// Exact conversion; returns nullopt unless 2x is an integer within 1e-12.
  static std::optional<HalfInt> try_from_double(double x);
  /// Throws ArgumentError unless x is a half-integer.
  static HalfInt from_double(double x);

  constexpr int doubled() const { return doubled_; }
  constexpr double value() const { return 0.5 * doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  constexpr HalfInt abs() const { return from_doubled(doubled_ < 0 ? -doubled_ : doubled_); }

  std::string str() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_doubled(a.doubled_ + b.doubled_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_doubled(a.doubled_ - b.doubled_); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_doubled(-a.doubled_); }
  friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.doubled_ <=> b.doubled_; }

 private:
  int doubled_ = 0;
};

/// Parses "3/2", "-1/2", "2", "0.5".
HalfInt parse_halfint(const std::string& text);

inline constexpr HalfInt kHalf = HalfInt::from_doubled(1);

}  // namespace monopole_lab
