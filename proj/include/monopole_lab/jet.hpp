#pragma once
// Second-order forward-mode jets: a value together with its first and second
// derivatives with respect to a single independent variable.  Used to evaluate
// closed-form profiles and their derivatives exactly (to rounding).
#include <cmath>

namespace monopole_lab {

struct Jet {
  double v = 0.0;   ///< value
  double d1 = 0.0;  ///< first derivative
  double d2 = 0.0;  ///< second derivative

  constexpr Jet() = default;
  constexpr Jet(double value) : v(value) {}  // NOLINT: implicit constants
  constexpr Jet(double value, double first, double second) : v(value), d1(first), d2(second) {}

  static constexpr Jet variable(double x) { return {x, 1.0, 0.0}; }
};

inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.v; }

inline Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
inline Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
inline Jet operator-(const Jet& a) { return {-a.v, -a.d1, -a.d2}; }
inline Jet operator*(const Jet& a, const Jet& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}
inline Jet operator+(const Jet& a, double b) { return {a.v + b, a.d1, a.d2}; }
inline Jet operator+(double a, const Jet& b) { return b + a; }
inline Jet operator-(const Jet& a, double b) { return {a.v - b, a.d1, a.d2}; }
inline Jet operator-(double a, const Jet& b) { return {a - b.v, -b.d1, -b.d2}; }
inline Jet operator*(const Jet& a, double b) { return {a.v * b, a.d1 * b, a.d2 * b}; }
inline Jet operator*(double a, const Jet& b) { return b * a; }
inline Jet operator/(const Jet& a, double b) { return {a.v / b, a.d1 / b, a.d2 / b}; }

/// Chain rule: returns f(g) given f(g.v), f'(g.v), f''(g.v).
inline Jet chain(const Jet& g, double f0, double f1, double f2) {
  return {f0, f1 * g.d1, f2 * g.d1 * g.d1 + f1 * g.d2};
}

inline Jet reciprocal(const Jet& a) {
  const double r = 1.0 / a.v;
  return chain(a, r, -r * r, 2.0 * r * r * r);
}
inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
inline Jet operator/(double a, const Jet& b) { return a * reciprocal(b); }

inline Jet sin(const Jet& a) { return chain(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
inline Jet cos(const Jet& a) { return chain(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
inline Jet sinh(const Jet& a) { return chain(a, std::sinh(a.v), std::cosh(a.v), std::sinh(a.v)); }
inline Jet cosh(const Jet& a) { return chain(a, std::cosh(a.v), std::sinh(a.v), std::cosh(a.v)); }
inline Jet atan(const Jet& a) {
  const double q = 1.0 / (1.0 + a.v * a.v);
  return chain(a, std::atan(a.v), q, -2.0 * a.v * q * q);
}
inline Jet atanh(const Jet& a) {
  const double q = 1.0 / (1.0 - a.v * a.v);
  return chain(a, std::atanh(a.v), q, 2.0 * a.v * q * q);
}
inline Jet exp(const Jet& a) {
  const double e = std::exp(a.v);
  return chain(a, e, e, e);
}
inline Jet sqrt(const Jet& a) {
  const double s = std::sqrt(a.v);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}

}  // namespace monopole_lab
