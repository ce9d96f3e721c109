#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "pnspan/rational.hpp"

namespace pnspan {

/// Per-scalar policy: floating spaces compare with an absolute tolerance in the
/// axiom checker, rational spaces compare exactly.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr double axiom_tolerance = 1e-9;

  static double zero() { return 0.0; }
  static double to_double(double v) { return v; }
  static std::string to_text(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
  /// a <= b up to the axiom tolerance.
  static bool leq_tol(double a, double b) { return a <= b + axiom_tolerance; }
  static bool eq_tol(double a, double b) { return std::fabs(a - b) <= axiom_tolerance; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;

  static Rational zero() { return Rational(0); }
  static double to_double(const Rational& v) { return v.get_d(); }
  static std::string to_text(const Rational& v) { return to_fraction_string(v); }
  static bool leq_tol(const Rational& a, const Rational& b) { return a <= b; }
  static bool eq_tol(const Rational& a, const Rational& b) { return a == b; }
};

template <class T>
double to_double(const T& v) {
  return ScalarTraits<T>::to_double(v);
}

template <class T>
std::string to_text(const T& v) {
  return ScalarTraits<T>::to_text(v);
}

}  // namespace pnspan
