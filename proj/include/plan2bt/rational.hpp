#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace plan2bt {

/// Exact rational time. All plan times, durations and makespans are kept
/// rational so that graph construction and metric comparisons are
/// deterministic; conversion to double happens only at output.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  /// Parses a plain integer or decimal literal ("5", "0.00", "2.75") exactly.
  static Rational from_decimal(const std::string& text);

  /// Nearest rational with the given denominator (ties away from zero).
  static Rational from_double(double value, std::int64_t denominator = 1000) {
    return Rational(static_cast<std::int64_t>(std::llround(value * static_cast<double>(denominator))),
                    denominator);
  }

  /// Minimal exact text: "5", "2.5", or "7/3" when no finite decimal exists.
  std::string to_string() const;

  /// Fixed-point decimal with `digits` fractional digits (round half away
  /// from zero); exact whenever den divides 10^digits.
  std::string to_decimal(int digits) const;

private:
  void normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace plan2bt
