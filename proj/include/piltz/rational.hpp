#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "piltz/common.hpp"

namespace piltz {

/// Exact positive-or-zero rational number; keeps the halving convention decidable.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  /// Accepts "p/q", "p", or a terminating decimal such as "10.5".
  static Rational parse(std::string_view text) {
    auto to_int = [&](std::string_view s) -> std::int64_t {
      if (s.empty()) throw domain_error("malformed rational '" + std::string(text) + "'");
      std::size_t i = 0;
      bool neg = false;
      if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
      }
      if (i == s.size()) throw domain_error("malformed rational '" + std::string(text) + "'");
      std::int64_t v = 0;
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw domain_error("malformed rational '" + std::string(text) + "'");
        if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, s[i] - '0', &v))
          throw domain_error("rational component overflows 64 bits: '" + std::string(text) + "'");
      }
      return neg ? -v : v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos)
      return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string digits(text.substr(0, dot));
      std::string_view frac = text.substr(dot + 1);
      if (frac.empty() || frac.size() > 15) throw domain_error("malformed rational '" + std::string(text) + "'");
      digits.append(frac);
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      return Rational(to_int(digits), den);
    }
    return Rational(to_int(text));
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }
  /// Largest integer <= value.
  constexpr std::int64_t floor() const noexcept {
    return num_ >= 0 ? num_ / den_ : -((-num_ + den_ - 1) / den_);
  }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// Exact value of x - n as a double (exact when representable).
  double minus(std::int64_t n) const noexcept {
    return static_cast<double>(num_ - n * den_) / static_cast<double>(den_);
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend bool operator==(const Rational&, const Rational&) = default;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace piltz
