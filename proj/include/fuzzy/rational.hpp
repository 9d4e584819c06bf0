#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "fuzzy/error.hpp"

namespace fuzzy {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Canonical rendering: lowest terms, always with a denominator ("1/1", "0/1").
inline std::string to_fraction_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "p/q", "p", or a non-negative decimal literal "12.345" exactly.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) {
    return Error(ErrorCode::SyntaxError, "bad value \"" + std::string(text) + "\": " + why);
  };
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail("expected p/q with decimal digits");
    BigInt d{std::string(den)};
    if (d == 0) throw fail("zero denominator");
    return Rational(BigInt(std::string(num)), d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) throw fail("expected a decimal literal");
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt num = BigInt(std::string(whole)) * scale + BigInt(std::string(frac));
    return Rational(num, scale);
  }
  if (!all_digits(text)) throw fail("expected a number");
  return Rational(BigInt(std::string(text)));
}

/// A membership degree: an exact rational in [0, 1].
class Membership {
 public:
  Membership() = default;

  explicit Membership(Rational value) : value_(std::move(value)) {
    if (value_ < 0 || value_ > 1) {
      throw Error(ErrorCode::ValueRange, to_fraction_string(value_) + " is outside [0,1]");
    }
  }

  Membership(long long num, long long den) : Membership(make_rational(num, den)) {}

  static Membership parse(std::string_view text) { return Membership(parse_rational(text)); }

  const Rational& value() const noexcept { return value_; }
  bool is_zero() const { return value_ == 0; }
  std::string str() const { return to_fraction_string(value_); }

  friend bool operator==(const Membership& a, const Membership& b) { return a.value_ == b.value_; }
  friend bool operator<(const Membership& a, const Membership& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Membership& a, const Membership& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Membership& a, const Membership& b) { return a.value_ > b.value_; }

 private:
  Rational value_{0};
};

inline Membership meet(const Membership& a, const Membership& b) { return b < a ? b : a; }

}  // namespace fuzzy
