#pragma once

// Exact rational arithmetic shared by every module.
//
// Rational is GMP's mpq_t behind boost::multiprecision with expression
// templates disabled, so `auto` always yields a value and every result is
// already in lowest terms with a positive denominator.

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pblp {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what
                        : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                              ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

inline Rational checked_div(const Rational& a, const Rational& b) {
  if (b == 0) throw DivisionByZero();
  return a / b;
}

/// Parses "p", "p/q" or a finite decimal such as "-0.25". Signs are optional.
inline Rational rat_parse(std::string_view text) {
  auto fail = [&](const char* why) -> Rational {
    throw ParseError(std::string(why) + " in rational '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::string& out) {
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') out.push_back(text[pos++]);
  };
  std::string whole;
  digits(whole);
  Rational value;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::string denom;
    digits(denom);
    if (whole.empty() || denom.empty() || pos != text.size()) return fail("malformed fraction");
    Integer d(denom);
    if (d == 0) throw DivisionByZero();
    value = Rational(Integer(whole), d);
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::string frac;
    digits(frac);
    if ((whole.empty() && frac.empty()) || pos != text.size()) return fail("malformed decimal");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer num = Integer(whole.empty() ? std::string("0") : whole) * scale +
                  Integer(frac.empty() ? std::string("0") : frac);
    value = Rational(num, scale);
  } else {
    if (whole.empty() || pos != text.size()) return fail("malformed integer");
    value = Rational(Integer(whole));
  }
  return negative ? Rational(-value) : value;
}

/// Canonical "p/q", or "p" for integers.
inline std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Lossy decimal rendering for plot files.
inline std::string to_decimal(const Rational& r, int digits = 6) {
  std::ostringstream out;
  out.precision(digits);
  out << std::fixed << r.convert_to<double>();
  return out.str();
}

/// A rational or +infinity.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit by intent

  static ExtendedRational infinity() {
    ExtendedRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  const Rational& value() const {
    if (infinite_) throw std::logic_error("value() on +inf");
    return value_;
  }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

inline std::string to_string(const ExtendedRational& r) {
  return r.is_infinite() ? std::string("inf") : to_string(r.value());
}

inline std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) {
  return os << to_string(r);
}

inline Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace pblp
