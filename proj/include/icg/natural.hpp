#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace icg {

/// Arbitrary-precision signed integer. Eigenvalues and Ramanujan sums live here.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational, always normalized to lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an input exceeds a documented computational cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an internal identity that must always hold is violated.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Arbitrary-precision non-negative integer.
///
/// Closed under addition, multiplication and powers. Subtraction goes through
/// checked_sub(), which throws std::domain_error when the result would be
/// negative.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Natural(Integer value);

  /// Parses a decimal string of digits. Throws std::invalid_argument.
  static Natural parse(std::string_view text);

  const Integer& value() const noexcept { return value_; }
  std::string str() const { return value_.str(); }

  bool fits_u64() const noexcept;
  /// Throws std::overflow_error if the value does not fit in 64 bits.
  std::uint64_t to_u64() const;

  bool is_zero() const noexcept { return value_.is_zero(); }
  bool is_even() const noexcept { return !boost::multiprecision::bit_test(value_, 0); }

  Natural& operator+=(const Natural& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Natural& operator*=(const Natural& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }

  Natural checked_sub(const Natural& rhs) const;
  Natural pow(unsigned exponent) const;
  /// Exact quotient; throws ConsistencyError if rhs does not divide *this.
  Natural exact_div(const Natural& rhs) const;
  Natural operator%(const Natural& rhs) const;

  friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n);

 private:
  Integer value_{0};
};

Natural gcd(const Natural& a, const Natural& b);

/// Largest x with x*x <= n.
Natural isqrt(const Natural& n);

}  // namespace icg
