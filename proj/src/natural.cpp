#include "icg/natural.hpp"

#include <limits>
#include <ostream>

namespace icg {

Natural::Natural(Integer value) : value_(std::move(value)) {
  if (value_.sign() < 0) {
    throw std::domain_error("Natural: negative value " + value_.str());
  }
}

Natural Natural::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Natural: empty string");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("Natural: not a decimal integer: '" + std::string(text) + "'");
    }
  }
  return Natural(Integer(std::string(text)));
}

bool Natural::fits_u64() const noexcept {
  return value_ <= std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("Natural: " + str() + " exceeds 64 bits");
  return value_.convert_to<std::uint64_t>();
}

Natural Natural::checked_sub(const Natural& rhs) const {
  if (value_ < rhs.value_) {
    throw std::domain_error("Natural: " + str() + " - " + rhs.str() + " is negative");
  }
  return Natural(Integer(value_ - rhs.value_));
}

Natural Natural::pow(unsigned exponent) const {
  return Natural(Integer(boost::multiprecision::pow(value_, exponent)));
}

Natural Natural::exact_div(const Natural& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("Natural: division by zero");
  Integer q;
  Integer r;
  boost::multiprecision::divide_qr(value_, rhs.value_, q, r);
  if (!r.is_zero()) {
    throw ConsistencyError("Natural: " + str() + " is not divisible by " + rhs.str());
  }
  return Natural(std::move(q));
}

Natural Natural::operator%(const Natural& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("Natural: modulo by zero");
  return Natural(Integer(value_ % rhs.value_));
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.value_; }

Natural gcd(const Natural& a, const Natural& b) {
  return Natural(Integer(boost::multiprecision::gcd(a.value(), b.value())));
}

Natural isqrt(const Natural& n) { return Natural(Integer(boost::multiprecision::sqrt(n.value()))); }

}  // namespace icg
