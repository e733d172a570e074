#include "icg/model.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "icg/number_theory.hpp"

namespace icg {
namespace {

template <class Range>
std::string join(const Range& values, char open, char close) {
  std::ostringstream os;
  os << open;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << close;
  return os.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::string body;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '(' || c == ')' || c == '{' || c == '}') continue;
    body.push_back(c);
  }
  if (body.empty()) throw std::invalid_argument("empty list: '" + text + "'");
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    out.push_back(body.substr(start, comma - start));
    if (out.back().empty()) throw std::invalid_argument("malformed list: '" + text + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

PrimePowerOrder::PrimePowerOrder(Natural p, unsigned s) : p_(std::move(p)), s_(s) {
  if (s_ == 0) throw std::invalid_argument("PrimePowerOrder: exponent s must be >= 1");
  if (!is_prime(p_)) throw std::invalid_argument("PrimePowerOrder: " + p_.str() + " is not prime");
  n_ = p_.pow(s_);
}

ExponentTuple::ExponentTuple(std::vector<unsigned> entries, unsigned s)
    : a_(std::move(entries)), s_(s) {
  if (s_ == 0) throw std::invalid_argument("ExponentTuple: s must be >= 1");
  if (a_.empty()) throw std::invalid_argument("ExponentTuple: empty tuple");
  for (std::size_t j = 1; j < a_.size(); ++j) {
    if (a_[j - 1] >= a_[j]) {
      throw std::invalid_argument("ExponentTuple: entries must be strictly increasing");
    }
  }
  if (a_.back() > s_ - 1) {
    throw std::invalid_argument("ExponentTuple: exponent " + std::to_string(a_.back()) +
                                " exceeds s-1 = " + std::to_string(s_ - 1));
  }
}

bool AdmissibleTuple::is_admissible(const ExponentTuple& t) noexcept {
  return t.r() >= 2 && t.entries().front() == 0 && t.entries().back() == t.s() - 1;
}

AdmissibleTuple::AdmissibleTuple(std::vector<unsigned> entries, unsigned s)
    : AdmissibleTuple(ExponentTuple(std::move(entries), s)) {}

AdmissibleTuple::AdmissibleTuple(const ExponentTuple& tuple) : ExponentTuple(tuple) {
  if (!is_admissible(tuple)) {
    throw std::invalid_argument("AdmissibleTuple: " + to_string(tuple) +
                                " needs r >= 2, a_1 = 0 and a_r = s-1 = " +
                                std::to_string(tuple.s() - 1));
  }
}

DeltaVector::DeltaVector(std::vector<unsigned> entries, unsigned s) : d_(std::move(entries)), s_(s) {
  if (d_.empty()) throw std::invalid_argument("DeltaVector: empty vector");
  if (std::any_of(d_.begin(), d_.end(), [](unsigned x) { return x < 1; })) {
    throw std::invalid_argument("DeltaVector: entries must be >= 1");
  }
  const unsigned long long sum = std::accumulate(d_.begin(), d_.end(), 0ULL);
  if (s_ == 0 || sum != s_ - 1ULL) {
    throw std::invalid_argument("DeltaVector: entries of " + join(d_, '(', ')') + " sum to " +
                                std::to_string(sum) + ", expected s-1 = " +
                                std::to_string(static_cast<long long>(s_) - 1));
  }
}

unsigned DeltaVector::max_norm() const noexcept { return *std::max_element(d_.begin(), d_.end()); }

DeltaVector DeltaVector::reversed() const {
  return DeltaVector(std::vector<unsigned>(d_.rbegin(), d_.rend()), s_);
}

DivisorSet::DivisorSet(std::vector<Natural> elements, Natural n)
    : elements_(std::move(elements)), n_(std::move(n)) {
  if (elements_.empty()) throw std::invalid_argument("DivisorSet: empty set");
  if (n_.is_zero()) throw std::invalid_argument("DivisorSet: order must be >= 1");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const auto& d : elements_) {
    if (d.is_zero() || !(n_ % d).is_zero()) {
      throw std::invalid_argument("DivisorSet: " + d.str() + " does not divide " + n_.str());
    }
    if (d == n_) throw std::invalid_argument("DivisorSet: n = " + n_.str() + " itself is excluded");
  }
}

bool DivisorSet::contains(const Natural& d) const {
  return std::binary_search(elements_.begin(), elements_.end(), d);
}

DeltaVector delta(const AdmissibleTuple& a) {
  const auto& e = a.entries();
  std::vector<unsigned> d(e.size() - 1);
  for (std::size_t j = 0; j + 1 < e.size(); ++j) d[j] = e[j + 1] - e[j];
  return DeltaVector(std::move(d), a.s());
}

AdmissibleTuple delta_inverse(const DeltaVector& d) {
  std::vector<unsigned> a{0};
  a.reserve(d.size() + 1);
  for (unsigned x : d.entries()) a.push_back(a.back() + x);
  return AdmissibleTuple(std::move(a), d.s());
}

DivisorSet divisor_set_of(const ExponentTuple& a, const PrimePowerOrder& order) {
  if (a.s() != order.s()) {
    throw std::invalid_argument("divisor_set_of: tuple context s = " + std::to_string(a.s()) +
                                " differs from order exponent " + std::to_string(order.s()));
  }
  std::vector<Natural> elems;
  elems.reserve(a.r());
  for (unsigned e : a.entries()) elems.push_back(order.p().pow(e));
  return DivisorSet(std::move(elems), order.n());
}

ExponentTuple reverse_complement(const ExponentTuple& a) {
  const unsigned top = a.s() - 1;
  std::vector<unsigned> out;
  out.reserve(a.r());
  for (auto it = a.entries().rbegin(); it != a.entries().rend(); ++it) out.push_back(top - *it);
  return ExponentTuple(std::move(out), a.s());
}

AdmissibleTuple reverse_complement(const AdmissibleTuple& a) {
  return AdmissibleTuple(reverse_complement(static_cast<const ExponentTuple&>(a)));
}

ExponentTuple exponents_of(const DivisorSet& set, const PrimePowerOrder& order) {
  if (set.n() != order.n()) {
    throw std::invalid_argument("exponents_of: divisor set order " + set.n().str() +
                                " differs from " + order.n().str());
  }
  std::vector<unsigned> exps;
  for (const auto& d : set.elements()) {
    Natural power{1};
    unsigned e = 0;
    while (power < d) {
      power *= order.p();
      ++e;
    }
    if (power != d) throw std::invalid_argument("exponents_of: " + d.str() + " is not a power of p");
    exps.push_back(e);
  }
  return ExponentTuple(std::move(exps), order.s());
}

bool is_connected(const DivisorSet& set, const PrimePowerOrder& order) {
  if (set.n() != order.n()) throw std::invalid_argument("is_connected: order mismatch");
  return set.contains(Natural(1));
}

bool is_connected(const DivisorSet& set) {
  Natural g = set.n();
  for (const auto& d : set.elements()) g = gcd(g, d);
  return g == Natural(1);
}

AdmissibleTuple equidistant_tuple(unsigned s) {
  if (s < 2) throw std::invalid_argument("equidistant_tuple: s must be >= 2");
  std::vector<unsigned> a;
  for (unsigned x = 0; x < s - 1; x += 2) a.push_back(x);
  if (a.back() != s - 1) a.push_back(s - 1);
  return AdmissibleTuple(std::move(a), s);
}

std::string to_string(const ExponentTuple& a) { return join(a.entries(), '(', ')'); }
std::string to_string(const DeltaVector& d) { return join(d.entries(), '(', ')'); }
std::string to_string(const DivisorSet& set) { return join(set.elements(), '{', '}'); }

std::ostream& operator<<(std::ostream& os, const ExponentTuple& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const DeltaVector& d) { return os << to_string(d); }
std::ostream& operator<<(std::ostream& os, const DivisorSet& set) { return os << to_string(set); }

std::vector<unsigned> parse_index_list(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& item : split_list(text)) {
    unsigned value = 0;
    const auto* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
      throw std::invalid_argument("not a non-negative integer: '" + item + "'");
    }
    out.push_back(value);
  }
  return out;
}

std::vector<Natural> parse_natural_list(const std::string& text) {
  std::vector<Natural> out;
  for (const auto& item : split_list(text)) out.push_back(Natural::parse(item));
  return out;
}

}  // namespace icg
