#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "icg/natural.hpp"

namespace icg {

/// Graph order n = p^s with p prime and s >= 1.
class PrimePowerOrder {
 public:
  /// Throws std::invalid_argument if p is not prime or s == 0.
  PrimePowerOrder(Natural p, unsigned s);

  const Natural& p() const noexcept { return p_; }
  unsigned s() const noexcept { return s_; }
  const Natural& n() const noexcept { return n_; }

  friend bool operator==(const PrimePowerOrder&, const PrimePowerOrder&) = default;

 private:
  Natural p_;
  unsigned s_;
  Natural n_;
};

/// Strictly increasing exponents 0 <= a_1 < ... < a_r <= s-1 with r >= 1.
///
/// Describes an arbitrary divisor set {p^{a_1}, ..., p^{a_r}} of p^s,
/// including singletons and tuples not starting at 0.
class ExponentTuple {
 public:
  ExponentTuple(std::vector<unsigned> entries, unsigned s);

  const std::vector<unsigned>& entries() const noexcept { return a_; }
  std::size_t r() const noexcept { return a_.size(); }
  unsigned s() const noexcept { return s_; }
  /// 1-based access matching the usual a_1, ..., a_r indexing.
  unsigned at(std::size_t j) const { return a_.at(j - 1); }

  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
  friend auto operator<=>(const ExponentTuple& x, const ExponentTuple& y) {
    return x.a_ <=> y.a_;
  }

 private:
  std::vector<unsigned> a_;
  unsigned s_;
};

/// Member of A(s, r): r >= 2, a_1 = 0 and a_r = s - 1.
class AdmissibleTuple : public ExponentTuple {
 public:
  AdmissibleTuple(std::vector<unsigned> entries, unsigned s);
  /// Throws std::invalid_argument when the tuple is not admissible.
  explicit AdmissibleTuple(const ExponentTuple& tuple);

  static bool is_admissible(const ExponentTuple& tuple) noexcept;
};

/// Member of D(s, r): entries d_j >= 1 summing to s - 1.
///
/// The length is r - 1, where r is the length of the corresponding
/// admissible tuple.
class DeltaVector {
 public:
  DeltaVector(std::vector<unsigned> entries, unsigned s);

  const std::vector<unsigned>& entries() const noexcept { return d_; }
  std::size_t size() const noexcept { return d_.size(); }
  std::size_t r() const noexcept { return d_.size() + 1; }
  unsigned s() const noexcept { return s_; }
  unsigned at(std::size_t j) const { return d_.at(j - 1); }
  unsigned max_norm() const noexcept;
  DeltaVector reversed() const;

  friend bool operator==(const DeltaVector&, const DeltaVector&) = default;
  friend auto operator<=>(const DeltaVector& x, const DeltaVector& y) { return x.d_ <=> y.d_; }

 private:
  std::vector<unsigned> d_;
  unsigned s_;
};

/// Nonempty set of proper divisors of n, stored sorted ascending.
class DivisorSet {
 public:
  DivisorSet(std::vector<Natural> elements, Natural n);

  const std::vector<Natural>& elements() const noexcept { return elements_; }
  const Natural& n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const Natural& d) const;

  friend bool operator==(const DivisorSet&, const DivisorSet&) = default;
  friend auto operator<=>(const DivisorSet& x, const DivisorSet& y) {
    return x.elements_ <=> y.elements_;
  }

 private:
  std::vector<Natural> elements_;
  Natural n_;
};

DeltaVector delta(const AdmissibleTuple& a);
AdmissibleTuple delta_inverse(const DeltaVector& d);

DivisorSet divisor_set_of(const ExponentTuple& a, const PrimePowerOrder& order);

/// (s-1-a_r, ..., s-1-a_1); reverses the delta vector of an admissible tuple.
ExponentTuple reverse_complement(const ExponentTuple& a);
AdmissibleTuple reverse_complement(const AdmissibleTuple& a);

/// Recovers the exponent tuple of a divisor set of p^s. Throws if some
/// element is not a power of p.
ExponentTuple exponents_of(const DivisorSet& set, const PrimePowerOrder& order);

/// Connectivity for prime-power order: 1 is in the set.
bool is_connected(const DivisorSet& set, const PrimePowerOrder& order);
/// Connectivity for arbitrary order: gcd(n, d_1, ..., d_r) = 1.
bool is_connected(const DivisorSet& set);

/// Equidistant tuple (0,2,...,s-3,s-1) for odd s, (0,2,...,s-2,s-1) for even s >= 2.
AdmissibleTuple equidistant_tuple(unsigned s);

// Text notation: tuples as "(0,2,4)", sets as "{1,4,16}".
std::string to_string(const ExponentTuple& a);
std::string to_string(const DeltaVector& d);
std::string to_string(const DivisorSet& set);
std::ostream& operator<<(std::ostream& os, const ExponentTuple& a);
std::ostream& operator<<(std::ostream& os, const DeltaVector& d);
std::ostream& operator<<(std::ostream& os, const DivisorSet& set);

/// Parses "0,2,4" or "(0,2,4)" (whitespace tolerated).
std::vector<unsigned> parse_index_list(const std::string& text);
/// Parses "1,15,21" or "{1,15,21}" into arbitrary-precision values.
std::vector<Natural> parse_natural_list(const std::string& text);

}  // namespace icg
