#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "icg/model.hpp"
#include "icg/natural.hpp"

namespace icg {

inline constexpr unsigned kMaxBruteForceExponent = 20;
inline constexpr std::uint64_t kMaxBruteForceOrder = 10'000;
inline constexpr std::size_t kMaxBruteForceDivisors = 20;

struct MaximizerReport {
  Natural n;
  Natural emax;
  /// All sets attaining emax, sorted.
  std::vector<DivisorSet> maximizers;
  std::uint64_t examined = 0;
};

/// Exhaustive search over all 2^s - 1 nonempty subsets of {1, p, ..., p^{s-1}}.
/// Throws ResourceError for s > kMaxBruteForceExponent. The report is
/// identical for every value of `jobs`.
MaximizerReport brute_force_emax_prime_power(const PrimePowerOrder& order, unsigned jobs = 1);

/// Exhaustive search over nonempty subsets of proper divisors of n with the
/// spectral energy. Throws ResourceError for n > kMaxBruteForceOrder or more
/// than kMaxBruteForceDivisors proper divisors.
MaximizerReport brute_force_emax_general(const Natural& n, unsigned jobs = 1);

struct TheoremCheck {
  bool ok = false;
  Natural closed_value;
  Natural brute_value;
  std::vector<DivisorSet> expected;  ///< divisor sets of the canonical maximizers
  std::vector<DivisorSet> found;     ///< brute-force maximizers
  std::uint64_t examined = 0;
  std::vector<std::string> discrepancies;
};

/// Compares the closed-form maximum and maximizers with exhaustive search.
/// Discrepancies are reported, never thrown.
TheoremCheck verify_theorem(const PrimePowerOrder& order, unsigned jobs = 1);

/// (u,v)-derivative: keeps a_1..a_u, shifts a_{u+1}..a_{v-1} up by one and
/// drops a_v. Requires 3 <= r and 1 <= u < v <= r-1.
AdmissibleTuple uv_derivative(const AdmissibleTuple& a, std::size_t u, std::size_t v);

/// Closed expression for h(a) - h(uv_derivative(a)) in terms of
/// U = sum_{k<=u} p^{a_k} and V = sum_{i>v} p^{-a_i}.
Rational tableau_reduction_rhs(const Natural& p, const AdmissibleTuple& a, std::size_t u, std::size_t v);

/// Evaluates h(a) - h(uv_derivative(a)) directly and via the closed
/// expression; true when they agree exactly. Throws std::invalid_argument
/// unless a_{j+1} - a_j = 2 for u+1 <= j <= v-1.
bool tableau_reduction_check(const Natural& p, const AdmissibleTuple& a, std::size_t u, std::size_t v);

}  // namespace icg
