// Independent reference computations used only by the test suites. None of
// these call into the library's arithmetic paths.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace icg::oracle {

using BigInt = boost::multiprecision::cpp_int;

// Mobius by trial division.
inline int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// Euler totient by counting units.
inline std::uint64_t totient(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1 ? 1 : 0;
  return count;
}

// Real part of the exponential sum over units mod q, rounded to an integer.
inline long long ramanujan_exponential(std::uint64_t q, std::uint64_t k) {
  long double acc = 0;
  for (std::uint64_t j = 1; j <= q; ++j) {
    if (std::gcd(j, q) != 1) continue;
    acc += std::cos(2 * std::numbers::pi_v<long double> * static_cast<long double>((j * k) % q) /
                    static_cast<long double>(q));
  }
  return std::llround(acc);
}

// Eigenvalues of the gcd graph as character sums over its connection set
// S = {j : gcd(j, n) in D}, evaluated in long double and rounded.
inline std::vector<long long> circulant_spectrum(std::uint64_t n, const std::vector<std::uint64_t>& divisors) {
  std::vector<std::uint64_t> connection;
  for (std::uint64_t j = 1; j < n; ++j) {
    const std::uint64_t g = std::gcd(j, n);
    for (auto d : divisors) {
      if (g == d) connection.push_back(j);
    }
  }
  std::vector<long long> out(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    long double acc = 0;
    for (auto j : connection) {
      acc += std::cos(2 * std::numbers::pi_v<long double> * static_cast<long double>((j * k) % n) /
                      static_cast<long double>(n));
    }
    out[k] = std::llround(acc);
  }
  return out;
}

inline long long circulant_energy(std::uint64_t n, const std::vector<std::uint64_t>& divisors) {
  long long e = 0;
  for (auto l : circulant_spectrum(n, divisors)) e += l < 0 ? -l : l;
  return e;
}

// Energy of D = {p^{a_1}, ...} evaluated literally as
// 2(p-1)p^{s-1}(r - (p-1) h) with h summed term by term as exact fractions.
inline BigInt energy_from_h(std::uint64_t p, unsigned s, const std::vector<unsigned>& a) {
  using Fraction = boost::multiprecision::cpp_rational;
  Fraction h = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t i = k + 1; i < a.size(); ++i) {
      h += Fraction(BigInt(1), boost::multiprecision::pow(BigInt(p), a[i] - a[k]));
    }
  }
  const Fraction e = Fraction(2 * BigInt(p - 1) * boost::multiprecision::pow(BigInt(p), s - 1)) *
                     (Fraction(BigInt(a.size())) - Fraction(BigInt(p - 1)) * h);
  if (boost::multiprecision::denominator(e) != 1) return BigInt(-1);
  return boost::multiprecision::numerator(e);
}

// Random admissible tuple in A(s, r) for some r in [2, s]; s >= 2.
inline std::vector<unsigned> random_admissible(std::mt19937_64& rng, unsigned s) {
  std::vector<unsigned> a{0};
  for (unsigned x = 1; x + 1 < s; ++x) {
    if (std::bernoulli_distribution(0.5)(rng)) a.push_back(x);
  }
  a.push_back(s - 1);
  return a;
}

// Random composition of s - 1 into positive parts (a delta vector).
inline std::vector<unsigned> random_delta(std::mt19937_64& rng, unsigned s) {
  const auto a = random_admissible(rng, s);
  std::vector<unsigned> d;
  for (std::size_t j = 1; j < a.size(); ++j) d.push_back(a[j] - a[j - 1]);
  return d;
}

}  // namespace icg::oracle
