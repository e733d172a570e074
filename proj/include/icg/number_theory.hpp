#pragma once

#include <cstdint>
#include <vector>

#include "icg/natural.hpp"

namespace icg {

/// Largest integer accepted by factorize() and everything built on it.
inline constexpr std::uint64_t kFactorizationCap = 1'000'000'000'000ULL;

struct PrimeFactor {
  Natural prime;
  unsigned multiplicity = 0;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Prime factorization with strictly increasing primes and multiplicities >= 1.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimeFactor> factors);

  const std::vector<PrimeFactor>& factors() const noexcept { return factors_; }
  bool squarefree() const noexcept;
  Natural product() const;

 private:
  std::vector<PrimeFactor> factors_;
};

/// Deterministic trial division. Throws std::domain_error for n = 0 and
/// ResourceError for n > kFactorizationCap.
Factorization factorize(const Natural& n);

/// Trial-division primality test, same cap as factorize().
bool is_prime(const Natural& n);

int mobius(const Natural& n);
Natural totient(const Natural& n);

/// c_q(k) = mu(q/g) * phi(q) / phi(q/g) with g = gcd(q, k).
Integer ramanujan_sum(const Natural& q, const Natural& k);

/// All positive divisors of n in increasing order.
std::vector<Natural> divisors(const Natural& n);

}  // namespace icg
