#include "icg/number_theory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace icg {
namespace {

std::uint64_t checked_input(const Natural& n, const char* what) {
  if (n.is_zero()) throw std::domain_error(std::string(what) + ": argument must be >= 1");
  if (n > Natural(kFactorizationCap)) {
    throw ResourceError(std::string(what) + ": " + n.str() + " exceeds the factorization cap 10^12");
  }
  return n.to_u64();
}

}  // namespace

Factorization::Factorization(std::vector<PrimeFactor> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].multiplicity == 0) throw std::invalid_argument("Factorization: zero multiplicity");
    if (i > 0 && !(factors_[i - 1].prime < factors_[i].prime)) {
      throw std::invalid_argument("Factorization: primes must be strictly increasing");
    }
  }
}

bool Factorization::squarefree() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimeFactor& f) { return f.multiplicity == 1; });
}

Natural Factorization::product() const {
  Natural result{1};
  for (const auto& f : factors_) result *= f.prime.pow(f.multiplicity);
  return result;
}

Factorization factorize(const Natural& n) {
  std::uint64_t m = checked_input(n, "factorize");
  std::vector<PrimeFactor> out;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({Natural(p), e});
  }
  if (m > 1) out.push_back({Natural(m), 1});
  return Factorization(std::move(out));
}

bool is_prime(const Natural& n) {
  if (n < Natural(2)) return false;
  const auto f = factorize(n);
  return f.factors().size() == 1 && f.factors().front().multiplicity == 1;
}

int mobius(const Natural& n) {
  const auto f = factorize(n);
  if (!f.squarefree()) return 0;
  return f.factors().size() % 2 == 0 ? 1 : -1;
}

Natural totient(const Natural& n) {
  const auto f = factorize(n);
  Natural result{1};
  for (const auto& [p, e] : f.factors()) {
    result *= p.pow(e - 1) * p.checked_sub(Natural(1));
  }
  return result;
}

Integer ramanujan_sum(const Natural& q, const Natural& k) {
  if (q.is_zero()) throw std::domain_error("ramanujan_sum: q must be >= 1");
  const Natural g = gcd(q, k);  // gcd(q, 0) = q
  const Natural quotient = q.exact_div(g);
  const int mu = mobius(quotient);
  if (mu == 0) return Integer(0);
  Integer value = totient(q).exact_div(totient(quotient)).value();
  return mu < 0 ? Integer(-value) : value;
}

std::vector<Natural> divisors(const Natural& n) {
  const auto f = factorize(n);
  std::vector<Natural> out{Natural(1)};
  for (const auto& [p, e] : f.factors()) {
    const std::size_t base = out.size();
    Natural power{1};
    for (unsigned i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace icg
