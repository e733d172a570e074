#include "icg/energy.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "icg/number_theory.hpp"

namespace icg {
namespace {

__extension__ using u128 = unsigned __int128;

Integer from_u128(u128 v) {
  Integer out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

// Same rearranged formula as the general path, in 128-bit arithmetic when
// 2 p r^2 p^{s-1} stays below 2^127.
std::optional<Natural> energy_u128(const Natural& p_nat, unsigned s, const std::vector<unsigned>& a) {
  if (!p_nat.fits_u64()) return std::nullopt;
  const u128 p = p_nat.to_u64();
  const u128 r = a.size();
  const u128 limit = (static_cast<u128>(1) << 127) / (2 * p * r * r);
  std::vector<u128> pw(s);
  pw[0] = 1;
  for (unsigned e = 1; e < s; ++e) {
    if (pw[e - 1] > limit / p) return std::nullopt;
    pw[e] = pw[e - 1] * p;
  }
  const unsigned top = s - 1;
  u128 t = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t i = k + 1; i < a.size(); ++i) t += pw[top - (a[i] - a[k])];
  }
  const u128 lead = r * pw[top];
  const u128 sub = (p - 1) * t;
  if (sub >= lead) throw ConsistencyError("energy_prime_power: non-positive bracket");
  return Natural(from_u128(2 * (p - 1) * (lead - sub)));
}

Integer ipow(const Natural& p, unsigned e) { return boost::multiprecision::pow(p.value(), e); }

}  // namespace

std::string to_string(EnergyMethod method) {
  return method == EnergyMethod::formula ? "formula" : "spectral";
}

Rational h_value(const Natural& p, const ExponentTuple& a) {
  const auto& x = a.entries();
  if (x.size() < 2) return Rational(0);
  // Common denominator p^{a_r - a_1}.
  const unsigned span = x.back() - x.front();
  std::vector<Integer> pw(span + 1);
  pw[0] = 1;
  for (unsigned e = 1; e <= span; ++e) pw[e] = pw[e - 1] * p.value();
  Integer numerator = 0;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    for (std::size_t i = k + 1; i < x.size(); ++i) numerator += pw[span - (x[i] - x[k])];
  }
  return Rational(numerator, pw[span]);
}

Natural energy_prime_power(const PrimePowerOrder& order, const ExponentTuple& a) {
  if (a.s() != order.s()) {
    throw std::invalid_argument("energy_prime_power: tuple context s = " + std::to_string(a.s()) +
                                " differs from order exponent " + std::to_string(order.s()));
  }
  if (auto fast = energy_u128(order.p(), order.s(), a.entries())) return *fast;

  const unsigned top = order.s() - 1;
  const Integer& p = order.p().value();
  std::vector<Integer> pw(order.s());
  pw[0] = 1;
  for (unsigned e = 1; e <= top; ++e) pw[e] = pw[e - 1] * p;
  const auto& x = a.entries();
  Integer t = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (std::size_t i = k + 1; i < x.size(); ++i) t += pw[top - (x[i] - x[k])];
  }
  const Integer bracket = Integer(x.size()) * pw[top] - (p - 1) * t;
  if (bracket.sign() <= 0) throw ConsistencyError("energy_prime_power: non-positive bracket");
  return Natural(Integer(2 * (p - 1) * bracket));
}

std::vector<std::int64_t> ramanujan_column(std::uint64_t n, std::uint64_t d) {
  if (d == 0 || n % d != 0 || d == n) {
    throw std::invalid_argument("ramanujan_column: " + std::to_string(d) +
                                " is not a proper divisor of " + std::to_string(n));
  }
  const std::uint64_t q = n / d;
  std::unordered_map<std::uint64_t, std::int64_t> by_gcd;
  std::vector<std::int64_t> period(q);
  for (std::uint64_t k = 0; k < q; ++k) {
    const std::uint64_t g = std::gcd(q, k);
    auto it = by_gcd.find(g);
    if (it == by_gcd.end()) {
      const Integer c = ramanujan_sum(Natural(q), Natural(g));
      it = by_gcd.emplace(g, c.convert_to<std::int64_t>()).first;
    }
    period[k] = it->second;
  }
  std::vector<std::int64_t> column(n);
  for (std::uint64_t k = 0; k < n; ++k) column[k] = period[k % q];
  return column;
}

Natural energy_from_columns(std::span<const std::vector<std::int64_t>* const> columns,
                            std::uint64_t n, unsigned jobs) {
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t acc = 0;
    for (std::uint64_t k = lo; k < hi; ++k) {
      std::int64_t lambda = 0;
      for (const auto* col : columns) lambda += (*col)[k];
      acc += static_cast<std::uint64_t>(lambda < 0 ? -lambda : lambda);
    }
    return acc;
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(n, 64))));
  if (jobs == 1) return Natural(scan(0, n));

  std::vector<std::uint64_t> partial(jobs, 0);
  {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (n + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::uint64_t lo = std::min<std::uint64_t>(n, w * chunk);
      const std::uint64_t hi = std::min<std::uint64_t>(n, lo + chunk);
      workers.emplace_back([&, w, lo, hi] { partial[w] = scan(lo, hi); });
    }
  }
  Natural total{0};
  for (auto v : partial) total += Natural(v);
  return total;
}

namespace {

std::uint64_t checked_scan_order(const Natural& n, const DivisorSet& set, const char* what) {
  if (set.n() != n) {
    throw std::invalid_argument(std::string(what) + ": divisor set belongs to order " +
                                set.n().str() + ", not " + n.str());
  }
  if (n > Natural(kSpectralScanCap)) {
    throw ResourceError(std::string(what) + ": order " + n.str() +
                        " exceeds the spectral scan cap 10^6");
  }
  return n.to_u64();
}

std::vector<std::vector<std::int64_t>> columns_for(std::uint64_t n, const DivisorSet& set) {
  std::vector<std::vector<std::int64_t>> cols;
  cols.reserve(set.size());
  for (const auto& d : set.elements()) cols.push_back(ramanujan_column(n, d.to_u64()));
  return cols;
}

}  // namespace

Spectrum spectrum_gcd_graph(const Natural& n, const DivisorSet& set) {
  const std::uint64_t order = checked_scan_order(n, set, "spectrum_gcd_graph");
  const auto cols = columns_for(order, set);
  Spectrum out{n, std::vector<Integer>(order)};
  for (std::uint64_t k = 0; k < order; ++k) {
    std::int64_t lambda = 0;
    for (const auto& c : cols) lambda += c[k];
    out.eigenvalues[k] = lambda;
  }
  return out;
}

Natural energy_general(const Natural& n, const DivisorSet& set, unsigned jobs) {
  const std::uint64_t order = checked_scan_order(n, set, "energy_general");
  const auto cols = columns_for(order, set);
  std::vector<const std::vector<std::int64_t>*> ptrs;
  for (const auto& c : cols) ptrs.push_back(&c);
  return energy_from_columns(ptrs, order, jobs);
}

EnergyReport report_formula(const PrimePowerOrder& order, const ExponentTuple& a) {
  return {energy_prime_power(order, a), order.n(), divisor_set_of(a, order), EnergyMethod::formula};
}

EnergyReport report_spectral(const DivisorSet& set, unsigned jobs) {
  return {energy_general(set.n(), set, jobs), set.n(), set, EnergyMethod::spectral};
}

MinimalEnergy emin_closed(const PrimePowerOrder& order) {
  const Natural& p = order.p();
  MinimalEnergy out{Natural(2) * p.checked_sub(1) * p.pow(order.s() - 1), {}};
  for (unsigned t = 0; t < order.s(); ++t) out.minimizers.emplace_back(std::vector{p.pow(t)}, order.n());
  return out;
}

MaximalEnergy emax_closed(const PrimePowerOrder& order) {
  const Integer& p = order.p().value();
  const unsigned s = order.s();
  const Integer ps = ipow(order.p(), s);
  Integer numerator;
  if (s % 2 == 1) {
    numerator = Integer(s + 1) * (p * p - 1) * ps + 2 * (ps * p - 1);
  } else {
    numerator = Integer(s) * (p * p - 1) * ps + 2 * (2 * ps * p - ps / p + p * p - p - 1);
  }
  MaximalEnergy out{Natural(numerator).exact_div(Natural(Integer((p + 1) * (p + 1)))), {}};

  if (s == 1) {
    out.maximizers.emplace_back(std::vector<unsigned>{0}, 1);
    return out;
  }
  out.maximizers.push_back(equidistant_tuple(s));
  // Interleaved tuple (0,1,3,5,...,s-1): delta vector (1,2,...,2,1) for odd s,
  // (1,2,...,2) for even s.
  if (s % 2 == 0 || order.p() == Natural(2)) {
    std::vector<unsigned> a{0};
    for (unsigned x = 1; x < s - 1; x += 2) a.push_back(x);
    if (a.back() != s - 1) a.push_back(s - 1);
    out.maximizers.emplace_back(std::move(a), s);
  }
  std::sort(out.maximizers.begin(), out.maximizers.end());
  out.maximizers.erase(std::unique(out.maximizers.begin(), out.maximizers.end()), out.maximizers.end());
  return out;
}

FactoredEnergy emax_alternative(const PrimePowerOrder& order) {
  const Natural& p = order.p();
  const unsigned s = order.s();
  const Integer pm1 = p.value() - 1;
  Integer cofactor;
  if (s % 2 == 1) {
    const unsigned m = (s - 1) / 2;
    Integer sum = 0;
    for (unsigned j = 0; j < m; ++j) sum += Integer(j + 1) * ipow(p, 2 * j);
    cofactor = Integer(m + 1) * ipow(p, 2 * m) - pm1 * sum;
  } else {
    const unsigned m = s / 2;
    Integer sum = 0;
    for (unsigned j = 0; j + 3 <= m; ++j) sum += Integer(j + 1) * ipow(p, 2 * j + 3);
    cofactor = Integer(m) * ipow(p, 2 * m - 1) - pm1 * sum + 1;
  }
  return {Natural(Integer(2 * pm1)), Natural(cofactor)};
}

Rational h_equidistant(const Natural& p_nat, unsigned s) {
  if (s < 2) throw std::invalid_argument("h_equidistant: s must be >= 2");
  const Integer& p = p_nat.value();
  const Integer q = p * p - 1;
  if (s % 2 == 1) {
    return Rational(Integer(s - 1) * ipow(p_nat, s + 1) - Integer(s + 1) * ipow(p_nat, s - 1) + 2,
                    2 * q * q * ipow(p_nat, s - 1));
  }
  const Rational pairs(Integer(s - 2) * ipow(p_nat, s) - Integer(s) * ipow(p_nat, s - 2) + 2,
                       2 * q * q * ipow(p_nat, s - 2));
  const Rational tail(ipow(p_nat, s) - 1, q * ipow(p_nat, s - 1));
  return pairs + tail;
}

std::string to_string(Energeticity e) {
  switch (e) {
    case Energeticity::hyperenergetic: return "hyperenergetic";
    case Energeticity::hypoenergetic: return "hypoenergetic";
    case Energeticity::neither: return "neither";
  }
  return "?";
}

Energeticity classify_energy(const Natural& n, const Natural& energy) {
  if (n.is_zero()) throw std::invalid_argument("classify_energy: n must be >= 1");
  const Natural complete = Natural(2) * n.checked_sub(1);
  if (energy > complete) return Energeticity::hyperenergetic;
  if (energy < complete) return Energeticity::hypoenergetic;
  return Energeticity::neither;
}

Energeticity classify_energeticity(const Natural& n, const DivisorSet& set) {
  return classify_energy(n, energy_general(n, set));
}

bool koolen_moulton_check(const Natural& n, const Natural& energy) {
  if (n.is_zero()) throw std::invalid_argument("koolen_moulton_check: n must be >= 1");
  // 2E <= n sqrt(n) + n  <=>  2E - n <= 0  or  (2E - n)^2 <= n^3.
  const Natural twice = Natural(2) * energy;
  if (twice <= n) return true;
  const Natural excess = twice.checked_sub(n);
  return excess * excess <= n.pow(3);
}

}  // namespace icg
