#include "icg/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "icg/energy.hpp"
#include "icg/number_theory.hpp"
#include "icg/transform.hpp"

namespace icg {
namespace {

struct Partial {
  Natural best{0};
  std::vector<std::uint64_t> masks;
};

// Splits [1, 2^bits) into contiguous chunks and keeps, per chunk, the best
// value with every mask attaining it. Merging is order-independent.
template <class Eval>
Partial enumerate_masks(unsigned bits, unsigned jobs, Eval eval) {
  const std::uint64_t end = std::uint64_t{1} << bits;
  const std::uint64_t total = end - 1;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));

  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    Partial part;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      Natural e = eval(mask);
      if (e > part.best || part.masks.empty()) {
        part.best = std::move(e);
        part.masks.assign(1, mask);
      } else if (e == part.best) {
        part.masks.push_back(mask);
      }
    }
    return part;
  };

  std::vector<Partial> parts(jobs);
  if (jobs == 1) {
    parts[0] = run(1, end);
  } else {
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::uint64_t lo = std::min(end, 1 + w * chunk);
      const std::uint64_t hi = std::min(end, lo + chunk);
      workers.emplace_back([&, w, lo, hi] { parts[w] = run(lo, hi); });
    }
  }

  Partial merged;
  for (auto& part : parts) {
    if (part.masks.empty()) continue;
    if (merged.masks.empty() || part.best > merged.best) {
      merged = std::move(part);
    } else if (part.best == merged.best) {
      merged.masks.insert(merged.masks.end(), part.masks.begin(), part.masks.end());
    }
  }
  return merged;
}

std::vector<unsigned> exponents_of_mask(std::uint64_t mask, unsigned s) {
  std::vector<unsigned> a;
  for (unsigned e = 0; e < s; ++e) {
    if (mask >> e & 1U) a.push_back(e);
  }
  return a;
}

}  // namespace

MaximizerReport brute_force_emax_prime_power(const PrimePowerOrder& order, unsigned jobs) {
  const unsigned s = order.s();
  if (s > kMaxBruteForceExponent) {
    throw ResourceError("brute_force_emax_prime_power: s = " + std::to_string(s) + " exceeds " +
                        std::to_string(kMaxBruteForceExponent));
  }
  auto best = enumerate_masks(s, jobs, [&](std::uint64_t mask) {
    return energy_prime_power(order, ExponentTuple(exponents_of_mask(mask, s), s));
  });

  MaximizerReport report{order.n(), best.best, {}, (std::uint64_t{1} << s) - 1};
  for (auto mask : best.masks) {
    report.maximizers.push_back(divisor_set_of(ExponentTuple(exponents_of_mask(mask, s), s), order));
  }
  std::sort(report.maximizers.begin(), report.maximizers.end());
  return report;
}

MaximizerReport brute_force_emax_general(const Natural& n, unsigned jobs) {
  if (n > Natural(kMaxBruteForceOrder)) {
    throw ResourceError("brute_force_emax_general: n = " + n.str() + " exceeds " +
                        std::to_string(kMaxBruteForceOrder));
  }
  if (n < Natural(2)) throw std::invalid_argument("brute_force_emax_general: n must be >= 2");
  auto proper = divisors(n);
  proper.pop_back();
  if (proper.size() > kMaxBruteForceDivisors) {
    throw ResourceError("brute_force_emax_general: " + std::to_string(proper.size()) +
                        " proper divisors exceed " + std::to_string(kMaxBruteForceDivisors));
  }
  const std::uint64_t order = n.to_u64();
  std::vector<std::vector<std::int64_t>> columns;
  for (const auto& d : proper) columns.push_back(ramanujan_column(order, d.to_u64()));

  const auto bits = static_cast<unsigned>(proper.size());
  auto best = enumerate_masks(bits, jobs, [&](std::uint64_t mask) {
    std::vector<const std::vector<std::int64_t>*> chosen;
    for (unsigned j = 0; j < bits; ++j) {
      if (mask >> j & 1U) chosen.push_back(&columns[j]);
    }
    return energy_from_columns(chosen, order, 1);
  });

  MaximizerReport report{n, best.best, {}, (std::uint64_t{1} << bits) - 1};
  for (auto mask : best.masks) {
    std::vector<Natural> elems;
    for (unsigned j = 0; j < bits; ++j) {
      if (mask >> j & 1U) elems.push_back(proper[j]);
    }
    report.maximizers.emplace_back(std::move(elems), n);
  }
  std::sort(report.maximizers.begin(), report.maximizers.end());
  return report;
}

TheoremCheck verify_theorem(const PrimePowerOrder& order, unsigned jobs) {
  TheoremCheck check;
  const auto closed = emax_closed(order);
  check.closed_value = closed.value;

  if (order.s() == 1) {
    check.expected.emplace_back(std::vector<Natural>{Natural(1)}, order.n());
  } else {
    for (const auto& d : canonical_maximizer(order)) {
      check.expected.push_back(divisor_set_of(delta_inverse(d), order));
    }
  }
  std::sort(check.expected.begin(), check.expected.end());

  std::vector<DivisorSet> from_closed;
  for (const auto& t : closed.maximizers) from_closed.push_back(divisor_set_of(t, order));
  std::sort(from_closed.begin(), from_closed.end());
  if (from_closed != check.expected) {
    check.discrepancies.push_back("closed-form maximizer tuples disagree with canonical delta vectors");
  }

  try {
    const auto brute = brute_force_emax_prime_power(order, jobs);
    check.brute_value = brute.emax;
    check.found = brute.maximizers;
    check.examined = brute.examined;
  } catch (const ResourceError& e) {
    check.discrepancies.push_back(e.what());
    return check;
  }

  if (check.brute_value != check.closed_value) {
    check.discrepancies.push_back("E_max: closed form " + check.closed_value.str() + " vs brute force " +
                                  check.brute_value.str());
  }
  if (check.found != check.expected) {
    std::string found;
    for (const auto& d : check.found) found += to_string(d) + " ";
    check.discrepancies.push_back("maximizer sets differ; brute force found " + found);
  }
  check.ok = check.discrepancies.empty();
  return check;
}

AdmissibleTuple uv_derivative(const AdmissibleTuple& a, std::size_t u, std::size_t v) {
  const std::size_t r = a.r();
  if (r < 3 || u < 1 || u >= v || v > r - 1) {
    throw std::invalid_argument("uv_derivative: needs r >= 3 and 1 <= u < v <= r-1");
  }
  std::vector<unsigned> out;
  out.reserve(r - 1);
  for (std::size_t j = 1; j <= r - 1; ++j) {
    if (j <= u) {
      out.push_back(a.at(j));
    } else if (j <= v - 1) {
      out.push_back(a.at(j) + 1);
    } else {
      out.push_back(a.at(j + 1));
    }
  }
  return AdmissibleTuple(std::move(out), a.s());
}

Rational tableau_reduction_rhs(const Natural& p_nat, const AdmissibleTuple& a, std::size_t u,
                               std::size_t v) {
  const Integer& p = p_nat.value();
  auto pw = [&](unsigned e) { return Integer(boost::multiprecision::pow(p, e)); };

  Integer big_u = 0;
  for (std::size_t k = 1; k <= u; ++k) big_u += pw(a.at(k));
  Rational big_v = 0;
  for (std::size_t i = v + 1; i <= a.r(); ++i) big_v += Rational(Integer(1), pw(a.at(i)));

  const Rational shrink(Integer(1), pw(2 * static_cast<unsigned>(v - u - 1)));
  const Rational inner = Rational(big_u, pw(a.at(u + 1))) + Rational(pw(a.at(v))) * big_v;
  return Rational(Integer(1), p + 1) * (Rational(p) + shrink) * inner +
         Rational(Integer(1), p * p - 1) * (Rational(1) - shrink);
}

bool tableau_reduction_check(const Natural& p, const AdmissibleTuple& a, std::size_t u, std::size_t v) {
  if (a.r() < 3 || u < 1 || u >= v || v > a.r() - 1) {
    throw std::invalid_argument("tableau_reduction_check: needs r >= 3 and 1 <= u < v <= r-1");
  }
  for (std::size_t j = u + 1; j + 1 <= v; ++j) {
    if (a.at(j + 1) - a.at(j) != 2) {
      throw std::invalid_argument("tableau_reduction_check: a_{j+1} - a_j != 2 at j = " +
                                  std::to_string(j));
    }
  }
  const Rational direct = h_value(p, a) - h_value(p, uv_derivative(a, u, v));
  return direct == tableau_reduction_rhs(p, a, u, v);
}

}  // namespace icg
