#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "icg/model.hpp"
#include "icg/natural.hpp"

namespace icg {

/// Largest order accepted by the O(n * |D|) spectral scan.
inline constexpr std::uint64_t kSpectralScanCap = 1'000'000;

/// Eigenvalues lambda_0, ..., lambda_{n-1} of a gcd graph.
struct Spectrum {
  Natural n;
  std::vector<Integer> eigenvalues;
};

enum class EnergyMethod { formula, spectral };
std::string to_string(EnergyMethod method);

struct EnergyReport {
  Natural energy;
  Natural n;
  DivisorSet divisors;
  EnergyMethod method;
};

/// h_{p,r}(a) = sum over k < i of p^{-(a_i - a_k)}; zero when r = 1.
Rational h_value(const Natural& p, const ExponentTuple& a);

/// Energy of ICG_{p^s}(D(a)) through the all-integer rearrangement
/// 2(p-1) (r p^{s-1} - (p-1) T) with T = sum over k < i of p^{s-1-(a_i-a_k)}.
Natural energy_prime_power(const PrimePowerOrder& order, const ExponentTuple& a);

/// Column of Ramanujan sums c_{n/d}(k), k = 0..n-1, for a proper divisor d of n.
std::vector<std::int64_t> ramanujan_column(std::uint64_t n, std::uint64_t d);

/// Sum over k of |sum of column entries at k|, with the k-range split over
/// `jobs` threads. The result does not depend on `jobs`.
Natural energy_from_columns(std::span<const std::vector<std::int64_t>* const> columns,
                            std::uint64_t n, unsigned jobs = 1);

/// lambda_k = sum over d in D of c_{n/d}(k). Throws ResourceError past kSpectralScanCap.
Spectrum spectrum_gcd_graph(const Natural& n, const DivisorSet& set);

/// Sum of |lambda_k| by direct scan. Throws ResourceError past kSpectralScanCap.
Natural energy_general(const Natural& n, const DivisorSet& set, unsigned jobs = 1);

EnergyReport report_formula(const PrimePowerOrder& order, const ExponentTuple& a);
EnergyReport report_spectral(const DivisorSet& set, unsigned jobs = 1);

struct MinimalEnergy {
  Natural value;
  std::vector<DivisorSet> minimizers;
};

/// 2(p-1)p^{s-1}, attained exactly by the singleton sets {p^t}.
MinimalEnergy emin_closed(const PrimePowerOrder& order);

struct MaximalEnergy {
  Natural value;
  /// Every exponent tuple attaining the maximum, sorted, without repeats.
  std::vector<ExponentTuple> maximizers;
};

/// Closed-form maximum energy for order p^s with all maximizing tuples.
MaximalEnergy emax_closed(const PrimePowerOrder& order);

/// Maximum energy written as 2(p-1) * cofactor without geometric-sum closed forms.
struct FactoredEnergy {
  Natural factor;    ///< 2(p-1)
  Natural cofactor;
  Natural value() const { return factor * cofactor; }
};
FactoredEnergy emax_alternative(const PrimePowerOrder& order);

/// Closed form of h at the equidistant tuple; s >= 2.
Rational h_equidistant(const Natural& p, unsigned s);

enum class Energeticity { hyperenergetic, hypoenergetic, neither };
std::string to_string(Energeticity e);

/// Compares an energy against E(K_n) = 2(n-1).
Energeticity classify_energy(const Natural& n, const Natural& energy);
Energeticity classify_energeticity(const Natural& n, const DivisorSet& set);

/// E <= (n/2)(sqrt(n) + 1), decided with integer arithmetic only.
bool koolen_moulton_check(const Natural& n, const Natural& energy);

/// Closed interval with exact rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Enclosure of c(p) = 1 - log(log p) / log p computed with directed rounding.
RationalInterval loglog_factor(const Natural& p);

/// Enclosures of the two-sided bound
///   c(p)(p-1)p^{s-1}(s-1) <= E_max(p^s) <= 2 c(p)(p-1)p^{s-1} s,  p >= 17.
struct AsymptoticBounds {
  RationalInterval lower;
  RationalInterval upper;
};
AsymptoticBounds asymptotic_emax_bounds(const PrimePowerOrder& order);

/// True when the enclosures certify lower <= energy <= upper.
bool within_asymptotic_bounds(const PrimePowerOrder& order, const Natural& energy);

}  // namespace icg
