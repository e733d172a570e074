#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "icg/model.hpp"
#include "icg/natural.hpp"

namespace icg {

/// The six energy-increasing rewrites on delta vectors.
///
///   Ia   d_u >= 4                  d_u  -> 2, d_u - 2
///   Ib   d_u = max = 3, all >= 2   d_u  -> 2, 1
///   II   {d_u, d_v} = {1, 3}       both -> 2
///   III  d_u = d_v = 1             block u..v -> v - u twos
///   IV   d_u = d_v = 3             block u..v -> v - u + 2 twos
///   V    single 1 at 2 <= u <= r-2, rest 2     -> (2, ..., 2, 1)
///
/// Pair rules (II, III, IV) require every entry strictly between u and v to
/// be 2. Positions u, v are 1-based.
enum class TransformLabel { Ia, Ib, II, III, IV, V };

std::string to_string(TransformLabel label);
/// Throws std::invalid_argument for unknown names.
TransformLabel parse_label(const std::string& text);

/// A concrete rule instance: label, positions, and for Ib the split orientation.
struct RuleSite {
  TransformLabel label;
  std::size_t u = 0;
  std::optional<std::size_t> v;
  /// Ib only: emit (d_u - 2, 2) instead of (2, d_u - 2). This is the
  /// reverse-conjugate of the plain split, so it raises the energy by the
  /// same argument.
  bool mirrored = false;

  friend bool operator==(const RuleSite&, const RuleSite&) = default;
};

/// Precondition violation of a rewrite; what() carries the diagnostic.
class TransformError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

DeltaVector apply_Ia(const DeltaVector& d, std::size_t u);
DeltaVector apply_Ib(const DeltaVector& d, std::size_t u, bool mirrored = false);
DeltaVector apply_II(const DeltaVector& d, std::size_t u, std::size_t v);

struct CollapseResult {
  DeltaVector after;
  /// False only for p = 2 and d = (1,2,...,2,1), where the energy is unchanged.
  bool strict;
};
CollapseResult apply_III(const DeltaVector& d, std::size_t u, std::size_t v, const Natural& p);

DeltaVector apply_IV(const DeltaVector& d, std::size_t u, std::size_t v);
DeltaVector apply_V(const DeltaVector& d, std::size_t u);

/// Applies a site without energy bookkeeping.
DeltaVector apply_site(const DeltaVector& d, const RuleSite& site, const Natural& p);

/// Every site whose precondition holds, ordered by label (Ia < Ib < II < III
/// < IV < V), then by u, then by v. Ia is listed only at entries equal to
/// the maximum.
std::vector<RuleSite> applicable(const DeltaVector& d, const Natural& p);

struct TransformStep {
  RuleSite site;
  DeltaVector before;
  DeltaVector after;
  Natural energy_before;
  Natural energy_after;
  bool strict = true;
};

/// Applies a site and records both energies. Throws ConsistencyError if the
/// energy decreases, or stays equal outside the exceptional III case.
TransformStep apply(const DeltaVector& d, const RuleSite& site, const PrimePowerOrder& order);

struct Trace {
  PrimePowerOrder order;
  DeltaVector initial;
  std::vector<TransformStep> steps;
  DeltaVector terminal;

  /// after_i == before_{i+1}, initial/terminal match the ends, energies are
  /// non-decreasing.
  bool chained() const;
};

/// Applies the first applicable site until none remains. The terminal vector
/// lies in canonical_maximizer(order).
Trace normalize(const DeltaVector& d0, const PrimePowerOrder& order);

/// Applies the given sites in order; each must be applicable when reached.
Trace replay(const DeltaVector& d0, const PrimePowerOrder& order, std::span<const RuleSite> sites);

/// Delta vectors of the maximizing tuples: (2,...,2) for odd s (plus
/// (1,2,...,2,1) when p = 2); (2,...,2,1) and (1,2,...,2) for even s.
/// Empty for s = 1.
std::vector<DeltaVector> canonical_maximizer(const PrimePowerOrder& order);

/// (sum |d_j - 2|, #{d_j >= 3}, #{interior d_j = 1}); every rewrite strictly
/// decreases it lexicographically.
using TerminationMeasure = std::tuple<unsigned long, std::size_t, std::size_t>;
TerminationMeasure termination_measure(const DeltaVector& d);

}  // namespace icg
