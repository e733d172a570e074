#include "icg/transform.hpp"

#include <algorithm>

#include "icg/energy.hpp"

namespace icg {
namespace {

[[noreturn]] void reject(TransformLabel label, const DeltaVector& d, const std::string& why) {
  throw TransformError(to_string(label) + " not applicable to " + to_string(d) + ": " + why);
}

void check_position(TransformLabel label, const DeltaVector& d, std::size_t u) {
  if (u < 1 || u > d.size()) {
    reject(label, d, "position " + std::to_string(u) + " outside 1.." + std::to_string(d.size()));
  }
}

void check_pair(TransformLabel label, const DeltaVector& d, std::size_t u, std::size_t v) {
  check_position(label, d, u);
  check_position(label, d, v);
  if (u >= v) reject(label, d, "needs u < v");
  for (std::size_t j = u + 1; j < v; ++j) {
    if (d.at(j) != 2) reject(label, d, "entry d_" + std::to_string(j) + " between u and v is not 2");
  }
}

// Replaces entries u..v (1-based, inclusive) by `fill`.
DeltaVector splice(const DeltaVector& d, std::size_t u, std::size_t v, std::vector<unsigned> fill) {
  const auto& e = d.entries();
  std::vector<unsigned> out(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(u - 1));
  out.insert(out.end(), fill.begin(), fill.end());
  out.insert(out.end(), e.begin() + static_cast<std::ptrdiff_t>(v), e.end());
  return DeltaVector(std::move(out), d.s());
}

bool is_exceptional_collapse(const DeltaVector& d, std::size_t u, std::size_t v, const Natural& p) {
  return p == Natural(2) && u == 1 && v == d.size();
}

}  // namespace

std::string to_string(TransformLabel label) {
  switch (label) {
    case TransformLabel::Ia: return "Ia";
    case TransformLabel::Ib: return "Ib";
    case TransformLabel::II: return "II";
    case TransformLabel::III: return "III";
    case TransformLabel::IV: return "IV";
    case TransformLabel::V: return "V";
  }
  return "?";
}

TransformLabel parse_label(const std::string& text) {
  for (auto label : {TransformLabel::Ia, TransformLabel::Ib, TransformLabel::II, TransformLabel::III,
                     TransformLabel::IV, TransformLabel::V}) {
    if (to_string(label) == text) return label;
  }
  throw std::invalid_argument("unknown transformation label '" + text + "'");
}

DeltaVector apply_Ia(const DeltaVector& d, std::size_t u) {
  check_position(TransformLabel::Ia, d, u);
  const unsigned x = d.at(u);
  if (x < 4) reject(TransformLabel::Ia, d, "d_u = " + std::to_string(x) + " < 4");
  return splice(d, u, u, {2, x - 2});
}

DeltaVector apply_Ib(const DeltaVector& d, std::size_t u, bool mirrored) {
  check_position(TransformLabel::Ib, d, u);
  if (d.at(u) != 3 || d.max_norm() != 3) {
    reject(TransformLabel::Ib, d, "needs d_u = 3 = max entry");
  }
  const auto& e = d.entries();
  if (std::any_of(e.begin(), e.end(), [](unsigned x) { return x < 2; })) {
    reject(TransformLabel::Ib, d, "some entry is below 2");
  }
  return mirrored ? splice(d, u, u, {1, 2}) : splice(d, u, u, {2, 1});
}

DeltaVector apply_II(const DeltaVector& d, std::size_t u, std::size_t v) {
  check_pair(TransformLabel::II, d, u, v);
  const unsigned du = d.at(u);
  const unsigned dv = d.at(v);
  if (!((du == 1 && dv == 3) || (du == 3 && dv == 1))) {
    reject(TransformLabel::II, d, "(d_u, d_v) must be (1,3) or (3,1)");
  }
  std::vector<unsigned> fill(v - u + 1, 2);
  return splice(d, u, v, std::move(fill));
}

CollapseResult apply_III(const DeltaVector& d, std::size_t u, std::size_t v, const Natural& p) {
  check_pair(TransformLabel::III, d, u, v);
  if (d.at(u) != 1 || d.at(v) != 1) reject(TransformLabel::III, d, "needs d_u = d_v = 1");
  return {splice(d, u, v, std::vector<unsigned>(v - u, 2)), !is_exceptional_collapse(d, u, v, p)};
}

DeltaVector apply_IV(const DeltaVector& d, std::size_t u, std::size_t v) {
  check_pair(TransformLabel::IV, d, u, v);
  if (d.at(u) != 3 || d.at(v) != 3) reject(TransformLabel::IV, d, "needs d_u = d_v = 3");
  return splice(d, u, v, std::vector<unsigned>(v - u + 2, 2));
}

DeltaVector apply_V(const DeltaVector& d, std::size_t u) {
  check_position(TransformLabel::V, d, u);
  if (d.at(u) != 1) reject(TransformLabel::V, d, "d_u is not 1");
  if (u < 2 || u + 1 > d.size()) {
    reject(TransformLabel::V, d, "needs 2 <= u <= r-2");
  }
  for (std::size_t j = 1; j <= d.size(); ++j) {
    if (j != u && d.at(j) != 2) reject(TransformLabel::V, d, "entries other than d_u must be 2");
  }
  std::vector<unsigned> out(d.size(), 2);
  out.back() = 1;
  return DeltaVector(std::move(out), d.s());
}

DeltaVector apply_site(const DeltaVector& d, const RuleSite& site, const Natural& p) {
  auto need_v = [&] {
    if (!site.v) throw TransformError(to_string(site.label) + " needs a second position v");
    return *site.v;
  };
  switch (site.label) {
    case TransformLabel::Ia: return apply_Ia(d, site.u);
    case TransformLabel::Ib: return apply_Ib(d, site.u, site.mirrored);
    case TransformLabel::II: return apply_II(d, site.u, need_v());
    case TransformLabel::III: return apply_III(d, site.u, need_v(), p).after;
    case TransformLabel::IV: return apply_IV(d, site.u, need_v());
    case TransformLabel::V: return apply_V(d, site.u);
  }
  throw TransformError("unknown label");
}

std::vector<RuleSite> applicable(const DeltaVector& d, const Natural& /*p*/) {
  const auto& e = d.entries();
  const std::size_t n = e.size();
  const unsigned top = d.max_norm();
  const bool all_at_least_two = std::all_of(e.begin(), e.end(), [](unsigned x) { return x >= 2; });

  std::vector<RuleSite> ia, ib, ii, iii, iv, v;
  for (std::size_t u = 1; u <= n; ++u) {
    if (e[u - 1] == top && top >= 4) ia.push_back({TransformLabel::Ia, u, std::nullopt});
    if (e[u - 1] == 3 && top == 3 && all_at_least_two) ib.push_back({TransformLabel::Ib, u, std::nullopt});
  }
  // Pair rules only ever pair consecutive entries different from 2.
  std::vector<std::size_t> odd_positions;
  for (std::size_t j = 1; j <= n; ++j) {
    if (e[j - 1] != 2) odd_positions.push_back(j);
  }
  for (std::size_t k = 0; k + 1 < odd_positions.size(); ++k) {
    const std::size_t pu = odd_positions[k];
    const std::size_t pv = odd_positions[k + 1];
    const unsigned a = e[pu - 1];
    const unsigned b = e[pv - 1];
    if ((a == 1 && b == 3) || (a == 3 && b == 1)) ii.push_back({TransformLabel::II, pu, pv});
    if (a == 1 && b == 1) iii.push_back({TransformLabel::III, pu, pv});
    if (a == 3 && b == 3) iv.push_back({TransformLabel::IV, pu, pv});
  }
  if (odd_positions.size() == 1) {
    const std::size_t u = odd_positions.front();
    if (e[u - 1] == 1 && u >= 2 && u + 1 <= n) v.push_back({TransformLabel::V, u, std::nullopt});
  }

  std::vector<RuleSite> out;
  for (auto* group : {&ia, &ib, &ii, &iii, &iv, &v}) out.insert(out.end(), group->begin(), group->end());
  return out;
}

TransformStep apply(const DeltaVector& d, const RuleSite& site, const PrimePowerOrder& order) {
  if (d.s() != order.s()) throw std::invalid_argument("apply: delta vector context s differs from order");
  DeltaVector after = apply_site(d, site, order.p());
  Natural before_energy = energy_prime_power(order, delta_inverse(d));
  Natural after_energy = energy_prime_power(order, delta_inverse(after));

  const bool exceptional = site.label == TransformLabel::III &&
                           is_exceptional_collapse(d, site.u, *site.v, order.p());
  if (after_energy < before_energy) {
    throw ConsistencyError(to_string(site.label) + " lowered the energy of " + to_string(d));
  }
  if (exceptional != (after_energy == before_energy)) {
    throw ConsistencyError(to_string(site.label) + " on " + to_string(d) +
                           (exceptional ? " should preserve" : " should strictly raise") + " the energy");
  }
  return {site, d, std::move(after), std::move(before_energy), std::move(after_energy), !exceptional};
}

bool Trace::chained() const {
  const DeltaVector* cursor = &initial;
  for (const auto& step : steps) {
    if (!(step.before == *cursor) || step.energy_after < step.energy_before) return false;
    cursor = &step.after;
  }
  return *cursor == terminal;
}

Trace normalize(const DeltaVector& d0, const PrimePowerOrder& order) {
  Trace trace{order, d0, {}, d0};
  // Each step lowers the termination measure, whose first component is at
  // most s and the others at most s as well; 4s is a generous ceiling.
  const std::size_t ceiling = 4 * static_cast<std::size_t>(order.s()) + 4;
  while (true) {
    const auto sites = applicable(trace.terminal, order.p());
    if (sites.empty()) break;
    if (trace.steps.size() >= ceiling) {
      throw ConsistencyError("normalize: no terminus after " + std::to_string(ceiling) + " steps");
    }
    trace.steps.push_back(apply(trace.terminal, sites.front(), order));
    trace.terminal = trace.steps.back().after;
  }
  const auto canon = canonical_maximizer(order);
  if (std::find(canon.begin(), canon.end(), trace.terminal) == canon.end()) {
    throw ConsistencyError("normalize: terminal " + to_string(trace.terminal) + " is not canonical");
  }
  return trace;
}

Trace replay(const DeltaVector& d0, const PrimePowerOrder& order, std::span<const RuleSite> sites) {
  Trace trace{order, d0, {}, d0};
  for (const auto& site : sites) {
    trace.steps.push_back(apply(trace.terminal, site, order));
    trace.terminal = trace.steps.back().after;
  }
  return trace;
}

std::vector<DeltaVector> canonical_maximizer(const PrimePowerOrder& order) {
  const unsigned s = order.s();
  std::vector<DeltaVector> out;
  if (s == 1) return out;
  if (s % 2 == 1) {
    out.emplace_back(std::vector<unsigned>((s - 1) / 2, 2), s);
    if (order.p() == Natural(2)) {
      std::vector<unsigned> twin((s - 3) / 2 + 2, 2);
      twin.front() = 1;
      twin.back() = 1;
      out.emplace_back(std::move(twin), s);
    }
    return out;
  }
  std::vector<unsigned> tail(s / 2, 2);
  tail.back() = 1;
  std::vector<unsigned> head(tail.rbegin(), tail.rend());
  out.emplace_back(std::move(tail), s);
  if (!(DeltaVector(head, s) == out.front())) out.emplace_back(std::move(head), s);
  return out;
}

TerminationMeasure termination_measure(const DeltaVector& d) {
  unsigned long excess = 0;
  std::size_t large = 0;
  std::size_t interior_ones = 0;
  const auto& e = d.entries();
  for (std::size_t j = 0; j < e.size(); ++j) {
    excess += e[j] >= 2 ? e[j] - 2 : 2 - e[j];
    if (e[j] >= 3) ++large;
    if (e[j] == 1 && j > 0 && j + 1 < e.size()) ++interior_ones;
  }
  return {excess, large, interior_ones};
}

}  // namespace icg
