#include <gtest/gtest.h>

#include <random>

#include "icg/energy.hpp"
#include "icg/transform.hpp"
#include "oracles.hpp"

using namespace icg;

namespace {

using V = std::vector<unsigned>;

DeltaVector dv(V entries) {
  unsigned sum = 1;
  for (auto x : entries) sum += x;
  return DeltaVector(std::move(entries), sum);
}

V twos(std::size_t count, V tail = {}) {
  V out(count, 2);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

Natural energy_of(const DeltaVector& d, std::uint64_t p) {
  return energy_prime_power(PrimePowerOrder(Natural(p), d.s()), delta_inverse(d));
}

const V kRow0{5, 1, 3, 3, 2, 1, 1, 6, 1, 1, 3, 2};

}  // namespace

TEST(Labels, RoundTrip) {
  for (auto l : {TransformLabel::Ia, TransformLabel::Ib, TransformLabel::II, TransformLabel::III,
                 TransformLabel::IV, TransformLabel::V}) {
    EXPECT_EQ(parse_label(to_string(l)), l);
  }
  EXPECT_THROW(parse_label("VI"), std::invalid_argument);
}

TEST(ApplyIa, KnownValues) {
  EXPECT_EQ(apply_Ia(dv(kRow0), 1).entries(), (V{2, 3, 1, 3, 3, 2, 1, 1, 6, 1, 1, 3, 2}));
  EXPECT_EQ(apply_Ia(dv({2, 3, 1, 3, 3, 2, 1, 1, 6, 1, 1, 3, 2}), 9).entries(),
            (V{2, 3, 1, 3, 3, 2, 1, 1, 2, 4, 1, 1, 3, 2}));
  const auto d = dv({4});
  EXPECT_EQ(apply_Ia(d, 1).entries(), (V{2, 2}));
  EXPECT_GT(energy_of(apply_Ia(d, 1), 2), energy_of(d, 2));
  EXPECT_THROW(apply_Ia(dv({3, 2}), 1), TransformError);
  EXPECT_THROW(apply_Ia(dv({4}), 2), TransformError);
  EXPECT_THROW(apply_Ia(dv({4}), 0), TransformError);
}

TEST(ApplyIb, KnownValues) {
  EXPECT_EQ(apply_Ib(dv({2, 2, 2, 3}), 4).entries(), (V{2, 2, 2, 2, 1}));
  const auto d = dv({3, 2});
  EXPECT_EQ(apply_Ib(d, 1).entries(), (V{2, 1, 2}));
  EXPECT_GT(energy_of(apply_Ib(d, 1), 3), energy_of(d, 3));
  EXPECT_EQ(apply_Ib(dv({3}), 1).entries(), (V{2, 1}));
  EXPECT_EQ(apply_Ib(dv({2, 3, 2}), 2, true).entries(), (V{2, 1, 2, 2}));
  EXPECT_THROW(apply_Ib(dv({3, 1}), 1), TransformError);
  EXPECT_THROW(apply_Ib(dv({3, 4}), 1), TransformError);
  EXPECT_THROW(apply_Ib(dv({2, 3}), 1), TransformError);
}

TEST(ApplyII, KnownValues) {
  EXPECT_EQ(apply_II(dv({2, 3, 1, 3, 3, 2, 1, 2, 2, 2, 2, 1, 3, 2}), 3, 4).entries(),
            (V{2, 3, 2, 2, 3, 2, 1, 2, 2, 2, 2, 1, 3, 2}));
  const auto d = dv({1, 3});
  EXPECT_EQ(apply_II(d, 1, 2).entries(), (V{2, 2}));
  EXPECT_GT(energy_of(apply_II(d, 1, 2), 5), energy_of(d, 5));
  EXPECT_EQ(apply_II(dv({3, 2, 1}), 1, 3).entries(), (V{2, 2, 2}));
  EXPECT_THROW(apply_II(dv({3, 3, 1}), 1, 3), TransformError);
  EXPECT_THROW(apply_II(dv({1, 1}), 1, 2), TransformError);
  EXPECT_THROW(apply_II(dv({1, 3}), 2, 1), TransformError);
}

TEST(ApplyIII, KnownValues) {
  const auto r = apply_III(dv({2, 3, 1, 3, 3, 2, 1, 1, 2, 2, 2, 1, 1, 3, 2}), 8, 12, Natural(2));
  EXPECT_EQ(r.after.entries(), (V{2, 3, 1, 3, 3, 2, 1, 2, 2, 2, 2, 1, 3, 2}));
  EXPECT_TRUE(r.strict);

  const auto ex = dv({1, 2, 2, 1});
  const auto e2 = apply_III(ex, 1, 4, Natural(2));
  EXPECT_EQ(e2.after.entries(), (V{2, 2, 2}));
  EXPECT_FALSE(e2.strict);
  EXPECT_EQ(energy_of(e2.after, 2), energy_of(ex, 2));
  EXPECT_TRUE(apply_III(ex, 1, 4, Natural(3)).strict);

  const auto small = apply_III(dv({1, 1}), 1, 2, Natural(3));
  EXPECT_EQ(small.after.entries(), V{2});
  EXPECT_TRUE(small.strict);
  EXPECT_GT(energy_of(small.after, 3), energy_of(dv({1, 1}), 3));
  EXPECT_THROW(apply_III(dv({1, 3, 1}), 1, 3, Natural(2)), TransformError);
}

TEST(ApplyIV, KnownValues) {
  const auto after = apply_IV(dv({2, 3, 2, 2, 3, 2, 2, 2, 2, 2, 2, 3, 2}), 5, 12);
  EXPECT_EQ(after.entries(), (V{2, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(after.size(), 14u);
  EXPECT_EQ(apply_IV(dv({3, 3}), 1, 2).entries(), (V{2, 2, 2}));
  EXPECT_EQ(apply_IV(dv({3, 2, 3}), 1, 3).entries(), (V{2, 2, 2, 2}));
  EXPECT_GT(energy_of(dv({2, 2, 2}), 7), energy_of(dv({3, 3}), 7));
  EXPECT_THROW(apply_IV(dv({3, 1, 3}), 1, 3), TransformError);
}

TEST(ApplyV, KnownValues) {
  V row8 = twos(15);
  row8[1] = 1;
  EXPECT_EQ(apply_V(DeltaVector(row8, 30), 2).entries(), twos(14, {1}));
  EXPECT_EQ(apply_V(dv({2, 1, 2}), 2).entries(), (V{2, 2, 1}));
  EXPECT_EQ(apply_V(dv({2, 2, 1, 2}), 3).entries(), (V{2, 2, 2, 1}));
  EXPECT_GT(energy_of(dv({2, 2, 1}), 5), energy_of(dv({2, 1, 2}), 5));
  EXPECT_THROW(apply_V(dv({1, 2, 2}), 1), TransformError);
  EXPECT_THROW(apply_V(dv({2, 2, 1}), 3), TransformError);
  EXPECT_THROW(apply_V(dv({2, 1, 3}), 2), TransformError);
}

TEST(Applicable, KnownValues) {
  EXPECT_TRUE(applicable(dv(twos(6)), Natural(3)).empty());
  EXPECT_TRUE(applicable(dv(twos(6, {1})), Natural(3)).empty());
  const auto sites = applicable(dv(kRow0), Natural(2));
  ASSERT_FALSE(sites.empty());
  EXPECT_EQ(sites.front(), (RuleSite{TransformLabel::Ia, 8, std::nullopt}));
  for (std::size_t i = 1; i < sites.size(); ++i) {
    const auto key = [](const RuleSite& s) { return std::tuple(s.label, s.u, s.v.value_or(0)); };
    EXPECT_LT(key(sites[i - 1]), key(sites[i]));
  }
  const auto pairs = applicable(dv({1, 2, 3, 1, 1, 3, 3}), Natural(5));
  EXPECT_EQ(pairs, (std::vector<RuleSite>{{TransformLabel::II, 1, 3},
                                          {TransformLabel::II, 3, 4},
                                          {TransformLabel::II, 5, 6},
                                          {TransformLabel::III, 4, 5},
                                          {TransformLabel::IV, 6, 7}}));
  EXPECT_EQ(applicable(dv({2, 1, 2, 2}), Natural(2)), (std::vector<RuleSite>{{TransformLabel::V, 2}}));
}

TEST(Apply, RecordsEnergiesAndRejectsBadSites) {
  const PrimePowerOrder o(Natural(2), 30);
  const auto step = apply(dv(kRow0), {TransformLabel::Ia, 1}, o);
  EXPECT_EQ(step.energy_before, Natural::parse("9167691382"));
  EXPECT_EQ(step.energy_after, Natural::parse("9761773390"));
  EXPECT_TRUE(step.strict);
  EXPECT_THROW(apply(dv(kRow0), {TransformLabel::V, 2}, o), TransformError);
  EXPECT_THROW(apply(dv({2, 2}), {TransformLabel::Ia, 1}, o), std::invalid_argument);
  const auto eq = apply(dv({1, 2, 2, 1}), {TransformLabel::III, 1, 4}, PrimePowerOrder(Natural(2), 7));
  EXPECT_FALSE(eq.strict);
  EXPECT_EQ(eq.energy_before, eq.energy_after);
}

TEST(CanonicalMaximizer, KnownValues) {
  EXPECT_EQ(canonical_maximizer(PrimePowerOrder(Natural(3), 5)), std::vector<DeltaVector>{dv({2, 2})});
  EXPECT_EQ(canonical_maximizer(PrimePowerOrder(Natural(2), 5)),
            (std::vector<DeltaVector>{dv({2, 2}), dv({1, 2, 1})}));
  EXPECT_EQ(canonical_maximizer(PrimePowerOrder(Natural(5), 6)),
            (std::vector<DeltaVector>{dv({2, 2, 1}), dv({1, 2, 2})}));
  EXPECT_EQ(canonical_maximizer(PrimePowerOrder(Natural(3), 2)), std::vector<DeltaVector>{dv({1})});
  EXPECT_EQ(canonical_maximizer(PrimePowerOrder(Natural(2), 3)), (std::vector<DeltaVector>{dv({2}), dv({1, 1})}));
  EXPECT_TRUE(canonical_maximizer(PrimePowerOrder(Natural(7), 1)).empty());
}

TEST(Normalize, WorkedVectorReachesTheMaximum) {
  for (std::uint64_t p : {2, 3}) {
    const PrimePowerOrder o(Natural(p), 30);
    const Trace t = normalize(dv(kRow0), o);
    EXPECT_TRUE(t.chained());
    EXPECT_EQ(t.terminal.entries(), twos(14, {1}));
    EXPECT_EQ(t.steps.back().energy_after, emax_closed(o).value);
    EXPECT_EQ(t.steps.front().energy_before, energy_of(dv(kRow0), p));
  }
}

TEST(Normalize, TerminalVectorIsUntouched) {
  const Trace t = normalize(dv({2, 2}), PrimePowerOrder(Natural(5), 5));
  EXPECT_TRUE(t.steps.empty());
  EXPECT_EQ(t.terminal, dv({2, 2}));
  EXPECT_TRUE(t.chained());
}

TEST(Normalize, ConvergesFromRandomStarts) {
  std::mt19937_64 rng(424242);
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned s = 2; s <= 16; ++s) {
      const PrimePowerOrder o(Natural(p), s);
      const auto canon = canonical_maximizer(o);
      const Natural emax = emax_closed(o).value;
      for (int trial = 0; trial < 1000; ++trial) {
        const DeltaVector d0(oracle::random_delta(rng, s), s);
        const Trace t = normalize(d0, o);
        ASSERT_TRUE(t.chained());
        ASSERT_LE(t.steps.size(), 4u * s);
        ASSERT_NE(std::find(canon.begin(), canon.end(), t.terminal), canon.end()) << to_string(d0);
        ASSERT_EQ(energy_of(t.terminal, p), emax);
        for (const auto& step : t.steps) {
          ASSERT_LT(termination_measure(step.after), termination_measure(step.before)) << to_string(step.before);
        }
      }
    }
  }
}

TEST(Replay, FollowsGivenSites) {
  const PrimePowerOrder o(Natural(2), 7);
  const std::vector<RuleSite> sites{{TransformLabel::II, 1, 2}};
  const Trace t = replay(dv({1, 3, 2}), o, sites);
  EXPECT_EQ(t.terminal, dv({2, 2, 2}));
  EXPECT_TRUE(t.chained());
  const std::vector<RuleSite> bad{{TransformLabel::IV, 1, 2}};
  EXPECT_THROW(replay(dv({1, 3, 2}), o, bad), TransformError);
}

TEST(TransformSoundness, RandomSitesRaiseEnergy) {
  std::mt19937_64 rng(1234);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  int applied = 0;
  while (applied < 2000) {
    const std::uint64_t p = primes[rng() % 6];
    const unsigned s = 2 + static_cast<unsigned>(rng() % 23);
    const DeltaVector d(oracle::random_delta(rng, s), s);
    const auto sites = applicable(d, Natural(p));
    if (sites.empty()) continue;
    const auto& site = sites[rng() % sites.size()];
    const auto step = apply(d, site, PrimePowerOrder(Natural(p), s));
    const Natural direct_before = energy_of(d, p);
    const Natural direct_after = energy_of(step.after, p);
    ASSERT_EQ(step.energy_before, direct_before);
    ASSERT_EQ(step.energy_after, direct_after);
    ASSERT_EQ(step.after.s(), s);
    if (step.strict) {
      ASSERT_GT(direct_after, direct_before);
    } else {
      ASSERT_EQ(p, 2u);
      ASSERT_EQ(site.label, TransformLabel::III);
      ASSERT_EQ(direct_after, direct_before);
    }
    ++applied;
  }
}
