#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "icg/model.hpp"
#include "oracles.hpp"

using namespace icg;

namespace {

const std::vector<unsigned> kWorkedTuple{0, 5, 6, 9, 12, 14, 15, 16, 22, 23, 24, 27, 29};
const std::vector<unsigned> kWorkedDelta{5, 1, 3, 3, 2, 1, 1, 6, 1, 1, 3, 2};

DivisorSet set_of(std::initializer_list<std::uint64_t> xs, std::uint64_t n) {
  std::vector<Natural> v;
  for (auto x : xs) v.emplace_back(x);
  return DivisorSet(std::move(v), Natural(n));
}

}  // namespace

TEST(PrimePowerOrder, ValidatesInputs) {
  const PrimePowerOrder o(Natural(3), 4);
  EXPECT_EQ(o.n(), Natural(81));
  EXPECT_THROW(PrimePowerOrder(Natural(4), 2), std::invalid_argument);
  EXPECT_THROW(PrimePowerOrder(Natural(2), 0), std::invalid_argument);
}

TEST(ExponentTuple, Invariants) {
  EXPECT_NO_THROW(ExponentTuple({3}, 5));
  EXPECT_THROW(ExponentTuple({}, 5), std::invalid_argument);
  EXPECT_THROW(ExponentTuple({0, 2, 2}, 5), std::invalid_argument);
  EXPECT_THROW(ExponentTuple({0, 5}, 5), std::invalid_argument);
  EXPECT_TRUE(AdmissibleTuple::is_admissible(ExponentTuple({0, 2, 4}, 5)));
  EXPECT_FALSE(AdmissibleTuple::is_admissible(ExponentTuple({1, 4}, 5)));
  EXPECT_FALSE(AdmissibleTuple::is_admissible(ExponentTuple({0, 3}, 5)));
  EXPECT_THROW(AdmissibleTuple({0}, 1), std::invalid_argument);
}

TEST(DeltaVector, Invariants) {
  EXPECT_THROW(DeltaVector({2, 0, 2}, 5), std::invalid_argument);
  EXPECT_THROW(DeltaVector({2, 3}, 5), std::invalid_argument);
  const DeltaVector d(kWorkedDelta, 30);
  EXPECT_EQ(d.r(), 13u);
  EXPECT_EQ(d.max_norm(), 6u);
  EXPECT_EQ(d.reversed().at(1), 2u);
}

TEST(Delta, KnownValues) {
  EXPECT_EQ(delta(AdmissibleTuple({0, 29}, 30)).entries(), std::vector<unsigned>{29});
  EXPECT_EQ(delta(AdmissibleTuple(kWorkedTuple, 30)).entries(), kWorkedDelta);
  EXPECT_EQ(delta(AdmissibleTuple({0, 2, 4}, 5)).entries(), (std::vector<unsigned>{2, 2}));
}

TEST(DeltaInverse, KnownValues) {
  EXPECT_EQ(delta_inverse(DeltaVector({29}, 30)).entries(), (std::vector<unsigned>{0, 29}));
  EXPECT_EQ(delta_inverse(DeltaVector(kWorkedDelta, 30)).entries(), kWorkedTuple);
  EXPECT_EQ(delta_inverse(DeltaVector({2, 2, 2, 2}, 9)).entries(), (std::vector<unsigned>{0, 2, 4, 6, 8}));
}

TEST(DivisorSetOf, KnownValues) {
  EXPECT_EQ(divisor_set_of(ExponentTuple({0}, 3), PrimePowerOrder(Natural(5), 3)), set_of({1}, 125));
  EXPECT_EQ(divisor_set_of(ExponentTuple({0, 2, 4}, 5), PrimePowerOrder(Natural(2), 5)), set_of({1, 4, 16}, 32));
  EXPECT_EQ(divisor_set_of(ExponentTuple({0, 1}, 2), PrimePowerOrder(Natural(2), 2)), set_of({1, 2}, 4));
  EXPECT_THROW(divisor_set_of(ExponentTuple({0, 1}, 2), PrimePowerOrder(Natural(2), 3)), std::invalid_argument);
}

TEST(DivisorSet, Invariants) {
  EXPECT_THROW(set_of({}, 8), std::invalid_argument);
  EXPECT_THROW(set_of({1, 8}, 8), std::invalid_argument);
  EXPECT_THROW(set_of({3}, 8), std::invalid_argument);
  const auto sorted = set_of({4, 1, 2}, 8);
  EXPECT_EQ(sorted.elements(), (std::vector<Natural>{1, 2, 4}));
  EXPECT_TRUE(sorted.contains(Natural(2)));
  EXPECT_FALSE(sorted.contains(Natural(3)));
}

TEST(ExponentsOf, InvertsDivisorSetOf) {
  const PrimePowerOrder o(Natural(3), 6);
  EXPECT_EQ(exponents_of(set_of({1, 9, 243}, 729), o).entries(), (std::vector<unsigned>{0, 2, 5}));
  EXPECT_THROW(exponents_of(set_of({1, 9}, 81), o), std::invalid_argument);
}

TEST(ReverseComplement, KnownValues) {
  EXPECT_EQ(reverse_complement(AdmissibleTuple({0, 2, 4}, 5)).entries(), (std::vector<unsigned>{0, 2, 4}));
  EXPECT_EQ(reverse_complement(AdmissibleTuple({0, 1, 3}, 4)).entries(), (std::vector<unsigned>{0, 2, 3}));
  for (unsigned s = 4; s <= 30; s += 2) {
    std::vector<unsigned> odd_start{0};
    for (unsigned x = 1; x <= s - 1; x += 2) odd_start.push_back(x);
    EXPECT_EQ(reverse_complement(AdmissibleTuple(odd_start, s)), equidistant_tuple(s)) << s;
  }
  EXPECT_EQ(reverse_complement(ExponentTuple({1, 2}, 6)).entries(), (std::vector<unsigned>{3, 4}));
}

TEST(Connectivity, KnownValues) {
  const PrimePowerOrder o8(Natural(2), 3);
  EXPECT_TRUE(is_connected(set_of({1, 4}, 8), o8));
  EXPECT_FALSE(is_connected(set_of({2, 4}, 8), o8));
  EXPECT_TRUE(is_connected(set_of({1}, 8), o8));
  EXPECT_TRUE(is_connected(set_of({15, 21, 35}, 105)));
  EXPECT_FALSE(is_connected(set_of({3, 15}, 105)));
}

TEST(EquidistantTuple, Shapes) {
  EXPECT_EQ(equidistant_tuple(5).entries(), (std::vector<unsigned>{0, 2, 4}));
  EXPECT_EQ(equidistant_tuple(6).entries(), (std::vector<unsigned>{0, 2, 4, 5}));
  EXPECT_EQ(equidistant_tuple(2).entries(), (std::vector<unsigned>{0, 1}));
  EXPECT_THROW(equidistant_tuple(1), std::invalid_argument);
}

TEST(TextNotation, PrintsAndParses) {
  EXPECT_EQ(to_string(ExponentTuple({0, 2, 4}, 5)), "(0,2,4)");
  EXPECT_EQ(to_string(DeltaVector({2, 2}, 5)), "(2,2)");
  EXPECT_EQ(to_string(set_of({1, 15, 21, 35}, 105)), "{1,15,21,35}");
  std::ostringstream os;
  os << DeltaVector({1, 2}, 4);
  EXPECT_EQ(os.str(), "(1,2)");
  EXPECT_EQ(parse_index_list("(0, 5,6)"), (std::vector<unsigned>{0, 5, 6}));
  EXPECT_EQ(parse_index_list("0,2,4"), (std::vector<unsigned>{0, 2, 4}));
  EXPECT_EQ(parse_natural_list("{1,15, 21,35}"), (std::vector<Natural>{1, 15, 21, 35}));
  EXPECT_THROW(parse_index_list("0,,2"), std::invalid_argument);
  EXPECT_THROW(parse_index_list("0,-2"), std::invalid_argument);
  EXPECT_THROW(parse_natural_list("x"), std::invalid_argument);
}

TEST(ModelProperties, DeltaRoundTrip) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned s = 2 + static_cast<unsigned>(rng() % 63);
    const AdmissibleTuple a(oracle::random_admissible(rng, s), s);
    const DeltaVector d = delta(a);
    ASSERT_EQ(delta_inverse(d), a);
    const DeltaVector d2(oracle::random_delta(rng, s), s);
    ASSERT_EQ(delta(delta_inverse(d2)), d2);
  }
}

TEST(ModelProperties, ReverseComplementIsInvolution) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned s = 2 + static_cast<unsigned>(rng() % 63);
    const AdmissibleTuple a(oracle::random_admissible(rng, s), s);
    ASSERT_EQ(reverse_complement(reverse_complement(a)), a);
    ASSERT_EQ(delta(reverse_complement(a)), delta(a).reversed());
  }
}
