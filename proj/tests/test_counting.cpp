#include <gtest/gtest.h>

#include "beadlab/catmodel.hpp"
#include "beadlab/counting.hpp"
#include "oracles.hpp"

using namespace beadlab;

TEST(Binomial, Basics) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

TEST(CountClass, SmallTrees) {
  EXPECT_EQ(count_class(parse_tree("[[[]],[]]"), 1), 4);
  EXPECT_EQ(count_class(parse_tree("[[],[],[]]"), 1), 3);
  EXPECT_EQ(count_class(parse_tree("[[],[]]"), 0), 1);
  EXPECT_EQ(count_class_unrooted("((())())", 1), 4);
}

TEST(CountClass, RootIndependenceUpToSevenEdges) {
  for (int d = 0; d <= 2; ++d)
    for (int n = 1; n <= 7; ++n)
      for (const auto& t : enumerate_ordered_trees(n)) {
        const BigInt first = count_class(t, d);
        for (int v = 0; v < t.size(); ++v) EXPECT_EQ(count_class(reroot(t, v), d), first);
      }
}

// Values frozen from the formula and from the enumeration oracle.
struct Frozen {
  int n, d;
  int rfba_formula, rcba_formula, rfba_enumerated, rcba_enumerated;
};

const std::vector<Frozen> kFrozen = {
    {2, 0, 1, 8, 1, 4},     {2, 1, 2, 28, 1, 14},     {2, 2, 3, 60, 2, 30},
    {3, 0, 2, 72, 2, 30},   {3, 1, 7, 420, 4, 180},   {4, 0, 3, 576, 3, 336},
    {4, 1, 18, 5616, 11, 3432}};

TEST(Totals, FrozenFormulaAndEnumeration) {
  for (const auto& f : kFrozen) {
    const auto r = totals(make_params(f.n, f.d), true);
    EXPECT_EQ(r.rfba_total, f.rfba_formula) << f.n << "," << f.d;
    EXPECT_EQ(r.rcba_total, f.rcba_formula) << f.n << "," << f.d;
    EXPECT_EQ(*r.rfba_oracle, f.rfba_enumerated) << f.n << "," << f.d;
    EXPECT_EQ(*r.rcba_oracle, f.rcba_enumerated) << f.n << "," << f.d;
  }
}

TEST(Totals, SymmetryAdjustedMatchesEnumeration) {
  for (const auto& f : kFrozen) {
    const auto p = make_params(f.n, f.d);
    const auto r = totals(p, true);
    EXPECT_EQ(r.rcba_symmetry_adjusted, *r.rcba_oracle) << f.n << "," << f.d;
    const BigInt colorings = factorial(p.n) * p.P;
    for (const auto& [code, c] : r.classes) EXPECT_EQ(colorings * c.formula % c.automorphisms, 0);
  }
}

TEST(Totals, ColoredIsFactorialTimesUncolored) {
  for (const auto& f : kFrozen) {
    const auto p = make_params(f.n, f.d);
    std::size_t sets = 0;
    for_each_reduced_set(p, [&](const std::vector<Entry>&) { ++sets; });
    EXPECT_EQ(enumerate_reduced_colored(p).size(), sets * static_cast<std::size_t>(factorial(p.n)));
  }
}

TEST(Totals, ColoredMatchesOrthogonalTuples) {
  for (const auto& f : kFrozen) {
    const auto p = make_params(f.n, f.d);
    EXPECT_EQ(enumerate_orthogonal_tuples(p).size(), static_cast<std::size_t>(f.rcba_enumerated));
  }
}

TEST(Totals, PerClassFrozen) {
  const auto r31 = totals(make_params(3, 1), true);
  EXPECT_EQ(r31.classes.at("((())())").formula, 4);
  EXPECT_EQ(*r31.classes.at("((())())").enumerated, 3);
  EXPECT_EQ(r31.classes.at("((())())").automorphisms, 2);
  EXPECT_EQ(r31.classes.at("(()()())").formula, 3);
  EXPECT_EQ(*r31.classes.at("(()()())").enumerated, 1);
  EXPECT_EQ(r31.classes.at("(()()())").automorphisms, 3);

  const auto r41 = totals(make_params(4, 1), true);
  EXPECT_EQ(r41.classes.at("((())(()))").formula, 8);
  EXPECT_EQ(*r41.classes.at("((())(()))").enumerated, 4);
  EXPECT_EQ(r41.classes.at("((())()())").formula, 6);
  EXPECT_EQ(*r41.classes.at("((())()())").enumerated, 6);
  EXPECT_EQ(r41.classes.at("(()()()())").formula, 4);
  EXPECT_EQ(*r41.classes.at("(()()()())").enumerated, 1);
}

TEST(Totals, ClassesWithoutSymmetryAgree) {
  for (const auto& f : kFrozen) {
    const auto r = totals(make_params(f.n, f.d), true);
    for (const auto& [code, c] : r.classes)
      if (c.automorphisms == 1) {
        EXPECT_EQ(c.enumerated.value_or(0), c.formula) << code;
      }
  }
}

TEST(Totals, ClassOracleFromPlainCombinations) {
  for (const auto& f : kFrozen) {
    const auto p = make_params(f.n, f.d);
    std::map<std::string, BigInt> by_class;
    std::set<std::vector<std::pair<int, int>>> seen;
    for (const auto& s : oracle::reduced_sets(p)) {
      const auto key = oracle::rotation_key(p, s);
      if (!seen.insert(key).second) continue;
      std::vector<Bead> beads;
      for (const auto& [l, i] : key) beads.push_back({l, i});
      by_class[unrooted_code(associated_tree(p, beads))] += 1;
    }
    const auto r = totals(p, true);
    for (const auto& [code, c] : r.classes) EXPECT_EQ(c.enumerated.value_or(0), by_class[code]);
  }
}

TEST(Totals, TwoBeadFreeCountIsFloorHalfPlusOne) {
  for (int d = 0; d <= 10; ++d) {
    const auto r = totals(make_params(2, d), true);
    EXPECT_EQ(*r.rfba_oracle, d / 2 + 1) << d;
    EXPECT_EQ(r.rfba_total, d + 1) << d;
  }
}
