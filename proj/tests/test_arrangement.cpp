#include <gtest/gtest.h>

#include <set>

#include "beadlab/arrangement.hpp"
#include "oracles.hpp"

using namespace beadlab;

namespace {

ColoredArrangement figure_one() {
  const auto p = make_params(3, 1);
  return validate(p, {{2, 7}, {1, 5}, {1, 0}});
}

std::vector<std::pair<int, int>> bead_key(const std::vector<Bead>& s) {
  std::vector<std::pair<int, int>> key;
  for (const auto& b : s) key.push_back({b.l, b.i});
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<std::pair<int, int>> entry_key(const Params& p, const std::vector<Entry>& s) {
  std::vector<std::pair<int, int>> key;
  for (const auto& e : s) {
    if (const auto* b = std::get_if<Bead>(&e))
      key.push_back({b->l, b->i});
    else
      key.push_back({p.circlet_type(), std::get<Circlet>(e).i});
  }
  std::sort(key.begin(), key.end());
  return key;
}

const std::vector<std::pair<int, int>> kGrid = {{2, 0}, {2, 1}, {2, 2}, {3, 0},
                                                {3, 1}, {3, 2}, {4, 0}, {4, 1}};

}  // namespace

TEST(Validate, AcceptsFigureOne) {
  EXPECT_NO_THROW(figure_one());
  EXPECT_NO_THROW(validate(make_params(3, 1), {{2, 7}, {1, 6}, {1, 0}}));
}

TEST(Validate, Errors) {
  const auto p = make_params(3, 1);
  try {
    validate(p, {{2, 7}, {1, 7}, {1, 0}});
    FAIL() << "expected an overlap";
  } catch (const OverlapError& e) {
    EXPECT_EQ(e.first(), 0u);
    EXPECT_EQ(e.second(), 1u);
  }
  try {
    validate(p, {{2, 7}, {1, 5}});
    FAIL() << "expected a length error";
  } catch (const LengthError& e) {
    EXPECT_EQ(e.expected(), 3u);
    EXPECT_EQ(e.got(), 2u);
  }
  EXPECT_THROW(validate(p, {{2, 7}, {1, 5}, {4, 0}}), DomainError);
}

TEST(Validate, Reduced) {
  const auto p = make_params(3, 1);
  EXPECT_NO_THROW(validate_reduced(p, {Circlet{2}, Bead{1, 5}, Bead{1, 0}}));
  EXPECT_THROW(validate_reduced(p, {Circlet{7}, Bead{1, 5}, Bead{1, 0}}), DomainError);
  EXPECT_THROW(validate_reduced(p, {Bead{2, 7}, Bead{1, 5}, Bead{1, 0}}), DomainError);
  EXPECT_THROW(validate_reduced(p, {Circlet{2}, Bead{1, 7}, Bead{1, 0}}), OverlapError);
  EXPECT_THROW(validate_reduced(make_params(4, 1), {Circlet{0}, Bead{1, 5}, Bead{1, 0}, Bead{1, 9}}),
               DomainError);
}

TEST(Height, FigureOne) {
  const auto a = figure_one();
  EXPECT_EQ(height(a, 0), 1);
  EXPECT_EQ(height(a, 1), 2);
  EXPECT_EQ(height(a, 2), 1);
  EXPECT_EQ(height(a, Bead{1, 5}), 2);
  EXPECT_THROW(height(a, Bead{1, 6}), DomainError);
}

TEST(Tree, FigureOne) {
  const auto t = associated_tree(figure_one());
  EXPECT_EQ(rooted_code(t), "((())())");
  EXPECT_EQ(weight(t, 0), 2);
  EXPECT_EQ(depth(t, 1), 2);
}

TEST(Tree, DepthIsHeightAndWeightIsType) {
  for (const auto& [n, d] : kGrid) {
    const auto p = make_params(n, d);
    for_each_bead_set(p, [&](const std::vector<Bead>& s) {
      const ColoredArrangement a{p, s};
      const auto t = associated_tree(a);
      const auto w = weights(t);
      for (std::size_t k = 0; k < s.size(); ++k) {
        EXPECT_EQ(depth(t, static_cast<int>(k)), height(a, k));
        EXPECT_EQ(w[k], s[k].l);
      }
    });
  }
}

TEST(Reduce, FigureThree) {
  const auto r = reduce(figure_one());
  const std::vector<Entry> want{Circlet{2}, Bead{1, 5}, Bead{1, 0}};
  EXPECT_EQ(r.entries, want);
}

TEST(Reduce, BalancedTreeAndCircletRule) {
  for (const auto& [n, d] : kGrid) {
    const auto p = make_params(n, d);
    for_each_bead_set(p, [&](const std::vector<Bead>& s) {
      const auto r = reduce(ColoredArrangement{p, s});
      EXPECT_NO_THROW(validate_reduced(p, r.entries));
      const auto t = associated_tree(r);
      EXPECT_TRUE(is_balanced(t));
      int circlets = 0;
      for (const auto& e : r.entries) circlets += std::holds_alternative<Circlet>(e);
      EXPECT_EQ(circlets == 1, balancing_roots(t).size() == 2);
    });
  }
}

TEST(Rebalance, SwapsBeadForPartner) {
  const auto a = figure_one();
  const auto b = rebalance(a, 0);
  EXPECT_EQ(b[0], (Bead{2, 2}));
  EXPECT_EQ(b[1], a[1]);
  EXPECT_EQ(rebalance(a, Bead{2, 7}), b);
  EXPECT_THROW(rebalance(a, 1), DomainError);
}

TEST(Rebalance, TreeIsRerootedAtTheBead) {
  for (const auto& [n, d] : kGrid) {
    const auto p = make_params(n, d);
    for_each_bead_set(p, [&](const std::vector<Bead>& s) {
      const ColoredArrangement a{p, s};
      const auto t = associated_tree(a);
      for (int v : t.children[t.root]) {
        const auto b = rebalance(a, static_cast<std::size_t>(v));
        EXPECT_EQ(rooted_code(associated_tree(b)), rooted_code(rebalance_root(t, t.root, v)));
      }
    });
  }
}

TEST(Enumerate, MatchesCombinationOracle) {
  for (const auto& [n, d] : kGrid) {
    const auto p = make_params(n, d);
    std::set<std::vector<std::pair<int, int>>> got, want;
    for_each_bead_set(p, [&](const std::vector<Bead>& s) { got.insert(bead_key(s)); });
    for (const auto& s : oracle::bead_sets(p, p.n)) want.insert(bead_key(s));
    EXPECT_EQ(got, want) << n << "," << d;
  }
}

TEST(Enumerate, ColoredSizes) {
  EXPECT_EQ(enumerate_colored(make_params(2, 0)).size(), 12u);
  EXPECT_EQ(enumerate_colored(make_params(2, 1)).size(), 42u);
  EXPECT_EQ(enumerate_colored(make_params(3, 0)).size(), 120u);
  EXPECT_EQ(enumerate_colored(make_params(3, 1)).size(), 720u);
  EXPECT_EQ(enumerate_colored(make_params(4, 1)).size(), 17160u);
}

TEST(Enumerate, ReducedMatchesOracle) {
  for (const auto& [n, d] : kGrid) {
    const auto p = make_params(n, d);
    std::set<std::vector<std::pair<int, int>>> got;
    for_each_reduced_set(p, [&](const std::vector<Entry>& s) { got.insert(entry_key(p, s)); });
    EXPECT_EQ(got, oracle::reduced_sets(p)) << n << "," << d;
  }
}

TEST(Enumerate, FreeReducedMatchesRotationOracle) {
  for (const auto& [n, d] : kGrid) {
    const auto p = make_params(n, d);
    std::set<std::vector<std::pair<int, int>>> orbits;
    for (const auto& s : oracle::reduced_sets(p)) orbits.insert(oracle::rotation_key(p, s));
    EXPECT_EQ(free_reduced_arrangements(p).size(), orbits.size()) << n << "," << d;
  }
}

TEST(Enumerate, FrozenFreeReducedCounts) {
  const std::vector<std::tuple<int, int, std::size_t>> frozen = {
      {2, 0, 1}, {2, 1, 1}, {2, 2, 2}, {2, 3, 2}, {2, 4, 3},
      {3, 0, 2}, {3, 1, 4}, {4, 0, 3}, {4, 1, 11}};
  for (const auto& [n, d, count] : frozen)
    EXPECT_EQ(free_reduced_arrangements(make_params(n, d)).size(), count) << n << "," << d;
}

TEST(Enumerate, CapIsEnforced) {
  EXPECT_THROW(enumerate_colored(make_params(3, 1), 10), CapExceeded);
}

TEST(Rotation, PreservesClass) {
  for (const auto& [n, d] : kGrid) {
    const auto p = make_params(n, d);
    for_each_bead_set(p, [&](const std::vector<Bead>& s) {
      const ColoredArrangement a{p, s};
      const auto code = rooted_code(associated_tree(a));
      for (int k = 1; k < p.P; ++k) EXPECT_EQ(rooted_code(associated_tree(rotate(a, k))), code);
    });
  }
}

TEST(Justified, DegreeZeroAndBound) {
  for (const auto& [n, d] : kGrid) {
    const auto p = make_params(n, d);
    for_each_bead_set(p, [&](const std::vector<Bead>& s) {
      const ColoredArrangement a{p, s};
      if (d == 0) {
        EXPECT_TRUE(is_right_justified(a));
      } else {
        EXPECT_FALSE(unjustified(a).empty());
      }
    });
  }
}

TEST(StandardForm, OrdersByDescendingEndpoint) {
  const auto p = make_params(3, 1);
  const auto a = validate(p, {{1, 0}, {1, 7}, {1, 4}});
  EXPECT_EQ(unjustified(a).size(), 1u);
  const auto [s, sigma] = to_standard_form(a);
  EXPECT_TRUE(is_standard_form(s));
  EXPECT_EQ(permute(a, sigma), s);
}

TEST(StandardForm, RejectsUnjustified) {
  EXPECT_THROW(to_standard_form(figure_one()), DomainError);
}

TEST(StandardForm, DegreeZeroUsesDesignatedBead) {
  const auto p = make_params(2, 0);
  const auto a = validate(p, {{1, 3}, {1, 1}});
  ASSERT_TRUE(unjustified(a).empty());
  EXPECT_EQ(default_first_bead(a), 1u);
  EXPECT_EQ(to_standard_form(a).first[0], (Bead{1, 1}));
  EXPECT_EQ(to_standard_form(a, 0).first[0], (Bead{1, 3}));
}
