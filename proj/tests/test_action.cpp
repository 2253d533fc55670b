#include <gtest/gtest.h>

#include <random>

#include "beadlab/action.hpp"
#include "beadlab/catmodel.hpp"

using namespace beadlab;

namespace {

std::vector<std::vector<int>> proper_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned m = 0; m + 1 < (1u << n); ++m) {
    std::vector<int> s;
    for (int k = 0; k < n; ++k)
      if (m >> k & 1u) s.push_back(k);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Action, FigureEight) {
  const auto p = make_params(5, 1);
  const auto a = validate(p, {{5, 0}, {1, 5}, {2, 11}, {1, 10}, {1, 15}});
  const auto res = act_logged(a, Subset{{0, 1, 3, 4}});
  EXPECT_EQ(res.arrangement, validate(p, {{5, 0}, {1, 5}, {2, 12}, {1, 10}, {1, 15}}));
  std::vector<CollisionKind> kinds;
  for (const auto& c : res.log) {
    kinds.push_back(c.kind);
    EXPECT_EQ(c.side, Side::Left);
    EXPECT_TRUE(c.adjacency_holds);
  }
  EXPECT_EQ(kinds, (std::vector<CollisionKind>{CollisionKind::I, CollisionKind::III,
                                               CollisionKind::II, CollisionKind::III}));
  EXPECT_EQ(act(res.arrangement, SubsetInverse{{0, 1, 3, 4}}), a);
}

TEST(Action, EmptySetIsRotationWithClearance) {
  const auto p = make_params(3, 1);
  const auto a = validate(p, {{1, 0}, {1, 7}, {1, 4}});
  const auto res = act_logged(a, Subset{{}});
  EXPECT_TRUE(res.log.empty());
  EXPECT_EQ(res.arrangement, rotate(a, -1));
}

TEST(Action, RejectsImproperSubset) {
  const auto p = make_params(2, 1);
  const auto a = simples(p);
  EXPECT_THROW(act(a, Subset{{0, 1}}), DomainError);
  EXPECT_THROW(act(a, Subset{{2}}), DomainError);
}

TEST(Action, PermutationRecolors) {
  const auto p = make_params(3, 1);
  const auto a = simples(p);
  const auto b = act(a, Permutation{{2, 0, 1}});
  EXPECT_EQ(b[0], a[2]);
  EXPECT_EQ(b[1], a[0]);
  EXPECT_EQ(act(b, inverse(Generator{Permutation{{2, 0, 1}}})), a);
}

TEST(Action, InverseWord) {
  const auto p = make_params(3, 1);
  const GroupWord w{Subset{{0}}, Permutation{{1, 2, 0}}, SubsetInverse{{2}}, Subset{{}}};
  const auto a = simples(p);
  EXPECT_EQ(act_word(act_word(a, w), inverse(w)), a);
}

TEST(Action, ExhaustiveInvertibilityAndAdjacency) {
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 0}, {3, 1}}) {
    const auto p = make_params(n, d);
    for (const auto& a : enumerate_colored(p))
      for (const auto& s : proper_subsets(n)) {
        const auto fwd = act_logged(a, Subset{s});
        EXPECT_NO_THROW(validate(p, fwd.arrangement.beads));
        EXPECT_EQ(act(fwd.arrangement, SubsetInverse{s}), a);
        EXPECT_EQ(act(act(a, SubsetInverse{s}), Subset{s}), a);
        for (const auto& c : fwd.log) EXPECT_TRUE(c.adjacency_holds);
        EXPECT_TRUE(hom_vanishing_holds(fwd.arrangement, Subset{s}));
      }
  }
}

TEST(Action, PassOrderDoesNotMatterForRandomSchedules) {
  std::mt19937 rng(7);
  const auto p = make_params(4, 1);
  const auto all = enumerate_colored(p);
  const auto subsets = proper_subsets(p.n);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& a = all[rng() % all.size()];
    const auto& s = subsets[rng() % subsets.size()];
    std::vector<int> schedule(p.n);
    for (int k = 0; k < p.n; ++k) schedule[k] = k;
    std::shuffle(schedule.begin(), schedule.end(), rng);
    EXPECT_EQ(act_logged(a, Subset{s}, &schedule).arrangement, act(a, Subset{s}));
  }
}

TEST(Action, RigidMovesPreserveClass) {
  const auto p = make_params(3, 1);
  for (const auto& a : enumerate_colored(p))
    for (const auto& s : proper_subsets(p.n)) {
      const Generator g = SubsetInverse{s};
      if (!is_rigid(a, g)) continue;
      EXPECT_EQ(rooted_code(associated_tree(act(a, g))), rooted_code(associated_tree(a)));
    }
}

TEST(RightJustify, FigureOne) {
  const auto p = make_params(3, 1);
  const auto a = validate(p, {{2, 7}, {1, 5}, {1, 0}});
  const auto [j, word] = right_justify(a);
  EXPECT_TRUE(is_right_justified(j));
  ColoredArrangement cur = a;
  for (const auto& g : word) {
    EXPECT_TRUE(is_rigid(cur, g));
    cur = act(cur, g);
  }
  EXPECT_EQ(cur, j);
  const auto [s, sigma] = to_standard_form(j);
  EXPECT_TRUE(is_standard_form(s));
}

TEST(RightJustify, AlreadyJustifiedIsUnchanged) {
  const auto p = make_params(3, 1);
  const auto a = simples(p);
  const auto [j, word] = right_justify(a);
  EXPECT_EQ(j, a);
  EXPECT_TRUE(word.empty());
  const auto z = simples(make_params(3, 0));
  EXPECT_TRUE(right_justify(z).second.empty());
}

TEST(RightJustify, EveryArrangement) {
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {3, 2}}) {
    const auto p = make_params(n, d);
    for (const auto& a : enumerate_colored(p)) {
      const auto [j, word] = right_justify(a);
      EXPECT_TRUE(is_right_justified(j));
      EXPECT_EQ(rooted_code(associated_tree(j)), rooted_code(associated_tree(a)));
    }
  }
}

TEST(Realize, EveryRootedClass) {
  for (const auto& [n, d] :
       std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 1}, {5, 1}}) {
    const auto p = make_params(n, d);
    for (const auto& [code, t] : enumerate_rooted_plane_trees(n)) {
      const auto real = realize_class(p, t);
      EXPECT_EQ(rooted_code(associated_tree(real.arrangement)), code);
      EXPECT_EQ(act_word(simples(p), real.word), real.arrangement);
    }
  }
}

TEST(Realize, FigureNineStagesUpToRotation) {
  const auto p = make_params(4, 1);
  const auto real = realize_class(p, parse_tree("[[[]],[[]]]"));
  ASSERT_EQ(real.stages.size(), 3u);
  const std::vector<std::string> expected = {"(()()()())", "((())(()))", "((())(()))"};
  for (std::size_t k = 0; k < real.stages.size(); ++k) {
    EXPECT_EQ(rooted_code(associated_tree(real.stages[k])), expected[k]);
    EXPECT_TRUE(is_right_justified(real.stages[k]));
  }
  for (std::size_t k = 1; k < real.stages.size(); ++k)
    for (std::size_t c = 0; c < real.stages[k].size(); ++c)
      if (height(real.stages[k], c) == static_cast<int>(k) + 1) {
        EXPECT_EQ(real.stages[k][c].l, 1);
      }
}

TEST(Realize, RejectsWrongSize) {
  EXPECT_THROW(realize_class(make_params(3, 1), parse_tree("[[],[]]")), DomainError);
}

TEST(Orbit, SimplesReachEveryOrthogonalTuple) {
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 1}}) {
    const auto p = make_params(n, d);
    const auto res = orbit(simples(p), kDefaultCap);
    ASSERT_TRUE(res.complete);
    EXPECT_EQ(res.states.size(), enumerate_colored(p).size());
    std::set<std::vector<IndecObject>> image;
    for (const auto& a : res.states) image.insert(phi(reduce(a)));
    EXPECT_EQ(image, enumerate_orthogonal_tuples(p));
  }
}

TEST(Orbit, CapStopsTheSearch) {
  const auto res = orbit(simples(make_params(3, 1)), 10);
  EXPECT_FALSE(res.complete);
  EXPECT_EQ(res.states.size(), 10u);
}
