#ifndef BEADLAB_VERIFY_HPP
#define BEADLAB_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "beadlab/action.hpp"
#include "beadlab/arrangement.hpp"
#include "beadlab/catmodel.hpp"
#include "beadlab/counting.hpp"
#include "beadlab/plane_tree.hpp"
#include "beadlab/ring.hpp"

namespace beadlab {

struct CheckResult {
  std::string module;
  std::string name;
  bool ok = true;
  std::string detail;
};

namespace detail {

class Suite {
 public:
  explicit Suite(std::string module) : module_(std::move(module)) {}

  template <class F>
  void run(std::vector<CheckResult>& out, const std::string& name, F&& body) {
    CheckResult r{module_, name, true, {}};
    std::size_t failures = 0;
    std::string first;
    auto fail = [&](const std::string& why) {
      if (failures++ == 0) first = why;
    };
    try {
      body(fail);
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
    if (failures) {
      r.ok = false;
      r.detail = std::to_string(failures) + " violation(s); first: " + first;
    }
    out.push_back(r);
  }

 private:
  std::string module_;
};

inline std::string show(const Bead& b) {
  return "B_" + std::to_string(b.l) + "(" + std::to_string(b.i) + ")";
}

inline std::vector<Bead> all_beads(const Params& p) {
  std::vector<Bead> out;
  for (int l = 1; l <= p.n; ++l)
    for (int i = 0; i < p.P; ++i) out.push_back({l, i});
  return out;
}

}  // namespace detail

using FailFn = std::function<void(const std::string&)>;

inline void verify_ring(const Params& p, std::vector<CheckResult>& out) {
  detail::Suite s("ring");
  const auto beads = detail::all_beads(p);
  s.run(out, "partner is an involution of complementary type", [&](const FailFn& fail) {
    for (const auto& b : beads) {
      const Bead q = partner(p, b);
      if (partner(p, q) != b || q.l != p.n + 1 - b.l) fail(detail::show(b));
    }
  });
  s.run(out, "overlap is symmetric and reflexive", [&](const FailFn& fail) {
    for (const auto& a : beads) {
      if (!overlaps(p, a, a)) fail(detail::show(a) + " vs itself");
      for (const auto& b : beads)
        if (overlaps(p, a, b) != overlaps(p, b, a)) fail(detail::show(a) + " " + detail::show(b));
    }
  });
  s.run(out, "two-point test agrees with the containment cases", [&](const FailFn& fail) {
    for (const auto& a : beads)
      for (const auto& b : beads)
        if (overlaps(p, a, b) != overlaps_by_cases(p, a, b))
          fail(detail::show(a) + " " + detail::show(b));
  });
  s.run(out, "in the well iff outside the partner", [&](const FailFn& fail) {
    for (const auto& a : beads)
      for (const auto& b : beads) {
        if (b.l > a.l) continue;
        const bool in_well = interval_of(p, b).within(p, well_of(p, a));
        const bool outside = interval_of(p, b).within(p, outside_of(p, partner(p, a)));
        if (in_well != outside) fail(detail::show(a) + " " + detail::show(b));
      }
  });
  if (p.has_circlets())
    s.run(out, "middle-type beads always overlap", [&](const FailFn& fail) {
      for (int i = 0; i < p.P; ++i)
        for (int j = 0; j < p.P; ++j)
          if (!overlaps(p, {p.circlet_type(), i}, {p.circlet_type(), j}))
            fail(std::to_string(i) + "," + std::to_string(j));
    });
}

inline void verify_plane_tree(const Params& p, std::vector<CheckResult>& out) {
  detail::Suite s("plane_tree");
  const auto trees = enumerate_ordered_trees(p.n);
  s.run(out, "balancing roots: size, adjacency, joining weight", [&](const FailFn& fail) {
    for (const auto& t : trees) {
      const auto roots = balancing_roots(t);
      if (roots.size() == 1) continue;
      if (roots.size() != 2 || p.n % 2 == 0) {
        fail(ordered_code(t));
        continue;
      }
      const bool adjacent = t.parent[roots[0]] == roots[1] || t.parent[roots[1]] == roots[0];
      const auto w = weights(reroot(t, roots[0]));
      if (!adjacent || w[roots[1]] != (p.n + 1) / 2) fail(ordered_code(t));
    }
  });
  s.run(out, "greedy balancing matches a scan of all roots", [&](const FailFn& fail) {
    for (const auto& t : trees) {
      std::vector<int> scan;
      for (int v = 0; v < t.size(); ++v)
        if (is_balanced(reroot(t, v))) scan.push_back(v);
      for (int v = 0; v < t.size(); ++v)
        if (balancing_roots_from(t, v) != scan) fail(ordered_code(t));
    }
  });
  s.run(out, "rebalancing weight identity", [&](const FailFn& fail) {
    for (const auto& t : trees)
      for (int v : t.children[t.root]) {
        const auto before = weights(t);
        const auto after = weights(rebalance_root(t, t.root, v));
        if (after[t.root] != p.n + 1 - before[v]) fail(ordered_code(t));
      }
  });
}

inline void verify_arrangement(const Params& p, std::vector<CheckResult>& out) {
  detail::Suite s("arrangement");
  std::vector<std::vector<Bead>> sets;
  for_each_bead_set(p, [&](const std::vector<Bead>& b) { sets.push_back(b); });
  s.run(out, "tree depth = height and weight = type", [&](const FailFn&) {
    for (const auto& b : sets) associated_tree(p, b);
  });
  s.run(out, "reduction is balanced; circlet iff two balancing roots", [&](const FailFn& fail) {
    for (const auto& b : sets) {
      const auto r = reduce(ColoredArrangement{p, b});
      const auto t = associated_tree(r);
      if (!is_balanced(t)) fail("unbalanced reduction");
      bool circlet = false;
      for (const auto& e : r.entries) circlet = circlet || std::holds_alternative<Circlet>(e);
      if (circlet != (balancing_roots(t).size() == 2)) fail("circlet/root mismatch");
    }
  });
  s.run(out, "class is invariant under rotation", [&](const FailFn& fail) {
    for (const auto& b : sets) {
      const ColoredArrangement a{p, b};
      const auto code = rooted_code(associated_tree(a));
      for (int k = 1; k < p.P; ++k)
        if (rooted_code(associated_tree(rotate(a, k))) != code) fail("rotation changes class");
    }
  });
  s.run(out, "right endpoints are distinct", [&](const FailFn& fail) {
    for (const auto& b : sets) {
      std::set<int> ends;
      for (const auto& x : b) ends.insert(x.i);
      if (ends.size() != b.size()) fail("shared right endpoint");
    }
  });
  s.run(out, "right-justification bound", [&](const FailFn& fail) {
    for (const auto& b : sets) {
      const ColoredArrangement a{p, b};
      if (p.d == 0 && !is_right_justified(a)) fail("d = 0 arrangement not right-justified");
      if (p.d > 0 && unjustified(a).empty()) fail("every bead justified with d > 0");
    }
  });
}

inline void verify_counting(const Params& p, std::vector<CheckResult>& out) {
  detail::Suite s("counting");
  s.run(out, "N_{T,r} is independent of the root", [&](const FailFn& fail) {
    for (const auto& t : enumerate_ordered_trees(p.n)) {
      const BigInt first = count_class(t, p.d);
      for (int v = 0; v < t.size(); ++v)
        if (count_class(reroot(t, v), p.d) != first) fail(ordered_code(t));
    }
  });
  const CountReport r = totals(p, true);
  s.run(out, "sum of N_T equals the free reduced count", [&](const FailFn& fail) {
    if (!r.rfba_matches())
      fail("formula " + r.rfba_total.str() + " vs enumerated " + r.rfba_oracle->str());
  });
  s.run(out, "n! P sum of N_T equals the colored reduced count", [&](const FailFn& fail) {
    if (!r.rcba_matches())
      fail("formula " + r.rcba_total.str() + " vs enumerated " + r.rcba_oracle->str());
  });
  s.run(out, "per-class N_T equals the enumerated class size", [&](const FailFn& fail) {
    for (const auto& [code, c] : r.classes)
      if (!c.enumerated || *c.enumerated != c.formula)
        fail(code + ": formula " + c.formula.str() + " vs enumerated " +
             (c.enumerated ? c.enumerated->str() : std::string("0")));
  });
  s.run(out, "symmetry-adjusted total equals the colored reduced count", [&](const FailFn& fail) {
    if (r.rcba_symmetry_adjusted != *r.rcba_oracle)
      fail(r.rcba_symmetry_adjusted.str() + " vs " + r.rcba_oracle->str());
  });
}

inline void verify_action(const Params& p, std::vector<CheckResult>& out) {
  detail::Suite s("action");
  const auto all = enumerate_colored(p);
  const unsigned full = (1u << p.n) - 1;
  auto subsets = [&] {
    std::vector<std::vector<int>> v;
    for (unsigned m = 0; m < full; ++m) {
      std::vector<int> x;
      for (int k = 0; k < p.n; ++k)
        if (m >> k & 1u) x.push_back(k);
      v.push_back(x);
    }
    return v;
  }();
  s.run(out, "S and S^-1 are mutually inverse", [&](const FailFn& fail) {
    for (const auto& a : all)
      for (const auto& m : subsets) {
        if (act(act(a, Subset{m}), SubsetInverse{m}) != a) fail("S then S^-1");
        if (act(act(a, SubsetInverse{m}), Subset{m}) != a) fail("S^-1 then S");
      }
  });
  s.run(out, "mutation adjacency and Hom vanishing", [&](const FailFn& fail) {
    for (const auto& a : all)
      for (const auto& m : subsets)
        for (const auto& g : std::vector<Generator>{Subset{m}, SubsetInverse{m}}) {
          const auto res = act_logged(a, g);
          for (const auto& c : res.log)
            if (!c.adjacency_holds) fail("adjacency after a Type " + std::string(to_string(c.kind)));
          if (!hom_vanishing_holds(res.arrangement, g)) fail("Hom into a stationary bead");
        }
  });
  s.run(out, "rigid moves preserve the class", [&](const FailFn& fail) {
    for (const auto& a : all)
      for (const auto& m : subsets) {
        const auto res = act_logged(a, Subset{m});
        if (res.log.empty() &&
            rooted_code(associated_tree(res.arrangement)) != rooted_code(associated_tree(a)))
          fail("rigid move changed the class");
      }
  });
  s.run(out, "every rooted class is realized from the simples", [&](const FailFn& fail) {
    for (const auto& [code, t] : enumerate_rooted_plane_trees(p.n)) {
      const auto real = realize_class(p, t);
      if (act_word(simples(p), real.word) != real.arrangement) fail(code);
    }
  });
  s.run(out, "orbit of the simples covers every orthogonal tuple", [&](const FailFn& fail) {
    const auto o = orbit(simples(p), all.size() + 1);
    if (!o.complete) fail("orbit search hit its cap");
    std::set<std::vector<IndecObject>> image;
    for (const auto& a : o.states) image.insert(phi(reduce(a)));
    if (image != enumerate_orthogonal_tuples(p)) fail("image differs from the orthogonal tuples");
    if (o.states.size() != all.size()) fail("orbit is not all of the colored arrangements");
  });
}

inline void verify_catmodel(const Params& p, std::vector<CheckResult>& out) {
  detail::Suite s("catmodel");
  const auto beads = detail::all_beads(p);
  s.run(out, "phi is two-to-one with partner fibres", [&](const FailFn& fail) {
    std::map<IndecObject, std::vector<Bead>> fibre;
    for (const auto& b : beads) fibre[phi(p, b)].push_back(b);
    if (fibre.size() * 2 != beads.size()) fail("wrong number of objects");
    for (const auto& [x, bs] : fibre)
      if (bs.size() != 2 || partner(p, bs[0]) != bs[1]) fail("fibre is not a partner pair");
  });
  s.run(out, "every object is elementary", [&](const FailFn& fail) {
    for (const auto& x : all_objects(p))
      if (!is_elementary(p, x)) fail("non-elementary object");
  });
  s.run(out, "non-overlap iff distinct and independent (reduced types)", [&](const FailFn& fail) {
    for (const auto& a : beads)
      for (const auto& b : beads) {
        if (a.l > p.max_reduced_type() || b.l > p.max_reduced_type()) continue;
        const auto x = phi(p, a), y = phi(p, b);
        if (overlaps(p, a, b) == (x != y && independent(p, x, y)))
          fail(detail::show(a) + " " + detail::show(b));
      }
  });
  s.run(out, "non-overlap implies independence; one partner variant overlaps",
        [&](const FailFn& fail) {
          for (const auto& a : beads)
            for (const auto& b : beads) {
              if (a == b || overlaps(p, a, b)) continue;
              if (!independent(p, phi(p, a), phi(p, b))) fail(detail::show(a) + " " + detail::show(b));
              const Bead pa = partner(p, a), pb = partner(p, b);
              const int hits = overlaps(p, pa, b) + overlaps(p, a, pb) + overlaps(p, pa, pb);
              if (hits != 1) fail("partner variants of " + detail::show(a) + " " + detail::show(b));
            }
        });
  s.run(out, "left collision iff Hom(Phi(B1), Phi(B2(1))) = 1", [&](const FailFn& fail) {
    for (const auto& a : beads)
      for (const auto& b : beads) {
        if (overlaps(p, a, b)) continue;
        const bool col = classify_collision(p, shift(p, a, -1), b, Side::Left).has_value();
        const bool hom = hom_dim(p, phi(p, a), phi(p, shift(p, b, 1))) == 1;
        if (col != hom) fail(detail::show(a) + " " + detail::show(b));
      }
  });
  s.run(out, "arcs are diagonals constant on partner pairs", [&](const FailFn& fail) {
    for (const auto& b : beads) {
      if (arc_of(p, b) != arc_of(p, partner(p, b))) fail(detail::show(b));
      if (!is_valid_diagonal(p, arc_of(p, b))) fail(detail::show(b));
    }
  });
  s.run(out, "overlap iff arcs cross (non-partner pairs)", [&](const FailFn& fail) {
    for (const auto& a : beads)
      for (const auto& b : beads) {
        if (a == b || is_partner_pair(p, a, b)) continue;
        if (overlaps(p, a, b) != diagonals_cross(p, arc_of(p, a), arc_of(p, b)))
          fail(detail::show(a) + " " + detail::show(b));
      }
  });
  s.run(out, "overlap iff arcs meet (reduced types, distinct arcs)", [&](const FailFn& fail) {
    for (const auto& a : beads)
      for (const auto& b : beads) {
        if (a.l > p.max_reduced_type() || b.l > p.max_reduced_type()) continue;
        if (arc_of(p, a) == arc_of(p, b)) continue;
        if (overlaps(p, a, b) != diagonals_meet(p, arc_of(p, a), arc_of(p, b)))
          fail(detail::show(a) + " " + detail::show(b));
      }
  });
}

inline std::vector<CheckResult> verify_all(const Params& p) {
  std::vector<CheckResult> out;
  verify_ring(p, out);
  verify_plane_tree(p, out);
  verify_arrangement(p, out);
  verify_counting(p, out);
  verify_action(p, out);
  verify_catmodel(p, out);
  return out;
}

}  // namespace beadlab

#endif  // BEADLAB_VERIFY_HPP
