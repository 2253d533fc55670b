#ifndef BEADLAB_ACTION_HPP
#define BEADLAB_ACTION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "beadlab/arrangement.hpp"
#include "beadlab/catmodel.hpp"
#include "beadlab/collision.hpp"
#include "beadlab/plane_tree.hpp"
#include "beadlab/ring.hpp"

namespace beadlab {

// Colours listed in S stay put; every other bead shifts left by one.
struct Subset {
  std::vector<int> members;
  friend bool operator==(const Subset&, const Subset&) = default;
};
struct SubsetInverse {
  std::vector<int> members;
  friend bool operator==(const SubsetInverse&, const SubsetInverse&) = default;
};
// new[k] = old[sigma[k]].
struct Permutation {
  std::vector<int> sigma;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

using Generator = std::variant<Subset, SubsetInverse, Permutation>;
using GroupWord = std::vector<Generator>;

inline Generator inverse(const Generator& g) {
  if (const auto* s = std::get_if<Subset>(&g)) return SubsetInverse{s->members};
  if (const auto* s = std::get_if<SubsetInverse>(&g)) return Subset{s->members};
  const auto& sigma = std::get<Permutation>(g).sigma;
  std::vector<int> inv(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) inv[sigma[k]] = static_cast<int>(k);
  return Permutation{inv};
}

inline GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

struct CollisionReport {
  std::size_t moved_index = 0;
  std::size_t stationary_index = 0;
  CollisionKind kind = CollisionKind::I;
  Side side = Side::Left;
  Bead before;      // moved bead as it collided
  Bead after;       // its mutation
  Bead stationary;
  MutationTriangle triangle;
  // The stationary bead is adjacent to `after` with the follow-up kind.
  bool adjacency_holds = false;
};

struct ActionResult {
  ColoredArrangement arrangement;
  std::vector<CollisionReport> log;
};

namespace detail {

inline std::vector<bool> stationary_mask(std::size_t n, const std::vector<int>& members) {
  if (members.size() >= n) throw DomainError("subset generator must be a proper subset");
  std::vector<bool> mask(n, false);
  for (int m : members) {
    if (m < 0 || m >= static_cast<int>(n)) throw DomainError("subset member out of range");
    if (mask[m]) throw DomainError("subset member repeated");
    mask[m] = true;
  }
  return mask;
}

inline MutationTriangle triangle_of(const Params& p, const Bead& stationary, const Bead& before,
                                    const Bead& after, Side side) {
  if (side == Side::Left)
    return {phi(p, stationary), shifted(p, phi(p, after), 1), shifted(p, phi(p, before), 1)};
  return {shifted(p, phi(p, stationary), -1), shifted(p, phi(p, before), -1),
          shifted(p, phi(p, after), -1)};
}

inline ActionResult resolve(const ColoredArrangement& a, const std::vector<bool>& stationary,
                            Side side, const std::vector<int>* schedule) {
  const Params& p = a.params;
  const std::size_t n = a.size();
  const int step = side == Side::Left ? -1 : 1;
  ActionResult res{a, {}};
  auto& cur = res.arrangement.beads;
  std::vector<int> order;
  if (schedule) {
    order = *schedule;
  } else {
    for (std::size_t k = 0; k < n; ++k) order.push_back(static_cast<int>(k));
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!stationary[k]) cur[k] = shift(p, cur[k], step);

  const CollisionKind passes[] = {CollisionKind::I, CollisionKind::III, CollisionKind::II,
                                  CollisionKind::III};
  for (CollisionKind pass : passes) {
    std::vector<int> fired(n, 0);
    for (bool changed = true; changed;) {
      changed = false;
      for (int k : order) {
        if (stationary[k]) continue;
        std::optional<std::size_t> hit;
        for (std::size_t j = 0; j < n; ++j) {
          if (!stationary[j]) continue;
          const auto c = classify_collision(p, cur[k], cur[j], side);
          if (c && *c == pass) {
            if (hit) throw InvariantViolation("moved bead collides with two stationary beads");
            hit = j;
          }
        }
        if (!hit) continue;
        if (++fired[k] > static_cast<int>(n))
          throw InvariantViolation("mutation pass exceeded its bound");
        CollisionReport r;
        r.moved_index = static_cast<std::size_t>(k);
        r.stationary_index = *hit;
        r.kind = pass;
        r.side = side;
        r.before = cur[k];
        r.stationary = cur[*hit];
        r.after = mutate(p, cur[k], cur[*hit], pass, side);
        r.triangle = triangle_of(p, r.stationary, r.before, r.after, side);
        const auto follow = classify_collision(p, shift(p, r.stationary, step), r.after, side);
        r.adjacency_holds = follow && *follow == follow_up_kind(pass);
        cur[k] = r.after;
        res.log.push_back(r);
        changed = true;
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (overlaps(p, cur[x], cur[y]))
        throw InvariantViolation("action produced overlapping beads");
  return res;
}

}  // namespace detail

// `schedule` fixes the order in which moved beads are examined within a pass.
inline ActionResult act_logged(const ColoredArrangement& a, const Generator& g,
                               const std::vector<int>* schedule = nullptr) {
  if (const auto* s = std::get_if<Subset>(&g))
    return detail::resolve(a, detail::stationary_mask(a.size(), s->members), Side::Left,
                           schedule);
  if (const auto* s = std::get_if<SubsetInverse>(&g))
    return detail::resolve(a, detail::stationary_mask(a.size(), s->members), Side::Right,
                           schedule);
  return {permute(a, std::get<Permutation>(g).sigma), {}};
}

inline ColoredArrangement act(const ColoredArrangement& a, const Generator& g) {
  return act_logged(a, g).arrangement;
}

inline ColoredArrangement act_word(const ColoredArrangement& a, const GroupWord& w) {
  ColoredArrangement cur = a;
  for (const auto& g : w) cur = act(cur, g);
  return cur;
}

inline bool is_rigid(const ColoredArrangement& a, const Generator& g) {
  if (std::holds_alternative<Permutation>(g))
    throw DomainError("is_rigid takes a subset generator");
  return act_logged(a, g).log.empty();
}

// Moved beads leave no Hom into the stationary ones:
// Hom(Phi(C)(1), Phi(B)) = 0 after S, Hom(Phi(B), Phi(C)(-1)) = 0 after S^-1.
inline bool hom_vanishing_holds(const ColoredArrangement& result, const Generator& g) {
  const Params& p = result.params;
  const bool left = std::holds_alternative<Subset>(g);
  const auto& members =
      left ? std::get<Subset>(g).members : std::get<SubsetInverse>(g).members;
  const auto stationary = detail::stationary_mask(result.size(), members);
  for (std::size_t i = 0; i < result.size(); ++i) {
    if (stationary[i]) continue;
    for (std::size_t j = 0; j < result.size(); ++j) {
      if (!stationary[j]) continue;
      const int h = left ? hom_dim(p, shifted(p, phi(p, result[i]), 1), phi(p, result[j]))
                         : hom_dim(p, phi(p, result[j]), shifted(p, phi(p, result[i]), -1));
      if (h != 0) return false;
    }
  }
  return true;
}

// (B_1(0), B_1(-(d+2)), ..., B_1(-(n-1)(d+2))); Phi gives the simple modules.
inline ColoredArrangement simples(const Params& p) {
  std::vector<Bead> beads;
  for (int k = 0; k < p.n; ++k) beads.push_back(make_bead(p, 1, -std::int64_t{k} * p.unit()));
  return validate(p, std::move(beads));
}

// Slides every bead but `fixed` (and its contents) right until it touches
// something, lowest height first.
inline std::pair<ColoredArrangement, GroupWord> right_justify(
    const ColoredArrangement& a, std::optional<std::size_t> fixed = std::nullopt) {
  const Params& p = a.params;
  const std::size_t n = a.size();
  if (!fixed) {
    for (std::size_t k = 0; k < n && !fixed; ++k)
      if (height(a, k) == 1) fixed = k;
  } else if (*fixed >= n || height(a, *fixed) != 1) {
    throw DomainError("right_justify: the fixed bead must have height 1");
  }
  ColoredArrangement cur = a;
  GroupWord word;
  std::vector<int> h(n);
  for (std::size_t k = 0; k < n; ++k) h[k] = height(a, k);
  for (int level = 1; level <= p.n; ++level) {
    for (std::size_t guard = 0;; ++guard) {
      if (guard > n * static_cast<std::size_t>(p.P) + n)
        throw InvariantViolation("right_justify did not terminate");
      std::optional<std::size_t> pick;
      for (std::size_t k = 0; k < n && !pick; ++k)
        if (k != *fixed && h[k] == level && !is_right_justified(cur, k)) pick = k;
      if (!pick) break;
      std::vector<int> stay;
      for (std::size_t j = 0; j < n; ++j)
        if (j != *pick && !nested_in(p, cur[j], cur[*pick])) stay.push_back(static_cast<int>(j));
      const Generator g = SubsetInverse{stay};
      const auto res = act_logged(cur, g);
      if (!res.log.empty()) throw InvariantViolation("justifying step was not rigid");
      cur = res.arrangement;
      word.push_back(g);
    }
  }
  return {cur, word};
}

struct Realization {
  GroupWord word;
  ColoredArrangement arrangement;
  std::vector<ColoredArrangement> stages;  // A_0, A_1, ...
  std::vector<int> vertex_colour;          // tree vertex -> colour, -1 for the root
};

// Builds a word taking the simples arrangement to one of class (T, r).
inline Realization realize_class(const Params& p, const RootedPlaneTree& t) {
  if (t.edges() != p.n) throw DomainError("tree must have n edges");
  const auto w = weights(t);
  Realization out{{}, simples(p), {}, std::vector<int>(t.size(), -1)};
  ColoredArrangement& cur = out.arrangement;
  out.stages.push_back(cur);

  std::vector<std::vector<int>> by_depth;
  for (int v = 0; v < t.size(); ++v) {
    const auto k = static_cast<std::size_t>(depth(t, v));
    if (by_depth.size() <= k) by_depth.resize(k + 1);
    by_depth[k].push_back(v);
  }
  for (std::size_t level = 0; level + 1 < by_depth.size(); ++level) {
    for (int v : by_depth[level]) {
      if (t.children[v].empty()) continue;
      const int bead = out.vertex_colour[v];
      std::vector<int> inner;
      for (std::size_t c = 0; c < cur.size(); ++c)
        if (height(cur, c) == static_cast<int>(level) + 1 &&
            (bead < 0 || nested_in(p, cur[c], cur[bead])))
          inner.push_back(static_cast<int>(c));
      const int top = bead < 0 ? cur[0].i : cur[bead].i;
      std::sort(inner.begin(), inner.end(),
                [&](int x, int y) { return p.wrap(top - cur[x].i) < p.wrap(top - cur[y].i); });
      if (bead < 0 && (inner.empty() || inner.front() != 0))
        throw InvariantViolation("stage does not start from standard form");
      if (static_cast<int>(inner.size()) != w[v] - 1)
        throw InvariantViolation("well holds the wrong number of beads");
      std::vector<int> kids(t.children[v].rbegin(), t.children[v].rend());
      std::vector<int> stay;
      std::size_t at = 0;
      for (int kid : kids) {
        out.vertex_colour[kid] = inner[at];
        for (int m = 1; m < w[kid]; ++m) stay.push_back(inner[at + m]);
        at += w[kid];
      }
      std::sort(stay.begin(), stay.end());
      const Generator g = Subset{stay};
      const auto res = act_logged(cur, g);
      for (const auto& r : res.log)
        if (r.kind != CollisionKind::I)
          throw InvariantViolation("class construction fired a non-extending mutation");
      cur = res.arrangement;
      out.word.push_back(g);
    }
    auto [justified, steps] = right_justify(cur, std::size_t{0});
    out.word.insert(out.word.end(), steps.begin(), steps.end());
    auto [standard, sigma] = to_standard_form(justified, std::size_t{0});
    out.word.push_back(Permutation{sigma});
    std::vector<int> where(sigma.size());
    for (std::size_t k = 0; k < sigma.size(); ++k) where[sigma[k]] = static_cast<int>(k);
    for (auto& c : out.vertex_colour)
      if (c >= 0) c = where[c];
    cur = standard;
    for (std::size_t c = 0; c < cur.size(); ++c)
      if (height(cur, c) == static_cast<int>(level) + 2 && cur[c].l != 1)
        throw InvariantViolation("deeper beads are not all of type 1");
    out.stages.push_back(cur);
  }
  if (rooted_code(associated_tree(cur)) != rooted_code(t))
    throw InvariantViolation("realized arrangement has the wrong class");
  return out;
}

// ---- orbit search -------------------------------------------------------------

inline std::vector<Generator> default_generators(int n) {
  std::vector<Generator> gens;
  const unsigned full = (1u << n) - 1;
  for (unsigned mask = 0; mask < full; ++mask) {
    std::vector<int> s;
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1u) s.push_back(k);
    gens.emplace_back(Subset{s});
    gens.emplace_back(SubsetInverse{s});
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      std::vector<int> sigma(n);
      for (int k = 0; k < n; ++k) sigma[k] = k;
      std::swap(sigma[x], sigma[y]);
      gens.emplace_back(Permutation{sigma});
    }
  return gens;
}

struct OrbitResult {
  std::vector<ColoredArrangement> states;  // breadth-first order
  bool complete = false;
};

namespace detail {

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

inline std::vector<int> state_key(const ColoredArrangement& a) {
  std::vector<int> key;
  for (const auto& b : a.beads) {
    key.push_back(b.l);
    key.push_back(b.i);
  }
  return key;
}

}  // namespace detail

// Stops with complete = false once `cap` states have been seen.
inline OrbitResult orbit(const ColoredArrangement& start, const std::vector<Generator>& gens,
                         std::size_t cap) {
  OrbitResult out;
  std::unordered_set<std::vector<int>, detail::KeyHash> seen{detail::state_key(start)};
  out.states.push_back(start);
  for (std::size_t head = 0; head < out.states.size(); ++head) {
    for (const auto& g : gens) {
      ColoredArrangement next = act(out.states[head], g);
      if (!seen.insert(detail::state_key(next)).second) continue;
      if (out.states.size() >= cap) return out;
      out.states.push_back(std::move(next));
    }
  }
  out.complete = true;
  return out;
}

inline OrbitResult orbit(const ColoredArrangement& start, std::size_t cap) {
  return orbit(start, default_generators(start.params.n), cap);
}

}  // namespace beadlab

#endif  // BEADLAB_ACTION_HPP
