#ifndef BEADLAB_ARRANGEMENT_HPP
#define BEADLAB_ARRANGEMENT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "beadlab/collision.hpp"
#include "beadlab/errors.hpp"
#include "beadlab/plane_tree.hpp"
#include "beadlab/ring.hpp"

namespace beadlab {

inline constexpr std::size_t kDefaultCap = 50'000'000;

// Tuple position is the colour.
struct ColoredArrangement {
  Params params;
  std::vector<Bead> beads;

  std::size_t size() const { return beads.size(); }
  const Bead& operator[](std::size_t k) const { return beads[k]; }

  friend bool operator==(const ColoredArrangement&, const ColoredArrangement&) = default;
};

using Entry = std::variant<Bead, Circlet>;

struct ReducedColoredArrangement {
  Params params;
  std::vector<Entry> entries;

  friend bool operator==(const ReducedColoredArrangement&,
                         const ReducedColoredArrangement&) = default;
};

inline bool entries_overlap(const Params& p, const Entry& a, const Entry& b) {
  if (const auto* x = std::get_if<Bead>(&a)) {
    if (const auto* y = std::get_if<Bead>(&b)) return overlaps(p, *x, *y);
    return overlaps_circlet(p, *x, std::get<Circlet>(b));
  }
  if (const auto* y = std::get_if<Bead>(&b))
    return overlaps_circlet(p, *y, std::get<Circlet>(a));
  return true;
}

inline ColoredArrangement validate(const Params& p, std::vector<Bead> beads) {
  if (beads.size() != static_cast<std::size_t>(p.n)) throw LengthError(p.n, beads.size());
  for (const auto& b : beads) check_bead(p, b);
  for (std::size_t a = 0; a < beads.size(); ++a)
    for (std::size_t b = a + 1; b < beads.size(); ++b)
      if (overlaps(p, beads[a], beads[b])) throw OverlapError(a, b);
  return {p, std::move(beads)};
}

inline ReducedColoredArrangement validate_reduced(const Params& p, std::vector<Entry> entries) {
  if (entries.size() != static_cast<std::size_t>(p.n))
    throw LengthError(p.n, entries.size());
  int circlets = 0;
  for (const auto& e : entries) {
    if (const auto* b = std::get_if<Bead>(&e)) {
      check_bead(p, *b);
      if (b->l > p.max_reduced_type() || (p.has_circlets() && b->l == p.circlet_type()))
        throw DomainError("bead of type " + std::to_string(b->l) +
                          " is not allowed in a reduced arrangement");
    } else {
      if (!p.has_circlets()) throw DomainError("circlets need odd n");
      const auto& c = std::get<Circlet>(e);
      if (c.i < 0 || c.i >= p.P || make_circlet(p, c.i) != c)
        throw DomainError("circlet position is not canonical");
      ++circlets;
    }
  }
  if (circlets > 1) throw DomainError("at most one circlet is allowed");
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (std::size_t b = a + 1; b < entries.size(); ++b)
      if (entries_overlap(p, entries[a], entries[b])) throw OverlapError(a, b);
  return {p, std::move(entries)};
}

// Strict containment: `inner` sits in the well of `outer`.
inline bool nested_in(const Params& p, const Bead& inner, const Bead& outer) {
  return inner != outer && interval_of(p, inner).within(p, well_of(p, outer));
}

inline int height(const ColoredArrangement& a, std::size_t k) {
  int h = 1;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (j != k && nested_in(a.params, a[k], a[j])) ++h;
  return h;
}

inline int height(const ColoredArrangement& a, const Bead& b) {
  const auto it = std::find(a.beads.begin(), a.beads.end(), b);
  if (it == a.beads.end()) throw DomainError("bead is not in the arrangement");
  return height(a, static_cast<std::size_t>(it - a.beads.begin()));
}

// Vertex k is bead k; vertex beads.size() is the wire.
inline RootedPlaneTree associated_tree(const Params& p, const std::vector<Bead>& beads) {
  const int n = static_cast<int>(beads.size());
  RootedPlaneTree t;
  t.parent.assign(n + 1, -1);
  t.children.assign(n + 1, {});
  t.root = n;
  for (int k = 0; k < n; ++k) {
    int best = -1;
    for (int j = 0; j < n; ++j)
      if (nested_in(p, beads[k], beads[j]) && (best < 0 || beads[j].l < beads[best].l))
        best = j;
    t.parent[k] = best < 0 ? n : best;
    t.children[t.parent[k]].push_back(k);
  }
  for (int v = 0; v <= n; ++v) {
    const int origin = v == n ? 0 : left_end(p, beads[v]);
    std::sort(t.children[v].begin(), t.children[v].end(), [&](int x, int y) {
      return p.wrap(beads[x].i - origin) < p.wrap(beads[y].i - origin);
    });
  }
  const auto w = weights(t);
  for (int k = 0; k < n; ++k) {
    int h = 1;
    for (int j = 0; j < n; ++j)
      if (nested_in(p, beads[k], beads[j])) ++h;
    if (depth(t, k) != h) throw InvariantViolation("tree depth differs from bead height");
    if (w[k] != beads[k].l) throw InvariantViolation("tree weight differs from bead type");
  }
  return t;
}

inline RootedPlaneTree associated_tree(const ColoredArrangement& a) {
  return associated_tree(a.params, a.beads);
}

inline std::vector<Bead> expand(const Params& p, const std::vector<Entry>& entries) {
  std::vector<Bead> out;
  for (const auto& e : entries) {
    if (const auto* b = std::get_if<Bead>(&e))
      out.push_back(*b);
    else
      out.push_back(circlet_member(p, std::get<Circlet>(e)));
  }
  return out;
}

inline RootedPlaneTree associated_tree(const ReducedColoredArrangement& a) {
  return associated_tree(a.params, expand(a.params, a.entries));
}

inline ColoredArrangement rebalance(const ColoredArrangement& a, std::size_t k) {
  if (k >= a.size()) throw DomainError("rebalance: no such entry");
  if (height(a, k) != 1) throw DomainError("rebalance: bead does not have height 1");
  auto beads = a.beads;
  beads[k] = partner(a.params, beads[k]);
  return validate(a.params, std::move(beads));
}

inline ColoredArrangement rebalance(const ColoredArrangement& a, const Bead& b) {
  const auto it = std::find(a.beads.begin(), a.beads.end(), b);
  if (it == a.beads.end()) throw DomainError("bead is not in the arrangement");
  return rebalance(a, static_cast<std::size_t>(it - a.beads.begin()));
}

// Partner-replaces overweight height-1 beads until the tree is balanced.
inline ColoredArrangement balance(const ColoredArrangement& a) {
  ColoredArrangement cur = a;
  for (int step = 0;; ++step) {
    if (step > a.params.n + 1) throw InvariantViolation("reduce did not terminate");
    std::optional<std::size_t> heavy;
    for (std::size_t k = 0; k < cur.size(); ++k)
      if (cur[k].l > cur.params.max_reduced_type() && height(cur, k) == 1) heavy = k;
    if (!heavy) return cur;
    cur = rebalance(cur, *heavy);
  }
}

inline ReducedColoredArrangement reduce(const ColoredArrangement& a) {
  const Params& p = a.params;
  const ColoredArrangement b = balance(a);
  std::vector<Entry> entries;
  for (const auto& bead : b.beads) {
    if (bead.l > p.max_reduced_type())
      throw InvariantViolation("balanced arrangement still has an overweight bead");
    if (p.has_circlets() && bead.l == p.circlet_type())
      entries.emplace_back(circlet_of(p, bead));
    else
      entries.emplace_back(bead);
  }
  return validate_reduced(p, std::move(entries));
}

inline ColoredArrangement rotate(const ColoredArrangement& a, std::int64_t k) {
  ColoredArrangement out = a;
  for (auto& b : out.beads) b = shift(a.params, b, k);
  return out;
}

inline ColoredArrangement permute(const ColoredArrangement& a, const std::vector<int>& sigma) {
  if (sigma.size() != a.size()) throw LengthError(a.size(), sigma.size());
  std::vector<bool> seen(a.size(), false);
  ColoredArrangement out = a;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const int s = sigma[k];
    if (s < 0 || s >= static_cast<int>(a.size()) || seen[s])
      throw DomainError("not a permutation");
    seen[s] = true;
    out.beads[k] = a.beads[s];
  }
  return out;
}

// B(1) runs into another bead with a Type I or II right collision.
inline bool is_right_justified(const ColoredArrangement& a, std::size_t k) {
  const Bead moved = shift(a.params, a[k], 1);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j == k) continue;
    const auto c = classify_collision(a.params, moved, a[j], Side::Right);
    if (c && (*c == CollisionKind::I || *c == CollisionKind::II)) return true;
  }
  return false;
}

inline std::vector<std::size_t> unjustified(const ColoredArrangement& a) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!is_right_justified(a, k)) out.push_back(k);
  return out;
}

inline bool is_right_justified(const ColoredArrangement& a) {
  return unjustified(a).size() <= 1;
}

// Height-1 bead with the smallest right endpoint.
inline std::size_t default_first_bead(const ColoredArrangement& a) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (height(a, k) == 1 && (!best || a[k].i < a[*best].i)) best = k;
  return *best;
}

// B^1 first, then the others by descending cyclic order of right endpoints.
inline std::vector<int> standard_order(const ColoredArrangement& a, std::size_t first) {
  std::vector<int> order(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) order[k] = static_cast<int>(k);
  const int top = a[first].i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return a.params.wrap(top - a[x].i) < a.params.wrap(top - a[y].i);
  });
  return order;
}

inline bool is_standard_form(const ColoredArrangement& a) {
  const auto loose = unjustified(a);
  if (loose.size() > 1) return false;
  if (loose.size() == 1 && loose[0] != 0) return false;
  const auto order = standard_order(a, 0);
  for (std::size_t k = 0; k < order.size(); ++k)
    if (order[k] != static_cast<int>(k)) return false;
  return true;
}

// Returns the reordered arrangement and sigma with new[k] = old[sigma[k]].
inline std::pair<ColoredArrangement, std::vector<int>> to_standard_form(
    const ColoredArrangement& a, std::optional<std::size_t> designated = std::nullopt) {
  const auto loose = unjustified(a);
  if (loose.size() > 1) throw DomainError("arrangement is not right-justified");
  std::size_t first;
  if (loose.size() == 1) {
    first = loose[0];
  } else if (designated) {
    if (*designated >= a.size()) throw DomainError("designated entry out of range");
    first = *designated;
  } else {
    first = default_first_bead(a);
  }
  auto sigma = standard_order(a, first);
  return {permute(a, sigma), sigma};
}

// ---- enumeration ----------------------------------------------------------

namespace detail {

template <class Item, class Overlap, class F>
void choose_disjoint(const std::vector<Item>& universe, int n, Overlap&& clash, F&& f,
                     std::size_t cap) {
  std::vector<Item> chosen;
  std::size_t produced = 0;
  auto go = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == n) {
      if (++produced > cap) throw CapExceeded(cap);
      f(static_cast<const std::vector<Item>&>(chosen));
      return;
    }
    const std::size_t need = n - chosen.size();
    for (std::size_t k = from; k + need <= universe.size(); ++k) {
      bool ok = true;
      for (const auto& c : chosen)
        if (clash(c, universe[k])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(universe[k]);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  go(go, 0);
}

inline std::vector<Bead> bead_universe(const Params& p, int max_type, bool skip_circlet_type) {
  std::vector<Bead> u;
  for (int l = max_type; l >= 1; --l) {
    if (skip_circlet_type && p.has_circlets() && l == p.circlet_type()) continue;
    for (int i = 0; i < p.P; ++i) u.push_back({l, i});
  }
  return u;
}

}  // namespace detail

// Every bead arrangement as a set (sorted by decreasing type, then position).
template <class F>
void for_each_bead_set(const Params& p, F&& f, std::size_t cap = kDefaultCap) {
  const auto universe = detail::bead_universe(p, p.n, false);
  detail::choose_disjoint(
      universe, p.n, [&](const Bead& a, const Bead& b) { return overlaps(p, a, b); }, f, cap);
}

// Every reduced bead arrangement as a set; a circlet, if any, comes first.
template <class F>
void for_each_reduced_set(const Params& p, F&& f, std::size_t cap = kDefaultCap) {
  std::vector<Entry> universe;
  if (p.has_circlets())
    for (int i = 0; i < p.P; ++i) {
      const Circlet c = make_circlet(p, i);
      if (c.i == i) universe.emplace_back(c);
    }
  for (const auto& b : detail::bead_universe(p, p.max_reduced_type(), true))
    universe.emplace_back(b);
  detail::choose_disjoint(
      universe, p.n, [&](const Entry& a, const Entry& b) { return entries_overlap(p, a, b); },
      f, cap);
}

template <class Item, class F>
void for_each_coloring(std::vector<Item> items, F&& f) {
  std::vector<int> idx(items.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
  std::vector<Item> out(items.size());
  do {
    for (std::size_t k = 0; k < idx.size(); ++k) out[k] = items[idx[k]];
    f(static_cast<const std::vector<Item>&>(out));
  } while (std::next_permutation(idx.begin(), idx.end()));
}

template <class F>
void for_each_colored(const Params& p, F&& f, std::size_t cap = kDefaultCap) {
  for_each_bead_set(
      p,
      [&](const std::vector<Bead>& set) {
        for_each_coloring(set, [&](const std::vector<Bead>& beads) {
          f(ColoredArrangement{p, beads});
        });
      },
      cap);
}

template <class F>
void for_each_reduced_colored(const Params& p, F&& f, std::size_t cap = kDefaultCap) {
  for_each_reduced_set(
      p,
      [&](const std::vector<Entry>& set) {
        for_each_coloring(set, [&](const std::vector<Entry>& entries) {
          f(ReducedColoredArrangement{p, entries});
        });
      },
      cap);
}

inline std::vector<ColoredArrangement> enumerate_colored(const Params& p,
                                                         std::size_t cap = kDefaultCap) {
  std::vector<ColoredArrangement> out;
  for_each_colored(p, [&](const ColoredArrangement& a) { out.push_back(a); }, cap);
  return out;
}

inline std::vector<ReducedColoredArrangement> enumerate_reduced_colored(
    const Params& p, std::size_t cap = kDefaultCap) {
  std::vector<ReducedColoredArrangement> out;
  for_each_reduced_colored(p, [&](const ReducedColoredArrangement& a) { out.push_back(a); },
                           cap);
  return out;
}

// ---- free arrangements ------------------------------------------------------

using FreeKey = std::vector<int>;

inline std::pair<int, int> entry_code(const Entry& e) {
  if (const auto* b = std::get_if<Bead>(&e)) return {b->l, b->i};
  return {0, std::get<Circlet>(e).i};
}

inline Entry shift(const Params& p, const Entry& e, std::int64_t k) {
  if (const auto* b = std::get_if<Bead>(&e)) return shift(p, *b, k);
  return shift(p, std::get<Circlet>(e), k);
}

// Least sorted (l, i) sequence over all rotations; circlets encode as (0, i).
template <class Item>
FreeKey free_key(const Params& p, const std::vector<Item>& items) {
  FreeKey best;
  std::vector<std::pair<int, int>> codes(items.size());
  for (int k = 0; k < p.P; ++k) {
    for (std::size_t j = 0; j < items.size(); ++j)
      codes[j] = entry_code(Entry(shift(p, items[j], k)));
    std::sort(codes.begin(), codes.end());
    FreeKey key;
    for (const auto& [l, i] : codes) {
      key.push_back(l);
      key.push_back(i);
    }
    if (best.empty() || key < best) best = key;
  }
  return best;
}

template <class Item>
std::vector<Item> from_free_key(const FreeKey& key) {
  std::vector<Item> out;
  for (std::size_t k = 0; k + 1 < key.size(); k += 2) {
    if constexpr (std::is_same_v<Item, Bead>) {
      out.push_back(Bead{key[k], key[k + 1]});
    } else {
      if (key[k] == 0)
        out.emplace_back(Circlet{key[k + 1]});
      else
        out.emplace_back(Bead{key[k], key[k + 1]});
    }
  }
  return out;
}

inline std::map<FreeKey, std::vector<Bead>> free_arrangements(const Params& p,
                                                              std::size_t cap = kDefaultCap) {
  std::map<FreeKey, std::vector<Bead>> out;
  for_each_bead_set(
      p, [&](const std::vector<Bead>& s) { out.emplace(free_key(p, s), s); }, cap);
  return out;
}

inline std::map<FreeKey, std::vector<Entry>> free_reduced_arrangements(
    const Params& p, std::size_t cap = kDefaultCap) {
  std::map<FreeKey, std::vector<Entry>> out;
  for_each_reduced_set(
      p, [&](const std::vector<Entry>& s) { out.emplace(free_key(p, s), s); }, cap);
  return out;
}

}  // namespace beadlab

#endif  // BEADLAB_ARRANGEMENT_HPP
