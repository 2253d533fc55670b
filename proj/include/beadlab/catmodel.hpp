#ifndef BEADLAB_CATMODEL_HPP
#define BEADLAB_CATMODEL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "beadlab/arrangement.hpp"
#include "beadlab/ring.hpp"

namespace beadlab {

// M^1_l(shift) with l <= floor((n+1)/2); middle-length shifts live mod P/2.
struct IndecObject {
  int l = 1;
  int shift = 0;

  friend auto operator<=>(const IndecObject&, const IndecObject&) = default;
};

inline int shift_period(const Params& p, int l) {
  return p.has_circlets() && l == p.circlet_type() ? p.P / 2 : p.P;
}

inline IndecObject make_object(const Params& p, int l, std::int64_t s) {
  if (l < 1 || l > p.max_reduced_type())
    throw DomainError("object length " + std::to_string(l) + " outside 1.." +
                      std::to_string(p.max_reduced_type()));
  const std::int64_t m = shift_period(p, l);
  return {l, static_cast<int>(((s % m) + m) % m)};
}

inline IndecObject shifted(const Params& p, const IndecObject& x, std::int64_t k) {
  return make_object(p, x.l, x.shift + k);
}

inline IndecObject phi(const Params& p, const Bead& b) {
  const Bead c = b.l > p.max_reduced_type() ? partner(p, b) : b;
  return make_object(p, c.l, c.i);
}

inline IndecObject phi(const Params& p, const Circlet& c) {
  return make_object(p, p.circlet_type(), c.i);
}

inline IndecObject phi(const Params& p, const Entry& e) {
  return std::visit([&](const auto& x) { return phi(p, x); }, e);
}

inline std::vector<IndecObject> phi(const ColoredArrangement& a) {
  std::vector<IndecObject> out;
  for (const auto& b : a.beads) out.push_back(phi(a.params, b));
  return out;
}

inline std::vector<IndecObject> phi(const ReducedColoredArrangement& a) {
  std::vector<IndecObject> out;
  for (const auto& e : a.entries) out.push_back(phi(a.params, e));
  return out;
}

inline std::vector<IndecObject> all_objects(const Params& p) {
  std::vector<IndecObject> out;
  for (int l = 1; l <= p.max_reduced_type(); ++l)
    for (int s = 0; s < shift_period(p, l); ++s) out.push_back({l, s});
  return out;
}

namespace detail {

// Hom(M_l, M_r(s)) for r <= l.
inline int hom_ordered(const Params& p, int l, int r, std::int64_t s) {
  const int u = p.unit();
  const std::int64_t m = shift_period(p, r);
  const auto red = [m](std::int64_t x) { return ((x % m) + m) % m; };
  const std::int64_t t = red(s);
  for (int k = 1; k <= r; ++k)
    if (red(static_cast<std::int64_t>(u) * (r - k)) == t) return 1;
  for (int k = 1 + l - r; k <= l; ++k)
    if (red(static_cast<std::int64_t>(u) * (p.n + 1 - k) - 1) == t) return 1;
  return 0;
}

}  // namespace detail

// Longer-to-shorter queries use the shift-set criterion directly; the other
// direction goes through Serre duality Hom(X, Y) = D Hom(Y, X(-(d+1))).
inline int hom_dim(const Params& p, const IndecObject& x, const IndecObject& y) {
  if (y.l <= x.l) return detail::hom_ordered(p, x.l, y.l, std::int64_t{y.shift} - x.shift);
  return detail::hom_ordered(p, y.l, x.l,
                             std::int64_t{x.shift} - (p.d + 1) - std::int64_t{y.shift});
}

inline bool is_elementary(const Params& p, const IndecObject& x) {
  for (int m = 0; m <= p.d; ++m)
    if (hom_dim(p, x, shifted(p, x, -m)) != (m == 0 ? 1 : 0)) return false;
  return true;
}

inline bool independent(const Params& p, const IndecObject& x, const IndecObject& y) {
  const int same = x == y ? 1 : 0;
  for (int m = 0; m <= p.d; ++m) {
    const int expect = m == 0 ? same : 0;
    if (hom_dim(p, x, shifted(p, y, -m)) != expect) return false;
    if (hom_dim(p, y, shifted(p, x, -m)) != expect) return false;
  }
  return true;
}

inline bool is_orthogonal_tuple(const Params& p, const std::vector<IndecObject>& xs) {
  if (xs.size() != static_cast<std::size_t>(p.n)) return false;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < xs.size(); ++b)
      for (int m = 0; m <= p.d; ++m)
        if (hom_dim(p, xs[a], shifted(p, xs[b], -m)) != (a == b && m == 0 ? 1 : 0))
          return false;
  return true;
}

// All orthogonal n-tuples, by backtracking over objects only.
inline std::set<std::vector<IndecObject>> enumerate_orthogonal_tuples(const Params& p) {
  const auto objects = all_objects(p);
  std::vector<IndecObject> usable;
  for (const auto& x : objects)
    if (is_elementary(p, x)) usable.push_back(x);
  std::set<std::vector<IndecObject>> out;
  std::vector<IndecObject> cur;
  std::function<void()> go = [&] {
    if (cur.size() == static_cast<std::size_t>(p.n)) {
      out.insert(cur);
      return;
    }
    for (const auto& x : usable) {
      bool ok = true;
      for (const auto& y : cur)
        if (x == y || !independent(p, x, y)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(x);
      go();
      cur.pop_back();
    }
  };
  go();
  return out;
}

// Triangle Phi(stationary) -> Phi(after)(1) -> Phi(before)(1) for a left
// mutation, mirrored with (-1) for a right one.
struct MutationTriangle {
  IndecObject first;
  IndecObject second;
  IndecObject third;
};

// ---- arc model ----------------------------------------------------------------

struct Diagonal {
  int a = 0;
  int b = 0;  // a < b

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

inline Diagonal make_diagonal(int x, int y) { return x < y ? Diagonal{x, y} : Diagonal{y, x}; }

inline Diagonal arc_of(const Params& p, const Bead& b) {
  return make_diagonal(b.i, p.wrap(b.i - bead_length(p, b) + 1));
}

// Number of edges between the endpoints, measured the short way round.
inline int separation(const Params& p, const Diagonal& g) {
  const int e = g.b - g.a;
  return std::min(e, p.P - e);
}

inline bool is_valid_diagonal(const Params& p, const Diagonal& g) {
  const int e = g.b - g.a;
  if (g.a < 0 || g.b >= p.P || e <= 0) return false;
  for (int k = 1; k <= p.n; ++k)
    if (e == k * p.unit() - 1 || p.P - e == k * p.unit() - 1) return true;
  return false;
}

// Strict interleaving; a shared endpoint is not a crossing.
inline bool diagonals_cross(const Params&, const Diagonal& g, const Diagonal& h) {
  const auto inside = [&](int x) { return g.a < x && x < g.b; };
  if (g.a == h.a || g.a == h.b || g.b == h.a || g.b == h.b) return false;
  return inside(h.a) != inside(h.b);
}

inline bool diagonals_meet(const Params& p, const Diagonal& g, const Diagonal& h) {
  if (g == h) return true;
  if (g.a == h.a || g.a == h.b || g.b == h.a || g.b == h.b) return true;
  return diagonals_cross(p, g, h);
}

}  // namespace beadlab

#endif  // BEADLAB_CATMODEL_HPP
