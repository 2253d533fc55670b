#ifndef BEADLAB_RING_HPP
#define BEADLAB_RING_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "beadlab/errors.hpp"

namespace beadlab {

// (n, d) with the wire length P = (n+1)(d+2) - 2.
struct Params {
  int n = 0;
  int d = 0;
  int P = 0;

  // Unit length of a type-1 bead.
  int unit() const { return d + 2; }
  // w = -(d+1); orthogonality is tested for shifts 0 <= m < |w|.
  int w() const { return -(d + 1); }
  // Largest bead type allowed in a reduced arrangement.
  int max_reduced_type() const { return (n + 1) / 2; }
  bool has_circlets() const { return n % 2 == 1; }
  int circlet_type() const { return (n + 1) / 2; }

  int wrap(std::int64_t x) const {
    std::int64_t r = x % P;
    return static_cast<int>(r < 0 ? r + P : r);
  }

  friend bool operator==(const Params&, const Params&) = default;
};

inline Params make_params(int n, int d) {
  if (n < 2) throw DomainError("n must be at least 2, got " + std::to_string(n));
  if (d < 0) throw DomainError("d must be non-negative, got " + std::to_string(d));
  return Params{n, d, (n + 1) * (d + 2) - 2};
}

// [[right - len, right]] on Z/PZ; membership counts lattice points.
struct Interval {
  int right = 0;
  int len = 0;

  int left(const Params& p) const { return p.wrap(right - len); }

  bool contains(const Params& p, int x) const {
    return p.wrap(x - (right - len)) <= len;
  }

  // Arc containment; `len` of the outer interval must stay below P.
  bool within(const Params& p, const Interval& outer) const {
    return p.wrap((right - len) - (outer.right - outer.len)) + len <= outer.len;
  }
};

struct Bead {
  int l = 1;
  int i = 0;

  friend auto operator<=>(const Bead&, const Bead&) = default;
};

inline void check_bead(const Params& p, const Bead& b) {
  if (b.l < 1 || b.l > p.n)
    throw DomainError("bead type " + std::to_string(b.l) + " outside 1.." +
                      std::to_string(p.n));
  if (b.i < 0 || b.i >= p.P)
    throw DomainError("bead position " + std::to_string(b.i) +
                      " is not a residue mod " + std::to_string(p.P));
}

inline Bead make_bead(const Params& p, int l, std::int64_t i) {
  Bead b{l, p.wrap(i)};
  check_bead(p, b);
  return b;
}

inline int bead_length(const Params& p, const Bead& b) { return b.l * p.unit(); }
inline int left_end(const Params& p, const Bead& b) {
  return p.wrap(b.i - bead_length(p, b));
}

inline Interval interval_of(const Params& p, const Bead& b) {
  return {b.i, bead_length(p, b)};
}
inline Interval well_of(const Params& p, const Bead& b) {
  return {p.wrap(b.i - 1), bead_length(p, b) - 2};
}
inline Interval left_ridge(const Params& p, const Bead& b) {
  return {p.wrap(left_end(p, b) + 1), 1};
}
inline Interval right_ridge(const Params&, const Bead& b) { return {b.i, 1}; }

// Everything on the wire that is not strictly inside the bead.
inline Interval outside_of(const Params& p, const Bead& b) {
  return {left_end(p, b), p.P - bead_length(p, b)};
}

inline Bead shift(const Params& p, const Bead& b, std::int64_t k) {
  return {b.l, p.wrap(b.i + k)};
}

// Mirror image under x -> -x.
inline Bead reflect(const Params& p, const Bead& b) {
  return {b.l, p.wrap(-static_cast<std::int64_t>(b.i) + bead_length(p, b))};
}

inline Bead partner(const Params& p, const Bead& b) {
  return {p.n + 1 - b.l, p.wrap(b.i - bead_length(p, b) + 1)};
}

inline bool is_partner_pair(const Params& p, const Bead& a, const Bead& b) {
  return partner(p, a) == b;
}

// Two-point test: with r <= l, B_r(j) and B_l(i) are disjoint in the model
// iff [[j - r(d+2) + 1, j]] misses both i - l(d+2) + 1 and i.
inline bool overlaps(const Params& p, const Bead& b1, const Bead& b2) {
  const Bead& big = b1.l >= b2.l ? b1 : b2;
  const Bead& small = b1.l >= b2.l ? b2 : b1;
  const Interval probe{small.i, bead_length(p, small) - 1};
  return probe.contains(p, big.i - bead_length(p, big) + 1) ||
         probe.contains(p, big.i);
}

// Case analysis: the smaller bead sits in the well of the larger one or
// lies outside it (touching endpoints allowed).
inline bool overlaps_by_cases(const Params& p, const Bead& b1, const Bead& b2) {
  const Bead& big = b1.l >= b2.l ? b1 : b2;
  const Bead& small = b1.l >= b2.l ? b2 : b1;
  const Interval s = interval_of(p, small);
  if (s.within(p, well_of(p, big))) return false;
  if (s.within(p, outside_of(p, big))) return false;
  return true;
}

// Unordered pair {B_{(n+1)/2}(i), partner}; `i` is the smaller member position.
struct Circlet {
  int i = 0;

  friend auto operator<=>(const Circlet&, const Circlet&) = default;
};

inline Circlet circlet_of(const Params& p, const Bead& b) {
  if (!p.has_circlets()) throw DomainError("circlets need odd n");
  if (b.l != p.circlet_type())
    throw DomainError("circlet members have type " +
                      std::to_string(p.circlet_type()));
  const Bead q = partner(p, b);
  return {b.i < q.i ? b.i : q.i};
}

inline Circlet make_circlet(const Params& p, std::int64_t i) {
  return circlet_of(p, Bead{p.circlet_type(), p.wrap(i)});
}

inline Bead circlet_member(const Params& p, const Circlet& c) {
  return {p.circlet_type(), c.i};
}
inline Bead circlet_other_member(const Params& p, const Circlet& c) {
  return partner(p, circlet_member(p, c));
}

inline Circlet shift(const Params& p, const Circlet& c, std::int64_t k) {
  return make_circlet(p, c.i + k);
}

inline bool overlaps_circlet(const Params& p, const Bead& b, const Circlet& c) {
  const bool a = overlaps(p, b, circlet_member(p, c));
  const bool z = overlaps(p, b, circlet_other_member(p, c));
  if (b.l < p.circlet_type() && a != z)
    throw InvariantViolation("circlet members disagree on a short bead");
  return a || z;
}

}  // namespace beadlab

#endif  // BEADLAB_RING_HPP
