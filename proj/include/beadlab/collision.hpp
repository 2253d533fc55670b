#ifndef BEADLAB_COLLISION_HPP
#define BEADLAB_COLLISION_HPP

#include <optional>
#include <string>

#include "beadlab/ring.hpp"

namespace beadlab {

enum class CollisionKind { I, II, III };
enum class Side { Left, Right };

inline const char* to_string(CollisionKind k) {
  switch (k) {
    case CollisionKind::I: return "I";
    case CollisionKind::II: return "II";
    case CollisionKind::III: return "III";
  }
  return "?";
}

inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

// b1 is the bead that moved, b2 the one it ran into.
inline std::optional<CollisionKind> classify_collision(const Params& p, const Bead& b1,
                                                       const Bead& b2, Side side) {
  const int l1 = b1.l, l2 = b2.l;
  const int left1 = left_end(p, b1), left2 = left_end(p, b2);
  if (side == Side::Left) {
    if (b2.i == p.wrap(left1 + 1) && l1 + l2 <= p.n) return CollisionKind::I;
    if (left1 == left2 && l1 < l2) return CollisionKind::II;
    if (b1.i == b2.i && l2 < l1) return CollisionKind::III;
  } else {
    if (b1.i == p.wrap(left2 + 1) && l1 + l2 <= p.n) return CollisionKind::I;
    if (b1.i == b2.i && l1 < l2) return CollisionKind::II;
    if (left1 == left2 && l2 < l1) return CollisionKind::III;
  }
  return std::nullopt;
}

// I extends b1 over b2, II reflects b1 inside the well of b2, III shortens b1.
inline Bead mutate(const Params& p, const Bead& b1, const Bead& b2, CollisionKind kind,
                   Side side) {
  const auto found = classify_collision(p, b1, b2, side);
  if (!found || *found != kind)
    throw DomainError(std::string("mutate: beads do not have a Type ") +
                      to_string(kind) + " " + to_string(side) + " collision");
  const int u = p.unit();
  if (side == Side::Left) {
    switch (kind) {
      case CollisionKind::I: return make_bead(p, b1.l + b2.l, b1.i);
      case CollisionKind::II: return make_bead(p, b2.l - b1.l, b2.i - 1);
      case CollisionKind::III: return make_bead(p, b1.l - b2.l, b1.i - b2.l * u);
    }
  } else {
    switch (kind) {
      case CollisionKind::I: return make_bead(p, b1.l + b2.l, b1.i + b2.l * u);
      case CollisionKind::II: return make_bead(p, b2.l - b1.l, b2.i - b1.l * u + 1);
      case CollisionKind::III: return make_bead(p, b1.l - b2.l, b1.i);
    }
  }
  throw InvariantViolation("unreachable collision kind");
}

// Kind the stationary bead must have against the mutated one, one step further.
inline CollisionKind follow_up_kind(CollisionKind k) {
  switch (k) {
    case CollisionKind::I: return CollisionKind::II;
    case CollisionKind::II: return CollisionKind::III;
    case CollisionKind::III: return CollisionKind::I;
  }
  return k;
}

}  // namespace beadlab

#endif  // BEADLAB_COLLISION_HPP
