#ifndef BEADLAB_PLANE_TREE_HPP
#define BEADLAB_PLANE_TREE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "beadlab/errors.hpp"

namespace beadlab {

// Children sequences give the plane structure. Children of the root are read
// cyclically, children of any other vertex linearly (the parent edge is the cut).
struct RootedPlaneTree {
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  int root = 0;

  int size() const { return static_cast<int>(parent.size()); }
  int edges() const { return size() - 1; }

  friend bool operator==(const RootedPlaneTree&, const RootedPlaneTree&) = default;
};

inline int add_vertex(RootedPlaneTree& t, int parent) {
  const int v = t.size();
  t.parent.push_back(parent);
  t.children.emplace_back();
  if (parent >= 0) t.children[parent].push_back(v);
  return v;
}

inline std::vector<int> weights(const RootedPlaneTree& t) {
  std::vector<int> w(t.size(), 1);
  std::vector<int> order{t.root};
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int c : t.children[order[k]]) order.push_back(c);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (t.parent[*it] >= 0) w[t.parent[*it]] += w[*it];
  return w;
}

inline int weight(const RootedPlaneTree& t, int v) { return weights(t)[v]; }

inline int depth(const RootedPlaneTree& t, int v) {
  int k = 0;
  for (; v != t.root; v = t.parent[v]) ++k;
  return k;
}

inline bool is_balanced(const RootedPlaneTree& t) {
  const auto w = weights(t);
  const int bound = (t.edges() + 1) / 2;
  for (int c : t.children[t.root])
    if (w[c] > bound) return false;
  return true;
}

// Neighbours of v in their cyclic order around v.
inline std::vector<int> cyclic_neighbours(const RootedPlaneTree& t, int v) {
  std::vector<int> nb;
  if (v != t.root) nb.push_back(t.parent[v]);
  nb.insert(nb.end(), t.children[v].begin(), t.children[v].end());
  return nb;
}

// Same plane tree rooted at v; vertex ids are kept.
inline RootedPlaneTree reroot(const RootedPlaneTree& t, int v) {
  RootedPlaneTree out;
  out.parent.assign(t.size(), -1);
  out.children.assign(t.size(), {});
  out.root = v;
  out.children[v] = cyclic_neighbours(t, v);
  std::vector<int> stack = out.children[v];
  for (int c : stack) out.parent[c] = v;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    auto nb = cyclic_neighbours(t, x);
    const auto at = std::find(nb.begin(), nb.end(), out.parent[x]);
    std::rotate(nb.begin(), at, nb.end());
    out.children[x].assign(nb.begin() + 1, nb.end());
    for (int c : out.children[x]) {
      out.parent[c] = x;
      stack.push_back(c);
    }
  }
  return out;
}

inline RootedPlaneTree rebalance_root(const RootedPlaneTree& t, int r, int v) {
  if (r != t.root) throw DomainError("rebalance_root: r is not the root");
  const auto& c = t.children[r];
  if (std::find(c.begin(), c.end(), v) == c.end())
    throw DomainError("rebalance_root: v is not a child of the root");
  return reroot(t, v);
}

// Greedy walk toward the heaviest child until balanced.
inline std::vector<int> balancing_roots_from(const RootedPlaneTree& t, int start) {
  const int n = t.edges();
  const int bound = (n + 1) / 2;
  RootedPlaneTree cur = reroot(t, start);
  for (int steps = 0;; ++steps) {
    if (steps > t.size()) throw InvariantViolation("balancing walk did not stop");
    const auto w = weights(cur);
    int heavy = -1;
    for (int c : cur.children[cur.root])
      if (heavy < 0 || w[c] > w[heavy]) heavy = c;
    if (heavy < 0 || w[heavy] <= bound) {
      std::vector<int> roots{cur.root};
      if (n % 2 == 1 && w[heavy] == (n + 1) / 2) roots.push_back(heavy);
      std::sort(roots.begin(), roots.end());
      return roots;
    }
    cur = reroot(cur, heavy);
  }
}

inline std::vector<int> balancing_roots(const RootedPlaneTree& t) {
  return balancing_roots_from(t, t.root);
}

namespace detail {

inline std::string vertex_code(const RootedPlaneTree& t, int v) {
  std::string s = "(";
  for (int c : t.children[v]) s += vertex_code(t, c);
  return s + ")";
}

inline std::vector<std::string> child_codes(const RootedPlaneTree& t, int v) {
  std::vector<std::string> out;
  for (int c : t.children[v]) out.push_back(vertex_code(t, c));
  return out;
}

inline std::string join(const std::vector<std::string>& parts, std::size_t from) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += parts[(from + k) % parts.size()];
  return s;
}

}  // namespace detail

// Code with the root's children read linearly, exactly as stored.
inline std::string ordered_code(const RootedPlaneTree& t) {
  return detail::vertex_code(t, t.root);
}

// Class of (T, r): the root's children rotated to the least concatenation.
inline std::string rooted_code(const RootedPlaneTree& t) {
  const auto parts = detail::child_codes(t, t.root);
  std::string best = detail::join(parts, 0);
  for (std::size_t k = 1; k < parts.size(); ++k)
    best = std::min(best, detail::join(parts, k));
  return "(" + best + ")";
}

// Class of the underlying plane tree.
inline std::string unrooted_code(const RootedPlaneTree& t) {
  std::string best;
  for (int r : balancing_roots(t)) {
    const std::string c = rooted_code(reroot(t, r));
    if (best.empty() || c < best) best = c;
  }
  return best;
}

// Plane automorphisms of the unrooted tree.
inline int automorphism_count(const RootedPlaneTree& t) {
  const auto roots = balancing_roots(t);
  const RootedPlaneTree at = reroot(t, roots.front());
  const auto parts = detail::child_codes(at, at.root);
  int rotations = 0;
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (detail::join(parts, k) == detail::join(parts, 0)) ++rotations;
  if (roots.size() == 2 &&
      rooted_code(reroot(t, roots[0])) == rooted_code(reroot(t, roots[1])))
    rotations *= 2;
  return rotations;
}

// Parses a code "(()(()))" or the JSON form "[[],[[]]]".
inline RootedPlaneTree parse_tree(std::string_view text) {
  RootedPlaneTree t;
  std::vector<int> open;
  bool done = false;
  for (char ch : text) {
    if (ch == '(' || ch == '[') {
      if (done) throw DomainError("tree text has trailing content");
      open.push_back(add_vertex(t, open.empty() ? -1 : open.back()));
    } else if (ch == ')' || ch == ']') {
      if (open.empty()) throw DomainError("unbalanced tree text");
      open.pop_back();
      if (open.empty()) done = true;
    } else if (ch != ',' && ch != ' ' && ch != '\n' && ch != '\t') {
      throw DomainError(std::string("unexpected character in tree text: ") + ch);
    }
  }
  if (!done || !open.empty()) throw DomainError("unbalanced tree text");
  return t;
}

inline std::string to_nested(const RootedPlaneTree& t) {
  std::function<std::string(int)> go = [&](int v) {
    std::string s = "[";
    for (std::size_t k = 0; k < t.children[v].size(); ++k) {
      if (k) s += ",";
      s += go(t.children[v][k]);
    }
    return s + "]";
  };
  return go(t.root);
}

inline std::string code_to_nested(const std::string& code) {
  return to_nested(parse_tree(code));
}

// All trees with n edges and a linear order at the root (Catalan many).
inline std::vector<RootedPlaneTree> enumerate_ordered_trees(int n, std::size_t cap = 2'000'000) {
  if (n < 0) throw DomainError("negative edge count");
  std::vector<RootedPlaneTree> out;
  std::string word;
  std::function<void(int, int)> go = [&](int opened, int depth) {
    if (static_cast<int>(word.size()) == 2 * n) {
      if (out.size() >= cap) throw CapExceeded(cap);
      out.push_back(parse_tree("(" + word + ")"));
      return;
    }
    if (opened < n) {
      word.push_back('(');
      go(opened + 1, depth + 1);
      word.pop_back();
    }
    if (depth > 0) {
      word.push_back(')');
      go(opened, depth - 1);
      word.pop_back();
    }
  };
  go(0, 0);
  return out;
}

// One representative per rooted plane tree class (T, r), keyed by rooted_code.
inline std::map<std::string, RootedPlaneTree> enumerate_rooted_plane_trees(int n) {
  std::map<std::string, RootedPlaneTree> out;
  for (auto& t : enumerate_ordered_trees(n)) out.emplace(rooted_code(t), t);
  return out;
}

// One representative per plane tree class, rooted at a balancing root.
inline std::map<std::string, RootedPlaneTree> enumerate_plane_trees(int n) {
  std::map<std::string, RootedPlaneTree> out;
  for (auto& [code, t] : enumerate_rooted_plane_trees(n)) {
    const std::string u = unrooted_code(t);
    if (!out.count(u)) out.emplace(u, parse_tree(u));
  }
  return out;
}

}  // namespace beadlab

#endif  // BEADLAB_PLANE_TREE_HPP
