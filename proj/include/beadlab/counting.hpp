#ifndef BEADLAB_COUNTING_HPP
#define BEADLAB_COUNTING_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "beadlab/arrangement.hpp"
#include "beadlab/plane_tree.hpp"
#include "beadlab/ring.hpp"

namespace beadlab {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(int top, int k) {
  if (k < 0 || top < 0 || k > top) return 0;
  BigInt r = 1;
  for (int j = 1; j <= k; ++j) r = r * (top - k + j) / j;
  return r;
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int j = 2; j <= n; ++j) r *= j;
  return r;
}

// N_{T,r}: gap distributions around the root times those inside every bead.
inline BigInt count_class(const RootedPlaneTree& t, int d) {
  BigInt total = binomial(d + static_cast<int>(t.children[t.root].size()) - 1, d);
  for (int v = 0; v < t.size(); ++v)
    if (v != t.root) total *= binomial(d + static_cast<int>(t.children[v].size()), d);
  return total;
}

inline BigInt count_class_unrooted(const RootedPlaneTree& t, int d) {
  const BigInt first = count_class(t, d);
  for (int v = 0; v < t.size(); ++v)
    if (count_class(reroot(t, v), d) != first)
      throw InvariantViolation("N_{T,r} depends on the root");
  return first;
}

inline BigInt count_class_unrooted(const std::string& code, int d) {
  return count_class_unrooted(parse_tree(code), d);
}

struct ClassCount {
  BigInt formula;       // N_T
  int automorphisms = 1;
  std::optional<BigInt> enumerated;  // reduced free arrangements of this class
};

struct CountReport {
  Params params;
  std::map<std::string, ClassCount> classes;  // keyed by unrooted code
  BigInt rfba_total;                          // sum of N_T
  BigInt rcba_total;                          // n! * P * rfba_total
  // n! * P * sum N_T / |Aut T|; the exact colored count when rotations can fix arrangements.
  BigInt rcba_symmetry_adjusted;
  std::optional<BigInt> rfba_oracle;
  std::optional<BigInt> rcba_oracle;

  bool oracle_ran() const { return rfba_oracle.has_value(); }
  bool rfba_matches() const { return oracle_ran() && *rfba_oracle == rfba_total; }
  bool rcba_matches() const { return oracle_ran() && *rcba_oracle == rcba_total; }
  bool classes_match() const {
    for (const auto& [code, c] : classes)
      if (!c.enumerated || *c.enumerated != c.formula) return false;
    return oracle_ran();
  }
  bool matches() const { return rfba_matches() && rcba_matches() && classes_match(); }
};

// Plane tree class of a reduced arrangement.
inline std::string class_of(const Params& p, const std::vector<Entry>& entries) {
  return unrooted_code(associated_tree(p, expand(p, entries)));
}

inline CountReport totals(const Params& p, bool with_oracle, std::size_t cap = kDefaultCap) {
  CountReport r;
  r.params = p;
  const BigInt colorings = factorial(p.n) * p.P;
  BigInt adjusted = 0;
  for (const auto& [code, t] : enumerate_plane_trees(p.n)) {
    ClassCount c;
    c.formula = count_class_unrooted(t, p.d);
    c.automorphisms = automorphism_count(t);
    r.rfba_total += c.formula;
    adjusted += colorings * c.formula / c.automorphisms;
    r.classes.emplace(code, c);
  }
  r.rcba_total = colorings * r.rfba_total;
  r.rcba_symmetry_adjusted = adjusted;
  if (with_oracle) {
    BigInt uncolored = 0;
    for_each_reduced_set(p, [&](const std::vector<Entry>&) { ++uncolored; }, cap);
    r.rcba_oracle = uncolored * factorial(p.n);
    BigInt free_total = 0;
    for (const auto& [key, entries] : free_reduced_arrangements(p, cap)) {
      ++free_total;
      auto& slot = r.classes[class_of(p, entries)].enumerated;
      slot = slot.value_or(0) + 1;
    }
    r.rfba_oracle = free_total;
  }
  return r;
}

}  // namespace beadlab

#endif  // BEADLAB_COUNTING_HPP
