#ifndef BEADLAB_RENDER_HPP
#define BEADLAB_RENDER_HPP

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "beadlab/arrangement.hpp"
#include "beadlab/ring.hpp"

namespace beadlab {

// One column per lattice point 0..P (column P repeats point 0), one row per
// nesting level, outermost level at the bottom above the wire:
//   [ ]  bead endpoints, '|' where two endpoints touch
//   ^    inner end of a ridge
//   _    well
//   ~ #  circlet: the whole wire, '#' on its four ridge points
//   +    wire ticks, followed by a row of position digits (mod 10)
namespace detail {

inline void put(std::string& row, int col, char ch) {
  char& cell = row[col];
  if ((cell == ']' && ch == '[') || (cell == '[' && ch == ']'))
    cell = '|';
  else if (cell == ' ' || cell == '_' || cell == '~')
    cell = ch;
}

inline std::vector<int> columns_of(const Params& p, int x) {
  const int c = p.wrap(x);
  if (c == 0) return {0, p.P};
  return {c};
}

inline void draw_bead(const Params& p, std::string& row, const Bead& b) {
  const int len = bead_length(p, b);
  const int s = left_end(p, b);
  for (int t = 0; t <= len; ++t) {
    char ch = '_';
    if (t == 0) ch = '[';
    else if (t == len) ch = ']';
    else if (t == 1 || t == len - 1) ch = '^';
    const int x = s + t;
    if (x < p.P) {
      put(row, x, ch);
    } else if (x == p.P) {
      put(row, p.P, ch);
      if (s + len > p.P) put(row, 0, ch);
    } else {
      put(row, x - p.P, ch);
    }
  }
}

}  // namespace detail

inline std::string render(const Params& p, const std::vector<Entry>& entries) {
  const auto beads = expand(p, entries);
  bool circlet = false;
  for (const auto& e : entries) circlet = circlet || std::holds_alternative<Circlet>(e);
  std::vector<int> level(entries.size(), 1);
  int top = 1;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (std::holds_alternative<Circlet>(entries[k])) continue;
    for (std::size_t j = 0; j < entries.size(); ++j)
      if (j != k && std::holds_alternative<Bead>(entries[j]) &&
          nested_in(p, beads[k], beads[j]))
        ++level[k];
    if (circlet) ++level[k];
    top = std::max(top, level[k]);
  }
  std::vector<std::string> rows(top, std::string(p.P + 1, ' '));
  for (std::size_t k = 0; k < entries.size(); ++k) {
    std::string& row = rows[top - level[k]];
    if (const auto* c = std::get_if<Circlet>(&entries[k])) {
      std::fill(row.begin(), row.end(), '~');
      const Bead b = circlet_member(p, *c);
      const int s = left_end(p, b);
      for (int x : {s, s + 1, b.i - 1, b.i})
        for (int col : detail::columns_of(p, x)) row[col] = '#';
    } else {
      detail::draw_bead(p, row, std::get<Bead>(entries[k]));
    }
  }
  std::string out;
  for (auto& r : rows) {
    while (!r.empty() && r.back() == ' ') r.pop_back();
    out += r + "\n";
  }
  out += std::string(p.P + 1, '+') + "\n";
  for (int x = 0; x <= p.P; ++x) out += static_cast<char>('0' + x % 10);
  return out + "\n";
}

inline std::string render(const ColoredArrangement& a) {
  return render(a.params, std::vector<Entry>(a.beads.begin(), a.beads.end()));
}

inline std::string render(const ReducedColoredArrangement& a) {
  return render(a.params, a.entries);
}

}  // namespace beadlab

#endif  // BEADLAB_RENDER_HPP
