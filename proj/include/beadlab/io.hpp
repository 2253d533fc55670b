#ifndef BEADLAB_IO_HPP
#define BEADLAB_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "beadlab/action.hpp"
#include "beadlab/arrangement.hpp"
#include "beadlab/catmodel.hpp"
#include "beadlab/plane_tree.hpp"
#include "beadlab/ring.hpp"

namespace beadlab {

using nlohmann::json;

inline constexpr const char* kSchema = "bead-lab/1";

inline json to_json(const Bead& b) { return {{"l", b.l}, {"i", b.i}}; }
inline json to_json(const Circlet& c) { return {{"circlet", c.i}}; }
inline json to_json(const Entry& e) {
  return std::visit([](const auto& x) { return to_json(x); }, e);
}
inline json to_json(const IndecObject& x) { return {{"l", x.l}, {"shift", x.shift}}; }
inline json to_json(const Diagonal& g) { return json::array({g.a, g.b}); }

inline json to_json(const ColoredArrangement& a) {
  json beads = json::array();
  for (const auto& b : a.beads) beads.push_back(to_json(b));
  return {{"n", a.params.n}, {"d", a.params.d}, {"beads", beads}};
}

inline json to_json(const ReducedColoredArrangement& a) {
  json beads = json::array();
  for (const auto& e : a.entries) beads.push_back(to_json(e));
  return {{"n", a.params.n}, {"d", a.params.d}, {"beads", beads}};
}

inline json to_json(const Generator& g) {
  if (const auto* s = std::get_if<Subset>(&g)) return {{"subset", s->members}};
  if (const auto* s = std::get_if<SubsetInverse>(&g)) return {{"subset_inverse", s->members}};
  return {{"permutation", std::get<Permutation>(g).sigma}};
}

inline json to_json(const GroupWord& w) {
  json out = json::array();
  for (const auto& g : w) out.push_back(to_json(g));
  return out;
}

inline json to_json(const CollisionReport& r) {
  return {{"moved_index", r.moved_index},
          {"stationary_index", r.stationary_index},
          {"kind", to_string(r.kind)},
          {"side", to_string(r.side)},
          {"before", to_json(r.before)},
          {"after", to_json(r.after)},
          {"triangle", json::array({to_json(r.triangle.first), to_json(r.triangle.second),
                                    to_json(r.triangle.third)})}};
}

inline json document(json body) {
  json out = {{"schema", kSchema}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

inline Params params_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("d")) throw DomainError("missing \"n\" or \"d\"");
  return make_params(j.at("n").get<int>(), j.at("d").get<int>());
}

inline Entry entry_from_json(const Params& p, const json& j) {
  if (j.contains("circlet"))
    return Entry{std::in_place_type<Circlet>, make_circlet(p, j.at("circlet").get<int>())};
  if (!j.contains("l") || !j.contains("i")) throw DomainError("bead needs \"l\" and \"i\"");
  return Entry{std::in_place_type<Bead>, make_bead(p, j.at("l").get<int>(), j.at("i").get<int>())};
}

inline bool has_circlet(const json& j) {
  for (const auto& e : j.at("beads"))
    if (e.contains("circlet")) return true;
  return false;
}

inline ColoredArrangement colored_from_json(const json& j) {
  const Params p = params_from_json(j);
  std::vector<Bead> beads;
  for (const auto& e : j.at("beads")) {
    const Entry x = entry_from_json(p, e);
    if (!std::holds_alternative<Bead>(x))
      throw DomainError("a colored arrangement cannot contain a circlet");
    beads.push_back(std::get<Bead>(x));
  }
  return validate(p, std::move(beads));
}

inline ReducedColoredArrangement reduced_from_json(const json& j) {
  const Params p = params_from_json(j);
  std::vector<Entry> entries;
  for (const auto& e : j.at("beads")) entries.push_back(entry_from_json(p, e));
  return validate_reduced(p, std::move(entries));
}

inline json tree_to_json(const RootedPlaneTree& t) { return json::parse(to_nested(t)); }

}  // namespace beadlab

#endif  // BEADLAB_IO_HPP
