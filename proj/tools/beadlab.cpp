#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "beadlab/beadlab.hpp"

namespace {

using namespace beadlab;

constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;
constexpr int kExitUsage = 64;

struct Options {
  int n = 3;
  int d = 1;
  std::string input;
  bool json_out = false;
  bool oracle = false;
  std::size_t cap = kDefaultCap;
  std::vector<int> set;
  bool inverse = false;
  std::string tree;
  bool reduced = false;
  bool free = false;
  std::vector<int> from;
  std::vector<int> to;
};

json big(const BigInt& x) {
  if (x >= 0 && x <= BigInt(std::numeric_limits<std::int64_t>::max()))
    return static_cast<std::int64_t>(x);
  return x.str();
}

std::string show(const Bead& b) {
  return "B_" + std::to_string(b.l) + "(" + std::to_string(b.i) + ")";
}

std::string show(const Entry& e) {
  if (const auto* b = std::get_if<Bead>(&e)) return show(*b);
  return "C(" + std::to_string(std::get<Circlet>(e).i) + ")";
}

template <class Range>
std::string show_all(const Range& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + show(x);
  return out;
}

std::string show(const Generator& g) {
  std::string out;
  std::vector<int> xs;
  if (const auto* s = std::get_if<Subset>(&g)) {
    out = "S";
    xs = s->members;
  } else if (const auto* s = std::get_if<SubsetInverse>(&g)) {
    out = "S^-1";
    xs = s->members;
  } else {
    out = "sigma";
    xs = std::get<Permutation>(g).sigma;
  }
  out += "{";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out + "}";
}

std::string show(const IndecObject& x) {
  return "M_" + std::to_string(x.l) + "(" + std::to_string(x.shift) + ")";
}

json read_json(const std::string& path) {
  if (path.empty()) throw DomainError("--input FILE is required");
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return json::parse(in);
}

void emit(const Options& o, const json& body, const std::string& human) {
  if (o.json_out)
    std::cout << document(body).dump(2) << "\n";
  else
    std::cout << human;
}

int cmd_params(const Options& o) {
  const Params p = make_params(o.n, o.d);
  json j = {{"n", p.n}, {"d", p.d}, {"P", p.P}, {"unit", p.unit()}, {"w", p.w()},
            {"max_reduced_type", p.max_reduced_type()}};
  j["circlet_type"] = p.has_circlets() ? json(p.circlet_type()) : json(nullptr);
  std::ostringstream h;
  h << "n " << p.n << "\nd " << p.d << "\nP " << p.P << "\nunit " << p.unit() << "\nw "
    << p.w() << "\nmax reduced type " << p.max_reduced_type() << "\ncirclet type "
    << (p.has_circlets() ? std::to_string(p.circlet_type()) : "none") << "\n";
  emit(o, j, h.str());
  return 0;
}

int cmd_enumerate(const Options& o) {
  const Params p = make_params(o.n, o.d);
  json list = json::array();
  std::ostringstream h;
  std::size_t count = 0;
  auto add = [&](const json& entry, const std::string& line) {
    ++count;
    list.push_back(entry);
    h << line << "\n";
  };
  std::string kind;
  if (o.free && o.reduced) {
    kind = "free_reduced";
    for (const auto& [key, entries] : free_reduced_arrangements(p, o.cap)) {
      json beads = json::array();
      for (const auto& e : entries) beads.push_back(to_json(e));
      add(json{{"beads", beads}, {"class", class_of(p, entries)}},
          show_all(entries) + "  " + class_of(p, entries));
    }
  } else if (o.free) {
    kind = "free";
    for (const auto& [key, beads] : free_arrangements(p, o.cap)) {
      json js = json::array();
      for (const auto& b : beads) js.push_back(to_json(b));
      const auto code = rooted_code(associated_tree(p, beads));
      add(json{{"beads", js}, {"class", code}}, show_all(beads) + "  " + code);
    }
  } else if (o.reduced) {
    kind = "reduced_colored";
    for_each_reduced_colored(
        p,
        [&](const ReducedColoredArrangement& a) {
          add(to_json(a)["beads"], show_all(a.entries));
        },
        o.cap);
  } else {
    kind = "colored";
    for_each_colored(
        p, [&](const ColoredArrangement& a) { add(to_json(a)["beads"], show_all(a.beads)); },
        o.cap);
  }
  emit(o, {{"n", p.n}, {"d", p.d}, {"kind", kind}, {"count", count}, {"arrangements", list}},
       h.str() + "total " + std::to_string(count) + "\n");
  return 0;
}

int cmd_count(const Options& o) {
  const Params p = make_params(o.n, o.d);
  const CountReport r = totals(p, o.oracle, o.cap);
  json classes = json::array();
  std::ostringstream h;
  h << "class  N_T  |Aut|" << (o.oracle ? "  enumerated" : "") << "\n";
  for (const auto& [code, c] : r.classes) {
    json j = {{"class", code}, {"N_T", big(c.formula)}, {"automorphisms", c.automorphisms}};
    h << code << "  " << c.formula << "  " << c.automorphisms;
    if (o.oracle) {
      const BigInt seen = c.enumerated.value_or(0);
      j["enumerated"] = big(seen);
      h << "  " << seen;
    }
    classes.push_back(j);
    h << "\n";
  }
  json j = {{"n", p.n},
            {"d", p.d},
            {"classes", classes},
            {"rfba_formula", big(r.rfba_total)},
            {"rcba_formula", big(r.rcba_total)},
            {"rcba_symmetry_adjusted", big(r.rcba_symmetry_adjusted)}};
  h << "rfba formula " << r.rfba_total << "\nrcba formula " << r.rcba_total
    << "\nrcba symmetry-adjusted " << r.rcba_symmetry_adjusted << "\n";
  if (o.oracle) {
    j["rfba_enumerated"] = big(*r.rfba_oracle);
    j["rcba_enumerated"] = big(*r.rcba_oracle);
    j["matches"] = r.matches();
    h << "rfba enumerated " << *r.rfba_oracle << "\nrcba enumerated " << *r.rcba_oracle
      << "\n" << (r.matches() ? "MATCH" : "MISMATCH") << "\n";
  }
  emit(o, j, h.str());
  return o.oracle && !r.matches() ? kExitVerify : 0;
}

json tree_summary(const RootedPlaneTree& t, std::optional<int> d) {
  json roots = json::array();
  for (int v : balancing_roots(t)) roots.push_back(v);
  json j = {{"nested", tree_to_json(t)},
            {"ordered_code", ordered_code(t)},
            {"rooted_code", rooted_code(t)},
            {"class", unrooted_code(t)},
            {"automorphisms", automorphism_count(t)},
            {"balancing_roots", roots}};
  if (d) j["N_T"] = big(count_class(t, *d));
  return j;
}

int cmd_trees(const Options& o, bool d_given) {
  const std::optional<int> d = d_given ? std::optional<int>(o.d) : std::nullopt;
  std::ostringstream h;
  if (!o.tree.empty()) {
    const auto t = parse_tree(o.tree);
    const json j = tree_summary(t, d);
    h << "nested " << to_nested(t) << "\nordered code " << ordered_code(t) << "\nrooted code "
      << rooted_code(t) << "\nclass " << unrooted_code(t) << "\nautomorphisms "
      << automorphism_count(t) << "\nbalancing roots";
    for (int v : balancing_roots(t)) h << " " << v;
    h << "\n";
    if (d) h << "N_T " << count_class(t, *d) << "\n";
    emit(o, j, h.str());
    return 0;
  }
  if (o.n < 0) throw DomainError("edge count must be non-negative");
  const auto trees = o.reduced ? enumerate_rooted_plane_trees(o.n) : enumerate_plane_trees(o.n);
  json list = json::array();
  for (const auto& [code, t] : trees) {
    list.push_back(tree_summary(t, d));
    h << code << "  " << to_nested(t) << "  |Aut| " << automorphism_count(t);
    if (d) h << "  N_T " << count_class(t, *d);
    h << "\n";
  }
  h << "total " << trees.size() << "\n";
  emit(o,
       {{"n", o.n}, {"kind", o.reduced ? "rooted" : "unrooted"}, {"count", trees.size()},
        {"trees", list}},
       h.str());
  return 0;
}

int cmd_mutate(const Options& o) {
  const auto a = colored_from_json(read_json(o.input));
  const Generator g =
      o.inverse ? Generator{SubsetInverse{o.set}} : Generator{Subset{o.set}};
  const auto res = act_logged(a, g);
  json log = json::array();
  std::ostringstream h;
  h << "generator " << show(g) << "\nbefore " << show_all(a.beads) << "\n";
  for (const auto& c : res.log) {
    log.push_back(to_json(c));
    h << "Type " << to_string(c.kind) << " " << to_string(c.side) << ": " << show(c.before)
      << " against " << show(c.stationary) << " -> " << show(c.after) << "\n";
  }
  h << "after " << show_all(res.arrangement.beads) << "\n" << render(res.arrangement);
  emit(o,
       {{"generator", to_json(g)},
        {"before", to_json(a)},
        {"after", to_json(res.arrangement)},
        {"collisions", log},
        {"rigid", res.log.empty()}},
       h.str());
  return 0;
}

int cmd_orbit(const Options& o) {
  const ColoredArrangement start =
      o.input.empty() ? simples(make_params(o.n, o.d)) : colored_from_json(read_json(o.input));
  const Params& p = start.params;
  const auto res = orbit(start, o.cap);
  std::set<std::vector<IndecObject>> image;
  for (const auto& a : res.states) image.insert(phi(reduce(a)));
  json j = {{"n", p.n}, {"d", p.d}, {"start", to_json(start)}, {"states", res.states.size()},
            {"complete", res.complete}, {"tuples", image.size()}};
  std::ostringstream h;
  h << "start " << show_all(start.beads) << "\nstates " << res.states.size()
    << (res.complete ? "" : " (cap reached)") << "\northogonal tuples reached " << image.size()
    << "\n";
  bool ok = true;
  if (res.complete) {
    const auto all = enumerate_orthogonal_tuples(p);
    ok = image == all;
    j["orthogonal_tuples"] = all.size();
    j["transitive"] = ok;
    h << "orthogonal tuples " << all.size() << "\n" << (ok ? "TRANSITIVE" : "NOT TRANSITIVE")
      << "\n";
  }
  emit(o, j, h.str());
  return ok ? 0 : kExitVerify;
}

int cmd_realize(const Options& o) {
  if (o.tree.empty()) throw DomainError("--tree NESTED is required");
  const Params p = make_params(o.n, o.d);
  const auto real = realize_class(p, parse_tree(o.tree));
  json stages = json::array();
  std::ostringstream h;
  h << "word";
  for (const auto& g : real.word) h << " " << show(g);
  h << "\n";
  for (std::size_t k = 0; k < real.stages.size(); ++k) {
    stages.push_back(to_json(real.stages[k]));
    h << "stage " << k << ": " << show_all(real.stages[k].beads) << "\n";
  }
  h << render(real.arrangement);
  emit(o,
       {{"n", p.n},
        {"d", p.d},
        {"tree", tree_to_json(parse_tree(o.tree))},
        {"word", to_json(real.word)},
        {"stages", stages},
        {"arrangement", to_json(real.arrangement)}},
       h.str());
  return 0;
}

IndecObject object_arg(const Params& p, const std::vector<int>& v, const char* flag) {
  if (v.size() != 2) throw DomainError(std::string(flag) + " expects l,shift");
  return make_object(p, v[0], v[1]);
}

int cmd_hom(const Options& o) {
  const Params p = make_params(o.n, o.d);
  const auto x = object_arg(p, o.from, "--from");
  const auto y = object_arg(p, o.to, "--to");
  const int dim = hom_dim(p, x, y);
  emit(o, {{"n", p.n}, {"d", p.d}, {"from", to_json(x)}, {"to", to_json(y)}, {"hom", dim}},
       "dim Hom(" + show(x) + ", " + show(y) + ") = " + std::to_string(dim) + "\n");
  return 0;
}

int cmd_arc(const Options& o) {
  std::optional<ColoredArrangement> a;
  if (!o.input.empty()) a = colored_from_json(read_json(o.input));
  const Params p = a ? a->params : make_params(o.n, o.d);
  std::vector<Bead> beads;
  if (a) {
    beads = a->beads;
  } else {
    for (int l = 1; l <= p.max_reduced_type(); ++l)
      for (int i = 0; i < p.P; ++i) beads.push_back({l, i});
  }
  json list = json::array();
  std::ostringstream h;
  for (const auto& b : beads) {
    const auto g = arc_of(p, b);
    list.push_back({{"bead", to_json(b)}, {"diagonal", to_json(g)}});
    h << show(b) << "  (" << g.a << "," << g.b << ")\n";
  }
  json j = {{"n", p.n}, {"d", p.d}, {"arcs", list}};
  if (a) {
    json pairs = json::array();
    for (std::size_t x = 0; x < beads.size(); ++x)
      for (std::size_t y = x + 1; y < beads.size(); ++y) {
        const bool cross = diagonals_cross(p, arc_of(p, beads[x]), arc_of(p, beads[y]));
        pairs.push_back({{"pair", {x, y}}, {"cross", cross}});
        h << x << "," << y << (cross ? " cross\n" : " do not cross\n");
      }
    j["pairs"] = pairs;
  }
  emit(o, j, h.str());
  return 0;
}

int cmd_render(const Options& o) {
  const json in = read_json(o.input);
  std::string text;
  json body;
  if (has_circlet(in) || o.reduced) {
    const auto a = reduced_from_json(in);
    text = render(a);
    body = to_json(a);
  } else {
    const auto a = colored_from_json(in);
    text = render(a);
    body = to_json(a);
  }
  body["text"] = text;
  emit(o, body, text);
  return 0;
}

int cmd_verify(const Options& o) {
  const Params p = make_params(o.n, o.d);
  const auto results = verify_all(p);
  json list = json::array();
  std::ostringstream h;
  std::size_t failed = 0;
  for (const auto& r : results) {
    failed += r.ok ? 0 : 1;
    list.push_back({{"module", r.module}, {"check", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    h << (r.ok ? "PASS " : "FAIL ") << r.module << ": " << r.name;
    if (!r.ok) h << " (" << r.detail << ")";
    h << "\n";
  }
  h << results.size() - failed << "/" << results.size() << " checks passed\n";
  emit(o, {{"n", p.n}, {"d", p.d}, {"checks", list}, {"failed", failed}}, h.str());
  return failed ? kExitVerify : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beads on a circular wire: arrangements, counting, mutation and orbits"};
  app.require_subcommand(1);
  Options o;
  std::optional<std::size_t> cap;

  auto params = [&](CLI::App* c) {
    c->add_option("-n", o.n, "number of beads")->capture_default_str();
    c->add_option("-d", o.d, "grading parameter")->capture_default_str();
  };
  auto common = [&](CLI::App* c) {
    c->add_flag("--json", o.json_out, "emit JSON");
  };
  auto with_cap = [&](CLI::App* c) {
    c->add_option("--cap", cap, "state-space guard")->envname("BEADLAB_CAP");
  };

  auto* c_params = app.add_subcommand("params", "print derived parameters");
  params(c_params);
  common(c_params);

  auto* c_enum = app.add_subcommand("enumerate", "list arrangements");
  params(c_enum);
  common(c_enum);
  with_cap(c_enum);
  c_enum->add_flag("--reduced", o.reduced, "reduced arrangements with circlets");
  c_enum->add_flag("--free", o.free, "one representative per rotation class");

  auto* c_count = app.add_subcommand("count", "class counts and totals");
  params(c_count);
  common(c_count);
  with_cap(c_count);
  c_count->add_flag("--oracle", o.oracle, "compare against brute-force enumeration");

  auto* c_trees = app.add_subcommand("trees", "plane trees with n edges");
  params(c_trees);
  common(c_trees);
  c_trees->add_option("--tree", o.tree, "analyse one tree given in nested form");
  c_trees->add_flag("--reduced", o.reduced, "list rooted classes instead of unrooted ones");

  auto* c_mutate = app.add_subcommand("mutate", "apply one subset generator");
  common(c_mutate);
  c_mutate->add_option("--input", o.input, "arrangement JSON")->required();
  c_mutate->add_option("--set", o.set, "stationary colours")->delimiter(',');
  c_mutate->add_flag("--inverse", o.inverse, "apply the inverse generator");

  auto* c_orbit = app.add_subcommand("orbit", "orbit of an arrangement");
  params(c_orbit);
  common(c_orbit);
  with_cap(c_orbit);
  c_orbit->add_option("--input", o.input, "start arrangement (default: simples)");

  auto* c_realize = app.add_subcommand("realize", "word realizing a rooted class");
  params(c_realize);
  common(c_realize);
  c_realize->add_option("--tree", o.tree, "rooted plane tree, nested form")->required();

  auto* c_hom = app.add_subcommand("hom", "dimension of a Hom space");
  params(c_hom);
  common(c_hom);
  c_hom->add_option("--from", o.from, "source object l,shift")->delimiter(',')->required();
  c_hom->add_option("--to", o.to, "target object l,shift")->delimiter(',')->required();

  auto* c_arc = app.add_subcommand("arc", "diagonals of beads");
  params(c_arc);
  common(c_arc);
  c_arc->add_option("--input", o.input, "arrangement JSON (default: every reduced bead)");

  auto* c_render = app.add_subcommand("render", "ASCII drawing of an arrangement");
  common(c_render);
  c_render->add_option("--input", o.input, "arrangement JSON")->required();
  c_render->add_flag("--reduced", o.reduced, "read as a reduced arrangement");

  auto* c_verify = app.add_subcommand("verify", "run every property suite");
  params(c_verify);
  common(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  if (cap) o.cap = *cap;

  try {
    if (app.got_subcommand(c_params)) return cmd_params(o);
    if (app.got_subcommand(c_enum)) return cmd_enumerate(o);
    if (app.got_subcommand(c_count)) return cmd_count(o);
    if (app.got_subcommand(c_trees)) return cmd_trees(o, c_trees->count("-d") > 0);
    if (app.got_subcommand(c_mutate)) return cmd_mutate(o);
    if (app.got_subcommand(c_orbit)) return cmd_orbit(o);
    if (app.got_subcommand(c_realize)) return cmd_realize(o);
    if (app.got_subcommand(c_hom)) return cmd_hom(o);
    if (app.got_subcommand(c_arc)) return cmd_arc(o);
    if (app.got_subcommand(c_render)) return cmd_render(o);
    if (app.got_subcommand(c_verify)) return cmd_verify(o);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
