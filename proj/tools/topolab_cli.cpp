// topolab command-line tool. Talks to the library only through topolab.h.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "topolab/topolab.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct CliError {
  std::string message;
};

struct SpaceDel {
  void operator()(tl_space* s) const { tl_space_free(s); }
};
struct GroupDel {
  void operator()(tl_group* g) const { tl_group_free(g); }
};
struct IsetDel {
  void operator()(tl_iset* s) const { tl_iset_free(s); }
};
struct LineDel {
  void operator()(tl_line* t) const { tl_line_free(t); }
};
using Space = std::unique_ptr<tl_space, SpaceDel>;
using Group = std::unique_ptr<tl_group, GroupDel>;
using Iset = std::unique_ptr<tl_iset, IsetDel>;
using Line = std::unique_ptr<tl_line, LineDel>;

void check(tl_status st, const std::string& input) {
  if (st == TL_OK) return;
  std::string msg = std::string(tl_status_name(st)) + ": " + tl_last_error();
  if (!input.empty()) msg += "\n  input: " + input;
  throw CliError{msg};
}

// Takes ownership of a library-allocated string.
std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  tl_string_free(s);
  return out;
}

bool styled() {
  const char* env = std::getenv("TOPOLAB_COLOR");
  if (env != nullptr && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO) != 0;
}

std::string bold(const std::string& s) { return styled() ? "\033[1m" + s + "\033[0m" : s; }

std::string verdict_word(bool ok) {
  if (!styled()) return ok ? "true" : "false";
  return ok ? "\033[32mtrue\033[0m" : "\033[31mfalse\033[0m";
}

// --in accepts a path or the JSON text itself.
std::string load_text(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw CliError{"cannot read file: " + arg};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Space load_space(const std::string& arg) {
  tl_space* s = nullptr;
  check(tl_space_from_json(load_text(arg).c_str(), &s), arg);
  return Space(s);
}

Group load_group(const std::string& arg, int cyclic) {
  tl_group* g = nullptr;
  if (!arg.empty()) {
    check(tl_group_from_json(load_text(arg).c_str(), &g), arg);
  } else if (cyclic > 0) {
    check(tl_group_cyclic(cyclic, &g), "--cyclic " + std::to_string(cyclic));
  } else {
    throw CliError{"a group is required: --group FILE or --cyclic N"};
  }
  return Group(g);
}

tl_points parse_points(const tl_space* s, const std::string& text) {
  tl_points out = 0;
  check(tl_space_parse_points(s, text.c_str(), &out), text);
  return out;
}

// "0;0,1" -> two sets.
std::vector<tl_points> parse_point_family(const tl_space* s, const std::string& text) {
  std::vector<tl_points> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ';')) out.push_back(parse_points(s, item));
  return out;
}

json points_json(tl_points p) {
  json arr = json::array();
  for (int x = 0; x < 32; ++x) {
    if ((p >> x) & 1u) arr.push_back(x);
  }
  return arr;
}

std::string points_text(tl_points p) {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < 32; ++x) {
    if (((p >> x) & 1u) == 0) continue;
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

json space_json(const tl_space* s) {
  char* text = nullptr;
  check(tl_space_to_json(s, &text), "");
  return json::parse(take(text));
}

json opens_of(const tl_space* s) {
  char* text = nullptr;
  check(tl_space_analyze_json(s, &text), "");
  return json::parse(take(text)).at("opens");
}

Iset load_iset(const std::string& text) {
  tl_iset* s = nullptr;
  check(tl_iset_parse(text.c_str(), &s), text);
  return Iset(s);
}

Line load_line(const std::string& text) {
  tl_line* t = nullptr;
  check(tl_line_parse(text.c_str(), &t), text);
  return Line(t);
}

std::string iset_text(const tl_iset* s) {
  char* text = nullptr;
  check(tl_iset_to_string(s, &text), "");
  return take(text);
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// Aligned "key  value" lines.
void print_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  for (const auto& [k, v] : rows) std::cout << bold(k) << std::string(w - k.size() + 2, ' ') << v << '\n';
}

std::string family_text(const json& fam) {
  std::string out;
  for (const auto& set : fam) {
    if (!out.empty()) out += " ";
    std::string s = "{";
    for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + std::to_string(set[i].get<int>());
    out += s + "}";
  }
  return out;
}

struct Options {
  std::string in, in2, set, ideal, topology, topology2, a, b, theorem, group, gamma, base;
  int n = 3;
  int jobs = 1;
  int cyclic = 0;
  bool json_out = false;
  bool strict = false;
  bool large = false;
  bool force = false;
  bool timing = false;
};

// Boolean answers: exit 1 on false only under --strict.
int emit_bool(const Options& o, const std::string& query, bool value, json extra = json::object()) {
  if (o.json_out) {
    extra["query"] = query;
    extra["result"] = value;
    print_json(extra);
  } else {
    std::cout << verdict_word(value) << '\n';
  }
  return (!value && o.strict) ? kExitFalse : kExitOk;
}

int run_space_analyze(const Options& o) {
  Space s = load_space(o.in);
  char* text = nullptr;
  check(tl_space_analyze_json(s.get(), &text), o.in);
  const json r = json::parse(take(text));
  if (o.json_out) {
    print_json(r);
    return kExitOk;
  }
  const json& sep = r.at("separation");
  std::string axioms;
  for (const char* k : {"T0", "T1", "T2"}) {
    if (sep.at(k).get<bool>()) axioms += std::string(axioms.empty() ? "" : " ") + k;
  }
  print_table({
      {"points", std::to_string(r.at("space").at("n").get<int>())},
      {"min_nbhds", family_text(r.at("space").at("min_nbhds"))},
      {"opens", family_text(r.at("opens"))},
      {"separation", axioms.empty() ? "none" : axioms},
      {"density", std::to_string(r.at("density").get<int>())},
      {"isolated", family_text(json::array({r.at("isolated_points")}))},
      {"connected", r.at("is_connected").get<bool>() ? "true" : "false"},
      {"baire space", r.at("is_baire").get<bool>() ? "true" : "false"},
      {"largest nwd", family_text(json::array({r.at("nwd_max")}))},
  });
  return kExitOk;
}

int run_space_op(const Options& o, const std::string& op) {
  Space s = load_space(o.in);
  auto need_set = [&]() {
    if (o.set.empty()) throw CliError{"space op " + op + " needs --set"};
    return parse_points(s.get(), o.set);
  };
  if (op == "interior" || op == "closure") {
    const tl_points a = need_set();
    tl_points r = 0;
    check(op == "interior" ? tl_space_interior(s.get(), a, &r) : tl_space_closure(s.get(), a, &r), o.set);
    if (o.json_out) {
      print_json({{"query", op}, {"set", points_json(a)}, {"result", points_json(r)}});
    } else {
      std::cout << points_text(r) << '\n';
    }
    return kExitOk;
  }
  if (op == "density") {
    int d = 0;
    check(tl_space_density(s.get(), &d), o.in);
    if (o.json_out) {
      print_json({{"query", op}, {"result", d}});
    } else {
      std::cout << d << '\n';
    }
    return kExitOk;
  }
  if (op == "connected") {
    int c = 0;
    check(tl_space_is_connected(s.get(), &c), o.in);
    return emit_bool(o, op, c != 0);
  }
  tl_set_test test = TL_TEST_OPEN;
  if (op == "nwd") {
    test = TL_TEST_NOWHERE_DENSE;
  } else if (op == "meager") {
    test = TL_TEST_MEAGER;
  } else if (op == "baire") {
    test = TL_TEST_BAIRE_PROPERTY;
  } else if (op == "semiopen") {
    test = TL_TEST_SEMI_OPEN;
  } else {
    throw CliError{"unknown space op: " + op};
  }
  const tl_points a = need_set();
  int r = 0;
  check(tl_space_test(s.get(), test, a, &r), o.set);
  return emit_bool(o, op, r != 0, {{"set", points_json(a)}});
}

int run_pair(const Options& o, const std::string& op) {
  if (o.in2.empty()) throw CliError{"pair commands need --in and --in2"};
  Space tau = load_space(o.in);
  Space sigma = load_space(o.in2);
  if (op == "pi-compat") {
    int r = 0;
    check(tl_pair_pi_compatible(tau.get(), sigma.get(), &r), o.in + " / " + o.in2);
    return emit_bool(o, op, r != 0);
  }
  if (op == "admissible") {
    int r = 0;
    check(tl_pair_admissible(tau.get(), sigma.get(), &r), o.in + " / " + o.in2);
    return emit_bool(o, op, r != 0);
  }
  if (op == "decompose") {
    if (o.set.empty()) throw CliError{"pair decompose needs --set"};
    const tl_points set = parse_points(tau.get(), o.set);
    tl_points v = 0;
    tl_points m = 0;
    check(tl_pair_decompose(tau.get(), sigma.get(), set, &v, &m), o.set);
    if (o.json_out) {
      print_json({{"set", points_json(set)}, {"open_part", points_json(v)}, {"nowhere_dense_part", points_json(m)}});
    } else {
      print_table({{"open part", points_text(v)}, {"nowhere dense part", points_text(m)}});
    }
    return kExitOk;
  }
  if (op == "meet") {
    tl_space* raw = nullptr;
    check(tl_pair_meet(tau.get(), sigma.get(), &raw), o.in + " / " + o.in2);
    Space m(raw);
    if (o.json_out) {
      print_json({{"space", space_json(m.get())}, {"opens", opens_of(m.get())}});
    } else {
      print_table({{"min_nbhds", family_text(space_json(m.get()).at("min_nbhds"))},
                   {"opens", family_text(opens_of(m.get()))}});
    }
    return kExitOk;
  }
  throw CliError{"unknown pair op: " + op};
}

int run_star(const Options& o) {
  Space s = load_space(o.in);
  const tl_points ideal = parse_points(s.get(), o.ideal);
  tl_space* raw = nullptr;
  check(tl_star_topology(s.get(), ideal, &raw), o.ideal);
  Space star(raw);
  int admissible = 0;
  tl_points witness = 0;
  check(tl_star_admissible(s.get(), ideal, &admissible, &witness), o.ideal);
  json out{{"ideal", points_json(ideal)},
           {"star_topology", space_json(star.get())},
           {"opens", opens_of(star.get())},
           {"admissible", admissible != 0},
           {"witness", admissible != 0 ? json(nullptr) : points_json(witness)}};
  std::vector<std::pair<std::string, std::string>> rows{
      {"ideal", "P(" + points_text(ideal) + ")"},
      {"star opens", family_text(out.at("opens"))},
      {"admissible", admissible != 0 ? "true" : "false"},
  };
  if (admissible == 0) rows.emplace_back("witness", points_text(witness));
  if (!o.set.empty()) {
    const tl_points a = parse_points(s.get(), o.set);
    tl_points local = 0;
    tl_points cl = 0;
    check(tl_local_function(s.get(), ideal, a, &local), o.set);
    check(tl_star_closure(s.get(), ideal, a, &cl), o.set);
    out["set"] = points_json(a);
    out["local_function"] = points_json(local);
    out["star_closure"] = points_json(cl);
    rows.emplace_back("local function", points_text(local));
    rows.emplace_back("star closure", points_text(cl));
  }
  if (o.json_out) {
    print_json(out);
  } else {
    print_table(rows);
  }
  return (admissible == 0 && o.strict) ? kExitFalse : kExitOk;
}

int run_alpha(const Options& o) {
  Space s = load_space(o.in);
  tl_space* raw = nullptr;
  check(tl_alpha_topology(s.get(), &raw), o.in);
  Space alpha(raw);
  tl_points nwd = 0;
  check(tl_nwd_ideal(s.get(), &nwd), o.in);
  if (o.json_out) {
    print_json({{"alpha_topology", space_json(alpha.get())},
                {"opens", opens_of(alpha.get())},
                {"nwd_ideal", points_json(nwd)}});
  } else {
    print_table({{"alpha opens", family_text(opens_of(alpha.get()))}, {"nwd ideal", "P(" + points_text(nwd) + ")"}});
  }
  return kExitOk;
}

int run_enumerate(const Options& o) {
  std::size_t count = 0;
  check(tl_enumerate_count(o.n, &count), "--n " + std::to_string(o.n));
  if (o.json_out) {
    char* text = nullptr;
    check(tl_enumerate_json(o.n, &text), "");
    print_json({{"n", o.n}, {"count", count}, {"spaces", json::parse(take(text))}});
  } else {
    std::cout << count << '\n';
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  char* text = nullptr;
  int verified = 0;
  check(tl_verify(o.theorem.c_str(), o.n, o.jobs, o.large ? 1 : 0, &text, &verified),
        "--theorem " + o.theorem + " --n " + std::to_string(o.n));
  json r = json::parse(take(text));
  if (o.json_out) {
    // Wall time would break byte-identical output across runs.
    if (!o.timing) r.erase("elapsed_ms");
    print_json(r);
  } else {
    print_table({{"theorem", r.at("theorem").get<std::string>()},
                 {"n", std::to_string(r.at("n").get<int>())},
                 {"instances", std::to_string(r.at("instances").get<long long>())},
                 {"counterexamples", std::to_string(r.at("counterexample_count").get<long long>())},
                 {"elapsed", std::to_string(r.at("elapsed_ms").get<long long>()) + " ms"},
                 {"verdict", r.at("verdict").get<std::string>()}});
    for (const auto& c : r.at("counterexamples")) std::cout << c.dump() << '\n';
  }
  return verified != 0 ? kExitOk : kExitFalse;
}

int run_theorems(const Options& o) {
  char* text = nullptr;
  check(tl_theorems_json(&text), "");
  const json r = json::parse(take(text));
  if (o.json_out) {
    print_json(r);
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& t : r) rows.emplace_back(t.at("id").get<std::string>(), t.at("claim").get<std::string>());
  print_table(rows);
  return kExitOk;
}

int run_search(const Options& o) {
  char* text = nullptr;
  int found = 0;
  check(tl_search(o.theorem.c_str(), o.n, o.large ? 1 : 0, &text, &found),
        "--predicate " + o.theorem + " --n " + std::to_string(o.n));
  const json r = json::parse(take(text));
  if (o.json_out) {
    print_json(r);
  } else if (found == 0) {
    std::cout << "no witness at n = " << o.n << '\n';
  } else {
    std::cout << "witness: " << r.at("witness").at("note").get<std::string>() << '\n';
    for (const auto& [role, sp] : r.at("witness").at("spaces").items()) {
      std::cout << "  " << bold(role) << "  " << sp.dump() << '\n';
    }
  }
  return found != 0 ? kExitFalse : kExitOk;
}

int run_realline(const Options& o, const std::string& op) {
  if (op == "closure" || op == "interior" || op == "semiopen") {
    if (o.topology.empty() || o.set.empty()) throw CliError{"realline " + op + " needs --topology and --set"};
    Line t = load_line(o.topology);
    Iset s = load_iset(o.set);
    if (op == "semiopen") {
      int r = 0;
      check(tl_rl_semi_open(t.get(), s.get(), &r), o.set);
      return emit_bool(o, op, r != 0, {{"topology", o.topology}, {"set", iset_text(s.get())}});
    }
    tl_iset* raw = nullptr;
    check(op == "closure" ? tl_rl_closure(t.get(), s.get(), &raw) : tl_rl_interior(t.get(), s.get(), &raw), o.set);
    Iset r(raw);
    if (o.json_out) {
      print_json({{"query", op}, {"topology", o.topology}, {"set", iset_text(s.get())}, {"result", iset_text(r.get())}});
    } else {
      std::cout << iset_text(r.get()) << '\n';
    }
    return kExitOk;
  }
  if (op == "compare") {
    if (o.a.empty() || o.b.empty()) throw CliError{"realline compare needs --a and --b"};
    Iset a = load_iset(o.a);
    Iset b = load_iset(o.b);
    tl_order ord = TL_ORDER_EQUAL;
    check(tl_rl_hattori_compare(a.get(), b.get(), &ord), o.a + " / " + o.b);
    static const char* const names[] = {"equal", "finer", "coarser", "incomparable"};
    const std::string word = names[ord];
    if (o.json_out) {
      print_json({{"a", iset_text(a.get())}, {"b", iset_text(b.get())}, {"relation", word}});
    } else {
      std::cout << "tau(a) is " << word << (ord == TL_ORDER_EQUAL || ord == TL_ORDER_INCOMPARABLE ? "" : " than")
                << (ord == TL_ORDER_EQUAL ? " to" : ord == TL_ORDER_INCOMPARABLE ? " with" : "") << " tau(b)\n";
    }
    return kExitOk;
  }
  if (op == "pi-compat" || op == "admissible") {
    if (o.topology.empty() || o.topology2.empty()) throw CliError{"realline " + op + " needs --topology and --topology2"};
    Line t1 = load_line(o.topology);
    Line t2 = load_line(o.topology2);
    int r = 0;
    const std::string input = o.topology + " / " + o.topology2;
    check(op == "pi-compat" ? tl_rl_pi_compatible(t1.get(), t2.get(), &r) : tl_rl_admissible(t1.get(), t2.get(), &r),
          input);
    return emit_bool(o, op, r != 0, {{"topology", o.topology}, {"topology2", o.topology2}});
  }
  if (op == "clopen") {
    if (o.a.empty()) throw CliError{"realline clopen needs --a"};
    Iset a = load_iset(o.a);
    tl_iset* raw = nullptr;
    check(tl_rl_clopen_witness(a.get(), &raw), o.a);
    Iset w(raw);
    if (o.json_out) {
      print_json({{"a", iset_text(a.get())}, {"witness", w ? json(iset_text(w.get())) : json(nullptr)}});
    } else {
      std::cout << (w ? iset_text(w.get()) : std::string("none")) << '\n';
    }
    return (!w && o.strict) ? kExitFalse : kExitOk;
  }
  throw CliError{"unknown realline op: " + op};
}

int run_group(const Options& o, const std::string& op) {
  Group g = load_group(o.group, o.cyclic);
  Space t = load_space(o.in);
  if (op == "classify") {
    char* text = nullptr;
    check(tl_group_classify_json(g.get(), t.get(), &text), o.in);
    const json r = json::parse(take(text));
    if (o.json_out) {
      print_json(r);
    } else {
      std::vector<std::pair<std::string, std::string>> rows;
      for (const auto& [k, v] : r.items()) rows.emplace_back(k, v.is_boolean() ? (v.get<bool>() ? "true" : "false") : v.get<std::string>());
      print_table(rows);
    }
    return kExitOk;
  }
  if (o.gamma.empty() || o.base.empty()) throw CliError{"group " + op + " needs --gamma and --base"};
  Space gamma = load_space(o.gamma);
  const std::vector<tl_points> base = parse_point_family(t.get(), o.base);
  if (op == "almost") {
    int holds = 0;
    char* diag = nullptr;
    check(tl_group_almost_topological(g.get(), t.get(), gamma.get(), base.data(), base.size(), &holds, &diag), o.base);
    const std::string d = take(diag);
    if (o.json_out) {
      print_json({{"query", op}, {"result", holds != 0}, {"diagnostic", d}});
    } else {
      std::cout << verdict_word(holds != 0) << (d.empty() ? "" : "  " + d) << '\n';
    }
    return (holds == 0 && o.strict) ? kExitFalse : kExitOk;
  }
  if (op == "hattori") {
    const tl_points a = o.a.empty() ? 0 : parse_points(t.get(), o.a);
    tl_space* raw = nullptr;
    int valid = 0;
    char* diag = nullptr;
    check(tl_group_hattori(g.get(), t.get(), gamma.get(), base.data(), base.size(), a, o.force ? 1 : 0, &raw, &valid,
                           &diag),
          o.base);
    Space h(raw);
    const std::string d = take(diag);
    if (o.json_out) {
      print_json({{"space", space_json(h.get())}, {"opens", opens_of(h.get())}, {"valid", valid != 0}, {"diagnostic", d}});
    } else {
      print_table({{"opens", family_text(opens_of(h.get()))},
                   {"valid", valid != 0 ? "true" : "false"},
                   {"diagnostic", d.empty() ? "-" : d}});
    }
    return (valid == 0 && o.strict) ? kExitFalse : kExitOk;
  }
  throw CliError{"unknown group op: " + op};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topolab: finite topologies, pi-compatibility, ideals, the real line and group topologies"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tl_version()));
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", o.json_out, "JSON output");
    c->add_flag("--strict", o.strict, "exit 1 when a boolean answer is false");
  };
  auto add_in = [&](CLI::App* c) { c->add_option("--in", o.in, "space JSON file or inline JSON")->required(); };

  auto* space = app.add_subcommand("space", "single-space queries");
  space->require_subcommand(1);
  auto* analyze = space->add_subcommand("analyze", "separation, density, connectedness, opens");
  add_in(analyze);
  add_common(analyze);
  std::string space_op;
  auto* op = space->add_subcommand("op", "run one operator on a subset");
  op->add_option("operator", space_op, "interior|closure|nwd|meager|baire|semiopen|density|connected")
      ->required()
      ->check(CLI::IsMember({"interior", "closure", "nwd", "meager", "baire", "semiopen", "density", "connected"}));
  add_in(op);
  op->add_option("--set", o.set, "point list such as 0,2");
  add_common(op);

  std::string pair_op;
  auto* pair = app.add_subcommand("pair", "two topologies on one ground set (--in is tau or the base)");
  pair->add_option("operator", pair_op, "pi-compat|admissible|decompose|meet")
      ->required()
      ->check(CLI::IsMember({"pi-compat", "admissible", "decompose", "meet"}));
  add_in(pair);
  pair->add_option("--in2", o.in2, "second space (sigma or the extension)")->required();
  pair->add_option("--set", o.set, "open set to decompose");
  add_common(pair);

  auto* star = app.add_subcommand("star", "star topology of an ideal P(B)");
  add_in(star);
  star->add_option("--ideal", o.ideal, "generator B as a point list")->required();
  star->add_option("--set", o.set, "also report the local function and star closure of this set");
  add_common(star);

  auto* alpha = app.add_subcommand("alpha", "alpha topology and nowhere dense ideal");
  add_in(alpha);
  add_common(alpha);

  auto* enumerate = app.add_subcommand("enumerate", "count (or list with --json) the topologies on n points");
  enumerate->add_option("--n", o.n, "points, 1..5")->required();
  add_common(enumerate);

  auto* verify = app.add_subcommand("verify", "exhaustive check of a theorem at scale n");
  verify->add_option("--theorem", o.theorem, "theorem id, see `topolab theorems`")->required();
  verify->add_option("--n", o.n, "scale (default 3)");
  verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--large", o.large, "permit n = 5 for pairs and n = 4 for triples");
  verify->add_flag("--timing", o.timing, "keep elapsed_ms in JSON output");
  add_common(verify);

  auto* theorems = app.add_subcommand("theorems", "list theorem ids");
  add_common(theorems);

  auto* search = app.add_subcommand("search", "look for a counterexample to a predicate");
  search->add_option("--predicate,--theorem", o.theorem, "predicate id")->required();
  search->add_option("--n", o.n, "scale (default 3)");
  search->add_flag("--large", o.large, "permit n = 5");
  add_common(search);

  std::string rl_op;
  auto* realline = app.add_subcommand("realline", "Euclidean, Sorgenfrey and Hattori topologies on the line");
  realline->add_option("operator", rl_op, "closure|interior|compare|pi-compat|admissible|semiopen|clopen")
      ->required()
      ->check(CLI::IsMember({"closure", "interior", "compare", "pi-compat", "admissible", "semiopen", "clopen"}));
  realline->add_option("--topology", o.topology, "E | S | US | H:<set>");
  realline->add_option("--topology2", o.topology2, "second topology (the extension for admissible)");
  realline->add_option("--set", o.set, "interval set such as \"(0,1) u {2}\"");
  realline->add_option("--a", o.a, "interval set A");
  realline->add_option("--b", o.b, "interval set B");
  add_common(realline);

  std::string group_op;
  auto* group = app.add_subcommand("group", "topologies on a finite group");
  group->add_option("operator", group_op, "classify|almost|hattori")
      ->required()
      ->check(CLI::IsMember({"classify", "almost", "hattori"}));
  group->add_option("--group", o.group, "group JSON {\"n\",\"mul\",\"e\"}");
  group->add_option("--cyclic", o.cyclic, "use the cyclic group of this order");
  add_in(group);
  group->add_option("--gamma", o.gamma, "weaker Hausdorff group topology");
  group->add_option("--base", o.base, "local base at e, sets separated by ';' e.g. \"0;0,1\"");
  group->add_option("--a", o.a, "point list A for the Hattori construction");
  group->add_flag("--force", o.force, "build the construction even when preconditions fail");
  add_common(group);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_space_analyze(o);
    if (op->parsed()) return run_space_op(o, space_op);
    if (pair->parsed()) return run_pair(o, pair_op);
    if (star->parsed()) return run_star(o);
    if (alpha->parsed()) return run_alpha(o);
    if (enumerate->parsed()) return run_enumerate(o);
    if (verify->parsed()) return run_verify(o);
    if (theorems->parsed()) return run_theorems(o);
    if (search->parsed()) return run_search(o);
    if (realline->parsed()) return run_realline(o, rl_op);
    if (group->parsed()) return run_group(o, group_op);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
