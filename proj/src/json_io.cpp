#include "topolab/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace topolab {

using nlohmann::json;

namespace {

Error parse_error(const std::string& why) { return Error(ErrorCode::ParseError, why); }

PointSet set_from_json(const json& j, int n) {
  if (!j.is_array()) throw parse_error("expected an array of points, got " + j.dump());
  PointSet out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw parse_error("point " + v.dump() + " is not an integer");
    const int x = v.get<int>();
    if (x < 0 || x >= n) throw parse_error("point " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
    out |= PointSet::singleton(x);
  }
  return out;
}

int read_n(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw parse_error("expected an object with integer \"n\"");
  }
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxPoints) {
    throw Error(ErrorCode::TooLarge, "n = " + std::to_string(n) + " outside 1.." + std::to_string(kMaxPoints));
  }
  return n;
}

}  // namespace

FiniteSpace space_from_json(const json& j) {
  const int n = read_n(j);
  const bool has_opens = j.contains("opens");
  const bool has_nbhds = j.contains("min_nbhds");
  if (!has_opens && !has_nbhds) throw parse_error("space needs \"opens\" or \"min_nbhds\"");
  std::optional<FiniteSpace> from_nbhds;
  if (has_nbhds) {
    const json& arr = j["min_nbhds"];
    if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
      throw parse_error("\"min_nbhds\" must list one set per point");
    }
    std::vector<PointSet> nbhds;
    for (const auto& s : arr) nbhds.push_back(set_from_json(s, n));
    from_nbhds = FiniteSpace::from_min_nbhds(nbhds);
  }
  if (has_opens) {
    const json& arr = j["opens"];
    if (!arr.is_array()) throw parse_error("\"opens\" must be an array");
    std::vector<PointSet> opens;
    for (const auto& s : arr) opens.push_back(set_from_json(s, n));
    FiniteSpace s = FiniteSpace::from_opens(n, opens);
    if (from_nbhds && !(*from_nbhds == s)) throw parse_error("\"opens\" and \"min_nbhds\" describe different topologies");
    return s;
  }
  return *from_nbhds;
}

FiniteSpace space_from_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  return space_from_json(j);
}

json set_to_json(PointSet a) { return json(a.points()); }

json space_to_json(const FiniteSpace& s) {
  json nbhds = json::array();
  for (PointSet u : s.min_nbhds()) nbhds.push_back(set_to_json(u));
  return json{{"n", s.size()}, {"min_nbhds", nbhds}};
}

json opens_to_json(const FiniteSpace& s) {
  std::vector<std::vector<int>> lists;
  for (PointSet u : s.opens()) lists.push_back(u.points());
  std::sort(lists.begin(), lists.end());
  return json(lists);
}

json report_to_json(const FiniteSpace& s, const SpaceReport& r) {
  return json{
      {"space", space_to_json(s)},
      {"opens", opens_to_json(s)},
      {"separation", {{"T0", r.separation.t0}, {"T1", r.separation.t1}, {"T2", r.separation.t2}}},
      {"density", r.density},
      {"isolated_points", set_to_json(r.isolated_points)},
      {"is_connected", r.is_connected},
      {"is_baire", r.is_baire},
      {"nwd_max", set_to_json(r.nwd_max)},
  };
}

json verify_report_to_json(const VerifyReport& r, bool include_elapsed) {
  json cexs = json::array();
  for (const auto& c : r.counterexamples) {
    json spaces = json::array();
    for (const auto& s : c.spaces) spaces.push_back(space_to_json(s));
    json sets = json::array();
    for (PointSet a : c.witness_sets) sets.push_back(set_to_json(a));
    cexs.push_back(json{{"spaces", spaces}, {"witness_sets", sets}, {"note", c.note}});
  }
  json j{{"theorem", std::string(theorem_info(r.theorem).name)},
         {"n", r.n},
         {"instances", r.instances},
         {"counterexamples", cexs},
         {"counterexample_count", r.counterexample_count},
         {"verdict", r.verdict()}};
  if (include_elapsed) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

json search_to_json(SearchPredicate p, int n, const std::optional<SearchWitness>& w) {
  json j{{"predicate", std::string(predicate_name(p))}, {"n", n}, {"found", w.has_value()}};
  if (w) {
    json spaces = json::object();
    for (std::size_t k = 0; k < w->spaces.size(); ++k) spaces[w->roles[k]] = space_to_json(w->spaces[k]);
    j["witness"] = json{{"spaces", spaces}, {"note", w->note}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

FiniteGroup group_from_json(const json& j) {
  const int n = read_n(j);
  if (!j.contains("mul") || !j["mul"].is_array()) throw parse_error("group needs a \"mul\" table");
  std::vector<std::vector<int>> mul;
  for (const auto& row : j["mul"]) {
    if (!row.is_array()) throw parse_error("\"mul\" rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw parse_error("\"mul\" entries must be integers");
      r.push_back(v.get<int>());
    }
    mul.push_back(std::move(r));
  }
  if (static_cast<int>(mul.size()) != n) throw Error(ErrorCode::InvalidGroup, "\"mul\" must have n rows");
  const int e = j.contains("e") && j["e"].is_number_integer() ? j["e"].get<int>() : 0;
  return FiniteGroup(std::move(mul), e);
}

json group_to_json(const FiniteGroup& g) {
  return json{{"n", g.order()}, {"mul", g.table()}, {"e", g.identity()}};
}

PointSet parse_point_list(std::string_view text, int n) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (!t.empty() && t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
  PointSet out;
  if (t.empty()) return out;
  std::size_t start = 0;
  while (start <= t.size()) {
    const std::size_t comma = std::min(t.find(',', start), t.size());
    const std::string tok = t.substr(start, comma - start);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw parse_error("bad point list '" + std::string(text) + "'");
    }
    if (tok.size() > 3) throw parse_error("point '" + tok + "' out of range");
    const int x = std::stoi(tok);
    if (x >= n) throw parse_error("point " + tok + " outside 0.." + std::to_string(n - 1));
    out |= PointSet::singleton(x);
    start = comma + 1;
  }
  return out;
}

}  // namespace topolab
