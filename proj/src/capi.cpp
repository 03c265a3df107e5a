#include "topolab/topolab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "topolab/compat.hpp"
#include "topolab/core.hpp"
#include "topolab/enumeration.hpp"
#include "topolab/ideals.hpp"
#include "topolab/json_io.hpp"
#include "topolab/realline.hpp"
#include "topolab/topgroups.hpp"

struct tl_space {
  topolab::FiniteSpace value;
};
struct tl_group {
  topolab::FiniteGroup value;
};
struct tl_iset {
  topolab::line::IntervalSet value;
};
struct tl_line {
  topolab::line::LineTopology value;
};

namespace {

std::string& last_message() {
  thread_local std::string message;
  return message;
}

tl_status fail(tl_status status, const char* what) {
  last_message() = what;
  return status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Library error codes line up with the first tl_status values.
tl_status status_of(topolab::ErrorCode code) { return static_cast<tl_status>(static_cast<int>(code)); }

template <class F>
tl_status guarded(F&& body) {
  try {
    body();
    return TL_OK;
  } catch (const topolab::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TL_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TL_INTERNAL, e.what());
  } catch (...) {
    return fail(TL_INTERNAL, "unknown error");
  }
}

#define TL_REQUIRE(ptr) \
  if ((ptr) == nullptr) return fail(TL_NULL_ARGUMENT, "null argument: " #ptr)

}  // namespace

extern "C" {

const char* tl_last_error(void) { return last_message().c_str(); }

const char* tl_status_name(tl_status status) {
  switch (status) {
    case TL_OK: return "OK";
    case TL_NULL_ARGUMENT: return "NullArgument";
    case TL_INTERNAL: return "Internal";
    default: break;
  }
  const int v = static_cast<int>(status);
  if (v >= 1 && v <= static_cast<int>(topolab::ErrorCode::InvalidArgument)) {
    return topolab::error_code_name(static_cast<topolab::ErrorCode>(v)).data();
  }
  return "Unknown";
}

const char* tl_version(void) { return "1.0.0"; }

void tl_string_free(char* s) { std::free(s); }

// ---- spaces ----------------------------------------------------------------

tl_status tl_space_from_json(const char* json, tl_space** out) {
  TL_REQUIRE(json);
  TL_REQUIRE(out);
  return guarded([&] { *out = new tl_space{topolab::space_from_text(json)}; });
}

tl_status tl_space_discrete(int n, tl_space** out) {
  TL_REQUIRE(out);
  return guarded([&] { *out = new tl_space{topolab::FiniteSpace::discrete(n)}; });
}

tl_status tl_space_trivial(int n, tl_space** out) {
  TL_REQUIRE(out);
  return guarded([&] { *out = new tl_space{topolab::FiniteSpace::trivial(n)}; });
}

tl_status tl_space_clone(const tl_space* s, tl_space** out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = new tl_space{s->value}; });
}

void tl_space_free(tl_space* s) { delete s; }

tl_status tl_space_size(const tl_space* s, int* out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  *out = s->value.size();
  return TL_OK;
}

tl_status tl_space_equal(const tl_space* a, const tl_space* b, int* out) {
  TL_REQUIRE(a);
  TL_REQUIRE(b);
  TL_REQUIRE(out);
  *out = a->value == b->value;
  return TL_OK;
}

tl_status tl_space_to_json(const tl_space* s, char** out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = dup_string(topolab::space_to_json(s->value).dump()); });
}

tl_status tl_space_analyze_json(const tl_space* s, char** out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = dup_string(topolab::report_to_json(s->value, topolab::analyze(s->value)).dump()); });
}

tl_status tl_space_parse_points(const tl_space* s, const char* text, tl_points* out) {
  TL_REQUIRE(s);
  TL_REQUIRE(text);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::parse_point_list(text, s->value.size()).bits(); });
}

namespace {

topolab::PointSet checked(const tl_space* s, tl_points a) {
  const topolab::PointSet p(a);
  if (!p.subset_of(s->value.universe())) {
    throw topolab::Error(topolab::ErrorCode::InvalidArgument,
                         "set " + topolab::to_string(p) + " has points outside the space");
  }
  return p;
}

}  // namespace

tl_status tl_space_interior(const tl_space* s, tl_points a, tl_points* out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::interior(s->value, checked(s, a)).bits(); });
}

tl_status tl_space_closure(const tl_space* s, tl_points a, tl_points* out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::closure(s->value, checked(s, a)).bits(); });
}

tl_status tl_space_test(const tl_space* s, tl_set_test test, tl_points a, int* out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] {
    const topolab::PointSet p = checked(s, a);
    const auto& sp = s->value;
    switch (test) {
      case TL_TEST_OPEN: *out = sp.is_open(p); return;
      case TL_TEST_CLOSED: *out = sp.is_closed(p); return;
      case TL_TEST_DENSE: *out = topolab::is_dense(sp, p); return;
      case TL_TEST_NOWHERE_DENSE: *out = topolab::is_nowhere_dense(sp, p); return;
      case TL_TEST_MEAGER: *out = topolab::is_meager(sp, p); return;
      case TL_TEST_BAIRE_PROPERTY: *out = topolab::has_baire_property(sp, p); return;
      case TL_TEST_SEMI_OPEN: *out = topolab::is_semi_open(sp, p); return;
    }
    throw topolab::Error(topolab::ErrorCode::InvalidArgument, "unknown set test");
  });
}

tl_status tl_space_density(const tl_space* s, int* out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::density(s->value); });
}

tl_status tl_space_is_connected(const tl_space* s, int* out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::is_connected(s->value); });
}

tl_status tl_space_is_baire(const tl_space* s, int* out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::is_baire_space(s->value); });
}

tl_status tl_space_baire_family_json(const tl_space* s, char** out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (topolab::PointSet a : topolab::baire_family(s->value)) arr.push_back(topolab::set_to_json(a));
    *out = dup_string(arr.dump());
  });
}

tl_status tl_space_product(const tl_space* const* factors, size_t count, tl_space** out) {
  TL_REQUIRE(out);
  if (count > 0) TL_REQUIRE(factors);
  return guarded([&] {
    std::vector<topolab::FiniteSpace> fs;
    for (size_t k = 0; k < count; ++k) {
      if (factors[k] == nullptr) throw topolab::Error(topolab::ErrorCode::InvalidArgument, "null factor");
      fs.push_back(factors[k]->value);
    }
    *out = new tl_space{topolab::product(fs)};
  });
}

// ---- pairs -----------------------------------------------------------------

tl_status tl_pair_pi_network(const tl_space* tau, const tl_space* sigma, int* out) {
  TL_REQUIRE(tau);
  TL_REQUIRE(sigma);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::is_pi_network(tau->value, sigma->value); });
}

tl_status tl_pair_pi_compatible(const tl_space* tau, const tl_space* sigma, int* out) {
  TL_REQUIRE(tau);
  TL_REQUIRE(sigma);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::are_pi_compatible(tau->value, sigma->value); });
}

tl_status tl_pair_admissible(const tl_space* base, const tl_space* ext, int* out) {
  TL_REQUIRE(base);
  TL_REQUIRE(ext);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::is_admissible_extension(base->value, ext->value); });
}

tl_status tl_pair_decompose(const tl_space* tau, const tl_space* sigma, tl_points open_set, tl_points* open_part,
                            tl_points* nowhere_dense_part) {
  TL_REQUIRE(tau);
  TL_REQUIRE(sigma);
  TL_REQUIRE(open_part);
  TL_REQUIRE(nowhere_dense_part);
  return guarded([&] {
    const auto d = topolab::decompose_open({tau->value, sigma->value}, topolab::PointSet(open_set));
    *open_part = d.open_part.bits();
    *nowhere_dense_part = d.nowhere_dense_part.bits();
  });
}

tl_status tl_pair_meet(const tl_space* tau, const tl_space* sigma, tl_space** out) {
  TL_REQUIRE(tau);
  TL_REQUIRE(sigma);
  TL_REQUIRE(out);
  return guarded([&] { *out = new tl_space{topolab::meet(tau->value, sigma->value)}; });
}

tl_status tl_pair_gdelta_pi_network(const tl_space* tau, const tl_space* sigma, int* out) {
  TL_REQUIRE(tau);
  TL_REQUIRE(sigma);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::gdelta_pi_network({tau->value, sigma->value}); });
}

// ---- ideals ----------------------------------------------------------------

tl_status tl_local_function(const tl_space* s, tl_points ideal, tl_points a, tl_points* out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] {
    *out = topolab::local_function(s->value, topolab::Ideal(checked(s, ideal)), checked(s, a)).bits();
  });
}

tl_status tl_star_closure(const tl_space* s, tl_points ideal, tl_points a, tl_points* out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] {
    *out = topolab::star_closure(s->value, topolab::Ideal(checked(s, ideal)), checked(s, a)).bits();
  });
}

tl_status tl_star_topology(const tl_space* s, tl_points ideal, tl_space** out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = new tl_space{topolab::star_topology(s->value, topolab::Ideal(checked(s, ideal)))}; });
}

tl_status tl_nwd_ideal(const tl_space* s, tl_points* out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::nwd_ideal(s->value).generator().bits(); });
}

tl_status tl_alpha_topology(const tl_space* s, tl_space** out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = new tl_space{topolab::alpha_topology(s->value)}; });
}

tl_status tl_star_admissible(const tl_space* s, tl_points ideal, int* admissible, tl_points* witness) {
  TL_REQUIRE(s);
  TL_REQUIRE(admissible);
  return guarded([&] {
    const auto r = topolab::is_star_admissible(s->value, topolab::Ideal(checked(s, ideal)));
    *admissible = r.admissible;
    if (witness != nullptr && r.witness) *witness = r.witness->bits();
  });
}

// ---- enumeration -----------------------------------------------------------

tl_status tl_enumerate_count(int n, size_t* out) {
  TL_REQUIRE(out);
  return guarded([&] {
    size_t count = 0;
    topolab::for_each_topology(n, [&](const topolab::FiniteSpace&) { ++count; });
    *out = count;
  });
}

tl_status tl_enumerate_json(int n, char** out) {
  TL_REQUIRE(out);
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    topolab::for_each_topology(n, [&](const topolab::FiniteSpace& s) { arr.push_back(topolab::space_to_json(s)); });
    *out = dup_string(arr.dump());
  });
}

tl_status tl_theorems_json(char** out) {
  TL_REQUIRE(out);
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& info : topolab::theorem_registry()) {
      static constexpr const char* kDomains[] = {"spaces", "space x ideal", "pi-compatible pairs",
                                                 "admissible pairs", "triples"};
      arr.push_back({{"id", std::string(info.name)},
                     {"domain", kDomains[static_cast<int>(info.domain)]},
                     {"claim", std::string(info.claim)}});
    }
    *out = dup_string(arr.dump());
  });
}

tl_status tl_verify(const char* theorem, int n, int jobs, int allow_large, char** report_json, int* verified) {
  TL_REQUIRE(theorem);
  TL_REQUIRE(report_json);
  return guarded([&] {
    const auto id = topolab::parse_theorem_id(theorem);
    const auto report = topolab::verify(id, n, {jobs, allow_large != 0});
    *report_json = dup_string(topolab::verify_report_to_json(report).dump());
    if (verified != nullptr) *verified = report.verified();
  });
}

tl_status tl_search(const char* predicate, int n, int allow_large, char** result_json, int* found) {
  TL_REQUIRE(predicate);
  TL_REQUIRE(result_json);
  return guarded([&] {
    const auto p = topolab::parse_predicate(predicate);
    const auto w = topolab::search_counterexample(p, n, allow_large != 0);
    *result_json = dup_string(topolab::search_to_json(p, n, w).dump());
    if (found != nullptr) *found = w.has_value();
  });
}

tl_status tl_predicates_json(char** out) {
  TL_REQUIRE(out);
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (auto p : topolab::all_predicates()) arr.push_back(std::string(topolab::predicate_name(p)));
    *out = dup_string(arr.dump());
  });
}

// ---- real line -------------------------------------------------------------

tl_status tl_iset_parse(const char* text, tl_iset** out) {
  TL_REQUIRE(text);
  TL_REQUIRE(out);
  return guarded([&] { *out = new tl_iset{topolab::line::parse_interval_set(text)}; });
}

void tl_iset_free(tl_iset* s) { delete s; }

tl_status tl_iset_to_string(const tl_iset* s, char** out) {
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = dup_string(topolab::line::to_string(s->value)); });
}

tl_status tl_iset_equal(const tl_iset* a, const tl_iset* b, int* out) {
  TL_REQUIRE(a);
  TL_REQUIRE(b);
  TL_REQUIRE(out);
  *out = a->value == b->value;
  return TL_OK;
}

tl_status tl_line_parse(const char* text, tl_line** out) {
  TL_REQUIRE(text);
  TL_REQUIRE(out);
  return guarded([&] { *out = new tl_line{topolab::line::parse_line_topology(text)}; });
}

void tl_line_free(tl_line* t) { delete t; }

tl_status tl_rl_interior(const tl_line* t, const tl_iset* s, tl_iset** out) {
  TL_REQUIRE(t);
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = new tl_iset{topolab::line::rl_interior(t->value, s->value)}; });
}

tl_status tl_rl_closure(const tl_line* t, const tl_iset* s, tl_iset** out) {
  TL_REQUIRE(t);
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = new tl_iset{topolab::line::rl_closure(t->value, s->value)}; });
}

tl_status tl_rl_semi_open(const tl_line* t, const tl_iset* s, int* out) {
  TL_REQUIRE(t);
  TL_REQUIRE(s);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::line::rl_is_semi_open(t->value, s->value); });
}

tl_status tl_rl_hattori_compare(const tl_iset* a, const tl_iset* b, tl_order* out) {
  TL_REQUIRE(a);
  TL_REQUIRE(b);
  TL_REQUIRE(out);
  return guarded([&] {
    using topolab::line::HattoriOrder;
    switch (topolab::line::hattori_compare(a->value, b->value)) {
      case HattoriOrder::Equal: *out = TL_ORDER_EQUAL; break;
      case HattoriOrder::Finer: *out = TL_ORDER_FINER; break;
      case HattoriOrder::Coarser: *out = TL_ORDER_COARSER; break;
      case HattoriOrder::Incomparable: *out = TL_ORDER_INCOMPARABLE; break;
    }
  });
}

tl_status tl_rl_pi_compatible(const tl_line* t1, const tl_line* t2, int* out) {
  TL_REQUIRE(t1);
  TL_REQUIRE(t2);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::line::rl_are_pi_compatible(t1->value, t2->value); });
}

tl_status tl_rl_admissible(const tl_line* base, const tl_line* ext, int* out) {
  TL_REQUIRE(base);
  TL_REQUIRE(ext);
  TL_REQUIRE(out);
  return guarded([&] { *out = topolab::line::rl_is_admissible_extension(base->value, ext->value); });
}

tl_status tl_rl_clopen_witness(const tl_iset* a, tl_iset** out) {
  TL_REQUIRE(a);
  TL_REQUIRE(out);
  return guarded([&] {
    const auto w = topolab::line::hattori_clopen_witness(a->value);
    *out = w ? new tl_iset{*w} : nullptr;
  });
}

// ---- groups ----------------------------------------------------------------

tl_status tl_group_from_json(const char* json, tl_group** out) {
  TL_REQUIRE(json);
  TL_REQUIRE(out);
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
      throw topolab::Error(topolab::ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    *out = new tl_group{topolab::group_from_json(j)};
  });
}

tl_status tl_group_cyclic(int n, tl_group** out) {
  TL_REQUIRE(out);
  return guarded([&] {
    if (n < 1 || n > topolab::kMaxPoints) throw topolab::Error(topolab::ErrorCode::InvalidGroup, "order out of range");
    *out = new tl_group{topolab::FiniteGroup::cyclic(n)};
  });
}

void tl_group_free(tl_group* g) { delete g; }

tl_status tl_group_order(const tl_group* g, int* out) {
  TL_REQUIRE(g);
  TL_REQUIRE(out);
  *out = g->value.order();
  return TL_OK;
}

tl_status tl_group_classify_json(const tl_group* g, const tl_space* t, char** out) {
  TL_REQUIRE(g);
  TL_REQUIRE(t);
  TL_REQUIRE(out);
  return guarded([&] {
    const auto c = topolab::classify(g->value, t->value);
    const nlohmann::json j{{"left_translations_continuous", c.left_translations_continuous},
                           {"right_translations_continuous", c.right_translations_continuous},
                           {"multiplication_continuous", c.multiplication_continuous},
                           {"inversion_continuous", c.inversion_continuous},
                           {"verdict", std::string(topolab::to_string(c.verdict))}};
    *out = dup_string(j.dump());
  });
}

tl_status tl_group_setwise_product(const tl_group* g, tl_points u, tl_points v, tl_points* out) {
  TL_REQUIRE(g);
  TL_REQUIRE(out);
  return guarded([&] {
    const auto all = topolab::PointSet::full(g->value.order());
    if (!topolab::PointSet(u).subset_of(all) || !topolab::PointSet(v).subset_of(all)) {
      throw topolab::Error(topolab::ErrorCode::InvalidArgument, "set leaves the group");
    }
    *out = topolab::setwise_product(g->value, topolab::PointSet(u), topolab::PointSet(v)).bits();
  });
}

tl_status tl_group_setwise_inverse(const tl_group* g, tl_points u, tl_points* out) {
  TL_REQUIRE(g);
  TL_REQUIRE(out);
  return guarded([&] {
    if (!topolab::PointSet(u).subset_of(topolab::PointSet::full(g->value.order()))) {
      throw topolab::Error(topolab::ErrorCode::InvalidArgument, "set leaves the group");
    }
    *out = topolab::setwise_inverse(g->value, topolab::PointSet(u)).bits();
  });
}

namespace {

std::vector<topolab::PointSet> base_vector(const tl_points* base, size_t count) {
  std::vector<topolab::PointSet> out;
  for (size_t k = 0; k < count; ++k) out.emplace_back(base[k]);
  return out;
}

}  // namespace

tl_status tl_group_almost_topological(const tl_group* g, const tl_space* t, const tl_space* gamma,
                                      const tl_points* base_at_e, size_t base_count, int* holds, char** diagnostic) {
  TL_REQUIRE(g);
  TL_REQUIRE(t);
  TL_REQUIRE(gamma);
  TL_REQUIRE(holds);
  if (base_count > 0) TL_REQUIRE(base_at_e);
  return guarded([&] {
    const auto r = topolab::is_almost_topological(g->value, t->value, gamma->value, base_vector(base_at_e, base_count));
    *holds = r.holds;
    if (diagnostic != nullptr) *diagnostic = dup_string(r.diagnostic);
  });
}

tl_status tl_group_hattori(const tl_group* g, const tl_space* t, const tl_space* gamma, const tl_points* base_at_e,
                           size_t base_count, tl_points a, int force, tl_space** out, int* valid, char** diagnostic) {
  TL_REQUIRE(g);
  TL_REQUIRE(t);
  TL_REQUIRE(gamma);
  TL_REQUIRE(out);
  if (base_count > 0) TL_REQUIRE(base_at_e);
  return guarded([&] {
    auto r = topolab::group_hattori(g->value, t->value, gamma->value, base_vector(base_at_e, base_count),
                                    topolab::PointSet(a), force != 0);
    *out = new tl_space{std::move(r.space)};
    if (valid != nullptr) *valid = r.valid;
    if (diagnostic != nullptr) *diagnostic = dup_string(r.diagnostic);
  });
}

}  // extern "C"
