#include <cstring>
#include <string>

#include "doctest.h"
#include "topolab/topolab.h"

namespace {

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  tl_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("spaces through the C API") {
  tl_space* s = nullptr;
  REQUIRE(tl_space_from_json(R"({"n": 2, "opens": [[], [0], [0,1]]})", &s) == TL_OK);
  int n = 0;
  CHECK(tl_space_size(s, &n) == TL_OK);
  CHECK(n == 2);
  tl_points out = 0;
  CHECK(tl_space_closure(s, 1u, &out) == TL_OK);
  CHECK(out == 3u);
  CHECK(tl_space_interior(s, 2u, &out) == TL_OK);
  CHECK(out == 0u);
  int flag = -1;
  CHECK(tl_space_test(s, TL_TEST_SEMI_OPEN, 2u, &flag) == TL_OK);
  CHECK(flag == 0);
  CHECK(tl_space_test(s, TL_TEST_NOWHERE_DENSE, 2u, &flag) == TL_OK);
  CHECK(flag == 1);
  char* text = nullptr;
  CHECK(tl_space_to_json(s, &text) == TL_OK);
  CHECK(take(text) == R"({"min_nbhds":[[0],[0,1]],"n":2})");
  CHECK(tl_space_parse_points(s, "1", &out) == TL_OK);
  CHECK(out == 2u);
  CHECK(tl_space_parse_points(s, "2", &out) == TL_PARSE_ERROR);

  tl_space* prod = nullptr;
  const tl_space* factors[] = {s, s};
  CHECK(tl_space_product(factors, 2, &prod) == TL_OK);
  CHECK(tl_space_size(prod, &n) == TL_OK);
  CHECK(n == 4);
  tl_space_free(prod);
  tl_space_free(s);
}

TEST_CASE("errors carry codes and messages") {
  tl_space* s = nullptr;
  CHECK(tl_space_from_json(R"({"n": 2, "opens": [[], [0]]})", &s) == TL_NOT_A_TOPOLOGY);
  CHECK(s == nullptr);
  CHECK(std::strlen(tl_last_error()) > 0);
  CHECK(std::string(tl_status_name(TL_NOT_A_TOPOLOGY)) == "NotATopology");
  CHECK(tl_space_from_json(nullptr, &s) == TL_NULL_ARGUMENT);
  CHECK(tl_space_discrete(0, &s) != TL_OK);
  CHECK(tl_space_discrete(17, &s) != TL_OK);
  char* report = nullptr;
  int verified = 0;
  CHECK(tl_verify("NOPE", 3, 1, 0, &report, &verified) == TL_UNKNOWN_THEOREM);
  CHECK(tl_verify("L33", 5, 1, 0, &report, &verified) == TL_N_OUT_OF_RANGE);
  CHECK(std::string(tl_version()).size() > 0);
}

TEST_CASE("pairs and ideals through the C API") {
  tl_space* base = nullptr;
  tl_space* ext = nullptr;
  REQUIRE(tl_space_from_json(R"({"n": 3, "opens": [[], [0], [0,1,2]]})", &base) == TL_OK);
  REQUIRE(tl_space_from_json(R"({"n": 3, "opens": [[], [0], [0,1], [0,2], [0,1,2]]})", &ext) == TL_OK);
  int flag = 0;
  CHECK(tl_pair_admissible(base, ext, &flag) == TL_OK);
  CHECK(flag == 1);
  CHECK(tl_pair_pi_compatible(base, ext, &flag) == TL_OK);
  CHECK(flag == 1);
  tl_points v = 0;
  tl_points m = 0;
  CHECK(tl_pair_decompose(ext, base, 3u, &v, &m) == TL_OK);
  CHECK(v == 1u);
  CHECK(m == 2u);
  CHECK(tl_pair_decompose(ext, base, 2u, &v, &m) == TL_NOT_OPEN);

  tl_space* star = nullptr;
  CHECK(tl_star_topology(base, 6u, &star) == TL_OK);
  CHECK(tl_space_equal(star, ext, &flag) == TL_OK);
  CHECK(flag == 1);
  tl_space* alpha = nullptr;
  CHECK(tl_alpha_topology(base, &alpha) == TL_OK);
  CHECK(tl_space_equal(alpha, ext, &flag) == TL_OK);
  CHECK(flag == 1);
  tl_points w = 0;
  CHECK(tl_star_admissible(base, 6u, &flag, &w) == TL_OK);
  CHECK(flag == 1);
  tl_space_free(alpha);
  tl_space_free(star);
  tl_space_free(ext);
  tl_space_free(base);
}

TEST_CASE("enumeration and verification through the C API") {
  std::size_t count = 0;
  CHECK(tl_enumerate_count(4, &count) == TL_OK);
  CHECK(count == 355u);
  char* report = nullptr;
  int verified = 0;
  REQUIRE(tl_verify("E-ALPHA", 3, 2, 0, &report, &verified) == TL_OK);
  CHECK(verified == 1);
  CHECK(take(report).find("\"instances\":29") != std::string::npos);
  char* result = nullptr;
  int found = 0;
  REQUIRE(tl_search("AXIOMS-CONVERSE", 3, 0, &result, &found) == TL_OK);
  CHECK(found == 1);
  tl_string_free(result);
}

TEST_CASE("the real line through the C API") {
  tl_line* s = nullptr;
  tl_iset* a = nullptr;
  REQUIRE(tl_line_parse("S", &s) == TL_OK);
  REQUIRE(tl_iset_parse("(0,1)", &a) == TL_OK);
  tl_iset* cl = nullptr;
  REQUIRE(tl_rl_closure(s, a, &cl) == TL_OK);
  char* text = nullptr;
  CHECK(tl_iset_to_string(cl, &text) == TL_OK);
  CHECK(take(text) == "[0,1)");
  tl_iset* full = nullptr;
  REQUIRE(tl_iset_parse("(-inf,inf)", &full) == TL_OK);
  tl_iset* w = reinterpret_cast<tl_iset*>(1);
  CHECK(tl_rl_clopen_witness(full, &w) == TL_OK);
  CHECK(w == nullptr);
  tl_order ord = TL_ORDER_EQUAL;
  CHECK(tl_rl_hattori_compare(full, a, &ord) == TL_OK);
  CHECK(ord == TL_ORDER_COARSER);
  tl_line* us = nullptr;
  tl_line* h = nullptr;
  REQUIRE(tl_line_parse("US", &us) == TL_OK);
  REQUIRE(tl_line_parse("H:[0,1]", &h) == TL_OK);
  int flag = 0;
  CHECK(tl_rl_admissible(us, h, &flag) == TL_UNSUPPORTED_PAIR);
  CHECK(tl_iset_parse("[0,", &a) == TL_PARSE_ERROR);
  tl_line_free(h);
  tl_line_free(us);
  tl_iset_free(full);
  tl_iset_free(cl);
  tl_iset_free(a);
  tl_line_free(s);
}

TEST_CASE("groups through the C API") {
  tl_group* g = nullptr;
  REQUIRE(tl_group_cyclic(2, &g) == TL_OK);
  tl_space* d = nullptr;
  REQUIRE(tl_space_discrete(2, &d) == TL_OK);
  char* text = nullptr;
  REQUIRE(tl_group_classify_json(g, d, &text) == TL_OK);
  CHECK(take(text).find("\"verdict\":\"topological\"") != std::string::npos);
  const tl_points base[] = {1u};
  int holds = 0;
  char* diag = nullptr;
  CHECK(tl_group_almost_topological(g, d, d, base, 1, &holds, &diag) == TL_OK);
  CHECK(holds == 1);
  CHECK(take(diag).empty());
  tl_space* h = nullptr;
  int valid = 0;
  CHECK(tl_group_hattori(g, d, d, base, 1, 2u, 0, &h, &valid, nullptr) == TL_OK);
  CHECK(valid == 1);
  tl_space_free(h);
  tl_group* bad = nullptr;
  CHECK(tl_group_from_json(R"({"n": 2, "mul": [[0,1],[1,1]], "e": 0})", &bad) == TL_INVALID_GROUP);
  tl_space_free(d);
  tl_group_free(g);
}
