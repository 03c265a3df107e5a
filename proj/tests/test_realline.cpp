#include <random>

#include "doctest.h"
#include "line_oracle.hpp"
#include "topolab/realline.hpp"

using namespace topolab;
using namespace topolab::line;
using namespace line_oracle;

namespace {

IntervalSet P(const char* text) { return parse_interval_set(text); }

std::vector<LineTopology> kinds_for(const IntervalSet& a) {
  return {LineTopology::euclidean(), LineTopology::sorgenfrey(), LineTopology::upper_limit(), LineTopology::hattori(a)};
}

}  // namespace

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(parse_rat("-3/2")) == "-3/2");
  CHECK(to_string(parse_rat("4/2")) == "2");
  CHECK(to_string(parse_rat("+7")) == "7");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("abc"), Error);
}

TEST_CASE("interval set grammar") {
  CHECK(to_string(P("(0,1)")) == "(0,1)");
  CHECK(to_string(P("[0,1) u [1,2]")) == "[0,2]");
  CHECK(to_string(P("(0,1) u {1}")) == "(0,1]");
  CHECK(to_string(P("{2} u (-inf,0)")) == "(-inf,0) u {2}");
  CHECK(to_string(P("{}")) == "{}");
  CHECK(P("empty").empty());
  CHECK(P("(-inf,inf)").is_full_line());
  CHECK(to_string(P("[-3/2,1/2]")) == "[-3/2,1/2]");
  CHECK_THROWS_AS(P("[-inf,0)"), Error);
  CHECK_THROWS_AS(P("(0,1"), Error);
  CHECK_THROWS_AS(P("[2,1]"), Error);
  CHECK(P("(1,1)").empty());
}

TEST_CASE("topology grammar") {
  CHECK(parse_line_topology("E").kind() == LineTopology::Kind::Euclidean);
  CHECK(parse_line_topology("S").kind() == LineTopology::Kind::Sorgenfrey);
  CHECK(parse_line_topology("US").kind() == LineTopology::Kind::UpperLimit);
  const auto h = parse_line_topology("H:[0,1]");
  CHECK(h.kind() == LineTopology::Kind::Hattori);
  CHECK(h.symmetric_points() == P("[0,1]"));
  CHECK_THROWS_AS(parse_line_topology("X"), Error);
}

TEST_CASE("real-line operator examples") {
  const auto S = LineTopology::sorgenfrey();
  const auto E = LineTopology::euclidean();
  CHECK(rl_closure(S, P("(0,1)")) == P("[0,1)"));
  CHECK(rl_interior(S, P("(0,1]")) == P("(0,1)"));
  CHECK(rl_closure(E, P("(0,1)")) == P("[0,1]"));
  CHECK(rl_closure(LineTopology::hattori(P("[0,inf)")), P("(-1,0)")) == P("[-1,0]"));
  CHECK(rl_closure(LineTopology::upper_limit(), P("(0,1)")) == P("(0,1]"));
}

TEST_CASE("Hattori comparison examples") {
  CHECK(hattori_compare(P("(-inf,inf)"), P("{}")) == HattoriOrder::Coarser);
  CHECK(hattori_compare(P("{}"), P("(-inf,inf)")) == HattoriOrder::Finer);
  CHECK(hattori_compare(P("[0,1]"), P("[0,1]")) == HattoriOrder::Equal);
  CHECK(hattori_compare(P("[0,1]"), P("[2,3]")) == HattoriOrder::Incomparable);
}

TEST_CASE("admissibility and pi-compatibility examples") {
  const auto E = LineTopology::euclidean();
  const auto S = LineTopology::sorgenfrey();
  const auto US = LineTopology::upper_limit();
  CHECK(rl_is_admissible_extension(E, S));
  CHECK(rl_is_admissible_extension(E, LineTopology::hattori(P("[0,1]"))));
  CHECK_FALSE(rl_is_admissible_extension(LineTopology::hattori(P("[0,1]")), LineTopology::hattori(P("[0,2]"))));
  CHECK(rl_is_admissible_extension(LineTopology::hattori(P("[0,2]")), LineTopology::hattori(P("[0,1]"))));
  CHECK_FALSE(rl_is_admissible_extension(S, E));
  CHECK(rl_is_admissible_extension(E, US));
  CHECK_FALSE(rl_is_admissible_extension(S, US));
  CHECK_THROWS_AS(rl_is_admissible_extension(US, LineTopology::hattori(P("[0,1]"))), Error);

  CHECK(rl_are_pi_compatible(S, US));
  CHECK(rl_are_pi_compatible(US, S));
  CHECK(rl_are_pi_compatible(S, S));
  CHECK(rl_are_pi_compatible(E, LineTopology::hattori(P("(0,1) u {3}"))));
}

TEST_CASE("semi-open examples") {
  CHECK(rl_is_semi_open(LineTopology::euclidean(), P("[0,1)")));
  CHECK_FALSE(rl_is_semi_open(LineTopology::sorgenfrey(), P("(0,1]")));
  CHECK_FALSE(rl_is_semi_open(LineTopology::euclidean(), P("{0}")));
}

TEST_CASE("clopen witness examples") {
  CHECK(hattori_clopen_witness(P("[0,1]")) == P("[2,inf)"));
  CHECK_FALSE(hattori_clopen_witness(P("(-inf,inf)")).has_value());
  CHECK(hattori_clopen_witness(P("{}")) == P("[0,inf)"));
  const auto w = hattori_clopen_witness(P("[0,inf)"));
  REQUIRE(w.has_value());
  const auto h = LineTopology::hattori(P("[0,inf)"));
  CHECK(rl_interior(h, *w) == *w);
  CHECK(rl_closure(h, *w) == *w);
}

TEST_CASE("interval set algebra, randomized") {
  std::mt19937 rng(20261016);
  for (int i = 0; i < 400; ++i) {
    const auto a = random_set(rng);
    const auto b = random_set(rng);
    const auto c = random_set(rng);
    REQUIRE(a.complement().complement() == a);
    REQUIRE(a.unite(b).complement() == a.complement().intersect(b.complement()));
    REQUIRE(a.intersect(b).complement() == a.complement().unite(b.complement()));
    REQUIRE(a.minus(b) == a.intersect(b.complement()));
    REQUIRE(a.subset_of(a));
    if (a.subset_of(b) && b.subset_of(a)) REQUIRE(a == b);
    if (a.subset_of(b) && b.subset_of(c)) REQUIRE(a.subset_of(c));
    REQUIRE(parse_interval_set(to_string(a)) == a);
    for (const auto& x : probes({a, b})) {
      REQUIRE(a.unite(b).contains(x) == (a.contains(x) || b.contains(x)));
      REQUIRE(a.intersect(b).contains(x) == (a.contains(x) && b.contains(x)));
      REQUIRE(a.complement().contains(x) == !a.contains(x));
    }
  }
}

TEST_CASE("interior and closure, randomized") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto s = random_set(rng);
    const auto a = random_set(rng);
    for (const auto& t : kinds_for(a)) {
      const auto in = rl_interior(t, s);
      const auto cl = rl_closure(t, s);
      REQUIRE(in == rl_closure(t, s.complement()).complement());
      REQUIRE(in.subset_of(s));
      REQUIRE(s.subset_of(cl));
      REQUIRE(rl_closure(t, cl) == cl);
      REQUIRE(rl_interior(t, in) == in);
      for (const auto& x : probes({s, a})) {
        REQUIRE(cl.contains(x) == closure_oracle(t, s, x));
        REQUIRE(in.contains(x) == interior_oracle(t, s, x));
      }
    }
    REQUIRE(rl_closure(LineTopology::hattori(IntervalSet::full_line()), s) == rl_closure(LineTopology::euclidean(), s));
    REQUIRE(rl_interior(LineTopology::hattori(IntervalSet::full_line()), s) == rl_interior(LineTopology::euclidean(), s));
    REQUIRE(rl_closure(LineTopology::hattori(IntervalSet{}), s) == rl_closure(LineTopology::sorgenfrey(), s));
    REQUIRE(rl_interior(LineTopology::hattori(IntervalSet{}), s) == rl_interior(LineTopology::sorgenfrey(), s));
  }
}

TEST_CASE("Hattori comparison against inclusion and the pointwise oracle, randomized") {
  std::mt19937 rng(99);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_set(rng);
    const auto b = random_set(rng);
    const auto ord = hattori_compare(a, b);
    const bool ab = hattori_included_oracle(a, b);
    const bool ba = hattori_included_oracle(b, a);
    REQUIRE((ord == HattoriOrder::Equal || ord == HattoriOrder::Coarser) == ab);
    REQUIRE((ord == HattoriOrder::Equal || ord == HattoriOrder::Finer) == ba);
    REQUIRE(ab == b.subset_of(a));
    REQUIRE(ab == rl_topology_included(LineTopology::hattori(a), LineTopology::hattori(b)));
  }
}

TEST_CASE("basic opens of S and H(A) are semi-open in E, randomized") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coord(-20, 20);
  std::uniform_int_distribution<int> width(1, 10);
  const auto E = LineTopology::euclidean();
  for (int i = 0; i < 200; ++i) {
    const Rat x(coord(rng), 3);
    const Rat e(width(rng), 7);
    REQUIRE(rl_is_semi_open(E, IntervalSet::closed_open(x, x + e)));
    REQUIRE(rl_is_semi_open(E, IntervalSet::open(x - e, x + e)));
    REQUIRE(rl_is_semi_open(LineTopology::sorgenfrey(), IntervalSet::closed_open(x, x + e)));
  }
}

TEST_CASE("E is admissible under H(A) and clopen witnesses are clopen, randomized") {
  std::mt19937 rng(11);
  const auto E = LineTopology::euclidean();
  for (int i = 0; i < 100; ++i) {
    const auto a = random_set(rng);
    const auto h = LineTopology::hattori(a);
    REQUIRE(rl_is_admissible_extension(E, h));
    REQUIRE(rl_are_pi_compatible(E, h));
    const auto w = hattori_clopen_witness(a);
    if (a.is_full_line()) {
      REQUIRE_FALSE(w.has_value());
      continue;
    }
    REQUIRE(w.has_value());
    REQUIRE(rl_interior(h, *w) == *w);
    REQUIRE(rl_closure(h, *w) == *w);
    REQUIRE_FALSE(w->empty());
    REQUIRE_FALSE(w->is_full_line());
  }
}
