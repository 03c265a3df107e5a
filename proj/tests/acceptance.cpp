// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria (0 when everything passes).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "group_oracle.hpp"
#include "line_oracle.hpp"
#include "oracles.hpp"
#include "topolab/compat.hpp"
#include "topolab/enumeration.hpp"
#include "topolab/ideals.hpp"
#include "topolab/json_io.hpp"
#include "topolab/realline.hpp"
#include "topolab/topgroups.hpp"

using namespace topolab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("[%s] %2d %-34s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), seconds_since(t0));
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

struct Sweep {
  long long instances = 0;
  long long counterexamples = 0;
  double seconds = 0;
  std::string json;  // reports without timing, for cross-job comparison
};

Sweep sweep(std::initializer_list<TheoremId> ids, int n_max, int jobs) {
  Sweep s;
  const auto t0 = Clock::now();
  for (TheoremId id : ids) {
    for (int n = 1; n <= n_max; ++n) {
      const auto r = verify(id, n, {jobs, false});
      s.instances += r.instances;
      s.counterexamples += r.counterexample_count;
      s.json += verify_report_to_json(r, false).dump();
    }
  }
  s.seconds = seconds_since(t0);
  return s;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

}  // namespace

int main() {
  // Time limits, in seconds.
  constexpr double kCountLimit = 5;
  constexpr double kPairsSerialLimit = 300;
  constexpr double kPairsParallelLimit = 60;
  constexpr double kT315Limit = 120;
  constexpr double kAlphaLimit = 10;

  criterion(1, "enumeration counts", [&] {
    static constexpr long expect[] = {0, 1, 4, 29, 355};
    const auto t0 = Clock::now();
    bool ok = true;
    std::string got;
    for (int n = 1; n <= 4; ++n) {
      const long c = static_cast<long>(enumerate_topologies(n).size());
      ok = ok && c == expect[n];
      got += (n > 1 ? "," : "") + std::to_string(c);
    }
    const double t = seconds_since(t0);
    for (int n = 1; n <= 4; ++n) ok = ok && oracle::count_preorders(n) == expect[n];
    return Outcome{ok && t < kCountLimit, fmt("counts %s, oracle agrees, %.3fs < %.0fs", got.c_str(), t, kCountLimit)};
  });

  criterion(2, "L33 + C34 over pi-compatible pairs", [&] {
    const auto serial = sweep({TheoremId::L33, TheoremId::C34}, 4, 1);
    const auto parallel = sweep({TheoremId::L33, TheoremId::C34}, 4, 8);
    const bool ok = serial.counterexamples == 0 && serial.json == parallel.json && serial.seconds < kPairsSerialLimit &&
                    parallel.seconds < kPairsParallelLimit;
    return Outcome{ok, fmt("%d ordered pairs scanned per theorem (n<=4), %lld pi-compatible instances, %lld counterexamples, 1 job %.2fs < %.0fs, "
                           "8 jobs %.2fs < %.0fs, reports identical=%s",
                           1 + 16 + 841 + 126025, serial.instances, serial.counterexamples, serial.seconds, kPairsSerialLimit,
                           parallel.seconds, kPairsParallelLimit, serial.json == parallel.json ? "yes" : "no")};
  });

  criterion(3, "decomposition of open sets", [&] {
    const auto s = sweep({TheoremId::TDecomp}, 4, 1);
    return Outcome{s.counterexamples == 0, fmt("%lld pairs, %lld failures", s.instances, s.counterexamples)};
  });

  criterion(4, "meet pi-network, finite evidence", [&] {
    const auto s = sweep({TheoremId::T5B, TheoremId::Q3Finite}, 4, 1);
    const auto q = verify(TheoremId::Q3Finite, 4);
    const bool wording = q.verdict().find("no finite counterexample") != std::string::npos;
    return Outcome{s.counterexamples == 0 && wording,
                   fmt("%lld instances, %lld counterexamples, verdict \"%s\"", s.instances, s.counterexamples,
                       q.verdict().c_str())};
  });

  criterion(5, "star admissibility iff", [&] {
    const auto s = sweep({TheoremId::T315}, 4, 1);
    return Outcome{s.counterexamples == 0 && s.seconds < kT315Limit,
                   fmt("%lld (space, ideal) instances, %lld counterexamples, %.2fs < %.0fs", s.instances,
                       s.counterexamples, s.seconds, kT315Limit)};
  });

  criterion(6, "star of nwd ideal equals alpha", [&] {
    const auto s = sweep({TheoremId::EAlpha}, 4, 1);
    return Outcome{s.counterexamples == 0 && s.instances == 389 && s.seconds < kAlphaLimit,
                   fmt("%lld spaces, %lld failures, %.2fs < %.0fs", s.instances, s.counterexamples, s.seconds,
                       kAlphaLimit)};
  });

  criterion(7, "star closure and star topology laws", [&] {
    const auto s = sweep({TheoremId::StarProps}, 3, 1);
    return Outcome{s.counterexamples == 0, fmt("%lld (space, ideal) pairs, %lld failures", s.instances, s.counterexamples)};
  });

  criterion(8, "Baire property oracle equivalence", [&] {
    long long checked = 0;
    long long bad = 0;
    for (int n = 1; n <= 3; ++n) {
      for_each_topology(n, [&](const FiniteSpace& s) {
        const auto direct = oracle::baire_family_by_triples(s);
        for_each_subset(n, [&](PointSet a) {
          ++checked;
          if (has_baire_property(s, a) != (direct.count(a.bits()) == 1)) ++bad;
        });
      });
    }
    return Outcome{bad == 0, fmt("%lld (space, subset) cases, %lld disagreements", checked, bad)};
  });

  criterion(9, "real-line goldens", [&] {
    using namespace topolab::line;
    auto P = [](const char* t) { return parse_interval_set(t); };
    const auto E = LineTopology::euclidean();
    const auto S = LineTopology::sorgenfrey();
    int bad = 0;
    bad += rl_closure(S, P("(0,1)")) == P("[0,1)") ? 0 : 1;
    bad += rl_interior(S, P("(0,1]")) == P("(0,1)") ? 0 : 1;
    bad += rl_are_pi_compatible(S, LineTopology::upper_limit()) ? 0 : 1;
    bad += rl_is_admissible_extension(E, S) ? 0 : 1;
    std::mt19937 rng(20261016);
    int admissible = 0;
    for (int i = 0; i < 50; ++i) {
      if (rl_is_admissible_extension(E, LineTopology::hattori(line_oracle::random_set(rng)))) ++admissible;
    }
    int compare_ok = 0;
    for (int i = 0; i < 500; ++i) {
      const auto a = line_oracle::random_set(rng);
      const auto b = line_oracle::random_set(rng);
      const auto ord = hattori_compare(a, b);
      const bool claims = ord == HattoriOrder::Equal || ord == HattoriOrder::Coarser;
      const bool claims_rev = ord == HattoriOrder::Equal || ord == HattoriOrder::Finer;
      if (claims == b.subset_of(a) && claims == line_oracle::hattori_included_oracle(a, b) &&
          claims_rev == line_oracle::hattori_included_oracle(b, a) &&
          claims == rl_topology_included(LineTopology::hattori(a), LineTopology::hattori(b))) {
        ++compare_ok;
      }
    }
    int clopen_ok = 0;
    int drawn = 0;
    while (drawn < 100) {
      const auto a = line_oracle::random_set(rng);
      if (a.is_full_line()) continue;
      ++drawn;
      const auto h = LineTopology::hattori(a);
      const auto w = hattori_clopen_witness(a);
      if (w && !w->empty() && !w->is_full_line() && rl_interior(h, *w) == *w && rl_closure(h, *w) == *w) ++clopen_ok;
    }
    const bool ok = bad == 0 && admissible == 50 && compare_ok == 500 && clopen_ok == 100;
    return Outcome{ok, fmt("fixed goldens %d/4, (E,H(A)) admissible %d/50, compare %d/500, clopen %d/100 (exact)",
                           4 - bad, admissible, compare_ok, clopen_ok)};
  });

  criterion(10, "separation preserved by extensions", [&] {
    const auto s = sweep({TheoremId::PAxioms}, 4, 1);
    const auto w = search_counterexample(SearchPredicate::AxiomsConverse, 4);
    bool witness_ok = false;
    if (w) {
      witness_ok = is_admissible_extension(w->spaces[0], w->spaces[1]) && !separation(w->spaces[0]).t0 &&
                   separation(w->spaces[1]).t0;
    }
    return Outcome{s.counterexamples == 0 && witness_ok,
                   fmt("%lld admissible pairs, %lld counterexamples, converse witness %s", s.instances,
                       s.counterexamples, witness_ok ? "found" : "missing")};
  });

  criterion(11, "group topology classification", [&] {
    int spaces = 0;
    int mismatches = 0;
    int almost_non_discrete = 0;
    int almost_discrete = 0;
    for (int n : {2, 3}) {
      const auto g = FiniteGroup::cyclic(n);
      const auto all = enumerate_topologies(n);
      for (const auto& t : all) {
        ++spaces;
        const auto c = classify(g, t);
        const auto d = group_oracle::classify_def(g, t);
        const bool chain = (c.verdict != GroupVerdict::Topological || c.multiplication_continuous) &&
                           (!c.multiplication_continuous ||
                            (c.left_translations_continuous && c.right_translations_continuous));
        if (!chain || c.verdict != d.verdict || c.multiplication_continuous != d.multiplication_continuous ||
            c.inversion_continuous != d.inversion_continuous ||
            c.left_translations_continuous != d.left_translations_continuous ||
            c.right_translations_continuous != d.right_translations_continuous) {
          ++mismatches;
        }
        for (const auto& gamma : all) {
          for_each_subset(n, [&](PointSet u) {
            if (!u.contains(g.identity())) return;
            if (!is_almost_topological(g, t, gamma, {u}).holds) return;
            if (t == FiniteSpace::discrete(n)) {
              ++almost_discrete;
            } else {
              ++almost_non_discrete;
            }
          });
        }
      }
    }
    const bool ok = spaces == 33 && mismatches == 0 && almost_non_discrete == 0 && almost_discrete > 0;
    return Outcome{ok, fmt("%d topologies on Z2/Z3, %d oracle mismatches, almost topological: %d discrete, %d other",
                           spaces, mismatches, almost_discrete, almost_non_discrete)};
  });

  std::printf("%s: %d of 11 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures;
}
