#include "topolab/enumeration.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <thread>

#include "topolab/compat.hpp"
#include "topolab/ideals.hpp"

namespace topolab {

namespace {

void check_enumeration_n(int n) {
  if (n < 1 || n > kMaxEnumeratedPoints) {
    throw Error(ErrorCode::NOutOfRange,
                "n = " + std::to_string(n) + " outside 1.." + std::to_string(kMaxEnumeratedPoints));
  }
}

void extend(int n, int x, std::array<PointSet, kMaxPoints>& nbhd,
            const std::function<void(const FiniteSpace&)>& f) {
  if (x == n) {
    f(FiniteSpace::from_min_nbhds(std::span<const PointSet>(nbhd.data(), static_cast<std::size_t>(n))));
    return;
  }
  const PointSet self = PointSet::singleton(x);
  const PointSet others = PointSet::full(n) - self;
  // Candidates in increasing bit order: self plus any subset of the others.
  std::vector<PointSet> candidates;
  for_each_subset_of(others, [&](PointSet extra) { candidates.push_back(self | extra); });
  std::sort(candidates.begin(), candidates.end());
  for (PointSet u : candidates) {
    bool ok = true;
    for (int y = 0; y < x && ok; ++y) {
      const PointSet v = nbhd[static_cast<std::size_t>(y)];
      // Transitivity between x and every earlier point, in both directions.
      if (u.contains(y) && !v.subset_of(u)) ok = false;
      if (v.contains(x) && !u.subset_of(v)) ok = false;
    }
    if (!ok) continue;
    nbhd[static_cast<std::size_t>(x)] = u;
    extend(n, x + 1, nbhd, f);
  }
}

// Bitmask over the 2^n subsets (n <= 5 fits a 64-bit word).
using FamilyMask = std::uint64_t;

FamilyMask family_mask(const std::vector<PointSet>& family) {
  FamilyMask m = 0;
  for (PointSet a : family) m |= FamilyMask{1} << a.bits();
  return m;
}

// Per-space facts reused across pair and triple checks.
struct SpaceFacts {
  std::vector<PointSet> opens;
  FamilyMask nwd = 0;
  FamilyMask meager = 0;
  FamilyMask baire = 0;
  FamilyMask dense = 0;
  int density = 0;
  bool baire_space = false;
  Separation sep;
  PointSet isolated;
};

SpaceFacts compute_facts(const FiniteSpace& s) {
  SpaceFacts f;
  f.opens = s.opens();
  f.nwd = family_mask(nowhere_dense_family(s));
  for_each_subset(s.size(), [&](PointSet a) {
    if (is_meager(s, a)) f.meager |= FamilyMask{1} << a.bits();
    if (is_dense(s, a)) f.dense |= FamilyMask{1} << a.bits();
  });
  f.baire = family_mask(baire_family(s));
  f.density = density(s);
  f.baire_space = is_baire_space(s);
  f.sep = separation(s);
  f.isolated = isolated_points(s);
  return f;
}

struct Context {
  int n = 0;
  std::vector<FiniteSpace> spaces;
  std::vector<SpaceFacts> facts;
  // Used by the product check: pi-compatible pairs on two points.
  std::vector<std::pair<FiniteSpace, FiniteSpace>> small_pairs;
};

struct Partial {
  long long instances = 0;
  std::vector<Counterexample> found;
  long long found_count = 0;

  void fail(Counterexample c) {
    ++found_count;
    found.push_back(std::move(c));
    if (found.size() > 4 * kMaxReportedCounterexamples) {
      std::sort(found.begin(), found.end());
      found.resize(kMaxReportedCounterexamples);
    }
  }
};

Counterexample cex(std::vector<FiniteSpace> spaces, std::vector<PointSet> sets, std::string note) {
  return Counterexample{std::move(spaces), std::move(sets), std::move(note)};
}

using Checker = void (*)(const Context&, std::size_t, Partial&);

// ---- pair-quantified checks over pi-compatible pairs -----------------------

template <class Body>
void for_pi_pairs(const Context& c, std::size_t i, Partial& p, Body&& body) {
  const FiniteSpace& tau = c.spaces[i];
  for (std::size_t j = 0; j < c.spaces.size(); ++j) {
    const FiniteSpace& sigma = c.spaces[j];
    if (!are_pi_compatible(tau, sigma)) continue;
    ++p.instances;
    body(j);
  }
}

template <class Body>
void for_admissible_pairs(const Context& c, std::size_t i, Partial& p, Body&& body) {
  const FiniteSpace& base = c.spaces[i];
  for (std::size_t j = 0; j < c.spaces.size(); ++j) {
    if (!is_admissible_extension(base, c.spaces[j])) continue;
    ++p.instances;
    body(j);
  }
}

void check_l33(const Context& c, std::size_t i, Partial& p) {
  for_pi_pairs(c, i, p, [&](std::size_t j) {
    if (c.facts[i].nwd != c.facts[j].nwd) p.fail(cex({c.spaces[i], c.spaces[j]}, {}, "nowhere dense families differ"));
    if (c.facts[i].meager != c.facts[j].meager) p.fail(cex({c.spaces[i], c.spaces[j]}, {}, "meager families differ"));
  });
}

void check_c34(const Context& c, std::size_t i, Partial& p) {
  for_pi_pairs(c, i, p, [&](std::size_t j) {
    if (c.facts[i].baire != c.facts[j].baire) p.fail(cex({c.spaces[i], c.spaces[j]}, {}, "Baire families differ"));
  });
}

void check_decomp(const Context& c, std::size_t i, Partial& p) {
  for_pi_pairs(c, i, p, [&](std::size_t j) {
    const TopologyPair pair{c.spaces[i], c.spaces[j]};
    for (PointSet o : c.facts[i].opens) {
      if (o.empty()) continue;
      try {
        const Decomposition d = decompose_open(pair, o);
        const bool ok = (d.open_part | d.nowhere_dense_part) == o && !d.open_part.empty() &&
                        pair.sigma.is_open(d.open_part) && is_nowhere_dense(pair.tau, d.nowhere_dense_part) &&
                        is_nowhere_dense(pair.sigma, d.nowhere_dense_part);
        if (!ok) p.fail(cex({pair.tau, pair.sigma}, {o, d.open_part, d.nowhere_dense_part}, "bad decomposition"));
      } catch (const Error& e) {
        p.fail(cex({pair.tau, pair.sigma}, {o}, e.what()));
      }
    }
  });
}

void check_t5a(const Context& c, std::size_t i, Partial& p) {
  for_pi_pairs(c, i, p, [&](std::size_t j) {
    if (c.facts[i].baire_space != c.facts[j].baire_space) {
      p.fail(cex({c.spaces[i], c.spaces[j]}, {}, "Baire-space verdicts differ"));
    }
  });
}

void check_t5b(const Context& c, std::size_t i, Partial& p) {
  for_pi_pairs(c, i, p, [&](std::size_t j) {
    if (!gdelta_pi_network({c.spaces[i], c.spaces[j]})) {
      p.fail(cex({c.spaces[i], c.spaces[j]}, {}, "common G-delta sets are not a pi-network"));
    }
  });
}

void check_q3(const Context& c, std::size_t i, Partial& p) {
  for_pi_pairs(c, i, p, [&](std::size_t j) {
    const FiniteSpace common = meet(c.spaces[i], c.spaces[j]);
    if (!is_admissible_extension(common, c.spaces[i]) || !is_admissible_extension(common, c.spaces[j])) {
      p.fail(cex({c.spaces[i], c.spaces[j], common}, {}, "not both admissible extensions of the meet"));
    }
  });
}

void check_dense(const Context& c, std::size_t i, Partial& p) {
  for_pi_pairs(c, i, p, [&](std::size_t j) {
    const FamilyMask extra = c.facts[i].dense & ~c.facts[j].dense;
    if (extra != 0) {
      const PointSet a(static_cast<std::uint32_t>(std::countr_zero(extra)));
      p.fail(cex({c.spaces[i], c.spaces[j]}, {a}, "dense in tau but not in sigma"));
    }
    if (c.facts[i].density != c.facts[j].density) p.fail(cex({c.spaces[i], c.spaces[j]}, {}, "densities differ"));
  });
}

void check_product(const Context& c, std::size_t i, Partial& p) {
  const FiniteSpace& tau = c.spaces[i];
  for (std::size_t j = 0; j < c.spaces.size(); ++j) {
    const FiniteSpace& sigma = c.spaces[j];
    if (!are_pi_compatible(tau, sigma)) continue;
    for (const auto& [tau2, sigma2] : c.small_pairs) {
      ++p.instances;
      if (!are_pi_compatible(product(tau, tau2), product(sigma, sigma2))) {
        p.fail(cex({tau, sigma, tau2, sigma2}, {}, "products are not pi-compatible"));
      }
    }
  }
}

void check_semi_open(const Context& c, std::size_t i, Partial& p) {
  for_admissible_pairs(c, i, p, [&](std::size_t j) {
    for (PointSet o : c.facts[j].opens) {
      if (!o.empty() && !is_semi_open(c.spaces[i], o)) {
        p.fail(cex({c.spaces[i], c.spaces[j]}, {o}, "extension open set not semi-open in base"));
      }
    }
  });
}

void check_axioms(const Context& c, std::size_t i, Partial& p) {
  for_admissible_pairs(c, i, p, [&](std::size_t j) {
    const Separation& b = c.facts[i].sep;
    const Separation& e = c.facts[j].sep;
    if ((b.t0 && !e.t0) || (b.t1 && !e.t1) || (b.t2 && !e.t2)) {
      p.fail(cex({c.spaces[i], c.spaces[j]}, {}, "separation axiom lost in extension"));
    }
  });
}

void check_lattice_a(const Context& c, std::size_t i, Partial& p) {
  const FiniteSpace& tau = c.spaces[i];
  for (std::size_t j = 0; j < c.spaces.size(); ++j) {
    const FiniteSpace& sigma = c.spaces[j];
    if (!is_admissible_extension(tau, sigma)) continue;
    for (std::size_t k = 0; k < c.spaces.size(); ++k) {
      const FiniteSpace& nu = c.spaces[k];
      if (!sigma.coarser_or_equal(nu) || !is_admissible_extension(tau, nu)) continue;
      ++p.instances;
      if (!is_admissible_extension(sigma, nu)) p.fail(cex({tau, sigma, nu}, {}, "nu not admissible over sigma"));
    }
  }
}

void check_lattice_b(const Context& c, std::size_t i, Partial& p) {
  const FiniteSpace& tau = c.spaces[i];
  for (std::size_t j = 0; j < c.spaces.size(); ++j) {
    const FiniteSpace& sigma = c.spaces[j];
    if (!tau.coarser_or_equal(sigma)) continue;
    for (std::size_t k = 0; k < c.spaces.size(); ++k) {
      const FiniteSpace& nu = c.spaces[k];
      if (!sigma.coarser_or_equal(nu) || !is_admissible_extension(tau, nu)) continue;
      ++p.instances;
      if (!is_admissible_extension(tau, sigma)) p.fail(cex({tau, sigma, nu}, {}, "sigma not admissible over tau"));
    }
  }
}

// ---- space- and ideal-quantified checks ------------------------------------

void check_t315(const Context& c, std::size_t i, Partial& p) {
  const FiniteSpace& s = c.spaces[i];
  if (!c.facts[i].isolated.empty()) return;
  const PointSet nwd = nwd_ideal(s).generator();
  for_each_subset(s.size(), [&](PointSet gen) {
    ++p.instances;
    const StarAdmissibility r = is_star_admissible(s, Ideal(gen));
    if (r.admissible != gen.subset_of(nwd)) {
      p.fail(cex({s, star_topology(s, Ideal(gen))}, {gen}, r.admissible ? "admissible although ideal not nowhere dense"
                                                                         : "not admissible although ideal nowhere dense"));
    }
  });
}

void check_alpha(const Context& c, std::size_t i, Partial& p) {
  const FiniteSpace& s = c.spaces[i];
  ++p.instances;
  const Ideal nwd = nwd_ideal(s);
  const FiniteSpace star = star_topology(s, nwd);
  const FiniteSpace alpha = alpha_topology(s);
  if (!(star == alpha)) p.fail(cex({s, star, alpha}, {}, "star topology of the nowhere dense ideal differs from alpha"));
  for_each_subset(s.size(), [&](PointSet a) {
    if (local_function(s, nwd, a) != closure(s, interior(s, closure(s, a)))) {
      p.fail(cex({s}, {a}, "local function differs from Cl Int Cl"));
    }
  });
}

void check_p21(const Context& c, std::size_t i, Partial& p) {
  const FiniteSpace& s = c.spaces[i];
  const int n = s.size();
  PointSet nwd_points;
  bool hypothesis = true;
  for (int x = 0; x < n; ++x) {
    const PointSet pt = PointSet::singleton(x);
    if (is_nowhere_dense(s, pt)) {
      nwd_points |= pt;
    } else if (!s.is_open(pt)) {
      hypothesis = false;
    }
  }
  if (!hypothesis) return;
  ++p.instances;
  FamilyMask expected_meager = 0;
  for_each_subset_of(nwd_points, [&](PointSet a) { expected_meager |= FamilyMask{1} << a.bits(); });
  const FamilyMask all = (n == 6) ? ~FamilyMask{0} : ((FamilyMask{1} << (1u << n)) - 1);
  if (c.facts[i].meager != expected_meager) p.fail(cex({s}, {nwd_points}, "meager family is not P(Y)"));
  if (c.facts[i].baire != all) p.fail(cex({s}, {}, "not every set has the Baire property"));
}

bool kuratowski_ok(const FiniteSpace& s, const Ideal& ideal, PointSet& bad) {
  const int n = s.size();
  if (!star_closure(s, ideal, PointSet{}).empty()) {
    bad = PointSet{};
    return false;
  }
  bool ok = true;
  for_each_subset(n, [&](PointSet a) {
    if (!ok) return;
    const PointSet ca = star_closure(s, ideal, a);
    if (!a.subset_of(ca) || star_closure(s, ideal, ca) != ca) {
      ok = false;
      bad = a;
      return;
    }
    for_each_subset(n, [&](PointSet b) {
      if (ok && star_closure(s, ideal, a | b) != (ca | star_closure(s, ideal, b))) {
        ok = false;
        bad = a | b;
      }
    });
  });
  return ok;
}

void check_star_props(const Context& c, std::size_t i, Partial& p) {
  const FiniteSpace& s = c.spaces[i];
  const int n = s.size();
  const PointSet nwd = nwd_ideal(s).generator();
  const bool no_isolated = c.facts[i].isolated.empty();
  for_each_subset(n, [&](PointSet gen) {
    ++p.instances;
    const Ideal ideal(gen);
    PointSet bad;
    if (!kuratowski_ok(s, ideal, bad)) p.fail(cex({s}, {gen, bad}, "star closure violates a Kuratowski axiom"));
    const FiniteSpace star = star_topology(s, ideal);
    if (!s.coarser_or_equal(star)) p.fail(cex({s, star}, {gen}, "tau not inside star topology"));
    bool members_closed = true;
    for_each_subset_of(gen, [&](PointSet a) { members_closed = members_closed && star.is_closed(a); });
    if (!members_closed) p.fail(cex({s, star}, {gen}, "ideal member not star-closed"));
    if (!(star_topology(star, ideal) == star)) p.fail(cex({s, star}, {gen}, "star topology not idempotent"));
    const PointSet rest = PointSet::full(n) - gen;
    for_each_subset_of(rest, [&](PointSet more) {
      const PointSet bigger = gen | more;
      const FiniteSpace star2 = star_topology(s, Ideal(bigger));
      if (!star.coarser_or_equal(star2)) p.fail(cex({s, star, star2}, {gen, bigger}, "star topology not monotone"));
      if (no_isolated && bigger.subset_of(nwd) && !is_admissible_extension(star, star2)) {
        p.fail(cex({s, star, star2}, {gen, bigger}, "larger nowhere dense ideal not admissible over smaller"));
      }
    });
  });
}

struct RegistryEntry {
  TheoremInfo info;
  Checker checker;
};

constexpr std::array<RegistryEntry, 16> kRegistry{{
    {{TheoremId::L33, "L33", Domain::PiCompatiblePairs,
      "pi-compatible topologies have the same nowhere dense and meager sets"},
     check_l33},
    {{TheoremId::TDecomp, "T-DECOMP", Domain::PiCompatiblePairs,
      "each non-empty open set is a non-empty open set of the other topology plus a nowhere dense set"},
     check_decomp},
    {{TheoremId::C34, "C34", Domain::PiCompatiblePairs,
      "pi-compatible topologies have the same sets with the Baire property"},
     check_c34},
    {{TheoremId::T5A, "T5A", Domain::PiCompatiblePairs,
      "one of two pi-compatible spaces is Baire iff the other is"},
     check_t5a},
    {{TheoremId::T5B, "T5B", Domain::PiCompatiblePairs,
      "non-empty sets G-delta in both spaces form a pi-network for each"},
     check_t5b},
    {{TheoremId::PDense, "P-DENSE", Domain::PiCompatiblePairs,
      "pi-compatible topologies share dense sets and density"},
     check_dense},
    {{TheoremId::PProd, "P-PROD", Domain::PiCompatiblePairs,
      "products of pi-compatible topologies are pi-compatible (second factor: all pairs on 2 points)"},
     check_product},
    {{TheoremId::TSemiOpen, "T-SEMIOPEN", Domain::AdmissiblePairs,
      "non-empty opens of an admissible extension are semi-open in the base"},
     check_semi_open},
    {{TheoremId::PAxioms, "P-AXIOMS", Domain::AdmissiblePairs,
      "admissible extensions preserve T0, T1 and T2"},
     check_axioms},
    {{TheoremId::PLatticeA, "P-LATTICE-A", Domain::Triples,
      "if sigma <= nu are admissible over tau then nu is admissible over sigma"},
     check_lattice_a},
    {{TheoremId::PLatticeB, "P-LATTICE-B", Domain::Triples,
      "if tau <= sigma <= nu and nu is admissible over tau then so is sigma"},
     check_lattice_b},
    {{TheoremId::T315, "T315", Domain::SpaceIdeals,
      "without isolated points, the star topology is admissible iff the ideal is nowhere dense"},
     check_t315},
    {{TheoremId::EAlpha, "E-ALPHA", Domain::Spaces,
      "the nowhere dense ideal yields the alpha topology and local function Cl Int Cl"},
     check_alpha},
    {{TheoremId::P21Finite, "P21-FINITE", Domain::Spaces,
      "if each singleton is nowhere dense or open then meager = P(Y) and every set has the Baire property"},
     check_p21},
    {{TheoremId::Q3Finite, "Q3-FINITE", Domain::PiCompatiblePairs,
      "pi-compatible topologies are admissible extensions of their meet"},
     check_q3},
    {{TheoremId::StarProps, "STAR-PROPS", Domain::SpaceIdeals,
      "star closure is Kuratowski; star topology is finer, closes ideal members, is idempotent and monotone"},
     check_star_props},
}};

const RegistryEntry& entry(TheoremId id) {
  for (const auto& e : kRegistry) {
    if (e.info.id == id) return e;
  }
  throw Error(ErrorCode::UnknownTheorem, "unregistered theorem");
}

int domain_limit(Domain d, bool allow_large) {
  switch (d) {
    case Domain::Spaces:
    case Domain::SpaceIdeals: return kMaxEnumeratedPoints;
    case Domain::PiCompatiblePairs:
    case Domain::AdmissiblePairs: return allow_large ? 5 : 4;
    case Domain::Triples: return allow_large ? 4 : 3;
  }
  return 0;
}

// Runs body(begin, end, worker) over [0, count) split into contiguous ranges.
template <class Body>
void run_partitioned(std::size_t count, int jobs, Body&& body) {
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count < 2) {
    body(std::size_t{0}, count, std::size_t{0});
    return;
  }
  const std::size_t w = std::min(workers, count);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::size_t k = 0; k < w; ++k) {
    const std::size_t begin = count * k / w;
    const std::size_t end = count * (k + 1) / w;
    threads.emplace_back([&body, begin, end, k] { body(begin, end, k); });
  }
  for (auto& t : threads) t.join();
}

Context make_context(int n, int jobs, bool need_small_pairs) {
  Context c;
  c.n = n;
  c.spaces = enumerate_topologies(n);
  c.facts.resize(c.spaces.size());
  run_partitioned(c.spaces.size(), jobs, [&](std::size_t b, std::size_t e, std::size_t) {
    for (std::size_t i = b; i < e; ++i) c.facts[i] = compute_facts(c.spaces[i]);
  });
  if (need_small_pairs) {
    const auto two = enumerate_topologies(2);
    for (const auto& a : two) {
      for (const auto& b : two) {
        if (are_pi_compatible(a, b)) c.small_pairs.emplace_back(a, b);
      }
    }
  }
  return c;
}

}  // namespace

void for_each_topology(int n, const std::function<void(const FiniteSpace&)>& f) {
  check_enumeration_n(n);
  std::array<PointSet, kMaxPoints> nbhd{};
  extend(n, 0, nbhd, f);
}

std::vector<FiniteSpace> enumerate_topologies(int n) {
  std::vector<FiniteSpace> out;
  for_each_topology(n, [&](const FiniteSpace& s) { out.push_back(s); });
  return out;
}

std::span<const TheoremInfo> theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> v;
    for (const auto& e : kRegistry) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const TheoremInfo& theorem_info(TheoremId id) { return entry(id).info; }

TheoremId parse_theorem_id(std::string_view name) {
  for (const auto& e : kRegistry) {
    if (e.info.name == name) return e.info.id;
  }
  throw Error(ErrorCode::UnknownTheorem, "unknown theorem id '" + std::string(name) + "'");
}

bool Counterexample::operator<(const Counterexample& o) const {
  if (spaces.size() != o.spaces.size()) return spaces.size() < o.spaces.size();
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    if (spaces[k] < o.spaces[k]) return true;
    if (o.spaces[k] < spaces[k]) return false;
  }
  if (witness_sets != o.witness_sets) return witness_sets < o.witness_sets;
  return note < o.note;
}

std::string VerifyReport::verdict() const {
  if (!verified()) return "counterexample found";
  if (theorem == TheoremId::Q3Finite) return "no finite counterexample at n = " + std::to_string(n);
  return "verified at scale n = " + std::to_string(n);
}

VerifyReport verify(TheoremId theorem, int n, const VerifyOptions& options) {
  const RegistryEntry& e = entry(theorem);
  check_enumeration_n(n);
  const int limit = domain_limit(e.info.domain, options.allow_large);
  if (n > limit) {
    throw Error(ErrorCode::NOutOfRange, std::string(e.info.name) + " runs for n <= " + std::to_string(limit) +
                                            (options.allow_large ? "" : " (larger n needs the large flag)"));
  }
  const auto start = std::chrono::steady_clock::now();
  const Context ctx = make_context(n, options.jobs, theorem == TheoremId::PProd);

  const std::size_t workers = static_cast<std::size_t>(std::max(1, options.jobs));
  std::vector<Partial> partials(workers);
  run_partitioned(ctx.spaces.size(), options.jobs, [&](std::size_t b, std::size_t end, std::size_t k) {
    for (std::size_t i = b; i < end; ++i) e.checker(ctx, i, partials[k]);
  });

  VerifyReport r;
  r.theorem = theorem;
  r.n = n;
  for (auto& p : partials) {
    r.instances += p.instances;
    r.counterexample_count += p.found_count;
    for (auto& c : p.found) r.counterexamples.push_back(std::move(c));
  }
  std::sort(r.counterexamples.begin(), r.counterexamples.end());
  if (r.counterexamples.size() > kMaxReportedCounterexamples) r.counterexamples.resize(kMaxReportedCounterexamples);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string_view predicate_name(SearchPredicate p) {
  switch (p) {
    case SearchPredicate::Q3Finite: return "Q3-FINITE";
    case SearchPredicate::NwdEqualImpliesBaireEqual: return "NWD-EQ-IMPLIES-BAIRE-EQ";
    case SearchPredicate::BaireEqualImpliesPiCompatible: return "BAIRE-EQ-IMPLIES-PI-COMPAT";
    case SearchPredicate::AxiomsConverse: return "AXIOMS-CONVERSE";
  }
  return "";
}

std::vector<SearchPredicate> all_predicates() {
  return {SearchPredicate::Q3Finite, SearchPredicate::NwdEqualImpliesBaireEqual,
          SearchPredicate::BaireEqualImpliesPiCompatible, SearchPredicate::AxiomsConverse};
}

SearchPredicate parse_predicate(std::string_view name) {
  for (SearchPredicate p : all_predicates()) {
    if (predicate_name(p) == name) return p;
  }
  throw Error(ErrorCode::UnknownPredicate, "unknown search predicate '" + std::string(name) + "'");
}

std::optional<SearchWitness> search_counterexample(SearchPredicate pred, int n, bool allow_large) {
  check_enumeration_n(n);
  if (n > (allow_large ? 5 : 4)) {
    throw Error(ErrorCode::NOutOfRange, "pair searches run for n <= 4 unless the large flag is set");
  }
  const auto spaces = enumerate_topologies(n);
  std::vector<SpaceFacts> facts;
  facts.reserve(spaces.size());
  for (const auto& s : spaces) facts.push_back(compute_facts(s));

  for (std::size_t i = 0; i < spaces.size(); ++i) {
    for (std::size_t j = 0; j < spaces.size(); ++j) {
      const FiniteSpace& a = spaces[i];
      const FiniteSpace& b = spaces[j];
      switch (pred) {
        case SearchPredicate::Q3Finite:
          if (are_pi_compatible(a, b)) {
            const FiniteSpace m = meet(a, b);
            if (!is_admissible_extension(m, a) || !is_admissible_extension(m, b)) {
              return SearchWitness{{a, b, m}, {"tau", "sigma", "meet"},
                                   "pi-compatible pair that is not admissible over its meet"};
            }
          }
          break;
        case SearchPredicate::NwdEqualImpliesBaireEqual:
          if (facts[i].nwd == facts[j].nwd && facts[i].baire != facts[j].baire) {
            return SearchWitness{{a, b}, {"tau", "sigma"},
                                 "equal nowhere dense families, different Baire families"};
          }
          break;
        case SearchPredicate::BaireEqualImpliesPiCompatible:
          if (facts[i].baire == facts[j].baire && !are_pi_compatible(a, b)) {
            return SearchWitness{{a, b}, {"tau", "sigma"}, "equal Baire families, not pi-compatible"};
          }
          break;
        case SearchPredicate::AxiomsConverse:
          if (facts[j].sep.t0 && !facts[i].sep.t0 && is_admissible_extension(a, b)) {
            return SearchWitness{{a, b}, {"base", "extension"}, "extension is T0, base is not"};
          }
          break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace topolab
