#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/core.hpp"

namespace topolab {

inline constexpr int kMaxEnumeratedPoints = 5;

// Every labelled topology on n points (1 <= n <= 5) exactly once, in a fixed
// order. Generated as reflexive transitive relations by backtracking over
// the minimal neighbourhood of each point in turn.
std::vector<FiniteSpace> enumerate_topologies(int n);
void for_each_topology(int n, const std::function<void(const FiniteSpace&)>& f);

enum class TheoremId {
  L33,
  TDecomp,
  C34,
  T5A,
  T5B,
  PDense,
  PProd,
  TSemiOpen,
  PAxioms,
  PLatticeA,
  PLatticeB,
  T315,
  EAlpha,
  P21Finite,
  Q3Finite,
  StarProps,
};

// What a checker quantifies over.
enum class Domain {
  Spaces,
  SpaceIdeals,
  PiCompatiblePairs,
  AdmissiblePairs,
  Triples,
};

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  Domain domain;
  std::string_view claim;
};

std::span<const TheoremInfo> theorem_registry();
const TheoremInfo& theorem_info(TheoremId id);
// Throws UnknownTheorem.
TheoremId parse_theorem_id(std::string_view name);

struct Counterexample {
  std::vector<FiniteSpace> spaces;
  std::vector<PointSet> witness_sets;
  std::string note;

  bool operator<(const Counterexample& o) const;
};

struct VerifyReport {
  TheoremId theorem = TheoremId::L33;
  int n = 0;
  long long instances = 0;
  // Sorted by canonical encoding, at most kMaxReportedCounterexamples.
  std::vector<Counterexample> counterexamples;
  long long counterexample_count = 0;
  long long elapsed_ms = 0;

  bool verified() const { return counterexample_count == 0; }
  std::string verdict() const;
};

inline constexpr std::size_t kMaxReportedCounterexamples = 32;

struct VerifyOptions {
  int jobs = 1;
  // Permits n = 5 for pair-quantified and n = 4 for triple-quantified checks.
  bool allow_large = false;
};

// Throws NOutOfRange when n exceeds the theorem's domain limit.
VerifyReport verify(TheoremId theorem, int n, const VerifyOptions& options = {});

enum class SearchPredicate {
  // pi-compatible pairs where one side is not an admissible extension of
  // the meet
  Q3Finite,
  // equal nowhere dense families but different Baire families
  NwdEqualImpliesBaireEqual,
  // equal Baire families but not pi-compatible
  BaireEqualImpliesPiCompatible,
  // admissible pairs whose extension is T0 while the base is not
  AxiomsConverse,
};

std::string_view predicate_name(SearchPredicate p);
// Throws UnknownPredicate.
SearchPredicate parse_predicate(std::string_view name);
std::vector<SearchPredicate> all_predicates();

struct SearchWitness {
  std::vector<FiniteSpace> spaces;
  std::vector<std::string> roles;
  std::string note;
};

// First violation in enumeration order, or nothing.
std::optional<SearchWitness> search_counterexample(SearchPredicate p, int n, bool allow_large = false);

}  // namespace topolab
