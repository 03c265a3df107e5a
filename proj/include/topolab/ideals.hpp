#pragma once

#include <optional>

#include "topolab/core.hpp"

namespace topolab {

// An ideal of subsets of a finite ground set. Such an ideal is closed under
// finite unions and subsets, so it has a largest member and equals the
// power set of that generator.
class Ideal {
 public:
  constexpr Ideal() = default;
  constexpr explicit Ideal(PointSet generator) : generator_(generator) {}

  constexpr PointSet generator() const { return generator_; }
  constexpr bool contains(PointSet a) const { return a.subset_of(generator_); }
  constexpr bool operator==(const Ideal&) const = default;

 private:
  PointSet generator_;
};

// Points x such that A meets every open neighbourhood of x in a set outside
// the ideal. Decided on minimal neighbourhoods, which suffice because ideals
// are closed under subsets.
PointSet local_function(const FiniteSpace& s, const Ideal& ideal, PointSet a);
PointSet star_closure(const FiniteSpace& s, const Ideal& ideal, PointSet a);
// The topology whose closed sets are the fixed points of star_closure.
FiniteSpace star_topology(const FiniteSpace& s, const Ideal& ideal);

// The ideal of nowhere dense sets.
Ideal nwd_ideal(const FiniteSpace& s);
// Opens are the sets A with A inside Int Cl Int A.
FiniteSpace alpha_topology(const FiniteSpace& s);

struct StarAdmissibility {
  bool admissible = false;
  // When not admissible: a star-open set containing no non-empty open of s.
  std::optional<PointSet> witness;
};

StarAdmissibility is_star_admissible(const FiniteSpace& s, const Ideal& ideal);

}  // namespace topolab
