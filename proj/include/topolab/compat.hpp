#pragma once

#include "topolab/core.hpp"

namespace topolab {

// Two topologies on the same ground set.
struct TopologyPair {
  FiniteSpace tau;
  FiniteSpace sigma;
};

// An open set of tau written as a sigma-open part plus a remainder that is
// nowhere dense in both topologies. The remainder is open_part's complement
// inside the decomposed set, so the two are disjoint.
struct Decomposition {
  PointSet open_part;
  PointSet nowhere_dense_part;
};

// Every non-empty open of sigma contains a non-empty open of tau.
bool is_pi_network(const FiniteSpace& tau, const FiniteSpace& sigma);
bool are_pi_compatible(const FiniteSpace& tau, const FiniteSpace& sigma);
// opens(base) is inside opens(ext) and base is a pi-network for ext.
bool is_admissible_extension(const FiniteSpace& base, const FiniteSpace& ext);

// Splits a non-empty tau-open set o into Int_sigma(o) and the rest.
// Throws NotPiCompatible, NotOpen or EmptyInput.
Decomposition decompose_open(const TopologyPair& pair, PointSet o);

// The topology whose opens are open in both.
FiniteSpace meet(const FiniteSpace& tau, const FiniteSpace& sigma);

// Whether the non-empty sets that are G-delta in both spaces form a
// pi-network for each of them. On a finite space G-delta sets are exactly
// the open sets, so the family is the non-empty opens of the meet.
bool gdelta_pi_network(const TopologyPair& pair);

}  // namespace topolab
