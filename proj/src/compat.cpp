#include "topolab/compat.hpp"

#include <string>

namespace topolab {

namespace {

void require_same_size(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::GroundSetMismatch,
                "ground sets differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " points");
  }
}

}  // namespace

bool is_pi_network(const FiniteSpace& tau, const FiniteSpace& sigma) {
  require_same_size(tau, sigma);
  // Each non-empty sigma-open contains a minimal neighbourhood, so checking
  // the minimal ones is enough. A set contains a non-empty tau-open iff its
  // tau-interior is non-empty.
  for (int x = 0; x < sigma.size(); ++x) {
    if (interior(tau, sigma.min_nbhd(x)).empty()) return false;
  }
  return true;
}

bool are_pi_compatible(const FiniteSpace& tau, const FiniteSpace& sigma) {
  return is_pi_network(tau, sigma) && is_pi_network(sigma, tau);
}

bool is_admissible_extension(const FiniteSpace& base, const FiniteSpace& ext) {
  require_same_size(base, ext);
  return base.coarser_or_equal(ext) && is_pi_network(base, ext);
}

Decomposition decompose_open(const TopologyPair& pair, PointSet o) {
  require_same_size(pair.tau, pair.sigma);
  if (o.empty()) throw Error(ErrorCode::EmptyInput, "cannot decompose the empty set");
  if (!o.subset_of(pair.tau.universe()) || !pair.tau.is_open(o)) {
    throw Error(ErrorCode::NotOpen, to_string(o) + " is not open in tau");
  }
  if (!are_pi_compatible(pair.tau, pair.sigma)) {
    throw Error(ErrorCode::NotPiCompatible, "the pair is not pi-compatible");
  }
  Decomposition d;
  d.open_part = interior(pair.sigma, o);
  d.nowhere_dense_part = o - d.open_part;
  if (d.open_part.empty() || !is_nowhere_dense(pair.tau, d.nowhere_dense_part) ||
      !is_nowhere_dense(pair.sigma, d.nowhere_dense_part)) {
    throw Error(ErrorCode::PreconditionFailed,
                "decomposition of " + to_string(o) + " failed: open part " + to_string(d.open_part) +
                    ", remainder " + to_string(d.nowhere_dense_part));
  }
  return d;
}

FiniteSpace meet(const FiniteSpace& tau, const FiniteSpace& sigma) {
  require_same_size(tau, sigma);
  // The smallest set around x that is open in both: close {x} under both
  // neighbourhood maps until it stops growing.
  const int n = tau.size();
  std::vector<PointSet> nbhds(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    PointSet u = PointSet::singleton(x);
    while (true) {
      PointSet grown = u;
      u.for_each([&](int y) { grown |= tau.min_nbhd(y) | sigma.min_nbhd(y); });
      if (grown == u) break;
      u = grown;
    }
    nbhds[static_cast<std::size_t>(x)] = u;
  }
  return FiniteSpace::from_min_nbhds(nbhds);
}

bool gdelta_pi_network(const TopologyPair& pair) {
  if (!are_pi_compatible(pair.tau, pair.sigma)) {
    throw Error(ErrorCode::NotPiCompatible, "the pair is not pi-compatible");
  }
  const FiniteSpace common = meet(pair.tau, pair.sigma);
  return is_pi_network(common, pair.tau) && is_pi_network(common, pair.sigma);
}

}  // namespace topolab
