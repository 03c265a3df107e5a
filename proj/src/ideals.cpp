#include "topolab/ideals.hpp"

#include <cassert>

#include "topolab/compat.hpp"

namespace topolab {

namespace {

// Minimal neighbourhoods of the topology with the given closed sets. The
// family is assumed to be a topology's closed family (checked in debug).
FiniteSpace from_closed_family(int n, const std::vector<bool>& closed) {
  const PointSet all = PointSet::full(n);
  std::vector<PointSet> nbhds(static_cast<std::size_t>(n), all);
  std::size_t open_count = 0;
  for_each_subset(n, [&](PointSet c) {
    if (!closed[c.bits()]) return;
    ++open_count;
    const PointSet u = c.complement(n);
    u.for_each([&](int x) { nbhds[static_cast<std::size_t>(x)] &= u; });
  });
  FiniteSpace t = FiniteSpace::from_min_nbhds(nbhds);
#ifndef NDEBUG
  std::size_t derived = 0;
  for_each_subset(n, [&](PointSet u) {
    if (t.is_open(u)) {
      assert(closed[u.complement(n).bits()]);
      ++derived;
    }
  });
  assert(derived == open_count);
#endif
  (void)open_count;
  return t;
}

}  // namespace

PointSet local_function(const FiniteSpace& s, const Ideal& ideal, PointSet a) {
  PointSet out;
  for (int x = 0; x < s.size(); ++x) {
    if (!ideal.contains(a & s.min_nbhd(x))) out |= PointSet::singleton(x);
  }
  return out;
}

PointSet star_closure(const FiniteSpace& s, const Ideal& ideal, PointSet a) {
  return a | local_function(s, ideal, a);
}

FiniteSpace star_topology(const FiniteSpace& s, const Ideal& ideal) {
  const int n = s.size();
  std::vector<bool> closed(std::size_t{1} << n, false);
  for_each_subset(n, [&](PointSet c) { closed[c.bits()] = star_closure(s, ideal, c) == c; });
  return from_closed_family(n, closed);
}

Ideal nwd_ideal(const FiniteSpace& s) {
  PointSet gen;
  for (int x = 0; x < s.size(); ++x) {
    if (is_nowhere_dense(s, PointSet::singleton(x))) gen |= PointSet::singleton(x);
  }
  assert(is_nowhere_dense(s, gen));
  return Ideal(gen);
}

FiniteSpace alpha_topology(const FiniteSpace& s) {
  const int n = s.size();
  std::vector<bool> closed(std::size_t{1} << n, false);
  for_each_subset(n, [&](PointSet a) {
    if (a.subset_of(interior(s, closure(s, interior(s, a))))) closed[a.complement(n).bits()] = true;
  });
  return from_closed_family(n, closed);
}

StarAdmissibility is_star_admissible(const FiniteSpace& s, const Ideal& ideal) {
  const FiniteSpace star = star_topology(s, ideal);
  StarAdmissibility r;
  r.admissible = is_admissible_extension(s, star);
  if (!r.admissible) {
    // s is always coarser than its star topology, so failure means some
    // minimal star-open has empty interior in s.
    for (int x = 0; x < s.size(); ++x) {
      if (interior(s, star.min_nbhd(x)).empty()) {
        r.witness = star.min_nbhd(x);
        break;
      }
    }
    assert(r.witness.has_value());
  }
  return r;
}

}  // namespace topolab
