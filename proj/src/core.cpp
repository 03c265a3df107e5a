#include "topolab/core.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace topolab {

namespace {

void check_ground_size(int n) {
  if (n < 1 || n > kMaxPoints) {
    throw Error(ErrorCode::TooLarge,
                "ground set size " + std::to_string(n) + " outside 1.." + std::to_string(kMaxPoints));
  }
}

void check_within(int n, PointSet a, const char* what) {
  if (!a.subset_of(PointSet::full(n))) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " " + to_string(a) + " has points outside 0.." + std::to_string(n - 1));
  }
}

}  // namespace

std::string to_string(PointSet a) {
  std::string out = "{";
  bool first = true;
  a.for_each([&](int x) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  });
  out += '}';
  return out;
}

FiniteSpace::FiniteSpace(int n) : n_(n) {
  for (int x = 0; x < n; ++x) nbhd_[static_cast<std::size_t>(x)] = PointSet::singleton(x);
}

FiniteSpace FiniteSpace::discrete(int n) {
  check_ground_size(n);
  return FiniteSpace(n);
}

FiniteSpace FiniteSpace::trivial(int n) {
  check_ground_size(n);
  FiniteSpace s(n);
  for (int x = 0; x < n; ++x) s.nbhd_[static_cast<std::size_t>(x)] = PointSet::full(n);
  return s;
}

FiniteSpace FiniteSpace::from_min_nbhds(std::span<const PointSet> min_nbhds) {
  const int n = static_cast<int>(min_nbhds.size());
  check_ground_size(n);
  FiniteSpace s(n);
  for (int x = 0; x < n; ++x) {
    const PointSet u = min_nbhds[static_cast<std::size_t>(x)];
    check_within(n, u, "neighbourhood");
    if (!u.contains(x)) {
      throw Error(ErrorCode::NotATopology,
                  "min_nbhd(" + std::to_string(x) + ") = " + to_string(u) + " does not contain " +
                      std::to_string(x));
    }
    s.nbhd_[static_cast<std::size_t>(x)] = u;
  }
  for (int x = 0; x < n; ++x) {
    const PointSet u = s.min_nbhd(x);
    bool ok = true;
    int bad = -1;
    u.for_each([&](int y) {
      if (ok && !s.min_nbhd(y).subset_of(u)) {
        ok = false;
        bad = y;
      }
    });
    if (!ok) {
      throw Error(ErrorCode::NotATopology,
                  "neighbourhoods not transitive: " + std::to_string(bad) + " in min_nbhd(" +
                      std::to_string(x) + ") but min_nbhd(" + std::to_string(bad) + ") = " +
                      to_string(s.min_nbhd(bad)) + " is not inside " + to_string(u));
    }
  }
  return s;
}

FiniteSpace FiniteSpace::from_opens(int n, std::span<const PointSet> opens) {
  check_ground_size(n);
  const PointSet all = PointSet::full(n);
  std::vector<bool> member(std::size_t{1} << n, false);
  for (PointSet u : opens) {
    check_within(n, u, "open set");
    member[u.bits()] = true;
  }
  if (!member[0]) throw Error(ErrorCode::NotATopology, "empty set missing from the open family");
  if (!member[all.bits()]) {
    throw Error(ErrorCode::NotATopology, "whole set " + to_string(all) + " missing from the open family");
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      const PointSet a = opens[i];
      const PointSet b = opens[j];
      if (!member[(a | b).bits()]) {
        throw Error(ErrorCode::NotATopology,
                    "union of " + to_string(a) + " and " + to_string(b) + " is not open");
      }
      if (!member[(a & b).bits()]) {
        throw Error(ErrorCode::NotATopology,
                    "intersection of " + to_string(a) + " and " + to_string(b) + " is not open");
      }
    }
  }
  FiniteSpace s(n);
  for (int x = 0; x < n; ++x) {
    PointSet m = all;
    for (PointSet u : opens) {
      if (u.contains(x)) m &= u;
    }
    s.nbhd_[static_cast<std::size_t>(x)] = m;
  }
  return s;
}

FiniteSpace FiniteSpace::generate(int n, std::span<const PointSet> subbasis) {
  check_ground_size(n);
  // The minimal open set around x in the generated topology is the
  // intersection of the subbasic sets containing x.
  FiniteSpace s(n);
  for (PointSet u : subbasis) check_within(n, u, "subbasic set");
  for (int x = 0; x < n; ++x) {
    PointSet m = PointSet::full(n);
    for (PointSet u : subbasis) {
      if (u.contains(x)) m &= u;
    }
    s.nbhd_[static_cast<std::size_t>(x)] = m;
  }
  return s;
}

bool FiniteSpace::is_open(PointSet a) const {
  bool ok = true;
  a.for_each([&](int x) { ok = ok && min_nbhd(x).subset_of(a); });
  return ok;
}

std::vector<PointSet> FiniteSpace::opens() const {
  std::vector<PointSet> out;
  for_each_subset(n_, [&](PointSet a) {
    if (is_open(a)) out.push_back(a);
  });
  return out;
}

std::vector<PointSet> FiniteSpace::minimal_opens() const {
  std::vector<PointSet> out(min_nbhds().begin(), min_nbhds().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool FiniteSpace::coarser_or_equal(const FiniteSpace& other) const {
  if (n_ != other.n_) return false;
  // Every open of *this is open in other iff each minimal neighbourhood is.
  for (int x = 0; x < n_; ++x) {
    if (!other.min_nbhd(x).subset_of(min_nbhd(x))) return false;
  }
  return true;
}

bool FiniteSpace::operator==(const FiniteSpace& o) const {
  return n_ == o.n_ && std::equal(nbhd_.begin(), nbhd_.begin() + n_, o.nbhd_.begin());
}

bool FiniteSpace::operator<(const FiniteSpace& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return std::lexicographical_compare(nbhd_.begin(), nbhd_.begin() + n_, o.nbhd_.begin(),
                                      o.nbhd_.begin() + o.n_);
}

PointSet interior(const FiniteSpace& s, PointSet a) {
  PointSet out;
  for (int x = 0; x < s.size(); ++x) {
    if (s.min_nbhd(x).subset_of(a)) out |= PointSet::singleton(x);
  }
  return out;
}

PointSet closure(const FiniteSpace& s, PointSet a) {
  PointSet out;
  for (int x = 0; x < s.size(); ++x) {
    if (s.min_nbhd(x).meets(a)) out |= PointSet::singleton(x);
  }
  return out;
}

bool is_dense(const FiniteSpace& s, PointSet a) { return closure(s, a) == s.universe(); }

bool is_nowhere_dense(const FiniteSpace& s, PointSet a) { return interior(s, closure(s, a)).empty(); }

bool is_meager(const FiniteSpace& s, PointSet a) {
#ifndef NDEBUG
  // Finite unions of nowhere dense sets stay nowhere dense, so the largest
  // nowhere dense set is the union of the nowhere dense singletons.
  PointSet nwd_points;
  for (int x = 0; x < s.size(); ++x) {
    if (is_nowhere_dense(s, PointSet::singleton(x))) nwd_points |= PointSet::singleton(x);
  }
  assert(is_nowhere_dense(s, nwd_points));
  assert(is_nowhere_dense(s, a) == a.subset_of(nwd_points));
#endif
  return is_nowhere_dense(s, a);
}

std::vector<PointSet> nowhere_dense_family(const FiniteSpace& s) {
  std::vector<PointSet> out;
  for_each_subset(s.size(), [&](PointSet a) {
    if (is_nowhere_dense(s, a)) out.push_back(a);
  });
  return out;
}

// A = (O \ M) u N with M, N meager implies A ^ O is inside M u N, hence
// meager. Conversely if A ^ O is meager then A = (O \ (O \ A)) u (A \ O)
// with both differences meager. So the symmetric-difference test is exact.
bool has_baire_property(const FiniteSpace& s, PointSet a) {
  for (PointSet o : s.opens()) {
    if (is_meager(s, a ^ o)) return true;
  }
  return false;
}

std::vector<PointSet> baire_family(const FiniteSpace& s) {
  const auto opens = s.opens();
  std::vector<PointSet> out;
  for_each_subset(s.size(), [&](PointSet a) {
    for (PointSet o : opens) {
      if (is_meager(s, a ^ o)) {
        out.push_back(a);
        return;
      }
    }
  });
  return out;
}

bool is_baire_space(const FiniteSpace& s) {
  PointSet meet = s.universe();
  for (PointSet o : s.opens()) {
    if (is_dense(s, o)) meet &= o;
  }
  return is_dense(s, meet);
}

int density(const FiniteSpace& s) {
  const int n = s.size();
  for (int k = 0; k <= n; ++k) {
    bool found = false;
    for_each_subset(n, [&](PointSet a) {
      if (!found && a.size() == k && is_dense(s, a)) found = true;
    });
    if (found) return k;
  }
  return n;
}

bool is_connected(const FiniteSpace& s) {
  const PointSet all = s.universe();
  for (PointSet o : s.opens()) {
    if (!o.empty() && o != all && s.is_closed(o)) return false;
  }
  return true;
}

PointSet isolated_points(const FiniteSpace& s) {
  PointSet out;
  for (int x = 0; x < s.size(); ++x) {
    if (s.min_nbhd(x) == PointSet::singleton(x)) out |= PointSet::singleton(x);
  }
  return out;
}

Separation separation(const FiniteSpace& s) {
  // Each flag is evaluated from its own definition; minimal neighbourhoods
  // are the smallest opens around each point.
  Separation sep{true, true, true};
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y) {
      if (x == y) continue;
      const bool y_near_x = s.min_nbhd(x).contains(y);
      const bool x_near_y = s.min_nbhd(y).contains(x);
      if (y_near_x && x_near_y) sep.t0 = false;
      if (y_near_x) sep.t1 = false;
      if (s.min_nbhd(x).meets(s.min_nbhd(y))) sep.t2 = false;
    }
  }
  return sep;
}

bool is_semi_open(const FiniteSpace& s, PointSet a) { return a.subset_of(closure(s, interior(s, a))); }

FiniteSpace product(std::span<const FiniteSpace> factors) {
  if (factors.empty()) return FiniteSpace::discrete(1);
  long total = 1;
  for (const auto& f : factors) {
    total *= f.size();
    if (total > kMaxPoints) {
      throw Error(ErrorCode::TooLarge, "product ground set exceeds " + std::to_string(kMaxPoints) + " points");
    }
  }
  const int n = static_cast<int>(total);
  std::vector<PointSet> nbhds(static_cast<std::size_t>(n));
  std::vector<int> digits(factors.size());
  for (int p = 0; p < n; ++p) {
    int rest = p;
    for (std::size_t k = factors.size(); k-- > 0;) {
      digits[k] = rest % factors[k].size();
      rest /= factors[k].size();
    }
    // Enumerate all tuples whose coordinates lie in the coordinate nbhds.
    PointSet m;
    for (int q = 0; q < n; ++q) {
      int r = q;
      bool in = true;
      for (std::size_t k = factors.size(); k-- > 0 && in;) {
        const int d = r % factors[k].size();
        r /= factors[k].size();
        in = factors[k].min_nbhd(digits[k]).contains(d);
      }
      if (in) m |= PointSet::singleton(q);
    }
    nbhds[static_cast<std::size_t>(p)] = m;
  }
  return FiniteSpace::from_min_nbhds(nbhds);
}

FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b) {
  const FiniteSpace fs[] = {a, b};
  return product(std::span<const FiniteSpace>(fs));
}

SpaceReport analyze(const FiniteSpace& s) {
  SpaceReport r;
  r.separation = separation(s);
  r.density = density(s);
  r.isolated_points = isolated_points(s);
  r.is_connected = is_connected(s);
  r.is_baire = is_baire_space(s);
  for (int x = 0; x < s.size(); ++x) {
    if (is_nowhere_dense(s, PointSet::singleton(x))) r.nwd_max |= PointSet::singleton(x);
  }
  return r;
}

}  // namespace topolab
