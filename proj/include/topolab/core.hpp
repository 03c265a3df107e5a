#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "topolab/error.hpp"
#include "topolab/point_set.hpp"

namespace topolab {

// A topology on {0..n-1}, stored canonically by the minimal open
// neighbourhood of each point (equivalently, its specialization preorder).
// A set is open iff it contains the minimal neighbourhood of each member.
class FiniteSpace {
 public:
  // One-point space.
  FiniteSpace() : FiniteSpace(1) {}

  // Extensional construction. Throws NotATopology naming the offending
  // set or pair when the family is not a topology.
  static FiniteSpace from_opens(int n, std::span<const PointSet> opens);
  // Throws NotATopology unless x is in its own neighbourhood and the
  // neighbourhoods are transitive.
  static FiniteSpace from_min_nbhds(std::span<const PointSet> min_nbhds);
  // Smallest topology containing the subbasis.
  static FiniteSpace generate(int n, std::span<const PointSet> subbasis);
  static FiniteSpace discrete(int n);
  static FiniteSpace trivial(int n);

  int size() const { return n_; }
  PointSet universe() const { return PointSet::full(n_); }
  PointSet min_nbhd(int x) const { return nbhd_[static_cast<std::size_t>(x)]; }
  std::span<const PointSet> min_nbhds() const { return {nbhd_.data(), static_cast<std::size_t>(n_)}; }

  bool is_open(PointSet a) const;
  bool is_closed(PointSet a) const { return is_open(a.complement(n_)); }
  // All open sets, ascending by bit pattern.
  std::vector<PointSet> opens() const;
  // Distinct minimal neighbourhoods; every non-empty open contains one.
  std::vector<PointSet> minimal_opens() const;
  // opens(*this) is a subfamily of opens(other).
  bool coarser_or_equal(const FiniteSpace& other) const;

  bool operator==(const FiniteSpace& o) const;
  // Total order on canonical encodings (size, then neighbourhood vector).
  bool operator<(const FiniteSpace& o) const;

 private:
  explicit FiniteSpace(int n);

  int n_;
  std::array<PointSet, kMaxPoints> nbhd_{};
};

struct Separation {
  bool t0 = false;
  bool t1 = false;
  bool t2 = false;
};

struct SpaceReport {
  Separation separation;
  int density = 0;
  PointSet isolated_points;
  bool is_connected = false;
  bool is_baire = false;
  PointSet nwd_max;  // largest nowhere dense set
};

PointSet interior(const FiniteSpace& s, PointSet a);
PointSet closure(const FiniteSpace& s, PointSet a);

bool is_dense(const FiniteSpace& s, PointSet a);
bool is_nowhere_dense(const FiniteSpace& s, PointSet a);
// On a finite space a countable union of nowhere dense sets is a finite
// union, hence nowhere dense; meager and nowhere dense coincide.
bool is_meager(const FiniteSpace& s, PointSet a);
std::vector<PointSet> nowhere_dense_family(const FiniteSpace& s);

bool has_baire_property(const FiniteSpace& s, PointSet a);
std::vector<PointSet> baire_family(const FiniteSpace& s);
bool is_baire_space(const FiniteSpace& s);

int density(const FiniteSpace& s);
bool is_connected(const FiniteSpace& s);
PointSet isolated_points(const FiniteSpace& s);
Separation separation(const FiniteSpace& s);
bool is_semi_open(const FiniteSpace& s, PointSet a);

// Points of the product are tuples indexed row-major (first factor most
// significant). Throws TooLarge beyond kMaxPoints.
FiniteSpace product(std::span<const FiniteSpace> factors);
FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b);

SpaceReport analyze(const FiniteSpace& s);

std::string to_string(PointSet a);

}  // namespace topolab
