#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topolab/core.hpp"

namespace topolab {

// A finite group on {0..n-1} given by its multiplication table.
class FiniteGroup {
 public:
  // Validates closure, associativity, identity and inverses; throws
  // InvalidGroup naming the first violation.
  FiniteGroup(std::vector<std::vector<int>> table, int identity);
  static FiniteGroup cyclic(int n);

  int order() const { return static_cast<int>(mul_.size()); }
  int identity() const { return e_; }
  int mul(int x, int y) const { return mul_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  int inverse(int x) const { return inv_[static_cast<std::size_t>(x)]; }
  const std::vector<std::vector<int>>& table() const { return mul_; }

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  int e_;
};

enum class GroupVerdict { None, Semitopological, Paratopological, Topological };
std::string_view to_string(GroupVerdict v);

struct GroupTopologyClass {
  bool left_translations_continuous = false;
  bool right_translations_continuous = false;
  bool multiplication_continuous = false;
  bool inversion_continuous = false;
  GroupVerdict verdict = GroupVerdict::None;
};

// Continuity is decided from preimages of minimal open sets; multiplication
// is a map from the product space. Throws SizeMismatch.
GroupTopologyClass classify(const FiniteGroup& g, const FiniteSpace& t);

PointSet setwise_product(const FiniteGroup& g, PointSet u, PointSet v);
PointSet setwise_inverse(const FiniteGroup& g, PointSet u);

struct AlmostTopologicalResult {
  bool holds = false;
  // Empty when holds; otherwise one message per failed clause, "; "-joined.
  std::string diagnostic;
};

// (t, gamma, base_at_e) is an almost topological group structure: t is
// paratopological, gamma is a Hausdorff group topology weaker than t,
// base_at_e is a local base at e in t, and U \ {e} is gamma-open for each
// member U. Throws SizeMismatch, EmptyBase, or InvalidArgument when a
// member misses e.
AlmostTopologicalResult is_almost_topological(const FiniteGroup& g, const FiniteSpace& t, const FiniteSpace& gamma,
                                              const std::vector<PointSet>& base_at_e);

struct GroupHattoriResult {
  FiniteSpace space;
  bool valid = false;
  std::string diagnostic;
};

// Neighbourhoods U x at points outside a and U U^-1 x at points of a, for U
// in base_at_e. The topology is generated by all of them; `valid` reports
// whether they form a neighbourhood system of that topology. Unless `force`
// is set, throws PreconditionFailed when the structure is not almost
// topological.
GroupHattoriResult group_hattori(const FiniteGroup& g, const FiniteSpace& t, const FiniteSpace& gamma,
                                 const std::vector<PointSet>& base_at_e, PointSet a, bool force = false);

}  // namespace topolab
