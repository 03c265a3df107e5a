#include "topolab/topgroups.hpp"

#include <functional>
#include <string>

namespace topolab {

namespace {

void require_order(const FiniteGroup& g, const FiniteSpace& t, const char* what) {
  if (g.order() != t.size()) {
    throw Error(ErrorCode::SizeMismatch, std::string(what) + " has " + std::to_string(t.size()) +
                                             " points but the group has order " + std::to_string(g.order()));
  }
}

// f continuous iff the preimage of every minimal open of the codomain is
// open; unions of minimal opens give all opens.
bool continuous(const FiniteSpace& dom, const FiniteSpace& cod, const std::function<int(int)>& f) {
  for (PointSet target : cod.minimal_opens()) {
    PointSet pre;
    for (int x = 0; x < dom.size(); ++x) {
      if (target.contains(f(x))) pre |= PointSet::singleton(x);
    }
    if (!dom.is_open(pre)) return false;
  }
  return true;
}

bool multiplication_continuous(const FiniteGroup& g, const FiniteSpace& t) {
  const int n = g.order();
  if (n * n <= kMaxPoints) {
    const FiniteSpace square = product(t, t);
    return continuous(square, t, [&](int p) { return g.mul(p / n, p % n); });
  }
  // Same criterion without materializing the product: the smallest open box
  // around (x, y) is mn(x) x mn(y).
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!setwise_product(g, t.min_nbhd(x), t.min_nbhd(y)).subset_of(t.min_nbhd(g.mul(x, y)))) return false;
    }
  }
  return true;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, int identity) : mul_(std::move(table)), e_(identity) {
  const int n = static_cast<int>(mul_.size());
  auto fail = [](const std::string& why) { return Error(ErrorCode::InvalidGroup, why); };
  if (n < 1 || n > kMaxPoints) throw fail("group order must be 1.." + std::to_string(kMaxPoints));
  if (e_ < 0 || e_ >= n) throw fail("identity index out of range");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(mul_[static_cast<std::size_t>(x)].size()) != n) throw fail("table is not square");
    for (int y = 0; y < n; ++y) {
      const int v = mul(x, y);
      if (v < 0 || v >= n) throw fail("product " + std::to_string(x) + "*" + std::to_string(y) + " out of range");
    }
  }
  for (int x = 0; x < n; ++x) {
    if (mul(e_, x) != x || mul(x, e_) != x) throw fail(std::to_string(e_) + " is not an identity at " + std::to_string(x));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          throw fail("not associative at (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  inv_.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (mul(x, y) == e_ && mul(y, x) == e_) inv_[static_cast<std::size_t>(x)] = y;
    }
    if (inv_[static_cast<std::size_t>(x)] < 0) throw fail(std::to_string(x) + " has no inverse");
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (x + y) % n;
  }
  return FiniteGroup(std::move(mul), 0);
}

std::string_view to_string(GroupVerdict v) {
  switch (v) {
    case GroupVerdict::None: return "none";
    case GroupVerdict::Semitopological: return "semitopological";
    case GroupVerdict::Paratopological: return "paratopological";
    case GroupVerdict::Topological: return "topological";
  }
  return "";
}

GroupTopologyClass classify(const FiniteGroup& g, const FiniteSpace& t) {
  require_order(g, t, "topology");
  const int n = g.order();
  GroupTopologyClass c;
  c.left_translations_continuous = true;
  c.right_translations_continuous = true;
  for (int a = 0; a < n; ++a) {
    c.left_translations_continuous =
        c.left_translations_continuous && continuous(t, t, [&](int x) { return g.mul(a, x); });
    c.right_translations_continuous =
        c.right_translations_continuous && continuous(t, t, [&](int x) { return g.mul(x, a); });
  }
  c.multiplication_continuous = multiplication_continuous(g, t);
  c.inversion_continuous = continuous(t, t, [&](int x) { return g.inverse(x); });
  if (c.multiplication_continuous && c.inversion_continuous) {
    c.verdict = GroupVerdict::Topological;
  } else if (c.multiplication_continuous) {
    c.verdict = GroupVerdict::Paratopological;
  } else if (c.left_translations_continuous && c.right_translations_continuous) {
    c.verdict = GroupVerdict::Semitopological;
  }
  return c;
}

PointSet setwise_product(const FiniteGroup& g, PointSet u, PointSet v) {
  PointSet out;
  u.for_each([&](int x) { v.for_each([&](int y) { out |= PointSet::singleton(g.mul(x, y)); }); });
  return out;
}

PointSet setwise_inverse(const FiniteGroup& g, PointSet u) {
  PointSet out;
  u.for_each([&](int x) { out |= PointSet::singleton(g.inverse(x)); });
  return out;
}

AlmostTopologicalResult is_almost_topological(const FiniteGroup& g, const FiniteSpace& t, const FiniteSpace& gamma,
                                              const std::vector<PointSet>& base_at_e) {
  require_order(g, t, "topology");
  require_order(g, gamma, "gamma");
  if (base_at_e.empty()) throw Error(ErrorCode::EmptyBase, "the local base at the identity is empty");
  const int e = g.identity();
  for (PointSet u : base_at_e) {
    if (!u.contains(e) || !u.subset_of(t.universe())) {
      throw Error(ErrorCode::InvalidArgument, "base member " + to_string(u) + " does not contain the identity " +
                                                  std::to_string(e) + " or leaves the group");
    }
  }
  // One message per failed clause, in clause order.
  std::vector<std::string> failed;

  const GroupVerdict tv = classify(g, t).verdict;
  if (tv != GroupVerdict::Paratopological && tv != GroupVerdict::Topological) {
    failed.push_back("(i) tau is not a paratopological group topology (verdict: " + std::string(to_string(tv)) + ")");
  }
  if (!gamma.coarser_or_equal(t)) {
    failed.push_back("(ii) gamma is not weaker than tau");
  } else if (!separation(gamma).t2) {
    failed.push_back("(ii) gamma is not Hausdorff");
  } else if (classify(g, gamma).verdict != GroupVerdict::Topological) {
    failed.push_back("(ii) gamma is not a group topology");
  }
  bool inside = false;
  std::string not_open;
  for (PointSet u : base_at_e) {
    if (!t.is_open(u) && not_open.empty()) not_open = "(iii) base member " + to_string(u) + " is not open in tau";
    inside = inside || u.subset_of(t.min_nbhd(e));
  }
  if (!not_open.empty()) {
    failed.push_back(not_open);
  } else if (!inside) {
    failed.push_back("(iii) no base member inside the smallest tau-neighbourhood " + to_string(t.min_nbhd(e)));
  }
  for (PointSet u : base_at_e) {
    const PointSet punctured = u - PointSet::singleton(e);
    if (!gamma.is_open(punctured)) {
      failed.push_back("(iv) " + to_string(punctured) + " is not open in gamma");
      break;
    }
  }
  AlmostTopologicalResult r{failed.empty(), ""};
  for (const auto& f : failed) r.diagnostic += (r.diagnostic.empty() ? "" : "; ") + f;
  return r;
}

GroupHattoriResult group_hattori(const FiniteGroup& g, const FiniteSpace& t, const FiniteSpace& gamma,
                                 const std::vector<PointSet>& base_at_e, PointSet a, bool force) {
  const AlmostTopologicalResult pre = is_almost_topological(g, t, gamma, base_at_e);
  if (!pre.holds && !force) {
    throw Error(ErrorCode::PreconditionFailed, "not an almost topological group: " + pre.diagnostic);
  }
  const int n = g.order();
  if (!a.subset_of(t.universe())) throw Error(ErrorCode::InvalidArgument, "set " + to_string(a) + " leaves the group");

  std::vector<std::vector<PointSet>> system(static_cast<std::size_t>(n));
  std::vector<PointSet> subbasis;
  for (int x = 0; x < n; ++x) {
    const PointSet at_x = PointSet::singleton(x);
    for (PointSet u : base_at_e) {
      const PointSet core = a.contains(x) ? setwise_product(g, u, setwise_inverse(g, u)) : u;
      const PointSet nbhd = setwise_product(g, core, at_x);
      system[static_cast<std::size_t>(x)].push_back(nbhd);
      subbasis.push_back(nbhd);
    }
  }
  GroupHattoriResult r{FiniteSpace::generate(n, subbasis), true, ""};
  auto invalid = [&](std::string why) {
    if (r.valid) {
      r.valid = false;
      r.diagnostic = std::move(why);
    }
  };
  for (int x = 0; x < n && r.valid; ++x) {
    const auto& bx = system[static_cast<std::size_t>(x)];
    const std::string at = " at " + std::to_string(x);
    bool local_base = false;
    for (PointSet v : bx) {
      if (!v.contains(x)) invalid("neighbourhood " + to_string(v) + at + " misses its point");
      local_base = local_base || v.subset_of(r.space.min_nbhd(x));
      v.for_each([&](int y) {
        bool found = false;
        for (PointSet w : system[static_cast<std::size_t>(y)]) found = found || w.subset_of(v);
        if (!found) invalid("neighbourhood " + to_string(v) + at + " contains no neighbourhood of " + std::to_string(y));
      });
      for (PointSet w : bx) {
        bool found = false;
        for (PointSet z : bx) found = found || z.subset_of(v & w);
        if (!found) invalid("no neighbourhood" + at + " inside " + to_string(v & w));
      }
    }
    if (!local_base) invalid("neighbourhoods" + at + " are not a local base of the generated topology");
  }
  return r;
}

}  // namespace topolab
