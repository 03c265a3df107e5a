#pragma once

// Random interval sets and sample-point reference checks for the line.

#include <algorithm>
#include <random>
#include <vector>

#include "topolab/realline.hpp"

namespace line_oracle {

using namespace topolab::line;

// Endpoints k/2 for k in -8..8, with occasional infinite ends and points.
inline IntervalSet random_set(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_int_distribution<int> coord(-8, 8);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> die(0, 9);
  std::vector<Piece> pieces;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    Rat a(coord(rng), 2);
    Rat b(coord(rng), 2);
    if (b < a) std::swap(a, b);
    Piece p;
    if (die(rng) == 0 || a == b) {
      p = {Endpoint::at(a), true, Endpoint::at(a), true};
    } else {
      p = {Endpoint::at(a), coin(rng) == 1, Endpoint::at(b), coin(rng) == 1};
    }
    if (die(rng) == 0) p = {Endpoint::neg_inf(), false, p.hi, p.hi_closed};
    if (die(rng) == 0) p = {p.lo, p.lo.finite() && p.lo_closed, Endpoint::pos_inf(), false};
    pieces.push_back(p);
  }
  if (die(rng) == 0) return IntervalSet::full_line();
  return IntervalSet::from_pieces(pieces);
}

// Points where behaviour can change plus points between and beyond them.
inline std::vector<Rat> probes(const std::vector<IntervalSet>& sets) {
  std::vector<Rat> cuts;
  for (const auto& s : sets)
    for (const auto& e : s.endpoints()) cuts.push_back(e);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Rat> out{Rat(-100), Rat(100)};
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    out.push_back(cuts[i]);
    if (i + 1 < cuts.size()) out.push_back((cuts[i] + cuts[i + 1]) / 2);
  }
  if (!cuts.empty()) {
    out.push_back(cuts.front() - 1);
    out.push_back(cuts.back() + 1);
  }
  return out;
}

// Smaller than any gap between probes of sets with endpoints in (1/2)Z.
inline const Rat kDelta(1, 1000);

inline bool symmetric_at(const LineTopology& t, const Rat& x) {
  switch (t.kind()) {
    case LineTopology::Kind::Euclidean: return true;
    case LineTopology::Kind::Sorgenfrey:
    case LineTopology::Kind::UpperLimit: return false;
    case LineTopology::Kind::Hattori: return t.symmetric_points().contains(x);
  }
  return false;
}

// The base at x reaches left of x, right of x, or both.
inline bool reaches_left(const LineTopology& t, const Rat& x) {
  return symmetric_at(t, x) || t.kind() == LineTopology::Kind::UpperLimit;
}
inline bool reaches_right(const LineTopology& t, const Rat& x) {
  return symmetric_at(t, x) || t.kind() != LineTopology::Kind::UpperLimit;
}

inline bool closure_oracle(const LineTopology& t, const IntervalSet& s, const Rat& x) {
  return s.contains(x) || (reaches_right(t, x) && s.contains(x + kDelta)) || (reaches_left(t, x) && s.contains(x - kDelta));
}

inline bool interior_oracle(const LineTopology& t, const IntervalSet& s, const Rat& x) {
  return s.contains(x) && (!reaches_right(t, x) || s.contains(x + kDelta)) &&
         (!reaches_left(t, x) || s.contains(x - kDelta));
}

// opens(tau(a)) inside opens(tau(b)) iff at each x the base of tau(a) is an
// open of tau(b) near x: a symmetric base is, a right ray only when b's base
// at x is right-sided as well.
inline bool hattori_included_oracle(const IntervalSet& a, const IntervalSet& b) {
  for (const auto& x : probes({a, b})) {
    if (!a.contains(x) && b.contains(x)) return false;
  }
  return true;
}


}  // namespace line_oracle
