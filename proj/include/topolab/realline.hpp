#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "topolab/error.hpp"

namespace topolab::line {

// Exact rational, always in lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

// Throws ParseError. Accepts "p" or "p/q" with optional sign.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);

// A finite endpoint or one of the two infinities.
struct Endpoint {
  enum class Kind { NegInf, Finite, PosInf };

  Kind kind = Kind::Finite;
  Rat value;

  static Endpoint neg_inf() { return {Kind::NegInf, Rat(0)}; }
  static Endpoint pos_inf() { return {Kind::PosInf, Rat(0)}; }
  static Endpoint at(Rat v) { return {Kind::Finite, std::move(v)}; }

  bool finite() const { return kind == Kind::Finite; }
  bool operator==(const Endpoint& o) const;
  bool operator<(const Endpoint& o) const;
};

// One connected component: an interval with the given endpoint closedness,
// or a single point when lo == hi and both ends are closed.
struct Piece {
  Endpoint lo;
  bool lo_closed = false;
  Endpoint hi;
  bool hi_closed = false;

  bool is_point() const { return lo.finite() && hi.finite() && lo.value == hi.value; }
  bool contains(const Rat& x) const;
  bool operator==(const Piece&) const = default;
};

// A finite union of intervals and points with rational endpoints, kept in
// canonical form: pieces sorted, pairwise disjoint, never touching in a way
// that would let two of them merge. Equality is structural.
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet empty_set() { return {}; }
  static IntervalSet full_line();
  static IntervalSet point(const Rat& p);
  // Throws InvalidArgument when lo > hi or an infinite end is closed.
  static IntervalSet interval(Endpoint lo, bool lo_closed, Endpoint hi, bool hi_closed);
  static IntervalSet open(const Rat& a, const Rat& b) { return interval(Endpoint::at(a), false, Endpoint::at(b), false); }
  static IntervalSet closed(const Rat& a, const Rat& b) { return interval(Endpoint::at(a), true, Endpoint::at(b), true); }
  static IntervalSet closed_open(const Rat& a, const Rat& b) { return interval(Endpoint::at(a), true, Endpoint::at(b), false); }
  static IntervalSet open_closed(const Rat& a, const Rat& b) { return interval(Endpoint::at(a), false, Endpoint::at(b), true); }
  // Union of arbitrary (possibly overlapping or empty) pieces.
  static IntervalSet from_pieces(const std::vector<Piece>& pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool is_full_line() const;
  bool contains(const Rat& x) const;
  // Sorted distinct finite endpoints.
  std::vector<Rat> endpoints() const;

  IntervalSet complement() const;
  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet minus(const IntervalSet& o) const;
  bool subset_of(const IntervalSet& o) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Piece> pieces_;
  friend class CellGrid;
};

// Throws ParseError. Grammar: pieces joined by 'u'; a piece is "(a,b)",
// "[a,b)", "(a,b]", "[a,b]" or "{a}"; endpoints are rationals or
// "-inf"/"inf". "{}" and "empty" denote the empty set.
IntervalSet parse_interval_set(std::string_view text);
std::string to_string(const IntervalSet& s);

// Euclidean, Sorgenfrey ([x, x+e) bases), upper limit ((x-e, x] bases), and
// Hattori H(A): points of A get symmetric bases, the rest Sorgenfrey ones.
class LineTopology {
 public:
  enum class Kind { Euclidean, Sorgenfrey, UpperLimit, Hattori };

  static LineTopology euclidean() { return LineTopology(Kind::Euclidean, IntervalSet::full_line()); }
  static LineTopology sorgenfrey() { return LineTopology(Kind::Sorgenfrey, IntervalSet{}); }
  static LineTopology upper_limit() { return LineTopology(Kind::UpperLimit, IntervalSet{}); }
  static LineTopology hattori(IntervalSet a) { return LineTopology(Kind::Hattori, std::move(a)); }

  Kind kind() const { return kind_; }
  // Set of symmetric-basis points: the line for E, empty for S and US.
  const IntervalSet& symmetric_points() const { return sym_; }
  // E and S are H(line) and H(empty); US is not a Hattori topology.
  bool is_hattori_family() const { return kind_ != Kind::UpperLimit; }

 private:
  LineTopology(Kind k, IntervalSet sym) : kind_(k), sym_(std::move(sym)) {}

  Kind kind_;
  IntervalSet sym_;
};

// Throws ParseError. "E" | "S" | "US" | "H:<interval-set>".
LineTopology parse_line_topology(std::string_view text);
std::string to_string(const LineTopology& t);

IntervalSet rl_interior(const LineTopology& t, const IntervalSet& s);
IntervalSet rl_closure(const LineTopology& t, const IntervalSet& s);
bool rl_is_semi_open(const LineTopology& t, const IntervalSet& s);

// How tau(a) relates to tau(b).
enum class HattoriOrder { Equal, Finer, Coarser, Incomparable };
std::string_view to_string(HattoriOrder o);
HattoriOrder hattori_compare(const IntervalSet& a, const IntervalSet& b);

// opens(t1) inside opens(t2), decided point by point from the neighbourhood
// base types: a symmetric base contains every other kind, a half-open base
// only contains one of the same side.
bool rl_topology_included(const LineTopology& t1, const LineTopology& t2);

// Every basic open of `outer` contains a basic open of `inner`. Basic opens
// are enough since every non-empty open contains one.
bool rl_basic_pi_network(const LineTopology& inner, const LineTopology& outer);

// Throws UnsupportedPair for the upper-limit topology against H(A) with A
// neither empty nor the whole line.
bool rl_is_admissible_extension(const LineTopology& base, const LineTopology& ext);
bool rl_are_pi_compatible(const LineTopology& t1, const LineTopology& t2);

// For a != line: a ray [x, +inf) with x outside a, clopen in tau(a). x is the
// least integer above sup a (0 for empty a); if a is unbounded above, x is
// taken from the rightmost piece of the complement.
std::optional<IntervalSet> hattori_clopen_witness(const IntervalSet& a);

}  // namespace topolab::line
