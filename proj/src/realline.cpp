#include "topolab/realline.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace topolab::line {

using boost::multiprecision::cpp_int;

Rat parse_rat(std::string_view text) {
  auto bad = [&] { return Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto digits_ok = [](std::string_view d) {
    if (d.empty()) return false;
    return std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den)) throw bad();
  const cpp_int d(std::string(den).c_str());
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rat r = Rat(cpp_int(std::string(num).c_str())) / Rat(d);
  return negative ? Rat(-r) : r;
}

std::string to_string(const Rat& r) { return r.str(); }

bool Endpoint::operator==(const Endpoint& o) const {
  return kind == o.kind && (kind != Kind::Finite || value == o.value);
}

bool Endpoint::operator<(const Endpoint& o) const {
  if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
  return kind == Kind::Finite && value < o.value;
}

bool Piece::contains(const Rat& x) const {
  const bool above = lo.kind == Endpoint::Kind::NegInf || (lo.finite() && (lo_closed ? lo.value <= x : lo.value < x));
  const bool below = hi.kind == Endpoint::Kind::PosInf || (hi.finite() && (hi_closed ? x <= hi.value : x < hi.value));
  return above && below;
}

// The line cut at sorted distinct points c_0 < ... < c_{k-1} into 2k+1
// cells: (-inf, c_0), {c_0}, (c_0, c_1), ..., {c_{k-1}}, (c_{k-1}, +inf).
// Every interval set whose endpoints are among the cuts is a union of cells.
class CellGrid {
 public:
  explicit CellGrid(std::vector<Rat> cuts) : cuts_(std::move(cuts)) {
    std::sort(cuts_.begin(), cuts_.end());
    cuts_.erase(std::unique(cuts_.begin(), cuts_.end()), cuts_.end());
  }

  static CellGrid of(std::initializer_list<const IntervalSet*> sets) {
    std::vector<Rat> cuts;
    for (const IntervalSet* s : sets) {
      for (const Piece& p : s->pieces_) {
        if (p.lo.finite()) cuts.push_back(p.lo.value);
        if (p.hi.finite()) cuts.push_back(p.hi.value);
      }
    }
    return CellGrid(std::move(cuts));
  }

  std::size_t cell_count() const { return 2 * cuts_.size() + 1; }
  static bool is_point_cell(std::size_t c) { return c % 2 == 1; }
  const Rat& cut(std::size_t point_cell) const { return cuts_[point_cell / 2]; }

  // A point inside the cell.
  Rat sample(std::size_t c) const {
    if (is_point_cell(c)) return cut(c);
    const std::size_t t = c / 2;
    if (cuts_.empty()) return Rat(0);
    if (t == 0) return cuts_.front() - 1;
    if (t == cuts_.size()) return cuts_.back() + 1;
    return (cuts_[t - 1] + cuts_[t]) / 2;
  }

  std::vector<bool> membership(const IntervalSet& s) const {
    std::vector<bool> m(cell_count());
    for (std::size_t c = 0; c < m.size(); ++c) m[c] = s.contains(sample(c));
    return m;
  }

  IntervalSet build(const std::vector<bool>& member) const {
    IntervalSet out;
    const std::size_t k = cuts_.size();
    std::size_t c = 0;
    while (c < member.size()) {
      if (!member[c]) {
        ++c;
        continue;
      }
      std::size_t e = c;
      while (e + 1 < member.size() && member[e + 1]) ++e;
      Piece p;
      if (is_point_cell(c)) {
        p.lo = Endpoint::at(cut(c));
        p.lo_closed = true;
      } else {
        p.lo = c == 0 ? Endpoint::neg_inf() : Endpoint::at(cuts_[c / 2 - 1]);
        p.lo_closed = false;
      }
      if (is_point_cell(e)) {
        p.hi = Endpoint::at(cut(e));
        p.hi_closed = true;
      } else {
        p.hi = e / 2 == k ? Endpoint::pos_inf() : Endpoint::at(cuts_[e / 2]);
        p.hi_closed = false;
      }
      out.pieces_.push_back(std::move(p));
      c = e + 1;
    }
    return out;
  }

 private:
  std::vector<Rat> cuts_;
};

IntervalSet IntervalSet::full_line() {
  return interval(Endpoint::neg_inf(), false, Endpoint::pos_inf(), false);
}

IntervalSet IntervalSet::point(const Rat& p) { return interval(Endpoint::at(p), true, Endpoint::at(p), true); }

IntervalSet IntervalSet::interval(Endpoint lo, bool lo_closed, Endpoint hi, bool hi_closed) {
  if ((!lo.finite() && lo_closed) || (!hi.finite() && hi_closed)) {
    throw Error(ErrorCode::InvalidArgument, "an infinite endpoint cannot be closed");
  }
  if (lo.kind == Endpoint::Kind::PosInf || hi.kind == Endpoint::Kind::NegInf || hi < lo) {
    throw Error(ErrorCode::InvalidArgument, "interval endpoints out of order");
  }
  return from_pieces({Piece{std::move(lo), lo_closed, std::move(hi), hi_closed}});
}

IntervalSet IntervalSet::from_pieces(const std::vector<Piece>& pieces) {
  IntervalSet raw;
  raw.pieces_ = pieces;
  const CellGrid grid = CellGrid::of({&raw});
  std::vector<bool> m(grid.cell_count());
  for (std::size_t c = 0; c < m.size(); ++c) {
    const Rat x = grid.sample(c);
    m[c] = std::any_of(pieces.begin(), pieces.end(), [&](const Piece& p) { return p.contains(x); });
  }
  return grid.build(m);
}

bool IntervalSet::is_full_line() const {
  return pieces_.size() == 1 && !pieces_[0].lo.finite() && !pieces_[0].hi.finite();
}

bool IntervalSet::contains(const Rat& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const Piece& p) { return p.contains(x); });
}

std::vector<Rat> IntervalSet::endpoints() const {
  std::vector<Rat> out;
  for (const Piece& p : pieces_) {
    if (p.lo.finite()) out.push_back(p.lo.value);
    if (p.hi.finite() && !(p.lo == p.hi)) out.push_back(p.hi.value);
  }
  return out;
}

namespace {

template <class Op>
IntervalSet combine(const IntervalSet& a, const IntervalSet& b, Op op) {
  const CellGrid grid = CellGrid::of({&a, &b});
  const auto ma = grid.membership(a);
  const auto mb = grid.membership(b);
  std::vector<bool> m(ma.size());
  for (std::size_t c = 0; c < m.size(); ++c) m[c] = op(ma[c], mb[c]);
  return grid.build(m);
}

}  // namespace

IntervalSet IntervalSet::complement() const {
  return combine(*this, *this, [](bool x, bool) { return !x; });
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x || y; });
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && y; });
}

IntervalSet IntervalSet::minus(const IntervalSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && !y; });
}

bool IntervalSet::subset_of(const IntervalSet& o) const { return minus(o).empty(); }

// ---- text form -------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Endpoint parse_endpoint(std::string_view text) {
  const std::string t = trim(text);
  if (t == "-inf") return Endpoint::neg_inf();
  if (t == "inf" || t == "+inf") return Endpoint::pos_inf();
  return Endpoint::at(parse_rat(t));
}

std::string endpoint_text(const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::NegInf: return "-inf";
    case Endpoint::Kind::PosInf: return "inf";
    case Endpoint::Kind::Finite: break;
  }
  return to_string(e.value);
}

Piece parse_piece(const std::string& t) {
  auto bad = [&](const std::string& why) { return Error(ErrorCode::ParseError, "bad piece '" + t + "': " + why); };
  if (t.size() < 3) throw bad("too short");
  if (t.front() == '{') {
    if (t.back() != '}') throw bad("missing '}'");
    const Rat p = parse_rat(trim(std::string_view(t).substr(1, t.size() - 2)));
    return Piece{Endpoint::at(p), true, Endpoint::at(p), true};
  }
  if (t.front() != '(' && t.front() != '[') throw bad("expected '(', '[' or '{'");
  if (t.back() != ')' && t.back() != ']') throw bad("expected ')' or ']'");
  const std::string inner = t.substr(1, t.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos) throw bad("expected one ','");
  Piece p{parse_endpoint(std::string_view(inner).substr(0, comma)), t.front() == '[',
          parse_endpoint(std::string_view(inner).substr(comma + 1)), t.back() == ']'};
  if ((!p.lo.finite() && p.lo_closed) || (!p.hi.finite() && p.hi_closed)) throw bad("infinite endpoint must be open");
  if (p.lo.kind == Endpoint::Kind::PosInf || p.hi.kind == Endpoint::Kind::NegInf || p.hi < p.lo) {
    throw bad("endpoints out of order");
  }
  return p;
}

}  // namespace

IntervalSet parse_interval_set(std::string_view text) {
  const std::string all = trim(text);
  if (all.empty()) throw Error(ErrorCode::ParseError, "empty interval-set text");
  if (all == "{}" || all == "empty") return {};
  std::vector<Piece> pieces;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= all.size(); ++k) {
    if (k == all.size() || all[k] == 'u' || all[k] == 'U') {
      const std::string t = trim(std::string_view(all).substr(start, k - start));
      if (t.empty()) throw Error(ErrorCode::ParseError, "empty piece in '" + all + "'");
      pieces.push_back(parse_piece(t));
      start = k + 1;
    }
  }
  return IntervalSet::from_pieces(pieces);
}

std::string to_string(const IntervalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const Piece& p : s.pieces()) {
    if (!out.empty()) out += " u ";
    if (p.is_point()) {
      out += "{" + to_string(p.lo.value) + "}";
    } else {
      out += p.lo_closed ? '[' : '(';
      out += endpoint_text(p.lo) + "," + endpoint_text(p.hi);
      out += p.hi_closed ? ']' : ')';
    }
  }
  return out;
}

LineTopology parse_line_topology(std::string_view text) {
  const std::string t = trim(text);
  if (t == "E") return LineTopology::euclidean();
  if (t == "S") return LineTopology::sorgenfrey();
  if (t == "US") return LineTopology::upper_limit();
  if (t.rfind("H:", 0) == 0) return LineTopology::hattori(parse_interval_set(std::string_view(t).substr(2)));
  throw Error(ErrorCode::ParseError, "unknown topology '" + t + "' (expected E, S, US or H:<set>)");
}

std::string to_string(const LineTopology& t) {
  switch (t.kind()) {
    case LineTopology::Kind::Euclidean: return "E";
    case LineTopology::Kind::Sorgenfrey: return "S";
    case LineTopology::Kind::UpperLimit: return "US";
    case LineTopology::Kind::Hattori: break;
  }
  return "H:" + to_string(t.symmetric_points());
}

// ---- operators -------------------------------------------------------------

namespace {

enum class BaseShape { Symmetric, Right, Left };

BaseShape shape_at(const LineTopology& t, const Rat& x) {
  if (t.kind() == LineTopology::Kind::UpperLimit) return BaseShape::Left;
  return t.symmetric_points().contains(x) ? BaseShape::Symmetric : BaseShape::Right;
}

// Inside an open cell every point has a small two-sided neighbourhood within
// the cell, so interior and closure agree with membership there. At a cut
// point only the adjacent cells on the sides the base reaches matter.
template <class PointRule>
IntervalSet cellwise(const LineTopology& t, const IntervalSet& s, PointRule rule) {
  const CellGrid grid = CellGrid::of({&s, &t.symmetric_points()});
  const auto m = grid.membership(s);
  std::vector<bool> out(m);
  for (std::size_t c = 1; c < m.size(); c += 2) {
    out[c] = rule(shape_at(t, grid.cut(c)), m[c - 1], m[c], m[c + 1]);
  }
  return grid.build(out);
}

Rat floor_rat(const Rat& r) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  cpp_int q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return Rat(q);
}

}  // namespace

IntervalSet rl_interior(const LineTopology& t, const IntervalSet& s) {
  return cellwise(t, s, [](BaseShape shape, bool left, bool at, bool right) {
    switch (shape) {
      case BaseShape::Symmetric: return left && at && right;
      case BaseShape::Right: return at && right;
      case BaseShape::Left: return left && at;
    }
    return false;
  });
}

IntervalSet rl_closure(const LineTopology& t, const IntervalSet& s) {
  return cellwise(t, s, [](BaseShape shape, bool left, bool at, bool right) {
    switch (shape) {
      case BaseShape::Symmetric: return left || at || right;
      case BaseShape::Right: return at || right;
      case BaseShape::Left: return left || at;
    }
    return false;
  });
}

bool rl_is_semi_open(const LineTopology& t, const IntervalSet& s) {
  return s.subset_of(rl_closure(t, rl_interior(t, s)));
}

std::string_view to_string(HattoriOrder o) {
  switch (o) {
    case HattoriOrder::Equal: return "equal";
    case HattoriOrder::Finer: return "finer";
    case HattoriOrder::Coarser: return "coarser";
    case HattoriOrder::Incomparable: return "incomparable";
  }
  return "";
}

bool rl_topology_included(const LineTopology& t1, const LineTopology& t2) {
  const CellGrid grid = CellGrid::of({&t1.symmetric_points(), &t2.symmetric_points()});
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const Rat x = grid.sample(c);
    const BaseShape s1 = shape_at(t1, x);
    if (s1 != BaseShape::Symmetric && s1 != shape_at(t2, x)) return false;
  }
  return true;
}

// tau(A) is coarser than tau(B) exactly when B is inside A.
HattoriOrder hattori_compare(const IntervalSet& a, const IntervalSet& b) {
  const bool a_coarser = b.subset_of(a);
  const bool b_coarser = a.subset_of(b);
  assert(a_coarser == rl_topology_included(LineTopology::hattori(a), LineTopology::hattori(b)));
  assert(b_coarser == rl_topology_included(LineTopology::hattori(b), LineTopology::hattori(a)));
  if (a_coarser && b_coarser) return HattoriOrder::Equal;
  if (a_coarser) return HattoriOrder::Coarser;
  if (b_coarser) return HattoriOrder::Finer;
  return HattoriOrder::Incomparable;
}

namespace {

IntervalSet basic_open(BaseShape shape, const Rat& x, const Rat& r) {
  switch (shape) {
    case BaseShape::Symmetric: return IntervalSet::open(x - r, x + r);
    case BaseShape::Right: return IntervalSet::closed_open(x, x + r);
    case BaseShape::Left: return IntervalSet::open_closed(x - r, x);
  }
  return {};
}

// Representative points: every cut and one point per open cell.
std::vector<Rat> representatives(const LineTopology& a, const LineTopology& b) {
  const CellGrid grid = CellGrid::of({&a.symmetric_points(), &b.symmetric_points()});
  std::vector<Rat> out;
  for (std::size_t c = 0; c < grid.cell_count(); ++c) out.push_back(grid.sample(c));
  return out;
}

}  // namespace

bool rl_basic_pi_network(const LineTopology& inner, const LineTopology& outer) {
  const auto inner_cuts = inner.symmetric_points().endpoints();
  for (const Rat& x : representatives(inner, outer)) {
    const BaseShape shape = shape_at(outer, x);
    const IntervalSet basic = basic_open(shape, x, Rat(1));
    // An open core of the basic set, shrunk so no inner cut lies inside it;
    // then every point of the core has the same inner base shape.
    Rat lo = shape == BaseShape::Left ? x - 1 : x;
    Rat hi = shape == BaseShape::Left ? x : x + 1;
    for (const Rat& c : inner_cuts) {
      if (lo < c && c < hi) hi = c;
    }
    const Rat mid = (lo + hi) / 2;
    const IntervalSet candidate = basic_open(shape_at(inner, mid), mid, (hi - lo) / 4);
    if (candidate.empty() || !candidate.subset_of(basic)) return false;
  }
  return true;
}

bool rl_is_admissible_extension(const LineTopology& base, const LineTopology& ext) {
  auto unsupported = [](const LineTopology& t) {
    return t.kind() == LineTopology::Kind::Hattori && !t.symmetric_points().empty() &&
           !t.symmetric_points().is_full_line();
  };
  const bool has_us = base.kind() == LineTopology::Kind::UpperLimit || ext.kind() == LineTopology::Kind::UpperLimit;
  if (has_us && (unsupported(base) || unsupported(ext))) {
    throw Error(ErrorCode::UnsupportedPair,
                "the upper-limit topology is only compared with E, S, H(empty) and H(line), not " +
                    to_string(unsupported(base) ? base : ext));
  }
  bool included = false;
  if (base.is_hattori_family() && ext.is_hattori_family()) {
    const HattoriOrder order = hattori_compare(base.symmetric_points(), ext.symmetric_points());
    included = order == HattoriOrder::Equal || order == HattoriOrder::Coarser;
  } else {
    included = rl_topology_included(base, ext);
  }
  return included && rl_basic_pi_network(base, ext);
}

bool rl_are_pi_compatible(const LineTopology& t1, const LineTopology& t2) {
  return rl_basic_pi_network(t1, t2) && rl_basic_pi_network(t2, t1);
}

std::optional<IntervalSet> hattori_clopen_witness(const IntervalSet& a) {
  if (a.is_full_line()) return std::nullopt;
  Rat x(0);
  if (!a.empty()) {
    const Piece& last = a.pieces().back();
    if (last.hi.finite()) {
      x = floor_rat(last.hi.value) + 1;
    } else {
      const IntervalSet rest = a.complement();
      const Piece& gap = rest.pieces().back();
      if (gap.is_point() || gap.hi_closed) {
        x = gap.hi.value;
      } else if (gap.lo_closed) {
        x = gap.lo.value;
      } else if (gap.lo.finite()) {
        x = (gap.lo.value + gap.hi.value) / 2;
      } else {
        x = gap.hi.value - 1;
      }
    }
  }
  assert(!a.contains(x));
  return IntervalSet::interval(Endpoint::at(x), true, Endpoint::pos_inf(), false);
}

}  // namespace topolab::line
