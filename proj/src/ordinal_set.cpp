#include "tukey/ordinal_set.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <optional>

#include "tukey/errors.hpp"
#include "tukey/ordinal_parse.hpp"
#include "tukey/text_cursor.hpp"

namespace tukey {

using DegreeMask = NormalSetForm::DegreeMask;

namespace {

DegreeMask bit(unsigned d) { return DegreeMask{1} << d; }

DegreeMask all_degrees(unsigned bound) {
  return bound >= 32 ? ~DegreeMask{0} : bit(bound) - 1;
}

DegreeMask at_least(unsigned k, unsigned bound) {
  return k >= bound ? 0 : all_degrees(bound) & ~(bit(k) - 1);
}

void require_exponent_bound(unsigned bound) {
  if (bound == 0 || bound > 32) throw ContractError("exponent bound must be in [1, 32]");
}

// Membership of the cut at `idx`, or of an ordinal inside the gap that follows it.
struct Locator {
  bool at_cut;
  std::size_t idx;
};

Locator locate(const std::vector<Ordinal>& cuts, const Ordinal& g) {
  const auto it = std::lower_bound(cuts.begin(), cuts.end(), g);
  const auto idx = static_cast<std::size_t>(it - cuts.begin());
  if (it != cuts.end() && *it == g) return {true, idx};
  return {false, idx - 1};
}

}  // namespace

DegreeMask present_degrees(const Ordinal& lo, const Ordinal& hi, unsigned exponent_bound) {
  DegreeMask mask = 0;
  if (!(lo < hi)) return mask;
  const Ordinal next = successor(lo);
  for (unsigned d = 0; d < exponent_bound; ++d) {
    // The least ordinal above lo of degree exactly d; degrees present form an initial segment.
    if (ceil_multiple(next, d, exponent_bound) < hi) mask |= bit(d);
    else break;
  }
  return mask;
}

// ---------------------------------------------------------------------------
// NormalSetForm

NormalSetForm::NormalSetForm(Ordinal universe, unsigned exponent_bound)
    : exponent_bound_(exponent_bound) {
  require_exponent_bound(exponent_bound);
  if (universe.leading_exponent() >= exponent_bound && !universe.is_zero())
    throw OverflowError("universe " + universe.to_string() + " is not below the exponent bound");
  cuts_.push_back(Ordinal{});
  cut_in_.push_back(false);
  if (!universe.is_zero()) {
    cuts_.push_back(std::move(universe));
    cut_in_.push_back(false);
    gap_mask_.push_back(0);
  }
}

NormalSetForm NormalSetForm::whole(Ordinal universe, unsigned exponent_bound) {
  NormalSetForm s(std::move(universe), exponent_bound);
  Cells c{s.cuts_, std::vector<bool>(s.cuts_.size(), true), {}};
  for (std::size_t i = 0; i + 1 < c.cuts.size(); ++i)
    c.gaps.push_back(present_degrees(c.cuts[i], c.cuts[i + 1], exponent_bound));
  return from_cells(std::move(c), exponent_bound);
}

NormalSetForm::Cells NormalSetForm::refined(const std::vector<Ordinal>& extra_cuts) const {
  std::vector<Ordinal> merged = cuts_;
  for (const auto& o : extra_cuts)
    if (!(universe() < o)) merged.push_back(o);
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  Cells out;
  out.cuts = merged;
  for (const auto& c : merged) {
    const Locator loc = locate(cuts_, c);
    out.in.push_back(loc.at_cut ? static_cast<bool>(cut_in_[loc.idx])
                                : static_cast<bool>(gap_mask_[loc.idx] >> degree(c) & 1U));
  }
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    // The open gap (merged[i], merged[i+1]) lies inside one original gap.
    const Locator loc = locate(cuts_, merged[i]);
    out.gaps.push_back(gap_mask_[loc.idx] &
                       present_degrees(merged[i], merged[i + 1], exponent_bound_));
  }
  return out;
}

NormalSetForm NormalSetForm::from_cells(Cells c, unsigned exponent_bound) {
  require_exponent_bound(exponent_bound);
  NormalSetForm out;
  out.exponent_bound_ = exponent_bound;
  out.cuts_ = {c.cuts.front()};
  out.cut_in_ = {c.in.front()};
  out.gap_mask_.clear();
  const std::size_t last = c.cuts.size() - 1;
  if (last == 0) return out;

  // Greedy sweep: extend the current gap from `start` while membership stays a function
  // of the degree alone; a conflict ends the gap at the first ordinal exhibiting it.
  Ordinal start = c.cuts.front();
  Ordinal pos = start;
  std::size_t j = 0;
  DegreeMask known = 0, value = 0;

  auto close_gap = [&](const Ordinal& end, bool end_in) {
    out.gap_mask_.push_back(value & known & present_degrees(start, end, exponent_bound));
    out.cuts_.push_back(end);
    out.cut_in_.push_back(end_in);
    start = end;
    pos = end;
    known = value = 0;
  };

  while (true) {
    const Ordinal& next_cut = c.cuts[j + 1];
    const DegreeMask seg = present_degrees(pos, next_cut, exponent_bound);
    const DegreeMask conflicts = seg & known & (value ^ c.gaps[j]);
    if (conflicts != 0) {
      Ordinal first;
      bool found = false;
      const Ordinal after = successor(pos);
      for (unsigned d = 0; d < exponent_bound; ++d) {
        if (!(conflicts >> d & 1U)) continue;
        Ordinal cand = ceil_multiple(after, d, exponent_bound);
        if (!found || cand < first) first = std::move(cand), found = true;
      }
      close_gap(first, static_cast<bool>(c.gaps[j] >> degree(first) & 1U));
      continue;
    }
    value = (value & ~seg) | (c.gaps[j] & seg);
    known |= seg;

    const unsigned d = degree(next_cut);
    const bool in = c.in[j + 1];
    if (j + 1 == last || ((known >> d & 1U) && static_cast<bool>(value >> d & 1U) != in)) {
      close_gap(next_cut, in);
      if (++j == last) break;
      continue;
    }
    value = (value & ~bit(d)) | (in ? bit(d) : 0);
    known |= bit(d);
    pos = next_cut;
    ++j;
  }
  return out;
}

bool NormalSetForm::contains(const Ordinal& g) const {
  if (universe() < g) return false;
  const Locator loc = locate(cuts_, g);
  if (loc.at_cut) return cut_in_[loc.idx];
  return gap_mask_[loc.idx] >> degree(g) & 1U;
}

bool NormalSetForm::empty() const {
  return std::none_of(cut_in_.begin(), cut_in_.end(), [](bool b) { return b; }) &&
         std::all_of(gap_mask_.begin(), gap_mask_.end(), [](DegreeMask m) { return m == 0; });
}

namespace {

// Degree-d ordinals in (lo, hi) are finite in number unless something of degree > d sits in
// (lo, hi], where they would accumulate.
bool finitely_many(const Ordinal& lo, const Ordinal& hi, unsigned d, unsigned bound) {
  if (d + 1 >= bound) return true;
  try {
    return hi < ceil_multiple(successor(lo), d + 1, bound);
  } catch (const OverflowError&) {
    return true;
  }
}

// The degree-d ordinals in (lo, hi) when there are at most `limit` of them.
std::optional<std::vector<Ordinal>> few_points(const Ordinal& lo, const Ordinal& hi, unsigned d,
                                               unsigned bound, std::size_t limit) {
  if (!finitely_many(lo, hi, d, bound)) return std::nullopt;
  std::vector<Ordinal> out;
  const Ordinal step = Ordinal::omega_power(d, 1, bound);
  for (Ordinal x = ceil_multiple(successor(lo), d, bound); x < hi; x = add(x, step)) {
    if (out.size() == limit) return std::nullopt;
    out.push_back(x);
  }
  return out;
}

constexpr std::size_t kMaxListedPoints = 16;

}  // namespace

bool NormalSetForm::finite() const {
  for (std::size_t i = 0; i < gap_mask_.size(); ++i)
    for (unsigned d = 0; d < exponent_bound_; ++d)
      if ((gap_mask_[i] >> d & 1U) && !finitely_many(cuts_[i], cuts_[i + 1], d, exponent_bound_))
        return false;
  return true;
}

std::vector<SetAtom> NormalSetForm::atoms() const {
  std::vector<SetAtom> out;
  PointsAtom pts;
  std::vector<DegreeMask> banded(gap_mask_.size());
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    if (cut_in_[i]) pts.points.push_back(cuts_[i]);
    if (i == gap_mask_.size()) break;
    // a few isolated members of a gap read better as explicit points
    for (unsigned d = 0; d < exponent_bound_; ++d) {
      if (!(gap_mask_[i] >> d & 1U)) continue;
      auto few = few_points(cuts_[i], cuts_[i + 1], d, exponent_bound_, kMaxListedPoints);
      if (few) pts.points.insert(pts.points.end(), few->begin(), few->end());
      else banded[i] |= DegreeMask{1} << d;
    }
  }
  std::sort(pts.points.begin(), pts.points.end());
  if (!pts.points.empty()) out.emplace_back(std::move(pts));
  for (std::size_t i = 0; i < gap_mask_.size(); ++i) {
    const DegreeMask mask = banded[i];
    if (mask == 0) continue;
    const DegreeMask present = present_degrees(cuts_[i], cuts_[i + 1], exponent_bound_);
    const unsigned top = static_cast<unsigned>(std::bit_width(present)) - 1;
    unsigned d = 0;
    while (d <= top) {
      if (!(mask >> d & 1U)) {
        ++d;
        continue;
      }
      unsigned e = d;
      while (e + 1 <= top && (mask >> (e + 1) & 1U)) ++e;
      if (e == top && e > d) {
        out.emplace_back(BandAtom{cuts_[i], cuts_[i + 1], {DegreeFilter::Kind::AtLeast, d}});
      } else {
        for (unsigned k = d; k <= e; ++k)
          out.emplace_back(BandAtom{cuts_[i], cuts_[i + 1], {DegreeFilter::Kind::Exactly, k}});
      }
      d = e + 1;
    }
  }
  return out;
}

std::string NormalSetForm::to_string() const {
  const auto list = atoms();
  if (list.empty()) return "{}";
  std::string out;
  for (const auto& a : list) {
    if (!out.empty()) out += " U ";
    if (const auto* p = std::get_if<PointsAtom>(&a)) {
      out += "Points{";
      for (std::size_t i = 0; i < p->points.size(); ++i)
        out += (i ? ", " : "") + p->points[i].to_string();
      out += "}";
    } else {
      const auto& b = std::get<BandAtom>(a);
      out += "Band(" + b.lo.to_string() + ", " + b.hi.to_string() + ", " +
             (b.filter.kind == DegreeFilter::Kind::AtLeast ? "deg>=" : "deg=") +
             std::to_string(b.filter.degree) + ")";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Boolean algebra

namespace {

NormalSetForm combine(const NormalSetForm& a, const NormalSetForm& b,
                      const std::function<bool(bool, bool)>& op) {
  if (a.universe() != b.universe())
    throw ContractError("set operands have different universes");
  if (a.exponent_bound() != b.exponent_bound())
    throw ContractError("set operands have different exponent bounds");
  auto ca = a.refined(b.cuts());
  auto cb = b.refined(a.cuts());
  NormalSetForm::Cells out;
  out.cuts = ca.cuts;
  for (std::size_t i = 0; i < ca.cuts.size(); ++i) out.in.push_back(op(ca.in[i], cb.in[i]));
  for (std::size_t i = 0; i < ca.gaps.size(); ++i) {
    DegreeMask m = 0;
    for (unsigned d = 0; d < a.exponent_bound(); ++d)
      if (op(ca.gaps[i] >> d & 1U, cb.gaps[i] >> d & 1U)) m |= bit(d);
    out.gaps.push_back(m & present_degrees(out.cuts[i], out.cuts[i + 1], a.exponent_bound()));
  }
  return NormalSetForm::from_cells(std::move(out), a.exponent_bound());
}

}  // namespace

bool member(const Ordinal& g, const NormalSetForm& s) { return s.contains(g); }

NormalSetForm set_union(const NormalSetForm& a, const NormalSetForm& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}
NormalSetForm set_intersection(const NormalSetForm& a, const NormalSetForm& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}
NormalSetForm set_difference(const NormalSetForm& a, const NormalSetForm& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}
NormalSetForm complement(const NormalSetForm& a) {
  return set_difference(NormalSetForm::whole(a.universe(), a.exponent_bound()), a);
}
bool is_subset(const NormalSetForm& a, const NormalSetForm& b) {
  return set_difference(a, b).empty();
}

// ---------------------------------------------------------------------------
// Topology

NormalSetForm derived(const NormalSetForm& s) {
  NormalSetForm::Cells c{s.cuts(), std::vector<bool>(s.cuts().size(), false), {}};
  const unsigned bound = s.exponent_bound();
  for (std::size_t i = 0; i < s.gap_degrees().size(); ++i) {
    const DegreeMask mask = s.gap_degrees()[i];
    if (mask == 0) {
      c.gaps.push_back(0);
      continue;
    }
    // Below any g of degree k the gap contributes elements of every degree < k, cofinally.
    const unsigned lowest = static_cast<unsigned>(std::countr_zero(mask));
    const DegreeMask limits = at_least(lowest + 1, bound);
    c.gaps.push_back(limits & present_degrees(c.cuts[i], c.cuts[i + 1], bound));
    if (limits >> degree(c.cuts[i + 1]) & 1U) c.in[i + 1] = true;
  }
  return NormalSetForm::from_cells(std::move(c), bound);
}

NormalSetForm closure(const NormalSetForm& s) { return set_union(s, derived(s)); }

NormalSetForm cl_diff(const NormalSetForm& s) { return set_difference(derived(s), s); }

bool is_closed(const NormalSetForm& s) { return is_subset(derived(s), s); }

bool is_compact(const NormalSetForm& s) { return is_closed(s); }

bool is_locally_compact(const NormalSetForm& s) { return is_closed(cl_diff(s)); }

bool is_discrete(const NormalSetForm& s) { return set_intersection(derived(s), s).empty(); }

std::vector<Ordinal> probe_set(const NormalSetForm& a, const NormalSetForm& b) {
  const auto cells = a.refined(b.cuts());
  std::vector<Ordinal> probes = cells.cuts;
  for (std::size_t i = 0; i + 1 < cells.cuts.size(); ++i) {
    const DegreeMask present = present_degrees(cells.cuts[i], cells.cuts[i + 1], a.exponent_bound());
    const Ordinal after = successor(cells.cuts[i]);
    for (unsigned d = 0; d < a.exponent_bound(); ++d)
      if (present >> d & 1U) probes.push_back(ceil_multiple(after, d, a.exponent_bound()));
  }
  std::sort(probes.begin(), probes.end());
  return probes;
}

bool extensionally_equal(const NormalSetForm& a, const NormalSetForm& b) {
  if (a.universe() != b.universe()) return false;
  for (const auto& g : probe_set(a, b))
    if (a.contains(g) != b.contains(g)) return false;
  return true;
}

TukeyClass classify_bounded(const NormalSetForm& s) {
  if (is_compact(s)) return ClassTag::One;
  if (is_locally_compact(s)) return ClassTag::Omega;
  return ClassTag::OmegaOmega;
}

// ---------------------------------------------------------------------------
// Expressions

SetExpr SetExpr::points(std::vector<Ordinal> pts) {
  return SetExpr(std::make_shared<SetExprNode>(SetExprNode{PointsNode{std::move(pts)}}));
}
SetExpr SetExpr::interval(Ordinal lo, Ordinal hi) {
  return SetExpr(std::make_shared<SetExprNode>(SetExprNode{IntervalNode{std::move(lo), std::move(hi)}}));
}
SetExpr SetExpr::degree_at_least(unsigned k) {
  return SetExpr(std::make_shared<SetExprNode>(SetExprNode{DegreeNode{k, false}}));
}
SetExpr SetExpr::degree_exactly(unsigned k) {
  return SetExpr(std::make_shared<SetExprNode>(SetExprNode{DegreeNode{k, true}}));
}
SetExpr SetExpr::set_union(SetExpr a, SetExpr b) {
  return SetExpr(std::make_shared<SetExprNode>(SetExprNode{BinaryNode{'|', std::move(a), std::move(b)}}));
}
SetExpr SetExpr::set_intersection(SetExpr a, SetExpr b) {
  return SetExpr(std::make_shared<SetExprNode>(SetExprNode{BinaryNode{'&', std::move(a), std::move(b)}}));
}
SetExpr SetExpr::set_difference(SetExpr a, SetExpr b) {
  return SetExpr(std::make_shared<SetExprNode>(SetExprNode{BinaryNode{'\\', std::move(a), std::move(b)}}));
}
SetExpr SetExpr::complement(SetExpr a) {
  return SetExpr(std::make_shared<SetExprNode>(SetExprNode{ComplementNode{std::move(a)}}));
}
SetExpr SetExpr::s1() {
  return SetExpr(std::make_shared<SetExprNode>(SetExprNode{BuiltinS1Node{}}));
}

namespace {

const Ordinal& s1_top() {
  static const Ordinal top = Ordinal::omega_power(2);
  return top;
}

// Precedence levels: 0 = '|' and '\', 1 = '&', 2 = primary.
std::string render(const SetExpr& e, int context) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PointsNode>) {
          std::string out = "{";
          for (std::size_t i = 0; i < n.pts.size(); ++i) out += (i ? ", " : "") + n.pts[i].to_string();
          return out + "}";
        } else if constexpr (std::is_same_v<T, IntervalNode>) {
          return "[" + n.lo.to_string() + ", " + n.hi.to_string() + "]";
        } else if constexpr (std::is_same_v<T, DegreeNode>) {
          return (n.exactly ? "deg=" : "deg>=") + std::to_string(n.k);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          const int level = n.op == '&' ? 1 : 0;
          // Left-associative: the right operand needs parentheses at equal precedence.
          std::string out = render(n.lhs, level) + " " + n.op + " " + render(n.rhs, level + 1);
          return level < context ? "(" + out + ")" : out;
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          return "~" + render(n.arg, 2);
        } else {
          return "S1";
        }
      },
      e.node().v);
}

NormalSetForm eval(const SetExpr& e, const Ordinal& universe, unsigned bound) {
  return std::visit(
      [&](const auto& n) -> NormalSetForm {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PointsNode>) {
          NormalSetForm empty(universe, bound);
          auto c = empty.refined(n.pts);
          for (std::size_t i = 0; i < c.cuts.size(); ++i)
            c.in[i] = std::find(n.pts.begin(), n.pts.end(), c.cuts[i]) != n.pts.end();
          return NormalSetForm::from_cells(std::move(c), bound);
        } else if constexpr (std::is_same_v<T, IntervalNode>) {
          NormalSetForm empty(universe, bound);
          if (n.hi < n.lo) return empty;
          auto c = empty.refined({n.lo, n.hi});
          for (std::size_t i = 0; i < c.cuts.size(); ++i)
            c.in[i] = !(c.cuts[i] < n.lo) && !(n.hi < c.cuts[i]);
          for (std::size_t i = 0; i + 1 < c.cuts.size(); ++i)
            c.gaps[i] = (!(c.cuts[i] < n.lo) && c.cuts[i] < n.hi)
                            ? present_degrees(c.cuts[i], c.cuts[i + 1], bound)
                            : 0;
          return NormalSetForm::from_cells(std::move(c), bound);
        } else if constexpr (std::is_same_v<T, DegreeNode>) {
          if (n.k >= bound)
            throw ContractError("degree filter " + std::to_string(n.k) + " reaches the exponent bound");
          const DegreeMask m = n.exactly ? bit(n.k) : at_least(n.k, bound);
          NormalSetForm empty(universe, bound);
          auto c = empty.refined({});
          for (std::size_t i = 0; i < c.cuts.size(); ++i) c.in[i] = m >> degree(c.cuts[i]) & 1U;
          for (std::size_t i = 0; i + 1 < c.cuts.size(); ++i)
            c.gaps[i] = m & present_degrees(c.cuts[i], c.cuts[i + 1], bound);
          return NormalSetForm::from_cells(std::move(c), bound);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          auto lhs = eval(n.lhs, universe, bound);
          auto rhs = eval(n.rhs, universe, bound);
          if (n.op == '|') return tukey::set_union(lhs, rhs);
          if (n.op == '&') return tukey::set_intersection(lhs, rhs);
          return tukey::set_difference(lhs, rhs);
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          return tukey::complement(eval(n.arg, universe, bound));
        } else {
          if (universe < s1_top())
            throw ContractError("S1 needs a universe of at least w^2");
          const auto body = SetExpr::set_difference(SetExpr::interval({}, s1_top()),
                                                    SetExpr::degree_exactly(1));
          return eval(body, universe, bound);
        }
      },
      e.node().v);
}

void max_named_into(const SetExpr& e, Ordinal& acc, int& max_deg) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PointsNode>) {
          for (const auto& p : n.pts) acc = std::max(acc, p);
        } else if constexpr (std::is_same_v<T, IntervalNode>) {
          acc = std::max({acc, n.lo, n.hi});
        } else if constexpr (std::is_same_v<T, DegreeNode>) {
          max_deg = std::max(max_deg, static_cast<int>(n.k));
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          max_named_into(n.lhs, acc, max_deg);
          max_named_into(n.rhs, acc, max_deg);
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          max_named_into(n.arg, acc, max_deg);
        } else {
          acc = std::max(acc, s1_top());
          max_deg = std::max(max_deg, 1);
        }
      },
      e.node().v);
}

class SetParser {
 public:
  SetParser(std::string_view text, unsigned bound) : cur_(text), bound_(bound) {}

  BoundedSetExpr parse() {
    SetExpr e = expression();
    Ordinal universe;
    bool explicit_universe = false;
    if (cur_.accept("in")) {
      cur_.expect("[");
      const std::size_t zero_pos = (cur_.skip_ws(), cur_.position());
      if (!parse_ordinal_at(cur_, bound_).is_zero()) {
        cur_.reset(zero_pos);
        cur_.fail("universe must start at 0");
      }
      cur_.expect(",");
      universe = parse_ordinal_at(cur_, bound_);
      cur_.expect("]");
      explicit_universe = true;
    }
    if (!cur_.at_end()) cur_.fail("unexpected trailing input");
    if (!explicit_universe) universe = e.max_named();
    else if (universe < e.max_named())
      throw ParseError("ordinal " + e.max_named().to_string() + " exceeds the universe [0, " +
                           universe.to_string() + "]",
                       cur_.position());
    return {std::move(e), std::move(universe)};
  }

 private:
  SetExpr expression() {
    SetExpr lhs = term();
    while (true) {
      if (cur_.accept("|")) lhs = SetExpr::set_union(lhs, term());
      else if (cur_.accept("\\")) lhs = SetExpr::set_difference(lhs, term());
      else return lhs;
    }
  }
  SetExpr term() {
    SetExpr lhs = primary();
    while (cur_.accept("&")) lhs = SetExpr::set_intersection(lhs, primary());
    return lhs;
  }
  SetExpr primary() {
    if (cur_.accept("(")) {
      SetExpr e = expression();
      cur_.expect(")");
      return e;
    }
    if (cur_.accept("~")) return SetExpr::complement(primary());
    if (cur_.accept("[")) {
      Ordinal lo = parse_ordinal_at(cur_, bound_);
      cur_.expect(",");
      Ordinal hi = parse_ordinal_at(cur_, bound_);
      cur_.expect("]");
      return SetExpr::interval(std::move(lo), std::move(hi));
    }
    if (cur_.accept("{")) {
      std::vector<Ordinal> pts;
      if (!cur_.accept("}")) {
        do pts.push_back(parse_ordinal_at(cur_, bound_));
        while (cur_.accept(","));
        cur_.expect("}");
      }
      return SetExpr::points(std::move(pts));
    }
    if (cur_.accept("deg>=")) return degree_node(false);
    if (cur_.accept("deg=")) return degree_node(true);
    if (cur_.accept("S1")) return SetExpr::s1();
    cur_.fail("expected a set expression");
  }
  SetExpr degree_node(bool exactly) {
    const std::size_t at = (cur_.skip_ws(), cur_.position());
    const auto k = cur_.natural();
    if (k >= bound_) {
      cur_.reset(at);
      cur_.fail("degree filter " + std::to_string(k) + " reaches the exponent bound " +
                std::to_string(bound_));
    }
    return exactly ? SetExpr::degree_exactly(static_cast<unsigned>(k))
                   : SetExpr::degree_at_least(static_cast<unsigned>(k));
  }

  detail::TextCursor cur_;
  unsigned bound_;
};

}  // namespace

std::string SetExpr::to_string() const { return render(*this, 0); }

Ordinal SetExpr::max_named() const {
  Ordinal acc;
  int deg = -1;
  max_named_into(*this, acc, deg);
  return acc;
}

int SetExpr::max_degree() const {
  Ordinal acc;
  int deg = -1;
  max_named_into(*this, acc, deg);
  return deg;
}

std::string BoundedSetExpr::to_string() const {
  return expr.to_string() + " in [0, " + universe.to_string() + "]";
}

BoundedSetExpr parse_set_expr(std::string_view text, unsigned exponent_bound) {
  return SetParser(text, exponent_bound).parse();
}

NormalSetForm normalize(const SetExpr& e, const Ordinal& universe, unsigned exponent_bound) {
  if (universe < e.max_named())
    throw ContractError("ordinal " + e.max_named().to_string() + " exceeds the universe [0, " +
                        universe.to_string() + "]");
  return eval(e, universe, exponent_bound);
}

}  // namespace tukey
