#pragma once

// Decidable boolean algebra of bounded subsets of [0, B] built from finite point sets,
// closed intervals and degree filters, with the topological operators of the order topology.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tukey/ordinal.hpp"
#include "tukey/tukey_class.hpp"

namespace tukey {

// ---------------------------------------------------------------------------
// Symbolic expressions

struct SetExprNode;

/// Immutable expression tree; cheap to copy.
class SetExpr {
 public:
  static SetExpr points(std::vector<Ordinal> pts);
  /// Closed interval [lo, hi]; empty when lo > hi.
  static SetExpr interval(Ordinal lo, Ordinal hi);
  static SetExpr degree_at_least(unsigned k);
  static SetExpr degree_exactly(unsigned k);
  static SetExpr set_union(SetExpr a, SetExpr b);
  static SetExpr set_intersection(SetExpr a, SetExpr b);
  static SetExpr set_difference(SetExpr a, SetExpr b);
  static SetExpr complement(SetExpr a);
  /// (w^2 + 1) minus the nonzero multiples of w below w^2.
  static SetExpr s1();

  const SetExprNode& node() const { return *node_; }
  std::string to_string() const;
  /// Largest ordinal mentioned anywhere in the tree (0 if none).
  Ordinal max_named() const;
  /// Largest degree mentioned in a degree filter, or -1.
  int max_degree() const;

 private:
  explicit SetExpr(std::shared_ptr<const SetExprNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const SetExprNode> node_;
};

struct PointsNode { std::vector<Ordinal> pts; };
struct IntervalNode { Ordinal lo, hi; };
struct DegreeNode { unsigned k; bool exactly; };
struct BinaryNode { char op; SetExpr lhs, rhs; };  // op in {'|', '&', '\\'}
struct ComplementNode { SetExpr arg; };
struct BuiltinS1Node {};

struct SetExprNode {
  std::variant<PointsNode, IntervalNode, DegreeNode, BinaryNode, ComplementNode, BuiltinS1Node> v;
};

/// A set expression together with its universe [0, B].
struct BoundedSetExpr {
  SetExpr expr;
  Ordinal universe;

  std::string to_string() const;
};

/// Parses `setexpr [in [0, B]]`. The universe defaults to the largest named ordinal
/// (w^2 when S1 is used).
BoundedSetExpr parse_set_expr(std::string_view text, unsigned exponent_bound = kExponentBound);

// ---------------------------------------------------------------------------
// Normal forms

struct DegreeFilter {
  enum class Kind { AtLeast, Exactly };
  Kind kind;
  unsigned degree;

  friend bool operator==(const DegreeFilter&, const DegreeFilter&) = default;
};

struct PointsAtom {
  std::vector<Ordinal> points;
  friend bool operator==(const PointsAtom&, const PointsAtom&) = default;
};

/// Ordinals g with lo < g < hi whose degree passes `filter`.
struct BandAtom {
  Ordinal lo, hi;
  DegreeFilter filter;
  friend bool operator==(const BandAtom&, const BandAtom&) = default;
};

using SetAtom = std::variant<PointsAtom, BandAtom>;

/// Canonical representation of a subset of [0, B].
///
/// Internally [0, B] is cut at points 0 = c0 < c1 < ... < cr = B; each cut carries a
/// membership flag and each open gap (ci, ci+1) a set of degrees. Inside a gap membership
/// depends only on the degree. The cuts are the ends of the maximal degree-uniform gaps
/// taken greedily from the left, and gap degree sets are pruned to degrees that occur in the
/// gap, so two forms are equal exactly when they denote the same set.
class NormalSetForm {
 public:
  using DegreeMask = std::uint32_t;

  /// The empty subset of [0, universe].
  explicit NormalSetForm(Ordinal universe = {}, unsigned exponent_bound = kExponentBound);

  static NormalSetForm whole(Ordinal universe, unsigned exponent_bound = kExponentBound);

  const Ordinal& universe() const noexcept { return cuts_.back(); }
  unsigned exponent_bound() const noexcept { return exponent_bound_; }

  bool contains(const Ordinal& g) const;
  bool empty() const;
  /// True when the set has finitely many elements.
  bool finite() const;

  std::vector<SetAtom> atoms() const;
  std::string to_string() const;

  const std::vector<Ordinal>& cuts() const noexcept { return cuts_; }
  const std::vector<bool>& cut_members() const noexcept { return cut_in_; }
  const std::vector<DegreeMask>& gap_degrees() const noexcept { return gap_mask_; }

  friend bool operator==(const NormalSetForm&, const NormalSetForm&) = default;

  // Building blocks used by normalize() and the set operators.
  struct Cells {
    std::vector<Ordinal> cuts;
    std::vector<bool> in;
    std::vector<DegreeMask> gaps;
  };
  static NormalSetForm from_cells(Cells cells, unsigned exponent_bound);
  Cells refined(const std::vector<Ordinal>& extra_cuts) const;

 private:
  std::vector<Ordinal> cuts_;
  std::vector<bool> cut_in_;
  std::vector<DegreeMask> gap_mask_;
  unsigned exponent_bound_;
};

/// Degrees d < bound such that some ordinal of degree exactly d lies strictly between lo and hi.
NormalSetForm::DegreeMask present_degrees(const Ordinal& lo, const Ordinal& hi, unsigned exponent_bound);

/// Throws ContractError if a named ordinal exceeds the universe or a degree filter reaches the bound.
NormalSetForm normalize(const SetExpr& e, const Ordinal& universe, unsigned exponent_bound = kExponentBound);
inline NormalSetForm normalize(const BoundedSetExpr& b, unsigned exponent_bound = kExponentBound) {
  return normalize(b.expr, b.universe, exponent_bound);
}

bool member(const Ordinal& g, const NormalSetForm& s);

NormalSetForm set_union(const NormalSetForm& a, const NormalSetForm& b);
NormalSetForm set_intersection(const NormalSetForm& a, const NormalSetForm& b);
NormalSetForm set_difference(const NormalSetForm& a, const NormalSetForm& b);
NormalSetForm complement(const NormalSetForm& a);
bool is_subset(const NormalSetForm& a, const NormalSetForm& b);

/// Limit points of s inside [0, B].
NormalSetForm derived(const NormalSetForm& s);
NormalSetForm closure(const NormalSetForm& s);
/// closure(s) minus s.
NormalSetForm cl_diff(const NormalSetForm& s);

bool is_closed(const NormalSetForm& s);
/// Closed subsets of the compact space [0, B] are compact; the empty set counts as compact.
bool is_compact(const NormalSetForm& s);
bool is_locally_compact(const NormalSetForm& s);
/// No point of s is a limit point of s.
bool is_discrete(const NormalSetForm& s);

/// Finite probe set deciding equality of two forms: all cuts of both plus the least
/// element of every occurring degree in every gap of their common refinement.
std::vector<Ordinal> probe_set(const NormalSetForm& a, const NormalSetForm& b);
bool extensionally_equal(const NormalSetForm& a, const NormalSetForm& b);

/// One (compact), Omega (locally compact, not compact) or OmegaOmega.
TukeyClass classify_bounded(const NormalSetForm& s);

}  // namespace tukey
