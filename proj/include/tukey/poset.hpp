#pragma once

// Finite posets and the relative Tukey calculus on them, decided by exhaustive search.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tukey {

/// Bit i set means element i is in the set.
using ElementSet = std::uint64_t;

inline constexpr unsigned kMaxPosetSize = 64;

/// Elements 0..n-1; up(i) is the set of j with i <= j.
class FinitePoset {
 public:
  FinitePoset() = default;
  /// Takes the rows as given; check them with validate_poset().
  explicit FinitePoset(std::vector<ElementSet> up_rows);
  /// From a full n x n relation matrix.
  static FinitePoset from_matrix(const std::vector<std::vector<bool>>& leq);

  unsigned size() const noexcept { return static_cast<unsigned>(up_.size()); }
  ElementSet all() const noexcept;
  bool leq(unsigned i, unsigned j) const { return (up_[i] >> j) & 1U; }
  ElementSet up(unsigned i) const { return up_[i]; }
  ElementSet down(unsigned i) const { return down_[i]; }
  /// Elements above every element of s (all elements when s is empty).
  ElementSet upper_bounds(ElementSet s) const;
  bool bounded(ElementSet s) const { return upper_bounds(s) != 0; }

  std::vector<std::vector<bool>> matrix() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.up_ == b.up_; }

 private:
  std::vector<ElementSet> up_, down_;
};

struct RelPair {
  FinitePoset poset;
  ElementSet subset = 0;
};

inline RelPair full_pair(FinitePoset p) {
  const ElementSet all = p.all();
  return {std::move(p), all};
}

/// f[i] is the image of element i.
using MapTable = std::vector<unsigned>;

/// Empty when reflexive, antisymmetric and transitive; otherwise the first violation.
std::optional<std::string> validate_poset(const FinitePoset& p);
bool is_directed(const FinitePoset& p);
/// Every subset with an upper bound (the empty set included) has a least upper bound.
bool has_joins_for_bounded(const FinitePoset& p);
/// Least upper bound of s, if it exists.
std::optional<unsigned> join(const FinitePoset& p, ElementSet s);

/// Least size of C subset of P with every element of P' below some element of C.
unsigned cof_rel(const RelPair& pair);
/// Least size of a subset of P' without upper bound in P; nullopt when there is none.
std::optional<unsigned> add_rel(const RelPair& pair);
/// Every k-subset of P' contains an l-subset whose m-subsets are all bounded in P.
/// Requires k >= l >= m.
bool has_calibre(const RelPair& pair, unsigned k, unsigned l, unsigned m);

/// f : P -> Q maps sets cofinal for P' to sets cofinal for Q', tested as
/// for all q' in Q' there is p' in P' with f(p) >= q' whenever p >= p'.
bool is_rel_quotient(const MapTable& f, const RelPair& src, const RelPair& dst);
/// g : Q -> P (only values on Q' matter, and they must lie in P') maps subsets of Q'
/// unbounded in Q to sets unbounded in P, tested as: for each p the set
/// {q' in Q' : g(q') <= p} is bounded in Q.
bool is_rel_tukey_map(const MapTable& g, const RelPair& dst, const RelPair& src);

/// Map budget of the exhaustive searches: TUKEY_BUDGET when set, else 2'000'000.
std::uint64_t default_map_budget();

/// Throws BudgetExceeded when |Q|^|P| exceeds the budget.
bool exists_quotient(const RelPair& src, const RelPair& dst, std::uint64_t budget = default_map_budget());
/// Searches maps Q' -> P'. Throws BudgetExceeded when |P'|^|Q'| exceeds the budget.
bool exists_tukey_map(const RelPair& dst, const RelPair& src, std::uint64_t budget = default_map_budget());

// Constructions

FinitePoset chain(unsigned n);
FinitePoset antichain(unsigned n);
/// Subsets of {0..m-1} ordered by inclusion; element i is the subset with bit mask i.
FinitePoset powerset(unsigned m);
/// Subsets of {0..n-1} of size < k, in increasing order of bit mask.
FinitePoset fin_subsets(unsigned n, unsigned k);
std::vector<ElementSet> fin_subset_masks(unsigned n, unsigned k);
/// Element (i, j) is i * |q| + j.
FinitePoset product(const FinitePoset& p, const FinitePoset& q);
/// Restriction of the order to the elements of s, relabelled in increasing order.
FinitePoset induced(const FinitePoset& p, ElementSet s);

/// Smallest relabelling of the order under all permutations; equal iff isomorphic. n <= 8.
std::vector<ElementSet> canonical_form(const FinitePoset& p);
/// One representative per isomorphism class of posets on exactly n elements (n <= 6).
std::vector<FinitePoset> enumerate_posets(unsigned n);

}  // namespace tukey
