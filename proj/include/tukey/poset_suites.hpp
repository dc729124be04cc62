#pragma once

// Exhaustive checks of the relative Tukey calculus over small posets, the finite form of
// the combination construction for quotients, and JSON helpers for posets and reports.

#include <string>
#include <vector>

#include "tukey/poset.hpp"

namespace tukey {

/// Reference definitions by enumeration of all cofinal (resp. unbounded) subsets. |P|, |Q| <= 20.
bool is_rel_quotient_direct(const MapTable& f, const RelPair& src, const RelPair& dst);
bool is_rel_tukey_map_direct(const MapTable& g, const RelPair& dst, const RelPair& src);

struct PairCase {
  RelPair src;
  RelPair dst;
  bool quotient = false;
  bool tukey_map = false;
  std::string note;
};

struct DualityReport {
  unsigned max_n = 0;
  bool include_nondirected = false;
  std::size_t posets = 0;
  std::size_t relative_pairs = 0;
  std::size_t comparisons = 0;
  std::size_t quotients_found = 0;
  std::vector<PairCase> counterexamples;             // quotient exists xor Tukey map exists
  std::vector<PairCase> monotonicity_violations;     // cof/add inequalities broken by a quotient

  std::string to_json() const;
};

/// Runs every pair (P', P) -> (Q', Q) over posets with 1..max_n elements (directed only unless
/// requested) on `threads` workers (0 = hardware concurrency). Results do not depend on threads.
DualityReport duality_check(unsigned max_n, bool include_nondirected = false, unsigned threads = 0,
                            std::uint64_t budget = default_map_budget());

struct CharacterizationReport {
  unsigned max_p = 0, max_q = 0;
  std::size_t quotient_maps = 0;
  std::size_t tukey_maps = 0;
  std::vector<std::string> disagreements;

  std::string to_json() const;
};

/// Compares the fast tests of is_rel_quotient and is_rel_tukey_map with the reference
/// definitions on every map between posets with |P| <= max_p, |Q| <= max_q and all subsets.
CharacterizationReport characterization_check(unsigned max_p, unsigned max_q, unsigned threads = 0);

/// One piece of the combination construction: a monotone phi : Q -> P cofinal for P_alpha.
struct QuotientPart {
  ElementSet subset = 0;
  MapTable phi;
};

struct CombinedQuotient {
  RelPair src;                          // Q x [parts]^<w with the full subset
  RelPair dst;                          // target with the union of the parts
  MapTable table;                       // (q, F) -> sup of phi_alpha(q) over alpha in F
  std::vector<ElementSet> index_sets;   // labels F of the second factor
  bool verified = false;                // table passed is_rel_quotient
};

/// Throws ContractError when p is not directed or lacks joins, or a part is not monotone or
/// not cofinal for its subset.
CombinedQuotient combine_quotient(const FinitePoset& q, const std::vector<QuotientPart>& parts,
                                  const FinitePoset& p);

/// {"n": 3, "leq": [[true, ...], ...]}
std::string poset_to_json(const FinitePoset& p);
/// Throws ParseError on malformed input and ContractError when the relation is not an order.
FinitePoset poset_from_json(const std::string& text);

}  // namespace tukey
