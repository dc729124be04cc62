#pragma once

// Hasse diagram of the Tukey classes of K(S) under a hypothesis context.

#include <string>
#include <vector>

#include "tukey/oracle.hpp"

namespace tukey {

struct HasseNode {
  std::vector<TukeyClass> members;  // more than one when the context proves them equivalent
  std::string id;                   // DOT-safe identifier
  std::string label;
};

/// lower <_T upper with nothing proved strictly between.
struct HasseEdge {
  std::size_t lower;
  std::size_t upper;
  Status strictness;  // Refuted reverse direction gives Proved; otherwise Unknown
  bool dashed;        // drawn dashed in the customary picture of these classes
  std::string label;  // condition under which the edge collapses, if any
};

struct UnknownPair {
  std::size_t a;
  std::size_t b;
  OrderVerdict verdict;
};

struct HasseDiagram {
  HypContext context;
  std::vector<HasseNode> nodes;
  std::vector<HasseEdge> edges;
  std::vector<UnknownPair> unknown_pairs;

  std::string to_dot() const;
  std::string to_json() const;
};

/// Nodes are the nine named classes and the Stat classes over an n-atom partition
/// (none when n < 2). Throws ContractError when n exceeds 6.
HasseDiagram hasse_export(const HypContext& ctx, unsigned stat_atoms = 3);

}  // namespace tukey

namespace tukey {

/// One expected cover edge, by node id.
struct GoldenEdge {
  std::string lower;
  std::string upper;
  bool strict;  // reverse direction refuted
  bool dashed;
  friend auto operator<=>(const GoldenEdge&, const GoldenEdge&) = default;
};

/// Cover edges of the picture of the classes, transcribed by hand for three contexts:
/// nothing assumed, b = w1 (with d > w1 left open), d = w1. Stat nodes over `atoms` atoms.
std::vector<GoldenEdge> reference_edges(const HypContext& ctx, unsigned atoms = 3);
/// Expected merged node groups (by member name) in the same contexts.
std::vector<std::vector<std::string>> reference_merges(const HypContext& ctx);

struct ReferenceDiagramReport {
  struct ContextResult {
    HypContext context;
    std::vector<GoldenEdge> missing;     // in the golden list, not produced
    std::vector<GoldenEdge> unexpected;  // produced, not in the golden list
    bool merges_match = true;
  };
  unsigned atoms = 3;
  std::vector<ContextResult> contexts;
  std::vector<std::string> coherence_violations;  // over all six contexts

  bool passed() const;
  std::string to_json() const;
};

ReferenceDiagramReport reference_diagram_check(unsigned atoms = 3);

}  // namespace tukey
