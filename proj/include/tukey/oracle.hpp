#pragma once

// Three-valued Tukey order between classes. Verdicts come from a fixed table of facts,
// refutations by invariants (cofinality, additivity, calibres, spectrum, stationarity of
// atoms) and closure under transitivity. Every Proved or Refuted verdict carries a citation.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tukey/cardinal.hpp"
#include "tukey/tukey_class.hpp"

namespace tukey {

/// Hypothesis a conditional fact depends on.
enum class Condition { Always, BEqW1, DEqW1 };

bool condition_holds(Condition c, const HypContext& ctx);
std::string_view condition_text(Condition c);  // "", "w1 = b", "w1 = d"

/// `lhs <=_T rhs` (Le) or `lhs` is not Tukey-above `rhs` (NotGe).
/// A Stat tag stands for every Stat class.
struct Fact {
  enum class Kind { Le, NotGe };
  Kind kind;
  ClassTag lhs;
  ClassTag rhs;
  Condition condition;
  std::string_view citation;
};

std::span<const Fact> fact_base();

enum class Status { Proved, Refuted, Unknown };
std::string_view status_name(Status s);  // "Proved", "Refuted", "Unknown"

struct Judgement {
  Status status = Status::Unknown;
  std::string citation;  // empty iff Unknown
};

/// le: c1 <=_T c2. ge: c1 >=_T c2.
struct OrderVerdict {
  Judgement le;
  Judgement ge;

  bool equivalent() const { return le.status == Status::Proved && ge.status == Status::Proved; }
};

/// Closure of the fact base over the nine named classes and a set of Stat classes,
/// all drawn from one atom universe.
class Reasoner {
 public:
  explicit Reasoner(const HypContext& ctx, std::vector<TukeyClass> stat_classes = {});

  const HypContext& context() const noexcept { return ctx_; }
  const std::vector<TukeyClass>& nodes() const noexcept { return nodes_; }
  /// Index of c among nodes(); throws ContractError if absent.
  std::size_t index_of(const TukeyClass& c) const;

  OrderVerdict verdict(std::size_t i, std::size_t j) const;
  OrderVerdict order(const TukeyClass& a, const TukeyClass& b) const {
    return verdict(index_of(a), index_of(b));
  }

  /// Pairs where one direction is both proved and refuted; empty when the facts are coherent.
  std::vector<std::string> coherence_violations() const;

 private:
  // le_[i][j]: nodes[i] <=_T nodes[j] proved. not_ge_[i][j]: nodes[i] >=_T nodes[j] refuted.
  std::vector<std::vector<std::string>> le_, not_ge_;
  std::vector<std::vector<bool>> has_le_, has_not_ge_;
  std::vector<TukeyClass> nodes_;
  HypContext ctx_;
};

OrderVerdict order(const TukeyClass& a, const TukeyClass& b, const HypContext& ctx);

}  // namespace tukey
