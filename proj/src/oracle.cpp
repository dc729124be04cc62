#include "tukey/oracle.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "tukey/classifier.hpp"
#include "tukey/errors.hpp"

namespace tukey {

namespace {

using K = Fact::Kind;
using T = ClassTag;

constexpr std::string_view kTop =
    "[w1]^<w x w^w is Tukey-above K(S) for every S subset of w1";
constexpr std::string_view kFactorBelowProduct = "each factor is Tukey-below a product";
constexpr std::string_view kBoundedChain =
    "1 <_T w <_T w^w: compact, locally compact and non-locally compact bounded S";
constexpr std::string_view kIncomparable =
    "countable subsets of w1 are bounded, so w and w1 are Tukey-incomparable";
constexpr std::string_view kNonstationary =
    "[w1]^<w <=_T K(S) iff S is nonstationary (K(S) lacks calibre (w1,w) exactly then)";

constexpr std::array kFacts = {
    Fact{K::Le, T::One, T::Omega, Condition::Always, kBoundedChain},
    Fact{K::Le, T::One, T::Omega1, Condition::Always, "1 is Tukey-below every directed set"},
    Fact{K::Le, T::Omega, T::OmegaOmega, Condition::Always, kBoundedChain},
    Fact{K::Le, T::Omega, T::OmegaTimesOmega1, Condition::Always, kFactorBelowProduct},
    Fact{K::Le, T::Omega1, T::OmegaTimesOmega1, Condition::Always, kFactorBelowProduct},
    Fact{K::Le, T::OmegaTimesOmega1, T::FinPowOmega1, Condition::Always,
         "alpha -> {alpha} is a Tukey map w1 -> [w1]^<w and w <_T [w1]^<w, so w x w1 <=_T [w1]^<w"},
    Fact{K::Le, T::OmegaTimesOmega1, T::Omega1TimesOmegaOmega, Condition::Always,
         "(alpha, n) -> (alpha, (n,0,0,...)) is a Tukey map w1 x w -> w1 x w^w"},
    Fact{K::Le, T::OmegaOmega, T::Omega1TimesOmegaOmega, Condition::Always, kFactorBelowProduct},
    Fact{K::Le, T::FinPowOmega1, T::FinPowTimesOmegaOmega, Condition::Always, kFactorBelowProduct},
    Fact{K::Le, T::Omega1TimesOmegaOmega, T::Sigma, Condition::Always,
         "S with a club and unbounded non-closed defect contains a closed metric fan and is "
         "unbounded, so w^w and w1 are both below Sigma(w^w1)"},
    Fact{K::Le, T::Sigma, T::FinPowTimesOmegaOmega, Condition::Always, kTop},
    Fact{K::Le, T::Omega1TimesOmegaOmega, T::Stat, Condition::Always,
         "stationary co-stationary S is unbounded with non-closed defect, so it contains a closed "
         "metric fan and w1 x w^w <=_T K(S)"},
    Fact{K::Le, T::Stat, T::FinPowTimesOmegaOmega, Condition::Always, kTop},
    Fact{K::Le, T::Omega1TimesOmegaOmega, T::OmegaOmega, Condition::BEqW1,
         "w^w >=_T w1 iff w1 = b, so w1 x w^w =_T w^w iff w1 = b"},
    Fact{K::Le, T::FinPowTimesOmegaOmega, T::FinPowOmega1, Condition::DEqW1,
         "w^w <=_T [w1]^<w iff cof(w^w) = d <= w1, so [w1]^<w x w^w =_T [w1]^<w iff w1 = d"},

    Fact{K::NotGe, T::Omega, T::Omega1, Condition::Always, kIncomparable},
    Fact{K::NotGe, T::Omega1, T::Omega, Condition::Always, kIncomparable},
    Fact{K::NotGe, T::Sigma, T::FinPowOmega1, Condition::Always, kNonstationary},
    Fact{K::NotGe, T::Stat, T::FinPowOmega1, Condition::Always, kNonstationary},
    Fact{K::NotGe, T::OmegaTimesOmega1, T::OmegaOmega, Condition::Always,
         "w1 x w >=_T w^w would give w1 x w >=_T w1 x w^w, as w1 and w^w are Dedekind complete"},
    Fact{K::NotGe, T::Omega1TimesOmegaOmega, T::FinPowOmega1, Condition::Always,
         "w1 x w^w has calibre (w1,w) and [w1]^<w does not"},
    Fact{K::NotGe, T::Sigma, T::Stat, Condition::Always,
         "Todorcevic: K(S') >=_T K(S) forces S'\\S nonstationary, but a club minus a co-stationary "
         "set is stationary"},
    Fact{K::NotGe, T::OmegaOmega, T::Sigma, Condition::Always,
         "K(M) >=_T Sigma(w^w1) fails for every separable metrizable M, while w^w =_T K(R\\Q)"},
    Fact{K::NotGe, T::Omega1TimesOmegaOmega, T::Sigma, Condition::Always,
         "K(M) >=_T Sigma(w^w1) fails for every separable metrizable M, while w1 x w^w <=_T K(Q)"},
    Fact{K::NotGe, T::Omega1TimesOmegaOmega, T::Stat, Condition::Always,
         "w1 x w^w <=_T K(Q), and (S, K(S)) is not below any K(M) when S is co-stationary"},
    Fact{K::NotGe, T::OmegaTimesOmega1, T::Omega1TimesOmegaOmega, Condition::Always,
         "w1 x w has calibre (w1,w1,w); w1 x w^w has it only if w1 < b, and then its cofinality "
         "d exceeds w1"},
    Fact{K::NotGe, T::OmegaTimesOmega1, T::FinPowOmega1, Condition::Always,
         "w x w1 has calibre (w1,w) and [w1]^<w does not"},
};

bool matches(ClassTag pattern, const TukeyClass& c) { return pattern == c.tag(); }

// Atom shape of an unbounded class modulo the nonstationary ideal.
struct Shape {
  enum { Bounded, Empty, Full, Atoms } kind;
  AtomSet atoms = 0;
};

Shape shape(const TukeyClass& c) {
  switch (c.tag()) {
    case T::One:
    case T::Omega:
    case T::OmegaOmega: return {Shape::Bounded};
    case T::FinPowOmega1:
    case T::FinPowTimesOmegaOmega: return {Shape::Empty};
    case T::Stat: return {Shape::Atoms, c.atoms()};
    default: return {Shape::Full};
  }
}

// Atoms of p missing from q (mod NS), or nullopt when the rule does not apply.
std::optional<std::string> stationary_excess(const TukeyClass& p, const TukeyClass& q) {
  const Shape sp = shape(p), sq = shape(q);
  if (sp.kind == Shape::Bounded || sq.kind == Shape::Bounded) return std::nullopt;
  if (sp.kind == Shape::Empty || sq.kind == Shape::Full) return std::nullopt;
  if (sp.kind == Shape::Full) return std::string(sq.kind == Shape::Empty ? "a club" : "a stationary set");
  if (sq.kind == Shape::Empty) return format_atoms(sp.atoms);
  const AtomSet diff = sp.atoms & ~sq.atoms;
  if (diff == 0) return std::nullopt;
  return format_atoms(diff);
}

std::string describe(const TukeyClass& c) { return c.name(); }

// Refutation of p >=_T q from invariants alone.
std::optional<std::string> invariant_refutation(const TukeyClass& p, const TukeyClass& q,
                                                const HypContext& ctx) {
  if (card_less(cofinality(p), cofinality(q), ctx) == Tri::True)
    return "cofinality: cof " + describe(p) + " = " + std::string(card_name(cofinality(p))) +
           " < cof " + describe(q) + " = " + std::string(card_name(cofinality(q))) +
           ", and P >=_T Q forces cof P >= cof Q";
  if (card_less(additivity(q), additivity(p), ctx) == Tri::True)
    return "additivity: add " + describe(p) + " = " + std::string(card_name(additivity(p))) +
           " > add " + describe(q) + " = " + std::string(card_name(additivity(q))) +
           ", and P >=_T Q forces add P <= add Q";
  for (CalibreKind k : kAllCalibres)
    if (calibre(p, k, ctx) == Tri::True && calibre(q, k, ctx) == Tri::False)
      return "calibre " + std::string(calibre_name(k)) + ": " + describe(p) + " has it, " +
             describe(q) + " does not, and calibres pass down the Tukey order";
  const Spectrum sp = spectrum(p), sq = spectrum(q);
  for (Card kappa : {Card::Omega, Card::Omega1, Card::B})
    if (spectrum_contains(sq, kappa, ctx) == Tri::True && spectrum_contains(sp, kappa, ctx) == Tri::False)
      return "spectrum: " + std::string(card_name(kappa)) + " lies in spec " + describe(q) +
             " but not in spec " + describe(p) + ", and P >=_T Q forces spec Q subset of spec P";
  if (auto excess = stationary_excess(p, q))
    return "Todorcevic: K(S) >=_T K(S') forces S\\S' nonstationary; here S\\S' contains " + *excess;
  return std::nullopt;
}

}  // namespace

bool condition_holds(Condition c, const HypContext& raw) {
  const HypContext ctx = raw.normalized();
  switch (c) {
    case Condition::Always: return true;
    case Condition::BEqW1: return ctx.b_eq_w1 == Tri::True;
    case Condition::DEqW1: return ctx.d_eq_w1 == Tri::True;
  }
  return false;
}

std::string_view condition_text(Condition c) {
  switch (c) {
    case Condition::Always: return "";
    case Condition::BEqW1: return "w1 = b";
    case Condition::DEqW1: return "w1 = d";
  }
  return "";
}

std::span<const Fact> fact_base() { return kFacts; }

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Proved: return "Proved";
    case Status::Refuted: return "Refuted";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

Reasoner::Reasoner(const HypContext& ctx, std::vector<TukeyClass> stat_classes)
    : ctx_(ctx.normalized()) {
  nodes_.assign(kNamedTags.begin(), kNamedTags.end());
  unsigned universe = 0;
  for (const auto& s : stat_classes) {
    if (!s.is_stat()) throw ContractError("Reasoner: extra node " + s.name() + " is not a Stat class");
    if (universe != 0 && s.universe_size() != universe)
      throw ContractError("Stat classes from different atom universes cannot be compared");
    universe = s.universe_size();
    if (std::find(nodes_.begin(), nodes_.end(), s) == nodes_.end()) nodes_.push_back(s);
  }
  const std::size_t n = nodes_.size();
  le_.assign(n, std::vector<std::string>(n));
  not_ge_ = le_;
  has_le_.assign(n, std::vector<bool>(n, false));
  has_not_ge_ = has_le_;

  for (std::size_t i = 0; i < n; ++i) {
    has_le_[i][i] = true;
    le_[i][i] = "reflexivity";
  }
  auto cite = [](const Fact& f) {
    std::string c(f.citation);
    if (f.condition != Condition::Always) c += " [under " + std::string(condition_text(f.condition)) + "]";
    return c;
  };
  for (const Fact& f : kFacts) {
    if (f.kind != K::Le || !condition_holds(f.condition, ctx_)) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && matches(f.lhs, nodes_[i]) && matches(f.rhs, nodes_[j]) && !has_le_[i][j]) {
          has_le_[i][j] = true;
          le_[i][j] = cite(f);
        }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!has_le_[i][j] && has_le_[i][k] && has_le_[k][j]) {
          has_le_[i][j] = true;
          le_[i][j] = le_[i][k] + "; then " + le_[k][j];
        }

  // Base refutations of nodes[i] >=_T nodes[j].
  std::vector<std::vector<bool>> base(n, std::vector<bool>(n, false));
  std::vector<std::vector<std::string>> base_cite(n, std::vector<std::string>(n));
  for (const Fact& f : kFacts) {
    if (f.kind != K::NotGe || !condition_holds(f.condition, ctx_)) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (matches(f.lhs, nodes_[i]) && matches(f.rhs, nodes_[j]) && !base[i][j]) {
          base[i][j] = true;
          base_cite[i][j] = cite(f);
        }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!base[i][j])
        if (auto why = invariant_refutation(nodes_[i], nodes_[j], ctx_)) {
          base[i][j] = true;
          base_cite[i][j] = std::move(*why);
        }

  // x >=_T y is refuted when a >=_T x, c <=_T y and a >=_T c is refuted.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (base[x][y]) {
        has_not_ge_[x][y] = true;
        not_ge_[x][y] = base_cite[x][y];
        continue;
      }
      for (std::size_t a = 0; a < n && !has_not_ge_[x][y]; ++a) {
        if (!has_le_[x][a]) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (base[a][c] && has_le_[c][y]) {
            has_not_ge_[x][y] = true;
            not_ge_[x][y] = nodes_[x].name() + " <=_T " + nodes_[a].name() + " and " + nodes_[c].name() +
                            " <=_T " + nodes_[y].name() + ", but " + nodes_[a].name() + " >=_T " +
                            nodes_[c].name() + " fails: " + base_cite[a][c];
            break;
          }
      }
    }
}

std::size_t Reasoner::index_of(const TukeyClass& c) const {
  const auto it = std::find(nodes_.begin(), nodes_.end(), c);
  if (it == nodes_.end()) throw ContractError("class " + c.name() + " is not a node of this reasoner");
  return static_cast<std::size_t>(it - nodes_.begin());
}

OrderVerdict Reasoner::verdict(std::size_t i, std::size_t j) const {
  auto judge = [&](std::size_t upper, std::size_t lower) {
    // upper >=_T lower
    if (has_le_[lower][upper]) return Judgement{Status::Proved, le_[lower][upper]};
    if (has_not_ge_[upper][lower]) return Judgement{Status::Refuted, not_ge_[upper][lower]};
    return Judgement{};
  };
  return {judge(j, i), judge(i, j)};
}

std::vector<std::string> Reasoner::coherence_violations() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (std::size_t j = 0; j < nodes_.size(); ++j)
      if (has_le_[j][i] && has_not_ge_[i][j])
        out.push_back(nodes_[i].name() + " >=_T " + nodes_[j].name() + " is both proved (" + le_[j][i] +
                      ") and refuted (" + not_ge_[i][j] + ") under " + ctx_.to_string());
  return out;
}

OrderVerdict order(const TukeyClass& a, const TukeyClass& b, const HypContext& ctx) {
  std::vector<TukeyClass> stats;
  for (const auto& c : {a, b})
    if (c.is_stat()) stats.push_back(c);
  return Reasoner(ctx, std::move(stats)).order(a, b);
}

}  // namespace tukey
