#pragma once

// Symbolic cardinals from the chain w < w1 <= b <= d <= c and three-valued comparisons under
// a hypothesis context fixing (or leaving open) whether b = w1 and whether d = w1.

#include <array>
#include <string>
#include <string_view>

namespace tukey {

enum class Tri { False, True, Unknown };

std::string_view tri_name(Tri t);  // "false", "true", "unknown"
inline Tri tri_of(bool b) { return b ? Tri::True : Tri::False; }
Tri tri_not(Tri t);

struct HypContext {
  Tri b_eq_w1 = Tri::Unknown;
  Tri d_eq_w1 = Tri::Unknown;

  /// d = w1 forces b = w1; b > w1 forces d > w1. Throws ContractError on d = w1 with b > w1.
  HypContext normalized() const;
  /// "b=?, d=?" style summary, e.g. "b=w1 d>w1", or "none".
  std::string to_string() const;

  friend bool operator==(const HypContext&, const HypContext&) = default;
};

/// The six distinct normalized contexts.
std::array<HypContext, 6> all_contexts();

enum class Card { One, Omega, Omega1, B, D, C, Undefined };

/// "1", "w", "w1", "b", "d", "c", "undefined"
std::string_view card_name(Card c);

/// Undefined sorts above every cardinal (an additivity that no unbounded set realizes).
Tri card_less(Card x, Card y, const HypContext& ctx);
Tri card_leq(Card x, Card y, const HypContext& ctx);

/// Opaque spectrum of w^w: known to contain w and b, to meet [w, d], and to contain w1 iff b = w1.
struct Spectrum {
  bool omega = false;
  bool omega1 = false;
  bool spec_nn = false;

  std::string to_string() const;  // "{}", "{w}", "{w1} u SPEC_NN", ...
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Membership of one of w, w1, b in the spectrum.
Tri spectrum_contains(const Spectrum& s, Card kappa, const HypContext& ctx);

}  // namespace tukey
