#include "tukey/cardinal.hpp"

#include <functional>
#include <vector>

#include "tukey/errors.hpp"

namespace tukey {

namespace {

// Ranks of 1, w, w1, b, d, c in one order pattern consistent with a context.
struct Pattern {
  std::array<int, 7> rank;
};

std::vector<Pattern> patterns(const HypContext& raw) {
  const HypContext ctx = raw.normalized();
  std::vector<Pattern> out;
  for (int b_gt = 0; b_gt <= 1; ++b_gt)
    for (int d_gt = 0; d_gt <= 1; ++d_gt)
      for (int c_gt = 0; c_gt <= 1; ++c_gt) {
        const bool b_eq = b_gt == 0;
        const bool d_eq = b_eq && d_gt == 0;
        if (ctx.b_eq_w1 != Tri::Unknown && (ctx.b_eq_w1 == Tri::True) != b_eq) continue;
        if (ctx.d_eq_w1 != Tri::Unknown && (ctx.d_eq_w1 == Tri::True) != d_eq) continue;
        const int b = 2 + b_gt, d = b + d_gt, c = d + c_gt;
        out.push_back({{0, 1, 2, b, d, c, 1000}});
      }
  return out;
}

Tri over_patterns(const HypContext& ctx, const std::function<bool(const Pattern&)>& pred) {
  bool any_true = false, any_false = false;
  for (const auto& p : patterns(ctx)) (pred(p) ? any_true : any_false) = true;
  if (any_true && !any_false) return Tri::True;
  if (any_false && !any_true) return Tri::False;
  return Tri::Unknown;
}

}  // namespace

std::string_view tri_name(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

Tri tri_not(Tri t) {
  if (t == Tri::Unknown) return t;
  return t == Tri::True ? Tri::False : Tri::True;
}

HypContext HypContext::normalized() const {
  if (d_eq_w1 == Tri::True && b_eq_w1 == Tri::False)
    throw ContractError("contradictory hypotheses: d = w1 requires b = w1 since w1 <= b <= d");
  HypContext out = *this;
  if (d_eq_w1 == Tri::True) out.b_eq_w1 = Tri::True;
  if (b_eq_w1 == Tri::False) out.d_eq_w1 = Tri::False;
  return out;
}

std::string HypContext::to_string() const {
  const HypContext n = normalized();
  std::string out;
  if (n.b_eq_w1 != Tri::Unknown) out += n.b_eq_w1 == Tri::True ? "b=w1" : "b>w1";
  if (n.d_eq_w1 != Tri::Unknown) {
    if (!out.empty()) out += ' ';
    out += n.d_eq_w1 == Tri::True ? "d=w1" : "d>w1";
  }
  return out.empty() ? "none" : out;
}

std::array<HypContext, 6> all_contexts() {
  return {{{Tri::Unknown, Tri::Unknown},
           {Tri::True, Tri::Unknown},
           {Tri::True, Tri::True},
           {Tri::True, Tri::False},
           {Tri::False, Tri::False},
           {Tri::Unknown, Tri::False}}};
}

std::string_view card_name(Card c) {
  switch (c) {
    case Card::One: return "1";
    case Card::Omega: return "w";
    case Card::Omega1: return "w1";
    case Card::B: return "b";
    case Card::D: return "d";
    case Card::C: return "c";
    case Card::Undefined: return "undefined";
  }
  return "undefined";
}

Tri card_less(Card x, Card y, const HypContext& ctx) {
  return over_patterns(ctx, [&](const Pattern& p) {
    return p.rank[static_cast<std::size_t>(x)] < p.rank[static_cast<std::size_t>(y)];
  });
}

Tri card_leq(Card x, Card y, const HypContext& ctx) {
  return over_patterns(ctx, [&](const Pattern& p) {
    return p.rank[static_cast<std::size_t>(x)] <= p.rank[static_cast<std::size_t>(y)];
  });
}

std::string Spectrum::to_string() const {
  std::string finite;
  if (omega) finite = "w";
  if (omega1) finite += finite.empty() ? "w1" : ", w1";
  if (!spec_nn) return "{" + finite + "}";
  if (omega1 && !omega) return "{w1} u SPEC_NN";
  if (finite.empty()) return "SPEC_NN";
  return "{" + finite + "} u SPEC_NN";
}

Tri spectrum_contains(const Spectrum& s, Card kappa, const HypContext& raw) {
  const HypContext ctx = raw.normalized();
  switch (kappa) {
    case Card::Omega:
      return tri_of(s.omega || s.spec_nn);
    case Card::Omega1:
      if (s.omega1) return Tri::True;
      return s.spec_nn ? ctx.b_eq_w1 : Tri::False;
    case Card::B:
      if (s.spec_nn) return Tri::True;
      return s.omega1 ? ctx.b_eq_w1 : Tri::False;
    default:
      throw ContractError("spectrum membership is tracked only for w, w1 and b");
  }
}

}  // namespace tukey
