#include "tukey/classifier.hpp"

namespace tukey {

namespace {

// Calibre answer "iff w1 < b".
Tri when_b_above_w1(const HypContext& ctx) { return tri_not(ctx.normalized().b_eq_w1); }

}  // namespace

TukeyClass classify_unbounded(const UnboundedDescriptor& d) {
  require_valid(d);
  switch (d.cl_diff) {
    case ClDiff::Empty: return ClassTag::Omega1;
    case ClDiff::BoundedClosed: return ClassTag::OmegaTimesOmega1;
    case ClDiff::BoundedNotClosed: return ClassTag::Omega1TimesOmegaOmega;
    case ClDiff::UnboundedClosed: return ClassTag::FinPowOmega1;
    case ClDiff::UnboundedNotClosed:
      if (d.stat_atoms == 0) return ClassTag::FinPowTimesOmegaOmega;
      if (d.stat_atoms == d.universe.full()) return ClassTag::Sigma;
      return TukeyClass::stat(d.stat_atoms, d.universe.size);
  }
  return ClassTag::One;
}

TukeyClass classify(const Space& space) {
  if (const auto* s = std::get_if<NormalSetForm>(&space)) return classify_bounded(*s);
  return classify_unbounded(std::get<UnboundedDescriptor>(space));
}

std::string classification_reason(const Space& space) {
  if (const auto* s = std::get_if<NormalSetForm>(&space)) {
    if (is_compact(*s)) return "S is compact, so K(S) has a largest element and K(S) =_T 1";
    if (is_locally_compact(*s))
      return "S is bounded and locally compact but not compact, so K(S) =_T w";
    return "S is bounded and not locally compact; it contains a closed metric fan, so K(S) =_T w^w";
  }
  const auto& d = std::get<UnboundedDescriptor>(space);
  switch (d.cl_diff) {
    case ClDiff::Empty: return "S is closed and unbounded, so K(S) =_T w1";
    case ClDiff::BoundedClosed:
      return "S is unbounded and cl(S)\\S is nonempty, closed and bounded, so K(S) =_T w x w1";
    case ClDiff::BoundedNotClosed:
      return "S is unbounded and cl(S)\\S is bounded but not closed, so K(S) =_T w1 x w^w";
    case ClDiff::UnboundedClosed:
      return "cl(S)\\S contains a club, so S is nonstationary and locally compact and K(S) =_T [w1]^<w";
    case ClDiff::UnboundedNotClosed:
      if (d.stat_atoms == 0)
        return "S is nonstationary and not locally compact, so K(S) =_T [w1]^<w x w^w, the largest class";
      if (d.stat_atoms == d.universe.full())
        return "S contains a club and cl(S)\\S is unbounded, so K(S) =_T Sigma(w^w1)";
      return "S is stationary and co-stationary; K(S) is determined by S modulo the nonstationary "
             "ideal when the defect is unbounded";
  }
  return "";
}

std::string_view cofinality_reason(const TukeyClass& c) {
  switch (cofinality(c)) {
    case Card::One: return "cof K(S) = 1 for compact S";
    case Card::Omega: return "cof K(S) = w for locally compact, non-compact bounded S";
    case Card::Omega1: return "cof K(S) = w1 when S is unbounded and cl(S)\\S is closed";
    default: return "cof K(S) = d when cl(S)\\S is not closed";
  }
}

std::string_view additivity_reason(const TukeyClass& c) {
  switch (additivity(c)) {
    case Card::Undefined: return "additivity is undefined for compact S";
    case Card::Omega1: return "add K(S) = w1 for closed unbounded S";
    default: return "add K(S) = w for S not closed";
  }
}

std::string_view spectrum_reason(const TukeyClass& c) {
  switch (c.tag()) {
    case ClassTag::One: return "a poset with a largest element has empty spectrum";
    case ClassTag::Omega: return "spec w = {w}";
    case ClassTag::OmegaOmega: return "spec w^w is SPEC_NN, which contains w and b and lies in [w, d]";
    case ClassTag::Omega1: return "spec w1 = {w1}";
    case ClassTag::OmegaTimesOmega1:
    case ClassTag::FinPowOmega1: return "cl(S)\\S closed and unbounded S: the spectrum is {w, w1}";
    default: return "cl(S)\\S not closed and S unbounded: spec K(S) = {w1} u SPEC_NN";
  }
}

Card cofinality(const TukeyClass& c) {
  switch (c.tag()) {
    case ClassTag::One: return Card::One;
    case ClassTag::Omega: return Card::Omega;
    case ClassTag::Omega1:
    case ClassTag::OmegaTimesOmega1:
    case ClassTag::FinPowOmega1: return Card::Omega1;
    default: return Card::D;
  }
}

Card additivity(const TukeyClass& c) {
  if (c.tag() == ClassTag::One) return Card::Undefined;
  if (c.tag() == ClassTag::Omega1) return Card::Omega1;
  return Card::Omega;
}

Spectrum spectrum(const TukeyClass& c) {
  switch (c.tag()) {
    case ClassTag::One: return {};
    case ClassTag::Omega: return {true, false, false};
    case ClassTag::OmegaOmega: return {false, false, true};
    case ClassTag::Omega1: return {false, true, false};
    case ClassTag::OmegaTimesOmega1:
    case ClassTag::FinPowOmega1: return {true, true, false};
    default: return {false, true, true};
  }
}

std::string_view calibre_name(CalibreKind k) {
  switch (k) {
    case CalibreKind::Omega1: return "w1";
    case CalibreKind::Omega1Omega1Omega: return "(w1,w1,w)";
    case CalibreKind::Omega1Omega: return "(w1,w)";
  }
  return "";
}

Tri calibre(const TukeyClass& c, CalibreKind which, const HypContext& ctx) {
  const ClassTag t = c.tag();
  switch (which) {
    case CalibreKind::Omega1:
      if (t == ClassTag::One || t == ClassTag::Omega) return Tri::True;
      if (t == ClassTag::OmegaOmega) return when_b_above_w1(ctx);
      return Tri::False;
    case CalibreKind::Omega1Omega:
      return tri_of(t != ClassTag::FinPowOmega1 && t != ClassTag::FinPowTimesOmegaOmega);
    case CalibreKind::Omega1Omega1Omega:
      switch (t) {
        case ClassTag::One:
        case ClassTag::Omega:
        case ClassTag::Omega1:
        case ClassTag::OmegaTimesOmega1: return Tri::True;
        case ClassTag::OmegaOmega:
        case ClassTag::Omega1TimesOmegaOmega: return when_b_above_w1(ctx);
        default: return Tri::False;
      }
  }
  return Tri::Unknown;
}

std::string_view calibre_condition(const TukeyClass& c, CalibreKind which) {
  const ClassTag t = c.tag();
  if (which == CalibreKind::Omega1 && t == ClassTag::OmegaOmega) return "holds iff w1 < b";
  if (which == CalibreKind::Omega1Omega1Omega &&
      (t == ClassTag::OmegaOmega || t == ClassTag::Omega1TimesOmegaOmega))
    return "holds iff w1 < b";
  return "";
}

bool metric_dominated(const Space& space) {
  if (std::holds_alternative<NormalSetForm>(space)) return true;
  const auto& d = std::get<UnboundedDescriptor>(space);
  require_valid(d);
  return cldiff_bounded(d.cl_diff);
}

bool metric_covers(const Space& space) {
  if (std::holds_alternative<NormalSetForm>(space)) return true;
  return contains_club(std::get<UnboundedDescriptor>(space));
}

std::string_view poset_size_name(PosetSize s) {
  switch (s) {
    case PosetSize::Finite: return "finite";
    case PosetSize::Omega: return "w";
    case PosetSize::Omega1: return "w1";
    case PosetSize::Continuum: return "c";
  }
  return "";
}

PosetSize poset_size(const Space& space) {
  if (const auto* s = std::get_if<NormalSetForm>(&space)) {
    if (!is_discrete(*s)) return PosetSize::Continuum;
    return s->finite() ? PosetSize::Finite : PosetSize::Omega;
  }
  const auto& d = std::get<UnboundedDescriptor>(space);
  require_valid(d);
  return d.is_discrete ? PosetSize::Omega1 : PosetSize::Continuum;
}

}  // namespace tukey
