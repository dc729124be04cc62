#pragma once

// Tukey classification of K(S) and the cardinal invariants of each class.

#include <string>
#include <string_view>
#include <variant>

#include "tukey/cardinal.hpp"
#include "tukey/descriptor.hpp"
#include "tukey/ordinal_set.hpp"
#include "tukey/tukey_class.hpp"

namespace tukey {

/// A bounded subset of some [0, B] or an unbounded subset of w1.
using Space = std::variant<NormalSetForm, UnboundedDescriptor>;

/// Throws InvalidDescriptor for inconsistent descriptors.
TukeyClass classify(const Space& space);
TukeyClass classify_unbounded(const UnboundedDescriptor& d);

/// Why classify() returned its answer.
std::string classification_reason(const Space& space);

Card cofinality(const TukeyClass& c);
std::string_view cofinality_reason(const TukeyClass& c);
std::string_view additivity_reason(const TukeyClass& c);
std::string_view spectrum_reason(const TukeyClass& c);
Card additivity(const TukeyClass& c);
Spectrum spectrum(const TukeyClass& c);

enum class CalibreKind { Omega1, Omega1Omega1Omega, Omega1Omega };
inline constexpr std::array<CalibreKind, 3> kAllCalibres = {
    CalibreKind::Omega1, CalibreKind::Omega1Omega1Omega, CalibreKind::Omega1Omega};

/// "w1", "(w1,w1,w)", "(w1,w)"
std::string_view calibre_name(CalibreKind k);

/// True, False, or Unknown when the answer turns on whether w1 < b and the context is silent.
Tri calibre(const TukeyClass& c, CalibreKind which, const HypContext& ctx);
/// Condition text governing a calibre answer, empty when unconditional.
std::string_view calibre_condition(const TukeyClass& c, CalibreKind which);

/// Some separable metrizable M has K(M) >=_T K(S).
bool metric_dominated(const Space& space);
/// Some separable metrizable M has K(M) >=_T (S, K(S)).
bool metric_covers(const Space& space);

enum class PosetSize { Finite, Omega, Omega1, Continuum };
std::string_view poset_size_name(PosetSize s);  // "finite", "w", "w1", "c"
PosetSize poset_size(const Space& space);

}  // namespace tukey
