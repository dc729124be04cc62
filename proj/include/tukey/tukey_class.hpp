#pragma once

// Labels for the Tukey classes of K(S), S a subset of w1.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tukey {

enum class ClassTag {
  One,                    // 1: S compact
  Omega,                  // w: S bounded, locally compact, not compact
  OmegaOmega,             // w^w: S bounded, not locally compact
  Omega1,                 // w1: S closed unbounded
  OmegaTimesOmega1,       // w x w1: defect bounded, closed, nonempty
  Omega1TimesOmegaOmega,  // w1 x w^w: defect bounded, not closed
  FinPowOmega1,           // [w1]^<w: S nonstationary, defect closed unbounded
  Sigma,                  // Sigma(w^w1): S contains a club, defect unbounded
  FinPowTimesOmegaOmega,  // [w1]^<w x w^w: S nonstationary, defect not closed
  Stat,                   // S stationary and co-stationary, indexed by its atoms
};

inline constexpr std::array<ClassTag, 9> kNamedTags = {
    ClassTag::One,          ClassTag::Omega,
    ClassTag::OmegaOmega,   ClassTag::Omega1,
    ClassTag::OmegaTimesOmega1, ClassTag::Omega1TimesOmegaOmega,
    ClassTag::FinPowOmega1, ClassTag::Sigma,
    ClassTag::FinPowTimesOmegaOmega,
};

/// Bit i set means atom A(i+1) belongs to the set.
using AtomSet = std::uint32_t;

inline constexpr unsigned kMaxAtoms = 16;

inline AtomSet full_atoms(unsigned n) { return n >= 32 ? ~AtomSet{0} : (AtomSet{1} << n) - 1; }

/// "{A1,A3}"
std::string format_atoms(AtomSet atoms);

class TukeyClass {
 public:
  /// Named (non-Stat) class.
  constexpr TukeyClass(ClassTag tag = ClassTag::One) : tag_(tag) {}  // NOLINT(implicit)
  /// Stat class for a nonempty proper subset of an n-atom partition; throws ContractError otherwise.
  static TukeyClass stat(AtomSet atoms, unsigned universe_size);

  ClassTag tag() const noexcept { return tag_; }
  bool is_stat() const noexcept { return tag_ == ClassTag::Stat; }
  AtomSet atoms() const noexcept { return atoms_; }
  unsigned universe_size() const noexcept { return universe_; }

  /// "OmegaOmega", "Stat{A1,A2}"
  std::string name() const;
  /// Conventional poset notation such as "w1 x w^w".
  std::string notation() const;

  friend bool operator==(const TukeyClass&, const TukeyClass&) = default;

 private:
  ClassTag tag_;
  AtomSet atoms_ = 0;
  unsigned universe_ = 0;
};

std::string_view tag_name(ClassTag tag);
std::optional<ClassTag> tag_from_name(std::string_view name);

/// Accepts tag names and "Stat{A1,...}" (atom universe defaults to 3, or "Stat{A1}/n").
std::optional<TukeyClass> parse_class_name(std::string_view text);

}  // namespace tukey
