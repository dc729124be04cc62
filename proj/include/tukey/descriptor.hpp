#pragma once

// Attribute model of an unbounded S subset of w1: which atoms of a fixed finite
// partition of the limits into stationary sets S meets (mod the nonstationary ideal),
// the shape of cl(S) \ S, and discreteness.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tukey/tukey_class.hpp"

namespace tukey {

/// Shape of the defect cl(S) \ S.
enum class ClDiff { Empty, BoundedClosed, BoundedNotClosed, UnboundedClosed, UnboundedNotClosed };

inline constexpr std::array<ClDiff, 5> kAllClDiff = {
    ClDiff::Empty, ClDiff::BoundedClosed, ClDiff::BoundedNotClosed, ClDiff::UnboundedClosed,
    ClDiff::UnboundedNotClosed};

std::string_view cldiff_name(ClDiff c);  // "bounded-closed", ...
std::optional<ClDiff> cldiff_from_name(std::string_view name);

inline bool cldiff_bounded(ClDiff c) {
  return c == ClDiff::Empty || c == ClDiff::BoundedClosed || c == ClDiff::BoundedNotClosed;
}
inline bool cldiff_closed(ClDiff c) {
  return c != ClDiff::BoundedNotClosed && c != ClDiff::UnboundedNotClosed;
}

struct AtomUniverse {
  unsigned size = 3;

  AtomSet full() const { return full_atoms(size); }
  friend bool operator==(const AtomUniverse&, const AtomUniverse&) = default;
};

struct UnboundedDescriptor {
  AtomUniverse universe;
  AtomSet stat_atoms = 0;
  ClDiff cl_diff = ClDiff::Empty;
  bool is_discrete = false;

  /// Canonical text form, re-parseable by parse_descriptor.
  std::string to_string() const;

  friend bool operator==(const UnboundedDescriptor&, const UnboundedDescriptor&) = default;
};

/// One failed consistency rule.
struct RuleViolation {
  int rule;  // 1..4, plus 0 for a malformed atom set
  std::string message;
  std::string citation;
};

/// Empty when the descriptor is consistent.
std::vector<RuleViolation> validate(const UnboundedDescriptor& d);

/// Thrown by queries that need a valid descriptor.
class InvalidDescriptor : public std::invalid_argument {
 public:
  explicit InvalidDescriptor(std::vector<RuleViolation> v);
  const std::vector<RuleViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<RuleViolation> violations_;
};

void require_valid(const UnboundedDescriptor& d);

bool is_stationary(const UnboundedDescriptor& d);
bool is_costationary(const UnboundedDescriptor& d);
bool contains_club(const UnboundedDescriptor& d);

enum class Stationarity { Stationary, NonStationary };

/// Stationarity of S \ T.
Stationarity diff_stationary(const UnboundedDescriptor& s, const UnboundedDescriptor& t);
/// S delta T is nonstationary.
bool symdiff_nonstationary(const UnboundedDescriptor& s, const UnboundedDescriptor& t);

/// S0, S2, CLUB, CLUB_MINUS_POINT; throws ContractError for other names.
UnboundedDescriptor builtin_descriptor(std::string_view name, AtomUniverse universe = {});
bool is_builtin_descriptor_name(std::string_view name);

/// `unbounded(atoms = {A1,A3} | all | none ; cldiff = <kind> [; discrete] [; universe = N])`.
/// Parses only; consistency is checked by validate().
UnboundedDescriptor parse_descriptor(std::string_view text);

}  // namespace tukey
