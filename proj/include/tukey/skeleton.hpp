#pragma once

// Finitely described elements of K(S1) and of a finite block product of copies of it,
// indexed by eventually-linear functions, with seeded property checks of the maps
// between compact sets and functions.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tukey/ordinal.hpp"

namespace tukey {

/// A function m -> f(m) on m >= 1: finitely many exceptional values, otherwise a*m + b.
class FnTerm {
 public:
  FnTerm() = default;
  FnTerm(std::uint64_t a, std::uint64_t b, std::map<std::uint64_t, std::uint64_t> exceptions = {});

  static FnTerm constant(std::uint64_t c) { return FnTerm(0, c); }
  static FnTerm identity() { return FnTerm(1, 0); }

  /// Throws OverflowError if a*m + b leaves 64 bits; ContractError for m = 0.
  std::uint64_t operator()(std::uint64_t m) const;

  std::uint64_t slope() const noexcept { return a_; }
  std::uint64_t offset() const noexcept { return b_; }
  const std::map<std::uint64_t, std::uint64_t>& exceptions() const noexcept { return exceptions_; }
  /// Largest exceptional argument, 0 if none.
  std::uint64_t last_exception() const noexcept;
  /// True iff f(m) = 0 for all large m.
  bool eventually_zero() const noexcept { return a_ == 0 && b_ == 0; }

  FnTerm shifted(std::uint64_t c) const;  // m -> f(m) + c

  /// "3m+1 except {2:5}"
  std::string to_string() const;

 private:
  std::map<std::uint64_t, std::uint64_t> exceptions_;
  std::uint64_t a_ = 0, b_ = 0;
};

/// f(m) <= g(m) for every m >= 1 outside `skip`. Decided from the representations.
bool leq_except(const FnTerm& f, const FnTerm& g, const std::set<std::uint64_t>& skip = {});
inline bool dominated(const FnTerm& f, const FnTerm& g) { return leq_except(f, g); }
bool same_function(const FnTerm& f, const FnTerm& g);

/// Point w*(block-1) + j of S1 with block >= 1 and j >= 1.
struct BlockPoint {
  std::uint64_t block;
  std::uint64_t j;
  friend auto operator<=>(const BlockPoint&, const BlockPoint&) = default;
};

/// A compact subset of S1 = (w^2 + 1) minus the nonzero multiples of w below w^2:
/// finitely many points, possibly 0 and w^2, and optionally all of B(g) for a function g,
/// where B(g) = {0, w^2} together with w*(m-1) + j for 1 <= j <= g(m).
class S1Element {
 public:
  S1Element() = default;
  static S1Element finite(std::vector<BlockPoint> points, bool zero = false, bool top = false);
  /// B(g)
  static S1Element bounded_by(const FnTerm& g);

  S1Element with_points(const std::vector<BlockPoint>& extra) const;

  bool contains_zero() const noexcept { return zero_ || bound_.has_value(); }
  bool contains_top() const noexcept { return top_ || bound_.has_value(); }
  bool contains(const BlockPoint& p) const;
  /// Membership of an arbitrary ordinal; false outside S1.
  bool contains(const Ordinal& g) const;
  bool empty() const noexcept { return !contains_zero() && !contains_top() && points_.empty(); }

  const std::set<BlockPoint>& points() const noexcept { return points_; }
  const std::optional<FnTerm>& bound() const noexcept { return bound_; }

  bool subset_of(const S1Element& other) const;
  /// m -> largest j with w*(m-1) + j in the set (0 when block m is empty).
  FnTerm block_maxima() const;

  std::string to_string() const;

 private:
  std::set<BlockPoint> points_;
  std::optional<FnTerm> bound_;
  bool zero_ = false;
  bool top_ = false;
};

/// Seeded source of samples. Bounded draws use plain modular reduction so that streams
/// are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  /// Uniform-ish value in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool coin() { return below(2) == 1; }

  FnTerm fn_term(std::uint64_t max_block = 8);
  /// g + a random nonnegative perturbation, hence >= g everywhere.
  FnTerm above(const FnTerm& g, std::uint64_t max_block = 8);
  S1Element finite_compact(std::uint64_t max_block = 8);
  /// A superset of e obtained by adding points or a bound.
  S1Element superset(const S1Element& e, std::uint64_t max_block = 8);

 private:
  std::mt19937_64 rng_;
};

struct SkeletonReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t blocks = 1;
  std::vector<std::pair<std::string, std::size_t>> checks;  // property name -> instances checked
  std::vector<std::string> violations;

  bool passed() const noexcept { return violations.empty(); }
  std::string to_json() const;
};

/// Checks on sampled functions and compact sets: g <= h iff B(g) subset of B(h); g -> B(g)
/// injective; each B(g) and each sampled compact passes the limit-point probes; every
/// sampled compact K lies in B(max_K); K -> max_K and g -> B(g) are monotone and
/// max_{B(g)} = g.
SkeletonReport s1_skeleton_check(std::size_t samples, std::uint64_t seed);

/// Same checks for the product of `blocks` copies (1..8) where a block may be empty: the
/// function side has an inactive coordinate below every function, and the maps send
/// empty blocks to inactive coordinates and back.
SkeletonReport sigma_block_check(std::size_t blocks, std::size_t samples, std::uint64_t seed);

}  // namespace tukey
