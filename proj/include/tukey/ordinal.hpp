#pragma once

// Countable ordinals below w^K in Cantor normal form with natural exponents.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tukey {

/// Default exponent bound K: every ordinal handled is < w^K.
inline constexpr unsigned kExponentBound = 8;

struct CnfTerm {
  unsigned exponent = 0;
  std::uint64_t coefficient = 1;

  friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

/// An ordinal w^e1*c1 + ... + w^en*cn with e1 > ... > en and every ci >= 1.
/// The empty term list is 0.
class Ordinal {
 public:
  Ordinal() = default;

  /// Builds from terms already in normal form; throws ContractError otherwise.
  explicit Ordinal(std::vector<CnfTerm> terms, unsigned exponent_bound = kExponentBound);

  static Ordinal natural(std::uint64_t n);
  /// w^k * c
  static Ordinal omega_power(unsigned k, std::uint64_t c = 1,
                             unsigned exponent_bound = kExponentBound);

  const std::vector<CnfTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_successor() const noexcept {
    return !terms_.empty() && terms_.back().exponent == 0;
  }
  bool is_limit() const noexcept { return !terms_.empty() && terms_.back().exponent > 0; }
  /// Largest exponent, 0 for the zero ordinal.
  unsigned leading_exponent() const noexcept {
    return terms_.empty() ? 0 : terms_.front().exponent;
  }

  std::string to_string() const;

  friend bool operator==(const Ordinal&, const Ordinal&) = default;
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<CnfTerm> terms_;
};

enum class Comparison { LT, EQ, GT };

Comparison compare(const Ordinal& a, const Ordinal& b);

/// Ordinal sum a + b (terms of a below the leading exponent of b are absorbed).
Ordinal add(const Ordinal& a, const Ordinal& b);

/// 0 for zero and successors, otherwise the least CNF exponent.
unsigned degree(const Ordinal& b);

/// n-th element of the canonical sequence converging to the limit l:
/// for l = d + w^k*c the result is d + w^k*(c-1) + w^(k-1)*n.
Ordinal fundamental_seq(const Ordinal& l, std::uint64_t n);

/// Least nonzero multiple of w^k that is >= a.
Ordinal ceil_multiple(const Ordinal& a, unsigned k, unsigned exponent_bound = kExponentBound);

Ordinal successor(const Ordinal& a);

Ordinal parse_ordinal(std::string_view text, unsigned exponent_bound = kExponentBound);

}  // namespace tukey
