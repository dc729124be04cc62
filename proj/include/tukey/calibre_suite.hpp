#pragma once

// Calibre checks: transfer of the class-level calibres along the proved Tukey order, and
// on small finite posets, failure of a calibre in a factor carrying over to the product.

#include <string>
#include <vector>

namespace tukey {

struct CalibreReport {
  std::size_t class_pairs_checked = 0;
  std::size_t product_cases_checked = 0;
  std::vector<std::string> violations;
  /// Cases where the product fails a calibre both factors have; exploratory, not a failure.
  std::size_t product_only_failures = 0;

  bool passed() const noexcept { return violations.empty(); }
  std::string to_json() const;
};

/// Class pairs over all contexts with three Stat atoms; products of posets up to max_n
/// elements with calibre triples k <= max_n + 1.
CalibreReport calibre_check(unsigned max_n = 3);

}  // namespace tukey
