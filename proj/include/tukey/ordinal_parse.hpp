#pragma once

#include "tukey/ordinal.hpp"
#include "tukey/text_cursor.hpp"

namespace tukey {

/// Parses one ordinal starting at the cursor; stops before the first token that cannot continue it.
Ordinal parse_ordinal_at(detail::TextCursor& cur, unsigned exponent_bound = kExponentBound);

}  // namespace tukey
