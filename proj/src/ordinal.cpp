#include "tukey/ordinal.hpp"

#include <algorithm>
#include <limits>

#include "tukey/errors.hpp"
#include "tukey/ordinal_parse.hpp"
#include "tukey/text_cursor.hpp"

namespace tukey {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw OverflowError("ordinal coefficient overflow");
  return a + b;
}

void check_exponent(unsigned e, unsigned bound) {
  if (e >= bound)
    throw OverflowError("exponent " + std::to_string(e) + " reaches the bound w^" +
                        std::to_string(bound));
}

}  // namespace

Ordinal::Ordinal(std::vector<CnfTerm> terms, unsigned exponent_bound) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient == 0) throw ContractError("CNF coefficient must be positive");
    check_exponent(terms_[i].exponent, exponent_bound);
    if (i > 0 && terms_[i].exponent >= terms_[i - 1].exponent)
      throw ContractError("CNF exponents must be strictly decreasing");
  }
}

Ordinal Ordinal::natural(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back({0, n});
  return o;
}

Ordinal Ordinal::omega_power(unsigned k, std::uint64_t c, unsigned exponent_bound) {
  check_exponent(k, exponent_bound);
  Ordinal o;
  if (c > 0) o.terms_.push_back({k, c});
  return o;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].exponent != y[i].exponent) return x[i].exponent <=> y[i].exponent;
    if (x[i].coefficient != y[i].coefficient) return x[i].coefficient <=> y[i].coefficient;
  }
  return x.size() <=> y.size();
}

Comparison compare(const Ordinal& a, const Ordinal& b) {
  const auto c = a <=> b;
  if (c < 0) return Comparison::LT;
  if (c > 0) return Comparison::GT;
  return Comparison::EQ;
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
    if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const unsigned lead = b.terms().front().exponent;
  std::vector<CnfTerm> out;
  for (const auto& t : a.terms()) {
    if (t.exponent > lead) out.push_back(t);
    else if (t.exponent == lead) out.push_back({lead, t.coefficient});
  }
  auto rest = b.terms().begin();
  if (!out.empty() && out.back().exponent == lead) {
    out.back().coefficient = checked_add(out.back().coefficient, rest->coefficient);
    ++rest;
  }
  out.insert(out.end(), rest, b.terms().end());
  // Exponents are inherited from the operands, so the bound cannot be exceeded here.
  return Ordinal(std::move(out), std::numeric_limits<unsigned>::max());
}

unsigned degree(const Ordinal& b) {
  return b.is_zero() ? 0 : b.terms().back().exponent;
}

Ordinal fundamental_seq(const Ordinal& l, std::uint64_t n) {
  if (!l.is_limit()) throw ContractError("fundamental_seq requires a limit ordinal, got " + l.to_string());
  std::vector<CnfTerm> terms = l.terms();
  const unsigned k = terms.back().exponent;
  if (--terms.back().coefficient == 0) terms.pop_back();
  if (n > 0) terms.push_back({k - 1, n});
  return Ordinal(std::move(terms), std::numeric_limits<unsigned>::max());
}

Ordinal ceil_multiple(const Ordinal& a, unsigned k, unsigned exponent_bound) {
  check_exponent(k, exponent_bound);
  if (a.is_zero()) return Ordinal::omega_power(k, 1, exponent_bound);
  if (degree(a) >= k) return a;
  std::vector<CnfTerm> kept;
  for (const auto& t : a.terms())
    if (t.exponent >= k) kept.push_back(t);
  return add(Ordinal(std::move(kept), exponent_bound), Ordinal::omega_power(k, 1, exponent_bound));
}

Ordinal successor(const Ordinal& a) { return add(a, Ordinal::natural(1)); }

Ordinal parse_ordinal_at(detail::TextCursor& cur, unsigned exponent_bound) {
  std::vector<CnfTerm> terms;
  bool saw_zero = false;
  do {
    const std::size_t term_pos = (cur.skip_ws(), cur.position());
    CnfTerm term;
    if (cur.accept("w")) {
      term.exponent = 1;
      if (cur.accept("^")) {
        const std::uint64_t e = cur.natural();
        if (e >= exponent_bound)
          throw OverflowError("exponent " + std::to_string(e) + " at position " +
                              std::to_string(term_pos) + " reaches the bound w^" +
                              std::to_string(exponent_bound));
        term.exponent = static_cast<unsigned>(e);
      }
      if (cur.accept("*")) term.coefficient = cur.natural();
      if (term.coefficient == 0) {
        cur.reset(term_pos);
        cur.fail("coefficient must be positive");
      }
    } else if (cur.peek_digit()) {
      term.coefficient = cur.natural();
      if (term.coefficient == 0) {
        saw_zero = true;
        if (!terms.empty()) {
          cur.reset(term_pos);
          cur.fail("zero term inside a sum");
        }
        continue;
      }
    } else {
      cur.fail("expected an ordinal term ('w' or a natural number)");
    }
    if (saw_zero) {
      cur.reset(term_pos);
      cur.fail("zero term inside a sum");
    }
    if (!terms.empty() && term.exponent >= terms.back().exponent) {
      cur.reset(term_pos);
      cur.fail("exponents must strictly decrease (not Cantor normal form)");
    }
    terms.push_back(term);
  } while (cur.accept("+"));
  return Ordinal(std::move(terms), exponent_bound);
}

Ordinal parse_ordinal(std::string_view text, unsigned exponent_bound) {
  detail::TextCursor cur(text);
  Ordinal o = parse_ordinal_at(cur, exponent_bound);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return o;
}

}  // namespace tukey
