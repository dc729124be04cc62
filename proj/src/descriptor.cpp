#include "tukey/descriptor.hpp"

#include <array>
#include <cctype>

#include "tukey/errors.hpp"
#include "tukey/text_cursor.hpp"

namespace tukey {

namespace {

constexpr std::array<std::string_view, 5> kClDiffNames = {
    "empty", "bounded-closed", "bounded-notclosed", "unbounded-closed", "unbounded-notclosed"};

std::string join_messages(const std::vector<RuleViolation>& v) {
  std::string out = "inconsistent descriptor:";
  for (const auto& r : v) out += " [rule " + std::to_string(r.rule) + "] " + r.message + ";";
  return out;
}

void require_same_universe(const UnboundedDescriptor& a, const UnboundedDescriptor& b) {
  if (!(a.universe == b.universe))
    throw ContractError("descriptors use different atom universes (" +
                        std::to_string(a.universe.size) + " vs " + std::to_string(b.universe.size) + ")");
}

}  // namespace

std::string_view cldiff_name(ClDiff c) { return kClDiffNames[static_cast<std::size_t>(c)]; }

std::optional<ClDiff> cldiff_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kClDiffNames.size(); ++i)
    if (kClDiffNames[i] == name) return static_cast<ClDiff>(i);
  return std::nullopt;
}

std::string UnboundedDescriptor::to_string() const {
  std::string atoms;
  if (stat_atoms == 0) atoms = "none";
  else if (stat_atoms == universe.full()) atoms = "all";
  else atoms = format_atoms(stat_atoms);
  std::string out = "unbounded(atoms=" + atoms + "; cldiff=" + std::string(cldiff_name(cl_diff));
  if (is_discrete) out += "; discrete";
  if (universe.size != AtomUniverse{}.size) out += "; universe=" + std::to_string(universe.size);
  return out + ")";
}

std::vector<RuleViolation> validate(const UnboundedDescriptor& d) {
  std::vector<RuleViolation> out;
  if (d.universe.size < 2 || d.universe.size > kMaxAtoms) {
    out.push_back({0, "atom universe size must be in [2, " + std::to_string(kMaxAtoms) + "]", ""});
    return out;
  }
  if ((d.stat_atoms & ~d.universe.full()) != 0)
    out.push_back({0, "atom outside the universe A1..A" + std::to_string(d.universe.size), ""});
  const AtomSet full = d.universe.full();
  const AtomSet atoms = d.stat_atoms & full;
  if (cldiff_bounded(d.cl_diff) && atoms != full)
    out.push_back({1, "a bounded defect cl(S)\\S forces S to contain a club, so atoms must be all",
                   "a bounded defect means S agrees with a club above some countable ordinal"});
  if (d.cl_diff == ClDiff::UnboundedClosed && atoms != 0)
    out.push_back({2, "a closed unbounded defect is a club disjoint from S, so atoms must be none",
                   "a club inside cl(S)\\S is disjoint from S, so S is nonstationary"});
  if (atoms != 0 && atoms != full && d.cl_diff != ClDiff::UnboundedNotClosed)
    out.push_back({3, "a stationary co-stationary S has an unbounded defect that is not closed",
                   "S contains no club tail, and a club in the defect would make S nonstationary"});
  if (d.is_discrete && (atoms != 0 || d.cl_diff != ClDiff::UnboundedClosed))
    out.push_back({4, "a discrete unbounded S is nonstationary and locally compact",
                   "the limit points of an unbounded discrete S form a club missing S"});
  return out;
}

InvalidDescriptor::InvalidDescriptor(std::vector<RuleViolation> v)
    : std::invalid_argument(join_messages(v)), violations_(std::move(v)) {}

void require_valid(const UnboundedDescriptor& d) {
  auto v = validate(d);
  if (!v.empty()) throw InvalidDescriptor(std::move(v));
}

bool is_stationary(const UnboundedDescriptor& d) {
  require_valid(d);
  return d.stat_atoms != 0;
}

bool is_costationary(const UnboundedDescriptor& d) {
  require_valid(d);
  return d.stat_atoms != d.universe.full();
}

bool contains_club(const UnboundedDescriptor& d) {
  require_valid(d);
  return d.stat_atoms == d.universe.full();
}

Stationarity diff_stationary(const UnboundedDescriptor& s, const UnboundedDescriptor& t) {
  require_valid(s);
  require_valid(t);
  require_same_universe(s, t);
  return (s.stat_atoms & ~t.stat_atoms) != 0 ? Stationarity::Stationary : Stationarity::NonStationary;
}

bool symdiff_nonstationary(const UnboundedDescriptor& s, const UnboundedDescriptor& t) {
  require_valid(s);
  require_valid(t);
  require_same_universe(s, t);
  return s.stat_atoms == t.stat_atoms;
}

bool is_builtin_descriptor_name(std::string_view name) {
  return name == "S0" || name == "S2" || name == "CLUB" || name == "CLUB_MINUS_POINT";
}

UnboundedDescriptor builtin_descriptor(std::string_view name, AtomUniverse universe) {
  // S0: isolated points of w1. S2: S0 plus limits of limits. CLUB: w1. CLUB_MINUS_POINT: w1 \ {w}.
  if (name == "S0") return {universe, 0, ClDiff::UnboundedClosed, true};
  if (name == "S2") return {universe, universe.full(), ClDiff::UnboundedNotClosed, false};
  if (name == "CLUB") return {universe, universe.full(), ClDiff::Empty, false};
  if (name == "CLUB_MINUS_POINT") return {universe, universe.full(), ClDiff::BoundedClosed, false};
  throw ContractError("unknown builtin descriptor '" + std::string(name) + "'");
}

UnboundedDescriptor parse_descriptor(std::string_view text) {
  detail::TextCursor cur(text);
  cur.expect("unbounded");
  cur.expect("(");
  std::optional<AtomSet> atoms;
  std::optional<ClDiff> cldiff;
  bool discrete = false;
  unsigned universe = AtomUniverse{}.size;
  std::size_t atoms_pos = 0;
  do {
    const std::size_t at = (cur.skip_ws(), cur.position());
    const std::string key = cur.word();
    if (key == "atoms") {
      cur.expect("=");
      atoms_pos = at;
      if (cur.accept("all")) atoms = ~AtomSet{0};  // resolved once the universe is known
      else if (cur.accept("none")) atoms = 0;
      else {
        AtomSet a = 0;
        cur.expect("{");
        if (!cur.accept("}")) {
          do {
            cur.expect("A");
            const std::size_t idx_pos = cur.position();
            const auto idx = cur.natural();
            if (idx == 0 || idx > kMaxAtoms) {
              cur.reset(idx_pos);
              cur.fail("atom index out of range");
            }
            a |= AtomSet{1} << (idx - 1);
          } while (cur.accept(","));
          cur.expect("}");
        }
        atoms = a;
      }
    } else if (key == "cldiff") {
      cur.expect("=");
      cur.skip_ws();
      const std::size_t name_pos = cur.position();
      std::string name;
      while (!cur.at_end() && (std::isalpha(static_cast<unsigned char>(cur.peek())) || cur.peek() == '-')) {
        name += cur.peek();
        cur.reset(cur.position() + 1);
      }
      cldiff = cldiff_from_name(name);
      if (!cldiff) {
        cur.reset(name_pos);
        cur.fail("unknown cldiff kind '" + name + "'");
      }
    } else if (key == "discrete") {
      cur.accept("?");
      discrete = true;
    } else if (key == "universe") {
      cur.expect("=");
      const std::size_t n_pos = cur.position();
      const auto n = cur.natural();
      if (n < 2 || n > kMaxAtoms) {
        cur.reset(n_pos);
        cur.fail("atom universe size must be in [2, " + std::to_string(kMaxAtoms) + "]");
      }
      universe = static_cast<unsigned>(n);
    } else {
      cur.reset(at);
      cur.fail("expected atoms=, cldiff=, discrete or universe=");
    }
  } while (cur.accept(";"));
  cur.expect(")");
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  if (!atoms) throw ParseError("missing atoms= clause", text.size());
  if (!cldiff) throw ParseError("missing cldiff= clause", text.size());

  UnboundedDescriptor d;
  d.universe.size = universe;
  d.stat_atoms = *atoms == ~AtomSet{0} ? d.universe.full() : *atoms;
  if ((d.stat_atoms & ~d.universe.full()) != 0)
    throw ParseError("atom outside the universe A1..A" + std::to_string(universe), atoms_pos);
  d.cl_diff = *cldiff;
  d.is_discrete = discrete;
  return d;
}

}  // namespace tukey
