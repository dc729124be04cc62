#include "tukey/tukey_class.hpp"

#include "tukey/errors.hpp"
#include "tukey/text_cursor.hpp"

namespace tukey {

namespace {

struct TagInfo {
  ClassTag tag;
  std::string_view name;
  std::string_view notation;
};

constexpr std::array<TagInfo, 10> kTagInfo = {{
    {ClassTag::One, "One", "1"},
    {ClassTag::Omega, "Omega", "w"},
    {ClassTag::OmegaOmega, "OmegaOmega", "w^w"},
    {ClassTag::Omega1, "Omega1", "w1"},
    {ClassTag::OmegaTimesOmega1, "OmegaTimesOmega1", "w x w1"},
    {ClassTag::Omega1TimesOmegaOmega, "Omega1TimesOmegaOmega", "w1 x w^w"},
    {ClassTag::FinPowOmega1, "FinPowOmega1", "[w1]^<w"},
    {ClassTag::Sigma, "Sigma", "Sigma(w^w1)"},
    {ClassTag::FinPowTimesOmegaOmega, "FinPowTimesOmegaOmega", "[w1]^<w x w^w"},
    {ClassTag::Stat, "Stat", "K(S), S stationary co-stationary"},
}};

const TagInfo& info(ClassTag tag) { return kTagInfo[static_cast<std::size_t>(tag)]; }

}  // namespace

std::string format_atoms(AtomSet atoms) {
  std::string out = "{";
  for (unsigned i = 0; i < 32; ++i) {
    if (!(atoms >> i & 1U)) continue;
    if (out.size() > 1) out += ",";
    out += "A" + std::to_string(i + 1);
  }
  return out + "}";
}

TukeyClass TukeyClass::stat(AtomSet atoms, unsigned universe_size) {
  if (universe_size < 2 || universe_size > kMaxAtoms)
    throw ContractError("atom universe size must be in [2, " + std::to_string(kMaxAtoms) + "]");
  if (atoms == 0 || (atoms & ~full_atoms(universe_size)) != 0 || atoms == full_atoms(universe_size))
    throw ContractError("Stat atoms must be a nonempty proper subset of the atom universe");
  TukeyClass c(ClassTag::Stat);
  c.atoms_ = atoms;
  c.universe_ = universe_size;
  return c;
}

std::string_view tag_name(ClassTag tag) { return info(tag).name; }

std::optional<ClassTag> tag_from_name(std::string_view name) {
  for (const auto& i : kTagInfo)
    if (i.name == name) return i.tag;
  return std::nullopt;
}

std::string TukeyClass::name() const {
  if (!is_stat()) return std::string(tag_name(tag_));
  return "Stat" + format_atoms(atoms_);
}

std::string TukeyClass::notation() const {
  if (!is_stat()) return std::string(info(tag_).notation);
  return "K(S), S =NS " + format_atoms(atoms_);
}

std::optional<TukeyClass> parse_class_name(std::string_view text) {
  detail::TextCursor cur(text);
  const std::string w = cur.word();
  const auto tag = tag_from_name(w);
  if (!tag) return std::nullopt;
  if (*tag != ClassTag::Stat) {
    if (!cur.at_end()) return std::nullopt;
    return TukeyClass(*tag);
  }
  try {
    AtomSet atoms = 0;
    cur.expect("{");
    do {
      cur.expect("A");
      const auto idx = cur.natural();
      if (idx == 0 || idx > kMaxAtoms) return std::nullopt;
      atoms |= AtomSet{1} << (idx - 1);
    } while (cur.accept(","));
    cur.expect("}");
    unsigned n = 3;
    if (cur.accept("/")) n = static_cast<unsigned>(cur.natural());
    if (!cur.at_end()) return std::nullopt;
    return TukeyClass::stat(atoms, n);
  } catch (const ParseError&) {
    return std::nullopt;
  } catch (const ContractError&) {
    return std::nullopt;
  }
}

}  // namespace tukey
