#include "doctest.h"

#include <set>

#include "tukey/classifier.hpp"
#include "tukey/descriptor.hpp"
#include "tukey/errors.hpp"

using namespace tukey;

namespace {

UnboundedDescriptor desc(AtomSet atoms, ClDiff c, bool discrete = false, unsigned n = 3) {
  return {AtomUniverse{n}, atoms, c, discrete};
}

std::set<int> rules_of(const UnboundedDescriptor& d) {
  std::set<int> out;
  for (const auto& v : validate(d)) out.insert(v.rule);
  return out;
}

// Consistency rules written out case by case.
std::set<int> expected_rules(AtomSet atoms, ClDiff c, bool discrete, AtomSet full) {
  std::set<int> out;
  const bool bounded_defect =
      c == ClDiff::Empty || c == ClDiff::BoundedClosed || c == ClDiff::BoundedNotClosed;
  if (bounded_defect && atoms != full) out.insert(1);
  if (c == ClDiff::UnboundedClosed && atoms != 0) out.insert(2);
  if (atoms != 0 && atoms != full && c != ClDiff::UnboundedNotClosed) out.insert(3);
  if (discrete && !(atoms == 0 && c == ClDiff::UnboundedClosed)) out.insert(4);
  return out;
}

}  // namespace

TEST_SUITE("descriptor") {

TEST_CASE("validate examples") {
  CHECK(validate(desc(0, ClDiff::UnboundedClosed)).empty());
  CHECK(rules_of(desc(0b001, ClDiff::BoundedClosed)).count(1) == 1);
  CHECK(validate(desc(0b111, ClDiff::UnboundedNotClosed)).empty());
  for (const auto& v : validate(desc(0b001, ClDiff::BoundedClosed))) {
    CHECK_FALSE(v.message.empty());
    CHECK_FALSE(v.citation.empty());
  }
}

TEST_CASE("validate matches the rule table exhaustively") {
  for (unsigned n = 2; n <= 4; ++n) {
    const AtomSet full = full_atoms(n);
    for (AtomSet atoms = 0; atoms <= full; ++atoms)
      for (ClDiff c : kAllClDiff)
        for (bool discrete : {false, true}) {
          const auto d = desc(atoms, c, discrete, n);
          REQUIRE(rules_of(d) == expected_rules(atoms, c, discrete, full));
          if (validate(d).empty()) {
            CHECK_NOTHROW(require_valid(d));
          } else {
            CHECK_THROWS_AS(require_valid(d), InvalidDescriptor);
          }
        }
  }
}

TEST_CASE("malformed atom sets are reported") {
  CHECK(rules_of(desc(0b1000, ClDiff::UnboundedNotClosed)).count(0) == 1);
  CHECK(rules_of(desc(0, ClDiff::UnboundedClosed, false, 1)).count(0) == 1);
}

TEST_CASE("stationarity predicates") {
  const auto s0 = builtin_descriptor("S0");
  const auto s2 = builtin_descriptor("S2");
  const auto a1 = desc(0b001, ClDiff::UnboundedNotClosed);
  const auto a12 = desc(0b011, ClDiff::UnboundedNotClosed);
  CHECK_FALSE(is_stationary(s0));
  CHECK(contains_club(s2));
  CHECK(is_stationary(a1));
  CHECK(is_costationary(a1));
  CHECK_FALSE(contains_club(a1));
  CHECK(diff_stationary(a12, a1) == Stationarity::Stationary);
  CHECK(diff_stationary(a1, a1) == Stationarity::NonStationary);
  CHECK(symdiff_nonstationary(a1, a1));
  CHECK(diff_stationary(s2, a1) == Stationarity::Stationary);
  CHECK(diff_stationary(a1, a12) == Stationarity::NonStationary);
  CHECK_FALSE(symdiff_nonstationary(a1, a12));
  CHECK_THROWS_AS(is_stationary(desc(0b001, ClDiff::Empty)), InvalidDescriptor);
  CHECK_THROWS_AS(diff_stationary(a1, desc(0b01, ClDiff::UnboundedNotClosed, false, 2)),
                  ContractError);
}

TEST_CASE("stationarity predicates are consistent on every valid descriptor") {
  std::vector<UnboundedDescriptor> valid;
  for (AtomSet atoms = 0; atoms < 8; ++atoms)
    for (ClDiff c : kAllClDiff)
      for (bool discrete : {false, true})
        if (validate(desc(atoms, c, discrete)).empty()) valid.push_back(desc(atoms, c, discrete));
  // 6 Stat shapes, 3 nonstationary shapes (one discrete), 4 shapes containing a club
  CHECK(valid.size() == 13);
  for (const auto& s : valid) {
    CHECK(diff_stationary(s, s) == Stationarity::NonStationary);
    CHECK(contains_club(s) == !is_costationary(s));
    if (contains_club(s)) CHECK(is_stationary(s));
    for (const auto& t : valid) {
      const bool sym = symdiff_nonstationary(s, t);
      CHECK(sym == (diff_stationary(s, t) == Stationarity::NonStationary &&
                    diff_stationary(t, s) == Stationarity::NonStationary));
    }
  }
}

TEST_CASE("builtins") {
  CHECK(builtin_descriptor("S0") == desc(0, ClDiff::UnboundedClosed, true));
  CHECK(builtin_descriptor("CLUB") == desc(0b111, ClDiff::Empty));
  CHECK(builtin_descriptor("CLUB_MINUS_POINT") == desc(0b111, ClDiff::BoundedClosed));
  CHECK(builtin_descriptor("S2") == desc(0b111, ClDiff::UnboundedNotClosed));
  for (const char* name : {"S0", "S2", "CLUB", "CLUB_MINUS_POINT"}) {
    CHECK(is_builtin_descriptor_name(name));
    CHECK(validate(builtin_descriptor(name)).empty());
  }
  CHECK_FALSE(is_builtin_descriptor_name("S1"));
  CHECK_THROWS_AS(builtin_descriptor("S7"), ContractError);
}

TEST_CASE("text form round-trips") {
  CHECK(parse_descriptor("unbounded(atoms=all; cldiff=empty)") == builtin_descriptor("CLUB"));
  CHECK(parse_descriptor("unbounded( atoms = {A1} ; cldiff = bounded-closed )") ==
        desc(0b001, ClDiff::BoundedClosed));
  CHECK(parse_descriptor("unbounded(cldiff=unbounded-closed; atoms=none; discrete)") ==
        builtin_descriptor("S0"));
  CHECK(parse_descriptor("unbounded(atoms={A1,A4}; cldiff=unbounded-notclosed; universe=5)") ==
        desc(0b1001, ClDiff::UnboundedNotClosed, false, 5));
  for (unsigned n = 2; n <= 4; ++n)
    for (AtomSet atoms = 0; atoms <= full_atoms(n); ++atoms)
      for (ClDiff c : kAllClDiff)
        for (bool discrete : {false, true}) {
          const auto d = desc(atoms, c, discrete, n);
          REQUIRE(parse_descriptor(d.to_string()) == d);
        }
  CHECK(builtin_descriptor("S2").to_string() == "unbounded(atoms=all; cldiff=unbounded-notclosed)");
}

TEST_CASE("malformed descriptor text") {
  CHECK_THROWS_AS(parse_descriptor("unbounded(atoms=all)"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("unbounded(cldiff=empty)"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("unbounded(atoms=all; cldiff=sideways)"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("bounded(atoms=all; cldiff=empty)"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("unbounded(atoms=all; cldiff=empty"), ParseError);
}

TEST_CASE("unbounded classification table") {
  CHECK(classify(builtin_descriptor("S0")) == TukeyClass(ClassTag::FinPowOmega1));
  CHECK(classify(builtin_descriptor("S2")) == TukeyClass(ClassTag::Sigma));
  CHECK(classify(builtin_descriptor("CLUB")) == TukeyClass(ClassTag::Omega1));
  CHECK(classify(builtin_descriptor("CLUB_MINUS_POINT")) == TukeyClass(ClassTag::OmegaTimesOmega1));
  CHECK(classify(desc(0b111, ClDiff::BoundedNotClosed)) ==
        TukeyClass(ClassTag::Omega1TimesOmegaOmega));
  CHECK(classify(desc(0, ClDiff::UnboundedNotClosed)) ==
        TukeyClass(ClassTag::FinPowTimesOmegaOmega));
  CHECK(classify(desc(0, ClDiff::UnboundedClosed)) == TukeyClass(ClassTag::FinPowOmega1));
  CHECK(classify(desc(0b101, ClDiff::UnboundedNotClosed)) == TukeyClass::stat(0b101, 3));
  CHECK_THROWS_AS(classify(desc(0b001, ClDiff::Empty)), InvalidDescriptor);
}

TEST_CASE("classification is total on valid descriptors") {
  for (unsigned n = 2; n <= 5; ++n)
    for (AtomSet atoms = 0; atoms <= full_atoms(n); ++atoms)
      for (ClDiff c : kAllClDiff)
        for (bool discrete : {false, true}) {
          const auto d = desc(atoms, c, discrete, n);
          if (!validate(d).empty()) continue;
          const TukeyClass k = classify(d);
          CHECK_FALSE(classification_reason(d).empty());
          const bool stat = atoms != 0 && atoms != full_atoms(n);
          CHECK(k.is_stat() == stat);
          if (stat) CHECK(k.atoms() == atoms);
        }
}

}  // TEST_SUITE
