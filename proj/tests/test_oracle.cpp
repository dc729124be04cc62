#include "doctest.h"

#include <map>
#include "json.hpp"

#include "tukey/classifier.hpp"
#include "tukey/errors.hpp"
#include "tukey/hasse.hpp"
#include "tukey/oracle.hpp"
#include "tukey/ordinal_set.hpp"

using namespace tukey;
using C = ClassTag;

namespace {

HypContext ctx(Tri b, Tri d) { return HypContext{b, d}; }
const HypContext kNone{};
const HypContext kBw1 = ctx(Tri::True, Tri::Unknown);
const HypContext kBbig = ctx(Tri::False, Tri::False);

std::vector<TukeyClass> stat_family(unsigned n) {
  std::vector<TukeyClass> out;
  for (AtomSet a = 1; a + 1 < (AtomSet{1} << n); ++a) out.push_back(TukeyClass::stat(a, n));
  return out;
}

std::vector<TukeyClass> all_classes(unsigned n) {
  std::vector<TukeyClass> out(kNamedTags.begin(), kNamedTags.end());
  for (const auto& s : stat_family(n)) out.push_back(s);
  return out;
}

// Golden invariants per class; "b" in a calibre column means "holds iff w1 < b".
struct Row {
  TukeyClass cls;
  Card cof;
  Card add;
  Spectrum spec;
  char cal_w1, cal_w1w1w, cal_w1w;
};

const Spectrum kEmpty{}, kW{true, false, false}, kNN{false, false, true}, kW1{false, true, false},
    kWW1{true, true, false}, kW1NN{false, true, true};

std::vector<Row> golden_invariants() {
  return {
      {C::One, Card::One, Card::Undefined, kEmpty, 'y', 'y', 'y'},
      {C::Omega, Card::Omega, Card::Omega, kW, 'y', 'y', 'y'},
      {C::OmegaOmega, Card::D, Card::Omega, kNN, 'b', 'b', 'y'},
      {C::Omega1, Card::Omega1, Card::Omega1, kW1, 'n', 'y', 'y'},
      {C::OmegaTimesOmega1, Card::Omega1, Card::Omega, kWW1, 'n', 'y', 'y'},
      {C::Omega1TimesOmegaOmega, Card::D, Card::Omega, kW1NN, 'n', 'b', 'y'},
      {C::FinPowOmega1, Card::Omega1, Card::Omega, kWW1, 'n', 'n', 'n'},
      {C::Sigma, Card::D, Card::Omega, kW1NN, 'n', 'n', 'y'},
      {C::FinPowTimesOmegaOmega, Card::D, Card::Omega, kW1NN, 'n', 'n', 'n'},
      {TukeyClass::stat(0b001, 3), Card::D, Card::Omega, kW1NN, 'n', 'n', 'y'},
  };
}

Tri expected_calibre(char code, const HypContext& c) {
  if (code == 'y') return Tri::True;
  if (code == 'n') return Tri::False;
  return tri_not(c.normalized().b_eq_w1);
}

bool refines(const HypContext& general, const HypContext& specific) {
  auto ok = [](Tri g, Tri s) { return g == Tri::Unknown || g == s; };
  return ok(general.b_eq_w1, specific.b_eq_w1) && ok(general.d_eq_w1, specific.d_eq_w1);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("contexts normalize to six cases") {
  const auto all = all_contexts();
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].normalized() == all[i]);
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(all[i] == all[j]);
  }
  CHECK(ctx(Tri::Unknown, Tri::True).normalized() == ctx(Tri::True, Tri::True));
  CHECK(ctx(Tri::False, Tri::Unknown).normalized() == ctx(Tri::False, Tri::False));
  CHECK_THROWS_AS(ctx(Tri::False, Tri::True).normalized(), ContractError);
  CHECK(kNone.to_string() == "none");
  CHECK(kBw1.to_string() == "b=w1");
}

TEST_CASE("cardinal comparisons") {
  CHECK(card_less(Card::Omega, Card::Omega1, kNone) == Tri::True);
  CHECK(card_leq(Card::Omega1, Card::B, kNone) == Tri::True);
  CHECK(card_leq(Card::B, Card::D, kNone) == Tri::True);
  CHECK(card_leq(Card::D, Card::C, kNone) == Tri::True);
  CHECK(card_less(Card::Omega1, Card::D, kNone) == Tri::Unknown);
  CHECK(card_less(Card::Omega1, Card::D, kBbig) == Tri::True);
  CHECK(card_less(Card::Omega1, Card::D, ctx(Tri::True, Tri::True)) == Tri::False);
  CHECK(card_less(Card::Omega1, Card::D, ctx(Tri::True, Tri::False)) == Tri::True);
  CHECK(card_less(Card::Omega1, Card::B, kBw1) == Tri::False);
  CHECK(card_leq(Card::Omega1, Card::C, kNone) == Tri::True);
  CHECK(card_less(Card::Omega, Card::C, kNone) == Tri::True);
}

TEST_CASE("invariant golden table") {
  for (const auto& c : all_contexts()) {
    for (const auto& row : golden_invariants()) {
      CAPTURE(row.cls.name());
      CAPTURE(c.to_string());
      CHECK(cofinality(row.cls) == row.cof);
      CHECK(additivity(row.cls) == row.add);
      CHECK(spectrum(row.cls) == row.spec);
      CHECK(calibre(row.cls, CalibreKind::Omega1, c) == expected_calibre(row.cal_w1, c));
      CHECK(calibre(row.cls, CalibreKind::Omega1Omega1Omega, c) == expected_calibre(row.cal_w1w1w, c));
      CHECK(calibre(row.cls, CalibreKind::Omega1Omega, c) == expected_calibre(row.cal_w1w, c));
      CHECK_FALSE(cofinality_reason(row.cls).empty());
    }
  }
  CHECK(spectrum(C::Sigma).to_string() == "{w1} u SPEC_NN");
  CHECK(spectrum(C::One).to_string() == "{}");
}

TEST_CASE("conditional calibres flip with b") {
  CHECK(calibre(C::Omega1TimesOmegaOmega, CalibreKind::Omega1Omega1Omega, kBbig) == Tri::True);
  CHECK(calibre(C::Omega1TimesOmegaOmega, CalibreKind::Omega1Omega1Omega, kBw1) == Tri::False);
  CHECK(calibre(C::Omega1TimesOmegaOmega, CalibreKind::Omega1Omega1Omega, kNone) == Tri::Unknown);
  CHECK(calibre(C::OmegaOmega, CalibreKind::Omega1, kBbig) == Tri::True);
  CHECK(calibre(C::OmegaOmega, CalibreKind::Omega1, kBw1) == Tri::False);
  CHECK(calibre(TukeyClass::stat(1, 3), CalibreKind::Omega1Omega, kNone) == Tri::True);
  CHECK(calibre(C::FinPowOmega1, CalibreKind::Omega1Omega, kNone) == Tri::False);
  CHECK(calibre(C::Omega1, CalibreKind::Omega1, kNone) == Tri::False);
}

TEST_CASE("metric domination and size") {
  using D = UnboundedDescriptor;
  CHECK(metric_dominated(builtin_descriptor("CLUB_MINUS_POINT")));
  CHECK_FALSE(metric_dominated(builtin_descriptor("S2")));
  CHECK_FALSE(metric_covers(D{AtomUniverse{}, 0b001, ClDiff::UnboundedNotClosed, false}));
  const Ordinal w2 = Ordinal::omega_power(2);
  CHECK(poset_size(normalize(parse_set_expr("{1, 2, 3}"))) == PosetSize::Finite);
  CHECK(poset_size(normalize(SetExpr::s1(), w2)) == PosetSize::Continuum);
  CHECK(poset_size(builtin_descriptor("S0")) == PosetSize::Omega1);
  CHECK(poset_size(builtin_descriptor("S2")) == PosetSize::Continuum);
  CHECK(poset_size(normalize(SetExpr::degree_exactly(0), w2)) == PosetSize::Omega);
}

TEST_CASE("order examples") {
  auto check = [](TukeyClass a, TukeyClass b, const HypContext& c, Status le, Status ge) {
    const OrderVerdict v = order(a, b, c);
    CAPTURE(a.name());
    CAPTURE(b.name());
    CHECK(v.le.status == le);
    CHECK(v.ge.status == ge);
    CHECK(v.le.citation.empty() == (le == Status::Unknown));
    CHECK(v.ge.citation.empty() == (ge == Status::Unknown));
  };
  check(C::One, C::Omega, kNone, Status::Proved, Status::Refuted);
  check(C::Omega, C::Omega1, kNone, Status::Refuted, Status::Refuted);
  check(TukeyClass::stat(0b001, 3), TukeyClass::stat(0b010, 3), kNone, Status::Refuted,
        Status::Refuted);
  check(C::Sigma, C::FinPowTimesOmegaOmega, kNone, Status::Proved, Status::Refuted);
  check(C::OmegaOmega, C::Omega1TimesOmegaOmega, kBw1, Status::Proved, Status::Proved);
  // a larger Stat set is never below a smaller one; the other direction stays open
  check(TukeyClass::stat(0b001, 3), TukeyClass::stat(0b011, 3), kNone, Status::Refuted,
        Status::Unknown);
  check(C::Sigma, C::FinPowOmega1, kNone, Status::Unknown, Status::Refuted);
  check(C::Sigma, C::FinPowOmega1, ctx(Tri::True, Tri::True), Status::Proved, Status::Refuted);
  check(C::OmegaOmega, C::Sigma, kNone, Status::Proved, Status::Refuted);
  check(C::Omega1, C::Omega1TimesOmegaOmega, kNone, Status::Proved, Status::Refuted);
  check(C::FinPowOmega1, C::FinPowTimesOmegaOmega, ctx(Tri::True, Tri::True), Status::Proved,
        Status::Proved);
}

TEST_CASE("fact base is well formed") {
  std::size_t le = 0, not_ge = 0;
  for (const Fact& f : fact_base()) {
    CHECK_FALSE(f.citation.empty());
    (f.kind == Fact::Kind::Le ? le : not_ge)++;
  }
  CHECK(le > 0);
  CHECK(not_ge > 0);
}

TEST_CASE("verdicts are coherent in every context") {
  for (unsigned n : {2U, 3U, 4U})
    for (const auto& c : all_contexts()) {
      const Reasoner r(c, stat_family(n));
      CHECK(r.coherence_violations().empty());
    }
}

TEST_CASE("proved order is a preorder and respects the invariants") {
  for (const auto& c : all_contexts()) {
    const Reasoner r(c, stat_family(3));
    const auto& nodes = r.nodes();
    const std::size_t n = nodes.size();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(r.verdict(i, i).le.status == Status::Proved);
      for (std::size_t j = 0; j < n; ++j) {
        const OrderVerdict v = r.verdict(i, j);
        const OrderVerdict back = r.verdict(j, i);
        // the same question asked from the other side
        REQUIRE(v.le.status == back.ge.status);
        if (v.le.status != Status::Proved) continue;
        const TukeyClass& lo = nodes[i];
        const TukeyClass& hi = nodes[j];
        CHECK(card_leq(cofinality(lo), cofinality(hi), c) != Tri::False);
        if (additivity(lo) != Card::Undefined && additivity(hi) != Card::Undefined)
          CHECK(card_leq(additivity(hi), additivity(lo), c) != Tri::False);
        for (CalibreKind k : kAllCalibres)
          if (calibre(hi, k, c) == Tri::True) CHECK(calibre(lo, k, c) != Tri::False);
        for (Card kappa : {Card::Omega, Card::Omega1, Card::B})
          if (spectrum_contains(spectrum(lo), kappa, c) == Tri::True)
            CHECK(spectrum_contains(spectrum(hi), kappa, c) != Tri::False);
        for (std::size_t k = 0; k < n; ++k)
          if (r.verdict(j, k).le.status == Status::Proved)
            REQUIRE(r.verdict(i, k).le.status == Status::Proved);
      }
    }
  }
}

TEST_CASE("decisions survive stronger hypotheses") {
  const auto contexts = all_contexts();
  for (const auto& general : contexts)
    for (const auto& specific : contexts) {
      if (!refines(general, specific)) continue;
      const Reasoner g(general, stat_family(3)), s(specific, stat_family(3));
      for (std::size_t i = 0; i < g.nodes().size(); ++i)
        for (std::size_t j = 0; j < g.nodes().size(); ++j) {
          const Status a = g.verdict(i, j).le.status;
          if (a != Status::Unknown) REQUIRE(s.verdict(i, j).le.status == a);
        }
    }
}

TEST_CASE("Stat classes follow their atoms") {
  for (const auto& c : all_contexts()) {
    const auto family = stat_family(3);
    const Reasoner r(c, family);
    for (const auto& a : family)
      for (const auto& b : family) {
        const OrderVerdict v = r.order(a, b);
        // a >= b needs a minus b nonstationary
        if ((a.atoms() & ~b.atoms()) != 0) CHECK(v.ge.status == Status::Refuted);
        if (a == b) CHECK(v.equivalent());
        else CHECK_FALSE(v.equivalent());
      }
    for (const auto& a : family) {
      CHECK(r.order(C::Omega1TimesOmegaOmega, a).le.status == Status::Proved);
      CHECK(r.order(C::Sigma, a).ge.status == Status::Refuted);
      CHECK(r.order(C::FinPowOmega1, a).le.status == Status::Refuted);
      CHECK(r.order(a, C::FinPowTimesOmegaOmega).le.status == Status::Proved);
    }
  }
  CHECK_THROWS_AS(Reasoner(kNone, {TukeyClass::stat(1, 3), TukeyClass::stat(1, 4)}), ContractError);
}

TEST_CASE("every class is ranked against every other") {
  for (const auto& c : all_contexts()) {
    const Reasoner r(c, stat_family(3));
    for (const auto& a : all_classes(3))
      for (const auto& b : all_classes(3)) CHECK_NOTHROW(r.order(a, b));
  }
}

TEST_CASE("the reference diagram is reproduced") {
  for (unsigned atoms : {2U, 3U, 4U}) {
    const ReferenceDiagramReport rep = reference_diagram_check(atoms);
    CHECK(rep.passed());
    CHECK(rep.coherence_violations.empty());
    for (const auto& cr : rep.contexts) {
      CHECK(cr.missing.empty());
      CHECK(cr.unexpected.empty());
      CHECK(cr.merges_match);
    }
  }
}

TEST_CASE("diagram merges and sizes") {
  const HasseDiagram none = hasse_export(kNone, 3);
  CHECK(none.nodes.size() == 15);
  const HasseDiagram b = hasse_export(kBw1, 3);
  CHECK(b.nodes.size() == 14);
  const HasseDiagram bd = hasse_export(ctx(Tri::True, Tri::True), 3);
  CHECK(bd.nodes.size() == 13);
  std::map<std::string, std::size_t> members;
  for (const auto& node : bd.nodes) members[node.id] = node.members.size();
  CHECK(members["OmegaOmega"] == 2);
  CHECK(members["FinPowOmega1"] == 2);
  const HasseDiagram bbig = hasse_export(kBbig, 3);
  CHECK(bbig.nodes.size() == 15);
  CHECK(hasse_export(kNone, 0).nodes.size() == 9);
  CHECK_THROWS_AS(hasse_export(kNone, 7), ContractError);
}

TEST_CASE("diagram serializations") {
  const HasseDiagram d = hasse_export(kNone, 3);
  const std::string dot = d.to_dot();
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("style=dashed") != std::string::npos);
  const auto j = nlohmann::json::parse(d.to_json());
  CHECK(j["nodes"].size() == d.nodes.size());
  CHECK(j["edges"].size() == d.edges.size());
  CHECK(d.to_json() == hasse_export(kNone, 3).to_json());
}

}  // TEST_SUITE
