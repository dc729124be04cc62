#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "tukey/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  json parsed() const { return json::parse(out); }
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tukey::run(args, out, err);
  return {code, out.str(), err.str()};
}

void check_citations(const json& judgement) {
  const std::string status = judgement["status"];
  if (status == "Unknown") {
    CHECK_FALSE(judgement.contains("citation"));
  } else {
    REQUIRE(judgement.contains("citation"));
    CHECK_FALSE(judgement["citation"].get<std::string>().empty());
  }
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify golden outputs") {
  const std::vector<std::pair<std::string, std::string>> golden{
      {"S1", "OmegaOmega"},
      {"S0", "FinPowOmega1"},
      {"S2", "Sigma"},
      {"CLUB", "Omega1"},
      {"CLUB_MINUS_POINT", "OmegaTimesOmega1"},
      {"[0, w]", "One"},
      {"[0, w] \\ {w}", "Omega"},
      {"unbounded(atoms={A1,A3}; cldiff=unbounded-notclosed)", "Stat{A1,A3}"},
      {"unbounded(atoms=all; cldiff=bounded-notclosed)", "Omega1TimesOmegaOmega"},
      {"unbounded(atoms=none; cldiff=unbounded-notclosed)", "FinPowTimesOmegaOmega"},
  };
  for (const auto& [input, cls] : golden) {
    const Result r = run_cli({"classify", input});
    CAPTURE(input);
    REQUIRE(r.code == 0);
    const json j = r.parsed();
    CHECK(j["class"] == cls);
    CHECK(j["input"] == input);
    for (const char* key : {"notation", "hypotheses", "cofinality", "additivity", "spectrum",
                            "calibres", "citations", "metricDominated", "canonical"})
      CHECK(j.contains(key));
    CHECK(j["calibres"].size() == 3);
    // canonical text reparses to the same value
    const Result again = run_cli({"classify", j["canonical"].get<std::string>()});
    REQUIRE(again.code == 0);
    CHECK(again.parsed()["class"] == cls);
    CHECK(again.parsed()["canonical"] == j["canonical"]);
  }
}

TEST_CASE("classify key order is fixed") {
  const std::string out = run_cli({"classify", "S1"}).out;
  CHECK(out.find("\"input\"") < out.find("\"class\""));
  CHECK(out.find("\"class\"") < out.find("\"cofinality\""));
  CHECK(out.find("\"calibres\"") < out.find("\"canonical\""));
}

TEST_CASE("invariants under hypotheses") {
  const json big = run_cli({"invariants", "Omega1TimesOmegaOmega", "--hyp", "b>w1"}).parsed();
  CHECK(big["calibres"]["(w1,w1,w)"] == "true");
  const json small = run_cli({"invariants", "Omega1TimesOmegaOmega", "--hyp", "b=w1"}).parsed();
  CHECK(small["calibres"]["(w1,w1,w)"] == "false");
  const json none = run_cli({"invariants", "Omega1TimesOmegaOmega"}).parsed();
  CHECK(none["calibres"]["(w1,w1,w)"] == "unknown");
  CHECK(none["cofinality"] == "d");
  const json s = run_cli({"invariants", "S0"}).parsed();
  CHECK(s["class"] == "FinPowOmega1");
  CHECK(s["posetSize"] == "w1");
  CHECK(run_cli({"invariants", "Stat{A2}"}).parsed()["spectrum"] == "{w1} u SPEC_NN");
}

TEST_CASE("compare outputs") {
  json j = run_cli({"compare", "Sigma", "FinPowOmega1"}).parsed();
  CHECK(j["le"]["status"] == "Unknown");
  CHECK(j["ge"]["status"] == "Refuted");
  CHECK(j["relation"] == "undecided");
  check_citations(j["le"]);
  check_citations(j["ge"]);

  j = run_cli({"compare", "Sigma", "FinPowOmega1", "--hyp", "d=w1"}).parsed();
  CHECK(j["le"]["status"] == "Proved");
  CHECK(j["relation"] == "strictly-below");
  CHECK(j["hypotheses"] == "b=w1 d=w1");

  j = run_cli({"compare", "One", "Omega"}).parsed();
  CHECK(j["relation"] == "strictly-below");
  j = run_cli({"compare", "Omega", "Omega1"}).parsed();
  CHECK(j["relation"] == "incomparable");
  j = run_cli({"compare", "S1", "unbounded(atoms=all; cldiff=bounded-notclosed)", "--hyp", "b=w1"})
          .parsed();
  CHECK(j["relation"] == "equivalent");
  j = run_cli({"compare", "S2", "S0"}).parsed();
  CHECK(j["relation"] == "undecided");
  CHECK(j["lhs"]["class"] == "Sigma");
  for (const char* a : {"One", "S1", "S2", "Stat{A1}", "Stat{A1,A2}", "CLUB"})
    for (const char* b : {"Omega", "FinPowOmega1", "Stat{A2}", "S0"}) {
      const json v = run_cli({"compare", a, b}).parsed();
      check_citations(v["le"]);
      check_citations(v["ge"]);
    }
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"classify", "w*2 + w"}).code == 1);
  CHECK(run_cli({"classify", "{w*2 + w}"}).code == 1);
  const Result bad = run_cli({"classify", "unbounded(atoms={A1}; cldiff=bounded-closed)"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("rule 1") != std::string::npos);
  CHECK(bad.out.empty());
  CHECK(run_cli({"compare", "Sigma", "Stat{A1}", "--require-decision"}).code == 3);
  CHECK(run_cli({"compare", "One", "Omega", "--require-decision"}).code == 0);
  CHECK(run_cli({"compare", "One", "Omega", "--hyp", "d=w1", "--hyp", "b>w1"}).code == 1);
  CHECK(run_cli({"compare", "One", "Omega", "--hyp", "c=w1"}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"check", "--suite", "nope"}).code == 1);
  CHECK(run_cli({"check", "--suite", "duality", "--max-size", "3", "--max-maps", "5"}).code == 4);
}

TEST_CASE("check suites") {
  const Result d = run_cli({"check", "--suite", "duality", "--max-size", "4"});
  CHECK(d.code == 0);
  CHECK(d.parsed()["counterexamples"].empty());
  const Result m = run_cli({"check", "--suite", "monotonicity", "--max-size", "3"});
  CHECK(m.code == 0);
  CHECK(run_cli({"check", "--suite", "calibre"}).code == 0);
  CHECK(run_cli({"check", "--suite", "figure1"}).code == 0);
  const Result s = run_cli({"check", "--suite", "sigma-blocks", "--blocks", "3", "--samples", "200"});
  CHECK(s.code == 0);
  CHECK(s.parsed()["blocks"] == 3);
}

TEST_CASE("output is byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", "--suite", "s1-skeleton", "--samples", "300", "--seed", "5"},
        std::vector<std::string>{"check", "--suite", "sigma-blocks", "--samples", "300", "--seed", "5"},
        std::vector<std::string>{"check", "--suite", "duality", "--max-size", "3"},
        std::vector<std::string>{"diagram", "--format", "dot"},
        std::vector<std::string>{"diagram", "--format", "json", "--hyp", "b=w1"},
        std::vector<std::string>{"classify", "S1"}}) {
    CHECK(run_cli(args).out == run_cli(args).out);
  }
  CHECK(run_cli({"check", "--suite", "s1-skeleton", "--seed", "5"}).out !=
        run_cli({"check", "--suite", "s1-skeleton", "--seed", "6"}).out);
}

TEST_CASE("diagram output") {
  const Result dot = run_cli({"diagram", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  const json j = run_cli({"diagram", "--hyp", "d=w1", "--atoms", "2"}).parsed();
  CHECK(j["nodes"].size() == 9 + 2 - 2);
  CHECK(run_cli({"diagram", "--atoms", "7"}).code == 1);
}

TEST_CASE("size verb") {
  CHECK(run_cli({"size", "{1, 2, 3}"}).parsed()["size"] == "finite");
  CHECK(run_cli({"size", "S1"}).parsed()["size"] == "c");
  CHECK(run_cli({"size", "S0"}).parsed()["size"] == "w1");
  CHECK(run_cli({"size", "[0, w] \\ {w}"}).parsed()["size"] == "w");
}

TEST_CASE("parse_space canonical forms") {
  const auto s1 = tukey::parse_space("S1");
  CHECK(std::holds_alternative<tukey::NormalSetForm>(s1.space));
  const auto club = tukey::parse_space("unbounded(atoms=all; cldiff=empty)");
  CHECK(std::get<tukey::UnboundedDescriptor>(club.space) == tukey::builtin_descriptor("CLUB"));
  for (const char* text : {"S0", "CLUB_MINUS_POINT", "{1, w} | [w^2, w^2*2]", "deg=1 in [0, w^3]",
                           "unbounded(atoms={A2}; cldiff=unbounded-notclosed; universe=4)"}) {
    const auto p = tukey::parse_space(text);
    CHECK(tukey::parse_space(p.canonical).canonical == p.canonical);
  }
}

TEST_CASE("the installed binary reports exit codes") {
  const std::string bin = std::string(TUKEY_BINARY_DIR) + "/tukey";
  auto status = [&](const std::string& args, const std::string& env = "") {
    const int raw = std::system((env + bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("classify S1") == 0);
  CHECK(status("check --suite duality --max-size 3") == 0);
  CHECK(status("check --suite duality --max-size 3", "TUKEY_BUDGET=5 ") == 4);
  CHECK(status("classify 'w*2 + w'") == 1);
  CHECK(status("classify 'unbounded(atoms={A1}; cldiff=bounded-closed)'") == 2);
  CHECK(status("compare Sigma 'Stat{A1}' --require-decision") == 3);
  CHECK(status("compare OmegaOmega Omega1TimesOmegaOmega --hyp 'b=w1' --require-decision") == 0);
}

}  // TEST_SUITE
