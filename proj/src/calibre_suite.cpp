#include "tukey/calibre_suite.hpp"

#include "json.hpp"
#include "tukey/classifier.hpp"
#include "tukey/oracle.hpp"
#include "tukey/poset.hpp"

namespace tukey {

CalibreReport calibre_check(unsigned max_n) {
  CalibreReport report;
  std::vector<TukeyClass> stats;
  for (AtomSet x = 1; x < full_atoms(3); ++x) stats.push_back(TukeyClass::stat(x, 3));
  for (const auto& ctx : all_contexts()) {
    const Reasoner r(ctx, stats);
    const auto& nodes = r.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (r.verdict(i, j).ge.status != Status::Proved) continue;
        ++report.class_pairs_checked;
        for (CalibreKind k : kAllCalibres)
          if (calibre(nodes[i], k, ctx) == Tri::True && calibre(nodes[j], k, ctx) == Tri::False)
            report.violations.push_back(nodes[i].name() + " >=_T " + nodes[j].name() + " under " +
                                        ctx.to_string() + " but only the first has calibre " +
                                        std::string(calibre_name(k)));
      }
  }

  std::vector<FinitePoset> posets;
  for (unsigned n = 1; n <= max_n; ++n)
    for (auto& p : enumerate_posets(n)) posets.push_back(std::move(p));
  for (const auto& p : posets)
    for (const auto& q : posets) {
      const FinitePoset pq = product(p, q);
      for (unsigned k = 1; k <= max_n + 1; ++k)
        for (unsigned l = 1; l <= k; ++l)
          for (unsigned m = 1; m <= l; ++m) {
            ++report.product_cases_checked;
            const bool factor_fails = !has_calibre(full_pair(p), k, l, m) || !has_calibre(full_pair(q), k, l, m);
            const bool product_fails = !has_calibre(full_pair(pq), k, l, m);
            if (factor_fails && !product_fails)
              report.violations.push_back("product of posets of sizes " + std::to_string(p.size()) + " and " +
                                          std::to_string(q.size()) + " keeps calibre (" + std::to_string(k) +
                                          "," + std::to_string(l) + "," + std::to_string(m) +
                                          ") that a factor lacks");
            if (product_fails && !factor_fails) ++report.product_only_failures;
          }
    }
  return report;
}

std::string CalibreReport::to_json() const {
  nlohmann::ordered_json j;
  j["classPairsChecked"] = class_pairs_checked;
  j["productCasesChecked"] = product_cases_checked;
  j["productOnlyFailures"] = product_only_failures;
  j["violations"] = violations;
  j["passed"] = passed();
  return j.dump(2) + "\n";
}

}  // namespace tukey
