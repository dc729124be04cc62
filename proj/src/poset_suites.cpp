#include "tukey/poset_suites.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <thread>

#include "json.hpp"
#include "tukey/errors.hpp"

namespace tukey {

namespace {

using nlohmann::ordered_json;

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned t = requested ? requested : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(t, jobs)));
}

// Runs job(i) for i in [0, count) across workers; job writes only to slot i.
// If jobs throw, the exception of the smallest failing index is rethrown.
template <class Job>
void parallel_for(std::size_t count, unsigned threads, Job&& job) {
  const unsigned t = worker_count(threads, count);
  std::vector<std::thread> pool;
  std::vector<std::pair<std::size_t, std::exception_ptr>> failures(t, {count, nullptr});
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += t) {
          failures[w].first = i;
          job(i);
        }
        failures[w].first = count;
      } catch (...) {
        failures[w].second = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  const auto first = std::min_element(failures.begin(), failures.end(),
                                      [](const auto& a, const auto& b) { return a.first < b.first; });
  if (first != failures.end() && first->second) std::rethrow_exception(first->second);
}

std::vector<RelPair> relative_pairs(unsigned max_n, bool include_nondirected, std::size_t* posets) {
  std::vector<RelPair> out;
  *posets = 0;
  for (unsigned n = 1; n <= max_n; ++n)
    for (const auto& p : enumerate_posets(n)) {
      if (!include_nondirected && !is_directed(p)) continue;
      ++*posets;
      for (ElementSet s = 0; s <= p.all(); ++s) out.push_back({p, s});
    }
  return out;
}

ordered_json subset_json(ElementSet s) {
  ordered_json a = ordered_json::array();
  for (unsigned i = 0; i < 64; ++i)
    if ((s >> i) & 1U) a.push_back(i);
  return a;
}

ordered_json poset_json(const FinitePoset& p) {
  ordered_json leq = ordered_json::array();
  for (const auto& row : p.matrix()) {
    ordered_json r = ordered_json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    leq.push_back(r);
  }
  return {{"n", p.size()}, {"leq", leq}};
}

ordered_json case_json(const PairCase& c) {
  return {{"P", poset_json(c.src.poset)}, {"Pprime", subset_json(c.src.subset)},
          {"Q", poset_json(c.dst.poset)}, {"Qprime", subset_json(c.dst.subset)},
          {"quotient", c.quotient},       {"tukeyMap", c.tukey_map},
          {"note", c.note}};
}

std::string opt_text(std::optional<unsigned> v) { return v ? std::to_string(*v) : "none"; }

// add values with none read as +infinity
bool add_leq(std::optional<unsigned> a, std::optional<unsigned> b) {
  if (!b) return true;
  return a && *a <= *b;
}

}  // namespace

bool is_rel_quotient_direct(const MapTable& f, const RelPair& src, const RelPair& dst) {
  const FinitePoset& p = src.poset;
  const FinitePoset& q = dst.poset;
  if (p.size() > 20) throw ContractError("direct quotient test is exhaustive; P too large");
  for (ElementSet c = 0; c <= p.all(); ++c) {
    ElementSet covered = 0, image_cover = 0;
    for (ElementSet s = c; s; s &= s - 1) {
      const auto e = static_cast<unsigned>(std::countr_zero(s));
      covered |= p.down(e);
      image_cover |= q.down(f[e]);
    }
    const bool cofinal_src = (src.subset & ~covered) == 0;
    const bool cofinal_dst = (dst.subset & ~image_cover) == 0;
    if (cofinal_src && !cofinal_dst) return false;
  }
  return true;
}

bool is_rel_tukey_map_direct(const MapTable& g, const RelPair& dst, const RelPair& src) {
  const FinitePoset& q = dst.poset;
  const FinitePoset& p = src.poset;
  if (q.size() > 20) throw ContractError("direct Tukey map test is exhaustive; Q too large");
  for (ElementSet u = dst.subset;; u = (u - 1) & dst.subset) {
    if (!q.bounded(u)) {
      ElementSet image = 0;
      for (ElementSet s = u; s; s &= s - 1) image |= ElementSet{1} << g[static_cast<unsigned>(std::countr_zero(s))];
      if (p.bounded(image)) return false;
    }
    if (u == 0) break;
  }
  return true;
}

DualityReport duality_check(unsigned max_n, bool include_nondirected, unsigned threads, std::uint64_t budget) {
  DualityReport report;
  report.max_n = max_n;
  report.include_nondirected = include_nondirected;
  const auto pairs = relative_pairs(max_n, include_nondirected, &report.posets);
  report.relative_pairs = pairs.size();

  struct Slot {
    std::size_t quotients = 0;
    std::vector<PairCase> counter, mono;
  };
  std::vector<Slot> slots(pairs.size());
  std::vector<unsigned> cof(pairs.size());
  std::vector<std::optional<unsigned>> add(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    cof[i] = cof_rel(pairs[i]);
    add[i] = add_rel(pairs[i]);
  }
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    Slot& slot = slots[i];
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      PairCase c{pairs[i], pairs[j], false, false, ""};
      c.quotient = exists_quotient(c.src, c.dst, budget);
      c.tukey_map = exists_tukey_map(c.dst, c.src, budget);
      if (c.quotient != c.tukey_map) {
        c.note = "quotient and Tukey map disagree";
        slot.counter.push_back(c);
      }
      if (!c.quotient) continue;
      ++slot.quotients;
      if (cof[i] < cof[j] || !add_leq(add[i], add[j])) {
        c.note = "cof " + std::to_string(cof[i]) + " vs " + std::to_string(cof[j]) + ", add " +
                 opt_text(add[i]) + " vs " + opt_text(add[j]);
        slot.mono.push_back(std::move(c));
      }
    }
  });
  for (auto& slot : slots) {
    report.quotients_found += slot.quotients;
    for (auto& c : slot.counter) report.counterexamples.push_back(std::move(c));
    for (auto& c : slot.mono) report.monotonicity_violations.push_back(std::move(c));
  }
  report.comparisons = pairs.size() * pairs.size();
  return report;
}

std::string DualityReport::to_json() const {
  ordered_json j;
  j["maxSize"] = max_n;
  j["includeNondirected"] = include_nondirected;
  j["posets"] = posets;
  j["relativePairs"] = relative_pairs;
  j["comparisons"] = comparisons;
  j["quotientsFound"] = quotients_found;
  j["counterexamples"] = ordered_json::array();
  for (const auto& c : counterexamples) j["counterexamples"].push_back(case_json(c));
  j["monotonicityViolations"] = ordered_json::array();
  for (const auto& c : monotonicity_violations) j["monotonicityViolations"].push_back(case_json(c));
  return j.dump(2) + "\n";
}

CharacterizationReport characterization_check(unsigned max_p, unsigned max_q, unsigned threads) {
  CharacterizationReport report;
  report.max_p = max_p;
  report.max_q = max_q;
  std::size_t ignored = 0;
  const auto ps = relative_pairs(max_p, true, &ignored);
  const auto qs = relative_pairs(max_q, true, &ignored);

  struct Slot {
    std::size_t quotient_maps = 0, tukey_maps = 0;
    std::vector<std::string> bad;
  };
  std::vector<Slot> slots(ps.size());
  parallel_for(ps.size(), threads, [&](std::size_t i) {
    const RelPair& src = ps[i];
    const unsigned np = src.poset.size();
    for (const RelPair& dst : qs) {
      const unsigned nq = dst.poset.size();
      MapTable f(np, 0);
      while (true) {
        ++slots[i].quotient_maps;
        if (is_rel_quotient(f, src, dst) != is_rel_quotient_direct(f, src, dst))
          slots[i].bad.push_back("quotient " + poset_to_json(src.poset) + " -> " + poset_to_json(dst.poset));
        unsigned k = 0;
        while (k < np && ++f[k] == nq) f[k++] = 0;
        if (k == np) break;
      }
      // Tukey maps Q' -> P'
      std::vector<unsigned> dom, vals;
      for (unsigned x = 0; x < nq; ++x)
        if ((dst.subset >> x) & 1U) dom.push_back(x);
      for (unsigned x = 0; x < np; ++x)
        if ((src.subset >> x) & 1U) vals.push_back(x);
      if (vals.empty() && !dom.empty()) continue;
      std::vector<std::size_t> digit(dom.size(), 0);
      MapTable g(nq, vals.empty() ? 0 : vals[0]);
      while (true) {
        for (std::size_t a = 0; a < dom.size(); ++a) g[dom[a]] = vals[digit[a]];
        ++slots[i].tukey_maps;
        if (is_rel_tukey_map(g, dst, src) != is_rel_tukey_map_direct(g, dst, src))
          slots[i].bad.push_back("tukey map " + poset_to_json(dst.poset) + " -> " + poset_to_json(src.poset));
        std::size_t k = 0;
        while (k < dom.size() && ++digit[k] == vals.size()) digit[k++] = 0;
        if (k == dom.size()) break;
      }
    }
  });
  for (auto& s : slots) {
    report.quotient_maps += s.quotient_maps;
    report.tukey_maps += s.tukey_maps;
    for (auto& b : s.bad) report.disagreements.push_back(std::move(b));
  }
  return report;
}

std::string CharacterizationReport::to_json() const {
  ordered_json j;
  j["maxP"] = max_p;
  j["maxQ"] = max_q;
  j["quotientMapsChecked"] = quotient_maps;
  j["tukeyMapsChecked"] = tukey_maps;
  j["disagreements"] = disagreements;
  return j.dump(2) + "\n";
}

CombinedQuotient combine_quotient(const FinitePoset& q, const std::vector<QuotientPart>& parts,
                                  const FinitePoset& p) {
  if (auto bad = validate_poset(p)) throw ContractError("target is not a poset: " + *bad);
  if (auto bad = validate_poset(q)) throw ContractError("source is not a poset: " + *bad);
  if (!is_directed(p)) throw ContractError("target poset must be directed");
  if (!has_joins_for_bounded(p)) throw ContractError("target poset lacks joins of bounded sets");
  if (parts.empty()) throw ContractError("combine_quotient needs at least one part");
  const RelPair q_full = full_pair(q);
  ElementSet covered = 0;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    const auto& part = parts[a];
    if (part.phi.size() != q.size()) throw ContractError("part " + std::to_string(a) + ": table must be total on Q");
    for (unsigned x = 0; x < q.size(); ++x) {
      if (part.phi[x] >= p.size()) throw ContractError("part " + std::to_string(a) + ": value outside P");
      for (unsigned y = 0; y < q.size(); ++y)
        if (q.leq(x, y) && !p.leq(part.phi[x], part.phi[y]))
          throw ContractError("part " + std::to_string(a) + ": map is not order-preserving");
    }
    if (!is_rel_quotient(part.phi, q_full, {p, part.subset}))
      throw ContractError("part " + std::to_string(a) + ": image is not cofinal for its subset");
    covered |= part.subset;
  }

  CombinedQuotient out;
  const auto k = static_cast<unsigned>(parts.size());
  out.index_sets = fin_subset_masks(k, k + 1);
  out.src = full_pair(product(q, fin_subsets(k, k + 1)));
  out.dst = {p, covered};
  const auto nf = static_cast<unsigned>(out.index_sets.size());
  out.table.assign(q.size() * nf, 0);
  for (unsigned x = 0; x < q.size(); ++x)
    for (unsigned fi = 0; fi < nf; ++fi) {
      ElementSet values = 0;
      for (unsigned a = 0; a < k; ++a)
        if ((out.index_sets[fi] >> a) & 1U) values |= ElementSet{1} << parts[a].phi[x];
      const auto sup = join(p, values);
      if (!sup) throw ContractError("no join for the images at element " + std::to_string(x));
      out.table[x * nf + fi] = *sup;
    }
  out.verified = is_rel_quotient(out.table, out.src, out.dst);
  return out;
}

std::string poset_to_json(const FinitePoset& p) { return poset_json(p).dump(); }

FinitePoset poset_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("invalid poset JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("leq") || !j["n"].is_number_unsigned() ||
      !j["leq"].is_array())
    throw ParseError("poset JSON needs {\"n\": count, \"leq\": matrix}", 0);
  const auto n = j["n"].get<unsigned>();
  if (n > kMaxPosetSize) throw ContractError("posets are limited to 64 elements");
  if (j["leq"].size() != n) throw ParseError("leq must have n rows", 0);
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (unsigned i = 0; i < n; ++i) {
    const auto& row = j["leq"][i];
    if (!row.is_array() || row.size() != n) throw ParseError("leq row " + std::to_string(i) + " must have n entries", 0);
    for (unsigned k = 0; k < n; ++k) {
      const auto& v = row[k];
      if (v.is_boolean()) m[i][k] = v.get<bool>();
      else if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1)) m[i][k] = v.get<int>() == 1;
      else throw ParseError("leq entries must be booleans or 0/1", 0);
    }
  }
  FinitePoset p = FinitePoset::from_matrix(m);
  if (auto bad = validate_poset(p)) throw ContractError("not a partial order: " + *bad);
  return p;
}

}  // namespace tukey
