#include "tukey/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>

#include "tukey/errors.hpp"

namespace tukey {

namespace {

ElementSet bit(unsigned i) { return ElementSet{1} << i; }

// Calls visit(mask) for every k-subset of `from`; stops early when visit returns false.
template <class Visit>
bool for_each_subset_of_size(ElementSet from, unsigned k, Visit&& visit) {
  std::vector<unsigned> elems;
  for (ElementSet s = from; s; s &= s - 1) elems.push_back(static_cast<unsigned>(std::countr_zero(s)));
  if (k > elems.size()) return true;
  std::vector<unsigned> idx(k);
  std::iota(idx.begin(), idx.end(), 0U);
  while (true) {
    ElementSet mask = 0;
    for (unsigned i : idx) mask |= bit(elems[i]);
    if (!visit(mask)) return false;
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && idx[pos] == elems.size() - k + pos) --pos;
    if (pos < 0) return true;
    ++idx[pos];
    for (unsigned i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

// Odometer over all maps from `domain` positions into `values`; visit returns true to stop.
template <class Visit>
bool any_map(std::size_t domain, const std::vector<unsigned>& values, Visit&& visit, MapTable& table,
             const std::vector<unsigned>& positions) {
  if (domain == 0) return visit(table);
  if (values.empty()) return false;
  std::vector<std::size_t> digit(domain, 0);
  for (std::size_t i = 0; i < domain; ++i) table[positions[i]] = values[0];
  while (true) {
    if (visit(table)) return true;
    std::size_t i = 0;
    while (i < domain && ++digit[i] == values.size()) {
      digit[i] = 0;
      table[positions[i]] = values[0];
      ++i;
    }
    if (i == domain) return false;
    table[positions[i]] = values[digit[i]];
  }
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t budget) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > budget / base) return budget + 1;
    r *= base;
  }
  return r;
}

std::vector<unsigned> elements_of(ElementSet s) {
  std::vector<unsigned> out;
  for (; s; s &= s - 1) out.push_back(static_cast<unsigned>(std::countr_zero(s)));
  return out;
}

}  // namespace

FinitePoset::FinitePoset(std::vector<ElementSet> up_rows) : up_(std::move(up_rows)) {
  if (up_.size() > kMaxPosetSize) throw ContractError("posets are limited to 64 elements");
  down_.assign(up_.size(), 0);
  for (unsigned i = 0; i < up_.size(); ++i)
    for (unsigned j = 0; j < up_.size(); ++j)
      if ((up_[i] >> j) & 1U) down_[j] |= bit(i);
}

FinitePoset FinitePoset::from_matrix(const std::vector<std::vector<bool>>& leq) {
  std::vector<ElementSet> rows(leq.size(), 0);
  for (std::size_t i = 0; i < leq.size(); ++i) {
    if (leq[i].size() != leq.size()) throw ContractError("relation matrix must be square");
    for (std::size_t j = 0; j < leq.size(); ++j)
      if (leq[i][j]) rows[i] |= bit(static_cast<unsigned>(j));
  }
  return FinitePoset(std::move(rows));
}

ElementSet FinitePoset::all() const noexcept {
  return size() >= 64 ? ~ElementSet{0} : bit(size()) - 1;
}

ElementSet FinitePoset::upper_bounds(ElementSet s) const {
  ElementSet ub = all();
  for (; s; s &= s - 1) ub &= up_[static_cast<unsigned>(std::countr_zero(s))];
  return ub;
}

std::vector<std::vector<bool>> FinitePoset::matrix() const {
  std::vector<std::vector<bool>> m(size(), std::vector<bool>(size()));
  for (unsigned i = 0; i < size(); ++i)
    for (unsigned j = 0; j < size(); ++j) m[i][j] = leq(i, j);
  return m;
}

std::optional<std::string> validate_poset(const FinitePoset& p) {
  const unsigned n = p.size();
  for (unsigned i = 0; i < n; ++i) {
    if ((p.up(i) & ~p.all()) != 0) return "row " + std::to_string(i) + " names elements outside the poset";
    if (!p.leq(i, i)) return "not reflexive at " + std::to_string(i);
  }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i != j && p.leq(i, j) && p.leq(j, i))
        return "not antisymmetric: " + std::to_string(i) + " and " + std::to_string(j);
      if (p.leq(i, j) && (p.up(j) & ~p.up(i)) != 0)
        return "not transitive through " + std::to_string(i) + " <= " + std::to_string(j);
    }
  return std::nullopt;
}

bool is_directed(const FinitePoset& p) {
  if (p.size() == 0) return false;
  for (unsigned i = 0; i < p.size(); ++i)
    for (unsigned j = i + 1; j < p.size(); ++j)
      if ((p.up(i) & p.up(j)) == 0) return false;
  return true;
}

std::optional<unsigned> join(const FinitePoset& p, ElementSet s) {
  const ElementSet ub = p.upper_bounds(s);
  for (unsigned u : elements_of(ub))
    if ((ub & ~p.up(u)) == 0) return u;
  return std::nullopt;
}

bool has_joins_for_bounded(const FinitePoset& p) {
  if (p.size() > 24) throw ContractError("join check is exhaustive; poset too large");
  // Joins depend only on the set of upper bounds, so test each distinct one once.
  std::vector<ElementSet> seen;
  for (ElementSet s = 0; s <= p.all(); ++s) {
    const ElementSet ub = p.upper_bounds(s);
    if (ub == 0 || std::find(seen.begin(), seen.end(), ub) != seen.end()) continue;
    seen.push_back(ub);
    if (!join(p, s)) return false;
  }
  return true;
}

unsigned cof_rel(const RelPair& pair) {
  const FinitePoset& p = pair.poset;
  if (pair.subset == 0) return 0;
  for (unsigned k = 1; k <= p.size(); ++k) {
    bool found = false;
    for_each_subset_of_size(p.all(), k, [&](ElementSet c) {
      ElementSet covered = 0;
      for (unsigned e : elements_of(c)) covered |= p.down(e);
      found = (pair.subset & ~covered) == 0;
      return !found;
    });
    if (found) return k;
  }
  return p.size();  // unreachable: P itself is cofinal
}

std::optional<unsigned> add_rel(const RelPair& pair) {
  const FinitePoset& p = pair.poset;
  const unsigned m = static_cast<unsigned>(std::popcount(pair.subset));
  for (unsigned k = 0; k <= m; ++k) {
    bool found = false;
    for_each_subset_of_size(pair.subset, k, [&](ElementSet s) {
      found = !p.bounded(s);
      return !found;
    });
    if (found) return k;
  }
  return std::nullopt;
}

bool has_calibre(const RelPair& pair, unsigned k, unsigned l, unsigned m) {
  if (!(k >= l && l >= m)) throw ContractError("calibre (k,l,m) requires k >= l >= m");
  const FinitePoset& p = pair.poset;
  return for_each_subset_of_size(pair.subset, k, [&](ElementSet t) {
    // some l-subset of t all of whose m-subsets are bounded
    return !for_each_subset_of_size(t, l, [&](ElementSet t0) {
      const bool good = for_each_subset_of_size(t0, m, [&](ElementSet t1) { return p.bounded(t1); });
      return !good;
    });
  });
}

bool is_rel_quotient(const MapTable& f, const RelPair& src, const RelPair& dst) {
  const FinitePoset& p = src.poset;
  const FinitePoset& q = dst.poset;
  if (f.size() != p.size()) throw ContractError("quotient table must be total on P");
  for (unsigned v : f)
    if (v >= q.size()) throw ContractError("quotient table maps outside Q");
  for (unsigned qp : elements_of(dst.subset)) {
    bool witnessed = false;
    for (unsigned pp : elements_of(src.subset)) {
      bool all_above = true;
      for (unsigned x : elements_of(p.up(pp)))
        if (!q.leq(qp, f[x])) {
          all_above = false;
          break;
        }
      if (all_above) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

bool is_rel_tukey_map(const MapTable& g, const RelPair& dst, const RelPair& src) {
  const FinitePoset& q = dst.poset;
  const FinitePoset& p = src.poset;
  if (g.size() != q.size()) throw ContractError("Tukey map table must be indexed by the elements of Q");
  for (unsigned x : elements_of(dst.subset))
    if (g[x] >= p.size() || !((src.subset >> g[x]) & 1U))
      throw ContractError("Tukey map must send Q' into P'");
  for (unsigned pe = 0; pe < p.size(); ++pe) {
    ElementSet pre = 0;
    for (unsigned x : elements_of(dst.subset))
      if (p.leq(g[x], pe)) pre |= bit(x);
    if (!q.bounded(pre)) return false;
  }
  return true;
}

std::uint64_t default_map_budget() {
  if (const char* env = std::getenv("TUKEY_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 2'000'000;
}

bool exists_quotient(const RelPair& src, const RelPair& dst, std::uint64_t budget) {
  const unsigned np = src.poset.size(), nq = dst.poset.size();
  if (checked_power(nq, np, budget) > budget)
    throw BudgetExceeded("quotient search needs " + std::to_string(nq) + "^" + std::to_string(np) +
                         " maps, over the budget of " + std::to_string(budget));
  std::vector<unsigned> values(nq);
  std::iota(values.begin(), values.end(), 0U);
  std::vector<unsigned> positions(np);
  std::iota(positions.begin(), positions.end(), 0U);
  MapTable table(np, 0);
  return any_map(np, values, [&](const MapTable& f) { return is_rel_quotient(f, src, dst); }, table, positions);
}

bool exists_tukey_map(const RelPair& dst, const RelPair& src, std::uint64_t budget) {
  const auto domain = elements_of(dst.subset);
  const auto values = elements_of(src.subset);
  if (checked_power(values.size(), domain.size(), budget) > budget)
    throw BudgetExceeded("Tukey map search needs " + std::to_string(values.size()) + "^" +
                         std::to_string(domain.size()) + " maps, over the budget of " + std::to_string(budget));
  MapTable table(dst.poset.size(), values.empty() ? 0 : values[0]);
  return any_map(domain.size(), values,
                 [&](const MapTable& g) { return is_rel_tukey_map(g, dst, src); }, table, domain);
}

FinitePoset chain(unsigned n) {
  std::vector<ElementSet> rows(n);
  for (unsigned i = 0; i < n; ++i) rows[i] = (n >= 64 ? ~ElementSet{0} : bit(n) - 1) & ~(bit(i) - 1);
  return FinitePoset(std::move(rows));
}

FinitePoset antichain(unsigned n) {
  std::vector<ElementSet> rows(n);
  for (unsigned i = 0; i < n; ++i) rows[i] = bit(i);
  return FinitePoset(std::move(rows));
}

FinitePoset powerset(unsigned m) {
  if (m > 6) throw ContractError("powerset of more than 6 points exceeds 64 elements");
  return fin_subsets(m, m + 1);
}

std::vector<ElementSet> fin_subset_masks(unsigned n, unsigned k) {
  if (n > 16) throw ContractError("fin_subsets: ground set too large");
  std::vector<ElementSet> masks;
  for (ElementSet s = 0; s < bit(n); ++s)
    if (static_cast<unsigned>(std::popcount(s)) < k) masks.push_back(s);
  if (masks.size() > kMaxPosetSize) throw ContractError("fin_subsets: more than 64 elements");
  return masks;
}

FinitePoset fin_subsets(unsigned n, unsigned k) {
  const auto masks = fin_subset_masks(n, k);
  std::vector<ElementSet> rows(masks.size(), 0);
  for (unsigned i = 0; i < masks.size(); ++i)
    for (unsigned j = 0; j < masks.size(); ++j)
      if ((masks[i] & ~masks[j]) == 0) rows[i] |= bit(j);
  return FinitePoset(std::move(rows));
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
  const unsigned np = p.size(), nq = q.size();
  if (std::uint64_t{np} * nq > kMaxPosetSize) throw ContractError("product exceeds 64 elements");
  std::vector<ElementSet> rows(np * nq, 0);
  for (unsigned i = 0; i < np; ++i)
    for (unsigned j = 0; j < nq; ++j)
      for (unsigned a = 0; a < np; ++a)
        for (unsigned b = 0; b < nq; ++b)
          if (p.leq(i, a) && q.leq(j, b)) rows[i * nq + j] |= bit(a * nq + b);
  return FinitePoset(std::move(rows));
}

FinitePoset induced(const FinitePoset& p, ElementSet s) {
  const auto elems = elements_of(s);
  std::vector<ElementSet> rows(elems.size(), 0);
  for (unsigned i = 0; i < elems.size(); ++i)
    for (unsigned j = 0; j < elems.size(); ++j)
      if (p.leq(elems[i], elems[j])) rows[i] |= bit(j);
  return FinitePoset(std::move(rows));
}

std::vector<ElementSet> canonical_form(const FinitePoset& p) {
  const unsigned n = p.size();
  if (n > 8) throw ContractError("canonical_form: at most 8 elements");
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  std::vector<ElementSet> best;
  std::vector<ElementSet> rows(n);
  do {
    // perm[i] is the new label of element i
    std::fill(rows.begin(), rows.end(), 0);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j : elements_of(p.up(i))) rows[perm[i]] |= bit(perm[j]);
    if (best.empty() || rows < best) best = rows;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<FinitePoset> enumerate_posets(unsigned n) {
  if (n > 6) throw ContractError("enumerate_posets: at most 6 elements");
  // Every poset has a linear extension, so it suffices to choose which pairs i < j are related.
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::map<std::vector<ElementSet>, FinitePoset> classes;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << pairs.size()); ++choice) {
    std::vector<ElementSet> rows(n);
    for (unsigned i = 0; i < n; ++i) rows[i] = bit(i);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((choice >> k) & 1U) rows[pairs[k].first] |= bit(pairs[k].second);
    FinitePoset candidate(rows);
    if (validate_poset(candidate)) continue;
    auto canon = canonical_form(candidate);
    classes.try_emplace(canon, FinitePoset(canon));
  }
  std::vector<FinitePoset> out;
  for (auto& [key, poset] : classes) out.push_back(poset);
  return out;
}

}  // namespace tukey
