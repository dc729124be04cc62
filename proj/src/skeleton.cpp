#include "tukey/skeleton.hpp"

#include <algorithm>

#include "json.hpp"
#include "tukey/errors.hpp"

namespace tukey {

namespace {

__extension__ typedef __int128 i128;

i128 tail_at(const FnTerm& f, std::uint64_t m) {
  return static_cast<i128>(f.slope()) * m + f.offset();
}

// Probes along fundamental sequences: no block accumulates at its limit w*m, and a set
// meeting infinitely many blocks contains w^2.
bool probe_compact(const S1Element& k, std::string* why) {
  const FnTerm f = k.block_maxima();
  const std::uint64_t last = std::max<std::uint64_t>(f.last_exception(), 8) + 2;
  for (std::uint64_t m = 1; m <= last; ++m) {
    const Ordinal limit = Ordinal::omega_power(1, m);
    if (k.contains(limit)) {
      *why = "contains the limit " + limit.to_string() + " which is outside S1";
      return false;
    }
    const std::uint64_t top = f(m);
    if (top > 0 && !k.contains(fundamental_seq(limit, top))) {
      *why = "block " + std::to_string(m) + " maximum is not a member";
      return false;
    }
    for (std::uint64_t n = top + 1; n <= top + 3; ++n)
      if (k.contains(fundamental_seq(limit, n))) {
        *why = "block " + std::to_string(m) + " accumulates at " + limit.to_string();
        return false;
      }
  }
  if (!f.eventually_zero() && !k.contains(Ordinal::omega_power(2))) {
    *why = "meets infinitely many blocks but misses w^2";
    return false;
  }
  return true;
}

struct Tally {
  std::vector<std::pair<std::string, std::size_t>> checks;
  std::vector<std::string> violations;

  void check(const std::string& name, bool ok, const std::string& detail) {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const auto& c) { return c.first == name; });
    if (it == checks.end()) checks.emplace_back(name, 1);
    else ++it->second;
    if (!ok && violations.size() < 50) violations.push_back(name + ": " + detail);
  }
};

using FnSide = std::vector<std::optional<FnTerm>>;
using SetSide = std::vector<S1Element>;

bool fn_leq(const FnSide& f, const FnSide& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i]) continue;
    if (!g[i] || !dominated(*f[i], *g[i])) return false;
  }
  return true;
}

bool set_leq(const SetSide& a, const SetSide& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].subset_of(b[i])) return false;
  return true;
}

FnSide phi(const SetSide& k) {
  FnSide out;
  for (const auto& e : k) out.push_back(e.empty() ? std::nullopt : std::optional<FnTerm>(e.block_maxima()));
  return out;
}

SetSide phi_prime(const FnSide& f) {
  SetSide out;
  for (const auto& g : f) out.push_back(g ? S1Element::bounded_by(*g) : S1Element{});
  return out;
}

std::string fn_side_text(const FnSide& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + (f[i] ? f[i]->to_string() : std::string("-"));
  return s + ")";
}

std::string set_side_text(const SetSide& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? ", " : "") + k[i].to_string();
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// FnTerm

FnTerm::FnTerm(std::uint64_t a, std::uint64_t b, std::map<std::uint64_t, std::uint64_t> exceptions)
    : a_(a), b_(b) {
  for (const auto& [m, v] : exceptions) {
    if (m == 0) throw ContractError("FnTerm arguments start at 1");
    if (tail_at(*this, m) != static_cast<i128>(v)) exceptions_.emplace(m, v);
  }
}

std::uint64_t FnTerm::operator()(std::uint64_t m) const {
  if (m == 0) throw ContractError("FnTerm arguments start at 1");
  if (auto it = exceptions_.find(m); it != exceptions_.end()) return it->second;
  const i128 v = tail_at(*this, m);
  if (v > static_cast<i128>(UINT64_MAX)) throw OverflowError("FnTerm value exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

std::uint64_t FnTerm::last_exception() const noexcept {
  return exceptions_.empty() ? 0 : exceptions_.rbegin()->first;
}

FnTerm FnTerm::shifted(std::uint64_t c) const {
  std::map<std::uint64_t, std::uint64_t> exc;
  for (const auto& [m, v] : exceptions_) exc.emplace(m, v + c);
  return FnTerm(a_, b_ + c, std::move(exc));
}

std::string FnTerm::to_string() const {
  std::string s;
  if (a_ == 0) s = std::to_string(b_);
  else {
    s = (a_ == 1 ? "" : std::to_string(a_)) + "m";
    if (b_) s += "+" + std::to_string(b_);
  }
  if (!exceptions_.empty()) {
    s += " except {";
    bool first = true;
    for (const auto& [m, v] : exceptions_) {
      s += (first ? "" : ", ") + std::to_string(m) + ":" + std::to_string(v);
      first = false;
    }
    s += "}";
  }
  return s;
}

bool leq_except(const FnTerm& f, const FnTerm& g, const std::set<std::uint64_t>& skip) {
  std::set<std::uint64_t> breaks(skip.begin(), skip.end());
  for (const auto& [m, v] : f.exceptions()) breaks.insert(m);
  for (const auto& [m, v] : g.exceptions()) breaks.insert(m);
  breaks.erase(0);
  auto value = [](const FnTerm& h, std::uint64_t m) -> i128 {
    if (auto it = h.exceptions().find(m); it != h.exceptions().end()) return it->second;
    return tail_at(h, m);
  };
  // Between breakpoints both sides are linear, so checking segment ends suffices.
  auto tails_ok = [&](std::uint64_t m) { return tail_at(f, m) <= tail_at(g, m); };
  std::uint64_t start = 1;
  for (std::uint64_t k : breaks) {
    if (start < k && !(tails_ok(start) && tails_ok(k - 1))) return false;
    if (!skip.count(k) && value(f, k) > value(g, k)) return false;
    start = k + 1;
  }
  return tails_ok(start) && f.slope() <= g.slope();
}

bool same_function(const FnTerm& f, const FnTerm& g) { return dominated(f, g) && dominated(g, f); }

// ---------------------------------------------------------------------------
// S1Element

S1Element S1Element::finite(std::vector<BlockPoint> points, bool zero, bool top) {
  S1Element e;
  for (const auto& p : points) {
    if (p.block == 0 || p.j == 0) throw ContractError("block points need block >= 1 and j >= 1");
    e.points_.insert(p);
  }
  e.zero_ = zero;
  e.top_ = top;
  return e;
}

S1Element S1Element::bounded_by(const FnTerm& g) {
  S1Element e;
  e.bound_ = g;
  e.zero_ = e.top_ = true;
  return e;
}

S1Element S1Element::with_points(const std::vector<BlockPoint>& extra) const {
  S1Element e = *this;
  for (const auto& p : extra) {
    if (p.block == 0 || p.j == 0) throw ContractError("block points need block >= 1 and j >= 1");
    if (!(e.bound_ && p.j <= (*e.bound_)(p.block))) e.points_.insert(p);
  }
  return e;
}

bool S1Element::contains(const BlockPoint& p) const {
  if (points_.count(p)) return true;
  return bound_ && p.block >= 1 && p.j >= 1 && p.j <= (*bound_)(p.block);
}

bool S1Element::contains(const Ordinal& g) const {
  if (g.is_zero()) return contains_zero();
  if (g == Ordinal::omega_power(2)) return contains_top();
  if (g.leading_exponent() >= 2 || !g.is_successor()) return false;
  std::uint64_t c = 0, j = 0;
  for (const auto& t : g.terms()) (t.exponent == 1 ? c : j) = t.coefficient;
  return contains(BlockPoint{c + 1, j});
}

bool S1Element::subset_of(const S1Element& other) const {
  if (contains_zero() && !other.contains_zero()) return false;
  if (contains_top() && !other.contains_top()) return false;
  for (const auto& p : points_)
    if (!other.contains(p)) return false;
  if (!bound_) return true;
  const FnTerm h = other.bound_.value_or(FnTerm{});
  std::set<std::uint64_t> skip;
  for (const auto& p : other.points_) skip.insert(p.block);
  for (std::uint64_t m : skip) {
    std::uint64_t cap = h(m);
    while (other.points_.count({m, cap + 1})) ++cap;
    if ((*bound_)(m) > cap) return false;
  }
  return leq_except(*bound_, h, skip);
}

FnTerm S1Element::block_maxima() const {
  std::map<std::uint64_t, std::uint64_t> maxima;
  const FnTerm base = bound_.value_or(FnTerm{});
  for (const auto& [m, v] : base.exceptions()) maxima[m] = v;
  for (const auto& p : points_) {
    auto [it, fresh] = maxima.try_emplace(p.block, base(p.block));
    it->second = std::max(it->second, p.j);
  }
  return FnTerm(base.slope(), base.offset(), std::move(maxima));
}

std::string S1Element::to_string() const {
  if (empty()) return "{}";
  std::string s = "{";
  bool first = true;
  auto add = [&](const std::string& item) {
    s += (first ? "" : ", ") + item;
    first = false;
  };
  if (contains_zero()) add("0");
  for (const auto& p : points_)
    add((p.block == 1 ? Ordinal::natural(p.j) : Ordinal({{1, p.block - 1}, {0, p.j}})).to_string());
  if (bound_) add("B(" + bound_->to_string() + ")");
  if (contains_top()) add("w^2");
  return s + "}";
}

// ---------------------------------------------------------------------------
// Sampler

FnTerm Sampler::fn_term(std::uint64_t max_block) {
  const std::uint64_t a = below(3), b = below(4);
  std::map<std::uint64_t, std::uint64_t> exc;
  for (std::uint64_t k = below(4); k > 0; --k) exc[1 + below(max_block)] = below(7);
  return FnTerm(a, b, std::move(exc));
}

FnTerm Sampler::above(const FnTerm& g, std::uint64_t max_block) {
  std::map<std::uint64_t, std::uint64_t> exc;
  for (const auto& [m, v] : g.exceptions()) exc[m] = v + below(3);
  for (std::uint64_t k = below(3); k > 0; --k) {
    const std::uint64_t m = 1 + below(max_block);
    exc.try_emplace(m, g(m) + below(3));
  }
  return FnTerm(g.slope() + below(2), g.offset() + below(3), std::move(exc));
}

S1Element Sampler::finite_compact(std::uint64_t max_block) {
  std::vector<BlockPoint> pts;
  for (std::uint64_t k = below(6); k > 0; --k) pts.push_back({1 + below(max_block), 1 + below(6)});
  const bool zero = coin();
  const bool top = coin();
  return S1Element::finite(std::move(pts), zero, top);
}

S1Element Sampler::superset(const S1Element& e, std::uint64_t max_block) {
  std::vector<BlockPoint> extra;
  for (std::uint64_t k = below(3); k > 0; --k) extra.push_back({1 + below(max_block), 1 + below(8)});
  S1Element out;
  if (below(4) == 0 || e.bound()) {
    const FnTerm g = above(e.block_maxima(), max_block);
    out = S1Element::bounded_by(g);
  } else {
    out = S1Element::finite({}, e.contains_zero() || coin(), e.contains_top() || coin());
  }
  std::vector<BlockPoint> keep(e.points().begin(), e.points().end());
  keep.insert(keep.end(), extra.begin(), extra.end());
  return out.with_points(keep);
}

// ---------------------------------------------------------------------------
// Suites

std::string SkeletonReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["samples"] = samples;
  j["blocks"] = blocks;
  j["checks"] = nlohmann::ordered_json::object();
  for (const auto& [name, count] : checks) j["checks"][name] = count;
  j["violations"] = violations;
  j["passed"] = passed();
  return j.dump(2) + "\n";
}

SkeletonReport s1_skeleton_check(std::size_t samples, std::uint64_t seed) {
  Sampler rng(seed);
  Tally t;
  for (std::size_t i = 0; i < samples; ++i) {
    const FnTerm g = rng.fn_term();
    const FnTerm h = rng.coin() ? rng.above(g) : rng.fn_term();
    const S1Element bg = S1Element::bounded_by(g), bh = S1Element::bounded_by(h);
    const std::string pair = g.to_string() + " vs " + h.to_string();

    t.check("order-iff-inclusion", dominated(g, h) == bg.subset_of(bh), pair);
    t.check("order-iff-inclusion", dominated(h, g) == bh.subset_of(bg), pair);
    t.check("injective", same_function(g, h) || !(bg.subset_of(bh) && bh.subset_of(bg)), pair);
    t.check("maxima-of-bound", same_function(bg.block_maxima(), g), g.to_string());

    std::string why;
    t.check("compact-probe", probe_compact(bg, &why), bg.to_string() + ": " + why);

    const S1Element k = rng.finite_compact();
    t.check("compact-probe", probe_compact(k, &why), k.to_string() + ": " + why);
    t.check("covering", k.subset_of(S1Element::bounded_by(k.block_maxima())), k.to_string());

    const S1Element k2 = rng.superset(k);
    t.check("sampler-superset", k.subset_of(k2), k.to_string() + " vs " + k2.to_string());
    t.check("maxima-monotone", dominated(k.block_maxima(), k2.block_maxima()),
            k.to_string() + " vs " + k2.to_string());
    t.check("compact-probe", probe_compact(k2, &why), k2.to_string() + ": " + why);
  }
  return {"s1-skeleton", seed, samples, 1, std::move(t.checks), std::move(t.violations)};
}

SkeletonReport sigma_block_check(std::size_t blocks, std::size_t samples, std::uint64_t seed) {
  if (blocks == 0 || blocks > 8) throw ContractError("sigma_block_check supports 1 to 8 blocks");
  Sampler rng(seed);
  Tally t;
  for (std::size_t i = 0; i < samples; ++i) {
    SetSide k(blocks), k2(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      switch (rng.below(4)) {
        case 0: k[b] = S1Element{}; break;
        case 1: k[b] = S1Element::bounded_by(rng.fn_term()); break;
        default: k[b] = rng.finite_compact(); break;
      }
      k2[b] = (k[b].empty() && rng.coin()) ? S1Element{} : rng.superset(k[b]);
    }
    FnSide f(blocks), g(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      if (rng.below(3) != 0) f[b] = rng.fn_term();
      if (f[b]) g[b] = rng.above(*f[b]);
      else if (rng.coin()) g[b] = rng.fn_term();
    }
    const std::string kk = set_side_text(k) + " vs " + set_side_text(k2);
    const std::string ff = fn_side_text(f) + " vs " + fn_side_text(g);

    t.check("sampler-superset", set_leq(k, k2), kk);
    t.check("phi-monotone", fn_leq(phi(k), phi(k2)), kk);
    t.check("phi-prime-monotone", !fn_leq(f, g) || set_leq(phi_prime(f), phi_prime(g)), ff);
    t.check("order-iff-inclusion", fn_leq(f, g) == set_leq(phi_prime(f), phi_prime(g)), ff);
    t.check("phi-prime-cofinal", set_leq(k, phi_prime(phi(k))), set_side_text(k));
    t.check("phi-cofinal", fn_leq(f, phi(phi_prime(f))), fn_side_text(f));
    std::string why;
    for (std::size_t b = 0; b < blocks; ++b)
      t.check("compact-probe", probe_compact(k[b], &why), k[b].to_string() + ": " + why);
  }
  return {"sigma-blocks", seed, samples, blocks, std::move(t.checks), std::move(t.violations)};
}

}  // namespace tukey
