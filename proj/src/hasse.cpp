#include "tukey/hasse.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "tukey/errors.hpp"

namespace tukey {

namespace {

struct EdgeStyle {
  ClassTag lower, upper;
  bool dashed;
  Condition collapse;
};

constexpr EdgeStyle kEdgeStyles[] = {
    {ClassTag::OmegaOmega, ClassTag::Omega1TimesOmegaOmega, false, Condition::BEqW1},
    {ClassTag::FinPowOmega1, ClassTag::FinPowTimesOmegaOmega, false, Condition::DEqW1},
    {ClassTag::Omega1TimesOmegaOmega, ClassTag::Stat, true, Condition::Always},
    {ClassTag::Sigma, ClassTag::FinPowTimesOmegaOmega, true, Condition::Always},
};

std::string node_id(const TukeyClass& c) {
  if (!c.is_stat()) return std::string(tag_name(c.tag()));
  std::string id = "Stat";
  for (unsigned i = 0; i < kMaxAtoms; ++i)
    if (c.atoms() & (AtomSet{1} << i)) id += "_A" + std::to_string(i + 1);
  return id;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

HasseDiagram hasse_export(const HypContext& ctx, unsigned stat_atoms) {
  if (stat_atoms > 6) throw ContractError("at most 6 atoms can be drawn");
  std::vector<TukeyClass> stats;
  if (stat_atoms >= 2)
    for (AtomSet x = 1; x < full_atoms(stat_atoms); ++x) stats.push_back(TukeyClass::stat(x, stat_atoms));
  const Reasoner r(ctx, stats);
  const auto& classes = r.nodes();
  const std::size_t n = classes.size();

  auto proved_le = [&](std::size_t i, std::size_t j) { return r.verdict(i, j).le.status == Status::Proved; };

  HasseDiagram out;
  out.context = r.context();
  std::vector<std::size_t> group(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (group[i] != n) continue;
    group[i] = out.nodes.size();
    HasseNode node;
    node.members.push_back(classes[i]);
    for (std::size_t j = i + 1; j < n; ++j)
      if (group[j] == n && proved_le(i, j) && proved_le(j, i)) {
        group[j] = out.nodes.size();
        node.members.push_back(classes[j]);
      }
    node.id = node_id(node.members.front());
    for (const auto& m : node.members) {
      if (!node.label.empty()) node.label += " =_T ";
      node.label += m.is_stat() ? "K(S), S stationary co-stationary, atoms " + format_atoms(m.atoms()) : m.notation();
    }
    out.nodes.push_back(std::move(node));
  }

  const std::size_t g = out.nodes.size();
  std::vector<std::size_t> rep(g);
  for (std::size_t i = n; i-- > 0;) rep[group[i]] = i;
  auto strictly_below = [&](std::size_t a, std::size_t b) {
    return a != b && proved_le(rep[a], rep[b]) && !proved_le(rep[b], rep[a]);
  };
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b) {
      if (!strictly_below(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < g && cover; ++c)
        if (strictly_below(a, c) && strictly_below(c, b)) cover = false;
      if (!cover) continue;
      HasseEdge e{a, b, Status::Unknown, false, ""};
      if (r.verdict(rep[a], rep[b]).ge.status == Status::Refuted) e.strictness = Status::Proved;
      for (const auto& lo : out.nodes[a].members)
        for (const auto& hi : out.nodes[b].members)
          for (const auto& s : kEdgeStyles)
            if (s.lower == lo.tag() && s.upper == hi.tag()) {
              e.dashed = s.dashed;
              if (s.collapse != Condition::Always) e.label = "=_T iff " + std::string(condition_text(s.collapse));
            }
      out.edges.push_back(std::move(e));
    }

  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = a + 1; b < g; ++b) {
      OrderVerdict v = r.verdict(rep[a], rep[b]);
      if (v.le.status == Status::Proved || v.ge.status == Status::Proved) continue;
      if (v.le.status == Status::Unknown || v.ge.status == Status::Unknown)
        out.unknown_pairs.push_back({a, b, std::move(v)});
    }
  return out;
}

std::string HasseDiagram::to_dot() const {
  std::ostringstream os;
  os << "digraph tukey {\n  rankdir=BT;\n  label=\"hypotheses: " << context.to_string() << "\";\n";
  for (const auto& node : nodes) os << "  " << node.id << " [label=\"" << escape_dot(node.label) << "\"];\n";
  for (const auto& e : edges) {
    os << "  " << nodes[e.lower].id << " -> " << nodes[e.upper].id;
    std::vector<std::string> attrs;
    if (e.dashed) attrs.push_back("style=dashed");
    if (!e.label.empty()) attrs.push_back("label=\"" + escape_dot(e.label) + "\"");
    if (e.strictness != Status::Proved) attrs.push_back("color=gray");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  for (const auto& p : unknown_pairs)
    os << "  // unknown: " << nodes[p.a].id << " vs " << nodes[p.b].id << " (le " << status_name(p.verdict.le.status)
       << ", ge " << status_name(p.verdict.ge.status) << ")\n";
  os << "}\n";
  return os.str();
}

std::string HasseDiagram::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["hypotheses"] = context.to_string();
  j["nodes"] = ordered_json::array();
  for (const auto& node : nodes) {
    ordered_json members = ordered_json::array();
    for (const auto& m : node.members) members.push_back(m.name());
    j["nodes"].push_back({{"id", node.id}, {"members", members}, {"label", node.label}});
  }
  j["edges"] = ordered_json::array();
  for (const auto& e : edges)
    j["edges"].push_back({{"lower", nodes[e.lower].id},
                          {"upper", nodes[e.upper].id},
                          {"strict", std::string(status_name(e.strictness))},
                          {"dashed", e.dashed},
                          {"label", e.label}});
  j["unknownPairs"] = ordered_json::array();
  for (const auto& p : unknown_pairs)
    j["unknownPairs"].push_back({{"a", nodes[p.a].id},
                                 {"b", nodes[p.b].id},
                                 {"le", std::string(status_name(p.verdict.le.status))},
                                 {"ge", std::string(status_name(p.verdict.ge.status))}});
  return j.dump(2) + "\n";
}

}  // namespace tukey

namespace tukey {

namespace {

std::vector<GoldenEdge> stat_edges(const std::string& below, const std::string& above, unsigned atoms) {
  std::vector<GoldenEdge> out;
  for (AtomSet x = 1; atoms >= 2 && x < full_atoms(atoms); ++x) {
    const std::string id = node_id(TukeyClass::stat(x, atoms));
    out.push_back({below, id, true, true});
    out.push_back({id, above, true, false});
  }
  return out;
}

std::vector<GoldenEdge> produced_edges(const HasseDiagram& h) {
  std::vector<GoldenEdge> out;
  for (const auto& e : h.edges)
    out.push_back({h.nodes[e.lower].id, h.nodes[e.upper].id, e.strictness == Status::Proved, e.dashed});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<GoldenEdge> reference_edges(const HypContext& raw, unsigned atoms) {
  const HypContext ctx = raw.normalized();
  std::vector<GoldenEdge> e = {
      {"One", "Omega", true, false},
      {"One", "Omega1", true, false},
      {"Omega", "OmegaTimesOmega1", true, false},
      {"Omega1", "OmegaTimesOmega1", true, false},
  };
  std::vector<GoldenEdge> tail;
  if (ctx.d_eq_w1 == Tri::True) {
    e.push_back({"OmegaTimesOmega1", "OmegaOmega", true, false});
    e.push_back({"OmegaOmega", "Sigma", true, false});
    e.push_back({"Sigma", "FinPowOmega1", true, true});
    tail = stat_edges("OmegaOmega", "FinPowOmega1", atoms);
  } else if (ctx.b_eq_w1 == Tri::True) {
    e.push_back({"OmegaTimesOmega1", "OmegaOmega", true, false});
    e.push_back({"OmegaTimesOmega1", "FinPowOmega1", true, false});
    e.push_back({"FinPowOmega1", "FinPowTimesOmegaOmega", ctx.d_eq_w1 == Tri::False, false});
    e.push_back({"OmegaOmega", "Sigma", true, false});
    e.push_back({"Sigma", "FinPowTimesOmegaOmega", true, true});
    tail = stat_edges("OmegaOmega", "FinPowTimesOmegaOmega", atoms);
  } else {
    e.push_back({"Omega", "OmegaOmega", true, false});
    e.push_back({"OmegaTimesOmega1", "FinPowOmega1", true, false});
    e.push_back({"OmegaTimesOmega1", "Omega1TimesOmegaOmega", true, false});
    e.push_back({"OmegaOmega", "Omega1TimesOmegaOmega", ctx.b_eq_w1 == Tri::False, false});
    e.push_back({"FinPowOmega1", "FinPowTimesOmegaOmega", ctx.d_eq_w1 == Tri::False, false});
    e.push_back({"Omega1TimesOmegaOmega", "Sigma", true, false});
    e.push_back({"Sigma", "FinPowTimesOmegaOmega", true, true});
    tail = stat_edges("Omega1TimesOmegaOmega", "FinPowTimesOmegaOmega", atoms);
  }
  e.insert(e.end(), tail.begin(), tail.end());
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<std::vector<std::string>> reference_merges(const HypContext& raw) {
  const HypContext ctx = raw.normalized();
  std::vector<std::vector<std::string>> out;
  if (ctx.b_eq_w1 == Tri::True) out.push_back({"OmegaOmega", "Omega1TimesOmegaOmega"});
  if (ctx.d_eq_w1 == Tri::True) out.push_back({"FinPowOmega1", "FinPowTimesOmegaOmega"});
  return out;
}

bool ReferenceDiagramReport::passed() const {
  if (!coherence_violations.empty()) return false;
  return std::all_of(contexts.begin(), contexts.end(), [](const ContextResult& c) {
    return c.missing.empty() && c.unexpected.empty() && c.merges_match;
  });
}

ReferenceDiagramReport reference_diagram_check(unsigned atoms) {
  ReferenceDiagramReport report;
  report.atoms = atoms;
  const HypContext contexts[] = {{}, {Tri::True, Tri::Unknown}, {Tri::True, Tri::True}};
  for (const auto& ctx : contexts) {
    const HasseDiagram h = hasse_export(ctx, atoms);
    const auto got = produced_edges(h);
    const auto want = reference_edges(ctx, atoms);
    ReferenceDiagramReport::ContextResult r;
    r.context = ctx.normalized();
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(r.missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(r.unexpected));
    std::vector<std::vector<std::string>> merges;
    for (const auto& node : h.nodes)
      if (node.members.size() > 1) {
        std::vector<std::string> names;
        for (const auto& m : node.members) names.push_back(m.name());
        merges.push_back(std::move(names));
      }
    r.merges_match = merges == reference_merges(ctx);
    report.contexts.push_back(std::move(r));
  }
  std::vector<TukeyClass> stats;
  for (AtomSet x = 1; atoms >= 2 && x < full_atoms(atoms); ++x) stats.push_back(TukeyClass::stat(x, atoms));
  for (const auto& ctx : all_contexts())
    for (auto& v : Reasoner(ctx, stats).coherence_violations()) report.coherence_violations.push_back(std::move(v));
  return report;
}

std::string ReferenceDiagramReport::to_json() const {
  using nlohmann::ordered_json;
  auto edges = [](const std::vector<GoldenEdge>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& e : v)
      a.push_back({{"lower", e.lower}, {"upper", e.upper}, {"strict", e.strict}, {"dashed", e.dashed}});
    return a;
  };
  ordered_json j;
  j["atoms"] = atoms;
  j["contexts"] = ordered_json::array();
  for (const auto& c : contexts)
    j["contexts"].push_back({{"hypotheses", c.context.to_string()},
                             {"missing", edges(c.missing)},
                             {"unexpected", edges(c.unexpected)},
                             {"mergesMatch", c.merges_match}});
  j["coherenceViolations"] = coherence_violations;
  j["passed"] = passed();
  return j.dump(2) + "\n";
}

}  // namespace tukey
