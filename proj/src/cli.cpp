#include "tukey/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tukey/calibre_suite.hpp"
#include "tukey/errors.hpp"
#include "tukey/hasse.hpp"
#include "tukey/oracle.hpp"
#include "tukey/poset_suites.hpp"
#include "tukey/skeleton.hpp"

namespace tukey {

namespace {

using nlohmann::ordered_json;

enum Exit { kOk = 0, kInput = 1, kDescriptor = 2, kUndecided = 3, kBudget = 4, kSuiteFailed = 5 };

struct Options {
  std::vector<std::string> hyp;
  bool require_decision = false;
  std::string format = "json";
  unsigned atoms = 3;
  std::string suite;
  unsigned max_size = 4;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::uint64_t max_maps = 0;
  unsigned blocks = 5;
  bool include_nondirected = false;
  std::vector<std::string> operands;
};

HypContext parse_hyp(const std::vector<std::string>& flags) {
  HypContext ctx;
  auto set = [](Tri& slot, Tri value, const std::string& flag) {
    if (slot != Tri::Unknown && slot != value) throw ContractError("conflicting hypotheses at --hyp " + flag);
    slot = value;
  };
  for (const auto& f : flags) {
    if (f == "b=w1") set(ctx.b_eq_w1, Tri::True, f);
    else if (f == "b>w1") set(ctx.b_eq_w1, Tri::False, f);
    else if (f == "d=w1") set(ctx.d_eq_w1, Tri::True, f);
    else if (f == "d>w1") set(ctx.d_eq_w1, Tri::False, f);
    else throw ContractError("unknown hypothesis '" + f + "' (use b=w1, b>w1, d=w1 or d>w1)");
  }
  return ctx.normalized();
}

// A comparand: a class name or a space.
struct Operand {
  TukeyClass cls;
  std::vector<std::string> citations;
};

Operand resolve_class(const std::string& text) {
  if (auto c = parse_class_name(text)) return {*c, {}};
  const ParsedSpace ps = parse_space(text);
  return {classify(ps.space), {classification_reason(ps.space)}};
}

ordered_json judgement_json(const Judgement& j) {
  ordered_json o{{"status", std::string(status_name(j.status))}};
  if (j.status != Status::Unknown) o["citation"] = j.citation;
  return o;
}

ordered_json class_record(const std::string& input, const TukeyClass& c, const HypContext& ctx,
                          std::vector<std::string> citations) {
  ordered_json j;
  j["input"] = input;
  j["class"] = c.name();
  j["notation"] = c.notation();
  j["hypotheses"] = ctx.to_string();
  j["cofinality"] = std::string(card_name(cofinality(c)));
  j["additivity"] = std::string(card_name(additivity(c)));
  j["spectrum"] = spectrum(c).to_string();
  ordered_json cal = ordered_json::object();
  for (CalibreKind k : kAllCalibres) {
    cal[std::string(calibre_name(k))] = std::string(tri_name(calibre(c, k, ctx)));
    if (auto cond = calibre_condition(c, k); !cond.empty())
      citations.push_back("calibre " + std::string(calibre_name(k)) + " " + std::string(cond));
  }
  j["calibres"] = cal;
  citations.emplace_back(cofinality_reason(c));
  citations.emplace_back(additivity_reason(c));
  citations.emplace_back(spectrum_reason(c));
  j["citations"] = citations;
  return j;
}

void require_valid_space(const Space& s) {
  if (const auto* d = std::get_if<UnboundedDescriptor>(&s)) require_valid(*d);
}

int cmd_classify(const Options& o, bool full, std::ostream& out) {
  const HypContext ctx = parse_hyp(o.hyp);
  const std::string& text = o.operands.at(0);
  if (full)
    if (auto c = parse_class_name(text)) {
      out << class_record(text, *c, ctx, {}).dump(2) << "\n";
      return kOk;
    }
  const ParsedSpace ps = parse_space(text);
  require_valid_space(ps.space);
  const TukeyClass c = classify(ps.space);
  ordered_json j = class_record(text, c, ctx, {classification_reason(ps.space)});
  j["metricDominated"] = metric_dominated(ps.space);
  if (full) {
    j["metricCovers"] = metric_covers(ps.space);
    j["posetSize"] = std::string(poset_size_name(poset_size(ps.space)));
  }
  j["canonical"] = ps.canonical;
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_size(const Options& o, std::ostream& out) {
  const std::string& text = o.operands.at(0);
  const ParsedSpace ps = parse_space(text);
  require_valid_space(ps.space);
  const PosetSize s = poset_size(ps.space);
  std::string why;
  switch (s) {
    case PosetSize::Finite: why = "K(S) is finite when S is finite"; break;
    case PosetSize::Omega: why = "|K(S)| = w when S is discrete and countably infinite"; break;
    case PosetSize::Omega1: why = "|K(S)| = w1 when S is discrete and uncountable"; break;
    case PosetSize::Continuum: why = "|K(S)| = c when S is not discrete"; break;
  }
  ordered_json j{{"input", text}, {"size", std::string(poset_size_name(s))}, {"citations", {why}}};
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const HypContext ctx = parse_hyp(o.hyp);
  const Operand a = resolve_class(o.operands.at(0));
  const Operand b = resolve_class(o.operands.at(1));
  const OrderVerdict v = order(a.cls, b.cls, ctx);
  std::string relation;
  if (v.equivalent()) relation = "equivalent";
  else if (v.le.status == Status::Proved && v.ge.status == Status::Refuted) relation = "strictly-below";
  else if (v.ge.status == Status::Proved && v.le.status == Status::Refuted) relation = "strictly-above";
  else if (v.le.status == Status::Refuted && v.ge.status == Status::Refuted) relation = "incomparable";
  else relation = "undecided";
  ordered_json j;
  j["lhs"] = {{"input", o.operands[0]}, {"class", a.cls.name()}};
  j["rhs"] = {{"input", o.operands[1]}, {"class", b.cls.name()}};
  j["hypotheses"] = ctx.to_string();
  j["le"] = judgement_json(v.le);
  j["ge"] = judgement_json(v.ge);
  j["relation"] = relation;
  std::vector<std::string> cites = a.citations;
  cites.insert(cites.end(), b.citations.begin(), b.citations.end());
  j["citations"] = cites;
  out << j.dump(2) << "\n";
  const bool unknown = v.le.status == Status::Unknown || v.ge.status == Status::Unknown;
  return o.require_decision && unknown ? kUndecided : kOk;
}

int cmd_diagram(const Options& o, std::ostream& out) {
  const HypContext ctx = parse_hyp(o.hyp);
  const HasseDiagram h = hasse_export(ctx, o.atoms);
  out << (o.format == "dot" ? h.to_dot() : h.to_json());
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const std::uint64_t budget = o.max_maps ? o.max_maps : default_map_budget();
  if (o.suite == "duality" || o.suite == "monotonicity") {
    const DualityReport r = duality_check(o.max_size, o.include_nondirected, 0, budget);
    out << r.to_json();
    if (o.suite == "duality") return r.counterexamples.empty() || o.include_nondirected ? kOk : kSuiteFailed;
    return r.monotonicity_violations.empty() ? kOk : kSuiteFailed;
  }
  if (o.suite == "calibre") {
    const CalibreReport r = calibre_check(std::min(o.max_size, 3U));
    out << r.to_json();
    return r.passed() ? kOk : kSuiteFailed;
  }
  if (o.suite == "s1-skeleton") {
    const SkeletonReport r = s1_skeleton_check(o.samples, o.seed);
    out << r.to_json();
    return r.passed() ? kOk : kSuiteFailed;
  }
  if (o.suite == "sigma-blocks") {
    const SkeletonReport r = sigma_block_check(o.blocks, o.samples, o.seed);
    out << r.to_json();
    return r.passed() ? kOk : kSuiteFailed;
  }
  const ReferenceDiagramReport r = reference_diagram_check(o.atoms);
  out << r.to_json();
  return r.passed() ? kOk : kSuiteFailed;
}

}  // namespace

ParsedSpace parse_space(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (is_builtin_descriptor_name(t)) {
    const UnboundedDescriptor d = builtin_descriptor(t);
    return {d, d.to_string()};
  }
  if (t.substr(0, 9) == "unbounded") {
    const UnboundedDescriptor d = parse_descriptor(text);
    return {d, d.to_string()};
  }
  const BoundedSetExpr b = parse_set_expr(text);
  return {normalize(b), b.to_string()};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tukey classes of K(S) for S a subset of w1, and finite relative Tukey checks", "tukey"};
  app.require_subcommand(1);
  Options o;
  auto add_hyp = [&](CLI::App* sub) {
    sub->add_option("--hyp", o.hyp, "Hypothesis: b=w1, b>w1, d=w1 or d>w1 (repeatable)");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Tukey class of K(S) with its invariants");
  classify_cmd->add_option("space", o.operands, "Set expression, unbounded(...) descriptor or builtin")
      ->required()->expected(1)->allow_extra_args(false);
  add_hyp(classify_cmd);

  auto* inv_cmd = app.add_subcommand("invariants", "Invariants of a class or of K(S)");
  inv_cmd->add_option("space", o.operands, "Class name or space")
      ->required()->expected(1)->allow_extra_args(false);
  add_hyp(inv_cmd);

  auto* cmp_cmd = app.add_subcommand("compare", "Three-valued Tukey comparison");
  cmp_cmd->add_option("operands", o.operands, "Two class names or spaces")
      ->required()->expected(2)->allow_extra_args(false);
  cmp_cmd->add_flag("--require-decision", o.require_decision, "Exit 3 when a direction is Unknown");
  add_hyp(cmp_cmd);

  auto* diag_cmd = app.add_subcommand("diagram", "Hasse diagram of the classes");
  diag_cmd->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  diag_cmd->add_option("--atoms", o.atoms, "Atoms of the stationary partition drawn (0..6)")
      ->check(CLI::Range(0U, 6U));
  add_hyp(diag_cmd);

  auto* size_cmd = app.add_subcommand("size", "Cardinality of K(S)");
  size_cmd->add_option("space", o.operands, "Space")->required()->expected(1)->allow_extra_args(false);

  auto* check_cmd = app.add_subcommand("check", "Run a verification suite");
  check_cmd->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"duality", "monotonicity", "calibre", "s1-skeleton", "sigma-blocks", "figure1"}));
  check_cmd->add_option("--max-size", o.max_size, "Largest poset size")->check(CLI::Range(1U, 5U));
  check_cmd->add_option("--samples", o.samples, "Samples per property");
  check_cmd->add_option("--seed", o.seed, "Sampler seed");
  check_cmd->add_option("--max-maps", o.max_maps, "Map budget of exhaustive searches");
  check_cmd->add_option("--blocks", o.blocks, "Blocks for sigma-blocks")->check(CLI::Range(1U, 8U));
  check_cmd->add_option("--atoms", o.atoms, "Atoms of the stationary partition in the diagram check")->check(CLI::Range(0U, 6U));
  check_cmd->add_flag("--include-nondirected", o.include_nondirected,
                      "Duality over all posets; disagreements are reported, not failed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, false, out);
    if (inv_cmd->parsed()) return cmd_classify(o, true, out);
    if (cmp_cmd->parsed()) return cmd_compare(o, out);
    if (diag_cmd->parsed()) return cmd_diagram(o, out);
    if (size_cmd->parsed()) return cmd_size(o, out);
    return cmd_check(o, out);
  } catch (const InvalidDescriptor& e) {
    err << "error: inconsistent descriptor\n";
    for (const auto& v : e.violations())
      err << "  rule " << v.rule << ": " << v.message << (v.citation.empty() ? "" : " (" + v.citation + ")") << "\n";
    return kDescriptor;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  }
}

}  // namespace tukey
