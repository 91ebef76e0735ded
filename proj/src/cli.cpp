#include "aspherika/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "aspherika/asphericity.hpp"
#include "aspherika/errors.hpp"
#include "aspherika/files.hpp"
#include "aspherika/presentation.hpp"
#include "aspherika/search.hpp"
#include "aspherika/suite.hpp"
#include "json.hpp"

namespace aspherika {

namespace {

using json = nlohmann::ordered_json;

std::string status_name(LabelStatus const& s) {
  switch (s.kind) {
    case LabelStatus::Kind::FreelyTrivial:
      return "freely-trivial";
    case LabelStatus::Kind::NonAdmissible:
      return "non-admissible";
    default:
      return "indeterminate";
  }
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Aspherical:
      return 0;
    case Verdict::Indeterminate:
      return 2;
    default:
      return 3;
  }
}

// The equation, constraints and optional pattern substitution shared by
// check, search and graph.
struct Loaded {
  ConstraintStore store;
  Equation equation;
  PatternMatch match;  // valid only when substituted
  bool substituted = false;
  Presentation presentation;
  StarGraph graph;
};

Loaded load_inputs(RunConfig const& cfg) {
  if (cfg.equationPath.empty()) throw Error("an equation file is required");
  Loaded in;
  if (!cfg.constraintsPath.empty())
    load_constraints_file(cfg.constraintsPath, in.store);
  Word w = load_word_file(cfg.equationPath);
  in.equation = validate_equation(w, in.store);
  if (!cfg.pattern.empty()) {
    PatternKind kind = pattern_from_name(cfg.pattern);
    in.match = detect_pattern(in.equation, kind, in.store);
    in.substituted = true;
    in.presentation = substitute(in.equation, in.match, in.store);
  } else {
    in.presentation = from_equation(in.equation, in.store);
  }
  in.graph = build_star_graph(in.presentation, in.store);
  return in;
}

// 0 when the variable is unset.
int env_bound() {
  char const* env = std::getenv("ASPHERIKA_BOUND");
  if (!env) return 0;
  std::istringstream in(env);
  int value = 0;
  char extra = 0;
  if (!(in >> value) || in >> extra || value < 1)
    throw Error(std::string("ASPHERIKA_BOUND must be a positive integer, "
                            "got '") + env + "'");
  return value;
}

int resolve_bound(RunConfig const& cfg, StarGraph const& g) {
  if (cfg.bound != 0) {
    if (cfg.bound < 1) throw Error("the cycle bound must be at least 1");
    return cfg.bound;
  }
  if (int fromEnv = env_bound()) return fromEnv;
  return default_cycle_bound(g);
}

WeightAssignment pick_weights(RunConfig const& cfg, Loaded const& in) {
  if (!cfg.weightsPath.empty())
    return load_weights_file(cfg.weightsPath, in.graph, in.store);
  if (!in.substituted)
    throw Error("--family-weights needs --pattern");
  return family_weights(in.graph, in.equation, in.match, in.store);
}

json weights_json(StarGraph const& g, WeightAssignment const& w) {
  json arr = json::array();
  for (auto const& c : g.classes) {
    json item;
    item["class"] = c.id;
    item["from"] = vertex_label(c.source);
    item["to"] = vertex_label(c.target);
    item["label"] = str(c.label);
    item["theta"] = w.of_class(c.id).str();
    arr.push_back(item);
  }
  return arr;
}

json report_json(AsphericityReport const& rep, int bound) {
  // The scan may have enumerated less than was asked for (a wild zero
  // subgraph caps the depth); report what actually ran.
  if (rep.scanned) bound = rep.scan.bound;
  json j;
  j["verdict"] = verdict_name(rep.verdict);
  json cond = json::array();
  for (auto const& r : rep.condition1) cond.push_back(r.str());
  j["condition1"] = cond;
  j["violations"] = rep.notes;
  json cycles = json::array();
  if (rep.scanned) {
    for (auto const& f : rep.scan.findings) {
      json c;
      c["edges"] = f.darts;
      c["weight"] = f.weight.str();
      c["label"] = str(f.label);
      c["status"] = status_name(f.status);
      c["pumped"] = !f.pumps.empty();
      cycles.push_back(c);
    }
  }
  j["cycles"] = cycles;
  json req = json::array();
  for (auto const& w : rep.requiredConditions) req.push_back(str(w));
  j["requiredConditions"] = req;
  j["enumerationBound"] = bound;
  j["reducedCycleConvention"] = true;
  if (rep.scanned) j["completenessBound"] = rep.scan.completenessBound;
  return j;
}

std::string joined_rationals(std::vector<Rational> const& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].str();
  }
  return out;
}

void render_text(std::ostream& out, AsphericityReport const& rep) {
  out << "verdict: " << verdict_name(rep.verdict) << "\n";
  switch (rep.verdict) {
    case Verdict::Aspherical:
      out << "Every weight condition holds, so the relative presentation is "
             "aspherical and the equation is solvable over any torsion-free "
             "group consistent with the declared facts.\n";
      break;
    case Verdict::Indeterminate:
      out << "No violation was found, but the test could not certify every "
             "condition; see the notes below.\n";
      break;
    case Verdict::Failed:
      out << "At least one weight condition fails with these weights.\n";
      break;
  }
  out << "condition 1 totals per relator (need >= 2): "
      << joined_rationals(rep.condition1) << "\n";
  if (!rep.scanned) {
    out << "cycle scan: skipped (weights must be nonnegative first)\n";
  } else {
    out << "cycle bound: " << rep.scan.bound;
    if (!rep.scan.boundBelowCompleteness)
      out << " (complete from " << rep.scan.completenessBound << ")";
    out << "\n";
    std::size_t trivial = 0, nonadm = 0, open = 0;
    for (auto const& f : rep.scan.findings) {
      switch (f.status.kind) {
        case LabelStatus::Kind::FreelyTrivial:
          ++trivial;
          break;
        case LabelStatus::Kind::NonAdmissible:
          ++nonadm;
          break;
        default:
          ++open;
          break;
      }
    }
    out << "cycles below weight 2: " << rep.scan.findings.size()
        << " (non-admissible " << nonadm << ", indeterminate " << open
        << ", freely trivial " << trivial << ")\n";
  }
  if (!rep.notes.empty()) {
    out << "notes:\n";
    for (auto const& n : rep.notes) out << "  - " << n << "\n";
  }
  if (!rep.requiredConditions.empty()) {
    out << "the verdict becomes ASPHERICAL if each of these coefficient "
           "words is nontrivial in the group:\n";
    for (auto const& w : rep.requiredConditions) out << "  " << str(w) << "\n";
  }
}

void render_weights_text(std::ostream& out, StarGraph const& g,
                         WeightAssignment const& w) {
  out << "weights:\n";
  for (auto const& c : g.classes)
    out << "  class " << c.id << " [" << vertex_label(c.source) << " -> "
        << vertex_label(c.target) << ", label " << str(c.label)
        << "] = " << w.of_class(c.id).str() << "\n";
}

int run_check(RunConfig const& cfg, std::ostream& out) {
  if (cfg.weightsPath.empty() == !cfg.familyWeights)
    throw Error("check needs exactly one of --weights or --family-weights");
  Loaded in = load_inputs(cfg);
  WeightAssignment w = pick_weights(cfg, in);
  int bound = resolve_bound(cfg, in.graph);
  AsphericityReport rep = check_asphericity(in.graph, w, bound, in.store);
  if (cfg.json) {
    json j = report_json(rep, bound);
    j["weights"] = weights_json(in.graph, w);
    out << j.dump(2) << "\n";
  } else {
    render_text(out, rep);
  }
  return verdict_exit(rep.verdict);
}

int run_search(RunConfig const& cfg, std::ostream& out) {
  if (!cfg.weightsPath.empty() || cfg.familyWeights)
    throw Error("search derives its own weights; drop --weights and "
                "--family-weights");
  Loaded in = load_inputs(cfg);
  int bound = resolve_bound(cfg, in.graph);
  SearchResult res = search_weights(in.graph, bound, in.store);
  if (cfg.json) {
    json j = report_json(res.report, bound);
    j["search"] = {{"outcome", search_outcome_name(res.outcome)},
                   {"iterations", res.iterations},
                   {"cuts", res.cuts}};
    j["weights"] = weights_json(in.graph, res.weights);
    out << j.dump(2) << "\n";
  } else {
    out << "search: " << search_outcome_name(res.outcome) << " after "
        << res.iterations << " iteration(s), " << res.cuts
        << " active cut(s)\n";
    if (res.outcome == SearchOutcome::Found)
      render_weights_text(out, in.graph, res.weights);
    render_text(out, res.report);
  }
  if (res.outcome != SearchOutcome::Found) return 3;
  return verdict_exit(res.report.verdict);
}

int run_graph(RunConfig const& cfg, std::ostream& out) {
  Loaded in = load_inputs(cfg);
  std::vector<Rational> theta;
  if (!cfg.weightsPath.empty() || cfg.familyWeights)
    theta = pick_weights(cfg, in).theta;
  std::string dot = to_dot(in.graph, theta);
  if (cfg.dotPath.empty()) {
    out << dot;
  } else {
    std::ofstream file(cfg.dotPath);
    if (!file) throw Error("cannot write " + cfg.dotPath);
    file << dot;
  }
  return 0;
}

int run_suite(RunConfig const& cfg, std::ostream& out) {
  std::vector<FamilySpec> specs;
  if (cfg.manifestPath.empty()) {
    specs = family_grid(8, 16, 4);
  } else {
    std::ifstream file(cfg.manifestPath);
    if (!file) throw Error("cannot open " + cfg.manifestPath);
    std::ostringstream text;
    text << file.rdbuf();
    specs = parse_manifest(text.str());
  }
  int bound = cfg.bound;
  if (bound == 0) bound = env_bound();
  int aspherical = 0;
  json cases = json::array();
  for (auto const& spec : specs) {
    CaseRun res = run_case(spec, Naming::Reused, bound);
    if (res.report.verdict == Verdict::Aspherical) ++aspherical;
    if (cfg.json) {
      json c;
      c["name"] = family_name(spec);
      c["verdict"] = verdict_name(res.report.verdict);
      c["condition1"] = json::array();
      for (auto const& r : res.report.condition1)
        c["condition1"].push_back(r.str());
      c["enumerationBound"] = res.bound;
      cases.push_back(c);
    } else {
      out << family_name(spec) << ": " << verdict_name(res.report.verdict)
          << "\n";
    }
  }
  int total = static_cast<int>(specs.size());
  if (cfg.json) {
    json j;
    j["cases"] = cases;
    j["total"] = total;
    j["aspherical"] = aspherical;
    out << j.dump(2) << "\n";
  } else {
    out << "cases: " << total << ", aspherical: " << aspherical << "\n";
  }
  return aspherical == total ? 0 : 3;
}

}  // namespace

int run(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case RunConfig::Command::Check:
        return run_check(cfg, out);
      case RunConfig::Command::Search:
        return run_search(cfg, out);
      case RunConfig::Command::Graph:
        return run_graph(cfg, out);
      case RunConfig::Command::Suite:
        return run_suite(cfg, out);
    }
    throw Error("unknown command");
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace aspherika
