#include "aspherika/suite.hpp"

#include <algorithm>
#include <sstream>

#include "aspherika/cycles.hpp"

namespace aspherika {

namespace {

int anchor_min(PatternKind kind) { return kind == PatternKind::P1 ? 4 : 3; }

int anchor_max(PatternKind kind, int n) {
  switch (kind) {
    case PatternKind::P1: return n;
    case PatternKind::P2: return n - 1;
    case PatternKind::P3: return n - 2;
  }
  throw Error("unknown pattern kind");
}

std::string coeff_name(int index) { return "a" + std::to_string(index); }

}  // namespace

void validate_family(FamilySpec const& spec) {
  if (spec.ks.empty()) throw Error("family needs at least one anchor");
  for (std::size_t i = 1; i < spec.ks.size(); ++i)
    if (spec.ks[i] != spec.ks[i - 1] + 3)
      throw Error("anchors must step by exactly 3, got " + std::to_string(spec.ks[i - 1]) +
                  " then " + std::to_string(spec.ks[i]));
  int k1 = spec.ks.front(), km = spec.ks.back();
  if (k1 < anchor_min(spec.kind))
    throw Error("first anchor " + std::to_string(k1) + " below " +
                std::to_string(anchor_min(spec.kind)) + " for " + pattern_name(spec.kind));
  if (km > anchor_max(spec.kind, spec.n))
    throw Error("last anchor " + std::to_string(km) + " beyond " +
                std::to_string(anchor_max(spec.kind, spec.n)) + " for " +
                pattern_name(spec.kind) + " with n=" + std::to_string(spec.n));
}

std::string family_name(FamilySpec const& spec) {
  std::ostringstream out;
  out << pattern_name(spec.kind) << " n=" << spec.n << " k=";
  for (std::size_t i = 0; i < spec.ks.size(); ++i) {
    if (i) out << ",";
    out << spec.ks[i];
  }
  return out.str();
}

GeneratedCase generate_case(FamilySpec const& spec, Naming naming) {
  validate_family(spec);
  int n = spec.n;
  std::vector<int> shape(static_cast<std::size_t>(n) + 1, 1);
  std::vector<int> nameOf(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) nameOf[static_cast<std::size_t>(i)] = i;

  auto ws = window_shape(spec.kind);
  for (int k : spec.ks) {
    int s = window_start(spec.kind, k);
    for (int j = 0; j < 3; ++j) shape[static_cast<std::size_t>(s + j)] = ws[static_cast<std::size_t>(j)];
  }
  if (spec.kind == PatternKind::P3) shape[static_cast<std::size_t>(spec.ks.back() + 1)] = -1;

  GeneratedCase out;
  int s1 = window_start(spec.kind, spec.ks.front());
  for (std::size_t wi = 1; wi < spec.ks.size(); ++wi) {
    int s = window_start(spec.kind, spec.ks[wi]);
    if (naming == Naming::Reused) {
      nameOf[static_cast<std::size_t>(s + 1)] = s1 + 1;
      nameOf[static_cast<std::size_t>(s + 2)] = s1 + 2;
    } else {
      out.equalities.emplace_back(coeff_name(s + 1), coeff_name(s1 + 1));
      out.equalities.emplace_back(coeff_name(s + 2), coeff_name(s1 + 2));
    }
  }

  std::ostringstream text;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) text << " ";
    text << coeff_name(nameOf[static_cast<std::size_t>(i)]) << " t";
    if (shape[static_cast<std::size_t>(i)] < 0) text << "^-1";
  }
  out.equationText = text.str();
  return out;
}

namespace {

void zero_block(WeightAssignment& w, StarGraph const& g, Equation const& eq, int index,
                ConstraintStore const& store) {
  Word target = eq.block(index);
  Word inv = invert(target);
  int found = -1;
  for (EdgeClass const& c : g.classes) {
    if (!words_equal(c.label, target, store) && !words_equal(c.label, inv, store)) continue;
    if (found >= 0)
      throw ResolutionError("coefficient " + str(target) + " labels more than one class");
    found = c.id;
  }
  if (found < 0) throw ResolutionError("coefficient " + str(target) + " labels no class");
  w.theta[static_cast<std::size_t>(found)] = Rational(0);
}

void zero_identity(WeightAssignment& w, StarGraph const& g, Vertex a, Vertex b,
                   ConstraintStore const& store) {
  int found = -1;
  for (EdgeClass const& c : g.classes) {
    bool ends = (c.source == a && c.target == b) || (c.source == b && c.target == a);
    if (!ends || !free_reduce(c.label, store).empty()) continue;
    if (found >= 0)
      throw ResolutionError("trivially labeled edge " + vertex_label(a) + " to " +
                            vertex_label(b) + " is not unique");
    found = c.id;
  }
  if (found < 0)
    throw ResolutionError("no trivially labeled edge between " + vertex_label(a) + " and " +
                          vertex_label(b));
  w.theta[static_cast<std::size_t>(found)] = Rational(0);
}

}  // namespace

WeightAssignment family_weights(StarGraph const& g, Equation const& eq,
                                PatternMatch const& match, ConstraintStore const& store) {
  WeightAssignment w = uniform_weights(g, Rational(1));
  int k1 = match.ks.front(), km = match.ks.back();
  switch (match.kind) {
    case PatternKind::P1:
      zero_block(w, g, eq, k1 - 1, store);
      zero_block(w, g, eq, k1 - 2, store);
      zero_block(w, g, eq, k1 - 3, store);
      zero_block(w, g, eq, km, store);
      break;
    case PatternKind::P2:
      zero_block(w, g, eq, k1 - 1, store);
      zero_block(w, g, eq, k1 - 2, store);
      zero_block(w, g, eq, km + 1, store);
      zero_identity(w, g, Vertex{'x', 1}, Vertex{'t', -1}, store);
      break;
    case PatternKind::P3:
      zero_block(w, g, eq, k1, store);
      zero_block(w, g, eq, k1 - 2, store);
      zero_block(w, g, eq, km + 2, store);
      zero_identity(w, g, Vertex{'t', 1}, Vertex{'x', -1}, store);
      break;
  }
  return w;
}

CaseRun run_case(FamilySpec const& spec, Naming naming, int bound) {
  CaseRun r;
  r.spec = spec;
  GeneratedCase gen = generate_case(spec, naming);
  r.equationText = gen.equationText;
  for (auto const& [left, right] : gen.equalities) r.store.declare_equal(left, right);
  r.equation = validate_equation(parse_word(r.equationText), r.store);
  r.match = detect_pattern(r.equation, spec.kind, r.store);
  r.presentation = substitute(r.equation, r.match, r.store);
  r.graph = build_star_graph(r.presentation, r.store);
  r.weights = family_weights(r.graph, r.equation, r.match, r.store);
  r.bound = bound > 0 ? bound : default_cycle_bound(r.graph);
  r.report = check_asphericity(r.graph, r.weights, r.bound, r.store);
  return r;
}

std::vector<FamilySpec> family_grid(int nMin, int nMax, int mMax) {
  std::vector<FamilySpec> specs;
  for (PatternKind kind : {PatternKind::P1, PatternKind::P2, PatternKind::P3})
    for (int n = nMin; n <= nMax; ++n)
      for (int m = 1; m <= mMax; ++m)
        for (int k1 = anchor_min(kind); k1 + 3 * (m - 1) <= anchor_max(kind, n); ++k1) {
          FamilySpec spec;
          spec.kind = kind;
          spec.n = n;
          for (int i = 0; i < m; ++i) spec.ks.push_back(k1 + 3 * i);
          specs.push_back(std::move(spec));
        }
  return specs;
}

std::vector<FamilySpec> parse_manifest(std::string const& text) {
  std::vector<FamilySpec> specs;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kindTok;
    if (!(ls >> kindTok)) continue;
    try {
      FamilySpec spec;
      spec.kind = pattern_from_name(kindTok);
      std::string nTok, kTok, extra;
      if (!(ls >> nTok >> kTok) || (ls >> extra))
        throw Error("expected \"" + kindTok + " n=<int> k=<int>[,<int>...]\"");
      if (nTok.rfind("n=", 0) != 0) throw Error("expected n=<int>, got " + nTok);
      spec.n = std::stoi(nTok.substr(2));
      if (kTok.rfind("k=", 0) != 0) throw Error("expected k=<int>[,<int>...], got " + kTok);
      std::istringstream kin(kTok.substr(2));
      std::string piece;
      while (std::getline(kin, piece, ',')) spec.ks.push_back(std::stoi(piece));
      validate_family(spec);
      specs.push_back(std::move(spec));
    } catch (ParseError const&) {
      throw;
    } catch (std::exception const& e) {
      throw ParseError(e.what(), lineNo);
    }
  }
  return specs;
}

}  // namespace aspherika
