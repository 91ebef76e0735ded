#include "aspherika/search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "aspherika/cycles.hpp"
#include "aspherika/simplex.hpp"

namespace aspherika {

std::string search_outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::Infeasible: return "infeasible";
    case SearchOutcome::Exhausted: return "exhausted";
  }
  throw Error("unknown search outcome");
}

namespace {

using Cut = std::vector<long long>;  // class multiplicities, rhs is always 2

void bump(Cut& cut, StarGraph const& g, std::vector<int> const& darts) {
  for (int d : darts) ++cut[static_cast<std::size_t>(g.darts.at(static_cast<std::size_t>(d)).cls)];
}

Word dart_word(StarGraph const& g, int dartId) {
  Dart const& d = g.darts.at(static_cast<std::size_t>(dartId));
  EdgeClass const& c = g.classes.at(static_cast<std::size_t>(d.cls));
  return dartId == c.dart ? c.label : invert(c.label);
}

// Fundamental cycles of a rank >= 2 zero component.  Each one is a reduced
// closed walk of weight 0, so whenever its power family is not settled
// nontrivial, any certifiable assignment must lift it to weight 2; that cut
// steers the program out of wild vertices the scan cannot cover.
void wild_component_cuts(StarGraph const& g, ZeroComponent const& comp,
                         ConstraintStore const& store, std::vector<Cut>& cuts) {
  // Breadth-first spanning tree over the component.
  std::map<Vertex, std::pair<Vertex, int>> parent;  // child -> (parent, class)
  std::map<Vertex, int> depth;
  std::set<int> tree;
  std::vector<Vertex> queue{comp.vertices.front()};
  depth[queue.front()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (int cid : comp.classes) {
      if (tree.count(cid)) continue;
      EdgeClass const& c = g.classes.at(static_cast<std::size_t>(cid));
      Vertex other;
      if (c.source == v) {
        other = c.target;
      } else if (c.target == v) {
        other = c.source;
      } else {
        continue;
      }
      if (depth.count(other)) continue;
      tree.insert(cid);
      parent[other] = {v, cid};
      depth[other] = depth[v] + 1;
      queue.push_back(other);
    }
  }

  // The dart that climbs from x to its parent.
  auto up = [&](Vertex x) {
    auto const& [p, cid] = parent.at(x);
    EdgeClass const& c = g.classes.at(static_cast<std::size_t>(cid));
    return c.source == x ? c.dart : c.coDart;
  };

  for (int cid : comp.classes) {
    if (tree.count(cid)) continue;
    EdgeClass const& c = g.classes.at(static_cast<std::size_t>(cid));
    // Closing dart source -> target, then the tree path back to the source.
    std::vector<int> walk{c.dart};
    std::vector<int> fromTarget, fromSource;
    Vertex a = c.target, b = c.source;
    while (depth.at(a) > depth.at(b)) {
      fromTarget.push_back(up(a));
      a = parent.at(a).first;
    }
    while (depth.at(b) > depth.at(a)) {
      fromSource.push_back(up(b));
      b = parent.at(b).first;
    }
    while (!(a == b)) {
      fromTarget.push_back(up(a));
      a = parent.at(a).first;
      fromSource.push_back(up(b));
      b = parent.at(b).first;
    }
    walk.insert(walk.end(), fromTarget.begin(), fromTarget.end());
    for (std::size_t i = fromSource.size(); i-- > 0;)
      walk.push_back(g.darts.at(static_cast<std::size_t>(fromSource[i])).pair);

    Word label;
    for (int d : walk) label = concat(std::move(label), dart_word(g, d));
    if (classify_power_family(label, {}, store).non_admissible()) continue;
    Cut cut(g.classes.size(), 0);
    bump(cut, g, walk);
    cuts.push_back(std::move(cut));
  }
}

// A cycle whose label is not settled nontrivial can only be certified by
// weight, so its classes must sum to at least 2.  Pumped members add copies
// of the zero cycle they wind through; the member with one extra copy is the
// lightest, so it is the one that becomes the cut.
std::vector<Cut> harvest(StarGraph const& g, AsphericityReport const& rep,
                         ConstraintStore const& store) {
  std::vector<Cut> cuts;
  std::size_t nc = g.classes.size();
  if (!rep.scanned) return cuts;
  auto gamma = [&](int component) -> std::vector<int> const& {
    return rep.scan.zero.components.at(static_cast<std::size_t>(component)).gamma;
  };
  for (CycleFinding const& f : rep.scan.findings) {
    if (!f.concrete.non_admissible()) {
      Cut cut(nc, 0);
      bump(cut, g, f.darts);
      cuts.push_back(std::move(cut));
    }
    for (PumpSite const& p : f.pumps) {
      if (p.family.non_admissible()) continue;
      Cut cut(nc, 0);
      bump(cut, g, f.darts);
      bump(cut, g, gamma(p.component));
      cuts.push_back(std::move(cut));
    }
  }
  for (ComponentFamily const& fam : rep.scan.families) {
    if (fam.status.non_admissible()) continue;
    Cut cut(nc, 0);
    bump(cut, g, gamma(fam.component));
    cuts.push_back(std::move(cut));
  }
  for (ZeroComponent const& comp : rep.scan.zero.components)
    if (comp.rank >= 2) wild_component_cuts(g, comp, store, cuts);
  return cuts;
}

}  // namespace

namespace {

// a forces b when a is componentwise at most b: with theta >= 0, a's row
// already implies b's.
bool forces(Cut const& a, Cut const& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

}  // namespace

SearchResult search_weights(StarGraph const& g, int bound, ConstraintStore const& store,
                            int maxIterations) {
  SearchResult res;
  std::size_t nc = g.classes.size();

  int maxRelGen = 0;
  for (int c : g.relatorGenCount) maxRelGen = std::max(maxRelGen, c);
  // Intermediate iterates can have sprawling zero subgraphs, so cuts are
  // collected at a short bound; the requested bound is only enumerated once
  // a candidate survives the short scan.
  int workingBound = std::min(bound, std::max(maxRelGen, 8));

  LinearProgram base(static_cast<int>(nc));
  for (std::size_t j = 0; j < nc; ++j) base.objective[j] = Rational(1);
  for (std::size_t j = 0; j < nc; ++j) {
    std::vector<Rational> row(nc);
    row[j] = Rational(1);
    base.add_row(std::move(row), -1, Rational(2));
  }
  for (std::size_t ri = 0; ri < g.relatorGenCount.size(); ++ri) {
    std::vector<Rational> row(nc);
    for (Dart const& d : g.darts)
      if (d.relator == static_cast<int>(ri) && d.forward)
        row[static_cast<std::size_t>(d.cls)] = row[static_cast<std::size_t>(d.cls)] + Rational(1);
    base.add_row(std::move(row), -1, Rational(g.relatorGenCount[ri] - 2));
  }

  // Only componentwise-minimal cuts are kept: a cut implied by a kept one
  // adds rows without shrinking the feasible region.  Short cycles go first
  // so one round of long findings cannot flood the program.
  std::vector<Cut> active;
  std::size_t const perRound = 64;
  while (res.iterations < maxIterations) {
    ++res.iterations;
    LinearProgram lp = base;
    for (Cut const& cut : active) {
      std::vector<Rational> row(nc);
      for (std::size_t j = 0; j < nc; ++j) row[j] = Rational(static_cast<long>(cut[j]));
      lp.add_row(std::move(row), 1, Rational(2));
    }
    LpSolution sol = solve_lp(lp);
    if (!sol.feasible) {
      res.outcome = SearchOutcome::Infeasible;
      return res;
    }
    WeightAssignment w{sol.x};

    AsphericityReport rep = check_asphericity(g, w, workingBound, store);
    std::vector<Cut> cuts = harvest(g, rep, store);
    if (cuts.empty() && rep.verdict != Verdict::Failed && workingBound < bound) {
      rep = check_asphericity(g, w, bound, store);
      cuts = harvest(g, rep, store);
    }
    if (rep.verdict == Verdict::Aspherical) {
      res.outcome = SearchOutcome::Found;
      res.weights = w;
      res.report = std::move(rep);
      return res;
    }

    std::sort(cuts.begin(), cuts.end(), [](Cut const& a, Cut const& b) {
      long long wa = 0, wb = 0;
      for (long long v : a) wa += v;
      for (long long v : b) wb += v;
      return wa != wb ? wa < wb : a < b;
    });
    bool added = false;
    std::size_t taken = 0;
    for (Cut& cut : cuts) {
      if (taken >= perRound) break;
      bool redundant = false;
      for (Cut const& have : active)
        if (forces(have, cut)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      std::erase_if(active, [&](Cut const& have) { return forces(cut, have); });
      active.push_back(std::move(cut));
      added = true;
      ++taken;
    }
    res.cuts = static_cast<int>(active.size());
    res.report = std::move(rep);
    if (!added) {
      res.outcome = SearchOutcome::Exhausted;
      return res;
    }
  }
  res.outcome = SearchOutcome::Exhausted;
  return res;
}

}  // namespace aspherika
