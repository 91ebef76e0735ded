#include "aspherika/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "aspherika/errors.hpp"

namespace aspherika {

WeightAssignment uniform_weights(StarGraph const& g, Rational value) {
  WeightAssignment w;
  w.theta.assign(g.classes.size(), value);
  return w;
}

std::vector<Rational> condition1_totals(StarGraph const& g, WeightAssignment const& w) {
  if (w.theta.size() != g.classes.size())
    throw ConsistencyError("weight vector does not cover every class");
  std::vector<Rational> totals(g.relatorGenCount.size(), Rational(0));
  for (Dart const& d : g.darts)
    if (d.forward)
      totals[static_cast<std::size_t>(d.relator)] += Rational(1) - w.of_class(d.cls);
  return totals;
}

std::vector<int> negative_weight_classes(StarGraph const& g, WeightAssignment const& w) {
  if (w.theta.size() != g.classes.size())
    throw ConsistencyError("weight vector does not cover every class");
  std::vector<int> bad;
  for (EdgeClass const& c : g.classes)
    if (w.of_class(c.id).is_negative()) bad.push_back(c.id);
  return bad;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// The one cycle of a unicyclic component, as a dart path.  Leaf pruning
// strips the trees hanging off the cycle; the remainder has every degree
// exactly 2 (a loop counts twice), so a greedy walk closes it uniquely.
std::vector<int> extract_cycle(StarGraph const& g, std::vector<int> const& classIds) {
  std::map<int, int> degree;   // vertex index -> remaining degree
  std::map<int, bool> alive;   // class id -> still present
  auto endpoints = [&](int cid) {
    EdgeClass const& c = g.classes[static_cast<std::size_t>(cid)];
    return std::pair<int, int>(g.vertex_index(c.source), g.vertex_index(c.target));
  };
  for (int cid : classIds) {
    alive[cid] = true;
    auto [a, b] = endpoints(cid);
    degree[a] += 1;
    degree[b] += 1;
  }
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (int cid : classIds) {
      if (!alive[cid]) continue;
      auto [a, b] = endpoints(cid);
      if (a != b && (degree[a] == 1 || degree[b] == 1)) {
        alive[cid] = false;
        degree[a] -= 1;
        degree[b] -= 1;
        pruned = true;
      }
    }
  }

  int startClass = -1;
  for (int cid : classIds)
    if (alive[cid] && (startClass == -1 || cid < startClass)) startClass = cid;
  if (startClass == -1) throw ConsistencyError("unicyclic component lost its cycle");

  std::vector<int> path;
  EdgeClass const& first = g.classes[static_cast<std::size_t>(startClass)];
  int startV = g.vertex_index(first.source);
  int cur = startV;
  int remaining = static_cast<int>(std::count_if(
      classIds.begin(), classIds.end(), [&](int cid) { return alive[cid]; }));
  while (remaining > 0) {
    int chosen = -1;
    for (int cid : classIds)
      if (alive[cid]) {
        auto [a, b] = endpoints(cid);
        if (a == cur || b == cur) {
          chosen = cid;
          break;
        }
      }
    if (chosen == -1) throw ConsistencyError("cycle walk stranded");
    EdgeClass const& c = g.classes[static_cast<std::size_t>(chosen)];
    int dart = g.vertex_index(c.source) == cur ? c.dart : c.coDart;
    path.push_back(dart);
    cur = g.vertex_index(g.darts[static_cast<std::size_t>(dart)].target);
    alive[chosen] = false;
    --remaining;
  }
  if (cur != startV) throw ConsistencyError("cycle walk did not close");
  return path;
}

}  // namespace

ZeroAnalysis analyze_zero_subgraph(StarGraph const& g, WeightAssignment const& w) {
  std::vector<int> zeroClasses;
  for (EdgeClass const& c : g.classes)
    if (w.of_class(c.id).is_zero()) zeroClasses.push_back(c.id);

  Dsu dsu(g.vertices.size());
  for (int cid : zeroClasses) {
    EdgeClass const& c = g.classes[static_cast<std::size_t>(cid)];
    dsu.unite(g.vertex_index(c.source), g.vertex_index(c.target));
  }

  // Components keyed by root, in order of their smallest vertex.
  std::map<int, ZeroComponent> byRoot;
  for (int cid : zeroClasses) {
    EdgeClass const& c = g.classes[static_cast<std::size_t>(cid)];
    byRoot[dsu.find(g.vertex_index(c.source))].classes.push_back(cid);
  }
  for (std::size_t vi = 0; vi < g.vertices.size(); ++vi) {
    auto it = byRoot.find(dsu.find(static_cast<int>(vi)));
    if (it != byRoot.end()) it->second.vertices.push_back(g.vertices[vi]);
  }

  ZeroAnalysis out;
  for (auto& [root, comp] : byRoot) out.components.push_back(std::move(comp));
  std::sort(out.components.begin(), out.components.end(),
            [](ZeroComponent const& a, ZeroComponent const& b) {
              return a.vertices.front() < b.vertices.front();
            });
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    ZeroComponent& comp = out.components[i];
    comp.id = static_cast<int>(i);
    comp.rank = static_cast<int>(comp.classes.size()) -
                static_cast<int>(comp.vertices.size()) + 1;
    if (comp.rank == 1) comp.gamma = extract_cycle(g, comp.classes);
    if (comp.rank >= 2) out.wild = true;
  }
  return out;
}

}  // namespace aspherika
