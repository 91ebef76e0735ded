#include "aspherika/star_graph.hpp"

#include <algorithm>
#include <map>

#include "aspherika/errors.hpp"

namespace aspherika {

std::string vertex_label(Vertex v) {
  std::string s(1, v.gen);
  if (v.exp < 0) s += "^-1";
  return s;
}

std::string vertex_id(Vertex v) {
  std::string s(1, v.gen);
  if (v.exp < 0) s += "_inv";
  return s;
}

int StarGraph::vertex_index(Vertex v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || !(*it == v))
    throw ConsistencyError("vertex " + vertex_label(v) + " not in the star graph");
  return static_cast<int>(it - vertices.begin());
}

namespace {

std::vector<int> generator_positions(Word const& w) {
  std::vector<int> pos;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].kind == Letter::Kind::Generator) pos.push_back(static_cast<int>(i));
  return pos;
}

}  // namespace

StarGraph build_star_graph(Presentation const& pres, ConstraintStore const& store) {
  StarGraph g;
  // relator index -> (forward?, position) -> dart id, for pairing
  std::vector<std::map<std::pair<bool, int>, int>> dartAt(pres.relators.size());
  // pairing needs the previous generator position of each dart
  std::vector<int> prevPos;

  for (std::size_t ri = 0; ri < pres.relators.size(); ++ri) {
    Word const& w = pres.relators[ri];
    if (!exact_equal(w, cyclic_reduce(w, store)))
      throw ConsistencyError("relator is not cyclically reduced: " + str(w));
    int genCount = static_cast<int>(generator_positions(w).size());
    if (genCount == 0)
      throw ConsistencyError("relator has no generator letter: " + str(w));
    g.relatorGenCount.push_back(genCount);

    for (bool forward : {true, false}) {
      Word u = forward ? w : invert(w);
      int L = static_cast<int>(u.size());
      std::vector<int> pos = generator_positions(u);
      for (std::size_t j = 0; j < pos.size(); ++j) {
        int p = pos[j];
        int prev = pos[(j + pos.size() - 1) % pos.size()];
        Dart d;
        d.id = static_cast<int>(g.darts.size());
        d.relator = static_cast<int>(ri);
        d.forward = forward;
        d.position = p;
        d.source = Vertex{u[static_cast<std::size_t>(prev)].gen,
                          -u[static_cast<std::size_t>(prev)].exp};
        d.target = Vertex{u[static_cast<std::size_t>(p)].gen,
                          u[static_cast<std::size_t>(p)].exp};
        for (int i = (prev + 1) % L; i != p; i = (i + 1) % L)
          d.label.push_back(u[static_cast<std::size_t>(i)]);
        dartAt[ri][{forward, p}] = d.id;
        prevPos.push_back(prev);
        g.darts.push_back(std::move(d));
      }
    }
  }

  // The dart at position p (previous generator position q) of one
  // orientation is the dart at position L-1-q of the other orientation of
  // the same relator: inverting a word of length L sends letter i to letter
  // L-1-i with opposite sign, so the segment (q..p] maps onto (L-1-p..L-1-q].
  for (Dart& d : g.darts) {
    int L = static_cast<int>(pres.relators[static_cast<std::size_t>(d.relator)].size());
    auto it = dartAt[static_cast<std::size_t>(d.relator)]
                  .find({!d.forward, L - 1 - prevPos[static_cast<std::size_t>(d.id)]});
    if (it == dartAt[static_cast<std::size_t>(d.relator)].end())
      throw ConsistencyError("pairing position missing, relator not reduced?");
    d.pair = it->second;
  }
  for (Dart const& d : g.darts) {
    Dart const& p = g.darts[static_cast<std::size_t>(d.pair)];
    if (p.pair != d.id || !(p.source == d.target) || !(p.target == d.source) ||
        !exact_equal(p.label, invert(d.label)))
      throw ConsistencyError("dart pairing is not a label-inverting involution");
  }

  for (Dart const& d : g.darts) {
    if (d.pair < d.id) {
      g.darts[static_cast<std::size_t>(d.id)].cls =
          g.darts[static_cast<std::size_t>(d.pair)].cls;
      continue;
    }
    EdgeClass c;
    c.id = static_cast<int>(g.classes.size());
    c.dart = d.id;
    c.coDart = d.pair;
    c.source = d.source;
    c.target = d.target;
    c.label = d.label;
    g.darts[static_cast<std::size_t>(d.id)].cls = c.id;
    g.classes.push_back(std::move(c));
  }

  for (Dart const& d : g.darts) {
    g.vertices.push_back(d.source);
    g.vertices.push_back(d.target);
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());

  g.out.resize(g.vertices.size());
  for (Dart const& d : g.darts)
    g.out[static_cast<std::size_t>(g.vertex_index(d.source))].push_back(d.id);

  return g;
}

std::string to_dot(StarGraph const& g, std::vector<Rational> const& theta) {
  if (!theta.empty() && theta.size() != g.classes.size())
    throw ConsistencyError("weight vector does not cover every class");
  std::string out = "digraph star {\n";
  for (Vertex v : g.vertices)
    out += "  " + vertex_id(v) + " [label=\"" + vertex_label(v) + "\"];\n";
  for (EdgeClass const& c : g.classes) {
    out += "  " + vertex_id(c.source) + " -> " + vertex_id(c.target) + " [label=\"" +
           str(c.label);
    if (!theta.empty()) out += " / w=" + theta[static_cast<std::size_t>(c.id)].str();
    if (c.dart == c.coDart) out += " / self-paired";
    out += "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace aspherika
