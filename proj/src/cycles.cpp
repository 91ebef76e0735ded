#include "aspherika/cycles.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <set>

#include "aspherika/errors.hpp"

namespace aspherika {

namespace {

constexpr long long kStepGuard = 5'000'000;

std::vector<int> min_rotation(std::vector<int> const& v) {
  std::vector<int> best = v;
  std::vector<int> cur = v;
  for (std::size_t s = 1; s < v.size(); ++s) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

struct Enumerator {
  StarGraph const& g;
  WeightAssignment const& w;
  int bound;
  std::size_t cap;
  long long steps = 0;
  bool tripped = false;
  std::set<std::vector<int>> found;
  std::vector<int> path;
  Rational weight = Rational(0);

  // Every cycle is collected from the start dart equal to its smallest dart
  // id, so the search from d may only use ids >= d.
  void run() {
    for (Dart const& d : g.darts) {
      if (tripped) return;
      if (!(w.of_dart(g, d.id) < Rational(2))) continue;
      path.assign(1, d.id);
      weight = w.of_dart(g, d.id);
      extend(d.id);
    }
  }

  void extend(int start) {
    if (++steps > kStepGuard) {
      tripped = true;
      return;
    }
    Dart const& last = g.darts[static_cast<std::size_t>(path.back())];
    if (last.target == g.darts[static_cast<std::size_t>(start)].source &&
        last.pair != path.front()) {
      found.insert(min_rotation(path));
      if (found.size() >= cap) {
        tripped = true;
        return;
      }
    }
    if (static_cast<int>(path.size()) == bound) return;
    for (int next : g.darts_from(last.target)) {
      if (tripped) return;
      if (next < start || next == last.pair) continue;
      Rational stepped = weight + w.of_dart(g, next);
      if (!(stepped < Rational(2))) continue;
      path.push_back(next);
      std::swap(weight, stepped);
      extend(start);
      std::swap(weight, stepped);
      path.pop_back();
    }
  }
};

// tripped == nullptr demands a complete scan (BoundError at the step guard);
// otherwise the flag reports whether the result is only a prefix, and the
// number of findings kept is capped so a wild configuration cannot flood
// memory before the step guard fires.
std::vector<std::vector<int>> enumerate_cycles(StarGraph const& g,
                                               WeightAssignment const& w,
                                               int bound, bool* tripped) {
  if (!negative_weight_classes(g, w).empty())
    throw ConsistencyError("cycle enumeration needs nonnegative weights");
  int longest = *std::max_element(g.relatorGenCount.begin(), g.relatorGenCount.end());
  if (bound < longest)
    throw BoundError("cycle bound " + std::to_string(bound) +
                     " does not cover the longest relator (" + std::to_string(longest) + ")");
  Enumerator e{g, w, bound, tripped ? std::size_t{4096} : SIZE_MAX};
  e.run();
  if (e.tripped && !tripped)
    throw BoundError("cycle enumeration exceeded the step guard");
  if (tripped) *tripped = e.tripped;
  std::vector<std::vector<int>> out(e.found.begin(), e.found.end());
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<std::vector<int>> enumerate_short_cycles(StarGraph const& g,
                                                     WeightAssignment const& w, int bound) {
  return enumerate_cycles(g, w, bound, nullptr);
}

int default_cycle_bound(StarGraph const& g) {
  int longest = 0;
  for (int c : g.relatorGenCount) longest = std::max(longest, c);
  return std::max(2 * static_cast<int>(g.classes.size()), longest);
}

namespace {

bool is_pure_power(Word const& w, ConstraintStore const& store, std::string* base,
                   int* sign) {
  if (w.empty()) return false;
  *base = store.canonical(w.front().name);
  *sign = w.front().exp;
  for (Letter const& l : w)
    if (store.canonical(l.name) != *base || l.exp != *sign) return false;
  return true;
}

}  // namespace

LabelStatus classify_power_family(Word const& core, Word const& flank,
                                  ConstraintStore const& store) {
  Word c = free_reduce(core, store);
  Word m = free_reduce(flank, store);
  if (c.empty()) return label_status(m, store);

  // c^j m is conjugate to chat^j (conj^-1 m conj) for c = conj chat conj^-1.
  Word conj;
  Word chat = cyclic_reduce_tracked(c, store, &conj);
  m = free_reduce(concat(concat(invert(conj), m), conj), store);
  if (chat.empty()) return label_status(m, store);

  // Absorb whole copies of chat^-1 at either end of m into the exponent:
  // chat^j (chat^-1 m') and chat^j (m' chat^-1) are rotations of
  // chat^(j-1) m'.  Afterwards m eats less than one copy from the power.
  Word chatInv = invert(chat);
  std::size_t L = chat.size();
  int jOffset = 0;
  auto strip = [&]() {
    if (m.size() >= L &&
        words_equal(Word(m.begin(), m.begin() + static_cast<long>(L)), chatInv, store)) {
      m.erase(m.begin(), m.begin() + static_cast<long>(L));
      return true;
    }
    if (m.size() >= L &&
        words_equal(Word(m.end() - static_cast<long>(L), m.end()), chatInv, store)) {
      m.erase(m.end() - static_cast<long>(L), m.end());
      return true;
    }
    return false;
  };
  while (strip()) ++jOffset;

  auto member = [&](int jp) {
    Word out;
    Word const& rep = jp >= 0 ? chat : chatInv;
    for (int i = 0; i < std::abs(jp); ++i) out = concat(out, rep);
    return concat(out, m);
  };

  std::vector<LabelStatus> concrete;
  for (int jp = 1 - jOffset; jp <= 2; ++jp)
    concrete.push_back(label_status(member(jp), store));

  // For jp >= 2 the genuinely new members are certified in one stroke when
  // chat is a power of a single nontrivial letter: then member(jp) reduces
  // to a v power whose exponent moves by |chat| per step away from zero, so
  // no later member can collapse.
  std::string v;
  int sigma = 0;
  bool tailCertified = false;
  LabelStatus r2 = label_status(member(2), store);
  if (is_pure_power(chat, store, &v, &sigma) && r2.non_admissible() && r2.base == v) {
    LabelStatus r3 = label_status(member(3), store);
    tailCertified = r3.non_admissible() && r3.base == v &&
                    r3.power - r2.power == sigma * static_cast<int>(L) &&
                    (r2.power > 0) == (sigma > 0);
  }

  for (LabelStatus const& s : concrete)
    if (s.freely_trivial()) return s;
  bool allNonAdm = std::all_of(concrete.begin(), concrete.end(),
                               [](LabelStatus const& s) { return s.non_admissible(); });
  if (allNonAdm && tailCertified) return {LabelStatus::Kind::NonAdmissible, v, r2.power, {}};
  for (LabelStatus const& s : concrete)
    if (s.indeterminate()) return s;
  return {LabelStatus::Kind::Indeterminate, "", 0, cyclic_reduce(member(3), store)};
}

namespace {

int severity(LabelStatus const& s) {
  switch (s.kind) {
    case LabelStatus::Kind::FreelyTrivial: return 2;
    case LabelStatus::Kind::Indeterminate: return 1;
    case LabelStatus::Kind::NonAdmissible: return 0;
  }
  return 0;
}

struct ChainLink {
  int next = 0;
  int component = 0;
  std::size_t cycleLen = 0;
};

Word dart_labels(StarGraph const& g, std::vector<int> const& darts, std::size_t from,
                 std::size_t count) {
  Word out;
  for (std::size_t i = 0; i < count; ++i) {
    Word const& piece =
        g.darts[static_cast<std::size_t>(darts[(from + i) % darts.size()])].label;
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

}  // namespace

CycleScan scan_cycles(StarGraph const& g, WeightAssignment const& w, int bound,
                      ConstraintStore const& store) {
  CycleScan scan;
  scan.zero = analyze_zero_subgraph(g, w);
  scan.wildZero = scan.zero.wild;

  // A wild zero subgraph voids every certificate, so enumerating past the
  // shortest legal bound only burns steps; cap the walk there.
  if (scan.zero.wild) {
    int longest = *std::max_element(g.relatorGenCount.begin(),
                                    g.relatorGenCount.end());
    bound = std::min(bound, std::max(longest, 1));
  }
  scan.bound = bound;

  // Walking a zero cycle: dart -> its successor, for both directions.
  std::map<int, ChainLink> chain;
  for (ZeroComponent const& comp : scan.zero.components) {
    if (comp.rank != 1) continue;
    std::vector<int> const& C = comp.gamma;
    std::size_t p = C.size();
    std::vector<int> R;
    for (std::size_t i = p; i-- > 0;)
      R.push_back(g.darts[static_cast<std::size_t>(C[i])].pair);
    for (std::size_t i = 0; i < p; ++i) {
      chain[C[i]] = {C[(i + 1) % p], comp.id, p};
      chain[R[i]] = {R[(i + 1) % p], comp.id, p};
    }

    ComponentFamily fam;
    fam.component = comp.id;
    Word core = dart_labels(g, C, 0, p);
    fam.core = cyclic_reduce(core, store);
    fam.status = classify_power_family(core, {}, store);
    scan.families.push_back(std::move(fam));
  }

  bool tripped = false;
  for (std::vector<int> const& darts : enumerate_cycles(g, w, bound, &tripped)) {
    CycleFinding f;
    f.darts = darts;
    f.weight = Rational(0);
    for (int id : darts) f.weight += w.of_dart(g, id);
    f.label = dart_labels(g, darts, 0, darts.size());
    f.concrete = label_status(f.label, store);
    f.status = f.concrete;

    std::size_t n = darts.size();
    std::vector<bool> linked(n);  // dart i continues a zero cycle into i+1
    for (std::size_t i = 0; i < n; ++i) {
      auto it = chain.find(darts[i]);
      linked[i] = it != chain.end() && it->second.next == darts[(i + 1) % n];
    }

    std::vector<std::pair<std::size_t, std::size_t>> runs;  // (start, length)
    if (std::all_of(linked.begin(), linked.end(), [](bool b) { return b; })) {
      runs.emplace_back(0, n);
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (!chain.count(darts[i]) || linked[(i + n - 1) % n]) continue;
        std::size_t len = 1;
        while (linked[(i + len - 1) % n]) ++len;
        runs.emplace_back(i, len);
      }
    }
    for (auto const& [at, len] : runs) {
      std::size_t p = chain.at(darts[at]).cycleLen;
      if (len < p) continue;  // never winds fully, nothing to pump
      PumpSite site;
      site.at = at;
      site.runLen = len;
      site.component = chain.at(darts[at]).component;
      site.family = classify_power_family(dart_labels(g, darts, at, p),
                                          dart_labels(g, darts, at, n), store);
      if (severity(site.family) > severity(f.status)) f.status = site.family;
      f.pumps.push_back(std::move(site));
    }
    if (f.pumps.size() >= 2) {
      f.multiExposure = true;
      scan.multiExposure = true;
    }
    scan.findings.push_back(std::move(f));
  }

  // Beyond this length every weight < 2 walk contains a zero cycle wound
  // twice in a row, so it arises from a shorter finding by pumping: at most
  // jmax positive darts fit under the weight cap, each zero stretch between
  // them is a reduced walk through one zero component, and a pure zero walk
  // is a power of a single cycle.
  Rational dmin(0);
  bool havePositive = false;
  for (Rational const& th : w.theta)
    if (!th.is_zero() && !th.is_negative() && (!havePositive || th < dmin)) {
      dmin = th;
      havePositive = true;
    }
  long long jmax = 0;
  if (havePositive) {
    Rational q = Rational(2) / dmin;
    Int fl = q.num() / q.den();
    if (Rational(fl) == q) fl -= 1;
    if (fl > Int(1'000'000'000)) {
      jmax = 1'000'000'000;
      scan.boundBelowCompleteness = true;
    } else {
      jmax = fl.convert_to<long long>();
    }
  }
  long long maxZeroBase = 0, maxCycleLen = 0;
  for (ZeroComponent const& comp : scan.zero.components) {
    long long cl = comp.rank == 1 ? static_cast<long long>(comp.gamma.size()) : 0;
    maxZeroBase = std::max(maxZeroBase, 2 * static_cast<long long>(comp.classes.size()) + cl);
    maxCycleLen = std::max(maxCycleLen, cl);
  }
  scan.completenessBound = jmax * (1 + maxZeroBase) + maxCycleLen;
  if (bound < scan.completenessBound) scan.boundBelowCompleteness = true;
  if (tripped) {
    scan.guardTripped = true;
    scan.boundBelowCompleteness = true;
  }
  return scan;
}

}  // namespace aspherika
