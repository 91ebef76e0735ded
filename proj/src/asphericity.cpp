#include "aspherika/asphericity.hpp"

#include <map>
#include <sstream>

namespace aspherika {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Aspherical: return "ASPHERICAL";
    case Verdict::Indeterminate: return "INDETERMINATE";
    case Verdict::Failed: return "FAILED";
  }
  throw Error("unknown verdict");
}

namespace {

std::string describe_cycle(StarGraph const& g, std::vector<int> const& darts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < darts.size(); ++i) {
    Dart const& d = g.darts.at(static_cast<std::size_t>(darts[i]));
    if (i) out << " ";
    out << vertex_label(d.source) << ">" << vertex_label(d.target);
  }
  return out.str();
}

}  // namespace

AsphericityReport check_asphericity(StarGraph const& g, WeightAssignment const& w,
                                    int bound, ConstraintStore const& store) {
  AsphericityReport rep;
  rep.condition1 = condition1_totals(g, w);
  rep.negativeClasses = negative_weight_classes(g, w);

  bool failed = false;
  Rational two(2);
  for (std::size_t i = 0; i < rep.condition1.size(); ++i) {
    if (rep.condition1[i] < two) {
      failed = true;
      std::ostringstream note;
      note << "relator " << i << ": sum of (1 - theta) is " << rep.condition1[i].str()
           << ", below 2";
      rep.notes.push_back(note.str());
    }
  }
  for (int cls : rep.negativeClasses) {
    failed = true;
    std::ostringstream note;
    note << "class " << cls << " has negative weight "
         << w.of_class(cls).str();
    rep.notes.push_back(note.str());
  }

  if (!rep.negativeClasses.empty()) {
    // The cycle scan assumes theta >= 0 (repetition can only keep or raise
    // weight); with a sign violation the verdict is already settled.
    rep.verdict = Verdict::Failed;
    return rep;
  }

  rep.scan = scan_cycles(g, w, bound, store);
  rep.scanned = true;

  std::map<std::string, Word> required;
  auto take = [&](LabelStatus const& st, std::string const& where) {
    if (st.freely_trivial()) {
      failed = true;
      rep.notes.push_back(where + " reduces to the empty word");
    } else if (st.indeterminate()) {
      required.emplace(str(st.required), st.required);
    }
  };

  for (CycleFinding const& f : rep.scan.findings) {
    std::string place = "cycle [" + describe_cycle(g, f.darts) + "]";
    take(f.concrete, "label of " + place);
    for (PumpSite const& p : f.pumps) take(p.family, "pumped family at " + place);
  }
  for (ComponentFamily const& fam : rep.scan.families) {
    std::ostringstream place;
    place << "powers of the zero cycle in component " << fam.component;
    take(fam.status, place.str());
  }

  for (auto const& [key, word] : required) rep.requiredConditions.push_back(word);

  if (failed) {
    rep.verdict = Verdict::Failed;
    return rep;
  }

  bool open = !required.empty();
  if (rep.scan.wildZero) {
    open = true;
    rep.notes.push_back(
        "a zero-weight component has two or more independent cycles; bounded "
        "enumeration cannot cover its closed walks");
  }
  if (rep.scan.multiExposure) {
    open = true;
    rep.notes.push_back(
        "a short cycle crosses a zero component in several separate runs; the "
        "joint family was not classified");
  }
  if (rep.scan.guardTripped) {
    open = true;
    rep.notes.push_back(
        "cycle enumeration stopped at its step guard; the findings are a "
        "prefix of the full scan");
  } else if (rep.scan.boundBelowCompleteness) {
    open = true;
    std::ostringstream note;
    note << "cycle bound " << rep.scan.bound << " is below the completeness bound "
         << rep.scan.completenessBound << "; longer cycles were not examined";
    rep.notes.push_back(note.str());
  }

  rep.verdict = open ? Verdict::Indeterminate : Verdict::Aspherical;
  return rep;
}

}  // namespace aspherika
