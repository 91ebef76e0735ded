#include "aspherika/files.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "aspherika/errors.hpp"
#include "aspherika/rational.hpp"

namespace aspherika {

namespace {

std::vector<std::string> read_lines(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> tokens_of(std::string const& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string tok;
  while (in >> tok) toks.push_back(tok);
  return toks;
}

std::optional<Vertex> vertex_from_label(std::string const& text) {
  for (char gen : {'t', 'x'})
    for (int exp : {1, -1})
      if (text == vertex_label(Vertex{gen, exp})) return Vertex{gen, exp};
  return std::nullopt;
}

}  // namespace

Word load_word_file(std::string const& path) {
  std::string joined;
  for (auto const& line : read_lines(path)) {
    joined += line;
    joined += ' ';
  }
  return parse_word(joined);
}

void load_constraints_file(std::string const& path, ConstraintStore& store) {
  auto lines = read_lines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    auto toks = tokens_of(lines[i]);
    if (toks.empty()) continue;
    int lineNo = static_cast<int>(i) + 1;
    try {
      if (toks.size() == 3 && toks[1] == "=" && toks[2] == "1") {
        store.declare_trivial(toks[0]);
      } else if (toks.size() == 3 && toks[1] == "=") {
        store.declare_equal(toks[0], toks[2]);
      } else if (toks.size() == 3 && toks[1] == "!=" && toks[2] == "1") {
        store.declare_nontrivial(toks[0]);
      } else {
        throw ParseError("expected 'a = b', 'a = 1' or 'a != 1'", lineNo);
      }
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(e.what(), lineNo);
    }
  }
}

WeightAssignment load_weights_file(std::string const& path,
                                   StarGraph const& g,
                                   ConstraintStore const& store) {
  auto lines = read_lines(path);
  std::optional<Rational> defaultValue;
  std::vector<std::optional<Rational>> theta(g.classes.size());

  auto resolve = [&](std::string const& selector, int lineNo) {
    int found = -1;
    if (auto gt = selector.find('>'); gt != std::string::npos) {
      auto from = vertex_from_label(selector.substr(0, gt));
      auto to = vertex_from_label(selector.substr(gt + 1));
      if (!from || !to)
        throw ParseError("bad vertex pair '" + selector + "'", lineNo);
      for (auto const& c : g.classes) {
        if (!free_reduce(c.label, store).empty()) continue;
        bool match = (c.source == *from && c.target == *to) ||
                     (c.source == *to && c.target == *from);
        if (!match) continue;
        if (found >= 0)
          throw ResolutionError("'" + selector +
                                "' names more than one class");
        found = c.id;
      }
    } else {
      Word want = parse_word(selector);
      Word wantInv = invert(want);
      for (auto const& c : g.classes) {
        if (!words_equal(c.label, want, store) &&
            !words_equal(c.label, wantInv, store))
          continue;
        if (found >= 0)
          throw ResolutionError("'" + selector +
                                "' names more than one class");
        found = c.id;
      }
    }
    if (found < 0)
      throw ResolutionError("'" + selector + "' names no class");
    return found;
  };

  for (size_t i = 0; i < lines.size(); ++i) {
    auto toks = tokens_of(lines[i]);
    if (toks.empty()) continue;
    int lineNo = static_cast<int>(i) + 1;
    try {
      if (toks.size() == 3 && toks[0] == "default" && toks[1] == "=") {
        if (defaultValue)
          throw ParseError("default given twice", lineNo);
        defaultValue = Rational::parse(toks[2]);
      } else if (toks.size() >= 4 && toks[0] == "class" &&
                 toks[toks.size() - 2] == "=") {
        std::string selector;
        for (size_t j = 1; j + 2 < toks.size(); ++j) {
          if (j > 1) selector += ' ';
          selector += toks[j];
        }
        int id = resolve(selector, lineNo);
        if (theta[id])
          throw ResolutionError("class " + std::to_string(id) +
                                " assigned twice");
        theta[id] = Rational::parse(toks.back());
      } else {
        throw ParseError("expected 'class <which> = p/q' or 'default = p/q'",
                         lineNo);
      }
    } catch (ParseError const&) {
      throw;
    } catch (ResolutionError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(e.what(), lineNo);
    }
  }

  WeightAssignment w;
  w.theta.resize(g.classes.size(), Rational(0));
  for (size_t id = 0; id < theta.size(); ++id) {
    if (theta[id]) {
      w.theta[id] = *theta[id];
    } else if (defaultValue) {
      w.theta[id] = *defaultValue;
    } else {
      throw ResolutionError("class " + std::to_string(id) + " (" +
                            str(g.classes[id].label) +
                            ") has no weight and no default is given");
    }
  }
  return w;
}

}  // namespace aspherika
