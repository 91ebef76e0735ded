#include "aspherika/word.hpp"

#include <algorithm>
#include <cctype>

namespace aspherika {

bool exact_equal(Letter const& a, Letter const& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Letter::Kind::Generator: return a.gen == b.gen && a.exp == b.exp;
    case Letter::Kind::Coefficient: return a.name == b.name && a.exp == b.exp;
    case Letter::Kind::Identity: return true;
  }
  return false;
}

bool exact_equal(Word const& a, Word const& b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(),
                    [](Letter const& x, Letter const& y) { return exact_equal(x, y); });
}

bool cancels(Letter const& a, Letter const& b, ConstraintStore const& store) {
  if (a.kind != b.kind || a.exp + b.exp != 0) return false;
  if (a.kind == Letter::Kind::Generator) return a.gen == b.gen;
  if (a.kind == Letter::Kind::Coefficient)
    return store.same_class(a.name, b.name);
  return false;  // identities are erased, not cancelled
}

bool erasable(Letter const& l, ConstraintStore const& store) {
  if (l.kind == Letter::Kind::Identity) return true;
  return l.kind == Letter::Kind::Coefficient && store.is_trivial(l.name);
}

Word invert(Word const& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(Word a, Word const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word free_reduce(Word const& w, ConstraintStore const& store) {
  Word out;
  for (Letter const& l : w) {
    if (erasable(l, store)) continue;
    if (!out.empty() && cancels(out.back(), l, store))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(Word const& w, ConstraintStore const& store) {
  return cyclic_reduce_tracked(w, store, nullptr);
}

Word cyclic_reduce_tracked(Word const& w, ConstraintStore const& store, Word* conjugator) {
  Word core = free_reduce(w, store);
  Word conj;
  while (core.size() >= 2 && cancels(core.front(), core.back(), store)) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  if (conjugator) *conjugator = std::move(conj);
  return core;
}

namespace {

// Canonical form of a letter for comparisons under the store.
struct Key {
  int tag;
  std::string sym;
  int exp;

  bool operator==(Key const& o) const {
    return tag == o.tag && sym == o.sym && exp == o.exp;
  }
};

Key key_of(Letter const& l, ConstraintStore const& store) {
  if (l.kind == Letter::Kind::Generator) return {0, std::string(1, l.gen), l.exp};
  if (l.kind == Letter::Kind::Coefficient) return {1, store.canonical(l.name), l.exp};
  return {2, "", 1};
}

std::vector<Key> keys_of(Word const& w, ConstraintStore const& store) {
  std::vector<Key> out;
  out.reserve(w.size());
  for (Letter const& l : w) out.push_back(key_of(l, store));
  return out;
}

}  // namespace

bool words_equal(Word const& a, Word const& b, ConstraintStore const& store) {
  return keys_of(free_reduce(a, store), store) == keys_of(free_reduce(b, store), store);
}

bool cyclically_equivalent(Word const& a, Word const& b, ConstraintStore const& store,
                           bool allow_inversion) {
  Word ra = cyclic_reduce(a, store);
  auto matches = [&](Word const& cand) {
    Word rc = cyclic_reduce(cand, store);
    if (ra.size() != rc.size()) return false;
    if (ra.empty()) return true;
    auto ka = keys_of(ra, store);
    auto kc = keys_of(rc, store);
    for (std::size_t shift = 0; shift < kc.size(); ++shift) {
      bool ok = true;
      for (std::size_t i = 0; i < ka.size() && ok; ++i)
        ok = ka[i] == kc[(i + shift) % kc.size()];
      if (ok) return true;
    }
    return false;
  };
  if (matches(b)) return true;
  return allow_inversion && matches(invert(b));
}

std::string str(Letter const& l) {
  std::string base;
  switch (l.kind) {
    case Letter::Kind::Generator: base = std::string(1, l.gen); break;
    case Letter::Kind::Coefficient: base = l.name; break;
    case Letter::Kind::Identity: return "1";
  }
  if (l.exp < 0) base += "^-1";
  return base;
}

std::string str(Word const& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += str(w[i]);
  }
  return out;
}

namespace {

bool valid_name(std::string const& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Letter parse_letter(std::string const& tok, std::size_t pos) {
  std::string base = tok;
  int exp = 1;
  auto caret = tok.find('^');
  if (caret != std::string::npos) {
    if (tok.substr(caret) != "^-1")
      throw ParseError("only the exponent ^-1 is allowed, got '" + tok + "'", pos);
    base = tok.substr(0, caret);
    exp = -1;
  }
  if (base == "1") {
    if (exp != 1) throw ParseError("the identity letter takes no exponent", pos);
    return Letter::identity();
  }
  if (base == "t" || base == "x") return Letter::generator(base[0], exp);
  if (!valid_name(base)) throw ParseError("bad letter '" + tok + "'", pos);
  return Letter::coefficient(base, exp);
}

}  // namespace

Word parse_word(std::string const& text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.push_back(parse_letter(text.substr(start, i - start), start + 1));
  }
  return out;
}

LabelStatus label_status(Word const& w, ConstraintStore const& store) {
  for (Letter const& l : w)
    if (l.kind == Letter::Kind::Generator)
      throw ConsistencyError("label words may not contain generators: " + str(w));
  Word r = cyclic_reduce(w, store);
  if (r.empty()) return {LabelStatus::Kind::FreelyTrivial, "", 0, {}};
  std::string base = store.canonical(r.front().name);
  int sign = r.front().exp;
  bool pure = true;
  for (Letter const& l : r)
    if (store.canonical(l.name) != base || l.exp != sign) {
      pure = false;
      break;
    }
  // A reduced pure power v^k with v declared nontrivial: in a torsion-free
  // group no such power is trivial.
  if (pure && store.is_nontrivial(base))
    return {LabelStatus::Kind::NonAdmissible, base, sign * static_cast<int>(r.size()), {}};
  return {LabelStatus::Kind::Indeterminate, "", 0, r};
}

}  // namespace aspherika
