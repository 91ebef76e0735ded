#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "aspherika/errors.hpp"

namespace aspherika {

// Facts about the coefficient group: equalities between named elements and
// trivial / nontrivial declarations.  Classes are merged union-find style;
// the canonical representative of a class is its lexicographically smallest
// member, so it does not depend on insertion order.
//
// The ambient group is torsion free.  That assumption is consumed elsewhere
// (a nontrivial element has no nontrivial power equal to one); the store
// itself only tracks the declared facts and refuses contradictions.
class ConstraintStore {
 public:
  // Registers a name.  Idempotent.  Rejects the reserved names t, x, 1.
  void ensure(std::string const& name);

  void declare_equal(std::string const& a, std::string const& b);
  void declare_trivial(std::string const& name);
  void declare_nontrivial(std::string const& name);

  // Canonical representative; names never registered map to themselves.
  std::string canonical(std::string const& name) const;

  bool same_class(std::string const& a, std::string const& b) const;

  // Known facts only: both return false for a class with no declaration.
  bool is_trivial(std::string const& name) const;
  bool is_nontrivial(std::string const& name) const;

  bool known(std::string const& name) const { return parent_.count(name) != 0; }

  // All registered names, sorted.
  std::vector<std::string> names() const;

  // Canonical representatives of classes with a nontrivial fact, sorted.
  std::vector<std::string> nontrivial_classes() const;

 private:
  static void check_name(std::string const& name);
  std::string find(std::string const& name) const;

  std::map<std::string, std::string> parent_;
  std::set<std::string> trivial_;     // keyed by current root
  std::set<std::string> nontrivial_;  // keyed by current root
};

}  // namespace aspherika
