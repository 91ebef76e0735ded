#include "aspherika/constraints.hpp"

#include <algorithm>

namespace aspherika {

void ConstraintStore::check_name(std::string const& name) {
  if (name == "t" || name == "x" || name == "1")
    throw ConstraintError("reserved name cannot be constrained: " + name);
  if (name.empty()) throw ConstraintError("empty coefficient name");
}

void ConstraintStore::ensure(std::string const& name) {
  check_name(name);
  parent_.emplace(name, name);
}

std::string ConstraintStore::find(std::string const& name) const {
  auto it = parent_.find(name);
  if (it == parent_.end()) return name;
  std::string cur = name;
  while (true) {
    std::string const& p = parent_.at(cur);
    if (p == cur) return cur;
    cur = p;
  }
}

std::string ConstraintStore::canonical(std::string const& name) const {
  return find(name);
}

bool ConstraintStore::same_class(std::string const& a, std::string const& b) const {
  return find(a) == find(b);
}

void ConstraintStore::declare_equal(std::string const& a, std::string const& b) {
  ensure(a);
  ensure(b);
  std::string ra = find(a), rb = find(b);
  if (ra == rb) return;
  // Keep the smaller name as root so canonical() is insertion-order free.
  std::string root = std::min(ra, rb);
  std::string child = std::max(ra, rb);
  bool triv = trivial_.count(ra) || trivial_.count(rb);
  bool nontriv = nontrivial_.count(ra) || nontrivial_.count(rb);
  if (triv && nontriv)
    throw ConstraintError("contradiction: " + a + " = " + b +
                          " merges a trivial class with a nontrivial one");
  parent_[child] = root;
  trivial_.erase(ra);
  trivial_.erase(rb);
  nontrivial_.erase(ra);
  nontrivial_.erase(rb);
  if (triv) trivial_.insert(root);
  if (nontriv) nontrivial_.insert(root);
}

void ConstraintStore::declare_trivial(std::string const& name) {
  ensure(name);
  std::string r = find(name);
  if (nontrivial_.count(r))
    throw ConstraintError("contradiction: " + name + " declared trivial but its class is nontrivial");
  trivial_.insert(r);
}

void ConstraintStore::declare_nontrivial(std::string const& name) {
  ensure(name);
  std::string r = find(name);
  if (trivial_.count(r))
    throw ConstraintError("contradiction: " + name + " declared nontrivial but its class is trivial");
  nontrivial_.insert(r);
}

bool ConstraintStore::is_trivial(std::string const& name) const {
  return trivial_.count(find(name)) != 0;
}

bool ConstraintStore::is_nontrivial(std::string const& name) const {
  return nontrivial_.count(find(name)) != 0;
}

std::vector<std::string> ConstraintStore::names() const {
  std::vector<std::string> out;
  for (auto const& [k, v] : parent_) out.push_back(k);
  return out;  // map iteration is already sorted
}

std::vector<std::string> ConstraintStore::nontrivial_classes() const {
  return {nontrivial_.begin(), nontrivial_.end()};
}

}  // namespace aspherika
