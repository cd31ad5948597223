#pragma once

#include <string>

#include "lrs/rootsys.hpp"
#include "lrs/weyl.hpp"

namespace lrs::test {

inline RootSystemPtr roots(const std::string& name) { return RootSystem::build(GroupType::parse(name)); }

inline WeylGroupPtr group(const std::string& name) { return WeylGroup::build(roots(name)); }

/// Index of the element with the given 1-based word, e.g. "1.2" or "e".
inline std::size_t at(const WeylGroup& g, const std::string& word) {
  return g.index_of(WeylElement::from_word(g.root_system(), parse_word(word, g.rs().rank())));
}

inline WeylElement elem(const RootSystemPtr& rs, const std::string& word) {
  return WeylElement::from_word(rs, parse_word(word, rs->rank()));
}

/// Subset of positive roots from a list of indices.
inline RootSubset subset(std::initializer_list<int> idx) {
  RootSubset s;
  for (int i : idx) s.insert(i);
  return s;
}

}  // namespace lrs::test
