#pragma once

#include <initializer_list>
#include <vector>

#include "pmctw/graph.hpp"

namespace pmctw::testing {

inline VertexSet S(std::initializer_list<int> members) {
  VertexSet s;
  for (int v : members) s.insert(v);
  return s;
}

inline std::vector<VertexSet> sorted(std::vector<VertexSet> family) {
  std::sort(family.begin(), family.end());
  return family;
}

}  // namespace pmctw::testing
