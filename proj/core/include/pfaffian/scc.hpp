#pragma once

#include <vector>

#include "pfaffian/graph.hpp"

namespace pfaffian {

struct SccResult {
    // Component id per vertex. Ids are assigned in the order Tarjan's algorithm
    // completes components, which is a reverse topological order of the
    // condensation: component 0 has no arc leaving it.
    std::vector<int> component;
    int count = 0;
};

// Iterative Tarjan; no recursion, so depth is not limited by the call stack.
SccResult strongly_connected_components(const std::vector<std::vector<int>> &successors);
SccResult strongly_connected_components(const Digraph &digraph);

}  // namespace pfaffian
