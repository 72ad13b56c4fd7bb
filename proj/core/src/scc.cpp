#include "pfaffian/scc.hpp"

#include <algorithm>

namespace pfaffian {

namespace {

template <typename Successors>
SccResult tarjan(int n, Successors &&successors_of) {
    SccResult result;
    result.component.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    // Call frames: (vertex, position in its successor list).
    std::vector<std::pair<int, int>> frames;
    int next_index = 0;

    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!frames.empty()) {
            auto &[v, pos] = frames.back();
            const auto &succ = successors_of(v);
            if (pos < static_cast<int>(succ.size())) {
                int w = succ[pos++];
                if (index[w] < 0) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            int done = v;
            frames.pop_back();
            if (!frames.empty()) {
                int parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    result.component[w] = result.count;
                } while (w != done);
                ++result.count;
            }
        }
    }
    return result;
}

}  // namespace

SccResult strongly_connected_components(const std::vector<std::vector<int>> &successors) {
    return tarjan(static_cast<int>(successors.size()),
                  [&](int v) -> const std::vector<int> & { return successors[v]; });
}

SccResult strongly_connected_components(const Digraph &digraph) {
    return tarjan(digraph.vertex_count(), [&](int v) { return digraph.successors(v); });
}

}  // namespace pfaffian
