#include "pfaffian/matching.hpp"

#include <limits>
#include <queue>

#include "pfaffian/errors.hpp"
#include "pfaffian/scc.hpp"

namespace pfaffian {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

class HopcroftKarp {
public:
    explicit HopcroftKarp(const BipartiteGraph &g)
        : g_(g), mate_a_(g.n_a(), -1), mate_b_(g.n_b(), -1), dist_(g.n_a(), kUnreached) {}

    Matching run() {
        while (layer()) {
            for (int a = 0; a < g_.n_a(); ++a) {
                if (mate_a_[a] < 0) augment(a);
            }
        }
        std::vector<Edge> edges;
        for (int a = 0; a < g_.n_a(); ++a)
            if (mate_a_[a] >= 0) edges.push_back({a, mate_a_[a]});
        return Matching(std::move(edges));
    }

private:
    // BFS layering from the free A-vertices; returns whether a free B-vertex is reachable.
    bool layer() {
        std::queue<int> queue;
        for (int a = 0; a < g_.n_a(); ++a) {
            dist_[a] = mate_a_[a] < 0 ? 0 : kUnreached;
            if (dist_[a] == 0) queue.push(a);
        }
        free_layer_ = kUnreached;
        while (!queue.empty()) {
            int a = queue.front();
            queue.pop();
            if (dist_[a] >= free_layer_) continue;
            for (int b : g_.a_neighbors(a)) {
                int next = mate_b_[b];
                if (next < 0) {
                    if (free_layer_ == kUnreached) free_layer_ = dist_[a] + 1;
                } else if (dist_[next] == kUnreached) {
                    dist_[next] = dist_[a] + 1;
                    queue.push(next);
                }
            }
        }
        return free_layer_ != kUnreached;
    }

    // Iterative layered DFS from a free A-vertex.
    bool augment(int root) {
        std::vector<std::pair<int, int>> frames{{root, 0}};
        while (!frames.empty()) {
            auto &[a, pos] = frames.back();
            auto nbrs = g_.a_neighbors(a);
            if (pos == static_cast<int>(nbrs.size())) {
                dist_[a] = kUnreached;
                frames.pop_back();
                continue;
            }
            int b = nbrs[pos++];
            int next = mate_b_[b];
            if (next < 0) {
                if (dist_[a] + 1 != free_layer_) continue;
                for (auto &[fa, fpos] : frames) {
                    int fb = g_.a_neighbors(fa)[fpos - 1];
                    mate_a_[fa] = fb;
                    mate_b_[fb] = fa;
                }
                return true;
            }
            if (dist_[next] == dist_[a] + 1) frames.push_back({next, 0});
        }
        return false;
    }

    const BipartiteGraph &g_;
    std::vector<int> mate_a_, mate_b_, dist_;
    int free_layer_ = kUnreached;
};

void require_perfect(const BipartiteGraph &graph, const Matching &pm) {
    if (!pm.is_perfect_in(graph)) throw PreconditionError("matching is not perfect in the graph");
}

}  // namespace

Matching max_matching(const BipartiteGraph &graph) { return HopcroftKarp(graph).run(); }

bool has_perfect_matching(const BipartiteGraph &graph) {
    return graph.balanced() && max_matching(graph).size() == graph.n_a();
}

DigraphImage digraph_of(const BipartiteGraph &graph, const Matching &pm) {
    require_perfect(graph, pm);
    const int n = graph.n_a();
    DigraphImage image;
    image.vertex_a.resize(n);
    image.vertex_b = pm.mate_of_a(n);
    std::vector<int> owner_of_b = pm.mate_of_b(graph.n_b());
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v) image.vertex_a[v] = v;
    for (const Edge &e : graph.edges()) {
        if (image.vertex_b[e.a] == e.b) continue;
        arcs.push_back({e.a, owner_of_b[e.b]});
    }
    image.digraph = Digraph(n, std::move(arcs));
    image.arc_edge.resize(image.digraph.arc_count());
    for (int i = 0; i < image.digraph.arc_count(); ++i) {
        const Arc &arc = image.digraph.arc(i);
        image.arc_edge[i] = *graph.edge_index(arc.tail, image.vertex_b[arc.head]);
    }
    return image;
}

PruneResult prune_non_pm_edges(const BipartiteGraph &graph, const Matching &pm) {
    require_perfect(graph, pm);
    std::vector<int> mate_a = pm.mate_of_a(graph.n_a());
    std::vector<int> owner_of_b = pm.mate_of_b(graph.n_b());

    std::vector<std::vector<int>> successors(graph.n_a());
    for (const Edge &e : graph.edges()) {
        if (mate_a[e.a] != e.b) successors[e.a].push_back(owner_of_b[e.b]);
    }
    SccResult scc = strongly_connected_components(successors);

    PruneResult result;
    std::vector<Edge> kept;
    for (const Edge &e : graph.edges()) {
        bool in_some_pm = mate_a[e.a] == e.b || scc.component[e.a] == scc.component[owner_of_b[e.b]];
        (in_some_pm ? kept : result.removed).push_back(e);
    }
    result.kept = BipartiteGraph(graph.n_a(), graph.n_b(), std::move(kept));
    result.witness_pm = pm;
    return result;
}

bool strongly_connected_without(const Digraph &digraph, int removed) {
    const int n = digraph.vertex_count();
    std::vector<std::vector<int>> successors(n);
    for (const Arc &arc : digraph.arcs()) {
        if (arc.tail != removed && arc.head != removed) successors[arc.tail].push_back(arc.head);
    }
    SccResult scc = strongly_connected_components(successors);
    // The deleted vertex forms a singleton component of its own.
    int expected = (removed >= 0 && removed < n) ? 2 : 1;
    return scc.count <= expected;
}

bool is_k_extendable(const BipartiteGraph &graph, int k) {
    if (k != 1 && k != 2) throw PreconditionError("only k = 1 and k = 2 are supported");
    if (!is_connected(graph)) throw PreconditionError("graph is disconnected");
    Matching pm = max_matching(graph);
    if (!pm.is_perfect_in(graph)) throw PreconditionError("graph has no perfect matching");
    Digraph d = digraph_of(graph, pm).digraph;
    if (!strongly_connected_without(d, -1)) return false;
    if (k == 1) return true;
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (!strongly_connected_without(d, v)) return false;
    }
    return true;
}

}  // namespace pfaffian
