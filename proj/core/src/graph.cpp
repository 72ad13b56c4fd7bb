#include "pfaffian/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "pfaffian/errors.hpp"

namespace pfaffian {

BipartiteGraph::BipartiteGraph(int n_a, int n_b, std::vector<Edge> edges)
    : n_a_(n_a), n_b_(n_b), edges_(std::move(edges)) {
    if (n_a < 0 || n_b < 0) throw PreconditionError("negative side size");
    for (const Edge &e : edges_) {
        if (e.a < 0 || e.a >= n_a || e.b < 0 || e.b >= n_b) {
            throw PreconditionError("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                    ") out of range");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw PreconditionError("duplicate edge");
    }

    a_offset_.assign(n_a + 1, 0);
    a_adj_.reserve(edges_.size());
    b_adj_.assign(n_b, {});
    b_adj_edges_.assign(n_b, {});
    for (int i = 0; i < edge_count(); ++i) {
        const Edge &e = edges_[i];
        ++a_offset_[e.a + 1];
        a_adj_.push_back(e.b);
        b_adj_[e.b].push_back(e.a);
        b_adj_edges_[e.b].push_back(i);
    }
    for (int a = 0; a < n_a; ++a) a_offset_[a + 1] += a_offset_[a];
}

std::span<const int> BipartiteGraph::a_neighbors(int a) const {
    return std::span<const int>(a_adj_).subspan(a_offset_[a], a_offset_[a + 1] - a_offset_[a]);
}

std::optional<int> BipartiteGraph::edge_index(int a, int b) const {
    if (a < 0 || a >= n_a_ || b < 0 || b >= n_b_) return std::nullopt;
    auto first = a_adj_.begin() + a_offset_[a];
    auto last = a_adj_.begin() + a_offset_[a + 1];
    auto it = std::lower_bound(first, last, b);
    if (it == last || *it != b) return std::nullopt;
    return static_cast<int>(it - a_adj_.begin());
}

std::vector<int> BipartiteGraph::unified_neighbors(int vertex) const {
    std::vector<int> out;
    if (is_a(vertex)) {
        for (int b : a_neighbors(vertex)) out.push_back(n_a_ + b);
    } else {
        auto nb = b_neighbors(vertex - n_a_);
        out.assign(nb.begin(), nb.end());
    }
    return out;
}

bool VertexSet::empty() const {
    return std::none_of(a_.begin(), a_.end(), [](bool x) { return x; }) &&
           std::none_of(b_.begin(), b_.end(), [](bool x) { return x; });
}

VertexSet VertexSet::complement() const {
    VertexSet out(static_cast<int>(a_.size()), static_cast<int>(b_.size()));
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = !a_[i];
    for (std::size_t i = 0; i < b_.size(); ++i) out.b_[i] = !b_[i];
    return out;
}

Orientation flip_vertices(const BipartiteGraph &graph, const Orientation &orientation, const VertexSet &flipped) {
    if (!orientation.fits(graph)) throw PreconditionError("orientation does not match graph");
    Orientation out = orientation;
    for (int i = 0; i < graph.edge_count(); ++i) {
        const Edge &e = graph.edge(i);
        if (flipped.has_a(e.a) != flipped.has_b(e.b)) out.set(i, reversed(orientation[i]));
    }
    return out;
}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
}

bool Matching::contains(const Edge &e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool Matching::is_matching_in(const BipartiteGraph &graph) const {
    std::vector<bool> used_a(graph.n_a(), false);
    std::vector<bool> used_b(graph.n_b(), false);
    for (const Edge &e : edges_) {
        if (!graph.has_edge(e.a, e.b) || used_a[e.a] || used_b[e.b]) return false;
        used_a[e.a] = used_b[e.b] = true;
    }
    return true;
}

bool Matching::is_perfect_in(const BipartiteGraph &graph) const {
    return graph.balanced() && size() == graph.n_a() && is_matching_in(graph);
}

std::vector<int> Matching::mate_of_a(int n_a) const {
    std::vector<int> mate(n_a, -1);
    for (const Edge &e : edges_) mate[e.a] = e.b;
    return mate;
}

std::vector<int> Matching::mate_of_b(int n_b) const {
    std::vector<int> mate(n_b, -1);
    for (const Edge &e : edges_) mate[e.b] = e.a;
    return mate;
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw PreconditionError("negative vertex count");
    for (const Arc &arc : arcs_) {
        if (arc.tail < 0 || arc.tail >= n || arc.head < 0 || arc.head >= n) {
            throw PreconditionError("arc out of range");
        }
        if (arc.tail == arc.head) throw PreconditionError("loops are not allowed");
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
        throw PreconditionError("duplicate arc");
    }
    offset_.assign(n + 1, 0);
    for (const Arc &arc : arcs_) {
        ++offset_[arc.tail + 1];
        heads_.push_back(arc.head);
    }
    for (int v = 0; v < n; ++v) offset_[v + 1] += offset_[v];
}

std::span<const int> Digraph::successors(int v) const {
    return std::span<const int>(heads_).subspan(offset_[v], offset_[v + 1] - offset_[v]);
}

std::optional<int> Digraph::arc_index(int tail, int head) const {
    if (tail < 0 || tail >= n_) return std::nullopt;
    auto first = heads_.begin() + offset_[tail];
    auto last = heads_.begin() + offset_[tail + 1];
    auto it = std::lower_bound(first, last, head);
    if (it == last || *it != head) return std::nullopt;
    return static_cast<int>(it - heads_.begin());
}

template <typename Entries>
SquareMatrix<Entries>::SquareMatrix(const std::vector<std::vector<int>> &rows)
    : SquareMatrix(static_cast<int>(rows.size())) {
    for (int r = 0; r < n_; ++r) {
        if (static_cast<int>(rows[r].size()) != n_) throw PreconditionError("matrix is not square");
        for (int c = 0; c < n_; ++c) set(r, c, rows[r][c]);
    }
}

template <typename Entries>
void SquareMatrix<Entries>::set(int r, int c, int value) {
    if (value < Entries::lo || value > 1) {
        throw PreconditionError("matrix entry " + std::to_string(value) + " out of range");
    }
    v_[static_cast<std::size_t>(r) * n_ + c] = static_cast<std::int8_t>(value);
}

template class SquareMatrix<detail::ZeroOneEntries>;
template class SquareMatrix<detail::SignEntries>;

ZeroOneMatrix support(const SignMatrix &m) {
    ZeroOneMatrix out(m.order());
    for (int r = 0; r < m.order(); ++r)
        for (int c = 0; c < m.order(); ++c) out.set(r, c, m(r, c) != 0 ? 1 : 0);
    return out;
}

BipartiteGraph graph_of_matrix(const ZeroOneMatrix &m) {
    std::vector<Edge> edges;
    for (int r = 0; r < m.order(); ++r)
        for (int c = 0; c < m.order(); ++c)
            if (m(r, c) == 1) edges.push_back({r, c});
    return BipartiteGraph(m.order(), m.order(), std::move(edges));
}

ZeroOneMatrix matrix_of_graph(const BipartiteGraph &graph) {
    if (!graph.balanced()) throw PreconditionError("graph sides are unbalanced");
    ZeroOneMatrix out(graph.n_a());
    for (const Edge &e : graph.edges()) out.set(e.a, e.b, 1);
    return out;
}

MappedGraph induced_subgraph(const BipartiteGraph &graph, const std::vector<bool> &keep_a,
                             const std::vector<bool> &keep_b) {
    MappedGraph out;
    std::vector<int> local_a(graph.n_a(), -1);
    std::vector<int> local_b(graph.n_b(), -1);
    for (int a = 0; a < graph.n_a(); ++a) {
        if (keep_a[a]) {
            local_a[a] = static_cast<int>(out.a_map.size());
            out.a_map.push_back(a);
        }
    }
    for (int b = 0; b < graph.n_b(); ++b) {
        if (keep_b[b]) {
            local_b[b] = static_cast<int>(out.b_map.size());
            out.b_map.push_back(b);
        }
    }
    std::vector<Edge> edges;
    for (const Edge &e : graph.edges()) {
        if (local_a[e.a] >= 0 && local_b[e.b] >= 0) edges.push_back({local_a[e.a], local_b[e.b]});
    }
    out.graph = BipartiteGraph(static_cast<int>(out.a_map.size()), static_cast<int>(out.b_map.size()),
                               std::move(edges));
    return out;
}

namespace {

// Component label per unified vertex, labels assigned in order of smallest member.
std::vector<int> component_labels(const BipartiteGraph &graph, int &count) {
    const int n = graph.vertex_count();
    std::vector<int> label(n, -1);
    count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        label[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : graph.unified_neighbors(v)) {
                if (label[w] < 0) {
                    label[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return label;
}

}  // namespace

std::vector<MappedGraph> connected_components(const BipartiteGraph &graph) {
    int count = 0;
    std::vector<int> label = component_labels(graph, count);
    std::vector<MappedGraph> out;
    out.reserve(count);
    for (int c = 0; c < count; ++c) {
        std::vector<bool> keep_a(graph.n_a()), keep_b(graph.n_b());
        for (int a = 0; a < graph.n_a(); ++a) keep_a[a] = label[a] == c;
        for (int b = 0; b < graph.n_b(); ++b) keep_b[b] = label[graph.unified_b(b)] == c;
        out.push_back(induced_subgraph(graph, keep_a, keep_b));
    }
    return out;
}

bool is_connected(const BipartiteGraph &graph) {
    int count = 0;
    component_labels(graph, count);
    return count <= 1;
}

std::vector<std::array<int, 3>> fano_lines() {
    std::vector<std::array<int, 3>> lines = {
        {0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5},
    };
    int cover[7][7] = {};
    for (const auto &line : lines)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                ++cover[line[i]][line[j]];
                ++cover[line[j]][line[i]];
            }
    for (int p = 0; p < 7; ++p)
        for (int q = p + 1; q < 7; ++q)
            if (cover[p][q] != 1) throw std::logic_error("Fano lines do not cover every pair exactly once");
    return lines;
}

const BipartiteGraph &heawood_graph() {
    static const BipartiteGraph heawood = [] {
        std::vector<Edge> edges;
        auto lines = fano_lines();
        for (int l = 0; l < 7; ++l)
            for (int p : lines[l]) edges.push_back({p, l});
        return BipartiteGraph(7, 7, std::move(edges));
    }();
    return heawood;
}

std::optional<int> girth(const BipartiteGraph &graph) {
    const int n = graph.vertex_count();
    std::optional<int> best;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : graph.unified_neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push(w);
                } else if (w != parent[v]) {
                    int length = dist[v] + dist[w] + 1;
                    if (!best || length < *best) best = length;
                }
            }
        }
    }
    return best;
}

}  // namespace pfaffian
