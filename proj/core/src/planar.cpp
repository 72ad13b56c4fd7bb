#include "pfaffian/planar.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include "pfaffian/errors.hpp"

namespace pfaffian {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

int other_end(const BipartiteGraph &graph, int edge, int from) {
    const Edge &e = graph.edge(edge);
    return from == e.a ? graph.unified_b(e.b) : e.a;
}

int dart_id(const BipartiteGraph &graph, const Dart &d) { return 2 * d.edge + (graph.is_a(d.from) ? 0 : 1); }

// Component label per unified vertex.
std::vector<int> labels(const BipartiteGraph &graph, int &count) {
    std::vector<int> label(graph.vertex_count(), -1);
    count = 0;
    for (int s = 0; s < graph.vertex_count(); ++s) {
        if (label[s] >= 0) continue;
        std::vector<int> stack{s};
        label[s] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : graph.unified_neighbors(v))
                if (label[w] < 0) {
                    label[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return label;
}

}  // namespace

int Embedding::plane_face_count() const {
    int with_edges = static_cast<int>(std::count_if(outer_face.begin(), outer_face.end(), [](int f) { return f >= 0; }));
    return static_cast<int>(faces.size()) - with_edges + 1;
}

std::optional<Embedding> planar_embed(const BipartiteGraph &graph) {
    const int n = graph.vertex_count();
    BoostGraph bg(n);
    for (int i = 0; i < graph.edge_count(); ++i) {
        const Edge &e = graph.edge(i);
        auto [edge, inserted] = boost::add_edge(e.a, graph.unified_b(e.b), bg);
        boost::put(boost::edge_index, bg, edge, i);
    }
    std::vector<std::vector<BoostEdge>> storage(n);
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg)));
    if (!planar) return std::nullopt;

    Embedding emb;
    emb.rotation.resize(n);
    for (int v = 0; v < n; ++v)
        for (const BoostEdge &e : storage[v]) emb.rotation[v].push_back(boost::get(boost::edge_index, bg, e));

    // Position of each edge in the rotation at each of its ends.
    std::vector<int> pos_at_a(graph.edge_count()), pos_at_b(graph.edge_count());
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < static_cast<int>(emb.rotation[v].size()); ++k)
            (graph.is_a(v) ? pos_at_a : pos_at_b)[emb.rotation[v][k]] = k;

    std::vector<int> label = labels(graph, emb.component_count);
    emb.outer_face.assign(emb.component_count, -1);

    std::vector<bool> used(2 * graph.edge_count(), false);
    for (int v = 0; v < n; ++v) {
        for (int start_edge : emb.rotation[v]) {
            Dart start{start_edge, v};
            if (used[dart_id(graph, start)]) continue;
            std::vector<Dart> face;
            Dart d = start;
            do {
                used[dart_id(graph, d)] = true;
                face.push_back(d);
                int w = other_end(graph, d.edge, d.from);
                const auto &rot = emb.rotation[w];
                int k = graph.is_a(w) ? pos_at_a[d.edge] : pos_at_b[d.edge];
                d = Dart{rot[(k + 1) % rot.size()], w};
            } while (dart_id(graph, d) != dart_id(graph, start));
            int c = label[v];
            if (emb.outer_face[c] < 0) emb.outer_face[c] = static_cast<int>(emb.faces.size());
            emb.face_component.push_back(c);
            emb.faces.push_back(std::move(face));
        }
    }

    // Euler's formula per component guards the rotation system we were handed.
    std::vector<int> cv(emb.component_count, 0), ce(emb.component_count, 0), cf(emb.component_count, 0);
    for (int v = 0; v < n; ++v) ++cv[label[v]];
    for (const Edge &e : graph.edges()) ++ce[label[e.a]];
    for (int c : emb.face_component) ++cf[c];
    for (int c = 0; c < emb.component_count; ++c) {
        if (ce[c] > 0 && cv[c] - ce[c] + cf[c] != 2) throw std::logic_error("embedding violates Euler's formula");
    }
    return emb;
}

bool dart_is_forward(const BipartiteGraph &graph, const Orientation &orientation, const Dart &dart) {
    return (orientation[dart.edge] == Direction::AtoB) == graph.is_a(dart.from);
}

std::vector<int> face_forward_counts(const BipartiteGraph &graph, const Embedding &embedding,
                                     const Orientation &orientation) {
    std::vector<int> counts;
    counts.reserve(embedding.faces.size());
    for (const auto &face : embedding.faces) {
        int forward = 0;
        for (const Dart &d : face)
            if (dart_is_forward(graph, orientation, d)) ++forward;
        counts.push_back(forward);
    }
    return counts;
}

Orientation fkt_orientation(const BipartiteGraph &graph, const Embedding &embedding) {
    if (embedding.rotation.size() != static_cast<std::size_t>(graph.vertex_count())) {
        throw PreconditionError("embedding does not belong to the graph");
    }
    Orientation d = Orientation::uniform(graph, Direction::AtoB);

    // Spanning forest by BFS; its edges keep the A-to-B default.
    std::vector<bool> in_tree(graph.edge_count(), false);
    std::vector<bool> seen(graph.vertex_count(), false);
    for (int s = 0; s < graph.vertex_count(); ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int e : embedding.rotation[v]) {
                int w = other_end(graph, e, v);
                if (seen[w]) continue;
                seen[w] = true;
                in_tree[e] = true;
                queue.push(w);
            }
        }
    }

    // Dual tree over co-tree edges, rooted at each component's outer face.
    std::vector<int> face_of_dart(2 * graph.edge_count(), -1);
    for (int f = 0; f < static_cast<int>(embedding.faces.size()); ++f)
        for (const Dart &dart : embedding.faces[f]) face_of_dart[dart_id(graph, dart)] = f;

    const int face_count = static_cast<int>(embedding.faces.size());
    std::vector<std::vector<int>> cotree_edges_of_face(face_count);
    for (int e = 0; e < graph.edge_count(); ++e) {
        if (in_tree[e]) continue;
        int f0 = face_of_dart[2 * e];
        int f1 = face_of_dart[2 * e + 1];
        if (f0 == f1) throw std::logic_error("co-tree edge bounds a single face");
        cotree_edges_of_face[f0].push_back(e);
        cotree_edges_of_face[f1].push_back(e);
    }

    std::vector<int> parent_edge(face_count, -1);
    std::vector<bool> reached(face_count, false);
    std::vector<int> order;
    for (int root : embedding.outer_face) {
        if (root < 0) continue;
        reached[root] = true;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop();
            order.push_back(f);
            for (int e : cotree_edges_of_face[f]) {
                int g = face_of_dart[2 * e] == f ? face_of_dart[2 * e + 1] : face_of_dart[2 * e];
                if (reached[g]) continue;
                reached[g] = true;
                parent_edge[g] = e;
                queue.push(g);
            }
        }
    }
    if (static_cast<int>(order.size()) != face_count) throw std::logic_error("dual graph is not connected");

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int f = *it;
        int fix = parent_edge[f];
        if (fix < 0) continue;
        int forward = 0;
        Dart fix_dart{};
        for (const Dart &dart : embedding.faces[f]) {
            if (dart.edge == fix) {
                fix_dart = dart;
                continue;
            }
            if (dart_is_forward(graph, d, dart)) ++forward;
        }
        // Make the fixing dart forward exactly when the rest of the face is even.
        bool want_forward = forward % 2 == 0;
        bool a_side = graph.is_a(fix_dart.from);
        d.set(fix, (want_forward == a_side) ? Direction::AtoB : Direction::BtoA);
    }
    return d;
}

std::optional<HeawoodIsomorphism> is_heawood(const BipartiteGraph &graph) {
    if (graph.n_a() != 7 || graph.n_b() != 7 || graph.edge_count() != 21) return std::nullopt;
    for (int a = 0; a < 7; ++a)
        if (graph.a_degree(a) != 3) return std::nullopt;
    for (int b = 0; b < 7; ++b)
        if (graph.b_degree(b) != 3) return std::nullopt;
    if (!is_connected(graph) || girth(graph) != 6) return std::nullopt;

    const BipartiteGraph &h = heawood_graph();
    // Fano line through a point set, as a bitmask lookup.
    std::vector<int> line_of_mask(128, -1);
    for (int l = 0; l < 7; ++l) {
        int mask = 0;
        for (int p : h.b_neighbors(l)) mask |= 1 << p;
        line_of_mask[mask] = l;
    }

    HeawoodIsomorphism iso{std::vector<int>(7, -1), std::vector<int>(7, -1)};
    std::vector<bool> point_used(7, false);
    std::vector<int> line_owner(7, -1);

    // Assign A-vertex `a`; every B-vertex whose neighbours are now all assigned
    // must land on a line not yet taken.
    auto search = [&](auto &&self, int a) -> bool {
        if (a == 7) return true;
        for (int p = 0; p < 7; ++p) {
            if (point_used[p]) continue;
            point_used[p] = true;
            iso.a_to_point[a] = p;
            std::vector<int> placed;
            bool ok = true;
            for (int b : graph.a_neighbors(a)) {
                auto nbrs = graph.b_neighbors(b);
                if (*std::max_element(nbrs.begin(), nbrs.end()) != a) continue;
                int mask = 0;
                for (int x : nbrs) mask |= 1 << iso.a_to_point[x];
                int line = line_of_mask[mask];
                if (line < 0 || line_owner[line] >= 0) {
                    ok = false;
                    break;
                }
                line_owner[line] = b;
                iso.b_to_line[b] = line;
                placed.push_back(line);
            }
            if (ok && self(self, a + 1)) return true;
            for (int line : placed) {
                iso.b_to_line[line_owner[line]] = -1;
                line_owner[line] = -1;
            }
            iso.a_to_point[a] = -1;
            point_used[p] = false;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return iso;
}

Orientation heawood_orientation(const BipartiteGraph &graph) {
    if (!is_heawood(graph)) throw PreconditionError("graph is not isomorphic to the Heawood graph");
    return Orientation::uniform(graph, Direction::AtoB);
}

}  // namespace pfaffian
