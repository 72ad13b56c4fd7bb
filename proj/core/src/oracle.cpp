#include "pfaffian/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <string>

#include "pfaffian/errors.hpp"
#include "pfaffian/matching.hpp"

namespace pfaffian::oracle {

namespace {

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

BigInt to_big(Int128 v) {
    bool negative = v < 0;
    UInt128 mag = negative ? -static_cast<UInt128>(v) : static_cast<UInt128>(v);
    BigInt out = static_cast<std::uint64_t>(mag >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(mag);
    return negative ? BigInt(-out) : out;
}

// Bareiss elimination; T must hold products of two minors of the input.
template <typename T>
T bareiss(std::vector<T> a, int n) {
    if (n == 0) return T(1);
    auto at = [&](int r, int c) -> T & { return a[static_cast<std::size_t>(r) * n + c]; };
    T prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n && pivot < 0; ++i)
                if (at(i, k) != 0) pivot = i;
            if (pivot < 0) return T(0);
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            }
        }
        prev = at(k, k);
    }
    T det = at(n - 1, n - 1);
    return sign < 0 ? T(-det) : det;
}

// Largest order for which every Bareiss intermediate fits in 128 bits
// (Hadamard: minors of a {-1,0,1} matrix are at most n^(n/2)).
constexpr int kInt128DetOrder = 20;

// Ryser partial sums stay exact in 128 bits as long as we spill into a BigInt
// before the accumulator could overflow; one term is at most 24^24 < 2^110.
constexpr Int128 kSpillThreshold = static_cast<Int128>(1) << 120;

}  // namespace

BigInt permanent(const ZeroOneMatrix &m, int max_order) {
    const int n = m.order();
    if (n > max_order) {
        throw SizeLimitError("permanent of order " + std::to_string(n) + " exceeds limit " +
                             std::to_string(max_order));
    }
    if (n > 62) throw SizeLimitError("permanent order beyond 62 is not supported");
    if (n == 0) return 1;

    std::vector<long long> row_sum(n, 0);
    BigInt total = 0;
    Int128 acc = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        int j = std::countr_zero(k);
        gray ^= std::uint64_t{1} << j;
        int delta = (gray >> j) & 1 ? 1 : -1;
        for (int r = 0; r < n; ++r) row_sum[r] += delta * m(r, j);

        Int128 product = 1;
        for (int r = 0; r < n && product != 0; ++r) product *= row_sum[r];
        if (product == 0) continue;
        if (std::popcount(gray) % 2 == 1) product = -product;
        acc += product;
        if (acc > kSpillThreshold || acc < -kSpillThreshold) {
            total += to_big(acc);
            acc = 0;
        }
    }
    total += to_big(acc);
    return n % 2 == 1 ? BigInt(-total) : total;
}

BigInt determinant(const SignMatrix &m) {
    const int n = m.order();
    if (n <= kInt128DetOrder) {
        std::vector<Int128> a(static_cast<std::size_t>(n) * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r) * n + c] = m(r, c);
        return to_big(bareiss(std::move(a), n));
    }
    std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r) * n + c] = m(r, c);
    return bareiss(std::move(a), n);
}

SignMatrix signed_biadjacency(const BipartiteGraph &graph, const Orientation &orientation) {
    if (!graph.balanced()) throw PreconditionError("graph sides are unbalanced");
    if (!orientation.fits(graph)) throw PreconditionError("orientation does not match graph");
    SignMatrix b(graph.n_a());
    for (int i = 0; i < graph.edge_count(); ++i) b.set(graph.edge(i).a, graph.edge(i).b, orientation.sign(i));
    return b;
}

bool is_pfaffian_orientation(const BipartiteGraph &graph, const Orientation &orientation, const Limits &limits) {
    if (!orientation.fits(graph)) throw PreconditionError("orientation does not match graph");
    if (!graph.balanced()) return true;
    BigInt per = permanent(matrix_of_graph(graph), limits.matrix_order);
    BigInt det = determinant(signed_biadjacency(graph, orientation));
    return per == abs(det);
}

namespace {

// Enumerates simple circuits of a graph given in unified ids; each circuit is
// reported once, as a vertex sequence starting at its smallest vertex.
class CircuitEnumerator {
public:
    explicit CircuitEnumerator(const BipartiteGraph &g) : g_(g), on_path_(g.vertex_count(), false) {
        adj_.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) adj_[v] = g.unified_neighbors(v);
    }

    template <typename Visit>
    void run(Visit &&visit) {
        for (int s = 0; s < g_.vertex_count(); ++s) {
            path_ = {s};
            on_path_[s] = true;
            extend(s, visit);
            on_path_[s] = false;
        }
    }

private:
    template <typename Visit>
    void extend(int start, Visit &visit) {
        int v = path_.back();
        for (int w : adj_[v]) {
            if (w < start) continue;
            if (w == start) {
                // Report each circuit in one direction only.
                if (path_.size() >= 4 && path_[1] < path_.back()) visit(path_);
                continue;
            }
            if (on_path_[w]) continue;
            on_path_[w] = true;
            path_.push_back(w);
            extend(start, visit);
            path_.pop_back();
            on_path_[w] = false;
        }
    }

    const BipartiteGraph &g_;
    std::vector<std::vector<int>> adj_;
    std::vector<bool> on_path_;
    std::vector<int> path_;
};

}  // namespace

bool is_pfaffian_by_definition(const BipartiteGraph &graph, const Orientation &orientation, const Limits &limits) {
    if (!orientation.fits(graph)) throw PreconditionError("orientation does not match graph");
    if (graph.vertex_count() > limits.circuit_vertices) {
        throw SizeLimitError("circuit enumeration limited to " + std::to_string(limits.circuit_vertices) +
                             " vertices");
    }
    const int n_a = graph.n_a();
    bool ok = true;
    CircuitEnumerator(graph).run([&](const std::vector<int> &circuit) {
        if (!ok) return;
        std::vector<bool> keep_a(n_a, true), keep_b(graph.n_b(), true);
        for (int v : circuit) {
            if (v < n_a) {
                keep_a[v] = false;
            } else {
                keep_b[v - n_a] = false;
            }
        }
        if (!has_perfect_matching(induced_subgraph(graph, keep_a, keep_b).graph)) return;
        int forward = 0;
        for (std::size_t i = 0; i < circuit.size(); ++i) {
            int from = circuit[i];
            int to = circuit[(i + 1) % circuit.size()];
            bool from_a = from < n_a;
            int a = from_a ? from : to;
            int b = (from_a ? to : from) - n_a;
            Direction d = orientation[*graph.edge_index(a, b)];
            if ((d == Direction::AtoB) == from_a) ++forward;
        }
        if (forward % 2 == 0) ok = false;
    });
    return ok;
}

namespace {

// Depth-first enumeration of perfect matchings, rows in increasing order.
// `visit(matching edges, term sign)` returns false to stop.
template <typename Visit>
void for_each_perfect_matching(const BipartiteGraph &graph, const Orientation *orientation, Visit &&visit) {
    if (!graph.balanced()) return;
    const int n = graph.n_a();
    std::vector<bool> used(graph.n_b(), false);
    std::vector<Edge> chosen;
    std::vector<int> sign_stack{1};
    bool stop = false;

    auto recurse = [&](auto &&self, int a) -> void {
        if (stop) return;
        if (a == n) {
            if (!visit(chosen, sign_stack.back())) stop = true;
            return;
        }
        auto nbrs = graph.a_neighbors(a);
        for (std::size_t k = 0; k < nbrs.size() && !stop; ++k) {
            int b = nbrs[k];
            if (used[b]) continue;
            int sign = sign_stack.back();
            if (orientation) {
                // Inversions added by placing row a at column b: earlier rows in later columns.
                int inversions = 0;
                for (int c = b + 1; c < graph.n_b(); ++c)
                    if (used[c]) ++inversions;
                if (inversions % 2) sign = -sign;
                sign *= orientation->sign(graph.first_edge_of_a(a) + static_cast<int>(k));
            }
            used[b] = true;
            chosen.push_back({a, b});
            sign_stack.push_back(sign);
            self(self, a + 1);
            sign_stack.pop_back();
            chosen.pop_back();
            used[b] = false;
        }
    };
    recurse(recurse, 0);
}

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const BipartiteGraph &graph, const Limits &limits) {
    std::vector<Matching> out;
    bool overflow = false;
    for_each_perfect_matching(graph, nullptr, [&](const std::vector<Edge> &edges, int) {
        if (static_cast<long long>(out.size()) >= limits.matchings) {
            overflow = true;
            return false;
        }
        out.emplace_back(edges);
        return true;
    });
    if (overflow) throw SizeLimitError("more than " + std::to_string(limits.matchings) + " perfect matchings");
    return out;
}

std::optional<bool> matching_signs_agree(const BipartiteGraph &graph, const Orientation &orientation,
                                         long long max_matchings) {
    if (!orientation.fits(graph)) throw PreconditionError("orientation does not match graph");
    long long count = 0;
    int first_sign = 0;
    bool agree = true;
    bool overflow = false;
    for_each_perfect_matching(graph, &orientation, [&](const std::vector<Edge> &, int sign) {
        if (++count > max_matchings) {
            overflow = true;
            return false;
        }
        if (first_sign == 0) first_sign = sign;
        if (sign != first_sign) {
            agree = false;
            return false;
        }
        return true;
    });
    if (overflow) return std::nullopt;
    return agree;
}

std::vector<int> spanning_forest_edges(const BipartiteGraph &graph) {
    const int n = graph.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<int> tree;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            if (graph.is_a(v)) {
                auto nbrs = graph.a_neighbors(v);
                for (std::size_t k = 0; k < nbrs.size(); ++k) {
                    int w = graph.unified_b(nbrs[k]);
                    if (seen[w]) continue;
                    seen[w] = true;
                    tree.push_back(graph.first_edge_of_a(v) + static_cast<int>(k));
                    queue.push(w);
                }
            } else {
                int b = v - graph.n_a();
                auto nbrs = graph.b_neighbors(b);
                auto idx = graph.b_edge_indices(b);
                for (std::size_t k = 0; k < nbrs.size(); ++k) {
                    if (seen[nbrs[k]]) continue;
                    seen[nbrs[k]] = true;
                    tree.push_back(idx[k]);
                    queue.push(nbrs[k]);
                }
            }
        }
    }
    return tree;
}

int cyclomatic_number(const BipartiteGraph &graph) {
    return graph.edge_count() - static_cast<int>(spanning_forest_edges(graph).size());
}

std::optional<Orientation> pfaffian_exists_bruteforce(const BipartiteGraph &graph, const Limits &limits) {
    std::vector<bool> in_tree(graph.edge_count(), false);
    for (int e : spanning_forest_edges(graph)) in_tree[e] = true;
    std::vector<int> cotree;
    for (int e = 0; e < graph.edge_count(); ++e)
        if (!in_tree[e]) cotree.push_back(e);
    const int k = static_cast<int>(cotree.size());
    if (k > limits.cyclomatic) {
        throw SizeLimitError("cyclomatic number " + std::to_string(k) + " exceeds limit " +
                             std::to_string(limits.cyclomatic));
    }

    Orientation d = Orientation::uniform(graph, Direction::AtoB);
    if (!graph.balanced()) return d;
    BigInt per = permanent(matrix_of_graph(graph), limits.matrix_order);
    if (per == 0) return d;

    SignMatrix b = signed_biadjacency(graph, d);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        for (int i = 0; i < k; ++i) {
            const Edge &e = graph.edge(cotree[i]);
            b.set(e.a, e.b, (mask >> i) & 1 ? -1 : 1);
        }
        if (abs(determinant(b)) == per) {
            for (int i = 0; i < k; ++i) d.set(cotree[i], (mask >> i) & 1 ? Direction::BtoA : Direction::AtoB);
            return d;
        }
    }
    return std::nullopt;
}

std::vector<std::vector<int>> directed_circuits(const Digraph &digraph, const Limits &limits) {
    const int n = digraph.vertex_count();
    if (n > limits.circuit_vertices) {
        throw SizeLimitError("digraph has " + std::to_string(n) + " vertices, limit is " +
                             std::to_string(limits.circuit_vertices));
    }
    // Each circuit is found once, from its smallest vertex.
    std::vector<std::vector<int>> out;
    std::vector<int> path_arcs;
    std::vector<bool> on_path(n, false);
    auto extend = [&](auto &&self, int start, int v) -> void {
        auto succ = digraph.successors(v);
        for (int k = 0; k < static_cast<int>(succ.size()); ++k) {
            int w = succ[k];
            int arc = digraph.first_arc_of(v) + k;
            if (w == start) {
                path_arcs.push_back(arc);
                out.push_back(path_arcs);
                path_arcs.pop_back();
            } else if (w > start && !on_path[w]) {
                on_path[w] = true;
                path_arcs.push_back(arc);
                self(self, start, w);
                path_arcs.pop_back();
                on_path[w] = false;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        on_path[s] = true;
        extend(extend, s, s);
        on_path[s] = false;
    }
    return out;
}

bool every_circuit_odd(const Digraph &digraph, const EdgeWeighting &weighting, const Limits &limits) {
    if (static_cast<int>(weighting.weight.size()) != digraph.arc_count()) {
        throw PreconditionError("weighting does not fit the digraph");
    }
    for (const auto &circuit : directed_circuits(digraph, limits)) {
        int total = 0;
        for (int arc : circuit) total += weighting.weight[arc];
        if (total % 2 == 0) return false;
    }
    return true;
}

bool is_even_by_definition(const Digraph &digraph, int max_arcs) {
    const int m = digraph.arc_count();
    if (m > std::min(max_arcs, 30)) {
        throw SizeLimitError("digraph has " + std::to_string(m) + " arcs, limit is " + std::to_string(max_arcs));
    }
    Limits limits;
    limits.circuit_vertices = digraph.vertex_count();
    std::vector<std::uint32_t> masks;
    for (const auto &circuit : directed_circuits(digraph, limits)) {
        std::uint32_t mask = 0;
        for (int arc : circuit) mask |= std::uint32_t{1} << arc;
        masks.push_back(mask);
    }
    for (std::uint32_t w = 0; w < (std::uint32_t{1} << m); ++w) {
        bool all_odd = true;
        for (std::uint32_t mask : masks) {
            if (std::popcount(mask & w) % 2 == 0) {
                all_odd = false;
                break;
            }
        }
        if (all_odd) return false;
    }
    return true;
}

}  // namespace pfaffian::oracle
