#include "pfaffian/text_io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "pfaffian/errors.hpp"

namespace pfaffian::text {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream &in) : in_(in) {}

    // Next non-blank, non-comment line split into tokens.
    std::optional<std::vector<std::string>> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            if (tokens.empty() || tokens[0][0] == '#') continue;
            return tokens;
        }
        return std::nullopt;
    }

    int line() const { return line_no_; }

    [[noreturn]] void fail(const std::string &message) const { throw ParseError(line_no_, message); }

    int integer(const std::string &token) const {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception &) {
            fail("expected an integer, got '" + token + "'");
        }
        if (used != token.size()) fail("expected an integer, got '" + token + "'");
        return value;
    }

    // A 1-based index in [1, bound], returned 0-based.
    int index(const std::string &token, int bound) const {
        int value = integer(token);
        if (value < 1 || value > bound) fail("index " + token + " out of range 1.." + std::to_string(bound));
        return value - 1;
    }

private:
    std::istream &in_;
    int line_no_ = 0;
};

}  // namespace

BipartiteGraph parse_graph(std::istream &in) {
    LineReader reader(in);
    auto header = reader.next();
    if (!header || header->size() != 3 || (*header)[0] != "bipartite") {
        reader.fail("expected 'bipartite <n_a> <n_b>'");
    }
    int n_a = reader.integer((*header)[1]);
    int n_b = reader.integer((*header)[2]);
    if (n_a < 0 || n_b < 0) reader.fail("negative side size");
    std::vector<Edge> edges;
    while (auto tokens = reader.next()) {
        if (tokens->size() != 3 || (*tokens)[0] != "e") reader.fail("expected 'e <a> <b>'");
        edges.push_back({reader.index((*tokens)[1], n_a), reader.index((*tokens)[2], n_b)});
    }
    try {
        return BipartiteGraph(n_a, n_b, std::move(edges));
    } catch (const PreconditionError &e) {
        throw ParseError(reader.line(), e.what());
    }
}

Digraph parse_digraph(std::istream &in) {
    LineReader reader(in);
    auto header = reader.next();
    if (!header || header->size() != 2 || (*header)[0] != "digraph") reader.fail("expected 'digraph <n>'");
    int n = reader.integer((*header)[1]);
    if (n < 0) reader.fail("negative vertex count");
    std::vector<Arc> arcs;
    while (auto tokens = reader.next()) {
        if (tokens->size() != 3 || (*tokens)[0] != "a") reader.fail("expected 'a <u> <v>'");
        arcs.push_back({reader.index((*tokens)[1], n), reader.index((*tokens)[2], n)});
    }
    try {
        return Digraph(n, std::move(arcs));
    } catch (const PreconditionError &e) {
        throw ParseError(reader.line(), e.what());
    }
}

std::vector<std::vector<int>> parse_matrix(std::istream &in) {
    LineReader reader(in);
    std::vector<std::vector<int>> rows;
    while (auto tokens = reader.next()) {
        std::vector<int> row;
        for (const auto &tok : *tokens) {
            int v = reader.integer(tok);
            if (v < -1 || v > 1) reader.fail("matrix entries must be -1, 0 or 1");
            row.push_back(v);
        }
        if (!rows.empty() && row.size() != rows.front().size()) reader.fail("ragged matrix row");
        rows.push_back(std::move(row));
    }
    if (!rows.empty() && rows.size() != rows.front().size()) reader.fail("matrix is not square");
    return rows;
}

Orientation parse_orientation(std::istream &in, const BipartiteGraph &graph) {
    LineReader reader(in);
    std::vector<Direction> dirs(graph.edge_count());
    std::vector<bool> seen(graph.edge_count(), false);
    while (auto tokens = reader.next()) {
        if (tokens->size() != 4 || (*tokens)[0] != "e") reader.fail("expected 'e <a> <b> <dir>'");
        int a = reader.index((*tokens)[1], graph.n_a());
        int b = reader.index((*tokens)[2], graph.n_b());
        auto idx = graph.edge_index(a, b);
        if (!idx) reader.fail("edge is not in the graph");
        if (seen[*idx]) reader.fail("edge listed twice");
        const std::string &d = (*tokens)[3];
        if (d == ">") {
            dirs[*idx] = Direction::AtoB;
        } else if (d == "<") {
            dirs[*idx] = Direction::BtoA;
        } else {
            reader.fail("direction must be '>' or '<'");
        }
        seen[*idx] = true;
    }
    for (bool s : seen)
        if (!s) throw ParseError(reader.line(), "orientation does not cover every edge");
    return Orientation(std::move(dirs));
}

void write_graph(std::ostream &out, const BipartiteGraph &graph) {
    out << "bipartite " << graph.n_a() << ' ' << graph.n_b() << '\n';
    for (const Edge &e : graph.edges()) out << "e " << e.a + 1 << ' ' << e.b + 1 << '\n';
}

void write_digraph(std::ostream &out, const Digraph &digraph) {
    out << "digraph " << digraph.vertex_count() << '\n';
    for (const Arc &arc : digraph.arcs()) out << "a " << arc.tail + 1 << ' ' << arc.head + 1 << '\n';
}

template <typename Entries>
void write_matrix(std::ostream &out, const SquareMatrix<Entries> &m) {
    for (int r = 0; r < m.order(); ++r) {
        for (int c = 0; c < m.order(); ++c) out << (c ? " " : "") << m(r, c);
        out << '\n';
    }
}

template void write_matrix(std::ostream &, const ZeroOneMatrix &);
template void write_matrix(std::ostream &, const SignMatrix &);

void write_orientation(std::ostream &out, const BipartiteGraph &graph, const Orientation &orientation) {
    for (int i = 0; i < graph.edge_count(); ++i) {
        const Edge &e = graph.edge(i);
        out << "e " << e.a + 1 << ' ' << e.b + 1 << ' ' << (orientation[i] == Direction::AtoB ? '>' : '<') << '\n';
    }
}

void write_dot(std::ostream &out, const BipartiteGraph &graph, const Orientation &orientation) {
    out << "digraph G {\n";
    for (int a = 0; a < graph.n_a(); ++a) out << "  a" << a + 1 << " [shape=circle];\n";
    for (int b = 0; b < graph.n_b(); ++b) out << "  b" << b + 1 << " [shape=box];\n";
    for (int i = 0; i < graph.edge_count(); ++i) {
        const Edge &e = graph.edge(i);
        out << "  a" << e.a + 1 << " -> b" << e.b + 1
            << (orientation[i] == Direction::AtoB ? " [dir=forward];\n" : " [dir=back];\n");
    }
    out << "}\n";
}

BipartiteGraph graph_from_string(const std::string &s) {
    std::istringstream in(s);
    return parse_graph(in);
}

Digraph digraph_from_string(const std::string &s) {
    std::istringstream in(s);
    return parse_digraph(in);
}

}  // namespace pfaffian::text
