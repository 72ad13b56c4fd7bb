#include <gtest/gtest.h>

#include <sstream>

#include "generators.hpp"
#include "pfaffian/errors.hpp"
#include "pfaffian/graph.hpp"
#include "pfaffian/text_io.hpp"

namespace pfaffian {
namespace {

using testing::even_cycle;

TEST(BipartiteGraph, EdgesAreSortedAndIndexed) {
    BipartiteGraph g(2, 2, {{1, 0}, {0, 1}, {0, 0}});
    ASSERT_EQ(g.edge_count(), 3);
    EXPECT_EQ(g.edge(0), (Edge{0, 0}));
    EXPECT_EQ(g.edge(1), (Edge{0, 1}));
    EXPECT_EQ(g.edge(2), (Edge{1, 0}));
    EXPECT_EQ(g.edge_index(1, 0), 2);
    EXPECT_FALSE(g.edge_index(1, 1).has_value());
    EXPECT_EQ(g.a_degree(0), 2);
    EXPECT_EQ(g.b_degree(0), 2);
    EXPECT_EQ(g.b_degree(1), 1);
}

TEST(BipartiteGraph, RejectsDuplicatesAndRange) {
    EXPECT_THROW(BipartiteGraph(1, 1, {{0, 0}, {0, 0}}), PreconditionError);
    EXPECT_THROW(BipartiteGraph(1, 1, {{1, 0}}), PreconditionError);
    EXPECT_THROW(BipartiteGraph(1, 1, {{0, -1}}), PreconditionError);
}

TEST(BipartiteGraph, EqualityIgnoresInputOrder) {
    EXPECT_EQ(BipartiteGraph(2, 2, {{1, 1}, {0, 0}}), BipartiteGraph(2, 2, {{0, 0}, {1, 1}}));
}

TEST(BipartiteGraph, UnifiedNeighbours) {
    BipartiteGraph g = even_cycle(2);
    EXPECT_EQ(g.unified_neighbors(0), (std::vector<int>{2, 3}));
    EXPECT_EQ(g.unified_neighbors(2), (std::vector<int>{0, 1}));
}

TEST(Orientation, FlipReversesBoundaryEdges) {
    BipartiteGraph g = even_cycle(2);
    Orientation d = Orientation::uniform(g, Direction::AtoB);
    VertexSet s(g);
    s.insert_a(0);
    Orientation f = flip_vertices(g, d, s);
    EXPECT_EQ(f[0], Direction::BtoA);
    EXPECT_EQ(f[1], Direction::BtoA);
    EXPECT_EQ(f[2], Direction::AtoB);
    EXPECT_EQ(f[3], Direction::AtoB);
    EXPECT_EQ(flip_vertices(g, f, s), d);
}

TEST(Matching, PerfectAndMates) {
    BipartiteGraph g = even_cycle(3);
    Matching m({{0, 0}, {1, 1}, {2, 2}});
    EXPECT_TRUE(m.is_perfect_in(g));
    EXPECT_EQ(m.mate_of_a(3), (std::vector<int>{0, 1, 2}));
    Matching bad({{0, 0}, {1, 0}});
    EXPECT_FALSE(bad.is_matching_in(g));
    Matching partial({{0, 0}});
    EXPECT_TRUE(partial.is_matching_in(g));
    EXPECT_FALSE(partial.is_perfect_in(g));
}

TEST(Digraph, RejectsLoopsAndDuplicates) {
    EXPECT_THROW(Digraph(2, {{0, 0}}), PreconditionError);
    EXPECT_THROW(Digraph(2, {{0, 1}, {0, 1}}), PreconditionError);
    Digraph d(2, {{1, 0}, {0, 1}});
    EXPECT_EQ(d.arc(0), (Arc{0, 1}));
    EXPECT_EQ(d.arc_index(1, 0), 1);
}

TEST(Matrix, GraphRoundTrip) {
    ZeroOneMatrix a({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    BipartiteGraph g = graph_of_matrix(a);
    EXPECT_EQ(g, even_cycle(3));
    EXPECT_EQ(matrix_of_graph(g), a);
    EXPECT_THROW(ZeroOneMatrix({{1, -1}, {0, 1}}), PreconditionError);
    EXPECT_THROW(SignMatrix({{1, 0}}), PreconditionError);
    EXPECT_THROW(matrix_of_graph(testing::path_graph(3)), PreconditionError);
}

TEST(Components, OrderedBySmallestVertex) {
    BipartiteGraph g(3, 3, {{0, 1}, {2, 0}, {2, 2}});
    auto parts = connected_components(g);
    ASSERT_EQ(parts.size(), 3u);  // {a0, b1}, {a1}, {a2, b0, b2}
    EXPECT_EQ(parts[0].a_map, (std::vector<int>{0}));
    EXPECT_EQ(parts[0].b_map, (std::vector<int>{1}));
    EXPECT_EQ(parts[1].a_map, (std::vector<int>{1}));
    EXPECT_TRUE(parts[1].b_map.empty());
    EXPECT_EQ(parts[2].graph.edge_count(), 2);
    EXPECT_FALSE(is_connected(g));
    EXPECT_TRUE(is_connected(even_cycle(4)));
}

TEST(Heawood, FanoIncidence) {
    const BipartiteGraph &h = heawood_graph();
    EXPECT_EQ(h.n_a(), 7);
    EXPECT_EQ(h.edge_count(), 21);
    EXPECT_EQ(girth(h), 6);
    for (int a = 0; a < 7; ++a) EXPECT_EQ(h.a_degree(a), 3);
    EXPECT_EQ(girth(testing::path_graph(5)), std::nullopt);
    EXPECT_EQ(girth(testing::complete_bipartite(3, 3)), 4);
}

TEST(TextIo, GraphRoundTrip) {
    BipartiteGraph g = testing::cube();
    std::ostringstream out;
    text::write_graph(out, g);
    EXPECT_EQ(text::graph_from_string(out.str()), g);
}

TEST(TextIo, CommentsAndBlankLines) {
    BipartiteGraph g = text::graph_from_string("# C4\n\nbipartite 2 2\ne 1 1\ne 1 2\n# middle\ne 2 1\ne 2 2\n");
    EXPECT_EQ(g, even_cycle(2));
}

TEST(TextIo, ReportsLineNumbers) {
    try {
        text::graph_from_string("bipartite 2 2\ne 1 1\ne 3 1\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3);
    }
    EXPECT_THROW(text::graph_from_string("bipartite 2 2\ne 1 1\ne 1 1\n"), ParseError);
    EXPECT_THROW(text::graph_from_string("graph 2 2\n"), ParseError);
    EXPECT_THROW(text::graph_from_string("bipartite 2 2\ne 1 x\n"), ParseError);
    EXPECT_THROW(text::digraph_from_string("digraph 2\na 1 1\n"), ParseError);
}

TEST(TextIo, MatrixChecks) {
    std::istringstream ok("1 0\n-1 1\n");
    EXPECT_EQ(text::parse_matrix(ok), (std::vector<std::vector<int>>{{1, 0}, {-1, 1}}));
    std::istringstream ragged("1 0\n1\n");
    EXPECT_THROW(text::parse_matrix(ragged), ParseError);
    std::istringstream wide("1 0 1\n1 1 1\n");
    EXPECT_THROW(text::parse_matrix(wide), ParseError);
    std::istringstream entry("2 0\n0 1\n");
    EXPECT_THROW(text::parse_matrix(entry), ParseError);
}

TEST(TextIo, OrientationMustCoverEveryEdgeOnce) {
    BipartiteGraph g = even_cycle(2);
    std::istringstream ok("e 1 1 >\ne 1 2 <\ne 2 1 >\ne 2 2 >\n");
    Orientation d = text::parse_orientation(ok, g);
    EXPECT_EQ(d[1], Direction::BtoA);
    std::istringstream missing("e 1 1 >\n");
    EXPECT_THROW(text::parse_orientation(missing, g), ParseError);
    std::istringstream twice("e 1 1 >\ne 1 1 <\ne 1 2 <\ne 2 1 >\ne 2 2 >\n");
    EXPECT_THROW(text::parse_orientation(twice, g), ParseError);

    std::ostringstream out;
    text::write_orientation(out, g, d);
    EXPECT_EQ(out.str(), "e 1 1 >\ne 1 2 <\ne 2 1 >\ne 2 2 >\n");
}

}  // namespace
}  // namespace pfaffian
