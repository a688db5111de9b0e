#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace sofic;

namespace {

LabeledGraph even_graph()
{
	LabeledGraph g(2, 2);
	g.add_edge(0, 0, 1);
	g.add_edge(0, 1, 0);
	g.add_edge(1, 0, 0);
	return g;
}

} // namespace

TEST(Graph, RejectsBadEdges)
{
	LabeledGraph g(2, 1);
	EXPECT_THROW(g.add_edge(0, 1, 0), error);
	EXPECT_THROW(g.add_edge(0, 0, 2), error);
}

TEST(Graph, EssentializeDropsDeadEndChain)
{
	// cycle 0 <-> 1, chain 1 -> 2 -> 3 with 3 a dead end, source 4 -> 0
	LabeledGraph g(2, 5);
	g.add_edge(0, 1, 0);
	g.add_edge(1, 0, 1);
	g.add_edge(1, 2, 0);
	g.add_edge(2, 3, 0);
	g.add_edge(4, 0, 1);
	auto e = essentialize(g);
	EXPECT_EQ(e.vertex_count, 2u);
	EXPECT_EQ(e.edges.size(), 2u);
}

TEST(Graph, EssentializeFixesEssentialGraph)
{
	auto g = even_graph();
	EXPECT_EQ(essentialize(g), g);
}

TEST(Graph, EssentializeEmptiesAcyclicGraph)
{
	LabeledGraph g(2, 3);
	g.add_edge(0, 1, 0);
	g.add_edge(1, 2, 1);
	EXPECT_TRUE(essentialize(g).empty());
}

TEST(Graph, StronglyConnectedComponents)
{
	std::vector<std::vector<Vertex>> succ{{1}, {2}, {0, 3}, {4}, {3}, {}};
	auto c = strongly_connected_components(6, succ);
	EXPECT_EQ(c.count, 3u);
	EXPECT_EQ(c.component[0], c.component[1]);
	EXPECT_EQ(c.component[1], c.component[2]);
	EXPECT_EQ(c.component[3], c.component[4]);
	EXPECT_NE(c.component[0], c.component[3]);
	EXPECT_NE(c.component[5], c.component[3]);
}

TEST(Graph, CycleGcdOfLoopAndTwoCycleIsOne)
{
	auto g = even_graph();
	auto scc = strongly_connected_components(g);
	EXPECT_EQ(cycle_gcd(g, scc, 0), 1u);
}

TEST(Graph, CycleGcdOfPureTwoCycleIsTwo)
{
	LabeledGraph g(2, 2);
	g.add_edge(0, 1, 0);
	g.add_edge(1, 0, 1);
	auto scc = strongly_connected_components(g);
	EXPECT_EQ(cycle_gcd(g, scc, 0), 2u);
}

TEST(Graph, CycleGcdOfThreeAndSixCycles)
{
	// 0->1->2->0 and 0->3->4->5->6->7->0
	LabeledGraph g(1, 8);
	for (auto [s, t] : std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}})
		g.add_edge(s, t, 0);
	auto scc = strongly_connected_components(g);
	EXPECT_EQ(cycle_gcd(g, scc, 0), 3u);
}

TEST(Graph, DirectedDiameter)
{
	EXPECT_EQ(directed_diameter(even_graph()), 1);
	LabeledGraph ring(1, 4);
	for (Vertex v = 0; v < 4; ++v)
		ring.add_edge(v, (v + 1) % 4, 0);
	EXPECT_EQ(directed_diameter(ring), 3);
	LabeledGraph split(1, 2);
	split.add_edge(0, 1, 0);
	EXPECT_EQ(directed_diameter(split), -1);
}

TEST(Graph, EvenAcceptorKeepsTheZeroLoop)
{
	// Subsets {a,b}, {a}, {b}: reading 0 from {a,b} returns to {a,b}, so the
	// start state survives essentialization next to the two-vertex cover.
	auto m = determinize_minimize(even_graph());
	EXPECT_TRUE(m.is_deterministic());
	EXPECT_EQ(m.vertex_count, 3u);
	EXPECT_EQ(m.edges.size(), 5u);
	auto scc = strongly_connected_components(m);
	EXPECT_EQ(scc.count, 2u);
}

TEST(Graph, RedundantFullShiftCollapsesToOneVertex)
{
	LabeledGraph g(2, 3);
	for (Vertex s = 0; s < 3; ++s) {
		g.add_edge(s, (s + 1) % 3, 0);
		g.add_edge(s, (s + 2) % 3, 1);
	}
	auto m = determinize_minimize(g);
	EXPECT_EQ(m.vertex_count, 1u);
	EXPECT_EQ(m.edges.size(), 2u);
}

TEST(Graph, GoldenDeBruijnGivesTwoStates)
{
	auto g = sft_to_graph(SftSpec(Alphabet::digits(2), {{1, 1}}));
	ASSERT_EQ(g.vertex_count, 2u);
	EXPECT_EQ(g.names[0], "0");
	EXPECT_EQ(g.names[1], "1");
	EXPECT_EQ(g.edges, (std::vector<Edge>{{0, 0, 0}, {0, 1, 1}, {1, 0, 0}}));
	EXPECT_EQ(determinize_minimize(g).vertex_count, 2u);
}

TEST(Graph, DeterminizeMinimizeIsIdempotent)
{
	std::mt19937_64 rng(11);
	for (int trial = 0; trial < 200; ++trial) {
		LabeledGraph g(2, 1 + rng() % 5);
		std::size_t edges = rng() % 10;
		for (std::size_t i = 0; i < edges; ++i)
			g.add_edge(static_cast<Vertex>(rng() % g.vertex_count), static_cast<Vertex>(rng() % g.vertex_count), static_cast<Symbol>(rng() % 2));
		auto once = determinize_minimize(g);
		auto twice = determinize_minimize(once);
		EXPECT_EQ(minimal_acceptor(once), minimal_acceptor(twice));
		EXPECT_EQ(once.vertex_count, twice.vertex_count);
		EXPECT_EQ(once.edges.size(), twice.edges.size());
	}
}

TEST(Graph, EqualLanguagesGiveIdenticalAcceptors)
{
	// Even shift presented with a redundant copy of every vertex.
	LabeledGraph g(2, 4);
	g.add_edge(0, 0, 1);
	g.add_edge(0, 1, 0);
	g.add_edge(1, 2, 0);
	g.add_edge(2, 2, 1);
	g.add_edge(2, 3, 0);
	g.add_edge(3, 0, 0);
	g.add_edge(2, 0, 1);
	EXPECT_EQ(minimal_acceptor(g), minimal_acceptor(even_graph()));
}

TEST(Graph, SubsetConstructionRespectsStateCap)
{
	auto g = sft_to_graph(SftSpec(Alphabet::digits(2), {{0, 1, 1, 0, 1}}));
	EXPECT_THROW(subset_construction(g, 3), error);
}

TEST(Graph, PathGraphCountsWindows)
{
	auto g = even_graph();
	auto p1 = path_graph(g, 1);
	EXPECT_EQ(p1.graph.edges.size(), 3u);
	auto p3 = path_graph(g, 3);
	// paths of length 3 in the even presentation
	std::size_t paths = 0;
	for (const auto& a : g.edges)
		for (const auto& b : g.edges)
			for (const auto& c : g.edges)
				paths += a.target == b.source && b.target == c.source;
	EXPECT_EQ(p3.graph.edges.size(), paths);
	for (std::size_t e = 0; e < p3.graph.edges.size(); ++e) {
		EXPECT_EQ(p3.windows[e].size(), 3u);
		EXPECT_EQ(p3.windows[e].back(), p3.graph.edges[e].label);
	}
}

TEST(Graph, DfaRunFollowsTable)
{
	auto d = minimal_acceptor(even_graph());
	EXPECT_NE(d.run(d.initial, support::word("1001")), Dfa::none);
	EXPECT_EQ(d.run(d.initial, support::word("101")), Dfa::none);
}
