#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"

using namespace sofic;
using support::str;
using support::strs;
using support::word;

TEST(Alphabet, ParseAndFormatRoundTrip)
{
	auto a = Alphabet::digits(3);
	EXPECT_EQ(a.parse("0120"), (Word{0, 1, 2, 0}));
	EXPECT_EQ(a.format(Word{2, 1}), "21");
	Alphabet names({"a", "bb", "c"});
	EXPECT_FALSE(names.single_char());
	EXPECT_EQ(names.parse("bb,a,c"), (Word{1, 0, 2}));
	EXPECT_EQ(names.format(Word{1, 0}), "bb,a");
	EXPECT_TRUE(a.parse("").empty());
}

TEST(Alphabet, RejectsBadNames)
{
	EXPECT_THROW(Alphabet(std::vector<std::string>{}), error);
	EXPECT_THROW(Alphabet({"0", "0"}), error);
	EXPECT_THROW(Alphabet({"a b"}), error);
	EXPECT_THROW(Alphabet::digits(2).parse("012"), error);
}

TEST(Alphabet, NeighborhoodOfInterval)
{
	// [0, n) grown by [-e, e] is [-e, n + e)
	auto g = neighborhood({0, 10}, {-2, 3});
	EXPECT_EQ(g.begin, -2);
	EXPECT_EQ(g.end, 12);
}

TEST(Alphabet, WindowRestriction)
{
	ConfigurationWindow w{-2, word("01101")};
	EXPECT_EQ(w.at(-2), 0);
	EXPECT_EQ(w.at(0), 1);
	auto r = w.restrict_to({-1, 2});
	EXPECT_EQ(r.begin, -1);
	EXPECT_EQ(str(r.letters), "110");
}

TEST(SftSpec, SortsDedupesAndRejectsEmpty)
{
	SftSpec s(Alphabet::digits(2), {word("11"), word("0"), word("11")});
	EXPECT_EQ(s.forbidden.size(), 2u);
	EXPECT_EQ(s.window(), 2u);
	EXPECT_EQ(SftSpec(Alphabet::digits(2), {}).window(), 1u);
	EXPECT_THROW(SftSpec(Alphabet::digits(2), {Word{}}), error);
	EXPECT_THROW(SftSpec(Alphabet::digits(2), {Word{2}}), error);
}

TEST(SftToGraph, FullShiftIsOneVertexWithTwoLoops)
{
	auto g = sft_to_graph(SftSpec(Alphabet::digits(2), {}));
	EXPECT_EQ(g.vertex_count, 1u);
	EXPECT_EQ(g.edges, (std::vector<Edge>{{0, 0, 0}, {0, 0, 1}}));
}

TEST(SftToGraph, TwoPointShiftIsTwoLoops)
{
	auto x = fixtures::twopoint();
	const auto& g = x.essential();
	EXPECT_EQ(g.vertex_count, 2u);
	ASSERT_EQ(g.edges.size(), 2u);
	for (const auto& e : g.edges)
		EXPECT_EQ(e.source, e.target);
}

TEST(Shift, BlocksOfFixtures)
{
	EXPECT_EQ(strs(blocks(fixtures::golden(), 3)), (std::vector<std::string>{"000", "001", "010", "100", "101"}));
	EXPECT_EQ(blocks(fixtures::full(), 3).size(), 8u);
	auto even = strs(blocks(fixtures::even(), 3));
	EXPECT_EQ(even.size(), 7u);
	EXPECT_EQ(std::count(even.begin(), even.end(), "101"), 0);
	EXPECT_EQ(blocks(fixtures::golden(), 0).size(), 1u);
}

TEST(Shift, ContainsWord)
{
	EXPECT_FALSE(contains_word(fixtures::golden(), word("11")));
	EXPECT_TRUE(contains_word(fixtures::even(), word("1001")));
	EXPECT_FALSE(contains_word(fixtures::even(), word("10001")));
	for (const auto& x : fixtures::all_shifts())
		EXPECT_TRUE(contains_word(x, {}));
	EXPECT_THROW(contains_word(fixtures::golden(), Word{3}), error);
}

TEST(Shift, BlocksMatchOracleOnFixtures)
{
	for (const auto& name : support::fixture_names()) {
		auto x = support::fixture(name);
		auto g = oracle::fixture(name);
		for (std::size_t n = 1; n <= 10; ++n)
			EXPECT_EQ(strs(blocks(x, n)), oracle::language(g, n)) << name << " n=" << n;
	}
}

TEST(Shift, BlocksMatchOracleOnRandomShifts)
{
	std::mt19937_64 rng(2024);
	for (int trial = 0; trial < 150; ++trial) {
		auto forbidden = oracle::random_forbidden(rng);
		auto x = support::sft(forbidden);
		auto g = oracle::de_bruijn(2, forbidden);
		for (std::size_t n = 1; n <= 8; ++n)
			ASSERT_EQ(strs(blocks(x, n)), oracle::language(g, n)) << "trial " << trial << " n=" << n;
	}
}

TEST(Shift, EmptyShiftIsDefined)
{
	auto x = support::sft({"0", "1"});
	EXPECT_TRUE(x.empty());
	EXPECT_TRUE(contains_word(x, {}));
	EXPECT_FALSE(contains_word(x, word("0")));
	EXPECT_EQ(blocks(x, 0).size(), 1u);
	EXPECT_TRUE(blocks(x, 3).empty());
	// A forbidden list that only leaves transient words is empty too.
	EXPECT_TRUE(support::sft({"00", "11", "01"}).empty());
}

TEST(Shift, FactorialAndExtendable)
{
	for (const auto& x : fixtures::all_shifts())
		for (std::size_t n = 1; n <= 8; ++n)
			for (const auto& w : blocks(x, n)) {
				for (std::size_t i = 0; i < w.size(); ++i)
					for (std::size_t j = i + 1; j <= w.size(); ++j)
						ASSERT_TRUE(contains_word(x, Word(w.begin() + i, w.begin() + j)));
				bool extends = false;
				for (Symbol a = 0; a < 2 && !extends; ++a)
					for (Symbol b = 0; b < 2 && !extends; ++b) {
						Word awb{a};
						awb.insert(awb.end(), w.begin(), w.end());
						awb.push_back(b);
						extends = contains_word(x, awb);
					}
				ASSERT_TRUE(extends) << x.name() << " " << str(w);
			}
}

TEST(Shift, DeterministicPresentationCountsBlocks)
{
	for (const auto& x : fixtures::all_shifts()) {
		const auto& d = x.acceptor();
		std::vector<std::uint64_t> paths(d.states(), 0);
		paths[d.initial] = 1;
		for (std::size_t n = 1; n <= 12; ++n) {
			std::vector<std::uint64_t> next(d.states(), 0);
			for (Vertex s = 0; s < d.states(); ++s)
				for (Symbol a = 0; a < 2; ++a)
					if (auto t = d.next(s, a); t != Dfa::none)
						next[static_cast<std::size_t>(t)] += paths[s];
			paths = next;
			std::uint64_t total = 0;
			for (auto p : paths)
				total += p;
			EXPECT_EQ(total, blocks(x, n).size());
		}
		EXPECT_TRUE(x.deterministic().is_deterministic());
	}
}

TEST(EqualShifts, TwoPresentationsOfGoldenMean)
{
	LabeledGraph g(2, 2);
	g.add_edge(0, 0, 0);
	g.add_edge(0, 1, 1);
	g.add_edge(1, 0, 0);
	auto from_graph = Shift::from_graph(Alphabet::digits(2), g);
	EXPECT_TRUE(equal_shifts(fixtures::golden(), from_graph).yes());
}

TEST(EqualShifts, GoldenAgainstEvenGivesShortestWitness)
{
	auto golden = fixtures::golden();
	auto even = fixtures::even();
	auto d = equal_shifts(golden, even);
	ASSERT_TRUE(d.no());
	ASSERT_NE(d.get<Word>(), nullptr);
	EXPECT_EQ(str(*d.get<Word>()), "11");
	// "101" also separates them, in the other direction.
	EXPECT_TRUE(contains_word(golden, word("101")));
	EXPECT_FALSE(contains_word(even, word("101")));
}

TEST(EqualShifts, FullAgainstGolden)
{
	auto d = equal_shifts(fixtures::full(), fixtures::golden());
	ASSERT_TRUE(d.no());
	EXPECT_EQ(str(*d.get<Word>()), "11");
}

TEST(EqualShifts, ReflexiveAndSymmetric)
{
	auto all = fixtures::all_shifts();
	for (const auto& x : all) {
		EXPECT_TRUE(equal_shifts(x, x).yes());
		for (const auto& y : all)
			EXPECT_EQ(equal_shifts(x, y).verdict, equal_shifts(y, x).verdict);
	}
}

TEST(EqualShifts, AgreesWithBlockComparison)
{
	// Independent route: compare n-block sets up to the product of state counts.
	std::mt19937_64 rng(5);
	for (int trial = 0; trial < 100; ++trial) {
		auto x = support::sft(oracle::random_forbidden(rng, 2, 3));
		auto y = support::sft(oracle::random_forbidden(rng, 2, 3));
		std::size_t bound = (x.acceptor().states() + 1) * (y.acceptor().states() + 1);
		bool same = true;
		for (std::size_t n = 1; n <= bound && same; ++n)
			same = blocks(x, n) == blocks(y, n);
		auto d = equal_shifts(x, y);
		EXPECT_EQ(d.yes(), same);
		if (d.no()) {
			const auto& w = *d.get<Word>();
			EXPECT_NE(contains_word(x, w), contains_word(y, w));
		}
	}
}

TEST(EqualShifts, AlphabetMismatch)
{
	EXPECT_THROW(equal_shifts(fixtures::full(2), fixtures::full(3)), error);
}

TEST(HigherBlock, OrderOneIsIdentity)
{
	auto x = fixtures::golden();
	auto hb = higher_block(x, 1);
	EXPECT_TRUE(equal_shifts(hb.shift, x).yes());
	EXPECT_EQ(hb.forward, identity_automaton(x.alphabet()));
}

TEST(HigherBlock, GoldenPairs)
{
	auto hb = higher_block(fixtures::golden(), 2);
	EXPECT_EQ(hb.shift.alphabet().names(), (std::vector<std::string>{"00", "01", "10"}));
	for (std::size_t n = 1; n <= 10; ++n)
		EXPECT_EQ(blocks(hb.shift, n).size(), blocks(fixtures::golden(), n + 1).size());
}

TEST(HigherBlock, TwoPointRecodesToConstants)
{
	auto hb = higher_block(fixtures::twopoint(), 3);
	EXPECT_EQ(hb.shift.alphabet().names(), (std::vector<std::string>{"000", "111"}));
	EXPECT_EQ(blocks(hb.shift, 4).size(), 2u);
}

TEST(HigherBlock, PreservesCountsAndInverts)
{
	for (const auto& x : fixtures::all_shifts()) {
		if (x.name() == "mixnot_5")
			continue;
		for (std::size_t k = 1; k <= 3; ++k) {
			auto hb = higher_block(x, k);
			for (std::size_t n = 1; n <= 10; ++n)
				ASSERT_EQ(blocks(hb.shift, n).size(), blocks(x, n + k - 1).size()) << x.name() << " k=" << k;
			// forward then inverse recovers the word (minus the trailing k-1 letters).
			for (const auto& w : blocks(x, 8)) {
				auto coded = apply_to_word(hb.forward, w);
				EXPECT_TRUE(contains_word(hb.shift, coded));
				auto back = apply_to_word(hb.inverse, coded);
				EXPECT_EQ(back, Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(back.size())));
			}
		}
	}
}

TEST(HigherBlock, RejectsOrderZero)
{
	EXPECT_THROW(higher_block(fixtures::golden(), 0), error);
}
