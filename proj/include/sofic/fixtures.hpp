#pragma once

// Small named shifts and automata used by the tests, the CLI and the corpus.

#include <string>
#include <vector>

#include "automaton.hpp"
#include "shift.hpp"

namespace sofic::fixtures {

inline Alphabet binary() { return Alphabet::digits(2); }

inline Shift full(std::size_t k = 2)
{
	return Shift::from_sft(SftSpec(Alphabet::digits(k), {}), "full" + std::to_string(k));
}

/// No two consecutive 1s.
inline Shift golden() { return Shift::from_sft(SftSpec(binary(), {{1, 1}}), "golden"); }

/// Blocks of 0s between consecutive 1s have even length.
inline Shift even()
{
	LabeledGraph g(2);
	auto a = g.add_vertex("a");
	auto b = g.add_vertex("b");
	g.add_edge(a, a, 1);
	g.add_edge(a, b, 0);
	g.add_edge(b, a, 0);
	return Shift::from_graph(binary(), std::move(g), "even");
}

/// The two constant points 0^inf and 1^inf.
inline Shift twopoint() { return Shift::from_sft(SftSpec(binary(), {{0, 1}, {1, 0}}), "twopoint"); }

/// The two points ...0101... (irreducible of period 2).
inline Shift period2() { return Shift::from_sft(SftSpec(binary(), {{0, 0}, {1, 1}}), "period2"); }

/// The single point 0^inf.
inline Shift zero_point() { return Shift::from_sft(SftSpec(binary(), {{1}}), "zero"); }

/// Forbids 0 1^h 0^k 1 for 1 <= k <= h <= K.
inline Shift mixnot(std::size_t K)
{
	std::vector<Word> forbidden;
	for (std::size_t h = 1; h <= K; ++h)
		for (std::size_t k = 1; k <= h; ++k) {
			Word w{0};
			w.insert(w.end(), h, 1);
			w.insert(w.end(), k, 0);
			w.push_back(1);
			forbidden.push_back(std::move(w));
		}
	return Shift::from_sft(SftSpec(binary(), std::move(forbidden)), "mixnot_" + std::to_string(K));
}

/// x(g) xor x(g+1).
inline CellularAutomaton xor_rule() { return {binary(), binary(), 0, 1, {0, 1, 1, 0}}; }

/// Sends both letters to 0.
inline CellularAutomaton collapse() { return {binary(), binary(), 0, 0, {0, 0}}; }

inline CellularAutomaton identity() { return identity_automaton(binary()); }

inline CellularAutomaton constant_zero() { return {binary(), binary(), 0, 0, {0, 0}}; }

/// Every bundled shift, in a fixed order.
inline std::vector<Shift> all_shifts()
{
	std::vector<Shift> out{full(), golden(), even(), twopoint(), period2()};
	for (std::size_t K = 2; K <= 5; ++K)
		out.push_back(mixnot(K));
	return out;
}

} // namespace sofic::fixtures
