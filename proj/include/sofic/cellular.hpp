#pragma once

// Cellular automata between subshifts over Z: images, exact decisions for
// injectivity, pre-injectivity and surjectivity, and the consistency checks
// that tie them to strong irreducibility and entropy.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "automaton.hpp"
#include "decision.hpp"
#include "entropy.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "properties.hpp"
#include "shift.hpp"

namespace sofic {

/// Lifts of points of x as paths in a graph whose edges carry whole memory
/// windows: edge e spells windows[e], and its image letter is output[e].
struct WindowGraph {
	PathGraph paths;
	std::vector<Symbol> output;
};

inline WindowGraph window_graph(const CellularAutomaton& t, const Shift& x)
{
	require_same_alphabet(t.source(), x.alphabet(), "automaton source");
	WindowGraph w;
	w.paths = path_graph(x.lift_graph(), t.width());
	w.output.reserve(w.paths.windows.size());
	for (const auto& win : w.paths.windows)
		w.output.push_back(t.rule(win));
	return w;
}

/// The presentation of x with every edge relabeled by the image letter of its
/// window; its label sequences are exactly the points of t(x).
inline Shift image_presentation(const CellularAutomaton& t, const Shift& x)
{
	auto w = window_graph(t, x);
	LabeledGraph g(t.target().size(), w.paths.graph.vertex_count);
	for (std::size_t e = 0; e < w.paths.graph.edges.size(); ++e) {
		const auto& edge = w.paths.graph.edges[e];
		g.add_edge(edge.source, edge.target, w.output[e]);
	}
	std::string name = x.name().empty() ? std::string("image") : "image of " + x.name();
	return Shift::from_graph(t.target(), std::move(g), std::move(name));
}

/// Pairs of lifts with the same image. Vertex (p, q) has index p * n + q for
/// n window-graph vertices; an edge joins two window-graph edges with equal
/// image letters and is flagged when their input letters differ.
struct PairGraph {
	struct PairEdge {
		Vertex source = 0;
		Vertex target = 0;
		std::size_t first = 0;  // window-graph edge of the first lift
		std::size_t second = 0; // window-graph edge of the second lift
		bool differs = false;
	};

	std::size_t base = 0;
	std::vector<PairEdge> edges;

	std::size_t vertex_count() const noexcept { return base * base; }
	bool diagonal(Vertex v) const noexcept { return v / base == v % base; }
};

inline PairGraph pair_graph(const WindowGraph& w, std::size_t symbol_count, std::size_t cap = 50'000'000)
{
	const auto& h = w.paths.graph;
	PairGraph p;
	p.base = h.vertex_count;
	std::vector<std::vector<std::size_t>> by_output(symbol_count);
	for (std::size_t e = 0; e < h.edges.size(); ++e)
		by_output[w.output[e]].push_back(e);
	for (const auto& group : by_output)
		for (auto a : group)
			for (auto b : group) {
				const auto& ea = h.edges[a];
				const auto& eb = h.edges[b];
				p.edges.push_back({static_cast<Vertex>(ea.source * p.base + eb.source), static_cast<Vertex>(ea.target * p.base + eb.target), a, b,
				                   ea.label != eb.label});
				if (p.edges.size() > cap)
					throw error(errc::state_blowup, "pair graph exceeds " + std::to_string(cap) + " edges");
			}
	std::sort(p.edges.begin(), p.edges.end(), [&](const auto& x, const auto& y) {
		return std::tie(x.source, h.edges[x.first].label, h.edges[x.second].label, x.target) <
		       std::tie(y.source, h.edges[y.first].label, h.edges[y.second].label, y.target);
	});
	return p;
}

namespace detail {

/// Greatest vertex set in which every member has an in-neighbour (forward =
/// false) or out-neighbour (forward = true) along an accepted edge of the set.
template <class Accept>
std::vector<bool> infinite_path_mask(const PairGraph& p, bool forward, Accept accept)
{
	const std::size_t n = p.vertex_count();
	std::vector<std::size_t> degree(n, 0);
	std::vector<std::vector<std::size_t>> touching(n); // edges whose other end is the key
	for (std::size_t i = 0; i < p.edges.size(); ++i) {
		const auto& e = p.edges[i];
		if (!accept(e))
			continue;
		Vertex self = forward ? e.source : e.target;
		Vertex other = forward ? e.target : e.source;
		++degree[self];
		touching[other].push_back(i);
	}
	std::vector<bool> alive(n, true);
	std::vector<Vertex> queue;
	for (Vertex v = 0; v < n; ++v)
		if (degree[v] == 0) {
			alive[v] = false;
			queue.push_back(v);
		}
	while (!queue.empty()) {
		Vertex v = queue.back();
		queue.pop_back();
		for (auto i : touching[v]) {
			const auto& e = p.edges[i];
			Vertex self = forward ? e.source : e.target;
			if (alive[self] && --degree[self] == 0) {
				alive[self] = false;
				queue.push_back(self);
			}
		}
	}
	return alive;
}

/// Walk from v along accepted edges (backward or forward) staying inside
/// `inside` until a vertex repeats. Returns the edge indices in walk order and
/// the position where the cycle starts.
template <class Accept>
std::pair<std::vector<std::size_t>, std::size_t> walk_to_cycle(const PairGraph& p, const std::vector<std::vector<std::size_t>>& adj, Vertex v,
                                                               const std::vector<bool>& inside, bool forward, Accept accept)
{
	std::vector<std::size_t> walk;
	std::vector<std::int64_t> seen(p.vertex_count(), -1);
	seen[v] = 0;
	while (true) {
		std::optional<std::size_t> pick;
		for (auto i : adj[v]) {
			const auto& e = p.edges[i];
			Vertex next = forward ? e.target : e.source;
			if (accept(e) && inside[next]) {
				pick = i;
				break;
			}
		}
		if (!pick)
			throw std::logic_error("walk_to_cycle: vertex has no continuation inside its set");
		walk.push_back(*pick);
		v = forward ? p.edges[*pick].target : p.edges[*pick].source;
		if (seen[v] >= 0)
			return {walk, static_cast<std::size_t>(seen[v])};
		seen[v] = static_cast<std::int64_t>(walk.size());
	}
}

struct PairPath {
	std::vector<std::size_t> left_cycle; // forward order
	std::vector<std::size_t> middle;
	std::vector<std::size_t> right_cycle;
};

/// Complete a finite pair path (from `start` to `end`) with periodic tails
/// taken from the accepted edges inside `left_ok` / `right_ok`.
template <class Accept>
PairPath with_tails(const PairGraph& p, Vertex start, Vertex end, std::vector<std::size_t> core, const std::vector<bool>& left_ok,
                    const std::vector<bool>& right_ok, Accept accept)
{
	std::vector<std::vector<std::size_t>> in(p.vertex_count()), out(p.vertex_count());
	for (std::size_t i = 0; i < p.edges.size(); ++i) {
		in[p.edges[i].target].push_back(i);
		out[p.edges[i].source].push_back(i);
	}
	PairPath r;
	auto [back, back_cycle] = walk_to_cycle(p, in, start, left_ok, false, accept);
	// back[0] enters start, back[j] enters the source of back[j-1].
	r.left_cycle.assign(back.rbegin(), back.rend() - static_cast<std::ptrdiff_t>(back_cycle));
	for (std::size_t j = back_cycle; j-- > 0;)
		r.middle.push_back(back[j]);
	r.middle.insert(r.middle.end(), core.begin(), core.end());
	auto [fwd, fwd_cycle] = walk_to_cycle(p, out, end, right_ok, true, accept);
	r.middle.insert(r.middle.end(), fwd.begin(), fwd.begin() + static_cast<std::ptrdiff_t>(fwd_cycle));
	r.right_cycle.assign(fwd.begin() + static_cast<std::ptrdiff_t>(fwd_cycle), fwd.end());
	return r;
}

inline PointPairWitness to_witness(const CellularAutomaton& t, const WindowGraph& w, const PairGraph& p, const PairPath& path)
{
	const auto& h = w.paths.graph;
	auto letters = [&](const std::vector<std::size_t>& edges, bool first) {
		Word out;
		for (auto i : edges)
			out.push_back(h.edges[first ? p.edges[i].first : p.edges[i].second].label);
		return out;
	};
	PointPairWitness pw;
	pw.first = {letters(path.left_cycle, true), letters(path.middle, true), letters(path.right_cycle, true)};
	pw.second = {letters(path.left_cycle, false), letters(path.middle, false), letters(path.right_cycle, false)};
	std::size_t reps = t.width() + 1;
	pw.first_window = pw.first.expand(reps);
	pw.second_window = pw.second.expand(reps);
	if (pw.first_window.letters == pw.second_window.letters ||
	    apply_to_word(t, pw.first_window.letters) != apply_to_word(t, pw.second_window.letters))
		throw std::logic_error("pair witness failed its own check");
	return pw;
}

} // namespace detail

/// Exact, point-level: t fails to be pre-injective on x iff two distinct
/// points of x agreeing outside a finite set share their image. Such a pair
/// lifts to a path in the pair graph that starts where an infinite backward
/// run of equal-letter pairs ends, passes a differing pair, and ends where an
/// infinite forward run of equal-letter pairs begins. The witness is the
/// shortest such middle section.
inline Decision is_pre_injective(const CellularAutomaton& t, const Shift& x)
{
	if (x.empty())
		return make_decision(true);
	auto w = window_graph(t, x);
	auto p = pair_graph(w, t.target().size());
	auto same = [](const PairGraph::PairEdge& e) { return !e.differs; };
	auto left_ok = detail::infinite_path_mask(p, false, same);
	auto right_ok = detail::infinite_path_mask(p, true, same);

	const std::size_t n = p.vertex_count();
	std::vector<std::vector<std::size_t>> out(n);
	for (std::size_t i = 0; i < p.edges.size(); ++i)
		out[p.edges[i].source].push_back(i);
	// BFS over (vertex, diverged) from every left-extendable vertex.
	std::vector<std::int64_t> via(2 * n, -2); // entering edge, -1 for sources
	std::vector<std::size_t> from(2 * n, 0);
	std::deque<std::size_t> queue;
	for (Vertex v = 0; v < n; ++v)
		if (left_ok[v]) {
			via[2 * v] = -1;
			queue.push_back(2 * v);
		}
	std::optional<std::size_t> goal;
	while (!queue.empty() && !goal) {
		auto s = queue.front();
		queue.pop_front();
		for (auto i : out[s / 2]) {
			const auto& e = p.edges[i];
			std::size_t next = 2 * e.target + ((s % 2 || e.differs) ? 1 : 0);
			if (via[next] != -2)
				continue;
			via[next] = static_cast<std::int64_t>(i);
			from[next] = s;
			if (next % 2 && right_ok[e.target]) {
				goal = next;
				break;
			}
			queue.push_back(next);
		}
	}
	if (!goal)
		return make_decision(true);
	std::vector<std::size_t> core;
	std::size_t s = *goal;
	for (; via[s] >= 0; s = from[s])
		core.push_back(static_cast<std::size_t>(via[s]));
	std::reverse(core.begin(), core.end());
	Vertex start = static_cast<Vertex>(s / 2);
	Vertex end = static_cast<Vertex>(*goal / 2);
	auto path = detail::with_tails(p, start, end, std::move(core), left_ok, right_ok, same);
	return make_decision(false, detail::to_witness(t, w, p, path));
}

/// Exact, point-level: t is injective on x iff no bi-infinite path of the pair
/// graph uses a differing pair. Prefers a short cycle through such a pair,
/// which yields two periodic points with the same image.
inline Decision is_injective(const CellularAutomaton& t, const Shift& x)
{
	if (x.empty())
		return make_decision(true);
	auto w = window_graph(t, x);
	auto p = pair_graph(w, t.target().size());
	auto any = [](const PairGraph::PairEdge&) { return true; };
	auto back = detail::infinite_path_mask(p, false, any);
	auto fwd = detail::infinite_path_mask(p, true, any);
	const std::size_t n = p.vertex_count();
	std::vector<bool> essential(n);
	for (std::size_t v = 0; v < n; ++v)
		essential[v] = back[v] && fwd[v];

	std::vector<std::vector<Vertex>> succ(n);
	std::vector<std::vector<std::size_t>> out(n);
	for (std::size_t i = 0; i < p.edges.size(); ++i) {
		const auto& e = p.edges[i];
		if (essential[e.source] && essential[e.target]) {
			succ[e.source].push_back(e.target);
			out[e.source].push_back(i);
		}
	}
	auto scc = strongly_connected_components(n, succ);

	// One BFS per candidate edge; the candidate count is capped so large pair
	// graphs stay linear. The witness is then short but not always shortest.
	constexpr std::size_t max_candidates = 32;
	std::size_t candidates = 0;
	std::optional<std::vector<std::size_t>> best_cycle;
	std::optional<std::size_t> any_diff;
	for (std::size_t i = 0; i < p.edges.size() && candidates < max_candidates; ++i) {
		const auto& e = p.edges[i];
		if (!e.differs || !essential[e.source] || !essential[e.target])
			continue;
		if (!any_diff)
			any_diff = i;
		if (scc.component[e.source] != scc.component[e.target])
			continue;
		++candidates;
		// Shortest return path target -> source.
		std::vector<std::int64_t> via(n, -2);
		std::deque<Vertex> queue{e.target};
		via[e.target] = -1;
		while (!queue.empty() && via[e.source] == -2) {
			Vertex v = queue.front();
			queue.pop_front();
			for (auto j : out[v])
				if (via[p.edges[j].target] == -2) {
					via[p.edges[j].target] = static_cast<std::int64_t>(j);
					queue.push_back(p.edges[j].target);
				}
		}
		std::vector<std::size_t> cycle{i};
		std::vector<std::size_t> ret;
		for (Vertex v = e.source; via[v] >= 0; v = p.edges[static_cast<std::size_t>(via[v])].source)
			ret.push_back(static_cast<std::size_t>(via[v]));
		std::reverse(ret.begin(), ret.end());
		cycle.insert(cycle.end(), ret.begin(), ret.end());
		if (!best_cycle || cycle.size() < best_cycle->size())
			best_cycle = std::move(cycle);
	}
	if (!any_diff)
		return make_decision(true);
	detail::PairPath path;
	if (best_cycle) {
		path.left_cycle = *best_cycle;
		path.right_cycle = *best_cycle;
	} else {
		const auto& e = p.edges[*any_diff];
		path = detail::with_tails(p, e.source, e.target, {*any_diff}, essential, essential, any);
	}
	return make_decision(false, detail::to_witness(t, w, p, path));
}

/// t(x) = y, decided by language equality of presentations. Requires t(x)
/// inside y; a false verdict carries the shortest word of L(y) missing from
/// L(t(x)).
inline Decision is_surjective(const CellularAutomaton& t, const Shift& x, const Shift& y)
{
	require_same_alphabet(t.target(), y.alphabet(), "automaton target");
	auto image = image_presentation(t, x);
	if (auto w = language_difference(image, y))
		throw error(errc::not_into_target, "image word '" + y.alphabet().format(*w) + "' is not in the target shift");
	if (equal_shifts(image, y).yes())
		return make_decision(true);
	auto missing = language_difference(y, image);
	if (!missing)
		throw std::logic_error("is_surjective: unequal shifts without a separating word");
	return make_decision(false, *missing);
}

/// Image inside x, or NotEndomorphism carrying the first image word outside it.
inline Shift require_endomorphism(const CellularAutomaton& t, const Shift& x)
{
	require_same_alphabet(t.source(), t.target(), "endomorphism alphabets");
	auto image = image_presentation(t, x);
	if (auto w = language_difference(image, x))
		throw error(errc::not_endomorphism, "image word '" + x.alphabet().format(*w) + "' is not in the shift");
	return image;
}

struct MyhillReport {
	Decision strongly_irreducible;
	Decision pre_injective;
	Decision surjective;
	bool premise = false;       // SI and pre-injective
	bool contradiction = false; // premise holds but not surjective
};

inline MyhillReport check_myhill(const CellularAutomaton& t, const Shift& x)
{
	require_endomorphism(t, x);
	MyhillReport r;
	r.strongly_irreducible = is_strongly_irreducible(x);
	r.pre_injective = is_pre_injective(t, x);
	r.surjective = is_surjective(t, x, x);
	r.premise = r.strongly_irreducible.yes() && r.pre_injective.yes();
	r.contradiction = r.premise && !r.surjective.yes();
	return r;
}

struct EntropyPreservation {
	EntropyEstimate domain;
	EntropyEstimate image;
	bool monotone = false;          // h(t(x)) <= h(x) up to the certified error
	bool equality_required = false; // x strongly irreducible and t pre-injective
	bool equal = false;             // |h(x) - h(t(x))| <= 2*tol
	bool ok = false;
};

inline EntropyPreservation check_entropy_preservation(const CellularAutomaton& t, const Shift& x, double tol)
{
	EntropyPreservation r;
	auto image = image_presentation(t, x);
	r.domain = entropy_spectral(x, tol);
	r.image = entropy_spectral(image, tol);
	r.monotone = r.image.value <= r.domain.value + r.domain.error_bound + r.image.error_bound;
	r.equal = std::abs(r.domain.value - r.image.value) <= 2 * tol;
	r.equality_required = is_strongly_irreducible(x).yes() && is_pre_injective(t, x).yes();
	r.ok = r.monotone && (!r.equality_required || r.equal);
	return r;
}

/// Uniform rule table from a seeded 64-bit Mersenne twister.
inline CellularAutomaton random_ca(const Alphabet& a, const Alphabet& b, std::int64_t left, std::int64_t right, std::uint64_t seed,
                                   std::size_t max_width = 4)
{
	if (right < left)
		throw error(errc::invalid_argument, "memory interval must satisfy l <= r");
	auto width = static_cast<std::size_t>(right - left + 1);
	if (width > max_width)
		throw error(errc::table_too_large, "memory width " + std::to_string(width) + " exceeds " + std::to_string(max_width));
	std::mt19937_64 rng(seed);
	std::vector<Symbol> table(CellularAutomaton::table_size(a.size(), width));
	for (auto& s : table)
		s = static_cast<Symbol>(rng() % b.size());
	return {a, b, left, right, std::move(table)};
}

struct MooreSearch {
	std::optional<CellularAutomaton> found;
	std::size_t examined = 0;
	std::size_t endomorphisms = 0;
	bool exhaustive = false;
};

/// Looks for an endomorphism of x that is surjective but not pre-injective,
/// over memories [0, w-1] for w = 1..memory_bound. Enumerates every table
/// when the total count fits in the budget, otherwise samples `budget`
/// random tables. An empty result proves nothing unless `exhaustive`.
inline MooreSearch search_moore_counterexample(const Shift& x, std::size_t memory_bound, std::size_t budget, std::uint64_t seed = 0)
{
	const auto& a = x.alphabet();
	MooreSearch r;
	// Total number of tables, saturating at budget + 1.
	std::size_t total = 0;
	for (std::size_t w = 1; w <= memory_bound && total <= budget; ++w) {
		std::size_t entries = CellularAutomaton::table_size(a.size(), w);
		std::size_t count = 1;
		for (std::size_t i = 0; i < entries && count <= budget; ++i)
			count *= a.size();
		total += count;
	}
	r.exhaustive = total <= budget;

	auto test = [&](const CellularAutomaton& t) {
		++r.examined;
		auto image = image_presentation(t, x);
		if (language_difference(image, x))
			return false;
		++r.endomorphisms;
		if (!equal_shifts(image, x).yes())
			return false;
		return is_pre_injective(t, x).no();
	};

	if (r.exhaustive) {
		for (std::size_t w = 1; w <= memory_bound; ++w) {
			std::vector<Symbol> table(CellularAutomaton::table_size(a.size(), w), 0);
			while (true) {
				CellularAutomaton t(a, a, 0, static_cast<std::int64_t>(w) - 1, table);
				if (test(t)) {
					r.found = std::move(t);
					return r;
				}
				std::size_t i = table.size();
				while (i > 0 && table[i - 1] + 1u == a.size())
					table[--i] = 0;
				if (i == 0)
					break;
				++table[i - 1];
			}
		}
		return r;
	}
	std::mt19937_64 rng(seed);
	for (std::size_t n = 0; n < budget; ++n) {
		auto w = 1 + static_cast<std::int64_t>(rng() % memory_bound);
		auto t = random_ca(a, a, 0, w - 1, rng(), memory_bound);
		if (test(t)) {
			r.found = std::move(t);
			return r;
		}
	}
	return r;
}

} // namespace sofic
