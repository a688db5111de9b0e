#pragma once

// Irreducibility, topological mixing and strong irreducibility of sofic
// shifts, with the gap certificates that witness them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "decision.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "shift.hpp"

namespace sofic {

using StateSet = std::vector<bool>;

namespace detail {

inline bool any_of(const StateSet& s)
{
	return std::find(s.begin(), s.end(), true) != s.end();
}

inline bool intersects(const StateSet& a, const StateSet& b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		if (a[i] && b[i])
			return true;
	return false;
}

// Image of a state set under one symbol.
inline StateSet step(const Dfa& d, const StateSet& s, Symbol a)
{
	StateSet out(d.states(), false);
	for (Vertex q = 0; q < s.size(); ++q)
		if (s[q])
			if (auto t = d.next(q, a); t != Dfa::none)
				out[static_cast<std::size_t>(t)] = true;
	return out;
}

// States reachable in exactly one step (any symbol).
inline StateSet step_any(const Dfa& d, const StateSet& s)
{
	StateSet out(d.states(), false);
	for (Vertex q = 0; q < s.size(); ++q)
		if (s[q])
			for (Symbol a = 0; a < d.alphabet_size; ++a)
				if (auto t = d.next(q, a); t != Dfa::none)
					out[static_cast<std::size_t>(t)] = true;
	return out;
}

// States from which w can be read.
inline StateSet readable_from(const Dfa& d, const Word& w)
{
	StateSet out(d.states(), false);
	for (Vertex q = 0; q < d.states(); ++q)
		out[q] = d.run(q, w) != Dfa::none;
	return out;
}

// R_0 = {start}, R_{n+1} = step_any(R_n), listed until the first repeat.
// `period_start` is the index the sequence returns to.
struct ReachSequence {
	std::vector<StateSet> sets;
	std::size_t period_start = 0;
};

inline ReachSequence reach_sequence(const Dfa& d, StateSet start)
{
	ReachSequence seq;
	std::map<StateSet, std::size_t> seen;
	while (true) {
		auto [it, inserted] = seen.emplace(start, seq.sets.size());
		if (!inserted) {
			seq.period_start = it->second;
			return seq;
		}
		seq.sets.push_back(start);
		start = step_any(d, start);
	}
}

// Largest n with R_n disjoint from `target`, plus one (0 if never); nullopt
// when the disjointness recurs forever.
inline std::optional<std::size_t> first_good_tail(const ReachSequence& seq, const StateSet& target)
{
	std::size_t gap = 0;
	for (std::size_t n = 0; n < seq.sets.size(); ++n) {
		if (intersects(seq.sets[n], target))
			continue;
		if (n >= seq.period_start)
			return std::nullopt;
		gap = n + 1;
	}
	return gap;
}

inline StateSet singleton(std::size_t n, std::size_t q)
{
	StateSet s(n, false);
	s[q] = true;
	return s;
}

inline Dfa graph_as_dfa(const LabeledGraph& g)
{
	Dfa d;
	d.alphabet_size = g.alphabet_size;
	d.table.assign(g.vertex_count * g.alphabet_size, Dfa::none);
	for (const auto& e : g.edges)
		d.table[e.source * g.alphabet_size + e.label] = static_cast<std::int32_t>(e.target);
	return d;
}

// Shortest word from `from` into any state of `target` (breadth-first,
// symbols in increasing order).
inline std::optional<Word> shortest_path_word(const Dfa& d, Vertex from, const StateSet& target)
{
	const std::size_t n = d.states();
	std::vector<std::int64_t> parent(n, -1);
	std::vector<Symbol> via(n, 0);
	std::deque<Vertex> q{from};
	parent[from] = from;
	while (!q.empty()) {
		Vertex s = q.front();
		q.pop_front();
		if (target[s]) {
			Word w;
			for (Vertex cur = s; cur != from; cur = static_cast<Vertex>(parent[cur]))
				w.push_back(via[cur]);
			std::reverse(w.begin(), w.end());
			return w;
		}
		for (Symbol a = 0; a < d.alphabet_size; ++a) {
			auto t = d.next(s, a);
			if (t != Dfa::none && parent[static_cast<std::size_t>(t)] < 0) {
				parent[static_cast<std::size_t>(t)] = s;
				via[static_cast<std::size_t>(t)] = a;
				q.push_back(static_cast<Vertex>(t));
			}
		}
	}
	return std::nullopt;
}

} // namespace detail

/// Irreducibility of the block language: for every u, v in L(X) some w has
/// uwv in L(X). Decided on the minimal acceptor: it suffices that from every
/// bottom strongly connected component the union of follower sets is all of
/// L(X). On failure the witness is a pair (u, v) that cannot be joined.
inline Decision is_irreducible(const Shift& x)
{
	if (x.empty()) {
		Decision d = make_decision(false);
		d.note = "empty shift";
		return d;
	}
	const auto& dfa = x.acceptor();
	const std::size_t n = dfa.states();
	auto g = dfa.to_graph();
	auto scc = strongly_connected_components(g);
	std::vector<bool> leaves(scc.count, false);
	for (const auto& e : g.edges)
		if (scc.component[e.source] != scc.component[e.target])
			leaves[scc.component[e.source]] = true;

	std::vector<bool> checked(scc.count, false);
	for (Vertex s = 0; s < n; ++s) {
		auto c = scc.component[s];
		if (leaves[c] || checked[c])
			continue;
		checked[c] = true;
		StateSet bottom(n, false);
		for (Vertex q = 0; q < n; ++q)
			bottom[q] = scc.component[q] == c;
		// Search pairs (state of L, set of states reachable inside `bottom`)
		// for a word of L that no state of `bottom` can read.
		using Node = std::pair<std::int32_t, StateSet>;
		std::map<Node, std::pair<Node, Symbol>> parent;
		Node start{static_cast<std::int32_t>(dfa.initial), bottom};
		parent.emplace(start, std::pair{start, Symbol{0}});
		std::deque<Node> queue{start};
		std::optional<Word> v;
		while (!queue.empty() && !v) {
			Node cur = queue.front();
			queue.pop_front();
			for (Symbol a = 0; a < dfa.alphabet_size && !v; ++a) {
				auto p = dfa.next(static_cast<Vertex>(cur.first), a);
				if (p == Dfa::none)
					continue;
				Node next{p, detail::step(dfa, cur.second, a)};
				if (parent.count(next))
					continue;
				parent.emplace(next, std::pair{cur, a});
				if (!detail::any_of(next.second)) {
					Word w;
					for (Node at = next; at != start; at = parent.at(at).first)
						w.push_back(parent.at(at).second);
					std::reverse(w.begin(), w.end());
					v = std::move(w);
				}
				queue.push_back(std::move(next));
			}
		}
		if (v) {
			auto u = detail::shortest_path_word(dfa, dfa.initial, bottom);
			return make_decision(false, WordPairWitness{*u, *v});
		}
	}
	return make_decision(true);
}

/// Shortest word u0 that drives every vertex of the right-resolving
/// presentation into a single vertex q0. Among words of equal length the
/// search prefers larger symbols first.
inline SyncWitness synchronizing_word(const Shift& x, std::size_t state_cap = default_state_cap)
{
	if (x.empty())
		throw error(errc::no_sync_word, "empty shift has no synchronizing word");
	const auto& g = x.deterministic();
	auto d = detail::graph_as_dfa(g);
	const std::size_t n = g.vertex_count;
	StateSet all(n, true);
	if (n == 1)
		return {{}, 0};
	std::map<StateSet, std::pair<StateSet, Symbol>> parent;
	parent.emplace(all, std::pair{all, Symbol{0}});
	std::deque<StateSet> queue{all};
	while (!queue.empty()) {
		StateSet cur = queue.front();
		queue.pop_front();
		for (Symbol a = static_cast<Symbol>(d.alphabet_size); a-- > 0;) {
			auto next = detail::step(d, cur, a);
			auto count = std::count(next.begin(), next.end(), true);
			if (count == 0 || parent.count(next))
				continue;
			parent.emplace(next, std::pair{cur, a});
			if (count == 1) {
				Word w;
				for (StateSet at = next; at != all; at = parent.at(at).first)
					w.push_back(parent.at(at).second);
				std::reverse(w.begin(), w.end());
				auto q0 = static_cast<Vertex>(std::find(next.begin(), next.end(), true) - next.begin());
				return {std::move(w), q0};
			}
			if (parent.size() > state_cap)
				throw error(errc::no_sync_word, "subset search exceeded the state cap");
			queue.push_back(std::move(next));
		}
	}
	throw error(errc::no_sync_word, "no synchronizing word for this presentation");
}

struct MixingReport {
	bool irreducible = false;
	std::size_t cycle_gcd = 0;
	bool mixing = false;
	/// Strongly connected components of the right-resolving presentation.
	std::size_t components = 0;
	/// Cyclic class of each vertex of the synchronized component (empty when
	/// reducible); a mixing shift has a single class.
	std::vector<std::size_t> period_class;
	std::optional<WordPairWitness> not_irreducible;
};

namespace detail {

// The strongly connected component of q0 in the right-resolving
// presentation, with q0 renumbered.
struct SyncComponent {
	LabeledGraph graph;
	Vertex q0 = 0;
};

inline SyncComponent sync_component(const Shift& x, const SyncWitness& sync)
{
	const auto& g = x.deterministic();
	auto scc = strongly_connected_components(g);
	StateSet keep(g.vertex_count, false);
	Vertex q0 = 0;
	for (Vertex v = 0; v < g.vertex_count; ++v) {
		keep[v] = scc.component[v] == scc.component[sync.vertex];
		if (v < sync.vertex && keep[v])
			++q0;
	}
	return {induced_subgraph(g, keep), q0};
}

} // namespace detail

inline MixingReport is_mixing(const Shift& x)
{
	MixingReport r;
	if (x.empty())
		return r;
	const auto& g = x.deterministic();
	auto scc = strongly_connected_components(g);
	r.components = scc.count;
	auto irr = is_irreducible(x);
	r.irreducible = irr.yes();
	if (!r.irreducible) {
		if (auto w = irr.get<WordPairWitness>())
			r.not_irreducible = *w;
		std::vector<bool> seen(scc.count, false);
		for (Vertex v = 0; v < g.vertex_count; ++v)
			if (!seen[scc.component[v]]) {
				seen[scc.component[v]] = true;
				r.cycle_gcd = std::gcd(r.cycle_gcd, cycle_gcd(g, scc, v));
			}
		return r;
	}
	auto sync = synchronizing_word(x);
	auto comp = detail::sync_component(x, sync);
	auto local = strongly_connected_components(comp.graph);
	r.cycle_gcd = cycle_gcd(comp.graph, local, comp.q0);
	r.mixing = r.cycle_gcd == 1;
	// Cyclic classes: distance from q0 modulo the period.
	std::vector<std::int64_t> dist(comp.graph.vertex_count, -1);
	auto succ = successors(comp.graph);
	std::deque<Vertex> q{comp.q0};
	dist[comp.q0] = 0;
	while (!q.empty()) {
		Vertex v = q.front();
		q.pop_front();
		for (Vertex w : succ[v])
			if (dist[w] < 0) {
				dist[w] = dist[v] + 1;
				q.push_back(w);
			}
	}
	for (auto d : dist)
		r.period_class.push_back(r.cycle_gcd == 0 ? 0 : static_cast<std::size_t>(d) % r.cycle_gcd);
	return r;
}

/// Least N0 such that for all u, v in L(X) and every N >= N0 some w of
/// length N has uwv in L(X). Exact: u matters only through the acceptor state
/// it leads to, v only through the set of states that can read it, and the
/// exact-N reachable sets are eventually periodic.
inline std::size_t minimal_gap(const Shift& x, std::size_t search_cap, std::size_t state_cap = default_state_cap)
{
	if (x.empty())
		throw error(errc::not_mixing, "empty shift");
	const auto& d = x.acceptor();
	const std::size_t n = d.states();
	// Classes of v: the sets I_v = {states that can read v}, v in L.
	std::vector<StateSet> classes;
	std::map<StateSet, bool> seen;
	std::deque<StateSet> queue{StateSet(n, true)};
	seen.emplace(queue.front(), true);
	while (!queue.empty()) {
		StateSet cur = queue.front();
		queue.pop_front();
		classes.push_back(cur);
		for (Symbol a = 0; a < d.alphabet_size; ++a) {
			StateSet pre(n, false);
			for (Vertex s = 0; s < n; ++s)
				if (auto t = d.next(s, a); t != Dfa::none && cur[static_cast<std::size_t>(t)])
					pre[s] = true;
			if (!pre[d.initial] || seen.count(pre))
				continue;
			if (seen.size() > state_cap)
				throw error(errc::state_blowup, "too many predecessor classes");
			seen.emplace(pre, true);
			queue.push_back(std::move(pre));
		}
	}
	std::size_t gap = 0;
	for (Vertex p = 0; p < n; ++p) {
		auto seq = detail::reach_sequence(d, detail::singleton(n, p));
		for (const auto& cls : classes) {
			auto g = detail::first_good_tail(seq, cls);
			if (!g)
				throw error(errc::cap_exceeded, "some pair of words has arbitrarily large unfillable gaps (not mixing)");
			gap = std::max(gap, *g);
		}
	}
	if (gap > search_cap)
		throw error(errc::cap_exceeded, "minimal gap " + std::to_string(gap) + " exceeds the search cap " + std::to_string(search_cap));
	return gap;
}

/// The constructive certificate: a synchronizing word u0 ending at q0 in the
/// synchronized component, n0 such that u0 w u0 is legal for every |w| >= n0,
/// and the directed diameter D of that component. Any gap of length
/// n0 + |u0| + 2D can be bridged.
inline SiCertificate si_certificate(const Shift& x)
{
	auto mix = is_mixing(x);
	if (!mix.mixing)
		throw error(errc::not_mixing, "shift is not topologically mixing, hence not strongly irreducible");
	SiCertificate cert;
	cert.sync = synchronizing_word(x);
	auto comp = detail::sync_component(x, cert.sync);
	auto d = detail::graph_as_dfa(comp.graph);
	const std::size_t n = comp.graph.vertex_count;
	auto seq = detail::reach_sequence(d, detail::singleton(n, comp.q0));
	auto n0 = detail::first_good_tail(seq, detail::readable_from(d, cert.sync.word));
	if (!n0)
		throw std::logic_error("si_certificate: mixing shift with unbounded return gaps");
	cert.n0 = *n0;
	cert.l0 = cert.n0 + cert.sync.length();
	auto diameter = directed_diameter(comp.graph);
	if (diameter < 0)
		throw std::logic_error("si_certificate: synchronized component is not strongly connected");
	cert.diameter = static_cast<std::size_t>(diameter);
	cert.n0_bound = cert.l0 + 2 * cert.diameter;
	cert.n0_min = minimal_gap(x, cert.n0_bound);
	return cert;
}

/// A word w with |w| = N and uwv in L(X), lexicographically least, or
/// nothing if no such word exists.
inline std::optional<Word> gap_witness(const Shift& x, const Word& u, const Word& v, std::size_t N)
{
	if (!contains_word(x, u) || !contains_word(x, v))
		throw error(errc::word_not_in_language, "gap_witness needs u and v in the language");
	if (x.empty())
		return std::nullopt;
	const auto& d = x.acceptor();
	const std::size_t n = d.states();
	auto p = d.run(d.initial, u);
	// good[j]: states from which some word of length j leads to a state that reads v.
	std::vector<StateSet> good{detail::readable_from(d, v)};
	for (std::size_t j = 1; j <= N; ++j) {
		StateSet next(n, false);
		for (Vertex s = 0; s < n; ++s)
			for (Symbol a = 0; a < d.alphabet_size && !next[s]; ++a)
				if (auto t = d.next(s, a); t != Dfa::none && good[j - 1][static_cast<std::size_t>(t)])
					next[s] = true;
		good.push_back(std::move(next));
	}
	if (!good[N][static_cast<std::size_t>(p)])
		return std::nullopt;
	Word w;
	auto s = static_cast<Vertex>(p);
	for (std::size_t left = N; left > 0; --left)
		for (Symbol a = 0; a < d.alphabet_size; ++a)
			if (auto t = d.next(s, a); t != Dfa::none && good[left - 1][static_cast<std::size_t>(t)]) {
				w.push_back(a);
				s = static_cast<Vertex>(t);
				break;
			}
	return w;
}

/// Finite family of patterns on intervals to be realized in one point.
struct GlueRequest {
	struct Part {
		Interval interval;
		Word word;
	};
	std::vector<Part> parts;
	std::size_t separation = 0; // N0: consecutive parts need at least N0 free positions between them
};

/// A window over the hull of all parts that agrees with each part and lies
/// in L(X), built left to right with gap_witness.
inline ConfigurationWindow glue(const Shift& x, GlueRequest req)
{
	if (req.parts.empty())
		throw error(errc::invalid_argument, "glue needs at least one part");
	std::sort(req.parts.begin(), req.parts.end(), [](const auto& a, const auto& b) { return a.interval.begin < b.interval.begin; });
	for (const auto& part : req.parts) {
		if (part.interval.size() != static_cast<std::int64_t>(part.word.size()) || part.interval.size() == 0)
			throw error(errc::invalid_argument, "part word length does not match its interval");
		if (!contains_word(x, part.word))
			throw error(errc::word_not_in_language, "part '" + x.alphabet().format(part.word) + "' is not in the language");
	}
	for (std::size_t i = 1; i < req.parts.size(); ++i) {
		auto fill = req.parts[i].interval.begin - req.parts[i - 1].interval.end;
		if (fill < 0 || static_cast<std::size_t>(fill) < req.separation)
			throw error(errc::separation_too_small, "parts " + std::to_string(i - 1) + " and " + std::to_string(i) + " are " +
			                                            std::to_string(fill) + " apart, need at least " + std::to_string(req.separation));
	}
	ConfigurationWindow out{req.parts.front().interval.begin, req.parts.front().word};
	for (std::size_t i = 1; i < req.parts.size(); ++i) {
		auto fill = static_cast<std::size_t>(req.parts[i].interval.begin - req.parts[i - 1].interval.end);
		auto w = gap_witness(x, out.letters, req.parts[i].word, fill);
		if (!w)
			throw error(errc::separation_too_small, "no filling word of length " + std::to_string(fill) +
			                                            " exists; the separation is not a valid gap bound for this shift");
		out.letters.insert(out.letters.end(), w->begin(), w->end());
		out.letters.insert(out.letters.end(), req.parts[i].word.begin(), req.parts[i].word.end());
	}
	return out;
}

/// For sofic shifts strong irreducibility coincides with topological mixing;
/// a positive verdict carries the constructive certificate.
inline Decision is_strongly_irreducible(const Shift& x)
{
	auto mix = is_mixing(x);
	if (!mix.mixing) {
		Decision d = make_decision(false);
		if (mix.not_irreducible)
			d.witness = *mix.not_irreducible;
		d.note = x.empty() ? "empty shift" : (mix.irreducible ? "period " + std::to_string(mix.cycle_gcd) : "reducible");
		return d;
	}
	return make_decision(true, si_certificate(x));
}

} // namespace sofic
