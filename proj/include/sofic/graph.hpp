#pragma once

// Labeled graphs, essentialization, strongly connected components, and the
// subset construction / minimization that turns any presentation into the
// minimal deterministic acceptor of its block language.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "alphabet.hpp"
#include "error.hpp"

namespace sofic {

using Vertex = std::uint32_t;

struct Edge {
	Vertex source = 0;
	Vertex target = 0;
	Symbol label = 0;

	friend bool operator==(const Edge&, const Edge&) = default;
	friend auto operator<=>(const Edge& a, const Edge& b)
	{
		return std::tie(a.source, a.label, a.target) <=> std::tie(b.source, b.label, b.target);
	}
};

/// A finite graph whose edges carry symbols of an alphabet of the given size.
/// Parallel edges are allowed; `dedupe` collapses identical ones.
struct LabeledGraph {
	std::size_t alphabet_size = 0;
	std::size_t vertex_count = 0;
	std::vector<Edge> edges;
	std::vector<std::string> names; // optional, one per vertex when present

	LabeledGraph() = default;
	explicit LabeledGraph(std::size_t alphabet, std::size_t vertices = 0)
		: alphabet_size(alphabet), vertex_count(vertices)
	{}

	Vertex add_vertex(std::string name = {})
	{
		if (!name.empty() || !names.empty()) {
			names.resize(vertex_count);
			names.push_back(std::move(name));
		}
		return static_cast<Vertex>(vertex_count++);
	}

	void add_edge(Vertex s, Vertex t, Symbol a)
	{
		if (s >= vertex_count || t >= vertex_count)
			throw error(errc::invalid_argument, "edge endpoint out of range");
		if (a >= alphabet_size)
			throw error(errc::invalid_argument, "edge label outside the alphabet");
		edges.push_back({s, t, a});
	}

	bool empty() const noexcept { return vertex_count == 0; }

	std::string vertex_name(Vertex v) const
	{
		return v < names.size() && !names[v].empty() ? names[v] : std::to_string(v);
	}

	/// Outgoing edge indices per vertex, in edge order.
	std::vector<std::vector<std::size_t>> out_edges() const
	{
		std::vector<std::vector<std::size_t>> out(vertex_count);
		for (std::size_t i = 0; i < edges.size(); ++i)
			out[edges[i].source].push_back(i);
		return out;
	}

	std::vector<std::vector<std::size_t>> in_edges() const
	{
		std::vector<std::vector<std::size_t>> in(vertex_count);
		for (std::size_t i = 0; i < edges.size(); ++i)
			in[edges[i].target].push_back(i);
		return in;
	}

	/// Sort edges and drop exact duplicates.
	void dedupe()
	{
		std::sort(edges.begin(), edges.end());
		edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
	}

	/// Right-resolving: at most one outgoing edge per (vertex, label).
	bool is_deterministic() const
	{
		std::vector<std::uint8_t> seen(vertex_count * alphabet_size, 0);
		for (const auto& e : edges) {
			auto& slot = seen[e.source * alphabet_size + e.label];
			if (slot)
				return false;
			slot = 1;
		}
		return true;
	}

	friend bool operator==(const LabeledGraph& a, const LabeledGraph& b)
	{
		return a.alphabet_size == b.alphabet_size && a.vertex_count == b.vertex_count && a.edges == b.edges;
	}
};

/// Keep only the vertices in `keep` (a mask), renumbering in increasing order.
inline LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<bool>& keep)
{
	std::vector<Vertex> remap(g.vertex_count, 0);
	LabeledGraph out(g.alphabet_size);
	for (Vertex v = 0; v < g.vertex_count; ++v)
		if (keep[v])
			remap[v] = out.add_vertex(v < g.names.size() ? g.names[v] : std::string{});
	for (const auto& e : g.edges)
		if (keep[e.source] && keep[e.target])
			out.edges.push_back({remap[e.source], remap[e.target], e.label});
	return out;
}

/// Vertices that lie on some bi-infinite path: repeatedly delete vertices
/// with no incoming or no outgoing edge.
inline std::vector<bool> essential_mask(const LabeledGraph& g)
{
	std::vector<bool> alive(g.vertex_count, true);
	std::vector<std::size_t> indeg(g.vertex_count, 0), outdeg(g.vertex_count, 0);
	for (const auto& e : g.edges) {
		++outdeg[e.source];
		++indeg[e.target];
	}
	auto in = g.in_edges();
	auto out = g.out_edges();
	std::vector<Vertex> work;
	for (Vertex v = 0; v < g.vertex_count; ++v)
		if (indeg[v] == 0 || outdeg[v] == 0)
			work.push_back(v);
	while (!work.empty()) {
		Vertex v = work.back();
		work.pop_back();
		if (!alive[v])
			continue;
		alive[v] = false;
		for (auto i : out[v]) {
			Vertex t = g.edges[i].target;
			if (alive[t] && --indeg[t] == 0)
				work.push_back(t);
		}
		for (auto i : in[v]) {
			Vertex s = g.edges[i].source;
			if (alive[s] && --outdeg[s] == 0)
				work.push_back(s);
		}
	}
	return alive;
}

inline LabeledGraph essentialize(const LabeledGraph& g)
{
	return induced_subgraph(g, essential_mask(g));
}

/// Strongly connected components. `component[v]` is numbered in reverse
/// topological order of the condensation (sinks first).
struct Components {
	std::vector<std::size_t> component;
	std::size_t count = 0;
};

inline Components strongly_connected_components(std::size_t n, const std::vector<std::vector<Vertex>>& succ)
{
	// Iterative Tarjan.
	constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
	Components result;
	result.component.assign(n, unvisited);
	std::vector<std::size_t> index(n, unvisited), low(n, 0);
	std::vector<Vertex> stack;
	std::vector<bool> on_stack(n, false);
	std::size_t counter = 0;
	std::vector<std::pair<Vertex, std::size_t>> call;
	for (Vertex root = 0; root < n; ++root) {
		if (index[root] != unvisited)
			continue;
		call.push_back({root, 0});
		while (!call.empty()) {
			auto& [v, next] = call.back();
			if (next == 0) {
				index[v] = low[v] = counter++;
				stack.push_back(v);
				on_stack[v] = true;
			}
			if (next < succ[v].size()) {
				Vertex w = succ[v][next++];
				if (index[w] == unvisited)
					call.push_back({w, 0});
				else if (on_stack[w])
					low[v] = std::min(low[v], index[w]);
				continue;
			}
			if (low[v] == index[v]) {
				Vertex w;
				do {
					w = stack.back();
					stack.pop_back();
					on_stack[w] = false;
					result.component[w] = result.count;
				} while (w != v);
				++result.count;
			}
			Vertex done = v;
			call.pop_back();
			if (!call.empty())
				low[call.back().first] = std::min(low[call.back().first], low[done]);
		}
	}
	return result;
}

inline std::vector<std::vector<Vertex>> successors(const LabeledGraph& g)
{
	std::vector<std::vector<Vertex>> succ(g.vertex_count);
	for (const auto& e : g.edges)
		succ[e.source].push_back(e.target);
	return succ;
}

inline Components strongly_connected_components(const LabeledGraph& g)
{
	return strongly_connected_components(g.vertex_count, successors(g));
}

/// gcd of the lengths of all cycles inside the component containing `root`
/// (0 when the component carries no cycle).
inline std::size_t cycle_gcd(const LabeledGraph& g, const Components& scc, Vertex root)
{
	auto comp = scc.component[root];
	std::vector<std::int64_t> level(g.vertex_count, -1);
	auto succ = successors(g);
	std::queue<Vertex> q;
	level[root] = 0;
	q.push(root);
	while (!q.empty()) {
		Vertex v = q.front();
		q.pop();
		for (Vertex w : succ[v])
			if (scc.component[w] == comp && level[w] < 0) {
				level[w] = level[v] + 1;
				q.push(w);
			}
	}
	std::int64_t d = 0;
	for (const auto& e : g.edges)
		if (scc.component[e.source] == comp && scc.component[e.target] == comp)
			d = std::gcd(d, level[e.source] + 1 - level[e.target]);
	return static_cast<std::size_t>(d < 0 ? -d : d);
}

/// Longest shortest-path distance over ordered vertex pairs; -1 if some pair
/// is disconnected.
inline std::int64_t directed_diameter(const LabeledGraph& g)
{
	auto succ = successors(g);
	std::int64_t diameter = 0;
	for (Vertex s = 0; s < g.vertex_count; ++s) {
		std::vector<std::int64_t> dist(g.vertex_count, -1);
		std::queue<Vertex> q;
		dist[s] = 0;
		q.push(s);
		while (!q.empty()) {
			Vertex v = q.front();
			q.pop();
			for (Vertex w : succ[v])
				if (dist[w] < 0) {
					dist[w] = dist[v] + 1;
					q.push(w);
				}
		}
		for (auto d : dist) {
			if (d < 0)
				return -1;
			diameter = std::max(diameter, d);
		}
	}
	return diameter;
}

/// Deterministic acceptor with a partial transition table. Every state
/// accepts; a missing transition means the word leaves the language.
struct Dfa {
	static constexpr std::int32_t none = -1;

	std::size_t alphabet_size = 0;
	Vertex initial = 0;
	std::vector<std::int32_t> table; // state * alphabet_size + symbol

	std::size_t states() const noexcept { return alphabet_size == 0 ? 0 : table.size() / alphabet_size; }
	bool empty() const noexcept { return table.empty(); }

	std::int32_t next(Vertex s, Symbol a) const { return table[s * alphabet_size + a]; }

	/// State reached from `from` by reading `w`, or none.
	std::int32_t run(Vertex from, const Word& w) const
	{
		std::int32_t s = static_cast<std::int32_t>(from);
		for (Symbol a : w) {
			if (a >= alphabet_size)
				return none;
			s = next(static_cast<Vertex>(s), a);
			if (s == none)
				return none;
		}
		return s;
	}

	LabeledGraph to_graph() const
	{
		LabeledGraph g(alphabet_size, states());
		for (Vertex s = 0; s < states(); ++s)
			for (Symbol a = 0; a < alphabet_size; ++a)
				if (auto t = next(s, a); t != none)
					g.edges.push_back({s, static_cast<Vertex>(t), a});
		return g;
	}

	friend bool operator==(const Dfa&, const Dfa&) = default;
};

inline constexpr std::size_t default_state_cap = 1'000'000;

/// Subset construction on `g` read as an automaton whose states are all
/// initial and all accepting. The result accepts exactly the labels of
/// finite paths of `g`.
inline Dfa subset_construction(const LabeledGraph& g, std::size_t state_cap = default_state_cap)
{
	Dfa dfa;
	dfa.alphabet_size = g.alphabet_size;
	if (g.vertex_count == 0)
		return dfa;
	auto out = g.out_edges();
	std::map<std::vector<Vertex>, Vertex> ids;
	std::vector<std::vector<Vertex>> subsets;
	std::vector<Vertex> start(g.vertex_count);
	std::iota(start.begin(), start.end(), Vertex{0});
	ids.emplace(start, 0);
	subsets.push_back(start);
	for (std::size_t i = 0; i < subsets.size(); ++i) {
		std::vector<std::vector<Vertex>> image(g.alphabet_size);
		for (Vertex v : subsets[i])
			for (auto e : out[v])
				image[g.edges[e].label].push_back(g.edges[e].target);
		for (Symbol a = 0; a < g.alphabet_size; ++a) {
			auto& t = image[a];
			if (t.empty()) {
				dfa.table.push_back(Dfa::none);
				continue;
			}
			std::sort(t.begin(), t.end());
			t.erase(std::unique(t.begin(), t.end()), t.end());
			auto [it, inserted] = ids.emplace(t, static_cast<Vertex>(subsets.size()));
			if (inserted) {
				if (subsets.size() >= state_cap)
					throw error(errc::state_blowup, "subset construction exceeded " + std::to_string(state_cap) + " states");
				subsets.push_back(t);
			}
			dfa.table.push_back(static_cast<std::int32_t>(it->second));
		}
	}
	return dfa;
}

/// Moore partition refinement followed by breadth-first renumbering from the
/// initial state (symbols in increasing order). Two acceptors of the same
/// language come out with identical tables.
inline Dfa minimize(const Dfa& dfa)
{
	const std::size_t n = dfa.states();
	const std::size_t k = dfa.alphabet_size;
	if (n == 0)
		return dfa;
	std::vector<std::size_t> cls(n, 0);
	std::size_t class_count = 1;
	for (;;) {
		std::map<std::vector<std::int64_t>, std::size_t> sig_ids;
		std::vector<std::size_t> next_cls(n);
		for (Vertex s = 0; s < n; ++s) {
			std::vector<std::int64_t> sig{static_cast<std::int64_t>(cls[s])};
			for (Symbol a = 0; a < k; ++a) {
				auto t = dfa.next(s, a);
				sig.push_back(t == Dfa::none ? -1 : static_cast<std::int64_t>(cls[static_cast<std::size_t>(t)]));
			}
			next_cls[s] = sig_ids.emplace(std::move(sig), sig_ids.size()).first->second;
		}
		bool stable = sig_ids.size() == class_count;
		cls = std::move(next_cls);
		class_count = sig_ids.size();
		if (stable)
			break;
	}
	std::vector<Vertex> rep(class_count, 0);
	for (Vertex s = n; s-- > 0;)
		rep[cls[s]] = s;
	constexpr std::size_t unset = static_cast<std::size_t>(-1);
	std::vector<std::size_t> order(class_count, unset);
	std::vector<std::size_t> bfs;
	order[cls[dfa.initial]] = 0;
	bfs.push_back(cls[dfa.initial]);
	for (std::size_t i = 0; i < bfs.size(); ++i)
		for (Symbol a = 0; a < k; ++a) {
			auto t = dfa.next(rep[bfs[i]], a);
			if (t == Dfa::none)
				continue;
			auto c = cls[static_cast<std::size_t>(t)];
			if (order[c] == unset) {
				order[c] = bfs.size();
				bfs.push_back(c);
			}
		}
	Dfa out;
	out.alphabet_size = k;
	out.initial = 0;
	out.table.assign(bfs.size() * k, Dfa::none);
	for (std::size_t i = 0; i < bfs.size(); ++i)
		for (Symbol a = 0; a < k; ++a) {
			auto t = dfa.next(rep[bfs[i]], a);
			if (t != Dfa::none)
				out.table[i * k + a] = static_cast<std::int32_t>(order[cls[static_cast<std::size_t>(t)]]);
		}
	return out;
}

inline Dfa minimal_acceptor(const LabeledGraph& g, std::size_t state_cap = default_state_cap)
{
	auto copy = g;
	copy.dedupe();
	return minimize(subset_construction(essentialize(copy), state_cap));
}

/// Right-resolving presentation of the same shift: the essential part of the
/// minimal acceptor of the block language.
inline LabeledGraph determinize_minimize(const LabeledGraph& g, std::size_t state_cap = default_state_cap)
{
	return essentialize(minimal_acceptor(g, state_cap).to_graph());
}

/// The k-th path graph: vertices are paths of length k-1, edges are paths of
/// length k, each edge remembering the labels it spells. Bi-infinite paths
/// correspond one-to-one to bi-infinite paths of `g`.
struct PathGraph {
	LabeledGraph graph; // labels are the last symbol of each window
	std::vector<Word> windows;
	std::vector<Word> vertex_words;
};

inline PathGraph path_graph(const LabeledGraph& g, std::size_t k, std::size_t cap = default_state_cap)
{
	if (k == 0)
		throw error(errc::invalid_argument, "path length must be at least 1");
	PathGraph pg;
	pg.graph = LabeledGraph(g.alphabet_size);
	auto out = g.out_edges();
	if (k == 1) {
		pg.graph.vertex_count = g.vertex_count;
		pg.graph.names = g.names;
		pg.vertex_words.assign(g.vertex_count, Word{});
		for (const auto& e : g.edges) {
			pg.graph.edges.push_back(e);
			pg.windows.push_back(Word{e.label});
		}
		return pg;
	}
	// Vertices: paths of k-1 edges, as edge-index sequences.
	std::map<std::vector<std::size_t>, Vertex> ids;
	std::vector<std::vector<std::size_t>> paths;
	std::vector<std::vector<std::size_t>> partial;
	for (std::size_t e = 0; e < g.edges.size(); ++e)
		partial.push_back({e});
	while (!partial.empty()) {
		auto p = std::move(partial.back());
		partial.pop_back();
		if (p.size() == k - 1) {
			ids.emplace(p, 0);
			continue;
		}
		for (auto e : out[g.edges[p.back()].target]) {
			auto q = p;
			q.push_back(e);
			partial.push_back(std::move(q));
		}
		if (ids.size() + partial.size() > cap)
			throw error(errc::state_blowup, "path graph exceeds " + std::to_string(cap) + " vertices");
	}
	for (auto& [p, id] : ids) {
		id = static_cast<Vertex>(paths.size());
		paths.push_back(p);
		Word w;
		for (auto e : p)
			w.push_back(g.edges[e].label);
		pg.vertex_words.push_back(w);
	}
	pg.graph.vertex_count = paths.size();
	for (Vertex v = 0; v < paths.size(); ++v) {
		const auto& p = paths[v];
		for (auto e : out[g.edges[p.back()].target]) {
			std::vector<std::size_t> tail(p.begin() + 1, p.end());
			tail.push_back(e);
			Vertex t = ids.at(tail);
			Word window = pg.vertex_words[v];
			window.push_back(g.edges[e].label);
			pg.graph.edges.push_back({v, t, g.edges[e].label});
			pg.windows.push_back(std::move(window));
		}
	}
	return pg;
}

} // namespace sofic
