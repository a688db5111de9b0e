#pragma once

// Subshifts of finite type and sofic subshifts over Z, with their block
// languages.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "automaton.hpp"
#include "decision.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace sofic {

/// A shift of finite type given by forbidden words. The defining window is
/// [0, m) with m the longest forbidden length (1 when nothing is forbidden).
struct SftSpec {
	Alphabet alphabet;
	std::vector<Word> forbidden;

	SftSpec() = default;

	SftSpec(Alphabet a, std::vector<Word> words) : alphabet(std::move(a)), forbidden(std::move(words))
	{
		for (const auto& w : forbidden) {
			if (w.empty())
				throw error(errc::invalid_argument, "forbidden words must be nonempty");
			if (!alphabet.valid(w))
				throw error(errc::alphabet_mismatch, "forbidden word uses a symbol outside the alphabet");
		}
		std::sort(forbidden.begin(), forbidden.end());
		forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
	}

	std::size_t window() const
	{
		std::size_t m = 1;
		for (const auto& w : forbidden)
			m = std::max(m, w.size());
		return m;
	}
};

namespace detail {

// True when some forbidden word is a suffix of w.
inline bool ends_with_forbidden(const Word& w, const std::set<Word>& forbidden, const std::set<std::size_t>& lengths)
{
	for (auto len : lengths) {
		if (len > w.size())
			break;
		if (forbidden.count(Word(w.end() - static_cast<std::ptrdiff_t>(len), w.end())))
			return true;
	}
	return false;
}

} // namespace detail

/// De Bruijn-style presentation: vertices are the allowed words of length
/// m-1, and u -> v carries label a when u.a avoids every forbidden word and
/// v is its suffix. For m = 1 a single vertex carries one loop per allowed
/// symbol. Not essentialized.
inline LabeledGraph sft_to_graph(const SftSpec& spec)
{
	const std::size_t m = spec.window();
	const std::size_t k = spec.alphabet.size();
	std::set<Word> forbidden(spec.forbidden.begin(), spec.forbidden.end());
	std::set<std::size_t> lengths;
	for (const auto& w : spec.forbidden)
		lengths.insert(w.size());

	LabeledGraph g(k);
	if (m == 1) {
		g.add_vertex("");
		for (Symbol a = 0; a < k; ++a)
			if (!forbidden.count(Word{a}))
				g.add_edge(0, 0, a);
		return g;
	}
	// Allowed words of length m-1, in lexicographic order.
	std::vector<Word> allowed;
	std::vector<Word> stack{Word{}};
	while (!stack.empty()) {
		Word w = std::move(stack.back());
		stack.pop_back();
		if (w.size() == m - 1) {
			allowed.push_back(std::move(w));
			continue;
		}
		for (Symbol a = static_cast<Symbol>(k); a-- > 0;) {
			Word next = w;
			next.push_back(a);
			if (!detail::ends_with_forbidden(next, forbidden, lengths))
				stack.push_back(std::move(next));
		}
	}
	std::map<Word, Vertex> ids;
	for (const auto& w : allowed)
		ids.emplace(w, g.add_vertex(spec.alphabet.format(w)));
	for (const auto& u : allowed) {
		for (Symbol a = 0; a < k; ++a) {
			Word ua = u;
			ua.push_back(a);
			if (detail::ends_with_forbidden(ua, forbidden, lengths))
				continue;
			Word v(ua.begin() + 1, ua.end());
			g.add_edge(ids.at(u), ids.at(v), a);
		}
	}
	return g;
}

enum class ShiftKind { sft, sofic };

/// An immutable subshift. On construction it caches an essential
/// presentation, the minimal deterministic acceptor of its language, and the
/// essential part of that acceptor (a right-resolving presentation).
class Shift {
public:
	Shift() = default;

	static Shift from_sft(SftSpec spec, std::string name = {})
	{
		Shift x;
		x.alphabet_ = spec.alphabet;
		x.kind_ = ShiftKind::sft;
		x.origin_ = sft_to_graph(spec);
		x.sft_ = std::move(spec);
		x.name_ = std::move(name);
		x.build();
		return x;
	}

	static Shift from_graph(Alphabet alphabet, LabeledGraph g, std::string name = {})
	{
		if (g.alphabet_size != alphabet.size())
			throw error(errc::alphabet_mismatch, "graph alphabet size differs from the declared alphabet");
		Shift x;
		x.alphabet_ = std::move(alphabet);
		x.kind_ = ShiftKind::sofic;
		x.origin_ = std::move(g);
		x.name_ = std::move(name);
		x.build();
		return x;
	}

	const Alphabet& alphabet() const noexcept { return alphabet_; }
	ShiftKind kind() const noexcept { return kind_; }
	bool is_sft() const noexcept { return kind_ == ShiftKind::sft; }
	const std::optional<SftSpec>& sft() const noexcept { return sft_; }
	const std::string& name() const noexcept { return name_; }
	void set_name(std::string n) { name_ = std::move(n); }

	const LabeledGraph& origin() const noexcept { return origin_; }
	const LabeledGraph& essential() const noexcept { return essential_; }
	const Dfa& acceptor() const noexcept { return acceptor_; }
	const LabeledGraph& deterministic() const noexcept { return deterministic_; }

	/// Presentation whose bi-infinite paths are used as lifts of points:
	/// the de Bruijn graph for SFTs (paths and points correspond one-to-one),
	/// the right-resolving presentation otherwise.
	const LabeledGraph& lift_graph() const noexcept { return is_sft() ? essential_ : deterministic_; }

	bool empty() const noexcept { return essential_.empty(); }

private:
	void build()
	{
		auto g = origin_;
		g.dedupe();
		essential_ = essentialize(g);
		acceptor_ = minimal_acceptor(essential_);
		deterministic_ = essentialize(acceptor_.to_graph());
	}

	Alphabet alphabet_;
	ShiftKind kind_ = ShiftKind::sofic;
	std::optional<SftSpec> sft_;
	std::string name_;
	LabeledGraph origin_;
	LabeledGraph essential_;
	Dfa acceptor_;
	LabeledGraph deterministic_;
};

/// True iff w occurs in some point of x. The empty word is always accepted.
inline bool contains_word(const Shift& x, const Word& w)
{
	if (!x.alphabet().valid(w))
		throw error(errc::alphabet_mismatch, "word uses a symbol outside the shift alphabet");
	if (w.empty())
		return true;
	if (x.empty())
		return false;
	return x.acceptor().run(x.acceptor().initial, w) != Dfa::none;
}

/// All words of length n in the language, in lexicographic order.
inline std::vector<Word> blocks(const Shift& x, std::size_t n)
{
	std::vector<Word> out;
	if (n == 0) {
		out.emplace_back();
		return out;
	}
	if (x.empty())
		return out;
	const auto& dfa = x.acceptor();
	Word w;
	std::vector<std::int32_t> states{static_cast<std::int32_t>(dfa.initial)};
	std::vector<Symbol> next_symbol{0};
	while (!next_symbol.empty()) {
		auto depth = w.size();
		if (depth == n) {
			out.push_back(w);
			w.pop_back();
			states.pop_back();
			next_symbol.pop_back();
			continue;
		}
		auto& a = next_symbol.back();
		if (a >= dfa.alphabet_size) {
			if (!w.empty())
				w.pop_back();
			states.pop_back();
			next_symbol.pop_back();
			continue;
		}
		auto t = dfa.next(static_cast<Vertex>(states.back()), a);
		Symbol chosen = a++;
		if (t == Dfa::none)
			continue;
		w.push_back(chosen);
		states.push_back(t);
		next_symbol.push_back(0);
	}
	return out;
}

/// Shortest word of L(x) \ L(y) (lexicographically least among the
/// shortest), or nothing when L(x) is contained in L(y).
inline std::optional<Word> language_difference(const Shift& x, const Shift& y)
{
	require_same_alphabet(x.alphabet(), y.alphabet(), "language comparison needs a common alphabet");
	if (x.empty())
		return std::nullopt;
	const auto& dx = x.acceptor();
	const auto& dy = y.acceptor();
	const std::size_t k = x.alphabet().size();
	// States of dy are shifted by one so that 0 encodes "outside L(y)".
	const std::size_t ny = dy.states() + 1;
	auto key = [&](std::int32_t p, std::int32_t q) { return static_cast<std::size_t>(p) * ny + static_cast<std::size_t>(q + 1); };
	std::vector<std::size_t> parent(dx.states() * ny, static_cast<std::size_t>(-1));
	std::vector<Symbol> via(dx.states() * ny, 0);
	std::deque<std::pair<std::int32_t, std::int32_t>> queue;
	std::int32_t qy = y.empty() ? Dfa::none : static_cast<std::int32_t>(dy.initial);
	auto start = key(static_cast<std::int32_t>(dx.initial), qy);
	parent[start] = start;
	queue.push_back({static_cast<std::int32_t>(dx.initial), qy});
	while (!queue.empty()) {
		auto [p, q] = queue.front();
		queue.pop_front();
		for (Symbol a = 0; a < k; ++a) {
			auto p2 = dx.next(static_cast<Vertex>(p), a);
			if (p2 == Dfa::none)
				continue;
			auto q2 = q == Dfa::none ? Dfa::none : dy.next(static_cast<Vertex>(q), a);
			if (q2 == Dfa::none) {
				// Checked before the visited test: when L(y) is empty the start
				// state itself already sits outside L(y).
				Word w{a};
				for (auto cur = key(p, q); cur != start; cur = parent[cur])
					w.push_back(via[cur]);
				std::reverse(w.begin(), w.end());
				return w;
			}
			auto id = key(p2, q2);
			if (parent[id] != static_cast<std::size_t>(-1))
				continue;
			parent[id] = key(p, q);
			via[id] = a;
			queue.push_back({p2, q2});
		}
	}
	return std::nullopt;
}

/// Equality of block languages. Decided by comparing canonical minimal
/// acceptors and, independently, by product search for a shortest word in
/// the symmetric difference; the two routes must agree.
inline Decision equal_shifts(const Shift& x, const Shift& y)
{
	require_same_alphabet(x.alphabet(), y.alphabet(), "equal_shifts needs a common alphabet");
	bool canonical_equal = x.acceptor() == y.acceptor();
	auto xy = language_difference(x, y);
	auto yx = language_difference(y, x);
	std::optional<Word> witness;
	if (xy && yx)
		witness = (xy->size() < yx->size() || (xy->size() == yx->size() && *xy < *yx)) ? xy : yx;
	else
		witness = xy ? xy : yx;
	if (canonical_equal != !witness.has_value())
		throw std::logic_error("equal_shifts: canonical acceptor comparison disagrees with product search");
	if (!witness)
		return make_decision(true);
	return make_decision(false, *witness);
}

/// k-th higher block recoding of x together with the conjugacy and its inverse.
struct HigherBlock {
	Shift shift;
	CellularAutomaton forward;
	CellularAutomaton inverse;
	std::vector<Word> blocks; // recoded symbol i stands for blocks[i]
};

inline HigherBlock higher_block(const Shift& x, std::size_t k)
{
	if (k == 0)
		throw error(errc::invalid_argument, "higher block order must be at least 1");
	if (x.empty())
		throw error(errc::invalid_argument, "higher block recoding of the empty shift");
	const auto& a = x.alphabet();
	if (k == 1) {
		std::vector<Word> singles;
		for (Symbol s = 0; s < a.size(); ++s)
			singles.push_back(Word{s});
		return {x, identity_automaton(a), identity_automaton(a), std::move(singles)};
	}
	auto kblocks = blocks(x, k);
	std::vector<std::string> names;
	for (const auto& b : kblocks) {
		std::string n;
		for (std::size_t i = 0; i < b.size(); ++i) {
			if (!a.single_char() && i > 0)
				n += '.';
			n += a.name(b[i]);
		}
		names.push_back(std::move(n));
	}
	Alphabet recoded(names);
	std::map<Word, Symbol> code;
	for (std::size_t i = 0; i < kblocks.size(); ++i)
		code.emplace(kblocks[i], static_cast<Symbol>(i));

	Shift shift;
	std::string name = x.name().empty() ? std::string{} : x.name() + "^[" + std::to_string(k) + "]";
	if (x.is_sft()) {
		const std::size_t m = x.sft()->window();
		const std::size_t ell = std::max<std::size_t>(2, m >= k ? m - k + 1 : 1);
		std::vector<Word> forbidden;
		// Overlap mismatches.
		for (std::size_t i = 0; i < kblocks.size(); ++i)
			for (std::size_t j = 0; j < kblocks.size(); ++j)
				if (!std::equal(kblocks[i].begin() + 1, kblocks[i].end(), kblocks[j].begin()))
					forbidden.push_back(Word{static_cast<Symbol>(i), static_cast<Symbol>(j)});
		// Overlapping sequences of ell blocks whose merged word leaves L(x).
		const std::size_t merged = k + ell - 1;
		std::vector<Word> stack;
		for (const auto& b : kblocks)
			stack.push_back(b);
		while (!stack.empty()) {
			Word w = std::move(stack.back());
			stack.pop_back();
			if (w.size() == merged) {
				if (!contains_word(x, w)) {
					Word seq;
					for (std::size_t i = 0; i + k <= w.size(); ++i)
						seq.push_back(code.at(Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + k))));
					forbidden.push_back(std::move(seq));
				}
				continue;
			}
			for (Symbol s = 0; s < a.size(); ++s) {
				Word next = w;
				next.push_back(s);
				if (code.count(Word(next.end() - static_cast<std::ptrdiff_t>(k), next.end())))
					stack.push_back(std::move(next));
			}
		}
		shift = Shift::from_sft(SftSpec(recoded, std::move(forbidden)), name);
	} else {
		auto pg = path_graph(x.deterministic(), k);
		for (std::size_t i = 0; i < pg.graph.edges.size(); ++i)
			pg.graph.edges[i].label = code.at(pg.windows[i]);
		pg.graph.alphabet_size = recoded.size();
		shift = Shift::from_graph(recoded, std::move(pg.graph), name);
	}

	std::vector<Symbol> forward_table(CellularAutomaton::table_size(a.size(), k), 0);
	for (const auto& [b, s] : code) {
		std::size_t idx = 0;
		for (Symbol c : b)
			idx = idx * a.size() + c;
		forward_table[idx] = s;
	}
	std::vector<Symbol> inverse_table;
	for (const auto& b : kblocks)
		inverse_table.push_back(b.front());
	return {std::move(shift), CellularAutomaton(a, recoded, 0, static_cast<std::int64_t>(k) - 1, std::move(forward_table)),
	        CellularAutomaton(recoded, a, 0, 0, std::move(inverse_table)), std::move(kblocks)};
}

} // namespace sofic
