#pragma once

// Line-oriented text formats for shifts and automata.
//
//   alphabet: 0 1          alphabet: 0 1
//   forbidden:             graph:
//   11                     edge a a 1
//                          edge a b 0
//                          edge b a 0
//
//   memory: 0 1            (optional `target: <symbols>` before the rules)
//   rule 00 0
//   rule 01 1
//   ...
//
// `#` starts a comment. Errors carry the 1-based line number.

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "automaton.hpp"
#include "error.hpp"
#include "shift.hpp"

namespace sofic {

namespace detail {

struct Line {
	std::size_t number = 0;
	std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(const std::string& text)
{
	std::vector<Line> lines;
	std::istringstream in(text);
	std::string raw;
	for (std::size_t n = 1; std::getline(in, raw); ++n) {
		if (auto hash = raw.find('#'); hash != std::string::npos)
			raw.erase(hash);
		std::istringstream words(raw);
		Line line{n, {}};
		for (std::string t; words >> t;)
			line.tokens.push_back(t);
		if (!line.tokens.empty())
			lines.push_back(std::move(line));
	}
	return lines;
}

[[noreturn]] inline void fail_at(std::size_t line, const std::string& what)
{
	throw error(errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

// Rethrow library errors raised while interpreting one line with its number.
template <class F>
auto at_line(std::size_t line, F f) -> decltype(f())
{
	try {
		return f();
	} catch (const error& e) {
		if (e.code() == errc::parse_error)
			throw;
		fail_at(line, e.what());
	}
}

inline std::string read_file(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw error(errc::parse_error, "cannot open '" + path + "'");
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

inline std::string stem(const std::string& path)
{
	auto slash = path.find_last_of('/');
	auto base = slash == std::string::npos ? path : path.substr(slash + 1);
	auto dot = base.find('.');
	return dot == std::string::npos ? base : base.substr(0, dot);
}

} // namespace detail

inline Shift parse_shift(const std::string& text, std::string name = {})
{
	auto lines = detail::tokenize(text);
	if (lines.empty() || lines[0].tokens[0] != "alphabet:")
		detail::fail_at(lines.empty() ? 1 : lines[0].number, "expected 'alphabet:' header");
	if (lines[0].tokens.size() < 2)
		detail::fail_at(lines[0].number, "alphabet needs at least one symbol");
	auto alphabet = detail::at_line(lines[0].number, [&] {
		return Alphabet(std::vector<std::string>(lines[0].tokens.begin() + 1, lines[0].tokens.end()));
	});
	if (lines.size() < 2)
		detail::fail_at(lines[0].number, "expected 'forbidden:' or 'graph:' after the alphabet");
	const auto& mode = lines[1];
	if (mode.tokens.size() != 1 || (mode.tokens[0] != "forbidden:" && mode.tokens[0] != "graph:"))
		detail::fail_at(mode.number, "unknown directive '" + mode.tokens[0] + "'");

	if (mode.tokens[0] == "forbidden:") {
		std::vector<Word> words;
		for (std::size_t i = 2; i < lines.size(); ++i) {
			if (lines[i].tokens.size() != 1)
				detail::fail_at(lines[i].number, "expected one forbidden word per line");
			words.push_back(detail::at_line(lines[i].number, [&] {
				auto w = alphabet.parse(lines[i].tokens[0]);
				if (w.empty())
					throw error(errc::invalid_argument, "empty forbidden word");
				return w;
			}));
		}
		return Shift::from_sft(SftSpec(alphabet, std::move(words)), std::move(name));
	}

	LabeledGraph g(alphabet.size());
	std::map<std::string, Vertex> vertices;
	auto vertex = [&](const std::string& n) {
		auto [it, fresh] = vertices.emplace(n, 0);
		if (fresh)
			it->second = g.add_vertex(n);
		return it->second;
	};
	for (std::size_t i = 2; i < lines.size(); ++i) {
		const auto& t = lines[i].tokens;
		if (t[0] != "edge")
			detail::fail_at(lines[i].number, "unknown directive '" + t[0] + "'");
		if (t.size() != 4)
			detail::fail_at(lines[i].number, "expected 'edge <src> <dst> <label>'");
		auto label = detail::at_line(lines[i].number, [&] { return alphabet.index(t[3]); });
		auto s = vertex(t[1]);
		auto d = vertex(t[2]);
		g.add_edge(s, d, label);
	}
	return Shift::from_graph(alphabet, std::move(g), std::move(name));
}

inline Shift load_shift(const std::string& path) { return parse_shift(detail::read_file(path), detail::stem(path)); }

/// Text form accepted by parse_shift: the forbidden list for shifts of finite
/// type, the original graph otherwise.
inline std::string format_shift(const Shift& x)
{
	std::ostringstream out;
	out << "alphabet:";
	for (const auto& n : x.alphabet().names())
		out << ' ' << n;
	out << '\n';
	if (x.is_sft()) {
		out << "forbidden:\n";
		for (const auto& w : x.sft()->forbidden)
			out << x.alphabet().format(w) << '\n';
	} else {
		out << "graph:\n";
		const auto& g = x.origin();
		for (const auto& e : g.edges)
			out << "edge " << g.vertex_name(e.source) << ' ' << g.vertex_name(e.target) << ' ' << x.alphabet().name(e.label) << '\n';
	}
	return out.str();
}

/// Parse an automaton whose source alphabet is `source`. The rule table must
/// list every input window exactly once.
inline CellularAutomaton parse_ca(const std::string& text, const Alphabet& source)
{
	auto lines = detail::tokenize(text);
	std::optional<std::pair<std::int64_t, std::int64_t>> memory;
	Alphabet target = source;
	std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> rules;
	for (const auto& line : lines) {
		const auto& t = line.tokens;
		if (t[0] == "memory:") {
			if (memory)
				detail::fail_at(line.number, "duplicate 'memory:'");
			if (t.size() != 3)
				detail::fail_at(line.number, "expected 'memory: l r'");
			try {
				memory = std::pair{std::stoll(t[1]), std::stoll(t[2])};
			} catch (const std::exception&) {
				detail::fail_at(line.number, "memory bounds must be integers");
			}
			if (memory->second < memory->first)
				detail::fail_at(line.number, "memory interval must satisfy l <= r");
		} else if (t[0] == "target:" || t[0] == "alphabet:") {
			if (t.size() < 2)
				detail::fail_at(line.number, "alphabet needs at least one symbol");
			auto a = detail::at_line(line.number, [&] { return Alphabet(std::vector<std::string>(t.begin() + 1, t.end())); });
			if (t[0] == "target:")
				target = std::move(a);
			else if (a != source)
				detail::fail_at(line.number, "automaton alphabet differs from the shift alphabet");
		} else if (t[0] == "rule") {
			if (t.size() != 3)
				detail::fail_at(line.number, "expected 'rule <input-word> <output-symbol>'");
			rules.push_back({line.number, {t[1], t[2]}});
		} else {
			detail::fail_at(line.number, "unknown directive '" + t[0] + "'");
		}
	}
	if (!memory)
		detail::fail_at(lines.empty() ? 1 : lines.back().number, "missing 'memory:' line");
	auto width = static_cast<std::size_t>(memory->second - memory->first + 1);
	auto size = detail::at_line(1, [&] { return CellularAutomaton::table_size(source.size(), width); });
	std::vector<Symbol> table(size, 0);
	std::vector<bool> seen(size, false);
	CellularAutomaton shape(source, target, memory->first, memory->second, table);
	for (const auto& [number, rule] : rules) {
		auto window = detail::at_line(number, [&] { return source.parse(rule.first); });
		if (window.size() != width)
			detail::fail_at(number, "rule input has length " + std::to_string(window.size()) + ", expected " + std::to_string(width));
		auto out = detail::at_line(number, [&] { return target.index(rule.second); });
		auto idx = shape.index_of(window);
		if (seen[idx])
			detail::fail_at(number, "duplicate rule for '" + rule.first + "'");
		seen[idx] = true;
		table[idx] = out;
	}
	for (std::size_t i = 0; i < size; ++i)
		if (!seen[i])
			detail::fail_at(lines.empty() ? 1 : lines.back().number,
			                "partial rule table: no rule for '" + source.format(shape.window_of(i)) + "'");
	return {source, target, memory->first, memory->second, std::move(table)};
}

inline CellularAutomaton load_ca(const std::string& path, const Alphabet& source) { return parse_ca(detail::read_file(path), source); }

inline std::string format_ca(const CellularAutomaton& t)
{
	std::ostringstream out;
	if (t.target() != t.source()) {
		out << "target:";
		for (const auto& n : t.target().names())
			out << ' ' << n;
		out << '\n';
	}
	out << "memory: " << t.left() << ' ' << t.right() << '\n';
	for (std::size_t i = 0; i < t.table().size(); ++i)
		out << "rule " << t.source().format(t.window_of(i)) << ' ' << t.target().name(t.table()[i]) << '\n';
	return out.str();
}

} // namespace sofic
