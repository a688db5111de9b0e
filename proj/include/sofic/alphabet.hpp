#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace sofic {

using Symbol = std::uint8_t;

/// A finite word over an alphabet, stored as symbol indices.
using Word = std::vector<Symbol>;

inline constexpr std::size_t max_alphabet_size = 64;

/// Ordered finite set of named symbols. Index <-> name is a bijection.
class Alphabet {
public:
	Alphabet() = default;

	explicit Alphabet(std::vector<std::string> names) : names_(std::move(names))
	{
		if (names_.empty())
			throw error(errc::invalid_argument, "alphabet must contain at least one symbol");
		if (names_.size() > max_alphabet_size)
			throw error(errc::invalid_argument, "alphabet exceeds " + std::to_string(max_alphabet_size) + " symbols");
		for (std::size_t i = 0; i < names_.size(); ++i) {
			const auto& n = names_[i];
			if (n.empty())
				throw error(errc::invalid_argument, "empty symbol name");
			if (n.find_first_of(", \t\r\n#") != std::string::npos)
				throw error(errc::invalid_argument, "symbol name '" + n + "' contains a reserved character");
			if (!index_.emplace(n, static_cast<Symbol>(i)).second)
				throw error(errc::invalid_argument, "duplicate symbol '" + n + "'");
			if (n.size() != 1)
				single_char_ = false;
		}
	}

	/// Alphabet {"0", "1", ..., "k-1"} (k <= 10 keeps single characters).
	static Alphabet digits(std::size_t k)
	{
		std::vector<std::string> names;
		for (std::size_t i = 0; i < k; ++i)
			names.push_back(std::to_string(i));
		return Alphabet(std::move(names));
	}

	std::size_t size() const noexcept { return names_.size(); }
	bool empty() const noexcept { return names_.empty(); }
	const std::vector<std::string>& names() const noexcept { return names_; }
	const std::string& name(Symbol s) const { return names_.at(s); }

	/// True when every symbol is one character, so words print without separators.
	bool single_char() const noexcept { return single_char_; }

	bool contains(std::string_view name) const { return index_.count(std::string(name)) != 0; }

	Symbol index(std::string_view name) const
	{
		auto it = index_.find(std::string(name));
		if (it == index_.end())
			throw error(errc::alphabet_mismatch, "unknown symbol '" + std::string(name) + "'");
		return it->second;
	}

	/// Parse a word: a run of characters for single-character alphabets,
	/// comma-separated names otherwise. The empty string is the empty word.
	Word parse(std::string_view text) const
	{
		Word w;
		if (text.empty())
			return w;
		if (single_char_ && text.find(',') == std::string_view::npos) {
			for (char c : text)
				w.push_back(index(std::string_view(&c, 1)));
			return w;
		}
		std::size_t start = 0;
		while (start <= text.size()) {
			auto comma = text.find(',', start);
			if (comma == std::string_view::npos)
				comma = text.size();
			w.push_back(index(text.substr(start, comma - start)));
			start = comma + 1;
		}
		return w;
	}

	std::string format(const Word& w) const
	{
		std::string out;
		for (std::size_t i = 0; i < w.size(); ++i) {
			if (!single_char_ && i > 0)
				out += ',';
			out += name(w[i]);
		}
		return out;
	}

	bool valid(const Word& w) const
	{
		return std::all_of(w.begin(), w.end(), [&](Symbol s) { return s < names_.size(); });
	}

	friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }
	friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

private:
	std::vector<std::string> names_;
	std::map<std::string, Symbol> index_;
	bool single_char_ = true;
};

inline void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what)
{
	if (a != b)
		throw error(errc::alphabet_mismatch, std::string(what));
}

/// Integer interval [begin, end).
struct Interval {
	std::int64_t begin = 0;
	std::int64_t end = 0;

	std::int64_t size() const noexcept { return end > begin ? end - begin : 0; }
	bool contains(std::int64_t g) const noexcept { return begin <= g && g < end; }
	friend bool operator==(const Interval&, const Interval&) = default;
};

/// The neighborhood of a set under a window: all g whose translate g + window
/// meets the set. For intervals this is [begin - (window.end - 1), end - window.begin).
inline Interval neighborhood(Interval set, Interval window)
{
	if (set.size() == 0 || window.size() == 0)
		return {0, 0};
	return {set.begin - (window.end - 1), set.end - window.begin};
}

/// Restriction of a configuration to an interval [a, b); letters[i] is the
/// value at position a + i.
struct ConfigurationWindow {
	std::int64_t begin = 0;
	Word letters;

	Interval interval() const noexcept { return {begin, begin + static_cast<std::int64_t>(letters.size())}; }

	Symbol at(std::int64_t g) const { return letters.at(static_cast<std::size_t>(g - begin)); }

	/// Projection onto a sub-interval.
	ConfigurationWindow restrict_to(Interval sub) const
	{
		auto iv = interval();
		if (sub.begin < iv.begin || sub.end > iv.end || sub.end < sub.begin)
			throw error(errc::invalid_argument, "restriction interval is not inside the window");
		ConfigurationWindow out{sub.begin, {}};
		out.letters.assign(letters.begin() + (sub.begin - iv.begin), letters.begin() + (sub.end - iv.begin));
		return out;
	}

	friend bool operator==(const ConfigurationWindow&, const ConfigurationWindow&) = default;
};

inline Word concat(std::initializer_list<const Word*> parts)
{
	Word out;
	for (const Word* p : parts)
		out.insert(out.end(), p->begin(), p->end());
	return out;
}

inline Word repeat(const Word& w, std::size_t times)
{
	Word out;
	out.reserve(w.size() * times);
	for (std::size_t i = 0; i < times; ++i)
		out.insert(out.end(), w.begin(), w.end());
	return out;
}

} // namespace sofic
