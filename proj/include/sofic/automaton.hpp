#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "error.hpp"

namespace sofic {

inline constexpr std::size_t max_rule_table = std::size_t{1} << 22;

/// A sliding-block code A^Z -> B^Z: the output at g is rule(x restricted to
/// g + [left, right]). The rule table is total over A^(right-left+1) and is
/// indexed by the window read as a base-|A| numeral, first letter most
/// significant.
class CellularAutomaton {
public:
	CellularAutomaton() = default;

	CellularAutomaton(Alphabet source, Alphabet target, std::int64_t left, std::int64_t right, std::vector<Symbol> table)
		: source_(std::move(source)), target_(std::move(target)), left_(left), right_(right), table_(std::move(table))
	{
		if (right < left)
			throw error(errc::invalid_argument, "memory interval must satisfy l <= r");
		auto expected = table_size(source_.size(), width());
		if (table_.size() != expected)
			throw error(errc::invalid_argument, "rule table has " + std::to_string(table_.size()) + " entries, expected " +
			                                        std::to_string(expected));
		for (Symbol b : table_)
			if (b >= target_.size())
				throw error(errc::invalid_argument, "rule output outside the target alphabet");
	}

	/// |A|^width, or TableTooLarge.
	static std::size_t table_size(std::size_t alphabet, std::size_t width)
	{
		std::size_t n = 1;
		for (std::size_t i = 0; i < width; ++i) {
			if (n > max_rule_table / alphabet)
				throw error(errc::table_too_large, "rule table |A|^" + std::to_string(width) + " is too large");
			n *= alphabet;
		}
		return n;
	}

	const Alphabet& source() const noexcept { return source_; }
	const Alphabet& target() const noexcept { return target_; }
	std::int64_t left() const noexcept { return left_; }
	std::int64_t right() const noexcept { return right_; }
	std::size_t width() const noexcept { return static_cast<std::size_t>(right_ - left_ + 1); }
	const std::vector<Symbol>& table() const noexcept { return table_; }

	std::size_t index_of(const Word& window, std::size_t offset = 0) const
	{
		std::size_t idx = 0;
		for (std::size_t i = 0; i < width(); ++i)
			idx = idx * source_.size() + window[offset + i];
		return idx;
	}

	Word window_of(std::size_t index) const
	{
		Word w(width());
		for (std::size_t i = width(); i-- > 0;) {
			w[i] = static_cast<Symbol>(index % source_.size());
			index /= source_.size();
		}
		return w;
	}

	Symbol rule(const Word& window, std::size_t offset = 0) const { return table_[index_of(window, offset)]; }

	bool is_endomorphism_shape() const { return source_ == target_; }

	friend bool operator==(const CellularAutomaton&, const CellularAutomaton&) = default;

private:
	Alphabet source_;
	Alphabet target_;
	std::int64_t left_ = 0;
	std::int64_t right_ = 0;
	std::vector<Symbol> table_;
};

/// Output on every position whose memory window fits inside w:
/// |w| - (r - l) letters, output[i] = rule(w[i .. i + r - l]).
inline Word apply_to_word(const CellularAutomaton& t, const Word& w)
{
	if (w.size() < t.width())
		throw error(errc::word_too_short, "word of length " + std::to_string(w.size()) + " is shorter than the memory width " +
		                                      std::to_string(t.width()));
	Word out(w.size() - t.width() + 1);
	for (std::size_t i = 0; i < out.size(); ++i)
		out[i] = t.rule(w, i);
	return out;
}

/// Same, with positions: input on [a, b) determines the output on [a - l, b - r).
inline ConfigurationWindow apply_to_window(const CellularAutomaton& t, const ConfigurationWindow& x)
{
	return {x.begin - t.left(), apply_to_word(t, x.letters)};
}

inline CellularAutomaton identity_automaton(const Alphabet& a)
{
	std::vector<Symbol> table(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		table[i] = static_cast<Symbol>(i);
	return {a, a, 0, 0, std::move(table)};
}

} // namespace sofic
