#pragma once

// Conversions between library values and the string-based oracles.

#include <string>
#include <vector>

#include <sofic/sofic.hpp>

#include "oracles.hpp"

namespace support {

inline std::string str(const sofic::Word& w)
{
	std::string s;
	for (auto a : w)
		s += char('0' + a);
	return s;
}

inline sofic::Word word(const std::string& s)
{
	sofic::Word w;
	for (char c : s)
		w.push_back(static_cast<sofic::Symbol>(c - '0'));
	return w;
}

inline std::vector<std::string> strs(const std::vector<sofic::Word>& ws)
{
	std::vector<std::string> out;
	for (const auto& w : ws)
		out.push_back(str(w));
	return out;
}

inline std::vector<int> table(const sofic::CellularAutomaton& t)
{
	return {t.table().begin(), t.table().end()};
}

inline sofic::Shift sft(const std::vector<std::string>& forbidden, int k = 2)
{
	std::vector<sofic::Word> ws;
	for (const auto& f : forbidden)
		ws.push_back(word(f));
	return sofic::Shift::from_sft(sofic::SftSpec(sofic::Alphabet::digits(k), ws));
}

inline const std::vector<std::string>& fixture_names()
{
	static const std::vector<std::string> names{"full2", "golden", "even", "twopoint", "period2", "mixnot_2", "mixnot_3", "mixnot_4", "mixnot_5"};
	return names;
}

inline sofic::Shift fixture(const std::string& name)
{
	using namespace sofic::fixtures;
	if (name == "full2")
		return full();
	if (name == "golden")
		return golden();
	if (name == "even")
		return even();
	if (name == "twopoint")
		return twopoint();
	if (name == "period2")
		return period2();
	return mixnot(static_cast<std::size_t>(std::stoi(name.substr(7))));
}

} // namespace support
