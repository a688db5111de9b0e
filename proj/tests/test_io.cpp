#include <gtest/gtest.h>

#include "support.hpp"

using namespace sofic;
using support::word;

namespace {

const std::string fx = SOFIC_FIXTURES;

// Line number embedded in a parse error, or -1.
int error_line(const std::function<void()>& f)
{
	try {
		f();
	} catch (const error& e) {
		if (e.code() != errc::parse_error)
			return -2;
		std::string what = e.what();
		auto at = what.find("line ");
		return at == std::string::npos ? -1 : std::stoi(what.substr(at + 5));
	}
	return 0;
}

} // namespace

TEST(ParseShift, ForbiddenList)
{
	auto x = parse_shift("# comment\nalphabet: 0 1\n\nforbidden:\n11   # trailing\n", "g");
	EXPECT_TRUE(equal_shifts(x, fixtures::golden()).yes());
	EXPECT_EQ(x.name(), "g");
	ASSERT_TRUE(x.is_sft());
	EXPECT_EQ(x.sft()->forbidden.size(), 1u);
}

TEST(ParseShift, Graph)
{
	auto x = parse_shift("alphabet: 0 1\ngraph:\nedge a a 1\nedge a b 0\nedge b a 0\n");
	EXPECT_FALSE(x.is_sft());
	EXPECT_TRUE(equal_shifts(x, fixtures::even()).yes());
}

TEST(ParseShift, MultiCharacterNames)
{
	auto x = parse_shift("alphabet: a bb\nforbidden:\nbb,bb\n");
	EXPECT_TRUE(contains_word(x, Word{0, 1, 0}));
	EXPECT_FALSE(contains_word(x, Word{1, 1}));
}

TEST(ParseShift, ErrorsCarryLineNumbers)
{
	EXPECT_EQ(error_line([] { parse_shift("alphabet: 0 1\nwindow: 3\nforbidden:\n11\n"); }), 2);
	EXPECT_EQ(error_line([] { parse_shift("forbidden:\n11\n"); }), 1);
	EXPECT_EQ(error_line([] { parse_shift("alphabet: 0 1\nforbidden:\n11\n12\n"); }), 4);
	EXPECT_EQ(error_line([] { parse_shift("alphabet: 0 0\nforbidden:\n"); }), 1);
	EXPECT_EQ(error_line([] { parse_shift("alphabet: 0 1\ngraph:\nedge a b\n"); }), 3);
	EXPECT_EQ(error_line([] { parse_shift("alphabet: 0 1\ngraph:\nedge a b 2\n"); }), 3);
	EXPECT_EQ(error_line([] { parse_shift("alphabet: 0 1\ngraph:\nvertex a\n"); }), 3);
	EXPECT_EQ(error_line([] { parse_shift("alphabet: 0 1\n"); }), 1);
}

TEST(ParseShift, RoundTrip)
{
	for (const auto& x : fixtures::all_shifts()) {
		auto y = parse_shift(format_shift(x), x.name());
		EXPECT_TRUE(equal_shifts(x, y).yes()) << x.name();
		EXPECT_EQ(format_shift(y), format_shift(x));
	}
}

TEST(LoadShift, BundledFilesMatchBuiltIns)
{
	for (const auto& x : fixtures::all_shifts()) {
		auto y = load_shift(fx + "/" + x.name() + ".shift");
		EXPECT_EQ(y.name(), x.name());
		EXPECT_TRUE(equal_shifts(x, y).yes()) << x.name();
	}
	EXPECT_THROW(load_shift(fx + "/missing.shift"), error);
	EXPECT_EQ(error_line([] { load_shift(fx + "/broken/unknown_directive.shift"); }), 2);
}

TEST(ParseCa, Basic)
{
	auto t = parse_ca("memory: -1 0\nrule 00 0\nrule 01 1\nrule 10 1\nrule 11 0\n", fixtures::binary());
	EXPECT_EQ(t.left(), -1);
	EXPECT_EQ(t.right(), 0);
	EXPECT_EQ(t.table(), fixtures::xor_rule().table());
}

TEST(ParseCa, TargetAlphabet)
{
	auto t = parse_ca("target: a b c\nmemory: 0 0\nrule 0 c\nrule 1 a\n", fixtures::binary());
	EXPECT_EQ(t.target().size(), 3u);
	EXPECT_EQ(t.table(), (std::vector<Symbol>{2, 0}));
	auto back = parse_ca(format_ca(t), fixtures::binary());
	EXPECT_EQ(back, t);
}

TEST(ParseCa, Errors)
{
	auto a = fixtures::binary();
	EXPECT_EQ(error_line([&] { parse_ca("memory: 0 1\nrule 00 0\nrule 01 1\nrule 10 1\n", a); }), 4);
	EXPECT_EQ(error_line([&] { parse_ca("memory: 0 0\nrule 0 0\nrule 0 1\nrule 1 1\n", a); }), 3);
	EXPECT_EQ(error_line([&] { parse_ca("memory: 0 0\nrule 00 0\n", a); }), 2);
	EXPECT_EQ(error_line([&] { parse_ca("memory: 1 0\n", a); }), 1);
	EXPECT_EQ(error_line([&] { parse_ca("memory: x 0\n", a); }), 1);
	EXPECT_EQ(error_line([&] { parse_ca("rule 0 0\nrule 1 1\n", a); }), 2);
	EXPECT_EQ(error_line([&] { parse_ca("memory: 0 0\nrule 0 7\nrule 1 1\n", a); }), 2);
	EXPECT_EQ(error_line([&] { parse_ca("memory: 0 0\nshift 1\n", a); }), 2);
	EXPECT_EQ(error_line([&] { parse_ca("alphabet: a b\nmemory: 0 0\nrule 0 0\nrule 1 1\n", a); }), 1);
	EXPECT_EQ(error_line([&] { parse_ca("memory: 0 40\n", a); }), 1);
	EXPECT_EQ(error_line([&] { load_ca(fx + "/broken/partial.ca", a); }), 4);
}

TEST(ParseCa, RoundTripRandom)
{
	for (std::uint64_t seed = 0; seed < 50; ++seed) {
		auto t = random_ca(fixtures::binary(), fixtures::binary(), -1, static_cast<std::int64_t>(seed % 3), seed);
		EXPECT_EQ(parse_ca(format_ca(t), fixtures::binary()), t);
	}
}

TEST(LoadCa, BundledFiles)
{
	auto a = fixtures::binary();
	EXPECT_EQ(load_ca(fx + "/xor.ca", a), fixtures::xor_rule());
	EXPECT_EQ(load_ca(fx + "/collapse.ca", a), fixtures::collapse());
	EXPECT_EQ(load_ca(fx + "/identity.ca", a), fixtures::identity());
	EXPECT_EQ(load_ca(fx + "/constant0.ca", a), fixtures::constant_zero());
}
