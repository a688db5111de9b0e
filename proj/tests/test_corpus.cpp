#include <gtest/gtest.h>

#include "support.hpp"

using namespace sofic;

TEST(Corpus, FullShiftHasNoContradictions)
{
	CorpusConfig cfg;
	cfg.count = 200;
	cfg.seed = 42;
	auto s = run_corpus(fixtures::full(), cfg);
	EXPECT_EQ(s.instances.size(), 200u);
	EXPECT_EQ(s.contradictions, 0u);
	EXPECT_TRUE(s.domain_si);
	EXPECT_TRUE(s.domain_full);
	// every table is an endomorphism of the full shift
	EXPECT_EQ(s.filtered, 0u);
	EXPECT_EQ(s.attempts, 200u);
	// Garden of Eden on the full shift: the two counts coincide instance by instance
	for (const auto& r : s.instances)
		EXPECT_EQ(r.pre_injective, r.surjective) << r.seed;
}

TEST(Corpus, GoldenAndEven)
{
	for (const auto& x : {fixtures::golden(), fixtures::even()}) {
		CorpusConfig cfg;
		cfg.count = 60;
		cfg.seed = 3;
		auto s = run_corpus(x, cfg);
		EXPECT_EQ(s.instances.size(), 60u) << x.name();
		EXPECT_EQ(s.contradictions, 0u) << x.name();
		EXPECT_GT(s.filtered, 0u) << x.name();
		EXPECT_EQ(s.attempts, s.filtered + s.instances.size());
	}
}

TEST(Corpus, SeedsAreAttemptIndices)
{
	CorpusConfig cfg;
	cfg.count = 20;
	cfg.seed = 100;
	auto s = run_corpus(fixtures::golden(), cfg);
	for (const auto& r : s.instances) {
		EXPECT_GE(r.seed, 100u);
		EXPECT_LT(r.seed, 100u + s.attempts);
		EXPECT_EQ(r.automaton, random_ca(fixtures::binary(), fixtures::binary(), cfg.left, cfg.right, r.seed));
	}
}

TEST(Corpus, WorkerCountDoesNotChangeTheReport)
{
	CorpusConfig cfg;
	cfg.count = 40;
	cfg.seed = 9;
	auto one = run_corpus(fixtures::even(), cfg);
	cfg.workers = 4;
	auto four = run_corpus(fixtures::even(), cfg);
	ASSERT_EQ(one.instances.size(), four.instances.size());
	EXPECT_EQ(one.attempts, four.attempts);
	for (std::size_t i = 0; i < one.instances.size(); ++i)
		EXPECT_EQ(format_instance(one.instances[i]), format_instance(four.instances[i]));
}

TEST(Corpus, NonStronglyIrreducibleDomain)
{
	CorpusConfig cfg;
	cfg.count = 30;
	cfg.left = 0;
	cfg.right = 0;
	auto s = run_corpus(fixtures::twopoint(), cfg);
	EXPECT_FALSE(s.domain_si);
	EXPECT_EQ(s.contradictions, 0u);
	// the collapse map is among the four 1-block tables: pre-injective, not onto
	bool collapse_seen = false;
	for (const auto& r : s.instances)
		collapse_seen = collapse_seen || (r.pre_injective && !r.surjective);
	EXPECT_TRUE(collapse_seen);
}

TEST(Corpus, AttemptCap)
{
	CorpusConfig cfg;
	cfg.count = 1000;
	cfg.max_attempts = 50;
	auto s = run_corpus(fixtures::golden(), cfg);
	EXPECT_EQ(s.attempts, 50u);
	EXPECT_LT(s.instances.size(), 1000u);
}

TEST(Corpus, InstanceLine)
{
	CorpusInstance r;
	r.seed = 5;
	r.pre_injective = true;
	r.surjective = true;
	r.si = true;
	r.entropy_x = 0.5;
	r.entropy_image = 0.25;
	EXPECT_EQ(format_instance(r), "5, 1, 0, 1, 1, 0.5, 0.25");
}

TEST(Corpus, FullShiftDetection)
{
	EXPECT_TRUE(is_full_shift(fixtures::full()));
	EXPECT_TRUE(is_full_shift(fixtures::full(3)));
	EXPECT_FALSE(is_full_shift(fixtures::golden()));
	EXPECT_FALSE(is_full_shift(fixtures::twopoint()));
}
