#pragma once

// Seeded random endomorphisms of a shift, each classified and checked against
// the implications that must hold between the decisions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cellular.hpp"
#include "entropy.hpp"
#include "properties.hpp"
#include "shift.hpp"

namespace sofic {

struct CorpusConfig {
	std::size_t count = 200;         // endomorphisms to collect
	std::uint64_t seed = 1;
	std::int64_t left = 0;
	std::int64_t right = 2;
	std::size_t max_attempts = 0;    // 0: 1000 * count
	double tol = 1e-9;
	std::size_t counting_length = 12;
	unsigned workers = 1;
};

struct CorpusInstance {
	std::uint64_t seed = 0;
	CellularAutomaton automaton;
	bool pre_injective = false;
	bool injective = false;
	bool surjective = false;
	bool si = false;            // of the domain
	bool image_si = false;
	double entropy_x = 0;
	double entropy_image = 0;
	std::vector<std::string> contradictions;
};

struct CorpusSummary {
	std::size_t attempts = 0;
	std::size_t filtered = 0; // random tables whose image leaves the shift
	std::size_t pre_injective = 0;
	std::size_t injective = 0;
	std::size_t surjective = 0;
	std::size_t contradictions = 0;
	bool domain_si = false;
	bool domain_full = false;
	std::vector<CorpusInstance> instances;
};

/// True when x is the full shift on its alphabet.
inline bool is_full_shift(const Shift& x)
{
	const auto& d = x.acceptor();
	if (d.states() != 1)
		return false;
	for (Symbol a = 0; a < d.alphabet_size; ++a)
		if (d.next(d.initial, a) == Dfa::none)
			return false;
	return true;
}

namespace detail {

struct Attempt {
	bool endomorphism = false;
	CorpusInstance instance;
};

inline Attempt run_attempt(const Shift& x, const CorpusConfig& cfg, std::uint64_t seed, bool x_si, bool x_full, double h_x,
                           const std::vector<BigInt>& x_counts)
{
	Attempt a;
	auto t = random_ca(x.alphabet(), x.alphabet(), cfg.left, cfg.right, seed);
	auto image = image_presentation(t, x);
	if (language_difference(image, x))
		return a;
	a.endomorphism = true;
	auto& r = a.instance;
	r.seed = seed;
	r.si = x_si;
	r.pre_injective = is_pre_injective(t, x).yes();
	r.injective = is_injective(t, x).yes();
	r.surjective = equal_shifts(image, x).yes();
	r.entropy_x = h_x;
	auto h_img = entropy_spectral(image, cfg.tol);
	r.entropy_image = h_img.value;
	r.image_si = is_strongly_irreducible(image).yes();

	auto flag = [&](bool bad, const char* what) {
		if (bad)
			r.contradictions.emplace_back(what);
	};
	flag(r.injective && !r.pre_injective, "injective but not pre-injective");
	flag(x_si && r.pre_injective && !r.surjective, "SI domain, pre-injective, not surjective");
	flag(x_si && r.injective && !r.surjective, "SI domain, injective, not surjective");
	flag(x_si && r.pre_injective && std::abs(r.entropy_x - r.entropy_image) > 2 * cfg.tol, "SI domain, pre-injective, entropy changed");
	flag(r.entropy_image > r.entropy_x + 2 * cfg.tol, "image entropy exceeds domain entropy");
	flag(x_full && !r.image_si, "image of the full shift is not SI");
	auto image_counts = block_counts(image, cfg.counting_length);
	const auto extra = static_cast<std::size_t>(cfg.right - cfg.left);
	for (std::size_t n = 1; n <= cfg.counting_length; ++n)
		if (image_counts[n] > x_counts[n + extra]) {
			flag(true, "image has more n-blocks than the domain has (n+width-1)-blocks");
			break;
		}
	r.automaton = std::move(t);
	return a;
}

} // namespace detail

/// Attempt i uses seed cfg.seed + i. Attempts are evaluated in batches spread
/// over `workers` threads and merged in attempt order, so the report does not
/// depend on the worker count.
inline CorpusSummary run_corpus(const Shift& x, const CorpusConfig& cfg)
{
	CorpusSummary s;
	s.domain_si = is_strongly_irreducible(x).yes();
	s.domain_full = is_full_shift(x);
	const double h_x = entropy_spectral(x, cfg.tol).value;
	const auto x_counts = block_counts(x, cfg.counting_length + static_cast<std::size_t>(cfg.right - cfg.left));
	const std::size_t cap = cfg.max_attempts ? cfg.max_attempts : 1000 * std::max<std::size_t>(cfg.count, 1);
	const unsigned workers = std::max(1u, cfg.workers);
	const std::size_t batch = 16 * workers;

	while (s.instances.size() < cfg.count && s.attempts < cap) {
		std::size_t n = std::min(batch, cap - s.attempts);
		std::vector<detail::Attempt> results(n);
		auto work = [&](unsigned w) {
			for (std::size_t i = w; i < n; i += workers)
				results[i] = detail::run_attempt(x, cfg, cfg.seed + s.attempts + i, s.domain_si, s.domain_full, h_x, x_counts);
		};
		if (workers == 1) {
			work(0);
		} else {
			std::vector<std::thread> pool;
			for (unsigned w = 0; w < workers; ++w)
				pool.emplace_back(work, w);
			for (auto& th : pool)
				th.join();
		}
		for (auto& a : results) {
			if (s.instances.size() == cfg.count)
				break;
			++s.attempts;
			if (!a.endomorphism) {
				++s.filtered;
				continue;
			}
			auto& r = a.instance;
			s.pre_injective += r.pre_injective;
			s.injective += r.injective;
			s.surjective += r.surjective;
			s.contradictions += r.contradictions.size();
			s.instances.push_back(std::move(r));
		}
	}
	return s;
}

/// One machine-readable line per instance: seed, preinj, inj, surj, si,
/// entropy_x, entropy_image.
inline std::string format_instance(const CorpusInstance& r)
{
	std::ostringstream out;
	out.precision(12);
	out << r.seed << ", " << r.pre_injective << ", " << r.injective << ", " << r.surjective << ", " << r.si << ", " << r.entropy_x << ", "
	    << r.entropy_image;
	return out.str();
}

} // namespace sofic
