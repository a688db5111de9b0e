#pragma once

// Entropy of subshifts over Z: exact block counts on the windows [0, n),
// the Perron root of a right-resolving presentation, tilings of Z by
// intervals, and the counting inequalities behind positivity and strict
// monotonicity of entropy.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "decision.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "properties.hpp"
#include "shift.hpp"

namespace sofic {

using BigInt = boost::multiprecision::cpp_int;

/// Natural log of a positive big integer; -inf for zero.
inline double log_big(const BigInt& v)
{
	if (v <= 0)
		return -INFINITY;
	auto bits = boost::multiprecision::msb(v);
	if (bits < 1000)
		return std::log(v.convert_to<double>());
	unsigned shift = static_cast<unsigned>(bits) - 900;
	BigInt top = v >> shift;
	return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

/// |L_n(X)| for n = 0..n_max, by vector-matrix powering over the minimal
/// acceptor with exact integers.
inline std::vector<BigInt> block_counts(const Shift& x, std::size_t n_max)
{
	std::vector<BigInt> out{BigInt(1)};
	if (x.empty()) {
		out.resize(n_max + 1, BigInt(0));
		return out;
	}
	const auto& d = x.acceptor();
	std::vector<BigInt> paths(d.states(), BigInt(0));
	paths[d.initial] = 1;
	for (std::size_t n = 1; n <= n_max; ++n) {
		std::vector<BigInt> next(d.states(), BigInt(0));
		for (Vertex s = 0; s < d.states(); ++s) {
			if (paths[s] == 0)
				continue;
			for (Symbol a = 0; a < d.alphabet_size; ++a)
				if (auto t = d.next(s, a); t != Dfa::none)
					next[static_cast<std::size_t>(t)] += paths[s];
		}
		paths = std::move(next);
		BigInt total = 0;
		for (const auto& p : paths)
			total += p;
		out.push_back(std::move(total));
	}
	return out;
}

inline BigInt block_count(const Shift& x, std::size_t n) { return block_counts(x, n).back(); }

enum class EntropyMethod { block_count, spectral };

struct EntropyEstimate {
	double value = 0;          // nats
	EntropyMethod method = EntropyMethod::block_count;
	std::size_t n_max = 0;     // block-count method
	double tolerance = 0;      // spectral method
	double error_bound = 0;
	double lower = 0;          // certified interval (spectral)
	double upper = 0;
	bool empty_shift = false;
	std::vector<double> sequence; // log|X_n| / n for n = 1..n_max

	double value_log2() const { return value / std::log(2.0); }
};

/// log|X_n|/n at n = n_max. The sequence is subadditive, so it approaches
/// its limit from above; the reported error bound is twice the drop across
/// the last doubling [n_max/2, n_max].
inline EntropyEstimate entropy_blocks(const Shift& x, std::size_t n_max)
{
	if (n_max < 2)
		throw error(errc::invalid_argument, "entropy_blocks needs n_max >= 2");
	EntropyEstimate e;
	e.method = EntropyMethod::block_count;
	e.n_max = n_max;
	e.empty_shift = x.empty();
	auto counts = block_counts(x, n_max);
	for (std::size_t n = 1; n <= n_max; ++n)
		e.sequence.push_back(counts[n] == 0 ? 0.0 : log_big(counts[n]) / static_cast<double>(n));
	if (x.empty())
		return e;
	e.value = e.sequence.back();
	const std::size_t half = n_max / 2;
	if (2 * half == n_max) {
		// (2/n) * log(c(n/2)^2 / c(n)); exact zero when c is multiplicative.
		BigInt sq = counts[half] * counts[half];
		e.error_bound = sq == counts[n_max] ? 0.0 : 2.0 * (log_big(sq) - log_big(counts[n_max])) / static_cast<double>(n_max);
	} else {
		e.error_bound = 2.0 * (e.sequence[half - 1] - e.value);
	}
	e.error_bound = std::max(0.0, e.error_bound);
	e.lower = e.value - e.error_bound;
	e.upper = e.value;
	return e;
}

/// log of the Perron root of the right-resolving presentation. Each
/// nontrivial strongly connected component is handled by power iteration on
/// A + I (primitive), and the Collatz-Wielandt quotients min/max (Bv)_i/v_i
/// bracket the root. Stops once the bracket on log(lambda) is within 2*tol.
inline EntropyEstimate entropy_spectral(const Shift& x, double tol, std::size_t max_iterations = 1'000'000)
{
	if (!(tol > 0))
		throw error(errc::invalid_argument, "tolerance must be positive");
	EntropyEstimate e;
	e.method = EntropyMethod::spectral;
	e.tolerance = tol;
	e.empty_shift = x.empty();
	if (x.empty())
		return e;
	const auto& g = x.deterministic();
	auto scc = strongly_connected_components(g);
	double best_lo = 0, best_hi = 0; // bracket on lambda (0 when acyclic)
	for (std::size_t c = 0; c < scc.count; ++c) {
		std::vector<Vertex> members;
		std::vector<std::size_t> local(g.vertex_count, 0);
		for (Vertex v = 0; v < g.vertex_count; ++v)
			if (scc.component[v] == c) {
				local[v] = members.size();
				members.push_back(v);
			}
		const std::size_t m = members.size();
		std::vector<std::vector<std::pair<std::size_t, double>>> rows(m);
		bool has_edge = false;
		for (const auto& edge : g.edges)
			if (scc.component[edge.source] == c && scc.component[edge.target] == c) {
				rows[local[edge.source]].push_back({local[edge.target], 1.0});
				has_edge = true;
			}
		if (!has_edge)
			continue;
		std::vector<double> v(m, 1.0), w(m);
		double lo = 0, hi = 0;
		for (std::size_t it = 0; it < max_iterations; ++it) {
			for (std::size_t i = 0; i < m; ++i) {
				double s = v[i];
				for (auto [j, a] : rows[i])
					s += a * v[j];
				w[i] = s;
			}
			lo = INFINITY;
			hi = 0;
			double top = 0;
			for (std::size_t i = 0; i < m; ++i) {
				double r = w[i] / v[i];
				lo = std::min(lo, r);
				hi = std::max(hi, r);
				top = std::max(top, w[i]);
			}
			for (std::size_t i = 0; i < m; ++i)
				v[i] = w[i] / top;
			if (std::log(hi - 1) - std::log(lo - 1) <= 2 * tol)
				break;
		}
		if (hi - 1 > best_hi) {
			best_hi = hi - 1;
		}
		best_lo = std::max(best_lo, lo - 1);
	}
	if (best_hi == 0) {
		// No cycle carries entropy (cannot happen for a nonempty essential graph).
		return e;
	}
	e.lower = std::log(best_lo);
	e.upper = std::log(best_hi);
	e.value = 0.5 * (e.lower + e.upper);
	e.error_bound = 0.5 * (e.upper - e.lower);
	return e;
}

/// |F^{+E} \ F| and |F| for F = [0, n) and E = [-e, e], computed from the
/// interval neighborhood.
inline std::pair<std::int64_t, std::int64_t> folner_boundary(std::int64_t n, std::int64_t e)
{
	Interval window{0, n};
	auto grown = neighborhood(window, {-e, e + 1});
	return {grown.size() - window.size(), window.size()};
}

/// (E, E')-tiling of Z with E = [0, k), E' = E - E = [-(k-1), k-1], T = kZ.
struct TilingSpec {
	std::int64_t k = 1;

	Interval tile() const { return {0, k}; }
	Interval cover() const { return {-(k - 1), k}; }
	std::int64_t stride() const { return k; }
};

/// Exact check on a window: translates g + E (g in T) are pairwise disjoint
/// and every point of the window lies in some g + E'.
inline bool verify_tiling(const TilingSpec& t, Interval window)
{
	std::map<std::int64_t, int> hits;
	std::vector<bool> covered(static_cast<std::size_t>(window.size()), false);
	auto first = window.begin - t.k;
	first -= ((first % t.k) + t.k) % t.k;
	for (std::int64_t g = first; g < window.end + t.k; g += t.k) {
		for (std::int64_t p = g + t.tile().begin; p < g + t.tile().end; ++p)
			if (++hits[p] > 1)
				return false;
		for (std::int64_t p = g + t.cover().begin; p < g + t.cover().end; ++p)
			if (window.contains(p))
				covered[static_cast<std::size_t>(p - window.begin)] = true;
	}
	return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

inline TilingSpec tiling_Z(std::int64_t k)
{
	if (k < 1)
		throw error(errc::invalid_argument, "tile size must be at least 1");
	TilingSpec t{k};
	if (!verify_tiling(t, {-10 * k, 10 * k}))
		throw std::logic_error("tiling_Z: construction failed its own check");
	return t;
}

struct TilingDensity {
	std::int64_t count = 0; // |{g in T : g + E inside [0, n)}|
	double ratio = 0;
	double alpha = 0;       // 1 / (2k)
	bool alpha_ok = false;
};

inline TilingDensity tiling_density(const TilingSpec& t, std::int64_t n)
{
	if (n < t.k)
		throw error(errc::window_too_small, "window [0," + std::to_string(n) + ") is smaller than the tile");
	TilingDensity d;
	d.count = (n - t.k) / t.k + 1;
	d.ratio = static_cast<double>(d.count) / static_cast<double>(n);
	d.alpha = 1.0 / (2.0 * static_cast<double>(t.k));
	d.alpha_ok = d.ratio >= d.alpha;
	return d;
}

struct EntropyComparison {
	Decision decision; // yes: h(y) < h(x) certified; no: equal shifts
	double h_x = 0;
	double h_y = 0;
	double gap = 0;
	double tolerance = 0;
};

/// Compare h(x) and h(y) for a subshift y of x. Strictness is asserted only
/// when the certified gap exceeds 2*tol.
inline EntropyComparison entropy_compare(const Shift& x, const Shift& y, double tol)
{
	if (auto w = language_difference(y, x))
		throw error(errc::not_subshift, "word '" + y.alphabet().format(*w) + "' of the second shift is not in the first");
	EntropyComparison r;
	r.tolerance = tol;
	r.h_x = entropy_spectral(x, tol).value;
	r.h_y = entropy_spectral(y, tol).value;
	r.gap = r.h_x - r.h_y;
	if (equal_shifts(x, y).yes()) {
		r.decision = make_decision(false);
		r.decision.note = "equal shifts: inclusion is not proper";
	} else if (r.gap > 2 * tol) {
		r.decision = make_decision(true);
	} else {
		r.decision = {Verdict::inconclusive, {}, Scope::point, "entropy gap below 2*tol"};
	}
	return r;
}

/// Number of words of length n in L(X) satisfying position constraints: for
/// each (end position e, predicate), the length-`width` factor ending at e
/// must satisfy the predicate.
struct WindowConstraint {
	std::size_t end = 0;
	std::function<bool(const Word&)> allowed;
};

inline BigInt count_constrained(const Shift& x, std::size_t n, std::size_t width, const std::vector<WindowConstraint>& constraints)
{
	if (n == 0)
		return 1;
	if (x.empty())
		return 0;
	std::map<std::size_t, std::vector<const WindowConstraint*>> at;
	for (const auto& c : constraints)
		at[c.end].push_back(&c);
	const auto& d = x.acceptor();
	const std::size_t keep = width > 0 ? width - 1 : 0;
	std::map<std::pair<std::int32_t, Word>, BigInt> layer{{{static_cast<std::int32_t>(d.initial), Word{}}, BigInt(1)}};
	for (std::size_t i = 0; i < n; ++i) {
		std::map<std::pair<std::int32_t, Word>, BigInt> next;
		auto cs = at.find(i);
		for (const auto& [key, count] : layer) {
			for (Symbol a = 0; a < d.alphabet_size; ++a) {
				auto t = d.next(static_cast<Vertex>(key.first), a);
				if (t == Dfa::none)
					continue;
				Word window = key.second;
				window.push_back(a);
				if (cs != at.end()) {
					bool ok = window.size() == width;
					for (const auto* c : cs->second)
						ok = ok && c->allowed(window);
					if (!ok)
						continue;
				}
				if (window.size() > keep)
					window.erase(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(window.size() - keep));
				next[{t, std::move(window)}] += count;
			}
		}
		layer = std::move(next);
	}
	BigInt total = 0;
	for (const auto& [key, count] : layer)
		total += count;
	return total;
}

/// Desk-scale instance of the counting inequality |Q| <= (1 - 1/rho)^|T| |X_n|:
/// D = [0, d) sits at offset N0 inside tiles of size k >= d + 2*N0 (so the
/// tile contains the N0-neighborhood of D), Q is the set of words of L_n that
/// avoid the pattern p on every tile copy of D, and rho = |X_k|.
struct Lemma41Report {
	std::size_t n = 0;
	std::size_t d = 0;
	std::size_t k = 0;
	std::size_t n0 = 0;
	Word pattern;
	std::size_t tiles = 0;
	BigInt rho = 0;
	BigInt q_count = 0;
	BigInt x_count = 0;
	double bound = 0;      // (1 - 1/rho)^tiles * |X_n|
	bool holds = false;    // exact integer comparison
	double q_rate = 0;     // log|Q| / n
	double x_rate = 0;     // log|X_n| / n
	double rate_drop = 0;  // (tiles / n) * log(1 - 1/rho), <= 0
};

inline Lemma41Report lemma41_check(const Shift& x, std::size_t d, std::size_t k, std::size_t n, std::optional<Word> pattern = std::nullopt)
{
	auto si = is_strongly_irreducible(x);
	const auto* cert = si.get<SiCertificate>();
	if (!cert)
		throw error(errc::certificate_missing, "shift is not strongly irreducible; no gap certificate");
	if (d == 0)
		throw error(errc::invalid_argument, "pattern window d must be at least 1");
	Lemma41Report r;
	r.n = n;
	r.d = d;
	r.n0 = cert->n0_bound;
	const std::size_t min_k = d + 2 * r.n0;
	r.k = k == 0 ? min_k : k;
	if (r.k < min_k)
		throw error(errc::invalid_argument, "tile size " + std::to_string(r.k) + " does not contain the neighborhood (need " +
		                                        std::to_string(min_k) + ")");
	auto xd = blocks(x, d);
	r.pattern = pattern ? *pattern : xd.back();
	if (std::find(xd.begin(), xd.end(), r.pattern) == xd.end())
		throw error(errc::word_not_in_language, "pattern is not a block of the shift");
	auto tiling = tiling_Z(static_cast<std::int64_t>(r.k));
	r.tiles = n >= r.k ? static_cast<std::size_t>(tiling_density(tiling, static_cast<std::int64_t>(n)).count) : 0;
	r.rho = block_count(x, r.k);
	r.x_count = block_count(x, n);
	std::vector<WindowConstraint> constraints;
	for (std::size_t t = 0; t < r.tiles; ++t) {
		std::size_t end = t * r.k + r.n0 + d - 1;
		constraints.push_back({end, [p = r.pattern](const Word& w) { return w != p; }});
	}
	r.q_count = count_constrained(x, n, d, constraints);
	BigInt lhs = r.q_count * boost::multiprecision::pow(r.rho, static_cast<unsigned>(r.tiles));
	BigInt rhs = boost::multiprecision::pow(BigInt(r.rho - 1), static_cast<unsigned>(r.tiles)) * r.x_count;
	r.holds = lhs <= rhs;
	double ratio = 1.0 - 1.0 / r.rho.convert_to<double>();
	r.bound = std::pow(ratio, static_cast<double>(r.tiles)) * r.x_count.convert_to<double>();
	r.q_rate = r.q_count == 0 ? -INFINITY : log_big(r.q_count) / static_cast<double>(n);
	r.x_rate = log_big(r.x_count) / static_cast<double>(n);
	r.rate_drop = static_cast<double>(r.tiles) / static_cast<double>(n) * std::log(ratio);
	return r;
}

/// Lower bound behind positivity of entropy: with D = {0} placed at offset N0
/// in tiles of size k = 2*N0 + 1, the words whose letter at every tile centre
/// is one of two fixed symbols number at least 2^|T_n|.
struct PositivityRow {
	std::size_t n = 0;
	std::size_t tiles = 0;
	BigInt two_choice_count = 0; // |Z_n|
	BigInt block_count = 0;      // |X_n|
	bool ok = false;             // |X_n| >= |Z_n| >= 2^tiles
};

struct PositivityReport {
	std::size_t k = 0;
	Symbol first = 0;
	Symbol second = 0;
	std::vector<PositivityRow> rows;
	bool all_ok = false;
};

inline PositivityReport positivity_check(const Shift& x, std::size_t n_max)
{
	auto si = is_strongly_irreducible(x);
	const auto* cert = si.get<SiCertificate>();
	if (!cert)
		throw error(errc::certificate_missing, "shift is not strongly irreducible; no gap certificate");
	auto singles = blocks(x, 1);
	if (singles.size() < 2)
		throw error(errc::invalid_argument, "shift has fewer than two points distinguishable at one site");
	PositivityReport rep;
	rep.k = 2 * cert->n0_bound + 1;
	rep.first = singles[0][0];
	rep.second = singles[1][0];
	auto counts = block_counts(x, n_max);
	rep.all_ok = true;
	for (std::size_t n = 1; n <= n_max; ++n) {
		PositivityRow row;
		row.n = n;
		row.tiles = n / rep.k;
		std::vector<WindowConstraint> cs;
		for (std::size_t t = 0; t < row.tiles; ++t)
			cs.push_back({t * rep.k + cert->n0_bound, [a = rep.first, b = rep.second](const Word& w) { return w[0] == a || w[0] == b; }});
		row.two_choice_count = count_constrained(x, n, 1, cs);
		row.block_count = counts[n];
		row.ok = row.block_count >= row.two_choice_count && row.two_choice_count >= (BigInt(1) << row.tiles);
		rep.all_ok = rep.all_ok && row.ok;
		rep.rows.push_back(std::move(row));
	}
	return rep;
}

} // namespace sofic
