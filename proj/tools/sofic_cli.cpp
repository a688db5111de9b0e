// sofic: command-line front end.
//
// Exit codes: 0 analysis ran, 1 input error, 2 a verified contradiction of
// an implication that must hold (indicates a bug).

#include <charconv>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <sofic/sofic.hpp>

using namespace sofic;

namespace {

int contradictions = 0;

void machine(const std::string& key, const std::string& value) { std::cout << "#: " << key << '=' << value << '\n'; }

void machine(const std::string& key, bool value) { machine(key, std::string(value ? "true" : "false")); }

template <class T>
void machine(const std::string& key, T value)
    requires std::is_arithmetic_v<T>
{
	std::ostringstream s;
	s << std::setprecision(12) << value;
	machine(key, s.str());
}

void machine(const std::string& key, const char* value) { machine(key, std::string(value)); }

void contradiction(const std::string& what)
{
	++contradictions;
	std::cout << "THEOREM-CONTRADICTION: " << what << '\n';
	machine("contradiction", what);
}

std::string periodic(const Alphabet& a, const PeriodicPoint& p)
{
	return "(" + a.format(p.left_period) + ")^inf " + a.format(p.middle) + " (" + a.format(p.right_period) + ")^inf";
}

Shift shift_by_name(const std::string& name)
{
	if (name == "full2")
		return fixtures::full();
	if (name == "golden")
		return fixtures::golden();
	if (name == "even")
		return fixtures::even();
	if (name == "twopoint")
		return fixtures::twopoint();
	if (name == "period2")
		return fixtures::period2();
	if (name.rfind("mixnot_", 0) == 0) {
		std::size_t k = 0;
		auto tail = name.substr(7);
		auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
		if (ec == std::errc() && p == tail.data() + tail.size() && k >= 1)
			return fixtures::mixnot(k);
	}
	if (std::filesystem::exists(name))
		return load_shift(name);
	throw error(errc::invalid_argument, "unknown shift '" + name + "' (not a bundled name or a file)");
}

void print_certificate(const Alphabet& a, const SiCertificate& c)
{
	machine("sync_word", a.format(c.sync.word));
	machine("n0", c.n0);
	machine("L0", c.l0);
	machine("D", c.diameter);
	machine("N0_bound", c.n0_bound);
	if (c.n0_min)
		machine("N0_min", *c.n0_min);
}

void print_entropy(const Shift& x, std::size_t n_max, double tol)
{
	auto b = entropy_blocks(x, n_max);
	auto s = entropy_spectral(x, tol);
	std::cout << "entropy (nats): block count n=" << n_max << " " << std::setprecision(10) << b.value << " (+/- " << b.error_bound
	          << "), spectral " << s.value << " (+/- " << s.error_bound << ")\n";
	machine("entropy_blocks", b.value);
	machine("entropy_blocks_error", b.error_bound);
	machine("entropy_blocks_log2", b.value_log2());
	machine("entropy_spectral", s.value);
	machine("entropy_spectral_error", s.error_bound);
	machine("entropy_spectral_log2", s.value_log2());
	if (s.empty_shift)
		machine("empty_shift", true);
}

void print_table(const Shift& x, std::size_t n)
{
	auto counts = block_counts(x, n);
	std::cout << "n\t|X_n|\tlog|X_n|/n\n";
	for (std::size_t i = 1; i <= n; ++i)
		std::cout << i << '\t' << counts[i] << '\t' << std::setprecision(10) << (counts[i] == 0 ? 0.0 : log_big(counts[i]) / i) << '\n';
}

void shift_analyze(const std::string& path, std::optional<std::size_t> gap_cap, std::optional<std::size_t> table, std::size_t n_max,
                   double tol)
{
	auto x = load_shift(path);
	std::cout << "shift " << x.name() << " (" << (x.is_sft() ? "finite type" : "sofic") << ", " << x.deterministic().vertex_count
	          << " states in the right-resolving presentation)\n";
	machine("op", "shift analyze");
	auto irr = is_irreducible(x);
	machine("irreducible", irr.yes());
	if (auto* w = irr.get<WordPairWitness>())
		machine("irreducible_witness", x.alphabet().format(w->u) + " / " + x.alphabet().format(w->v));
	auto mix = is_mixing(x);
	machine("cycle_gcd", mix.cycle_gcd);
	machine("mixing", mix.mixing);
	auto si = is_strongly_irreducible(x);
	machine("si", si.yes());
	machine("scope", to_string(si.scope));
	if (auto* c = si.get<SiCertificate>())
		print_certificate(x.alphabet(), *c);
	if (gap_cap) {
		try {
			auto g = minimal_gap(x, *gap_cap);
			machine("minimal_gap", g);
			if (!si.get<SiCertificate>())
				machine("N0_min", g);
		} catch (const error& e) {
			machine("minimal_gap", std::string("none (") + e.what() + ")");
		}
	}
	print_entropy(x, n_max, tol);
	if (table)
		print_table(x, *table);
}

void shift_entropy(const std::string& path, std::size_t n_max, double tol, std::optional<std::size_t> table)
{
	auto x = load_shift(path);
	machine("op", "shift entropy");
	print_entropy(x, n_max, tol);
	if (table)
		print_table(x, *table);
}

void ca_analyze(const std::string& shift_path, const std::string& ca_path, double tol)
{
	auto x = load_shift(shift_path);
	auto t = load_ca(ca_path, x.alphabet());
	machine("op", "ca analyze");
	machine("memory", std::to_string(t.left()) + ".." + std::to_string(t.right()));
	const bool endo = t.source() == t.target();
	Shift y = endo ? x : Shift::from_sft(SftSpec(t.target(), {}), "full");
	if (endo)
		require_endomorphism(t, x);

	auto inj = is_injective(t, x);
	auto pre = is_pre_injective(t, x);
	auto surj = is_surjective(t, x, y);
	machine("injective", inj.yes());
	if (auto* w = inj.get<PointPairWitness>()) {
		machine("injective_witness_first", periodic(x.alphabet(), w->first));
		machine("injective_witness_second", periodic(x.alphabet(), w->second));
	}
	machine("pre_injective", pre.yes());
	machine("pre_injective_scope", to_string(pre.scope));
	if (auto* w = pre.get<PointPairWitness>()) {
		machine("pre_injective_window_first", std::to_string(w->first_window.begin) + ":" + x.alphabet().format(w->first_window.letters));
		machine("pre_injective_window_second", std::to_string(w->second_window.begin) + ":" + x.alphabet().format(w->second_window.letters));
	}
	machine("surjective", surj.yes());
	if (auto* w = surj.get<Word>())
		machine("garden_of_eden", y.alphabet().format(*w));
	if (inj.yes() && !pre.yes())
		contradiction("injective but not pre-injective");

	if (endo) {
		auto m = check_myhill(t, x);
		machine("si", m.strongly_irreducible.yes());
		machine("myhill_premise", m.premise);
		machine("myhill_contradiction", m.contradiction);
		if (m.contradiction)
			contradiction("strongly irreducible, pre-injective, not surjective");
	}
	auto ep = check_entropy_preservation(t, x, tol);
	machine("entropy_domain", ep.domain.value);
	machine("entropy_image", ep.image.value);
	machine("entropy_monotone", ep.monotone);
	machine("entropy_equality_required", ep.equality_required);
	machine("entropy_equal", ep.equal);
	if (!ep.ok)
		contradiction("entropy preservation check failed");
}

struct Example {
	const char* name;
	Shift x;
	CellularAutomaton t;
	bool pre_injective;
	bool injective;
	bool surjective;
};

void paper_examples(double tol)
{
	machine("op", "corpus --paper-examples");
	std::vector<Example> examples{
	    {"xor on full2", fixtures::full(), fixtures::xor_rule(), true, false, true},
	    {"collapse on twopoint", fixtures::twopoint(), fixtures::collapse(), true, false, false},
	    {"identity on even", fixtures::even(), fixtures::identity(), true, true, true},
	    {"constant0 on full2", fixtures::full(), fixtures::constant_zero(), false, false, false},
	};
	for (const auto& ex : examples) {
		auto pre = is_pre_injective(ex.t, ex.x).yes();
		auto inj = is_injective(ex.t, ex.x).yes();
		auto surj = is_surjective(ex.t, ex.x, ex.x).yes();
		auto myhill = check_myhill(ex.t, ex.x);
		auto ep = check_entropy_preservation(ex.t, ex.x, tol);
		std::cout << ex.name << ": pre-injective " << pre << ", injective " << inj << ", surjective " << surj << ", si "
		          << myhill.strongly_irreducible.yes() << '\n';
		machine("example", std::string(ex.name) + ", " + (pre ? "1" : "0") + ", " + (inj ? "1" : "0") + ", " + (surj ? "1" : "0"));
		if (pre != ex.pre_injective || inj != ex.injective || surj != ex.surjective)
			contradiction(std::string(ex.name) + ": verdicts differ from the stated example");
		if (myhill.contradiction)
			contradiction(std::string(ex.name) + ": Myhill implication fails");
		if (!ep.ok)
			contradiction(std::string(ex.name) + ": entropy check fails");
	}
	// Images of the full shift are strongly irreducible.
	for (const auto& t : {fixtures::xor_rule(), fixtures::constant_zero(), fixtures::identity()}) {
		auto image = image_presentation(t, fixtures::full());
		if (!is_strongly_irreducible(image).yes())
			contradiction("image of the full shift is not strongly irreducible");
	}
	machine("contradictions", contradictions);
}

std::pair<std::int64_t, std::int64_t> parse_memory(const std::string& s)
{
	auto dots = s.find("..");
	if (dots == std::string::npos)
		throw error(errc::invalid_argument, "memory must look like a..b");
	try {
		return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
	} catch (const std::exception&) {
		throw error(errc::invalid_argument, "memory bounds must be integers");
	}
}

void corpus(const std::string& shift, std::size_t count, std::uint64_t seed, const std::string& memory, unsigned workers, double tol,
            bool quiet)
{
	auto x = shift_by_name(shift);
	CorpusConfig cfg;
	cfg.count = count;
	cfg.seed = seed;
	std::tie(cfg.left, cfg.right) = parse_memory(memory);
	cfg.workers = workers;
	cfg.tol = tol;
	machine("op", "corpus");
	machine("shift", x.name());
	machine("memory", memory);
	machine("seed", seed);
	auto s = run_corpus(x, cfg);
	if (!quiet)
		for (const auto& r : s.instances)
			machine("instance", format_instance(r));
	for (const auto& r : s.instances)
		for (const auto& c : r.contradictions)
			contradiction("seed " + std::to_string(r.seed) + ": " + c);
	std::cout << "corpus " << x.name() << ": " << s.instances.size() << " endomorphisms from " << s.attempts << " tables (" << s.filtered
	          << " filtered), pre-injective " << s.pre_injective << ", injective " << s.injective << ", surjective " << s.surjective
	          << '\n';
	machine("instances", s.instances.size());
	machine("attempts", s.attempts);
	machine("filtered", s.filtered);
	machine("domain_si", s.domain_si);
	machine("pre_injective", s.pre_injective);
	machine("injective", s.injective);
	machine("surjective", s.surjective);
	machine("contradictions", contradictions);
	if (s.instances.size() < count)
		std::cout << "note: attempt cap reached before " << count << " endomorphisms were found\n";
}

void tiling_check(std::int64_t k, std::int64_t n)
{
	machine("op", "tiling check");
	auto t = tiling_Z(k);
	Interval window{-10 * k, 10 * k};
	bool ok = verify_tiling(t, window);
	machine("k", k);
	machine("tiling_ok", ok);
	auto d = tiling_density(t, n);
	machine("tiles_inside", d.count);
	machine("density", d.ratio);
	machine("alpha", d.alpha);
	machine("density_ok", d.alpha_ok);
}

void lemma41(const std::string& path, std::size_t d, std::size_t k, std::size_t n, const std::string& pattern)
{
	auto x = load_shift(path);
	machine("op", "lemma41 check");
	std::optional<Word> p;
	if (!pattern.empty())
		p = x.alphabet().parse(pattern);
	auto r = lemma41_check(x, d, k, n, p);
	machine("N0", r.n0);
	machine("k", r.k);
	machine("pattern", x.alphabet().format(r.pattern));
	machine("tiles", r.tiles);
	machine("rho", r.rho.str());
	machine("Q", r.q_count.str());
	machine("X_n", r.x_count.str());
	machine("bound", r.bound);
	machine("holds", r.holds);
	machine("rate_gap", r.x_rate - r.q_rate);
	machine("rate_drop_bound", -r.rate_drop);
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"sofic: subshifts over Z, cellular automata, entropy"};
	app.require_subcommand(1);
	double tol = 1e-9;
	app.add_option("--tol", tol, "spectral tolerance")->check(CLI::PositiveNumber);

	auto* shift = app.add_subcommand("shift", "analyze a shift file");
	shift->require_subcommand(1);
	std::string shift_path;
	std::optional<std::size_t> gap_cap, table;
	std::size_t n_max = 40;
	auto* analyze = shift->add_subcommand("analyze", "irreducibility, mixing, strong irreducibility, entropy");
	analyze->add_option("path", shift_path)->required();
	analyze->add_option("--minimal-gap", gap_cap, "compute the least gap, failing above this cap");
	analyze->add_option("--table", table, "print block counts up to n");
	analyze->add_option("--n-max", n_max, "window for the block-count entropy")->check(CLI::Range(2, 100000));
	analyze->add_option("--tol", tol, "spectral tolerance")->check(CLI::PositiveNumber);
	auto* entropy = shift->add_subcommand("entropy", "entropy by both methods");
	entropy->add_option("path", shift_path)->required();
	entropy->add_option("--table", table, "print block counts up to n");
	entropy->add_option("--n-max", n_max, "window for the block-count entropy")->check(CLI::Range(2, 100000));
	entropy->add_option("--tol", tol, "spectral tolerance")->check(CLI::PositiveNumber);

	auto* ca = app.add_subcommand("ca", "analyze an automaton on a shift");
	ca->require_subcommand(1);
	std::string ca_path;
	auto* ca_an = ca->add_subcommand("analyze", "injectivity, pre-injectivity, surjectivity, entropy");
	ca_an->add_option("shift", shift_path)->required();
	ca_an->add_option("automaton", ca_path)->required();
	ca_an->add_option("--tol", tol, "spectral tolerance")->check(CLI::PositiveNumber);

	auto* corp = app.add_subcommand("corpus", "random endomorphisms checked against the Garden of Eden implications");
	std::string corpus_shift = "full2", memory = "0..2";
	std::size_t count = 200;
	std::uint64_t seed = 1;
	unsigned workers = 1;
	bool paper = false, quiet = false;
	corp->add_option("--shift", corpus_shift, "bundled shift name or shift file");
	corp->add_option("--count", count, "endomorphisms to collect");
	corp->add_option("--seed", seed, "base seed");
	corp->add_option("--memory", memory, "memory interval a..b");
	corp->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));
	corp->add_option("--tol", tol, "spectral tolerance")->check(CLI::PositiveNumber);
	corp->add_flag("--paper-examples", paper, "run the bundled examples end to end");
	corp->add_flag("--quiet", quiet, "summary only");

	auto* tiling = app.add_subcommand("tiling", "tilings of Z by intervals");
	tiling->require_subcommand(1);
	std::int64_t k = 1, n = 0;
	auto* tcheck = tiling->add_subcommand("check", "disjointness, covering and density");
	tcheck->add_option("--k", k, "tile size")->required()->check(CLI::Range(1, 1000000));
	tcheck->add_option("--n", n, "window [0, n) for the density")->required();

	auto* lemma = app.add_subcommand("lemma41", "counting inequality for excluded patterns");
	lemma->require_subcommand(1);
	std::size_t d = 1, lk = 0, ln = 0;
	std::string pattern;
	auto* lcheck = lemma->add_subcommand("check", "compare |Q| with (1 - 1/rho)^|T| |X_n|");
	lcheck->add_option("shift", shift_path)->required();
	lcheck->add_option("--d", d, "pattern window size");
	lcheck->add_option("--k", lk, "tile size (default d + 2 N0)");
	lcheck->add_option("--n", ln, "window [0, n)")->required();
	lcheck->add_option("--pattern", pattern, "excluded pattern (default: last d-block)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 1;
	}

	try {
		if (analyze->parsed())
			shift_analyze(shift_path, gap_cap, table, n_max, tol);
		else if (entropy->parsed())
			shift_entropy(shift_path, n_max, tol, table);
		else if (ca_an->parsed())
			ca_analyze(shift_path, ca_path, tol);
		else if (corp->parsed()) {
			if (paper)
				paper_examples(tol);
			else
				corpus(corpus_shift, count, seed, memory, workers, tol, quiet);
		} else if (tcheck->parsed())
			tiling_check(k, n);
		else if (lcheck->parsed())
			lemma41(shift_path, d, lk, ln, pattern);
	} catch (const error& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 1;
	}
	return contradictions > 0 ? 2 : 0;
}
