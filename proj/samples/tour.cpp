// Walks through the bundled examples: strong irreducibility certificates,
// entropy, and the three automata from the Garden of Eden discussion.

#include <iostream>

#include <sofic/sofic.hpp>

using namespace sofic;

int main()
{
	for (const auto& x : {fixtures::full(), fixtures::golden(), fixtures::even(), fixtures::twopoint()}) {
		std::cout << x.name() << ": ";
		auto si = is_strongly_irreducible(x);
		if (const auto* c = si.get<SiCertificate>())
			std::cout << "strongly irreducible, gaps of length " << c->n0_bound << " always fill (least such length " << *c->n0_min << ")";
		else
			std::cout << "not strongly irreducible (" << si.note << ")";
		std::cout << ", entropy " << entropy_spectral(x, 1e-12).value << '\n';
	}

	auto full = fixtures::full();
	auto xr = fixtures::xor_rule();
	std::cout << "xor: pre-injective " << to_string(is_pre_injective(xr, full).verdict) << ", injective "
	          << to_string(is_injective(xr, full).verdict) << ", surjective " << to_string(is_surjective(xr, full, full).verdict) << '\n';

	auto two = fixtures::twopoint();
	auto c = fixtures::collapse();
	auto s = is_surjective(c, two, two);
	std::cout << "collapse: pre-injective " << to_string(is_pre_injective(c, two).verdict) << ", surjective " << to_string(s.verdict)
	          << ", missing word " << two.alphabet().format(*s.get<Word>()) << '\n';

	// Two patterns far enough apart always co-occur in a point of the golden mean shift.
	auto golden = fixtures::golden();
	GlueRequest req{{{{0, 2}, {1, 0}}, {{6, 8}, {0, 1}}}, 4};
	std::cout << "glued: " << golden.alphabet().format(glue(golden, req).letters) << '\n';
}
