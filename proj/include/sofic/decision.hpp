#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "alphabet.hpp"
#include "graph.hpp"

namespace sofic {

enum class Verdict { no, yes, inconclusive };

/// Whether a verdict speaks about points of the shift or only about the
/// presentation it was computed on.
enum class Scope { point, presentation };

inline const char* to_string(Verdict v)
{
	switch (v) {
	case Verdict::no:  return "false";
	case Verdict::yes: return "true";
	default:           return "inconclusive";
	}
}

inline const char* to_string(Scope s) { return s == Scope::point ? "point-level" : "presentation-level"; }

/// Words u, v such that no w makes uwv a word of the language.
struct WordPairWitness {
	Word u;
	Word v;
};

/// The point ...LLL M RRR... with M starting at position 0.
struct PeriodicPoint {
	Word left_period;
	Word middle;
	Word right_period;

	/// Finite restriction to [-reps*|L|, |M| + reps*|R|).
	ConfigurationWindow expand(std::size_t reps) const
	{
		ConfigurationWindow w{-static_cast<std::int64_t>(reps * left_period.size()), repeat(left_period, reps)};
		w.letters.insert(w.letters.end(), middle.begin(), middle.end());
		auto right = repeat(right_period, reps);
		w.letters.insert(w.letters.end(), right.begin(), right.end());
		return w;
	}
};

/// Two distinct points with the same image. For pre-injectivity witnesses the
/// points share their periodic tails, so they differ only inside `middle`;
/// `first_window` / `second_window` are finite restrictions that already
/// exhibit equal images under the automaton.
struct PointPairWitness {
	PeriodicPoint first;
	PeriodicPoint second;
	ConfigurationWindow first_window;
	ConfigurationWindow second_window;
};

/// A word u0 all of whose presenting paths end at one vertex q0.
struct SyncWitness {
	Word word;
	Vertex vertex = 0;
	std::size_t length() const noexcept { return word.size(); }
};

/// Constructive strong-irreducibility witness: every gap of length at least
/// n0_bound can be filled, with n0_bound = (n0 + |u0|) + 2 * diameter.
struct SiCertificate {
	SyncWitness sync;
	std::size_t n0 = 0;
	std::size_t l0 = 0;
	std::size_t diameter = 0;
	std::size_t n0_bound = 0;
	std::optional<std::size_t> n0_min;
};

using Witness = std::variant<std::monostate, Word, WordPairWitness, PointPairWitness, SiCertificate>;

struct Decision {
	Verdict verdict = Verdict::inconclusive;
	Witness witness;
	Scope scope = Scope::point;
	std::string note;

	bool yes() const noexcept { return verdict == Verdict::yes; }
	bool no() const noexcept { return verdict == Verdict::no; }

	template <class T>
	const T* get() const noexcept
	{
		return std::get_if<T>(&witness);
	}
};

inline Decision make_decision(bool verdict, Witness w = {}, Scope scope = Scope::point)
{
	return {verdict ? Verdict::yes : Verdict::no, std::move(w), scope, {}};
}

} // namespace sofic
