#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sofic {

enum class errc {
	invalid_argument,
	parse_error,
	alphabet_mismatch,
	state_blowup,
	no_sync_word,
	not_mixing,
	cap_exceeded,
	word_not_in_language,
	separation_too_small,
	not_subshift,
	certificate_missing,
	word_too_short,
	not_into_target,
	not_endomorphism,
	table_too_large,
	window_too_small,
};

inline std::string_view to_string(errc code)
{
	switch (code) {
	case errc::invalid_argument:     return "InvalidArgument";
	case errc::parse_error:          return "ParseError";
	case errc::alphabet_mismatch:    return "AlphabetMismatch";
	case errc::state_blowup:         return "StateBlowup";
	case errc::no_sync_word:         return "NoSyncWord";
	case errc::not_mixing:           return "NotMixing";
	case errc::cap_exceeded:         return "CapExceeded";
	case errc::word_not_in_language: return "WordNotInLanguage";
	case errc::separation_too_small: return "SeparationTooSmall";
	case errc::not_subshift:         return "NotSubshift";
	case errc::certificate_missing:  return "CertificateMissing";
	case errc::word_too_short:       return "WordTooShort";
	case errc::not_into_target:      return "NotIntoTarget";
	case errc::not_endomorphism:     return "NotEndomorphism";
	case errc::table_too_large:      return "TableTooLarge";
	case errc::window_too_small:     return "WindowTooSmall";
	}
	return "Unknown";
}

// All library failures are reported through this one exception type; the
// code identifies the contract that was violated.
class error : public std::runtime_error {
public:
	error(errc code, const std::string& what)
		: std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
	{}

	errc code() const noexcept { return code_; }

private:
	errc code_;
};

} // namespace sofic
