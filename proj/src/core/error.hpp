#pragma once

#include <stdexcept>
#include <string>

namespace ramcalc {

// Error taxonomy shared by every module; the C API maps these 1:1 onto
// rc_status codes.
enum class errc {
    non_prime_characteristic,
    unsupported_degree,
    precision_exhausted,
    unbound_variable,
    empty_profile,
    unknown_divisor_name,
    indeterminate_tensor,
    field_extension_too_large,
    inconsistent_filtration,
    parse_error,
    invalid_argument,
    assertion_failure,
    io_error,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::non_prime_characteristic: return "NonPrimeCharacteristic";
    case errc::unsupported_degree: return "UnsupportedDegree";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::unbound_variable: return "UnboundVariable";
    case errc::empty_profile: return "EmptyProfile";
    case errc::unknown_divisor_name: return "UnknownDivisorName";
    case errc::indeterminate_tensor: return "IndeterminateTensor";
    case errc::field_extension_too_large: return "FieldExtensionTooLarge";
    case errc::inconsistent_filtration: return "InconsistentFiltration";
    case errc::parse_error: return "InputParseError";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::assertion_failure: return "AssertionFailure";
    case errc::io_error: return "IoError";
    case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace ramcalc
