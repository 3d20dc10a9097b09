#include "pcx/errors.hpp"

namespace pcx {

const char* errc_name(errc c)
{
    switch (c) {
        case errc::invalid_ring: return "INVALID_RING";
        case errc::non_field_ring: return "NON_FIELD_RING";
        case errc::shape_mismatch: return "SHAPE_MISMATCH";
        case errc::ring_mismatch: return "RING_MISMATCH";
        case errc::missing_variable: return "MISSING_VARIABLE";
        case errc::not_a_complex: return "NOT_A_COMPLEX";
        case errc::not_chain_map: return "NOT_CHAIN_MAP";
        case errc::unsupported_module: return "UNSUPPORTED_MODULE";
        case errc::unsupported_ring: return "UNSUPPORTED_RING";
        case errc::unsupported_embedding: return "UNSUPPORTED_EMBEDDING";
        case errc::not_extension: return "NOT_EXTENSION";
        case errc::not_qiso: return "NOT_QISO";
        case errc::empty_family: return "EMPTY_FAMILY";
        case errc::not_base_changed: return "NOT_BASE_CHANGED";
        case errc::no_point_found: return "NO_POINT_FOUND";
        case errc::field_too_small: return "FIELD_TOO_SMALL";
        case errc::not_qiso_input: return "NOT_QISO_INPUT";
        case errc::parse_error: return "PARSE_ERROR";
        case errc::validation_error: return "VALIDATION_ERROR";
        case errc::internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code)
{
}

void fail(errc code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace pcx
