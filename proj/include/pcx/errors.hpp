#ifndef PCX_ERRORS_HPP
#define PCX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcx {

enum class errc {
    invalid_ring,
    non_field_ring,
    shape_mismatch,
    ring_mismatch,
    missing_variable,
    not_a_complex,
    not_chain_map,
    unsupported_module,
    unsupported_ring,
    unsupported_embedding,
    not_extension,
    not_qiso,
    empty_family,
    not_base_changed,
    no_point_found,
    field_too_small,
    not_qiso_input,
    parse_error,
    validation_error,
    internal,
};

const char* errc_name(errc c);

/// Every failure in the engine is raised as an Error carrying a stable
/// machine-readable code plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message);
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

} // namespace pcx

#endif
