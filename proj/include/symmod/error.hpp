#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symmod {

enum class errc {
    bad_partition,
    not_prime,
    not_removable,
    not_addable,
    first_part_too_small,
    not_regular,
    empty_partition,
    negative_m,
    m_out_of_range,
    bad_params,
    precondition_failed,
    missing_a,
    oracle_out_of_range,
};

inline std::string_view to_string(errc code) noexcept {
    switch (code) {
    case errc::bad_partition: return "BadPartition";
    case errc::not_prime: return "NotPrime";
    case errc::not_removable: return "NotRemovable";
    case errc::not_addable: return "NotAddable";
    case errc::first_part_too_small: return "FirstPartTooSmall";
    case errc::not_regular: return "NotRegular";
    case errc::empty_partition: return "EmptyPartition";
    case errc::negative_m: return "NegativeM";
    case errc::m_out_of_range: return "MOutOfRange";
    case errc::bad_params: return "BadParams";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::missing_a: return "MissingA";
    case errc::oracle_out_of_range: return "OracleOutOfRange";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace symmod
