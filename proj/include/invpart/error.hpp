#ifndef INVPART_ERROR_HPP
#define INVPART_ERROR_HPP

#include <stdexcept>
#include <string>

namespace invpart {

enum class errc {
    negative_part,
    duplicate_zero,
    zero_part_present,
    not_in_family,
    invalid_hook_row,
    no_valid_position,
    not_multiple_of_modulus,
    wrong_family_for_weight,
    mismatched_truncation,
    divergent_at_q0,
    unknown_identity,
    unsupported_family,
    invalid_argument,
};

/// All library preconditions report through this type; code() identifies
/// the violated contract, what() carries the details.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg)
{
    throw error(code, msg);
}

}  // namespace invpart

#endif
