#pragma once

#include <stdexcept>
#include <string>

namespace specktral {

/// Size caps for brute-force work. Values are log2 of the largest allowed
/// object count; exceeding one raises GuardExceeded instead of truncating.
struct Limits {
    unsigned max_enum_bits = 26;   // codewords per enumeration
    unsigned max_coset_bits = 20;  // cosets visited by alpha()
    unsigned max_dense_bits = 26;  // entries of a DenseFunction
    unsigned max_face_bits = 24;   // faces visited by brute-force face loops

    /// Defaults, with max_enum_bits overridden by SPECKTRAL_MAX_ENUM when set.
    /// A value that is not an integer in [1, 62] throws std::invalid_argument.
    static Limits from_env();
};

class GuardExceeded : public std::runtime_error {
public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace specktral
