#pragma once

// Axis-aligned faces of the Hamming cube and how codes and point sets meet them.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "specktral/codes.hpp"
#include "specktral/galois.hpp"
#include "specktral/limits.hpp"
#include "specktral/numeric.hpp"

namespace specktral {

/// t free coordinates; the other n - t coordinates hold fixed values.
class Face {
public:
    /// free: distinct positions in [0, n). fixed: values for the remaining
    /// positions in increasing position order.
    Face(FieldOrder q, std::size_t n, std::vector<std::size_t> free, std::vector<Elem> fixed);

    /// The face through x with the given free positions.
    static Face through(const FqVector& x, std::vector<std::size_t> free);

    FieldOrder field() const { return q_; }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return free_.size(); }
    const std::vector<std::size_t>& free() const { return free_; }
    const std::vector<std::size_t>& fixed_positions() const { return fixed_pos_; }
    const std::vector<Elem>& fixed_values() const { return fixed_; }

    bool contains(const FqVector& v) const;

private:
    FieldOrder q_;
    std::size_t n_;
    std::vector<std::size_t> free_;
    std::vector<std::size_t> fixed_pos_;
    std::vector<Elem> fixed_;
};

/// All q^t members in little-endian order over the free coordinates.
/// Throws GuardExceeded past 2^limits.max_face_bits.
std::vector<FqVector> face_members(const Face& face, const Limits& limits = {});

/// |C ∩ face| by solving the fixed-coordinate constraints: 0 or q^(k - rank).
BigInt face_intersection(const AffineCode& c, const Face& face);

struct FaceSectionReport {
    std::vector<std::size_t> free;
    std::map<BigInt, std::size_t> histogram;  // intersection count -> number of translates
    std::optional<std::size_t> exponent;      // s with every nonzero count = 2^s
    bool pass;
};

/// Visits all q^(n-t) translates of the face with these free positions and
/// checks that the nonzero intersection counts are one common power of two.
FaceSectionReport check_face_sections(const AffineCode& c, const std::vector<std::size_t>& free, const Limits& limits = {});

/// Number of t-faces meeting S, over all C(n,t) free sets and q^(n-t) translates.
BigInt count_intersecting_faces(FieldOrder q, std::size_t n, std::span<const FqVector> s, std::size_t t,
                                const Limits& limits = {});
BigInt total_faces(FieldOrder q, std::size_t n, std::size_t t);
Rational covering_score(FieldOrder q, std::size_t n, std::span<const FqVector> s, std::size_t t,
                        const Limits& limits = {});

/// Throws GuardExceeded when C(n,t) q^(n-t) exceeds 2^limits.max_face_bits.
void check_face_guard(FieldOrder q, std::size_t n, std::size_t t, const Limits& limits);

}  // namespace specktral
