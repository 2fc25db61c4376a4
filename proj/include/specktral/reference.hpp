#pragma once

// Straightforward serial implementations of the parallel kernels. They are
// slow on purpose and serve as oracles in tests and baselines in benchmarks.

#include <cstddef>
#include <span>

#include "specktral/codes.hpp"
#include "specktral/covering.hpp"
#include "specktral/fourier.hpp"

namespace specktral::reference {

/// Decodes every index to its coefficient vector and sums generators.
WeightDistribution weight_distribution(const AffineCode& c, const Limits& limits = {});

/// Direct O(q^(2n)) character sum.
DenseFunction transform_naive(const DenseFunction& f);

/// Walks every member of the face.
BigInt face_intersection_enum(const AffineCode& c, const Face& face, const Limits& limits = {});

/// Visits every t-face and tests each member of S for membership.
BigInt count_intersecting_faces_brute(FieldOrder q, std::size_t n, std::span<const FqVector> s, std::size_t t,
                                      const Limits& limits = {});

}  // namespace specktral::reference
