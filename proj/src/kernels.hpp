#pragma once

// OpenMP kernels shared by the public modules. Serial counterparts used as
// test oracles live in specktral/reference.hpp.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "specktral/galois.hpp"

namespace specktral::detail {

/// Weight histogram of offset + rowspace(gen), all q^k combinations.
/// gen rows must be linearly independent for the counts to be per-codeword.
std::vector<std::uint64_t> weight_histogram(const FqMatrix& gen, std::span<const Elem> offset, bool parallel);

/// In-place unnormalized Walsh-Hadamard butterflies over 2^n values.
void walsh_hadamard_inplace(std::span<std::complex<double>> values);

/// In-place unnormalized character transform over q^n values, one q-point
/// DFT pass per coordinate.
void character_transform_inplace(std::span<std::complex<double>> values, std::uint32_t q, std::size_t n);

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t t);

}  // namespace specktral::detail
