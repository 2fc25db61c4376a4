#pragma once

// Explicit extremal objects over GF(2):
//   M(n, i) = {(x, x + 1, 0^i) : x in GF(2)^((n-i)/2)}, constant weight (n-i)/2;
//   C(n)    = span of M(n, 0), i.e. M(n, 0) together with {(x, x)};
//   g(n)    = (-1)^wt(x) on (x, x + 1), 0 elsewhere, a Fourier eigenfunction
//             with support 2^(n/2);
// and the size bounds these objects are measured against.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "specktral/codes.hpp"
#include "specktral/fourier.hpp"
#include "specktral/numeric.hpp"

namespace specktral {

struct BoundReport {
    std::string bound_name;
    BigInt code_size;
    BigInt bound;
    bool pass;   // code_size <= bound
    bool tight;  // code_size == bound
};

/// Requires 0 <= i <= n, n - i even and >= 2; std::invalid_argument otherwise.
AffineCode build_M(std::size_t n, std::size_t i);
/// Requires even n >= 2.
LinearCode build_C(std::size_t n);
/// Requires even n >= 2.
DenseFunction build_g(std::size_t n);

/// Hamming ball size sum_{j<=k} (q-1)^j C(n,j).
BigInt delsarte_ball(std::size_t n, std::uint64_t q, std::size_t k);

/// Linear code inside {0} and the shells listed in `weights`. The bound uses
/// the number of nonzero weights actually present in the code.
/// Throws std::invalid_argument("weight-profile mismatch") when a codeword
/// falls outside the listed shells.
BoundReport check_few_weights(const LinearCode& c, const std::vector<std::size_t>& weights, const Limits& limits = {});
BoundReport check_few_weights(const LinearCode& c, const Limits& limits = {});

/// Minimal support of a binary function whose transform lives on shell k:
/// 2^((n + |n - 2k|)/2).
BigInt L_binary(std::size_t n, std::size_t k);

/// Constant-weight binary affine code: |C| <= 2^((n - |n - 2k|)/2).
/// Throws std::invalid_argument("not constant-weight") unless C lies in shell k.
BoundReport check_constant_weight(const AffineCode& c, std::size_t k, const Limits& limits = {});
/// Same code class measured against 2^n / L_binary(n, k).
BoundReport check_support_bound(const AffineCode& c, std::size_t k, const Limits& limits = {});

}  // namespace specktral
