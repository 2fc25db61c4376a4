#pragma once

// Exact q-ary Krawtchouk polynomials
//
//   P_k(m; n, q) = sum_s (-1)^s (q-1)^(k-s) C(n-m, k-s) C(m, s),
//
// together with their generating function (1-z)^m (1+(q-1)z)^(n-m), the
// column-sum closed form and the weighted symmetry relation. q is any
// integer >= 2 here; nothing in these identities needs a field.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "specktral/numeric.hpp"

namespace specktral {

/// C(n, k), zero when k > n. Served from a Pascal triangle built once.
const BigInt& binomial(std::size_t n, std::size_t k);

/// Throws std::out_of_range unless k, m <= n, or std::invalid_argument if q < 2.
BigInt krawtchouk(std::size_t k, std::size_t m, std::size_t n, std::uint64_t q);

/// (P_0(m), ..., P_n(m)) read off the expanded generating function.
std::vector<BigInt> krawtchouk_row_from_gf(std::size_t m, std::size_t n, std::uint64_t q);

/// Closed form of sum_m P_k(m; n, q): C(n+1, k+1) ((q-1)^(k+1) - (-1)^(k+1)) / q.
/// The value is always integral; a non-integer result raises std::logic_error.
Rational row_sum_closed_form(std::size_t k, std::size_t n, std::uint64_t q);

struct SymmetryReport {
    BigInt lhs;  // P_k(m) (q-1)^m C(n,m)
    BigInt rhs;  // P_m(k) (q-1)^k C(n,k)
    bool pass;
};

SymmetryReport check_symmetry(std::size_t k, std::size_t m, std::size_t n, std::uint64_t q);

/// Integer polynomial product, coefficients lowest degree first.
std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

}  // namespace specktral
