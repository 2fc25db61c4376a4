#pragma once

// Exact checks of the MacWilliams-type identities linking a code (or a
// function on GF(q)^n) to its dual (or Fourier transform), including the
// harmonic-weighted identity
//
//   sum_k Ahat_k / ((q-1)^k C(n,k))
//     = (n+1)(q-1) / q^(1+n/2) * sum_m A_m / (m+1) * (1 - (-1)^(m+1) / (q-1)^(m+1)).
//
// Exact paths multiply through by q^(n/2) so every quantity is rational.
// A failed check comes back as a report with both sides, never as an exception.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "specktral/codes.hpp"
#include "specktral/fourier.hpp"
#include "specktral/numeric.hpp"

namespace specktral {

struct IdentityReport {
    std::string identity;
    std::vector<Rational> lhs;
    std::vector<Rational> rhs;
    bool pass;
};

struct NumericIdentityReport {
    std::string identity;
    std::vector<std::complex<double>> lhs;
    std::vector<std::complex<double>> rhs;
    double max_deviation;
    bool pass;
};

/// Dual distribution A_k(C^perp) = q^(-k_dim) sum_m P_k(m) A_m(C).
/// Throws std::invalid_argument("input is not a valid linear-code distribution")
/// when an entry comes out negative or fractional, or the total is wrong.
WeightDistribution macwilliams_transform(const WeightDistribution& w, std::size_t k_dim);

/// q^(n/2) Ahat_k via the Krawtchouk sums: sum_m P_k(m) A_m.
std::vector<Rational> scaled_hat_krawtchouk(std::span<const Rational> a, std::size_t n, std::uint64_t q);
std::vector<std::complex<double>> scaled_hat_krawtchouk(std::span<const std::complex<double>> a, std::size_t n,
                                                        std::uint64_t q);
/// q^(n/2) Ahat_k as coefficients of sum_m A_m (1-z)^m (1+(q-1)z)^(n-m).
std::vector<Rational> scaled_hat_generating(std::span<const Rational> a, std::size_t n, std::uint64_t q);

IdentityReport verify_macwilliams(const LinearCode& c, const Limits& limits = {});

/// Indicator form of the functional identity for f = 1_C. Exact sides are
/// q^(n/2) Ahat_k taken from the dual enumeration, q^dim C A_k(C^perp), against
/// sum_m P_k(m) A_m(C). The floating transform's shell sums must also agree
/// with the exact side to within tol.
IdentityReport verify_transform_shells(const LinearCode& c, double tol = kDefaultTolerance, const Limits& limits = {});

struct SpectralSums {
    FieldOrder q;
    std::size_t n;
    std::vector<std::complex<double>> a;      // A_k[f]
    std::vector<std::complex<double>> a_hat;  // Ahat_k[f]
    double shell_deviation;                     // max_k |Ahat_k - q^(-n/2) sum_m P_k(m) A_m|
    bool shells_hold;
};

SpectralSums spectral_sums(const DenseFunction& f, double tol = kDefaultTolerance);

/// Floating check on an arbitrary complex function; one-element sides.
NumericIdentityReport verify_harmonic(const DenseFunction& f, double tol = kDefaultTolerance);

/// Exact check from shell sums A_m and scaled transform shell sums q^(n/2) Ahat_k.
/// Sides are reported multiplied by q^(n/2).
IdentityReport verify_harmonic_exact(std::span<const Rational> a, std::span<const Rational> scaled_hat, std::size_t n,
                                   std::uint64_t q);

/// Exact path for f = scale * 1_C, with the transform side taken from the
/// dual enumeration.
IdentityReport verify_harmonic_indicator(const LinearCode& c, const Rational& scale = 1, const Limits& limits = {});

IdentityReport verify_harmonic_dual(const LinearCode& c, const Limits& limits = {});

/// Binary special case; throws std::invalid_argument unless q = 2.
IdentityReport verify_harmonic_binary(const LinearCode& c, const Limits& limits = {});

/// Polynomial identity q^(n/2) sum_k Ahat_k z^k = sum_m A_m (1-z)^m (1+(q-1)z)^(n-m)
/// evaluated at each sample. Throws std::invalid_argument with fewer than n+1
/// distinct samples.
NumericIdentityReport verify_generating_function(const DenseFunction& f, std::span<const std::complex<double>> z_samples,
                                 double tol = kDefaultTolerance);

/// Exact version for f = 1_C at rational sample points.
IdentityReport verify_generating_function_exact(const LinearCode& c, std::span<const Rational> z_samples,
                                    const Limits& limits = {});

}  // namespace specktral
