#pragma once

// Character transform on GF(q)^n for densely stored complex functions:
//
//   fhat(z) = q^(-n/2) sum_x f(x) w^(x . z),   w = exp(2 pi i / q).
//
// Entry x lives at index sum_i x_i q^i (coordinate 0 least significant).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "specktral/codes.hpp"
#include "specktral/galois.hpp"
#include "specktral/limits.hpp"

namespace specktral {

inline constexpr double kDefaultTolerance = 1e-9;

class DenseFunction {
public:
    /// Throws std::invalid_argument unless values.size() == q^n, GuardExceeded
    /// when q^n exceeds 2^limits.max_dense_bits.
    DenseFunction(FieldOrder q, std::size_t n, std::vector<std::complex<double>> values, const Limits& limits = {});

    static DenseFunction zero(FieldOrder q, std::size_t n, const Limits& limits = {});
    static DenseFunction delta(const FqVector& at, const Limits& limits = {});
    static DenseFunction indicator(const AffineCode& c, const Limits& limits = {});

    FieldOrder field() const { return q_; }
    std::size_t length() const { return n_; }
    std::size_t size() const { return values_.size(); }

    const std::vector<std::complex<double>>& values() const { return values_; }
    std::complex<double> operator[](std::size_t index) const { return values_[index]; }
    std::complex<double> at(const FqVector& x) const;

    /// Same domain, new values; throws std::invalid_argument on a size mismatch.
    DenseFunction with_values(std::vector<std::complex<double>> values) const;

    std::size_t index_of(const FqVector& x) const;
    FqVector vector_at(std::size_t index) const;

private:
    FieldOrder q_;
    std::size_t n_;
    std::vector<std::complex<double>> values_;
};

/// Tensor-product transform: one q-point DFT per coordinate, O(n q^(n+1)).
/// Dispatches to fast_transform_q2 for q = 2.
DenseFunction transform(const DenseFunction& f);

/// Walsh-Hadamard butterflies, O(n 2^n); throws std::invalid_argument if q != 2.
DenseFunction fast_transform_q2(const DenseFunction& f);

/// x -> f(-x). transform(transform(f)) equals reflect(f).
DenseFunction reflect(const DenseFunction& f);

/// Indices x with |f(x)| > tol.
std::vector<std::size_t> support(const DenseFunction& f, double tol = kDefaultTolerance);

/// Weight-shell sums: out[k] = sum over wt(x) = k of f(x).
std::vector<std::complex<double>> shell_sums(const DenseFunction& f);

double max_abs_diff(const DenseFunction& a, const DenseFunction& b);

struct EigenReport {
    std::optional<int> eigenvalue;  // +1 or -1 when ||fhat - lambda f||_inf <= tol
    double residual;                // min over lambda in {+1, -1}
};

/// Binary only; throws std::invalid_argument for q != 2 or f == 0.
EigenReport eigenfunction_check(const DenseFunction& f, double tol = kDefaultTolerance);

struct UncertaintyReport {
    std::size_t support_f;
    std::size_t support_hat;
    BigInt product;
    BigInt bound;  // 2^n
    bool pass;
};

/// |supp f| |supp fhat| >= 2^n. Binary only; throws for q != 2 or f == 0.
UncertaintyReport uncertainty_report(const DenseFunction& f, double tol = kDefaultTolerance);

}  // namespace specktral
