#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "specktral/galois.hpp"
#include "specktral/limits.hpp"
#include "specktral/numeric.hpp"

namespace specktral {

/// A subspace of GF(q)^n held by its reduced row echelon generator matrix.
/// The RREF is canonical, so two codes are equal iff their generators are.
class LinearCode {
public:
    static LinearCode from_generators(FieldOrder q, std::size_t n, std::span<const FqVector> generators);
    static LinearCode from_matrix(const FqMatrix& m);
    static LinearCode zero(FieldOrder q, std::size_t n);
    static LinearCode full(FieldOrder q, std::size_t n);

    FieldOrder field() const { return gen_.field(); }
    std::size_t length() const { return gen_.cols(); }
    std::size_t dimension() const { return gen_.rows(); }
    const FqMatrix& generator() const { return gen_; }
    std::span<const std::size_t> pivots() const { return pivots_; }
    std::vector<FqVector> generators() const;

    /// Canonical coset representative: v with every pivot coordinate cleared.
    /// It is the lexicographically least element of v + C.
    FqVector reduce(const FqVector& v) const;
    bool contains(const FqVector& v) const;

    bool operator==(const LinearCode& other) const { return gen_ == other.gen_; }

private:
    LinearCode(FqMatrix gen, std::vector<std::size_t> pivots) : gen_(std::move(gen)), pivots_(std::move(pivots)) {}

    FqMatrix gen_;
    std::vector<std::size_t> pivots_;
};

LinearCode dual(const LinearCode& c);
bool is_subcode(const LinearCode& u, const LinearCode& v);

/// offset + C with the offset stored as the canonical coset representative.
class AffineCode {
public:
    AffineCode(const FqVector& offset, LinearCode linear);
    explicit AffineCode(LinearCode linear);

    const FqVector& offset() const { return offset_; }
    const LinearCode& linear() const { return linear_; }
    bool is_linear() const;

    FieldOrder field() const { return linear_.field(); }
    std::size_t length() const { return linear_.length(); }
    std::size_t dimension() const { return linear_.dimension(); }
    bool contains(const FqVector& v) const;

    bool operator==(const AffineCode&) const = default;

private:
    FqVector offset_;
    LinearCode linear_;
};

struct WeightDistribution {
    FieldOrder q;
    std::size_t n;
    std::vector<BigInt> counts;  // counts[i] = number of words of weight i

    BigInt total() const;
    bool operator==(const WeightDistribution&) const = default;
};

/// Binomial row (q-1)^i C(n,i): the weight distribution of GF(q)^n.
WeightDistribution full_space_distribution(FieldOrder q, std::size_t n);

/// Throws GuardExceeded when q^k exceeds 2^limits.max_enum_bits.
void check_enumeration_guard(const AffineCode& c, const Limits& limits);

void for_each_codeword(const AffineCode& c, const std::function<void(const FqVector&)>& visit,
                       const Limits& limits = {});
std::vector<FqVector> enumerate(const AffineCode& c, const Limits& limits = {});

WeightDistribution weight_distribution(const AffineCode& c, const Limits& limits = {});
WeightDistribution weight_distribution(const LinearCode& c, const Limits& limits = {});
WeightDistribution coset_weight_distribution(const LinearCode& c, const FqVector& x, const Limits& limits = {});

/// Weights i with A_i > 0, ascending (0 is included for linear codes).
std::vector<std::size_t> nonzero_weights(const AffineCode& c, const Limits& limits = {});

/// One representative per coset of c: all vectors supported on non-pivot
/// coordinates. Throws GuardExceeded past 2^limits.max_coset_bits.
std::vector<FqVector> coset_representatives(const LinearCode& c, const Limits& limits = {});

struct AlphaResult {
    Rational value;   // max_{i,x} |A_i(C + x)| / |C|
    std::size_t weight;
    FqVector coset;   // canonical representative of a maximizing coset
};

AlphaResult alpha(const LinearCode& c, const Limits& limits = {});

struct SubspaceBoundReport {
    Rational alpha_u;
    std::optional<Rational> bound;  // alpha(u)/(1-alpha(u)); empty when alpha(u) = 1
    Rational max_ratio;             // max over i, w of |A_i(v + w)| / |v|
    bool degenerate;
    bool pass;                      // vacuously true when degenerate
};

/// Finite check that a subspace u with alpha(u) < 1 caps every coset weight
/// fraction of any v containing it by alpha(u)/(1-alpha(u)).
/// Throws std::invalid_argument("not a subspace") unless u is contained in v.
SubspaceBoundReport check_subspace_alpha_bound(const LinearCode& u, const LinearCode& v, const Limits& limits = {});

/// Every subspace of GF(q)^n, grouped by dimension, each in canonical form.
std::vector<LinearCode> all_subspaces(FieldOrder q, std::size_t n, const Limits& limits = {});

}  // namespace specktral
