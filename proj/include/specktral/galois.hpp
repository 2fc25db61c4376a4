#pragma once

// Prime-field arithmetic and dense linear algebra over GF(q).
//
// Coordinates are 0-based throughout (the usual mathematical convention
// numbers them 1..n).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace specktral {

using Elem = std::uint32_t;

/// Order of a prime field. Construction rejects composite values.
class FieldOrder {
public:
    explicit FieldOrder(std::uint32_t q);

    std::uint32_t value() const { return q_; }
    bool operator==(const FieldOrder&) const = default;

private:
    std::uint32_t q_;
};

bool is_prime(std::uint64_t v);

/// Field operations on representatives in [0, q).
class PrimeField {
public:
    explicit PrimeField(FieldOrder q);

    FieldOrder order() const { return FieldOrder(q_); }
    Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % q_); }
    Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + q_ - b) % q_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} * b) % q_); }
    /// Multiplicative inverse; throws std::domain_error for 0.
    Elem inv(Elem a) const;

private:
    std::uint32_t q_;
    std::vector<Elem> inverse_;
};

class FqVector {
public:
    FqVector(FieldOrder q, std::vector<Elem> coords);
    FqVector(FieldOrder q, std::initializer_list<Elem> coords)
        : FqVector(q, std::vector<Elem>(coords)) {}

    static FqVector zero(FieldOrder q, std::size_t n);

    FieldOrder field() const { return q_; }
    std::size_t size() const { return coords_.size(); }
    Elem operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Elem> coords() const { return coords_; }

    bool operator==(const FqVector&) const = default;
    /// Lexicographic, coordinate 0 most significant.
    std::strong_ordering operator<=>(const FqVector& other) const;

private:
    FieldOrder q_;
    std::vector<Elem> coords_;
};

std::size_t weight(const FqVector& v);
std::vector<std::size_t> support(const FqVector& v);
/// Sum of u_i v_i mod q. Throws std::invalid_argument on length/field mismatch.
Elem inner_product(const FqVector& u, const FqVector& v);
FqVector add(const FqVector& u, const FqVector& v);
FqVector scale(Elem a, const FqVector& v);

/// Row-major dense matrix over GF(q).
class FqMatrix {
public:
    FqMatrix(FieldOrder q, std::size_t rows, std::size_t cols);
    FqMatrix(FieldOrder q, std::size_t cols, std::span<const FqVector> rows);

    FieldOrder field() const { return q_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem v);
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    FqVector row_vector(std::size_t r) const;

    bool operator==(const FqMatrix&) const = default;

private:
    FieldOrder q_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct RrefResult {
    FqMatrix reduced;  // same shape as the input, zero rows last
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const FqMatrix& m);

}  // namespace specktral
