#include "specktral/galois.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace specktral {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

FieldOrder::FieldOrder(std::uint32_t q) : q_(q) {
    if (!is_prime(q)) throw std::invalid_argument("non-prime order: " + std::to_string(q));
}

PrimeField::PrimeField(FieldOrder q) : q_(q.value()), inverse_(q.value(), 0) {
    // Fermat: a^(q-2) is the inverse in a prime field.
    for (Elem a = 1; a < q_; ++a) {
        std::uint64_t result = 1, base = a, e = q_ - 2;
        while (e) {
            if (e & 1) result = result * base % q_;
            base = base * base % q_;
            e >>= 1;
        }
        inverse_[a] = static_cast<Elem>(result);
    }
}

Elem PrimeField::inv(Elem a) const {
    if (a % q_ == 0) throw std::domain_error("zero has no inverse");
    return inverse_[a % q_];
}

FqVector::FqVector(FieldOrder q, std::vector<Elem> coords) : q_(q), coords_(std::move(coords)) {
    for (Elem c : coords_) {
        if (c >= q.value()) throw std::invalid_argument("coordinate out of range [0, q)");
    }
}

FqVector FqVector::zero(FieldOrder q, std::size_t n) { return FqVector(q, std::vector<Elem>(n, 0)); }

std::strong_ordering FqVector::operator<=>(const FqVector& other) const {
    if (auto c = q_.value() <=> other.q_.value(); c != 0) return c;
    return std::lexicographical_compare_three_way(coords_.begin(), coords_.end(), other.coords_.begin(),
                                                  other.coords_.end());
}

std::size_t weight(const FqVector& v) {
    return static_cast<std::size_t>(std::count_if(v.coords().begin(), v.coords().end(), [](Elem c) { return c != 0; }));
}

std::vector<std::size_t> support(const FqVector& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) out.push_back(i);
    }
    return out;
}

namespace {

void require_compatible(const FqVector& u, const FqVector& v) {
    if (u.field() != v.field()) throw std::invalid_argument("field mismatch");
    if (u.size() != v.size()) throw std::invalid_argument("length mismatch");
}

}  // namespace

Elem inner_product(const FqVector& u, const FqVector& v) {
    require_compatible(u, v);
    const std::uint64_t q = u.field().value();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc = (acc + std::uint64_t{u[i]} * v[i]) % q;
    return static_cast<Elem>(acc);
}

FqVector add(const FqVector& u, const FqVector& v) {
    require_compatible(u, v);
    const std::uint64_t q = u.field().value();
    std::vector<Elem> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = static_cast<Elem>((std::uint64_t{u[i]} + v[i]) % q);
    return FqVector(u.field(), std::move(out));
}

FqVector scale(Elem a, const FqVector& v) {
    const std::uint64_t q = v.field().value();
    std::vector<Elem> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<Elem>(std::uint64_t{a} % q * v[i] % q);
    return FqVector(v.field(), std::move(out));
}

FqMatrix::FqMatrix(FieldOrder q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FqMatrix::FqMatrix(FieldOrder q, std::size_t cols, std::span<const FqVector> rows)
    : FqMatrix(q, rows.size(), cols) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].field() != q) throw std::invalid_argument("field mismatch");
        if (rows[r].size() != cols) throw std::invalid_argument("length mismatch");
        std::copy(rows[r].coords().begin(), rows[r].coords().end(), row(r).begin());
    }
}

void FqMatrix::set(std::size_t r, std::size_t c, Elem v) {
    if (v >= q_.value()) throw std::invalid_argument("entry out of range [0, q)");
    data_[r * cols_ + c] = v;
}

FqVector FqMatrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return FqVector(q_, std::vector<Elem>(s.begin(), s.end()));
}

RrefResult rref(const FqMatrix& m) {
    const PrimeField f(m.field());
    FqMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t p = lead;
        while (p < a.rows() && a.at(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != lead) std::swap_ranges(a.row(p).begin(), a.row(p).end(), a.row(lead).begin());

        const Elem s = f.inv(a.at(lead, c));
        for (Elem& x : a.row(lead)) x = f.mul(x, s);

        for (std::size_t r = 0; r < a.rows(); ++r) {
            const Elem factor = a.at(r, c);
            if (r == lead || factor == 0) continue;
            auto dst = a.row(r);
            auto src = std::as_const(a).row(lead);
            for (std::size_t j = c; j < a.cols(); ++j) dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(a), pivots.size(), std::move(pivots)};
}

}  // namespace specktral
