#include "specktral/covering.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "kernels.hpp"
#include "specktral/krawtchouk.hpp"

namespace specktral {

Face::Face(FieldOrder q, std::size_t n, std::vector<std::size_t> free, std::vector<Elem> fixed)
    : q_(q), n_(n), free_(std::move(free)), fixed_(std::move(fixed)) {
    std::sort(free_.begin(), free_.end());
    if (std::adjacent_find(free_.begin(), free_.end()) != free_.end()) {
        throw std::invalid_argument("free positions must be distinct");
    }
    if (!free_.empty() && free_.back() >= n_) throw std::invalid_argument("free position out of range");
    for (std::size_t j = 0; j < n_; ++j) {
        if (!std::binary_search(free_.begin(), free_.end(), j)) fixed_pos_.push_back(j);
    }
    if (fixed_.size() != fixed_pos_.size()) throw std::invalid_argument("need one fixed value per non-free position");
    for (Elem v : fixed_) {
        if (v >= q_.value()) throw std::invalid_argument("fixed value out of range [0, q)");
    }
}

Face Face::through(const FqVector& x, std::vector<std::size_t> free) {
    std::sort(free.begin(), free.end());
    std::vector<Elem> fixed;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!std::binary_search(free.begin(), free.end(), j)) fixed.push_back(x[j]);
    }
    return Face(x.field(), x.size(), std::move(free), std::move(fixed));
}

bool Face::contains(const FqVector& v) const {
    if (v.field() != q_ || v.size() != n_) return false;
    for (std::size_t i = 0; i < fixed_pos_.size(); ++i) {
        if (v[fixed_pos_[i]] != fixed_[i]) return false;
    }
    return true;
}

std::vector<FqVector> face_members(const Face& face, const Limits& limits) {
    const std::uint32_t q = face.field().value();
    if (ipow(q, face.dimension()) > ipow(2, limits.max_face_bits)) {
        throw GuardExceeded("face too large: q^t exceeds 2^" + std::to_string(limits.max_face_bits));
    }
    std::vector<Elem> word(face.length(), 0);
    for (std::size_t i = 0; i < face.fixed_positions().size(); ++i) {
        word[face.fixed_positions()[i]] = face.fixed_values()[i];
    }
    const auto& free = face.free();
    std::vector<FqVector> out;
    while (true) {
        out.emplace_back(face.field(), word);
        std::size_t r = 0;
        for (; r < free.size(); ++r) {
            if (++word[free[r]] < q) break;
            word[free[r]] = 0;
        }
        if (r == free.size()) break;
    }
    return out;
}

BigInt face_intersection(const AffineCode& c, const Face& face) {
    if (c.field() != face.field() || c.length() != face.length()) {
        throw std::invalid_argument("code and face live in different spaces");
    }
    const PrimeField f(c.field());
    const std::size_t k = c.dimension();
    const auto& fixed = face.fixed_positions();
    const auto& gen = c.linear().generator();

    // Unknowns a_0..a_{k-1}: sum_r a_r g_r[p] = value_p - offset_p for each fixed p.
    FqMatrix system(c.field(), fixed.size(), k + 1);
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        const std::size_t p = fixed[i];
        for (std::size_t r = 0; r < k; ++r) system.set(i, r, gen.at(r, p));
        system.set(i, k, f.sub(face.fixed_values()[i], c.offset()[p]));
    }
    const auto reduced = rref(system);
    if (!reduced.pivots.empty() && reduced.pivots.back() == k) return 0;
    return ipow(c.field().value(), k - reduced.rank);
}

FaceSectionReport check_face_sections(const AffineCode& c, const std::vector<std::size_t>& free, const Limits& limits) {
    const std::size_t n = c.length();
    const std::uint32_t q = c.field().value();
    if (ipow(q, n - std::min(free.size(), n)) > ipow(2, limits.max_face_bits)) {
        throw GuardExceeded("too many translates: q^(n-t) exceeds 2^" + std::to_string(limits.max_face_bits));
    }
    FaceSectionReport report;
    std::vector<Elem> fixed(n >= free.size() ? n - free.size() : 0, 0);
    Face face(c.field(), n, free, fixed);
    report.free = face.free();
    while (true) {
        ++report.histogram[face_intersection(c, face)];
        std::size_t r = 0;
        for (; r < fixed.size(); ++r) {
            if (++fixed[r] < q) break;
            fixed[r] = 0;
        }
        if (r == fixed.size()) break;
        face = Face(c.field(), n, report.free, fixed);
    }

    report.pass = true;
    for (const auto& [count, times] : report.histogram) {
        if (count == 0) continue;
        std::size_t s = 0;
        BigInt power = 1;
        while (power < count) {
            power *= q;
            ++s;
        }
        if (power != count || (report.exponent && *report.exponent != s)) {
            report.pass = false;
        }
        if (!report.exponent) report.exponent = s;
    }
    return report;
}

BigInt total_faces(FieldOrder q, std::size_t n, std::size_t t) {
    if (t > n) throw std::out_of_range("face dimension exceeds n");
    return binomial(n, t) * ipow(q.value(), n - t);
}

void check_face_guard(FieldOrder q, std::size_t n, std::size_t t, const Limits& limits) {
    if (total_faces(q, n, t) > ipow(2, limits.max_face_bits)) {
        throw GuardExceeded("too many faces: C(n,t) q^(n-t) exceeds 2^" + std::to_string(limits.max_face_bits));
    }
}

BigInt count_intersecting_faces(FieldOrder q, std::size_t n, std::span<const FqVector> s, std::size_t t,
                                const Limits& limits) {
    check_face_guard(q, n, t, limits);
    for (const auto& v : s) {
        if (v.field() != q || v.size() != n) throw std::invalid_argument("point set does not live in GF(q)^n");
    }
    const auto free_sets = detail::combinations(n, t);
    const auto count = static_cast<std::int64_t>(free_sets.size());
    std::uint64_t total = 0;

    // Each free set contributes the number of distinct projections of S onto
    // the fixed coordinates: one per face of that orientation meeting S.
#pragma omp parallel if (count * static_cast<std::int64_t>(s.size()) >= 4096)
    {
        std::vector<std::uint64_t> keys(s.size());
#pragma omp for schedule(dynamic) reduction(+ : total)
        for (std::int64_t i = 0; i < count; ++i) {
            const auto& free = free_sets[i];
            for (std::size_t j = 0; j < s.size(); ++j) {
                std::uint64_t key = 0;
                std::size_t f = 0;
                for (std::size_t p = 0; p < n; ++p) {
                    if (f < free.size() && free[f] == p) {
                        ++f;
                        continue;
                    }
                    key = key * q.value() + s[j][p];
                }
                keys[j] = key;
            }
            std::sort(keys.begin(), keys.end());
            total += static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
        }
    }
    return BigInt(total);
}

Rational covering_score(FieldOrder q, std::size_t n, std::span<const FqVector> s, std::size_t t,
                        const Limits& limits) {
    return Rational(count_intersecting_faces(q, n, s, t, limits), total_faces(q, n, t));
}

}  // namespace specktral
