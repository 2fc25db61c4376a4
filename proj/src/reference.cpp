#include "specktral/reference.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kernels.hpp"

namespace specktral::reference {

WeightDistribution weight_distribution(const AffineCode& c, const Limits& limits) {
    check_enumeration_guard(c, limits);
    const std::uint32_t q = c.field().value();
    const std::size_t k = c.dimension();
    const std::size_t n = c.length();
    const auto& gen = c.linear().generator();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= q;

    WeightDistribution w{c.field(), n, std::vector<BigInt>(n + 1, 0)};
    std::vector<std::uint64_t> hist(n + 1, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint64_t> word(c.offset().coords().begin(), c.offset().coords().end());
        std::uint64_t rest = idx;
        for (std::size_t r = 0; r < k; ++r, rest /= q) {
            const std::uint64_t d = rest % q;
            for (std::size_t j = 0; j < n; ++j) word[j] += d * gen.at(r, j);
        }
        std::size_t wt = 0;
        for (auto x : word) wt += (x % q != 0);
        ++hist[wt];
    }
    for (std::size_t i = 0; i <= n; ++i) w.counts[i] = hist[i];
    return w;
}

DenseFunction transform_naive(const DenseFunction& f) {
    const std::uint32_t q = f.field().value();
    const std::size_t n = f.length();
    std::vector<std::complex<double>> omega(q);
    for (std::uint32_t j = 0; j < q; ++j) omega[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / q);
    const double norm = std::pow(static_cast<double>(q), -0.5 * static_cast<double>(n));

    std::vector<std::complex<double>> out(f.size());
    if (q == 2) {
        // <x, z> over GF(2) is the parity of the shared bits.
        for (std::size_t z = 0; z < f.size(); ++z) {
            std::complex<double> acc = 0.0;
            for (std::size_t x = 0; x < f.size(); ++x) acc += (std::popcount(x & z) & 1) ? -f[x] : f[x];
            out[z] = acc * norm;
        }
        return f.with_values(std::move(out));
    }

    std::vector<Elem> digits(f.size() * n);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto v = f.vector_at(i);
        std::copy(v.coords().begin(), v.coords().end(), digits.begin() + static_cast<std::ptrdiff_t>(i * n));
    }
    for (std::size_t z = 0; z < f.size(); ++z) {
        const Elem* dz = digits.data() + z * n;
        std::complex<double> acc = 0.0;
        for (std::size_t x = 0; x < f.size(); ++x) {
            const Elem* dx = digits.data() + x * n;
            std::uint64_t dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += std::uint64_t{dx[j]} * dz[j];
            acc += f[x] * omega[dot % q];
        }
        out[z] = acc * norm;
    }
    return f.with_values(std::move(out));
}

BigInt face_intersection_enum(const AffineCode& c, const Face& face, const Limits& limits) {
    BigInt count = 0;
    for (const auto& v : face_members(face, limits)) {
        if (c.contains(v)) ++count;
    }
    return count;
}

BigInt count_intersecting_faces_brute(FieldOrder q, std::size_t n, std::span<const FqVector> s, std::size_t t,
                                      const Limits& limits) {
    check_face_guard(q, n, t, limits);
    BigInt count = 0;
    for (const auto& free : detail::combinations(n, t)) {
        std::vector<Elem> fixed(n - t, 0);
        while (true) {
            const Face face(q, n, free, fixed);
            for (const auto& v : s) {
                if (face.contains(v)) {
                    ++count;
                    break;
                }
            }
            std::size_t r = 0;
            for (; r < fixed.size(); ++r) {
                if (++fixed[r] < q.value()) break;
                fixed[r] = 0;
            }
            if (r == fixed.size()) break;
        }
    }
    return count;
}

}  // namespace specktral::reference
