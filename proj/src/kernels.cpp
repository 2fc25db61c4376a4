#include "kernels.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace specktral::detail {

namespace {

constexpr std::size_t kInnerBlock = 4096;
constexpr std::int64_t kParallelMinWork = std::int64_t{1} << 14;

std::vector<std::uint64_t> binary_histogram(const FqMatrix& gen, std::span<const Elem> offset, bool parallel) {
    const std::size_t n = gen.cols();
    const std::size_t k = gen.rows();
    std::vector<std::uint64_t> rows(k, 0);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j < n; ++j) rows[r] |= std::uint64_t{gen.at(r, j)} << j;
    }
    std::uint64_t base_word = 0;
    for (std::size_t j = 0; j < n; ++j) base_word |= std::uint64_t{offset[j]} << j;

    const std::size_t low = std::min<std::size_t>(k, 12);
    const std::size_t high = k - low;
    const std::int64_t outer = std::int64_t{1} << high;
    const std::uint64_t inner = std::uint64_t{1} << low;

    std::vector<std::uint64_t> hist(n + 1, 0);
#pragma omp parallel if (parallel && (outer << low) >= kParallelMinWork)
    {
        std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for schedule(static)
        for (std::int64_t h = 0; h < outer; ++h) {
            std::uint64_t w = base_word;
            for (std::size_t j = 0; j < high; ++j) {
                if ((h >> j) & 1) w ^= rows[low + j];
            }
            ++local[std::popcount(w)];
            // Gray-code walk over the low generators.
            for (std::uint64_t g = 1; g < inner; ++g) {
                w ^= rows[std::countr_zero(g)];
                ++local[std::popcount(w)];
            }
        }
#pragma omp critical
        for (std::size_t i = 0; i <= n; ++i) hist[i] += local[i];
    }
    return hist;
}

std::vector<std::uint64_t> generic_histogram(const FqMatrix& gen, std::span<const Elem> offset, bool parallel) {
    const std::size_t n = gen.cols();
    const std::size_t k = gen.rows();
    const std::uint32_t q = gen.field().value();

    std::vector<std::vector<std::pair<std::size_t, Elem>>> sparse(k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j < n; ++j) {
            if (gen.at(r, j) != 0) sparse[r].emplace_back(j, gen.at(r, j));
        }
    }

    std::size_t low = 0;
    std::uint64_t inner = 1;
    while (low < k && inner < kInnerBlock) {
        inner *= q;
        ++low;
    }
    const std::size_t high = k - low;
    std::int64_t outer = 1;
    for (std::size_t j = 0; j < high; ++j) outer *= q;

    std::vector<std::uint64_t> hist(n + 1, 0);
#pragma omp parallel if (parallel && outer * static_cast<std::int64_t>(inner) >= kParallelMinWork)
    {
        std::vector<std::uint64_t> local(n + 1, 0);
        std::vector<Elem> word(n);
        std::vector<Elem> digits(low);
#pragma omp for schedule(static)
        for (std::int64_t h = 0; h < outer; ++h) {
            std::copy(offset.begin(), offset.end(), word.begin());
            std::int64_t rest = h;
            for (std::size_t j = 0; j < high; ++j) {
                const auto d = static_cast<Elem>(rest % q);
                rest /= q;
                if (d == 0) continue;
                for (auto [pos, val] : sparse[low + j]) word[pos] = static_cast<Elem>((word[pos] + std::uint64_t{d} * val) % q);
            }
            std::size_t wt = 0;
            for (Elem x : word) wt += (x != 0);
            ++local[wt];

            std::fill(digits.begin(), digits.end(), 0);
            for (std::uint64_t step = 1; step < inner; ++step) {
                // Mixed-radix increment; a digit wrapping q-1 -> 0 adds its row a q-th time, i.e. zero.
                for (std::size_t r = 0; r < low; ++r) {
                    for (auto [pos, val] : sparse[r]) {
                        const Elem before = word[pos];
                        const Elem after = static_cast<Elem>((before + val) % q);
                        wt += (after != 0);
                        wt -= (before != 0);
                        word[pos] = after;
                    }
                    if (++digits[r] < q) break;
                    digits[r] = 0;
                }
                ++local[wt];
            }
        }
#pragma omp critical
        for (std::size_t i = 0; i <= n; ++i) hist[i] += local[i];
    }
    return hist;
}

}  // namespace

std::vector<std::uint64_t> weight_histogram(const FqMatrix& gen, std::span<const Elem> offset, bool parallel) {
    if (gen.field().value() == 2 && gen.cols() <= 64) return binary_histogram(gen, offset, parallel);
    return generic_histogram(gen, offset, parallel);
}

void walsh_hadamard_inplace(std::span<std::complex<double>> values) {
    const auto size = static_cast<std::int64_t>(values.size());
    const std::int64_t half = size / 2;
    auto* v = values.data();
    for (std::int64_t h = 1; h < size; h <<= 1) {
#pragma omp parallel for schedule(static) if (size >= kParallelMinWork)
        for (std::int64_t j = 0; j < half; ++j) {
            const std::int64_t lo = j & (h - 1);
            const std::int64_t i = ((j - lo) << 1) + lo;
            const std::complex<double> a = v[i];
            const std::complex<double> b = v[i + h];
            v[i] = a + b;
            v[i + h] = a - b;
        }
    }
}

void character_transform_inplace(std::span<std::complex<double>> values, std::uint32_t q, std::size_t n) {
    if (q == 2) {
        walsh_hadamard_inplace(values);
        return;
    }
    std::vector<std::complex<double>> omega(q);
    for (std::uint32_t j = 0; j < q; ++j) {
        omega[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / q);
    }
    const auto size = static_cast<std::int64_t>(values.size());
    const std::int64_t lines = size / q;
    auto* v = values.data();
    std::int64_t stride = 1;
    for (std::size_t pass = 0; pass < n; ++pass, stride *= q) {
#pragma omp parallel if (size >= kParallelMinWork)
        {
            std::vector<std::complex<double>> in(q), out(q);
#pragma omp for schedule(static)
            for (std::int64_t j = 0; j < lines; ++j) {
                const std::int64_t lo = j % stride;
                const std::int64_t base = (j - lo) * q + lo;
                for (std::uint32_t x = 0; x < q; ++x) in[x] = v[base + x * stride];
                for (std::uint32_t z = 0; z < q; ++z) {
                    std::complex<double> acc = 0.0;
                    for (std::uint32_t x = 0; x < q; ++x) acc += in[x] * omega[(std::uint64_t{x} * z) % q];
                    out[z] = acc;
                }
                for (std::uint32_t z = 0; z < q; ++z) v[base + z * stride] = out[z];
            }
        }
    }
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t t) {
    std::vector<std::vector<std::size_t>> out;
    if (t > n) return out;
    std::vector<std::size_t> cur(t);
    for (std::size_t i = 0; i < t; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = t;
        while (i > 0 && cur[i - 1] == n - t + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < t; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace specktral::detail
