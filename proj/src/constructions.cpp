#include "specktral/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "specktral/krawtchouk.hpp"

namespace specktral {

namespace {

const FieldOrder kBinary(2);

void require_even(std::size_t n) {
    if (n < 2 || n % 2) throw std::invalid_argument("n must be even and at least 2");
}

FqVector unit_pair(std::size_t n, std::size_t a, std::size_t b) {
    std::vector<Elem> v(n, 0);
    v[a] = 1;
    v[b] = 1;
    return FqVector(kBinary, std::move(v));
}

BoundReport make_report(std::string name, BigInt size, BigInt bound) {
    const bool pass = size <= bound;
    const bool tight = size == bound;
    return {std::move(name), std::move(size), std::move(bound), pass, tight};
}

void require_shell(const AffineCode& c, std::size_t k, const Limits& limits) {
    if (c.field() != kBinary) throw std::invalid_argument("binary codes only (q = 2)");
    if (k > c.length()) throw std::out_of_range("shell index exceeds n");
    if (nonzero_weights(c, limits) != std::vector<std::size_t>{k}) throw std::invalid_argument("not constant-weight");
}

std::size_t abs_diff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

AffineCode build_M(std::size_t n, std::size_t i) {
    if (i > n || (n - i) % 2 || n - i < 2) throw std::invalid_argument("M(n, i) needs n - i even and at least 2");
    const std::size_t half = (n - i) / 2;
    std::vector<FqVector> gens;
    for (std::size_t j = 0; j < half; ++j) gens.push_back(unit_pair(n, j, half + j));
    std::vector<Elem> offset(n, 0);
    std::fill(offset.begin() + half, offset.begin() + 2 * half, 1);
    return AffineCode(FqVector(kBinary, std::move(offset)), LinearCode::from_generators(kBinary, n, gens));
}

LinearCode build_C(std::size_t n) {
    require_even(n);
    const std::size_t half = n / 2;
    std::vector<FqVector> gens;
    for (std::size_t j = 0; j < half; ++j) gens.push_back(unit_pair(n, j, half + j));
    // v = (0, 1) in M(n, 0): M(n, 0) = v + {(x, x)}.
    std::vector<Elem> v(n, 0);
    std::fill(v.begin() + half, v.end(), 1);
    gens.emplace_back(kBinary, std::move(v));
    return LinearCode::from_generators(kBinary, n, gens);
}

DenseFunction build_g(std::size_t n) {
    require_even(n);
    const std::size_t half = n / 2;
    auto values = std::vector<std::complex<double>>(std::size_t{1} << n);
    const std::size_t mask = (std::size_t{1} << half) - 1;
    for (std::size_t x = 0; x <= mask; ++x) {
        // Index of (x, x + 1): low half holds x, high half its complement.
        const std::size_t index = x | ((~x & mask) << half);
        values[index] = (std::popcount(x) % 2) ? -1.0 : 1.0;
    }
    return DenseFunction(kBinary, n, std::move(values));
}

BigInt delsarte_ball(std::size_t n, std::uint64_t q, std::size_t k) {
    if (k > n) throw std::out_of_range("ball radius exceeds n");
    BigInt sum = 0;
    for (std::size_t j = 0; j <= k; ++j) sum += ipow(q - 1, j) * binomial(n, j);
    return sum;
}

BoundReport check_few_weights(const LinearCode& c, const std::vector<std::size_t>& weights, const Limits& limits) {
    auto present = nonzero_weights(AffineCode(c), limits);
    present.erase(std::remove(present.begin(), present.end(), std::size_t{0}), present.end());
    for (std::size_t w : present) {
        if (std::find(weights.begin(), weights.end(), w) == weights.end()) {
            throw std::invalid_argument("weight-profile mismatch");
        }
    }
    return make_report("few_weights", ipow(c.field().value(), c.dimension()),
                       delsarte_ball(c.length(), c.field().value(), present.size()));
}

BoundReport check_few_weights(const LinearCode& c, const Limits& limits) {
    auto present = nonzero_weights(AffineCode(c), limits);
    present.erase(std::remove(present.begin(), present.end(), std::size_t{0}), present.end());
    return check_few_weights(c, present, limits);
}

BigInt L_binary(std::size_t n, std::size_t k) {
    if (k > n) throw std::out_of_range("shell index exceeds n");
    return ipow(2, (n + abs_diff(n, 2 * k)) / 2);
}

BoundReport check_constant_weight(const AffineCode& c, std::size_t k, const Limits& limits) {
    require_shell(c, k, limits);
    const std::size_t n = c.length();
    return make_report("constant_weight", ipow(2, c.dimension()), ipow(2, (n - abs_diff(n, 2 * k)) / 2));
}

BoundReport check_support_bound(const AffineCode& c, std::size_t k, const Limits& limits) {
    require_shell(c, k, limits);
    return make_report("support_bound", ipow(2, c.dimension()), ipow(2, c.length()) / L_binary(c.length(), k));
}

}  // namespace specktral
