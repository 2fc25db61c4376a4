#include "specktral/krawtchouk.hpp"

#include <stdexcept>
#include <string>

namespace specktral {

namespace {

constexpr std::size_t kPascalRows = 256;

const std::vector<std::vector<BigInt>>& pascal() {
    static const std::vector<std::vector<BigInt>> table = [] {
        std::vector<std::vector<BigInt>> t(kPascalRows);
        for (std::size_t n = 0; n < kPascalRows; ++n) {
            t[n].resize(n + 1);
            t[n][0] = t[n][n] = 1;
            for (std::size_t k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

void check_range(std::size_t k, std::size_t m, std::size_t n, std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (k > n || m > n) {
        throw std::out_of_range("krawtchouk index out of range: k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                " n=" + std::to_string(n));
    }
}

}  // namespace

const BigInt& binomial(std::size_t n, std::size_t k) {
    static const BigInt zero = 0;
    if (k > n) return zero;
    if (n >= kPascalRows) throw std::out_of_range("binomial: n beyond cached range");
    return pascal()[n][k];
}

BigInt krawtchouk(std::size_t k, std::size_t m, std::size_t n, std::uint64_t q) {
    check_range(k, m, n, q);
    BigInt sum = 0;
    // Terms with s > m or k - s > n - m vanish through the binomials.
    for (std::size_t s = 0; s <= k; ++s) {
        BigInt term = ipow(q - 1, k - s) * binomial(n - m, k - s) * binomial(m, s);
        if (s % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<BigInt> krawtchouk_row_from_gf(std::size_t m, std::size_t n, std::uint64_t q) {
    check_range(0, m, n, q);
    std::vector<BigInt> acc{1};
    const std::vector<BigInt> minus{1, -1};
    const std::vector<BigInt> plus{1, BigInt(q - 1)};
    for (std::size_t i = 0; i < m; ++i) acc = poly_mul(acc, minus);
    for (std::size_t i = m; i < n; ++i) acc = poly_mul(acc, plus);
    return acc;
}

Rational row_sum_closed_form(std::size_t k, std::size_t n, std::uint64_t q) {
    check_range(k, 0, n, q);
    const BigInt sign = (k + 1) % 2 ? BigInt(-1) : BigInt(1);
    const BigInt numer = binomial(n + 1, k + 1) * (ipow(q - 1, k + 1) - sign);
    if (numer % q != 0) throw std::logic_error("row sum closed form is not integral");
    return Rational(numer, BigInt(q));
}

SymmetryReport check_symmetry(std::size_t k, std::size_t m, std::size_t n, std::uint64_t q) {
    SymmetryReport r;
    r.lhs = krawtchouk(k, m, n, q) * ipow(q - 1, m) * binomial(n, m);
    r.rhs = krawtchouk(m, k, n, q) * ipow(q - 1, k) * binomial(n, k);
    r.pass = r.lhs == r.rhs;
    return r;
}

}  // namespace specktral
