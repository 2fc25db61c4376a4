#include "doctest.h"
#include "oracles.hpp"
#include "specktral/krawtchouk.hpp"

#include <stdexcept>

using namespace specktral;

namespace {

// P_k(m) as a character sum over the weight-k shell, evaluated exactly: x is
// 1^m 0^(n-m), and the sum is collected by the value of <x, y>.
BigInt character_sum(std::size_t k, std::size_t m, std::size_t n, std::uint32_t q) {
    oracle::Word x(n, 0);
    for (std::size_t i = 0; i < m; ++i) x[i] = 1;
    std::vector<std::int64_t> coeffs(q, 0);
    for (const auto& y : oracle::all_words(q, n))
        if (oracle::wt(y) == k) ++coeffs[oracle::dot(x, y, q)];
    std::int64_t value = 0;
    REQUIRE(oracle::cyclotomic_integer(coeffs, value));
    return value;
}

// Coefficients of (1 - z)^m (1 + (q-1) z)^(n-m) with plain integers.
std::vector<long long> gf_row(std::size_t m, std::size_t n, long long q) {
    std::vector<long long> p{1};
    auto times = [&](long long a) {  // multiply by (1 + a z)
        p.push_back(0);
        for (std::size_t i = p.size() - 1; i > 0; --i) p[i] += a * p[i - 1];
    };
    for (std::size_t i = 0; i < m; ++i) times(-1);
    for (std::size_t i = m; i < n; ++i) times(q - 1);
    return p;
}

}  // namespace

TEST_CASE("binomials") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("small values") {
    CHECK(krawtchouk(0, 3, 5, 2) == 1);
    CHECK(krawtchouk(1, 0, 4, 3) == 8);
    CHECK(krawtchouk(1, 1, 2, 2) == 0);
    CHECK(krawtchouk(2, 2, 2, 2) == 1);
    CHECK(krawtchouk(1, 1, 1, 5) == -1);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(krawtchouk(3, 0, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(krawtchouk(0, 3, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(krawtchouk(0, 0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(krawtchouk_row_from_gf(3, 2, 2), std::out_of_range);
}

TEST_CASE("character sums agree with the polynomial") {
    for (auto [q, nmax] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 9}, {3, 6}, {5, 4}, {7, 3}}) {
        for (std::size_t n = 0; n <= nmax; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                for (std::size_t m = 0; m <= n; ++m) CHECK(krawtchouk(k, m, n, q) == character_sum(k, m, n, q));
    }
}

TEST_CASE("generating function rows, including non-prime q") {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 6u}) {
        for (std::size_t n = 0; n <= 10; ++n) {
            for (std::size_t m = 0; m <= n; ++m) {
                const auto row = krawtchouk_row_from_gf(m, n, q);
                const auto expect = gf_row(m, n, static_cast<long long>(q));
                REQUIRE(row.size() == n + 1);
                for (std::size_t k = 0; k <= n; ++k) {
                    CHECK(row[k] == expect[k]);
                    CHECK(row[k] == krawtchouk(k, m, n, q));
                }
            }
        }
    }
}

TEST_CASE("row sums have the closed form") {
    for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
        for (std::size_t n = 0; n <= 12; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                BigInt sum = 0;
                for (std::size_t m = 0; m <= n; ++m) sum += krawtchouk(k, m, n, q);
                CHECK(row_sum_closed_form(k, n, q) == Rational(sum));
            }
        }
    }
}

TEST_CASE("weighted symmetry") {
    for (std::uint64_t q : {2u, 3u, 4u, 5u})
        for (std::size_t n = 0; n <= 10; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                for (std::size_t m = 0; m <= n; ++m) {
                    const auto r = check_symmetry(k, m, n, q);
                    CHECK(r.pass);
                    CHECK(r.lhs == r.rhs);
                }
}

TEST_CASE("orthogonality") {
    // sum_m (q-1)^m C(n,m) P_k(m) P_l(m) = q^n (q-1)^k C(n,k) [k = l]
    for (std::uint64_t q : {2u, 3u, 4u}) {
        const std::size_t n = 7;
        for (std::size_t k = 0; k <= n; ++k) {
            for (std::size_t l = 0; l <= n; ++l) {
                BigInt s = 0;
                for (std::size_t m = 0; m <= n; ++m)
                    s += ipow(q - 1, m) * binomial(n, m) * krawtchouk(k, m, n, q) * krawtchouk(l, m, n, q);
                CHECK(s == (k == l ? ipow(q, n) * ipow(q - 1, k) * binomial(n, k) : BigInt(0)));
            }
        }
    }
}

TEST_CASE("polynomial product") {
    CHECK(poly_mul({1, 1}, {1, -1}) == std::vector<BigInt>{1, 0, -1});
    CHECK(poly_mul({}, {1, 2}).empty());
}
