#include "doctest.h"
#include "oracles.hpp"
#include "specktral/codes.hpp"
#include "specktral/reference.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace specktral;

namespace {

std::vector<FqVector> random_generators(std::mt19937_64& rng, std::uint32_t q, std::size_t n, std::size_t count) {
    std::vector<FqVector> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(oracle::to_vec(q, oracle::random_word(rng, q, n)));
    return out;
}

std::set<oracle::Word> words_of(const AffineCode& c) {
    std::set<oracle::Word> out;
    for (const auto& v : enumerate(c)) out.insert(oracle::from_vec(v));
    return out;
}

std::vector<std::uint64_t> as_u64(const WeightDistribution& w) {
    std::vector<std::uint64_t> out;
    for (const auto& c : w.counts) out.push_back(static_cast<std::uint64_t>(c));
    return out;
}

}  // namespace

TEST_CASE("codes from generators") {
    const FieldOrder q2(2);
    SUBCASE("dependent generators collapse") {
        const std::vector<FqVector> g{FqVector(q2, {1, 1, 0}), FqVector(q2, {0, 1, 1}), FqVector(q2, {1, 0, 1})};
        const auto c = LinearCode::from_generators(q2, 3, g);
        CHECK(c.dimension() == 2);
    }
    SUBCASE("zero and full") {
        CHECK(LinearCode::zero(q2, 4).dimension() == 0);
        CHECK(LinearCode::full(q2, 4).dimension() == 4);
        CHECK(LinearCode::from_generators(q2, 3, {}) == LinearCode::zero(q2, 3));
    }
    SUBCASE("length mismatch") {
        const std::vector<FqVector> g{FqVector(q2, {1, 1})};
        CHECK_THROWS_AS(LinearCode::from_generators(q2, 3, g), std::invalid_argument);
    }
    SUBCASE("canonical form does not depend on the generator order") {
        const std::vector<FqVector> a{FqVector(q2, {1, 1, 0, 0}), FqVector(q2, {0, 0, 1, 1})};
        const std::vector<FqVector> b{FqVector(q2, {1, 1, 1, 1}), FqVector(q2, {1, 1, 0, 0})};
        CHECK(LinearCode::from_generators(q2, 4, a) == LinearCode::from_generators(q2, 4, b));
    }
}

TEST_CASE("span matches closure oracle") {
    std::mt19937_64 rng(3);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + rng() % (q == 5 ? 4 : 6);
            const auto g = random_generators(rng, q, n, rng() % (n + 1));
            const auto c = LinearCode::from_generators(FieldOrder(q), n, g);
            std::vector<oracle::Word> raw;
            for (const auto& v : g) raw.push_back(oracle::from_vec(v));
            const auto expected = oracle::span(q, n, raw);
            CHECK(words_of(AffineCode(c)) == expected);
            for (const auto& w : oracle::all_words(q, n)) CHECK(c.contains(oracle::to_vec(q, w)) == (expected.count(w) == 1));
        }
    }
}

TEST_CASE("dual matches brute force") {
    std::mt19937_64 rng(5);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 1 + rng() % (q == 5 ? 4 : 6);
            const auto c = LinearCode::from_generators(FieldOrder(q), n, random_generators(rng, q, n, rng() % (n + 1)));
            const auto d = dual(c);
            CHECK(d.dimension() == n - c.dimension());
            CHECK(words_of(AffineCode(d)) == oracle::dual(q, n, words_of(AffineCode(c))));
            CHECK(dual(d) == c);
        }
    }
}

TEST_CASE("dual of trivial codes") {
    const FieldOrder q3(3);
    CHECK(dual(LinearCode::zero(q3, 3)) == LinearCode::full(q3, 3));
    CHECK(dual(LinearCode::full(q3, 3)) == LinearCode::zero(q3, 3));
}

TEST_CASE("affine code canonical offset") {
    const FieldOrder q2(2);
    const std::vector<FqVector> g{FqVector(q2, {1, 1, 0})};
    const auto c = LinearCode::from_generators(q2, 3, g);
    const AffineCode a(FqVector(q2, {1, 0, 1}), c), b(FqVector(q2, {0, 1, 1}), c);
    CHECK(a == b);
    CHECK(a.offset() == FqVector(q2, {0, 1, 1}));
    CHECK_FALSE(a.is_linear());
    CHECK(AffineCode(FqVector(q2, {1, 1, 0}), c).is_linear());
    CHECK(a.contains(FqVector(q2, {1, 0, 1})));
    CHECK_FALSE(a.contains(FqVector(q2, {1, 1, 0})));
}

TEST_CASE("reduce gives the least coset element") {
    std::mt19937_64 rng(17);
    for (std::uint32_t q : {2u, 3u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 2 + rng() % 4;
            const auto c = LinearCode::from_generators(FieldOrder(q), n, random_generators(rng, q, n, rng() % n));
            const auto x = oracle::to_vec(q, oracle::random_word(rng, q, n));
            const auto coset = enumerate(AffineCode(x, c));
            CHECK(c.reduce(x) == *std::min_element(coset.begin(), coset.end()));
        }
    }
}

TEST_CASE("weight distribution examples") {
    const FieldOrder q2(2), q3(3);
    SUBCASE("repetition") {
        const std::vector<FqVector> g{FqVector(q2, {1, 1})};
        CHECK(as_u64(weight_distribution(LinearCode::from_generators(q2, 2, g))) == std::vector<std::uint64_t>{1, 0, 1});
    }
    SUBCASE("full space is the binomial row") {
        CHECK(as_u64(weight_distribution(LinearCode::full(q2, 3))) == std::vector<std::uint64_t>{1, 3, 3, 1});
        CHECK(weight_distribution(LinearCode::full(q3, 4)) == full_space_distribution(q3, 4));
    }
    SUBCASE("zero code") {
        CHECK(as_u64(weight_distribution(LinearCode::zero(q2, 3))) == std::vector<std::uint64_t>{1, 0, 0, 0});
    }
    SUBCASE("coset of the repetition code") {
        const std::vector<FqVector> g{FqVector(q2, {1, 1})};
        const auto c = LinearCode::from_generators(q2, 2, g);
        CHECK(as_u64(coset_weight_distribution(c, FqVector(q2, {1, 0}))) == std::vector<std::uint64_t>{0, 2, 0});
    }
}

TEST_CASE("weight distribution matches oracles") {
    std::mt19937_64 rng(19);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 1 + rng() % (q == 2 ? 10 : 5);
            const auto c = LinearCode::from_generators(FieldOrder(q), n, random_generators(rng, q, n, rng() % (n + 1)));
            const AffineCode a(oracle::to_vec(q, oracle::random_word(rng, q, n)), c);
            const auto w = weight_distribution(a);
            CHECK(w == reference::weight_distribution(a));
            CHECK(as_u64(w) == oracle::distribution(words_of(a), n));
            CHECK(w.total() == ipow(q, c.dimension()));
        }
    }
}

TEST_CASE("nonzero weights") {
    const FieldOrder q2(2);
    const std::vector<FqVector> g{FqVector(q2, {1, 1, 1, 1})};
    const auto c = LinearCode::from_generators(q2, 4, g);
    CHECK(nonzero_weights(AffineCode(c)) == std::vector<std::size_t>{0, 4});
    CHECK(nonzero_weights(AffineCode(FqVector(q2, {1, 0, 0, 0}), c)) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("enumeration guard") {
    Limits tight;
    tight.max_enum_bits = 3;
    const auto full = LinearCode::full(FieldOrder(2), 4);
    CHECK_THROWS_AS(weight_distribution(full, tight), GuardExceeded);
    CHECK_THROWS_AS(enumerate(AffineCode(full), tight), GuardExceeded);
    CHECK_NOTHROW(weight_distribution(LinearCode::full(FieldOrder(2), 3), tight));
}

TEST_CASE("coset representatives") {
    const FieldOrder q3(3);
    const std::vector<FqVector> g{FqVector(q3, {1, 2, 0})};
    const auto c = LinearCode::from_generators(q3, 3, g);
    const auto reps = coset_representatives(c);
    CHECK(reps.size() == 9);
    std::set<FqVector> seen;
    for (const auto& r : reps) CHECK(seen.insert(c.reduce(r)).second);
    Limits tight;
    tight.max_coset_bits = 2;
    CHECK_THROWS_AS(coset_representatives(c, tight), GuardExceeded);
}

TEST_CASE("alpha frozen values") {
    const FieldOrder q2(2);
    SUBCASE("span of M(4,0) is 3/4") {
        const std::vector<FqVector> g{FqVector(q2, {1, 0, 1, 0}), FqVector(q2, {0, 1, 0, 1}), FqVector(q2, {0, 0, 1, 1})};
        const auto a = alpha(LinearCode::from_generators(q2, 4, g));
        CHECK(a.value == Rational(3, 4));
    }
    SUBCASE("repetition code of length 4") {
        const std::vector<FqVector> g{FqVector(q2, {1, 1, 1, 1})};
        CHECK(alpha(LinearCode::from_generators(q2, 4, g)).value == 1);
    }
    SUBCASE("full space of length 2") {
        const auto a = alpha(LinearCode::full(q2, 2));
        CHECK(a.value == Rational(1, 2));
        CHECK(a.weight == 1);
    }
    SUBCASE("zero code") { CHECK(alpha(LinearCode::zero(q2, 3)).value == 1); }
}

TEST_CASE("alpha matches brute force") {
    std::mt19937_64 rng(23);
    for (std::uint32_t q : {2u, 3u}) {
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = 1 + rng() % (q == 2 ? 6 : 4);
            const auto c = LinearCode::from_generators(FieldOrder(q), n, random_generators(rng, q, n, rng() % (n + 1)));
            const auto [num, den] = oracle::alpha(q, n, words_of(AffineCode(c)));
            const auto a = alpha(c);
            CHECK(a.value == Rational(num, den));
            CHECK(Rational(coset_weight_distribution(c, a.coset).counts[a.weight]) == a.value * Rational(ipow(q, c.dimension())));
        }
    }
}

TEST_CASE("subspace bound") {
    const FieldOrder q2(2);
    // Every coset of {0000, 1000} mixes two adjacent weights, so alpha(u) = 1/2.
    const std::vector<FqVector> gu{FqVector(q2, {1, 0, 0, 0})};
    const auto u = LinearCode::from_generators(q2, 4, gu);
    SUBCASE("u inside v") {
        const auto v = LinearCode::full(q2, 4);
        const auto r = check_subspace_alpha_bound(u, v);
        CHECK(r.alpha_u == Rational(1, 2));
        REQUIRE(r.bound);
        CHECK(*r.bound == 1);
        CHECK(r.max_ratio == alpha(v).value);
        CHECK_FALSE(r.degenerate);
        CHECK(r.pass);
    }
    SUBCASE("alpha(u) = 1 is degenerate") {
        const std::vector<FqVector> g{FqVector(q2, {1, 0, 1, 0}), FqVector(q2, {0, 1, 0, 1})};
        const auto diag = LinearCode::from_generators(q2, 4, g);
        const auto r = check_subspace_alpha_bound(diag, LinearCode::full(q2, 4));
        CHECK(r.alpha_u == 1);
        CHECK(r.degenerate);
        CHECK_FALSE(r.bound);
        CHECK(r.pass);
    }
    SUBCASE("not nested") {
        const std::vector<FqVector> gv{FqVector(q2, {0, 0, 1, 1})};
        CHECK_THROWS_WITH_AS(check_subspace_alpha_bound(u, LinearCode::from_generators(q2, 4, gv)),
                             doctest::Contains("not a subspace"), std::invalid_argument);
    }
}

TEST_CASE("all subspaces are counted by Gaussian binomials") {
    CHECK(all_subspaces(FieldOrder(2), 4).size() == oracle::subspace_count(2, 4));
    CHECK(all_subspaces(FieldOrder(2), 4).size() == 67);
    CHECK(all_subspaces(FieldOrder(3), 3).size() == 28);
    CHECK(all_subspaces(FieldOrder(5), 2).size() == oracle::subspace_count(5, 2));
}

TEST_CASE("all subspaces of Q_2^4 match subset closure") {
    // A subset of GF(2)^4 containing 0 and closed under addition is a subspace;
    // scan every 16-bit mask.
    std::set<std::set<oracle::Word>> expected;
    const auto words = oracle::all_words(2, 4);
    for (std::uint32_t mask = 1; mask < (1u << 16); mask += 2) {
        std::set<oracle::Word> s;
        for (std::size_t i = 0; i < 16; ++i)
            if (mask >> i & 1) s.insert(words[i]);
        if (!s.count(oracle::Word(4, 0))) continue;
        bool closed = true;
        for (const auto& a : s) {
            for (const auto& b : s) closed &= s.count(oracle::add(a, b, 2)) == 1;
            if (!closed) break;
        }
        if (closed) expected.insert(s);
    }
    std::set<std::set<oracle::Word>> got;
    for (const auto& c : all_subspaces(FieldOrder(2), 4)) CHECK(got.insert(words_of(AffineCode(c))).second);
    CHECK(got == expected);
}

TEST_CASE("is_subcode") {
    const FieldOrder q2(2);
    const std::vector<FqVector> gu{FqVector(q2, {1, 1, 0})};
    const auto u = LinearCode::from_generators(q2, 3, gu);
    CHECK(is_subcode(u, LinearCode::full(q2, 3)));
    CHECK(is_subcode(LinearCode::zero(q2, 3), u));
    CHECK_FALSE(is_subcode(LinearCode::full(q2, 3), u));
}
