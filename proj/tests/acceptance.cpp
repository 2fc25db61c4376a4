// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "specktral/codes.hpp"
#include "specktral/constructions.hpp"
#include "specktral/covering.hpp"
#include "specktral/fourier.hpp"
#include "specktral/identities.hpp"
#include "specktral/krawtchouk.hpp"
#include "specktral/reference.hpp"

using namespace specktral;

namespace {

constexpr double kTol = 1e-9;
constexpr double kTimeBudget = 5.0;  // seconds, criteria 1 and 2

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures.size() < 6) failures.push_back(what);
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

FqVector random_vector(std::mt19937_64& rng, std::uint32_t q, std::size_t n) {
    std::vector<Elem> v(n);
    for (auto& x : v) x = static_cast<Elem>(rng() % q);
    return FqVector(FieldOrder(q), std::move(v));
}

LinearCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t gens) {
    std::vector<FqVector> g;
    for (std::size_t i = 0; i < gens; ++i) g.push_back(random_vector(rng, 2, n));
    return LinearCode::from_generators(FieldOrder(2), n, g);
}

DenseFunction random_function(std::mt19937_64& rng, std::uint32_t q, std::size_t n) {
    std::normal_distribution<double> g;
    auto f = DenseFunction::zero(FieldOrder(q), n);
    std::vector<std::complex<double>> v(f.size());
    for (auto& x : v) x = {g(rng), g(rng)};
    return f.with_values(std::move(v));
}

std::string join(const std::vector<BigInt>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + to_string(x);
    return "[" + s + "]";
}

Outcome identity_suite() {
    Outcome o;
    const auto start = Clock::now();
    std::size_t codes = 0, checks = 0;
    for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 4}, {3, 3}}) {
        for (const auto& c : all_subspaces(FieldOrder(q), n)) {
            ++codes;
            std::vector<IdentityReport> reports{verify_macwilliams(c), verify_transform_shells(c, kTol), verify_harmonic_dual(c)};
            if (q == 2) reports.push_back(verify_harmonic_binary(c));
            for (const auto& r : reports) {
                ++checks;
                o.require(r.pass, r.identity + " q=" + std::to_string(q) + " k=" + std::to_string(c.dimension()));
            }
        }
    }
    const double t = seconds_since(start);
    o.require(codes == 67 + 28, "subspace count " + std::to_string(codes));
    o.require(t < kTimeBudget, "time budget");
    o.detail << codes << " subspaces, " << checks << " exact checks, " << t << " s";
    return o;
}

Outcome krawtchouk_suite() {
    Outcome o;
    const auto start = Clock::now();
    std::size_t checks = 0;
    for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
        for (std::size_t n = 0; n <= 14; ++n) {
            for (std::size_t m = 0; m <= n; ++m) {
                const auto row = krawtchouk_row_from_gf(m, n, q);
                for (std::size_t k = 0; k <= n; ++k) {
                    ++checks;
                    o.require(row[k] == krawtchouk(k, m, n, q), "coefficients");
                    o.require(check_symmetry(k, m, n, q).pass, "symmetry");
                }
            }
            for (std::size_t k = 0; k <= n; ++k) {
                BigInt sum = 0;
                for (std::size_t m = 0; m <= n; ++m) sum += krawtchouk(k, m, n, q);
                o.require(row_sum_closed_form(k, n, q) == Rational(sum), "row sum");
            }
        }
    }
    const double t = seconds_since(start);
    o.require(t < kTimeBudget, "time budget");
    o.detail << checks << " (k,m,n,q) cells, " << t << " s";
    return o;
}

Outcome construction_claims() {
    Outcome o;
    for (std::size_t n = 2; n <= 10; n += 2) {
        const auto c = build_C(n);
        const auto w = weight_distribution(c);
        const std::size_t half = n / 2;
        const std::string tag = "C_" + std::to_string(n);
        o.require(c.dimension() == 1 + half, tag + " dim " + std::to_string(c.dimension()));
        o.require(w.counts[half] == ipow(2, half), tag + " A_" + std::to_string(half) + "=" + to_string(w.counts[half]) +
                                                       " want " + to_string(ipow(2, half)) + " " + join(w.counts));
        o.require(w.counts[2] == half, tag + " A_2=" + to_string(w.counts[2]) + " want " + std::to_string(half));
    }
    std::size_t m_codes = 0;
    for (std::size_t n = 2; n <= 12; ++n) {
        for (std::size_t i = 0; i + 2 <= n; i += 1) {
            if ((n - i) % 2) continue;
            ++m_codes;
            const std::size_t k = (n - i) / 2;
            const auto m = build_M(n, i);
            const std::string tag = "M_" + std::to_string(n) + "," + std::to_string(i);
            o.require(nonzero_weights(m) == std::vector<std::size_t>{k}, tag + " weights");
            const auto r = check_constant_weight(m, k);
            o.require(r.code_size == ipow(2, k) && r.pass && r.tight, tag + " bound");
        }
    }
    o.detail << "C_n for n=2..10, " << m_codes << " M_{n,i}";
    return o;
}

Outcome eigenfunction_claims() {
    Outcome o;
    for (std::size_t n = 2; n <= 8; n += 2) {
        const auto g = build_g(n);
        const auto hat = transform(g);
        const double dev = max_abs_diff(hat, g);
        const std::string tag = "n=" + std::to_string(n);
        std::ostringstream d;
        d << tag << " |ghat-g|=" << dev;
        o.require(dev < kTol, d.str());
        const auto u = uncertainty_report(g, kTol);
        o.require(u.support_f == (std::size_t{1} << (n / 2)), tag + " support");
        o.require(u.product == u.bound, tag + " support product " + to_string(u.product));
    }
    o.detail << "n=2,4,6,8";
    return o;
}

Outcome transform_equivalence() {
    Outcome o;
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = trial % 12 + 1;
        const auto f = random_function(rng, 2, n);
        worst = std::max(worst, max_abs_diff(fast_transform_q2(f), reference::transform_naive(f)));
    }
    o.require(worst < kTol, "fast vs naive");
    double parseval = 0.0;
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto f = random_function(rng, q, n);
            const auto hat = transform(f);
            double a = 0, b = 0;
            for (auto v : f.values()) a += std::norm(v);
            for (auto v : hat.values()) b += std::norm(v);
            parseval = std::max(parseval, std::abs(a - b) / a);
        }
    }
    o.require(parseval < kTol, "Parseval");
    o.detail << "max fast/naive deviation " << worst << ", max relative Parseval error " << parseval;
    return o;
}

Outcome face_sections() {
    Outcome o;
    std::mt19937_64 rng(8);
    std::size_t sets = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = AffineCode(random_vector(rng, 2, 8), random_code(rng, 8, rng() % 9));
        for (int s = 0; s < 4; ++s) {
            std::vector<std::size_t> free;
            for (std::size_t j = 0; j < 8; ++j)
                if (rng() % 2) free.push_back(j);
            ++sets;
            const auto r = check_face_sections(c, free);
            o.require(r.pass, "code " + std::to_string(trial));
        }
    }
    o.detail << "200 codes, " << sets << " free sets, every translate";
    return o;
}

Outcome face_counts() {
    Outcome o;
    const FieldOrder q2(2);
    std::vector<std::string> parts;
    for (std::size_t n : {4u, 6u, 8u}) {
        const auto m = enumerate(build_M(n, 0));
        const auto fast = count_intersecting_faces(q2, n, m, n / 2);
        const auto brute = reference::count_intersecting_faces_brute(q2, n, m, n / 2);
        const auto floor = ipow(2, n);
        o.require(fast == brute, "solver and enumeration disagree at n=" + std::to_string(n));
        o.require(fast > floor, "n=" + std::to_string(n) + " count " + to_string(fast));
        parts.push_back("n=" + std::to_string(n) + ": " + to_string(brute) + " > " + to_string(floor));
    }
    // Report only: best 4-subset of Q_2^4 against 2-faces.
    const auto all = enumerate(AffineCode(LinearCode::full(q2, 4)));
    BigInt best = 0;
    std::vector<FqVector> pick(4, all[0]);
    for (std::size_t a = 0; a < 16; ++a)
        for (std::size_t b = a + 1; b < 16; ++b)
            for (std::size_t c = b + 1; c < 16; ++c)
                for (std::size_t d = c + 1; d < 16; ++d) {
                    pick = {all[a], all[b], all[c], all[d]};
                    best = std::max(best, count_intersecting_faces(q2, 4, pick, 2));
                }
    for (const auto& p : parts) o.detail << p << "; ";
    o.detail << "best 4-set in Q_2^4 meets " << to_string(best) << " 2-faces vs 20 for M_{4,0} (reported only)";
    return o;
}

Outcome subspace_bound() {
    Outcome o;
    std::mt19937_64 rng(99);
    int pairs = 0, draws = 0;
    Rational slack = 1;
    while (pairs < 100) {
        ++draws;
        const auto u = random_code(rng, 8, 1 + rng() % 4);
        if (alpha(u).value == 1) continue;
        auto gens = u.generators();
        for (std::size_t extra = rng() % 5; extra > 0; --extra) gens.push_back(random_vector(rng, 2, 8));
        const auto v = LinearCode::from_generators(FieldOrder(2), 8, gens);
        const auto r = check_subspace_alpha_bound(u, v);
        ++pairs;
        o.require(!r.degenerate && r.pass, "pair " + std::to_string(pairs));
        if (r.bound) slack = std::min(slack, Rational(*r.bound - r.max_ratio));
    }
    o.detail << pairs << " pairs (" << draws << " draws), least slack " << to_string(slack);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"identity suite on every subspace of Q_2^4 and Q_3^3", identity_suite},
        {"Krawtchouk coefficients, row sums and symmetry", krawtchouk_suite},
        {"C_n and M_{n,i} construction claims", construction_claims},
        {"g_n is a Fourier fixed point with extremal support", eigenfunction_claims},
        {"fast transform equals the naive sum; Parseval", transform_equivalence},
        {"affine codes meet face translates in one power of 2", face_sections},
        {"M_{n,0} meets more than 2^n half-dimensional faces", face_counts},
        {"coset fractions of V bounded through a subspace U", subspace_bound},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto o = criteria[i].second();
        std::printf("[%s] %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.str().c_str());
        for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
