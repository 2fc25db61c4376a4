#include "specktral/identities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specktral/krawtchouk.hpp"

namespace specktral {

namespace {

std::vector<Rational> as_rational(const WeightDistribution& w) {
    return {w.counts.begin(), w.counts.end()};
}

// 1 - (-1)^(m+1) / (q-1)^(m+1)
Rational parity_factor(std::size_t m, std::uint64_t q) {
    const Rational sign = (m + 1) % 2 ? Rational(-1) : Rational(1);
    return 1 - sign / Rational(ipow(q - 1, m + 1));
}

Rational shell_size(std::size_t k, std::size_t n, std::uint64_t q) { return Rational(ipow(q - 1, k) * binomial(n, k)); }

Rational harmonic_side(std::span<const Rational> a, std::size_t n, std::uint64_t q) {
    Rational sum = 0;
    for (std::size_t m = 0; m <= n; ++m) sum += a[m] / Rational(m + 1) * parity_factor(m, q);
    return sum;
}

Rational normalized_side(std::span<const Rational> a, std::size_t n, std::uint64_t q) {
    Rational sum = 0;
    for (std::size_t k = 0; k <= n; ++k) sum += a[k] / shell_size(k, n, q);
    return sum;
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

Rational power(const Rational& z, std::size_t e) {
    Rational out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= z;
    return out;
}

}  // namespace

WeightDistribution macwilliams_transform(const WeightDistribution& w, std::size_t k_dim) {
    const std::size_t n = w.n;
    const std::uint64_t q = w.q.value();
    if (w.counts.size() != n + 1 || k_dim > n || w.counts[0] != 1 || w.total() != ipow(q, k_dim)) {
        throw std::invalid_argument("input is not a valid linear-code distribution");
    }
    const BigInt divisor = ipow(q, k_dim);
    WeightDistribution out{w.q, n, std::vector<BigInt>(n + 1)};
    for (std::size_t k = 0; k <= n; ++k) {
        BigInt sum = 0;
        for (std::size_t m = 0; m <= n; ++m) sum += krawtchouk(k, m, n, q) * w.counts[m];
        if (sum < 0 || sum % divisor != 0) throw std::invalid_argument("input is not a valid linear-code distribution");
        out.counts[k] = sum / divisor;
    }
    if (out.counts[0] != 1 || out.total() != ipow(q, n - k_dim)) throw std::invalid_argument("input is not a valid linear-code distribution");
    return out;
}

std::vector<Rational> scaled_hat_krawtchouk(std::span<const Rational> a, std::size_t n, std::uint64_t q) {
    std::vector<Rational> out(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t m = 0; m <= n; ++m) out[k] += Rational(krawtchouk(k, m, n, q)) * a[m];
    }
    return out;
}

std::vector<std::complex<double>> scaled_hat_krawtchouk(std::span<const std::complex<double>> a, std::size_t n,
                                                        std::uint64_t q) {
    std::vector<std::complex<double>> out(n + 1, 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t m = 0; m <= n; ++m) out[k] += to_double(krawtchouk(k, m, n, q)) * a[m];
    }
    return out;
}

std::vector<Rational> scaled_hat_generating(std::span<const Rational> a, std::size_t n, std::uint64_t q) {
    std::vector<Rational> out(n + 1, 0);
    for (std::size_t m = 0; m <= n; ++m) {
        std::vector<BigInt> poly{1};
        for (std::size_t i = 0; i < m; ++i) poly = poly_mul(poly, {1, -1});
        for (std::size_t i = m; i < n; ++i) poly = poly_mul(poly, {1, BigInt(q - 1)});
        for (std::size_t k = 0; k <= n; ++k) out[k] += a[m] * Rational(poly[k]);
    }
    return out;
}

IdentityReport verify_macwilliams(const LinearCode& c, const Limits& limits) {
    const auto dual_code = dual(c);
    const auto a = weight_distribution(c, limits);
    const auto b = weight_distribution(dual_code, limits);
    IdentityReport r{"macwilliams", {}, {}, false};
    r.lhs = as_rational(b);
    try {
        r.rhs = as_rational(macwilliams_transform(a, c.dimension()));
    } catch (const std::invalid_argument&) {
        // Report the raw Krawtchouk sums so the mismatch is visible.
        r.rhs = scaled_hat_krawtchouk(as_rational(a), c.length(), c.field().value());
        for (auto& v : r.rhs) v /= Rational(ipow(c.field().value(), c.dimension()));
    }
    r.pass = r.lhs == r.rhs;
    return r;
}

IdentityReport verify_transform_shells(const LinearCode& c, double tol, const Limits& limits) {
    const std::size_t n = c.length();
    const std::uint64_t q = c.field().value();
    const auto a = as_rational(weight_distribution(c, limits));
    const auto b = weight_distribution(dual(c), limits);

    IdentityReport r{"transform_shells", std::vector<Rational>(n + 1), scaled_hat_krawtchouk(a, n, q), false};
    const Rational lift(ipow(q, c.dimension()));
    for (std::size_t k = 0; k <= n; ++k) r.lhs[k] = lift * Rational(b.counts[k]);
    r.pass = r.lhs == r.rhs;

    const auto hat = shell_sums(transform(DenseFunction::indicator(AffineCode(c), limits)));
    const double scale = std::pow(static_cast<double>(q), 0.5 * static_cast<double>(n));
    for (std::size_t k = 0; k <= n; ++k) {
        const double expected = r.lhs[k].convert_to<double>();
        if (std::abs(hat[k] * scale - expected) > tol * std::max(1.0, std::abs(expected))) r.pass = false;
    }
    return r;
}

SpectralSums spectral_sums(const DenseFunction& f, double tol) {
    const std::size_t n = f.length();
    const std::uint64_t q = f.field().value();
    SpectralSums s{f.field(), n, shell_sums(f), shell_sums(transform(f)), 0.0, true};
    const auto predicted = scaled_hat_krawtchouk(s.a, n, q);
    const double norm = std::pow(static_cast<double>(q), -0.5 * static_cast<double>(n));
    for (std::size_t k = 0; k <= n; ++k) s.shell_deviation = std::max(s.shell_deviation, std::abs(s.a_hat[k] - predicted[k] * norm));
    s.shells_hold = s.shell_deviation <= tol;
    return s;
}

NumericIdentityReport verify_harmonic(const DenseFunction& f, double tol) {
    const std::size_t n = f.length();
    const std::uint64_t q = f.field().value();
    const auto sums = spectral_sums(f, tol);
    std::complex<double> lhs = 0.0, rhs = 0.0;
    for (std::size_t k = 0; k <= n; ++k) lhs += sums.a_hat[k] / to_double(ipow(q - 1, k) * binomial(n, k));
    for (std::size_t m = 0; m <= n; ++m) {
        rhs += sums.a[m] / static_cast<double>(m + 1) * parity_factor(m, q).convert_to<double>();
    }
    rhs *= static_cast<double>((n + 1) * (q - 1)) / std::pow(static_cast<double>(q), 1.0 + 0.5 * static_cast<double>(n));
    const double dev = std::abs(lhs - rhs);
    return {"harmonic", {lhs}, {rhs}, dev, dev < tol};
}

IdentityReport verify_harmonic_exact(std::span<const Rational> a, std::span<const Rational> scaled_hat, std::size_t n,
                                   std::uint64_t q) {
    if (a.size() != n + 1 || scaled_hat.size() != n + 1) throw std::invalid_argument("shell sums must have n+1 entries");
    const Rational lhs = normalized_side(scaled_hat, n, q);
    const Rational rhs = Rational((n + 1) * (q - 1), q) * harmonic_side(a, n, q);
    return {"harmonic", {lhs}, {rhs}, lhs == rhs};
}

IdentityReport verify_harmonic_indicator(const LinearCode& c, const Rational& scale, const Limits& limits) {
    const std::size_t n = c.length();
    const std::uint64_t q = c.field().value();
    auto a = as_rational(weight_distribution(c, limits));
    auto hat = as_rational(weight_distribution(dual(c), limits));
    const Rational lift = scale * Rational(ipow(q, c.dimension()));
    for (auto& v : a) v *= scale;
    for (auto& v : hat) v *= lift;
    return verify_harmonic_exact(a, hat, n, q);
}

IdentityReport verify_harmonic_dual(const LinearCode& c, const Limits& limits) {
    const std::size_t n = c.length();
    const std::uint64_t q = c.field().value();
    const auto a = as_rational(weight_distribution(c, limits));
    const auto b = as_rational(weight_distribution(dual(c), limits));
    const Rational lhs = normalized_side(a, n, q);
    const Rational rhs = Rational(BigInt((n + 1) * (q - 1)), ipow(q, 1 + n - c.dimension())) * harmonic_side(b, n, q);
    return {"harmonic_dual", {lhs}, {rhs}, lhs == rhs};
}

IdentityReport verify_harmonic_binary(const LinearCode& c, const Limits& limits) {
    if (c.field().value() != 2) throw std::invalid_argument("the binary harmonic identity needs q = 2");
    const std::size_t n = c.length();
    const auto a = as_rational(weight_distribution(c, limits));
    const auto b = as_rational(weight_distribution(dual(c), limits));
    Rational lhs = 0, even = 0;
    for (std::size_t k = 0; k <= n; ++k) lhs += a[k] / Rational(binomial(n, k));
    for (std::size_t k = 0; k <= n; k += 2) even += b[k] / Rational(k + 1);
    const Rational rhs = Rational(BigInt(n + 1), ipow(2, n - c.dimension())) * even;
    return {"harmonic_binary", {lhs}, {rhs}, lhs == rhs};
}

namespace {

template <class T>
std::size_t distinct_count(std::span<const T> samples) {
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (std::find(samples.begin(), samples.begin() + i, samples[i]) == samples.begin() + i) ++distinct;
    }
    return distinct;
}

}  // namespace

NumericIdentityReport verify_generating_function(const DenseFunction& f, std::span<const std::complex<double>> z_samples, double tol) {
    const std::size_t n = f.length();
    const auto q = static_cast<double>(f.field().value());
    if (distinct_count(z_samples) < n + 1) throw std::invalid_argument("need at least n+1 distinct sample points");
    const auto sums = spectral_sums(f, tol);
    const double scale = std::pow(q, 0.5 * static_cast<double>(n));

    NumericIdentityReport r{"generating_function", {}, {}, 0.0, true};
    for (const auto z : z_samples) {
        std::complex<double> lhs = 0.0, rhs = 0.0, zk = 1.0;
        for (std::size_t k = 0; k <= n; ++k, zk *= z) lhs += scale * sums.a_hat[k] * zk;
        for (std::size_t m = 0; m <= n; ++m) {
            rhs += sums.a[m] * std::pow(1.0 - z, static_cast<double>(m)) *
                   std::pow(1.0 + (q - 1.0) * z, static_cast<double>(n - m));
        }
        r.lhs.push_back(lhs);
        r.rhs.push_back(rhs);
        // Relative to the size of the sides: both scale like q^n.
        const double dev = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
        r.max_deviation = std::max(r.max_deviation, dev);
    }
    r.pass = r.max_deviation < tol;
    return r;
}

IdentityReport verify_generating_function_exact(const LinearCode& c, std::span<const Rational> z_samples, const Limits& limits) {
    const std::size_t n = c.length();
    const std::uint64_t q = c.field().value();
    if (distinct_count(z_samples) < n + 1) throw std::invalid_argument("need at least n+1 distinct sample points");
    const auto a = as_rational(weight_distribution(c, limits));
    const auto b = as_rational(weight_distribution(dual(c), limits));
    const Rational lift(ipow(q, c.dimension()));

    IdentityReport r{"generating_function", {}, {}, true};
    for (const auto& z : z_samples) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t k = 0; k <= n; ++k) lhs += lift * b[k] * power(z, k);
        for (std::size_t m = 0; m <= n; ++m) rhs += a[m] * power(1 - z, m) * power(1 + Rational(q - 1) * z, n - m);
        r.pass = r.pass && lhs == rhs;
        r.lhs.push_back(lhs);
        r.rhs.push_back(rhs);
    }
    return r;
}

}  // namespace specktral
