#include "specktral/codes.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels.hpp"
#include "specktral/krawtchouk.hpp"

namespace specktral {

Limits Limits::from_env() {
    Limits limits;
    if (const char* env = std::getenv("SPECKTRAL_MAX_ENUM"); env && *env) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (!end || *end != '\0' || v == 0 || v > 62) {
            throw std::invalid_argument("SPECKTRAL_MAX_ENUM must be an integer in [1, 62]");
        }
        limits.max_enum_bits = static_cast<unsigned>(v);
    }
    return limits;
}

namespace {

bool fits(std::uint32_t q, std::size_t exponent, unsigned bits) { return ipow(q, exponent) <= ipow(2, bits); }

}  // namespace

LinearCode LinearCode::from_generators(FieldOrder q, std::size_t n, std::span<const FqVector> generators) {
    return from_matrix(FqMatrix(q, n, generators));
}

LinearCode LinearCode::from_matrix(const FqMatrix& m) {
    auto r = rref(m);
    FqMatrix gen(m.field(), r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        std::copy(r.reduced.row(i).begin(), r.reduced.row(i).end(), gen.row(i).begin());
    }
    return LinearCode(std::move(gen), std::move(r.pivots));
}

LinearCode LinearCode::zero(FieldOrder q, std::size_t n) { return LinearCode(FqMatrix(q, 0, n), {}); }

LinearCode LinearCode::full(FieldOrder q, std::size_t n) {
    FqMatrix id(q, n, n);
    std::vector<std::size_t> pivots(n);
    for (std::size_t i = 0; i < n; ++i) {
        id.set(i, i, 1);
        pivots[i] = i;
    }
    return LinearCode(std::move(id), std::move(pivots));
}

std::vector<FqVector> LinearCode::generators() const {
    std::vector<FqVector> out;
    out.reserve(dimension());
    for (std::size_t r = 0; r < dimension(); ++r) out.push_back(gen_.row_vector(r));
    return out;
}

FqVector LinearCode::reduce(const FqVector& v) const {
    if (v.field() != field()) throw std::invalid_argument("field mismatch");
    if (v.size() != length()) throw std::invalid_argument("length mismatch");
    const PrimeField f(field());
    std::vector<Elem> w(v.coords().begin(), v.coords().end());
    for (std::size_t r = 0; r < dimension(); ++r) {
        const Elem c = w[pivots_[r]];
        if (c == 0) continue;
        auto row = gen_.row(r);
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, row[j]));
    }
    return FqVector(field(), std::move(w));
}

bool LinearCode::contains(const FqVector& v) const { return weight(reduce(v)) == 0; }

LinearCode dual(const LinearCode& c) {
    const std::size_t n = c.length();
    const PrimeField f(c.field());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : c.pivots()) is_pivot[p] = true;

    std::vector<FqVector> rows;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> h(n, 0);
        h[free] = 1;
        for (std::size_t r = 0; r < c.dimension(); ++r) h[c.pivots()[r]] = f.neg(c.generator().at(r, free));
        rows.emplace_back(c.field(), std::move(h));
    }
    return LinearCode::from_generators(c.field(), n, rows);
}

bool is_subcode(const LinearCode& u, const LinearCode& v) {
    if (u.field() != v.field() || u.length() != v.length()) return false;
    for (std::size_t r = 0; r < u.dimension(); ++r) {
        if (!v.contains(u.generator().row_vector(r))) return false;
    }
    return true;
}

AffineCode::AffineCode(const FqVector& offset, LinearCode linear)
    : offset_(linear.reduce(offset)), linear_(std::move(linear)) {}

AffineCode::AffineCode(LinearCode linear)
    : offset_(FqVector::zero(linear.field(), linear.length())), linear_(std::move(linear)) {}

bool AffineCode::is_linear() const { return weight(offset_) == 0; }

bool AffineCode::contains(const FqVector& v) const {
    return linear_.reduce(v) == offset_;
}

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

WeightDistribution full_space_distribution(FieldOrder q, std::size_t n) {
    WeightDistribution w{q, n, std::vector<BigInt>(n + 1)};
    for (std::size_t i = 0; i <= n; ++i) w.counts[i] = ipow(q.value() - 1, i) * binomial(n, i);
    return w;
}

void check_enumeration_guard(const AffineCode& c, const Limits& limits) {
    if (!fits(c.field().value(), c.dimension(), limits.max_enum_bits)) {
        throw GuardExceeded("enumeration too large: q^k = " + std::to_string(c.field().value()) + "^" +
                            std::to_string(c.dimension()) + " exceeds 2^" + std::to_string(limits.max_enum_bits));
    }
}

void for_each_codeword(const AffineCode& c, const std::function<void(const FqVector&)>& visit, const Limits& limits) {
    check_enumeration_guard(c, limits);
    const std::size_t k = c.dimension();
    const std::uint32_t q = c.field().value();
    const auto& gen = c.linear().generator();
    std::vector<Elem> word(c.offset().coords().begin(), c.offset().coords().end());
    std::vector<Elem> digits(k, 0);
    while (true) {
        visit(FqVector(c.field(), word));
        std::size_t r = 0;
        for (; r < k; ++r) {
            auto row = gen.row(r);
            for (std::size_t j = 0; j < word.size(); ++j) word[j] = static_cast<Elem>((word[j] + row[j]) % q);
            if (++digits[r] < q) break;
            digits[r] = 0;
        }
        if (r == k) return;
    }
}

std::vector<FqVector> enumerate(const AffineCode& c, const Limits& limits) {
    std::vector<FqVector> out;
    for_each_codeword(c, [&](const FqVector& v) { out.push_back(v); }, limits);
    return out;
}

WeightDistribution weight_distribution(const AffineCode& c, const Limits& limits) {
    check_enumeration_guard(c, limits);
    const auto hist = detail::weight_histogram(c.linear().generator(), c.offset().coords(), true);
    WeightDistribution w{c.field(), c.length(), std::vector<BigInt>(hist.size())};
    for (std::size_t i = 0; i < hist.size(); ++i) w.counts[i] = hist[i];
    return w;
}

WeightDistribution weight_distribution(const LinearCode& c, const Limits& limits) {
    return weight_distribution(AffineCode(c), limits);
}

WeightDistribution coset_weight_distribution(const LinearCode& c, const FqVector& x, const Limits& limits) {
    return weight_distribution(AffineCode(x, c), limits);
}

std::vector<std::size_t> nonzero_weights(const AffineCode& c, const Limits& limits) {
    const auto w = weight_distribution(c, limits);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.counts.size(); ++i) {
        if (w.counts[i] > 0) out.push_back(i);
    }
    return out;
}

std::vector<FqVector> coset_representatives(const LinearCode& c, const Limits& limits) {
    const std::size_t n = c.length();
    const std::uint32_t q = c.field().value();
    if (!fits(q, n - c.dimension(), limits.max_coset_bits)) {
        throw GuardExceeded("coset space too large: q^(n-k) exceeds 2^" + std::to_string(limits.max_coset_bits));
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : c.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j) {
        if (!is_pivot[j]) free.push_back(j);
    }

    std::vector<FqVector> out;
    std::vector<Elem> word(n, 0);
    while (true) {
        out.emplace_back(c.field(), word);
        std::size_t r = 0;
        for (; r < free.size(); ++r) {
            if (++word[free[r]] < q) break;
            word[free[r]] = 0;
        }
        if (r == free.size()) break;
    }
    return out;
}

AlphaResult alpha(const LinearCode& c, const Limits& limits) {
    check_enumeration_guard(AffineCode(c), limits);
    const auto reps = coset_representatives(c, limits);
    const auto count = static_cast<std::int64_t>(reps.size());
    std::vector<std::uint64_t> best_count(reps.size(), 0);
    std::vector<std::size_t> best_weight(reps.size(), 0);

#pragma omp parallel for schedule(dynamic, 16) if (count > 1)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto hist = detail::weight_histogram(c.generator(), reps[i].coords(), false);
        const auto it = std::max_element(hist.begin(), hist.end());
        best_count[i] = *it;
        best_weight[i] = static_cast<std::size_t>(it - hist.begin());
    }

    std::size_t arg = 0;
    for (std::size_t i = 1; i < reps.size(); ++i) {
        if (best_count[i] > best_count[arg]) arg = i;
    }
    return {Rational(BigInt(best_count[arg]), ipow(c.field().value(), c.dimension())), best_weight[arg], reps[arg]};
}

SubspaceBoundReport check_subspace_alpha_bound(const LinearCode& u, const LinearCode& v, const Limits& limits) {
    if (!is_subcode(u, v)) throw std::invalid_argument("not a subspace: u is not contained in v");
    SubspaceBoundReport r;
    r.alpha_u = alpha(u, limits).value;
    r.max_ratio = alpha(v, limits).value;
    r.degenerate = r.alpha_u == 1;
    if (r.degenerate) {
        r.pass = true;
    } else {
        r.bound = r.alpha_u / (1 - r.alpha_u);
        r.pass = r.max_ratio <= *r.bound;
    }
    return r;
}

std::vector<LinearCode> all_subspaces(FieldOrder q, std::size_t n, const Limits& limits) {
    const std::uint32_t qv = q.value();
    const BigInt cap = ipow(2, limits.max_enum_bits);
    std::vector<LinearCode> out;
    for (std::size_t k = 0; k <= n; ++k) {
        for (const auto& pivots : detail::combinations(n, k)) {
            // Free entries: right of the row's pivot, outside every pivot column.
            std::vector<std::pair<std::size_t, std::size_t>> cells;
            for (std::size_t r = 0; r < k; ++r) {
                for (std::size_t col = pivots[r] + 1; col < n; ++col) {
                    if (!std::binary_search(pivots.begin(), pivots.end(), col)) cells.emplace_back(r, col);
                }
            }
            FqMatrix m(q, k, n);
            for (std::size_t r = 0; r < k; ++r) m.set(r, pivots[r], 1);
            std::vector<Elem> digits(cells.size(), 0);
            while (true) {
                if (out.size() >= cap) throw GuardExceeded("too many subspaces to enumerate");
                for (std::size_t i = 0; i < cells.size(); ++i) m.set(cells[i].first, cells[i].second, digits[i]);
                out.push_back(LinearCode::from_matrix(m));
                std::size_t i = 0;
                for (; i < cells.size(); ++i) {
                    if (++digits[i] < qv) break;
                    digits[i] = 0;
                }
                if (i == cells.size()) break;
            }
        }
    }
    return out;
}

}  // namespace specktral
