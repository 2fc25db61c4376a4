#include "specktral/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kernels.hpp"

namespace specktral {

namespace {

std::size_t dense_size(FieldOrder q, std::size_t n, const Limits& limits) {
    if (ipow(q.value(), n) > ipow(2, limits.max_dense_bits)) {
        throw GuardExceeded("dense function too large: q^n exceeds 2^" + std::to_string(limits.max_dense_bits));
    }
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= q.value();
    return size;
}

bool is_zero(const DenseFunction& f) {
    return std::all_of(f.values().begin(), f.values().end(), [](auto v) { return v == std::complex<double>(0.0); });
}

void require_binary(const DenseFunction& f) {
    if (f.field().value() != 2) throw std::invalid_argument("binary functions only (q = 2)");
}

}  // namespace

DenseFunction::DenseFunction(FieldOrder q, std::size_t n, std::vector<std::complex<double>> values, const Limits& limits)
    : q_(q), n_(n), values_(std::move(values)) {
    if (values_.size() != dense_size(q, n, limits)) throw std::invalid_argument("value count must equal q^n");
}

DenseFunction DenseFunction::zero(FieldOrder q, std::size_t n, const Limits& limits) {
    return DenseFunction(q, n, std::vector<std::complex<double>>(dense_size(q, n, limits)), limits);
}

DenseFunction DenseFunction::delta(const FqVector& at, const Limits& limits) {
    auto values = std::vector<std::complex<double>>(dense_size(at.field(), at.size(), limits));
    DenseFunction f(at.field(), at.size(), std::move(values), limits);
    f.values_[f.index_of(at)] = 1.0;
    return f;
}

DenseFunction DenseFunction::indicator(const AffineCode& c, const Limits& limits) {
    auto f = zero(c.field(), c.length(), limits);
    for_each_codeword(c, [&](const FqVector& v) { f.values_[f.index_of(v)] = 1.0; }, limits);
    return f;
}

DenseFunction DenseFunction::with_values(std::vector<std::complex<double>> values) const {
    if (values.size() != values_.size()) throw std::invalid_argument("value count must equal q^n");
    DenseFunction out = *this;
    out.values_ = std::move(values);
    return out;
}

std::complex<double> DenseFunction::at(const FqVector& x) const { return values_[index_of(x)]; }

std::size_t DenseFunction::index_of(const FqVector& x) const {
    if (x.field() != q_ || x.size() != n_) throw std::invalid_argument("vector does not match the function domain");
    std::size_t index = 0;
    for (std::size_t i = n_; i-- > 0;) index = index * q_.value() + x[i];
    return index;
}

FqVector DenseFunction::vector_at(std::size_t index) const {
    std::vector<Elem> coords(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        coords[i] = static_cast<Elem>(index % q_.value());
        index /= q_.value();
    }
    return FqVector(q_, std::move(coords));
}

DenseFunction transform(const DenseFunction& f) {
    if (f.field().value() == 2) return fast_transform_q2(f);
    auto values = f.values();
    detail::character_transform_inplace(values, f.field().value(), f.length());
    const double norm = std::pow(static_cast<double>(f.field().value()), -0.5 * static_cast<double>(f.length()));
    for (auto& v : values) v *= norm;
    return f.with_values(std::move(values));
}

DenseFunction fast_transform_q2(const DenseFunction& f) {
    require_binary(f);
    auto values = f.values();
    detail::walsh_hadamard_inplace(values);
    const double norm = std::pow(2.0, -0.5 * static_cast<double>(f.length()));
    for (auto& v : values) v *= norm;
    return f.with_values(std::move(values));
}

DenseFunction reflect(const DenseFunction& f) {
    const PrimeField field(f.field());
    std::vector<std::complex<double>> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const FqVector x = f.vector_at(i);
        std::vector<Elem> neg(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) neg[j] = field.neg(x[j]);
        out[i] = f.at(FqVector(f.field(), std::move(neg)));
    }
    return f.with_values(std::move(out));
}

std::vector<std::size_t> support(const DenseFunction& f, double tol) {
    if (tol < 0) throw std::invalid_argument("tolerance must be non-negative");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (std::abs(f[i]) > tol) out.push_back(i);
    }
    return out;
}

std::vector<std::complex<double>> shell_sums(const DenseFunction& f) {
    std::vector<std::complex<double>> out(f.length() + 1);
    const std::uint32_t q = f.field().value();
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::size_t wt = 0;
        for (std::size_t rest = i; rest; rest /= q) wt += (rest % q != 0);
        out[wt] += f[i];
    }
    return out;
}

double max_abs_diff(const DenseFunction& a, const DenseFunction& b) {
    if (a.field() != b.field() || a.length() != b.length()) throw std::invalid_argument("domain mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

EigenReport eigenfunction_check(const DenseFunction& f, double tol) {
    require_binary(f);
    if (is_zero(f)) throw std::invalid_argument("zero function has no eigenvalue");
    const auto hat = fast_transform_q2(f);
    double plus = 0.0, minus = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        plus = std::max(plus, std::abs(hat[i] - f[i]));
        minus = std::max(minus, std::abs(hat[i] + f[i]));
    }
    EigenReport r{std::nullopt, std::min(plus, minus)};
    if (plus <= minus && plus <= tol) r.eigenvalue = 1;
    else if (minus < plus && minus <= tol) r.eigenvalue = -1;
    return r;
}

UncertaintyReport uncertainty_report(const DenseFunction& f, double tol) {
    require_binary(f);
    if (is_zero(f)) throw std::invalid_argument("uncertainty bound needs a nonzero function");
    UncertaintyReport r;
    r.support_f = support(f, tol).size();
    r.support_hat = support(fast_transform_q2(f), tol).size();
    r.product = BigInt(r.support_f) * r.support_hat;
    r.bound = ipow(2, f.length());
    r.pass = r.product >= r.bound;
    return r;
}

}  // namespace specktral
