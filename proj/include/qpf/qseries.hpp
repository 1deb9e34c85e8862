#pragma once

#include <algorithm>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qpf/rings.hpp"

namespace qpf {

/// Multiplication kernel selector. `naive` is the serial O(N^2) reference;
/// the other kernels must agree with it coefficient for coefficient, which
/// the exact coefficient arithmetic guarantees regardless of thread count.
enum class MulAlgo {
    automatic,
    naive,          // serial reference
    naive_omp,      // same schoolbook sums, rows in parallel
    karatsuba,      // serial divide and conquer
    karatsuba_omp,  // divide and conquer with OpenMP tasks
};

namespace detail {

constexpr long kKaratsubaCutoff = 24;
constexpr long kParallelCutoff = 2048;
constexpr int kTaskDepth = 5;

template <class R>
void mul_naive_serial(std::span<const R> a, std::span<const R> b, std::vector<R>& out, long cap) {
    out.assign((size_t)cap, R());
    const long na = (long)a.size(), nb = (long)b.size();
    for (long i = 0; i < std::min(na, cap); ++i) {
        if (coeff_is_zero(a[(size_t)i])) continue;
        const long jmax = std::min(nb, cap - i);
        for (long j = 0; j < jmax; ++j)
            coeff_addmul(out[(size_t)(i + j)], a[(size_t)i], b[(size_t)j]);
    }
}

template <class R>
void mul_naive_omp(std::span<const R> a, std::span<const R> b, std::vector<R>& out, long cap) {
    out.assign((size_t)cap, R());
    const long na = (long)a.size(), nb = (long)b.size();
#pragma omp parallel for schedule(static)
    for (long n = 0; n < cap; ++n) {
        R acc{};
        const long lo = std::max(0L, n - nb + 1);
        const long hi = std::min(n, na - 1);
        for (long i = lo; i <= hi; ++i) coeff_addmul(acc, a[(size_t)i], b[(size_t)(n - i)]);
        out[(size_t)n] = std::move(acc);
    }
}

// Full product (length na+nb-1) by Karatsuba; recursion spawns tasks while
// depth > 0. Each recursion writes disjoint scratch, so results are
// assembled positionally and identically for any schedule.
template <class R>
std::vector<R> kara_full(std::span<const R> a, std::span<const R> b, int depth) {
    const long na = (long)a.size(), nb = (long)b.size();
    if (na == 0 || nb == 0) return {};
    if (std::min(na, nb) <= kKaratsubaCutoff) {
        std::vector<R> out;
        mul_naive_serial(a, b, out, na + nb - 1);
        return out;
    }
    const long h = (std::max(na, nb) + 1) / 2;
    auto lo = [h](std::span<const R> v) { return v.subspan(0, std::min((long)v.size(), h)); };
    auto hi = [h](std::span<const R> v) {
        return ((long)v.size() > h) ? v.subspan((size_t)h) : std::span<const R>{};
    };
    std::span<const R> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);

    std::vector<R> asum((size_t)std::max(a0.size(), a1.size()));
    for (size_t i = 0; i < asum.size(); ++i) {
        if (i < a0.size()) asum[i] = asum[i] + a0[i];
        if (i < a1.size()) asum[i] = asum[i] + a1[i];
    }
    std::vector<R> bsum((size_t)std::max(b0.size(), b1.size()));
    for (size_t i = 0; i < bsum.size(); ++i) {
        if (i < b0.size()) bsum[i] = bsum[i] + b0[i];
        if (i < b1.size()) bsum[i] = bsum[i] + b1[i];
    }

    std::vector<R> z0, z2, z1;
#ifdef _OPENMP
    if (depth > 0) {
#pragma omp task shared(z0)
        z0 = kara_full(a0, b0, depth - 1);
#pragma omp task shared(z2)
        z2 = kara_full(a1, b1, depth - 1);
        z1 = kara_full(std::span<const R>(asum), std::span<const R>(bsum), depth - 1);
#pragma omp taskwait
    } else
#endif
    {
        z0 = kara_full(a0, b0, 0);
        z2 = kara_full(a1, b1, 0);
        z1 = kara_full(std::span<const R>(asum), std::span<const R>(bsum), 0);
    }
    (void)depth;

    for (size_t i = 0; i < z1.size(); ++i) {
        if (i < z0.size()) z1[i] = z1[i] - z0[i];
        if (i < z2.size()) z1[i] = z1[i] - z2[i];
    }
    std::vector<R> out((size_t)(na + nb - 1));
    for (size_t i = 0; i < z0.size(); ++i) out[i] = std::move(z0[i]);
    for (size_t i = 0; i < z1.size(); ++i) out[i + (size_t)h] = out[i + (size_t)h] + z1[i];
    for (size_t i = 0; i < z2.size(); ++i) out[i + (size_t)(2 * h)] = out[i + (size_t)(2 * h)] + z2[i];
    return out;
}

template <class R>
void mul_karatsuba(std::span<const R> a, std::span<const R> b, std::vector<R>& out, long cap,
                   bool parallel) {
    // Indices >= cap cannot influence the truncated product.
    a = a.subspan(0, std::min((long)a.size(), cap));
    b = b.subspan(0, std::min((long)b.size(), cap));
    std::vector<R> full;
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel
#pragma omp single
        full = kara_full(a, b, kTaskDepth);
    } else
#endif
    {
        (void)parallel;
        full = kara_full(a, b, 0);
    }
    full.resize((size_t)cap);
    out = std::move(full);
}

template <class R>
void mul_dispatch(std::span<const R> a, std::span<const R> b, std::vector<R>& out, long cap,
                  MulAlgo algo) {
    if (algo == MulAlgo::automatic) {
        const long n = std::min((long)a.size(), (long)b.size());
        if (n <= kKaratsubaCutoff) algo = MulAlgo::naive;
        else if (std::max((long)a.size(), (long)b.size()) >= kParallelCutoff) algo = MulAlgo::karatsuba_omp;
        else algo = MulAlgo::karatsuba;
    }
    switch (algo) {
        case MulAlgo::naive: mul_naive_serial(a, b, out, cap); break;
        case MulAlgo::naive_omp: mul_naive_omp(a, b, out, cap); break;
        case MulAlgo::karatsuba: mul_karatsuba(a, b, out, cap, false); break;
        default: mul_karatsuba(a, b, out, cap, true); break;
    }
}

}  // namespace detail

/// Truncated formal power series sum a_n q^n, n < precision, over an exact
/// coefficient ring R. Immutable value semantics; binary operations truncate
/// to the smaller precision.
template <class R>
class QSeries {
public:
    explicit QSeries(long prec) : c_(checked(prec)) {}
    explicit QSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw domain_error("QSeries: precision must be >= 1");
    }

    long precision() const { return (long)c_.size(); }
    const R& operator[](long n) const { return c_.at((size_t)n); }
    R& at(long n) { return c_.at((size_t)n); }
    const std::vector<R>& coeffs() const { return c_; }

    QSeries truncated(long prec) const {
        if (prec >= precision()) return *this;
        if (prec < 1) throw domain_error("QSeries: precision must be >= 1");
        return QSeries(std::vector<R>(c_.begin(), c_.begin() + prec));
    }

    /// Multiply by q^k (k >= 0): precision grows by k since the new low
    /// coefficients are exactly zero.
    QSeries shifted(long k) const {
        if (k < 0) throw domain_error("QSeries: negative shift");
        std::vector<R> out((size_t)(precision() + k));
        for (long i = 0; i < precision(); ++i) out[(size_t)(i + k)] = c_[(size_t)i];
        return QSeries(std::move(out));
    }

    /// Divide by q^k; the dropped coefficients must be zero.
    QSeries divided_by_q(long k) const {
        if (k < 0 || k >= precision()) throw domain_error("QSeries: bad power of q");
        for (long i = 0; i < k; ++i)
            if (!coeff_is_zero(c_[(size_t)i]))
                throw domain_error("QSeries: not divisible by q^" + std::to_string(k));
        return QSeries(std::vector<R>(c_.begin() + k, c_.end()));
    }

    QSeries operator+(const QSeries& o) const {
        long n = std::min(precision(), o.precision());
        std::vector<R> out((size_t)n);
        for (long i = 0; i < n; ++i) out[(size_t)i] = c_[(size_t)i] + o.c_[(size_t)i];
        return QSeries(std::move(out));
    }
    QSeries operator-(const QSeries& o) const {
        long n = std::min(precision(), o.precision());
        std::vector<R> out((size_t)n);
        for (long i = 0; i < n; ++i) out[(size_t)i] = c_[(size_t)i] - o.c_[(size_t)i];
        return QSeries(std::move(out));
    }
    QSeries operator-() const {
        std::vector<R> out(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) out[i] = R() - c_[i];
        return QSeries(std::move(out));
    }

    QSeries mul(const QSeries& o, MulAlgo algo) const {
        long cap = std::min(precision(), o.precision());
        std::vector<R> out;
        detail::mul_dispatch(std::span<const R>(c_), std::span<const R>(o.c_), out, cap, algo);
        return QSeries(std::move(out));
    }
    QSeries operator*(const QSeries& o) const { return mul(o, MulAlgo::automatic); }

    QSeries scaled(const ExactInt& n) const {
        std::vector<R> out = c_;
        for (auto& x : out) coeff_scale(x, n);
        return QSeries(std::move(out));
    }
    QSeries scaled_by(const R& r) const {
        std::vector<R> out(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * r;
        return QSeries(std::move(out));
    }

    QSeries pow_ui(unsigned long e, MulAlgo algo = MulAlgo::automatic) const {
        if (e == 0) throw domain_error("QSeries::pow_ui: use an explicit one-series for e = 0");
        QSeries acc = *this;
        unsigned long msb = 1;
        while ((msb << 1) && (msb << 1) <= e) msb <<= 1;
        for (unsigned long bit = msb >> 1; bit; bit >>= 1) {
            acc = acc.mul(acc, algo);
            if (e & bit) acc = acc.mul(*this, algo);
        }
        return acc;
    }

    bool operator==(const QSeries& o) const
        requires requires(const R& x, const R& y) { x == y; }
    {
        return precision() == o.precision() && c_ == o.c_;
    }

private:
    std::vector<R> c_;

    static std::vector<R> checked(long prec) {
        if (prec < 1) throw domain_error("QSeries: precision must be >= 1");
        return std::vector<R>((size_t)prec);
    }
};

}  // namespace qpf
