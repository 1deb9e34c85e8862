#include "qpf/forms.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qpf {

namespace {

// One sieve block: for every d, add d^e to sigma[n] for multiples n of d
// inside [lo, hi). Ascending d gives the same addition order as the serial
// sieve, so the result is identical for any block partition.
void sigma_block(const std::vector<ExactInt>& dpow, std::vector<ExactInt>& sig, long lo, long hi) {
    for (long d = 1; d < hi; ++d) {
        long start = std::max(d, ((lo + d - 1) / d) * d);
        for (long n = start; n < hi; n += d) sig[(size_t)n] += dpow[(size_t)d];
    }
}

}  // namespace

std::vector<ExactInt> sigma_upto(long e, long N, bool parallel) {
    if (N < 0) throw domain_error("sigma_upto: need N >= 0");
    std::vector<ExactInt> dpow((size_t)N + 1);
    for (long d = 1; d <= N; ++d) dpow[(size_t)d] = pow_ui(ExactInt(d), (unsigned long)e);
    std::vector<ExactInt> sig((size_t)N + 1);
#ifdef _OPENMP
    if (parallel && N >= 4096) {
        const long nblocks = std::min<long>(omp_get_max_threads() * 4L, std::max(1L, N / 512));
        const long step = (N + nblocks) / nblocks + 1;
#pragma omp parallel for schedule(dynamic)
        for (long b = 0; b < nblocks; ++b) {
            long lo = 1 + b * step;
            long hi = std::min(N + 1, lo + step);
            if (lo < hi) sigma_block(dpow, sig, lo, hi);
        }
        return sig;
    }
#endif
    (void)parallel;
    sigma_block(dpow, sig, 1, N + 1);
    return sig;
}

QSeries<ExactInt> divisor_sum_series(long k, long N) {
    if (k < 2 || k % 2 != 0) throw domain_error("divisor_sum_series: k must be even and >= 2");
    if (N < 1) throw domain_error("divisor_sum_series: need N >= 1");
    auto sig = sigma_upto(k - 1, N - 1);
    sig.resize((size_t)N);
    sig[0] = 0;
    return QSeries<ExactInt>(std::move(sig));
}

QSeries<ExactInt> eisenstein_e4(long N) {
    auto e4 = divisor_sum_series(4, N).scaled(240);
    e4.at(0) = 1;
    return e4;
}

QSeries<ExactInt> eisenstein_e6(long N) {
    auto e6 = divisor_sum_series(6, N).scaled(-504);
    e6.at(0) = 1;
    return e6;
}

QSeries<ExactInt> euler_product(long N) {
    if (N < 1) throw domain_error("euler_product: need N >= 1");
    QSeries<ExactInt> f(N);
    f.at(0) = 1;
    // q^{k(3k-1)/2} and q^{k(3k+1)/2} with sign (-1)^k
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 >= N && g2 >= N) break;
        ExactInt s = (k % 2 == 0) ? 1 : -1;
        if (g1 < N) f.at(g1) = s;
        if (g2 < N) f.at(g2) = s;
    }
    return f;
}

QSeries<ExactInt> delta_series(long N, DeltaRoute route) {
    if (N < 2) throw domain_error("delta_series: need N >= 2");
    if (route == DeltaRoute::eta_product) {
        auto e24 = euler_product(N - 1).pow_ui(24);
        return e24.shifted(1);
    }
    auto e4 = eisenstein_e4(N);
    auto e6 = eisenstein_e6(N);
    auto num = e4.pow_ui(3) - e6.pow_ui(2);
    std::vector<ExactInt> out((size_t)N);
    for (long n = 0; n < N; ++n)
        out[(size_t)n] = exact_divide(num[n], 1728, "delta: (E4^3 - E6^2)/1728");
    return QSeries<ExactInt>(std::move(out));
}

QSeries<ExactInt> ramanujan_congruence_defect(long N) {
    if (N < 2) throw domain_error("ramanujan_congruence_defect: need N >= 2");
    auto diff = delta_series(N) - divisor_sum_series(12, N);
    std::vector<ExactInt> out((size_t)N);
    for (long n = 0; n < N; ++n) {
        if (!mpz_divisible_ui_p(diff[n].get_mpz_t(), 691))
            throw internal_error("congruence violation: 691 does not divide coefficient of q^" +
                                 std::to_string(n));
        out[(size_t)n] = diff[n] / 691;
    }
    return QSeries<ExactInt>(std::move(out));
}

ExactInt tau(long n) {
    if (n < 1) throw domain_error("tau: need n >= 1");
    return delta_series(n + 1, n > 512 ? DeltaRoute::eta_product : DeltaRoute::eisenstein)[n];
}

std::vector<ExactInt> tau_upto(long N, DeltaRoute route) {
    if (N < 1) throw domain_error("tau_upto: need N >= 1");
    auto d = delta_series(N + 1, route);
    return d.coeffs();
}

QSeries<ExactRational> pow_rational(const QSeries<ExactRational>& f, const ExactRational& e_in) {
    if (f[0] != 1) throw domain_error("pow_rational: constant term must be 1");
    ExactRational e = e_in;
    e.canonicalize();  // raw (num, den) constructions are not canonical
    const long N = f.precision();
    std::vector<ExactRational> g((size_t)N);
    g[0] = 1;
    for (long n = 1; n < N; ++n) {
        ExactRational acc = 0;
        for (long j = 1; j <= n; ++j) {
            if (f[j] == 0) continue;
            ExactRational w = (e + 1) * ExactRational(j) - ExactRational(n);
            acc += w * f[j] * g[(size_t)(n - j)];
        }
        acc /= ExactRational(n);
        g[(size_t)n] = acc;
    }
    return QSeries<ExactRational>(std::move(g));
}

QSeries<ExactInt> partition_series(long N) {
    if (N < 1) throw domain_error("partition_series: need N >= 1");
    auto delta_over_q = delta_series(N + 1, DeltaRoute::eta_product).divided_by_q(1);
    std::vector<ExactRational> fq((size_t)N);
    for (long n = 0; n < N; ++n) fq[(size_t)n] = ExactRational(delta_over_q[n]);
    auto g = pow_rational(QSeries<ExactRational>(std::move(fq)), ExactRational(-1, 24));
    std::vector<ExactInt> out((size_t)N);
    for (long n = 0; n < N; ++n) {
        if (g[n].get_den() != 1)
            throw internal_error("partition series: coefficient of q^" + std::to_string(n) +
                                 " is not integral");
        out[(size_t)n] = g[n].get_num();
    }
    return QSeries<ExactInt>(std::move(out));
}

double hardy_ramanujan_estimate(long n) {
    if (n < 1) throw domain_error("hardy_ramanujan_estimate: need n >= 1");
    double lam2 = (double)n - 1.0 / 24.0;
    double expo = M_PI * std::sqrt(2.0 / 3.0 * lam2);
    return std::exp(expo) / (4.0 * std::sqrt(3.0) * lam2);
}

}  // namespace qpf
