// Timing harness comparing the serial reference kernels against the
// OpenMP ones, and the two Delta construction routes. The serial and
// parallel paths must produce identical coefficients; this is checked on
// every run before timings are reported.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qpf/forms.hpp"

using namespace qpf;

namespace {

double seconds(std::function<void()> fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

QSeries<ExactInt> random_series(std::mt19937_64& rng, long prec) {
    std::uniform_int_distribution<long long> dist(-(1LL << 40), 1LL << 40);
    QSeries<ExactInt> f(prec);
    for (long n = 0; n < prec; ++n) f.at(n) = ExactInt((long)dist(rng));
    return f;
}

void bench_mul(long prec) {
    std::mt19937_64 rng(1);
    auto f = random_series(rng, prec);
    auto g = random_series(rng, prec);
    QSeries<ExactInt> r_naive(1), r_nomp(1), r_kara(1), r_komp(1);
    double t_naive = seconds([&] { r_naive = f.mul(g, MulAlgo::naive); });
    double t_nomp = seconds([&] { r_nomp = f.mul(g, MulAlgo::naive_omp); });
    double t_kara = seconds([&] { r_kara = f.mul(g, MulAlgo::karatsuba); });
    double t_komp = seconds([&] { r_komp = f.mul(g, MulAlgo::karatsuba_omp); });
    bool same = r_naive == r_nomp && r_naive == r_kara && r_naive == r_komp;
    std::printf("mul N=%-6ld  naive %8.3fs  naive_omp %8.3fs  karatsuba %8.3fs  karatsuba_omp %8.3fs  agree=%s\n",
                prec, t_naive, t_nomp, t_kara, t_komp, same ? "yes" : "NO");
    if (!same) std::exit(1);
}

void bench_sigma(long N) {
    std::vector<ExactInt> a, b;
    double t_serial = seconds([&] { a = sigma_upto(11, N, false); });
    double t_par = seconds([&] { b = sigma_upto(11, N, true); });
    std::printf("sigma_11 N=%-6ld  serial %8.3fs  parallel %8.3fs  agree=%s\n", N, t_serial, t_par,
                a == b ? "yes" : "NO");
    if (a != b) std::exit(1);
}

void bench_delta(long N) {
    QSeries<ExactInt> a(2), b(2);
    double t_eis = seconds([&] { a = delta_series(N, DeltaRoute::eisenstein); });
    double t_eta = seconds([&] { b = delta_series(N, DeltaRoute::eta_product); });
    std::printf("delta N=%-6ld   eisenstein %8.3fs  eta %8.3fs  agree=%s\n", N, t_eis, t_eta,
                a == b ? "yes" : "NO");
    if (!(a == b)) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled (serial build)\n");
#endif
    if (quick) {
        bench_mul(512);
        bench_sigma(20000);
        bench_delta(600);
        return 0;
    }
    bench_mul(1000);
    bench_mul(4000);
    bench_mul(10000);
    bench_sigma(200000);
    bench_delta(2000);
    bench_delta(10001);
    return 0;
}
