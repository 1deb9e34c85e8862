#pragma once

#include "qpf/qseries.hpp"

namespace qpf {

/// h_k = sum_{n>=1} sigma_{k-1}(n) q^n, built from the Lambert form
/// sum_d d^{k-1} q^d / (1 - q^d). Requires even k >= 2.
QSeries<ExactInt> divisor_sum_series(long k, long N);

/// E_4 = 1 + 240 h_4.
QSeries<ExactInt> eisenstein_e4(long N);
/// E_6 = 1 - 504 h_6.
QSeries<ExactInt> eisenstein_e6(long N);

/// prod_{m>=1} (1 - q^m) via the pentagonal number theorem (sparse).
QSeries<ExactInt> euler_product(long N);

enum class DeltaRoute {
    eisenstein,   // (E4^3 - E6^2) / 1728, exact division checked
    eta_product,  // q * prod (1-q^m)^24 by repeated squaring
};

/// Discriminant form Delta = sum tau(n) q^n (N >= 2).
QSeries<ExactInt> delta_series(long N, DeltaRoute route = DeltaRoute::eisenstein);

/// (Delta - h_12) / 691; throws internal_error if any coefficient of the
/// difference fails the divisibility (it never does).
QSeries<ExactInt> ramanujan_congruence_defect(long N);

ExactInt tau(long n);
/// tau(1..N) as a vector indexed by n (index 0 unused, set to 0).
std::vector<ExactInt> tau_upto(long N, DeltaRoute route = DeltaRoute::eta_product);

/// sigma_e(n) for n in [0, N], index 0 set to 0. Blocked sieve, parallel
/// when OpenMP is enabled; `parallel = false` is the serial reference.
std::vector<ExactInt> sigma_upto(long e, long N, bool parallel = true);

/// f^e for rational e, constant term of f must be 1 (J.C.P. Miller
/// recurrence: n g_n = sum_{j<=n} ((e+1)j - n) f_j g_{n-j}).
QSeries<ExactRational> pow_rational(const QSeries<ExactRational>& f, const ExactRational& e);

/// (Delta/q)^{-1/24} = sum p(n) q^n; coefficients are proved integral and
/// returned as integers.
QSeries<ExactInt> partition_series(long N);

/// Hardy-Ramanujan main term e^{pi sqrt(2/3 (n - 1/24))} / (4 sqrt(3) lambda_n^2)
/// with lambda_n = sqrt(n - 1/24). Floating point; asymptotic, not exact.
double hardy_ramanujan_estimate(long n);

}  // namespace qpf
