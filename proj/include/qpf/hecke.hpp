#pragma once

#include <complex>
#include <numeric>
#include <optional>

#include "qpf/dirichlet.hpp"
#include "qpf/qseries.hpp"

namespace qpf {

/// Label (k, N, psi) of a space of forms. With `check_classical` the
/// parity consistency psi(-1) = (-1)^k is enforced.
struct FormLabel {
    long weight;
    long level;
    DirichletCharacter psi;

    FormLabel(long k, long N, DirichletCharacter character, bool check_classical = true);
};

/// Local data of an eigenform at p: a_p, psi(p), weight, and everything the
/// Hecke polynomial 1 - a_p X + psi(p) p^{k-1} X^2 determines.
struct HeckeLocalData {
    long p;
    ExactInt a_p;
    RootOfUnity psi_p;
    long weight;

    HeckeLocalData(long p_, ExactInt ap, RootOfUnity psip, long k);

    /// Slopes (v_p of the two reciprocal roots), smaller first, as exact
    /// rationals from the Newton polygon of the Hecke polynomial.
    std::pair<ExactRational, ExactRational> slopes() const;
    bool slopes_tied() const;
};

HeckeLocalData delta_local_data(long p);
HeckeLocalData eisenstein_local_data(long p, long k);

/// Coefficients (1, -a_p, psi(p) p^{k-1}) in the requested ring.
std::vector<ExactRational> hecke_polynomial_exact(const HeckeLocalData& d);
std::vector<std::complex<double>> hecke_polynomial_complex(const HeckeLocalData& d);
std::vector<PadicNumber> hecke_polynomial_padic(const HeckeLocalData& d, long prec);

/// Satake parameters: the reciprocal roots alpha, beta of the Hecke
/// polynomial, alpha the smaller-valuation (p-adic) / smaller-modulus
/// (complex) root. The p-adic pair throws not_in_ground_field when the
/// roots leave Q_p.
std::pair<PadicNumber, PadicNumber> satake_padic(const HeckeLocalData& d, long prec);
std::pair<std::complex<double>, std::complex<double>> satake_complex(const HeckeLocalData& d);

/// T_m on level-1 q-expansions of weight k:
/// b_n = sum_{d | gcd(m,n)} d^{k-1} a_{mn/d^2}. Output precision defaults to
/// the largest justified by the input; asking for more raises
/// precision_error with the required bound.
template <class R>
QSeries<R> hecke_T(long m, const QSeries<R>& f, long weight, std::optional<long> n_out = {});

/// U_p: b_n = a_{np}.
template <class R>
QSeries<R> atkin_U(long p, const QSeries<R>& f, std::optional<long> n_out = {});

/// V_p: f(q) -> f(q^p). Gains precision: the inserted coefficients are zero.
template <class R>
QSeries<R> frick_V(long p, const QSeries<R>& f);

/// p-stabilization f_0(z) = f(z) - beta f(pz); an U_p-eigenform with
/// eigenvalue the complementary root when f is a T_p-eigenform of level
/// prime to p.
template <class R>
QSeries<R> p_stabilize(const QSeries<R>& f, long p, const R& beta);

// --- template implementations ---

namespace detail {

inline long max_n_out(long m, long prec_in) { return (prec_in - 1) / m + 1; }

inline void check_n_out(long m, long prec_in, long n_out, const char* op) {
    if (n_out < 1) throw domain_error(std::string(op) + ": output precision must be >= 1");
    if (n_out > max_n_out(m, prec_in))
        throw precision_error(std::string(op) + ": need input precision >= " +
                              std::to_string(m * (n_out - 1) + 1) + ", have " +
                              std::to_string(prec_in));
}

}  // namespace detail

template <class R>
QSeries<R> hecke_T(long m, const QSeries<R>& f, long weight, std::optional<long> n_out) {
    if (m < 1) throw domain_error("hecke_T: need m >= 1");
    long N = n_out.value_or(detail::max_n_out(m, f.precision()));
    detail::check_n_out(m, f.precision(), N, "hecke_T");
    QSeries<R> out(N);
    for (long n = 0; n < N; ++n) {
        R acc{};
        long g = (n == 0) ? m : std::gcd(m, n);
        for (long d = 1; d <= g; ++d) {
            if (g % d) continue;
            R term = f[(m / d) * (n / d)];
            coeff_scale(term, pow_ui(ExactInt(d), (unsigned long)(weight - 1)));
            acc = acc + term;
        }
        out.at(n) = acc;
    }
    return out;
}

template <class R>
QSeries<R> atkin_U(long p, const QSeries<R>& f, std::optional<long> n_out) {
    if (p < 2) throw domain_error("atkin_U: need p >= 2");
    long N = n_out.value_or(detail::max_n_out(p, f.precision()));
    detail::check_n_out(p, f.precision(), N, "atkin_U");
    QSeries<R> out(N);
    for (long n = 0; n < N; ++n) out.at(n) = f[n * p];
    return out;
}

template <class R>
QSeries<R> frick_V(long p, const QSeries<R>& f) {
    if (p < 2) throw domain_error("frick_V: need p >= 2");
    QSeries<R> out(p * (f.precision() - 1) + 1);
    for (long n = 0; n < f.precision(); ++n) out.at(n * p) = f[n];
    return out;
}

template <class R>
QSeries<R> p_stabilize(const QSeries<R>& f, long p, const R& beta) {
    if (p < 2) throw domain_error("p_stabilize: need p >= 2");
    QSeries<R> out(f.precision());
    for (long n = 0; n < f.precision(); ++n) {
        out.at(n) = f[n];
        if (n % p == 0) out.at(n) = out.at(n) - beta * f[n / p];
    }
    return out;
}

}  // namespace qpf
