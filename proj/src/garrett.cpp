#include "qpf/garrett.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qpf {

TripleWeights::TripleWeights(long a, long b, long c) {
    long v[3] = {a, b, c};
    std::sort(v, v + 3, std::greater<long>());
    k1 = v[0];
    k2 = v[1];
    k3 = v[2];
}

bool is_balanced(const TripleWeights& w) {
    return w.k3 >= 2 && w.k1 <= w.k2 + w.k3 - 2;
}

std::vector<long> CriticalSet::values() const {
    std::vector<long> out;
    for (long s = lo; s <= hi; ++s) out.push_back(s);
    return out;
}

CriticalSet critical_values(const TripleWeights& w) {
    CriticalSet cs;
    cs.center = ExactRational(w.k1 + w.k2 + w.k3 - 2, 2);
    cs.center.canonicalize();
    if (!is_balanced(w)) {
        cs.lo = 0;
        cs.hi = -1;
        cs.diagnostic = "weights (" + std::to_string(w.k1) + "," + std::to_string(w.k2) + "," +
                        std::to_string(w.k3) + ") are unbalanced: need k3 >= 2 and k1 <= k2+k3-2";
        return cs;
    }
    cs.lo = w.k1;
    cs.hi = w.k2 + w.k3 - 2;
    return cs;
}

long functional_eq_reflect(const TripleWeights& w, long s) {
    return w.k1 + w.k2 + w.k3 - 2 - s;
}

long admissibility_H(const ExactRational& s1, const ExactRational& s2, const ExactRational& s3) {
    if (s1 < 0 || s2 < 0 || s3 < 0)
        throw domain_error("admissibility_H: slopes must be nonnegative");
    ExactRational twice = 2 * (s1 + s2 + s3);
    ExactInt fl = exact_floor(twice);
    return mpz_get_si(fl.get_mpz_t()) + 1;
}

TripleLocalData::TripleLocalData(HeckeLocalData a, HeckeLocalData b, HeckeLocalData c,
                                 RootOfUnity chi)
    : f1(std::move(a)), f2(std::move(b)), f3(std::move(c)), chi_p(std::move(chi)) {
    if (f1.p != f2.p || f1.p != f3.p)
        throw domain_error("TripleLocalData: the three local data must share one prime");
}

long Degree8Factor::degree() const {
    switch (ring) {
        case RingTag::exact: return (long)exact.size() - 1;
        case RingTag::cplx: return (long)cplx.size() - 1;
        default: return (long)padic.size() - 1;
    }
}

namespace {

// Power sums s_m = alpha^m + beta^m from a = alpha+beta, b = alpha*beta by
// the Lucas recurrence s_m = a s_{m-1} - b s_{m-2}; then the product over
// the three pairs gives the power sums of the 8 values lambda_eta, and
// Newton's identities turn those into elementary symmetric functions.
template <class R>
std::vector<R> degree8_from_pairs(const std::array<R, 3>& a, const std::array<R, 3>& b,
                                  const R& one, const std::function<R(const R&, long)>& div_int) {
    constexpr long K = 8;
    std::array<std::vector<R>, 3> s;
    for (int j = 0; j < 3; ++j) {
        s[j].resize(K + 1);
        s[j][0] = one + one;
        s[j][1] = a[j];
        for (long m = 2; m <= K; ++m) s[j][m] = a[j] * s[j][m - 1] - b[j] * s[j][m - 2];
    }
    std::vector<R> pw(K + 1);  // power sums of the eight lambda_eta
    for (long m = 1; m <= K; ++m) pw[m] = s[0][m] * s[1][m] * s[2][m];
    std::vector<R> e(K + 1);
    e[0] = one;
    for (long k = 1; k <= K; ++k) {
        R acc{};
        for (long i = 1; i <= k; ++i) {
            R term = e[(size_t)(k - i)] * pw[(size_t)i];
            if (i % 2 == 0) acc = acc - term;
            else acc = acc + term;
        }
        e[(size_t)k] = div_int(acc, k);
    }
    // prod (1 - lambda X) = sum (-1)^k e_k X^k
    std::vector<R> c(K + 1);
    c[0] = one;
    for (long k = 1; k <= K; ++k) c[(size_t)k] = (k % 2 == 0) ? e[(size_t)k] : R() - e[(size_t)k];
    return c;
}

}  // namespace

std::vector<ExactRational> degree8_exact_from_pairs(const std::array<ExactRational, 3>& a,
                                                    const std::array<ExactRational, 3>& b) {
    return degree8_from_pairs<ExactRational>(
        a, b, ExactRational(1),
        [](const ExactRational& x, long k) -> ExactRational { return x / ExactRational(k); });
}

Degree8Factor degree8_euler_factor(const TripleLocalData& d, RingTag ring, long padic_prec) {
    Degree8Factor out;
    out.ring = ring;
    out.p = d.p();
    const HeckeLocalData* fs[3] = {&d.f1, &d.f2, &d.f3};
    switch (ring) {
        case RingTag::exact: {
            std::array<ExactRational, 3> a, b;
            for (int j = 0; j < 3; ++j) {
                a[j] = ExactRational(fs[j]->a_p);
                b[j] = fs[j]->psi_p.to_rational() *
                       ExactRational(pow_ui(ExactInt(fs[j]->p), (unsigned long)(fs[j]->weight - 1)));
            }
            out.exact = degree8_from_pairs<ExactRational>(
                a, b, ExactRational(1),
                [](const ExactRational& x, long k) -> ExactRational { return x / ExactRational(k); });
            break;
        }
        case RingTag::cplx: {
            std::array<std::complex<double>, 3> a, b;
            for (int j = 0; j < 3; ++j) {
                a[j] = {mpz_get_d(fs[j]->a_p.get_mpz_t()), 0.0};
                b[j] = fs[j]->psi_p.to_complex() *
                       std::pow((double)fs[j]->p, (double)(fs[j]->weight - 1));
            }
            out.cplx = degree8_from_pairs<std::complex<double>>(
                a, b, {1.0, 0.0},
                [](const std::complex<double>& x, long k) { return x / (double)k; });
            break;
        }
        case RingTag::padic: {
            ExactInt p(d.p());
            std::array<PadicNumber, 3> a, b;
            for (int j = 0; j < 3; ++j) {
                a[j] = PadicNumber::from_int(p, fs[j]->a_p, padic_prec);
                b[j] = fs[j]->psi_p.to_padic(p, padic_prec) *
                       PadicNumber::make(p, fs[j]->weight - 1, 1, padic_prec);
            }
            out.padic = degree8_from_pairs<PadicNumber>(
                a, b, PadicNumber::from_int(p, 1, padic_prec),
                [&p, padic_prec](const PadicNumber& x, long k) {
                    return x / PadicNumber::from_int(p, k, padic_prec);
                });
            break;
        }
    }
    return out;
}

std::complex<double> degree8_eval_complex(const Degree8Factor& f, std::complex<double> x) {
    const std::vector<std::complex<double>>* c = nullptr;
    std::vector<std::complex<double>> conv;
    if (f.ring == RingTag::cplx) {
        c = &f.cplx;
    } else if (f.ring == RingTag::exact) {
        for (const auto& q : f.exact) conv.emplace_back(mpq_get_d(q.get_mpq_t()), 0.0);
        c = &conv;
    } else {
        throw domain_error("degree8_eval_complex: factor has no complex embedding");
    }
    std::complex<double> acc = 0.0;
    for (auto it = c->rbegin(); it != c->rend(); ++it) acc = acc * x + *it;
    return acc;
}

LPartial dirichlet_L_partial(const std::vector<ExactInt>& a, const DirichletCharacter& chi,
                             std::complex<double> s, long n_terms, long weight) {
    if (n_terms < 1) throw domain_error("dirichlet_L_partial: need at least one term");
    long nmax = std::min<long>(n_terms, (long)a.size() - 1);
    if (nmax < 1) throw domain_error("dirichlet_L_partial: no coefficients supplied");
    std::complex<double> acc = 0.0;
    for (long n = 1; n <= nmax; ++n) {
        if (a[(size_t)n] == 0) continue;
        std::complex<double> cv = chi.value_complex(n);
        if (cv == std::complex<double>(0.0, 0.0)) continue;
        double an = mpz_get_d(a[(size_t)n].get_mpz_t());
        acc += cv * an * std::exp(-s * std::log((double)n));
    }
    LPartial out;
    out.value = acc;
    double sigma = s.real();
    double edge = (weight + 3.0) / 2.0;
    out.convergence_warning = !(sigma > edge);
    if (out.convergence_warning) {
        out.tail_bound = std::numeric_limits<double>::infinity();
    } else {
        // |a_n| <= n^{(k+1)/2}; integral comparison from nmax
        double expo = (weight + 1.0) / 2.0 - sigma + 1.0;
        out.tail_bound = std::pow((double)nmax, expo) / (sigma - edge);
    }
    return out;
}

LPartial triple_L_partial(const std::vector<TripleLocalData>& locals, std::complex<double> s) {
    LPartial out;
    out.value = 1.0;
    if (locals.empty()) {
        out.tail_bound = std::numeric_limits<double>::infinity();
        out.convergence_warning = false;
        return out;
    }
    long kk = 0;
    for (const auto& d : locals)
        kk = std::max(kk, d.f1.weight + d.f2.weight + d.f3.weight);
    double w = (kk - 3.0) / 2.0;
    out.convergence_warning = !(s.real() > w + 1.0);

    const long n = (long)locals.size();
    std::vector<std::complex<double>> factors((size_t)n);
    std::vector<std::string> pole_msgs((size_t)n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < n; ++i) {
        const auto& d = locals[(size_t)i];
        double p = (double)d.p();
        std::complex<double> x = d.chi_p.to_complex() * std::exp(-s * std::log(p));
        // evaluate prod_eta (1 - lambda_eta x) from the Satake roots; the
        // expanded coefficients overflow doubles for large p, the products
        // lambda_eta * x never do in the convergent region
        std::complex<double> roots[3][2];
        const HeckeLocalData* fs[3] = {&d.f1, &d.f2, &d.f3};
        for (int j = 0; j < 3; ++j) {
            auto [al, be] = satake_complex(*fs[j]);
            roots[j][0] = al;
            roots[j][1] = be;
        }
        std::complex<double> val = 1.0;
        for (int mask = 0; mask < 8; ++mask)
            val *= 1.0 - roots[0][mask & 1] * roots[1][(mask >> 1) & 1] * roots[2][(mask >> 2) & 1] * x;
        if (std::abs(val) < 1e-300) {
            pole_msgs[(size_t)i] = "local factor vanishes at p = " + std::to_string(d.p());
            factors[(size_t)i] = 1.0;
        } else {
            factors[(size_t)i] = 1.0 / val;
        }
    }
    for (const auto& msg : pole_msgs)
        if (!msg.empty()) throw domain_error("triple_L_partial: " + msg);
    // fixed reduction order: as given (primes ascending by convention)
    for (const auto& f : factors) out.value *= f;

    long pmax = 0;
    for (const auto& d : locals) pmax = std::max(pmax, d.p());
    if (out.convergence_warning) {
        out.tail_bound = std::numeric_limits<double>::infinity();
    } else {
        // |lambda_eta| = p^w, eight of them: crude integral comparison
        double expo = w - s.real() + 1.0;
        out.tail_bound = 8.0 * std::pow((double)pmax, expo) / (s.real() - w - 1.0);
    }
    return out;
}

namespace {

// Lanczos approximation, g = 7, n = 9.
std::complex<double> gamma_lanczos(std::complex<double> z) {
    static const double g = 7.0;
    static const double c[9] = {0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059,  12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return M_PI / (std::sin(M_PI * z) * gamma_lanczos(1.0 - z));
    }
    z -= 1.0;
    std::complex<double> x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + (double)i);
    std::complex<double> t = z + g + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

bool is_gamma_pole(std::complex<double> z) {
    if (std::abs(z.imag()) > 1e-12) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < 1e-12;
}

}  // namespace

std::complex<double> gamma_C(std::complex<double> s) {
    if (is_gamma_pole(s)) throw domain_error("gamma_C: pole at s = " + std::to_string(s.real()));
    return 2.0 * std::exp(-s * std::log(2.0 * M_PI)) * gamma_lanczos(s);
}

std::complex<double> gamma_normalization(const TripleWeights& w, std::complex<double> s) {
    const std::complex<double> args[4] = {s, s - (double)w.k3 + 1.0, s - (double)w.k2 + 1.0,
                                          s - (double)w.k1 + 1.0};
    static const char* names[4] = {"Gamma_C(s)", "Gamma_C(s-k3+1)", "Gamma_C(s-k2+1)",
                                   "Gamma_C(s-k1+1)"};
    std::complex<double> acc = 1.0;
    for (int i = 0; i < 4; ++i) {
        if (is_gamma_pole(args[i]))
            throw domain_error(std::string("gamma_normalization: pole of ") + names[i] +
                               " at argument " + std::to_string(args[i].real()));
        acc *= gamma_C(args[i]);
    }
    return acc;
}

}  // namespace qpf
