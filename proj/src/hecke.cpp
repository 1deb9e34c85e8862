#include "qpf/hecke.hpp"

#include "qpf/forms.hpp"

namespace qpf {

FormLabel::FormLabel(long k, long N, DirichletCharacter character, bool check_classical)
    : weight(k), level(N), psi(std::move(character)) {
    if (k < 2) throw domain_error("FormLabel: weight must be >= 2");
    if (N < 1) throw domain_error("FormLabel: level must be >= 1");
    if (psi.modulus() != N)
        throw domain_error("FormLabel: character modulus " + std::to_string(psi.modulus()) +
                           " does not match level " + std::to_string(N));
    if (check_classical) {
        bool even_weight = (k % 2 == 0);
        if (psi.is_even() != even_weight)
            throw domain_error("FormLabel: psi(-1) != (-1)^k");
    }
}

HeckeLocalData::HeckeLocalData(long p_, ExactInt ap, RootOfUnity psip, long k)
    : p(p_), a_p(std::move(ap)), psi_p(std::move(psip)), weight(k) {
    if (!is_prime(ExactInt(p))) throw domain_error("HeckeLocalData: p not prime");
    if (k < 2) throw domain_error("HeckeLocalData: weight must be >= 2");
}

std::pair<ExactRational, ExactRational> HeckeLocalData::slopes() const {
    // Newton polygon of X^2 - a_p X + psi(p) p^{k-1}: points
    // (0, k-1), (1, v(a_p)), (2, 0) read on reciprocal roots.
    long km1 = weight - 1;
    auto va = padic_valuation(a_p, ExactInt(p));
    if (va && 2 * *va < km1) {
        return {ExactRational(*va), ExactRational(km1 - *va)};
    }
    return {ExactRational(km1, 2), ExactRational(km1, 2)};
}

bool HeckeLocalData::slopes_tied() const {
    auto [s1, s2] = slopes();
    return s1 == s2;
}

HeckeLocalData delta_local_data(long p) {
    return HeckeLocalData(p, tau(p), RootOfUnity::one(), 12);
}

HeckeLocalData eisenstein_local_data(long p, long k) {
    if (k < 2 || k % 2 != 0) throw domain_error("eisenstein_local_data: k must be even >= 2");
    return HeckeLocalData(p, 1 + pow_ui(ExactInt(p), (unsigned long)(k - 1)), RootOfUnity::one(), k);
}

std::vector<ExactRational> hecke_polynomial_exact(const HeckeLocalData& d) {
    ExactRational c2 = d.psi_p.to_rational() * ExactRational(pow_ui(ExactInt(d.p), (unsigned long)(d.weight - 1)));
    return {ExactRational(1), ExactRational(-d.a_p), c2};
}

std::vector<std::complex<double>> hecke_polynomial_complex(const HeckeLocalData& d) {
    double pk = std::pow((double)d.p, (double)(d.weight - 1));
    return {{1.0, 0.0},
            {-mpz_get_d(d.a_p.get_mpz_t()), 0.0},
            d.psi_p.to_complex() * pk};
}

std::vector<PadicNumber> hecke_polynomial_padic(const HeckeLocalData& d, long prec) {
    ExactInt p(d.p);
    PadicNumber c2 = d.psi_p.to_padic(p, prec) *
                     PadicNumber::make(p, d.weight - 1, 1, prec);
    return {PadicNumber::from_int(p, 1, prec), PadicNumber::from_int(p, -d.a_p, prec), c2};
}

std::pair<PadicNumber, PadicNumber> satake_padic(const HeckeLocalData& d, long prec) {
    // reciprocal roots satisfy X^2 - a_p X + psi(p) p^{k-1} = 0
    ExactInt p(d.p);
    auto poly = hecke_polynomial_padic(d, prec);
    return quad_roots_padic(poly[1], poly[2]);
}

std::pair<std::complex<double>, std::complex<double>> satake_complex(const HeckeLocalData& d) {
    auto poly = hecke_polynomial_complex(d);
    std::complex<double> b = poly[1], c = poly[2];
    std::complex<double> disc = b * b - 4.0 * c;
    std::complex<double> s = std::sqrt(disc);
    std::complex<double> r1 = (-b + s) / 2.0, r2 = (-b - s) / 2.0;
    if (std::abs(r2) < std::abs(r1)) std::swap(r1, r2);
    if (std::abs(r2) == std::abs(r1) && r2.imag() > r1.imag()) std::swap(r1, r2);
    return {r1, r2};
}

}  // namespace qpf
