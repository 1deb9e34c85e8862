#include "qpf/families.hpp"

#include <numeric>

namespace qpf {

WeightSpacePoint::WeightSpacePoint(long N, long p_, long v, long r, DirichletCharacter character)
    : tame_modulus(N), p(p_), wild_level(v), twist(r), chi(std::move(character)) {
    if (N < 1) throw domain_error("WeightSpacePoint: tame modulus must be >= 1");
    if (!is_prime(ExactInt(p))) throw domain_error("WeightSpacePoint: p not prime");
    if (N % p == 0) throw domain_error("WeightSpacePoint: p must not divide N");
    if (v < 1) throw domain_error("WeightSpacePoint: wild level must be >= 1");
    ExactInt pv = pow_ui(ExactInt(p), (unsigned long)v);
    if (chi.modulus() != N * mpz_get_si(pv.get_mpz_t()))
        throw domain_error("WeightSpacePoint: character modulus must be N p^v");
}

WeightDisc::WeightDisc(long p_, long k0, long m) : p(p_), center(k0), radius_exponent(m) {
    if (!is_prime(ExactInt(p))) throw domain_error("WeightDisc: p not prime");
    if (m < 0) throw domain_error("WeightDisc: radius exponent must be >= 0");
}

long WeightDisc::step() const {
    ExactInt s = (p - 1) * pow_ui(ExactInt(p), (unsigned long)radius_exponent);
    return mpz_get_si(s.get_mpz_t());
}

bool WeightDisc::contains(long k) const {
    long s = step();
    return ((k - center) % s + s) % s == 0;
}

PadicNumber eval_point(const WeightSpacePoint& pt, long y1, const ExactInt& y2, long prec) {
    if (std::gcd(y1, pt.tame_modulus) != 1)
        throw domain_error("eval_point: y1 not a unit mod N");
    ExactInt p(pt.p);
    if (y2 % p == 0) throw domain_error("eval_point: y2 not a p-adic unit");
    ExactInt pv = pow_ui(p, (unsigned long)pt.wild_level);
    long pvl = mpz_get_si(pv.get_mpz_t());

    PadicNumber acc = PadicNumber::from_int(p, 1, prec);
    if (pt.tame_modulus > 1) {
        auto chiN = pt.chi.component(pt.tame_modulus);
        acc = acc * chiN.value_padic(y1, p, prec);
    }
    auto chiP = pt.chi.component(pvl);
    ExactInt y2red = y2 % pv;
    if (y2red < 0) y2red += pv;
    acc = acc * chiP.value_padic(mpz_get_si(y2red.get_mpz_t()), p, prec);
    PadicNumber y = PadicNumber::from_int(p, y2, prec);
    return acc * y.pow(pt.twist);
}

PadicNumber gap_power(const ExactInt& d, const PadicNumber& s, long component_j, long prec) {
    if (s.is_exact_zero()) throw domain_error("gap_power: weight carries no prime");
    const ExactInt& p = s.prime();
    if (p == 2) throw domain_error("gap_power: p = 2 excluded (log convergence differs)");
    if (d % p == 0) throw domain_error("gap_power: d must be a unit at p");
    PadicNumber omega = teichmuller(d, p, prec);
    PadicNumber angle = PadicNumber::from_int(p, d, prec) / omega;  // in 1 + pZ_p
    PadicNumber lg = padic_log(angle);
    PadicNumber one = PadicNumber::from_int(p, 1, prec);
    PadicNumber expo = (s - one) * lg;
    PadicNumber val = padic_exp(expo);
    long pm1 = mpz_get_si(ExactInt(p - 1).get_mpz_t());
    long j = ((component_j % pm1) + pm1) % pm1;
    return omega.pow(j) * val;
}

PadicNumber eis_family_coeff(long n, const PadicNumber& s, long component_j, long prec) {
    if (n < 1) throw domain_error("eis_family_coeff: need n >= 1");
    if (s.is_exact_zero()) throw domain_error("eis_family_coeff: weight carries no prime");
    const ExactInt& p = s.prime();
    PadicNumber acc = PadicNumber::zero_at(p, prec);
    for (const auto& d : divisors(ExactInt(n))) {
        if (d % p == 0) continue;
        acc = acc + gap_power(d, s, component_j, prec);
    }
    return acc;
}

ExactInt eis_family_coeff_integral(long n, long k, long p) {
    if (n < 1 || k < 1) throw domain_error("eis_family_coeff_integral: need n, k >= 1");
    ExactInt acc = 0;
    for (const auto& d : divisors(ExactInt(n))) {
        if (d % p == 0) continue;
        acc += pow_ui(d, (unsigned long)(k - 1));
    }
    return acc;
}

std::optional<long> continuity_defect(long n, long k, long k2, long p, long m) {
    if (!is_prime(ExactInt(p))) throw domain_error("continuity_defect: p not prime");
    if (m < 0) throw domain_error("continuity_defect: need m >= 0");
    if (n < 1 || n % p == 0) throw domain_error("continuity_defect: need n >= 1 with (n, p) = 1");
    ExactInt step = (ExactInt(p) - 1) * pow_ui(ExactInt(p), (unsigned long)m);
    if ((ExactInt(k) - k2) % step != 0)
        throw domain_error("continuity_defect: weights not congruent mod (p-1)p^m");
    ExactInt diff = eis_family_coeff_integral(n, k, p) - eis_family_coeff_integral(n, k2, p);
    return padic_valuation(diff, ExactInt(p));
}

}  // namespace qpf
