#pragma once

#include "qpf/dirichlet.hpp"

namespace qpf {

/// Arithmetic point (r, chi) of the weight space
/// X = Hom_cont((Z/NZ)^* x Z_p^*, C_p^*), chi a character mod N p^v.
struct WeightSpacePoint {
    long tame_modulus;  // N
    long p;
    long wild_level;    // v >= 1
    long twist;         // r
    DirichletCharacter chi;  // modulus N p^v

    WeightSpacePoint(long N, long p_, long v, long r, DirichletCharacter character);
};

/// Disc of weights k = k0 mod (p-1) p^m inside the weight space.
struct WeightDisc {
    long p;
    long center;           // k0
    long radius_exponent;  // m >= 0

    WeightDisc(long p_, long k0, long m);
    bool contains(long k) const;
    long step() const;  // (p-1) p^m
};

/// Evaluate the point at (y1, y2) in (Z/NZ)^* x Z_p^*:
/// chi_N(y1) * chi_{p^v}(y2 mod p^v) * y2^r, embedded in Q_p.
PadicNumber eval_point(const WeightSpacePoint& pt, long y1, const ExactInt& y2, long prec);

/// omega(d)^j * <d>^{s-1} where <d> = d / omega(d): the interpolated
/// d^{k-1} on the component j mod (p-1) of weight space. p odd.
PadicNumber gap_power(const ExactInt& d, const PadicNumber& s, long component_j, long prec);

/// Interpolated Eisenstein coefficient: sum of gap_power over divisors of n
/// prime to p. Equals the p-deprived divisor sum at matching integer weights.
PadicNumber eis_family_coeff(long n, const PadicNumber& s, long component_j, long prec);

/// Exact p-deprived divisor sum sum_{d | n, (d,p)=1} d^{k-1}.
ExactInt eis_family_coeff_integral(long n, long k, long p);

/// v_p( eis(n,k) - eis(n,k') ) computed on exact integers; nullopt encodes
/// +infinity (k = k'). Requires k = k' mod (p-1) p^m and (n, p) = 1; the
/// analyticity of the family makes the result >= m + 1.
std::optional<long> continuity_defect(long n, long k, long k2, long p, long m);

}  // namespace qpf
