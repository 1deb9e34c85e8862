#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "qpf/padic.hpp"

namespace qpf {

/// Exact root of unity zeta_order^expnt, stored in lowest terms
/// (gcd(expnt, order) = 1 or expnt = 0, order = 1).
class RootOfUnity {
public:
    RootOfUnity() : order_(1), expnt_(0) {}
    RootOfUnity(long order, long expnt);

    static RootOfUnity one() { return RootOfUnity(); }
    static RootOfUnity minus_one() { return RootOfUnity(2, 1); }

    long order() const { return order_; }
    long expnt() const { return expnt_; }
    bool is_one() const { return order_ == 1; }
    bool is_real() const { return order_ <= 2; }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity pow(long e) const;
    RootOfUnity inverse() const { return pow(-1); }
    bool operator==(const RootOfUnity& o) const = default;

    std::complex<double> to_complex() const;
    /// +1 or -1; throws domain_error for order > 2.
    ExactRational to_rational() const;
    /// Embedding into Q_p via the Teichmuller character on the smallest
    /// primitive root mod p; requires order | p - 1.
    PadicNumber to_padic(const ExactInt& p, long prec) const;

private:
    long order_, expnt_;
};

/// Dirichlet character mod M, represented by its images on a fixed set of
/// generators of (Z/MZ)^* and a full value table of exact roots of unity.
class DirichletCharacter {
public:
    static DirichletCharacter trivial(long modulus);
    /// Legendre symbol character mod an odd prime.
    static DirichletCharacter quadratic(long p);
    /// General constructor: one image per generator; image orders must
    /// divide the generator orders.
    static DirichletCharacter from_generator_images(long modulus,
                                                    const std::vector<RootOfUnity>& images);

    long modulus() const { return modulus_; }
    long conductor() const { return conductor_; }
    const std::vector<long>& generators() const { return gens_; }
    const std::vector<long>& generator_orders() const { return gen_orders_; }
    const std::vector<RootOfUnity>& images() const { return images_; }

    /// chi(n); nullopt when gcd(n, M) > 1 (the value 0).
    std::optional<RootOfUnity> value(long n) const;
    std::complex<double> value_complex(long n) const;
    /// p-adic embedding of chi(n); 0 at precision for non-units.
    PadicNumber value_padic(long n, const ExactInt& p, long prec) const;

    bool is_even() const;  // chi(-1) = 1

    /// Component of chi modulo d, for a coprime splitting M = d * (M/d):
    /// chi_d(a) = chi(x), x = a mod d, x = 1 mod M/d.
    DirichletCharacter component(long d) const;

private:
    long modulus_ = 1;
    long conductor_ = 1;
    std::vector<long> gens_, gen_orders_;
    std::vector<RootOfUnity> images_;
    std::vector<std::optional<RootOfUnity>> table_;  // size modulus_

    void build_table();
    void compute_conductor();
};

/// Generators of (Z/MZ)^* with their orders (CRT across prime powers;
/// for 2^a with a >= 3 the pair -1, 5).
void unit_group_generators(long modulus, std::vector<long>& gens, std::vector<long>& orders);

}  // namespace qpf
