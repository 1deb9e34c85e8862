#include "qpf/dirichlet.hpp"

#include <cmath>
#include <numeric>

namespace qpf {

RootOfUnity::RootOfUnity(long order, long expnt) {
    if (order < 1) throw domain_error("RootOfUnity: order must be >= 1");
    expnt %= order;
    if (expnt < 0) expnt += order;
    long g = std::gcd(expnt, order);
    if (expnt == 0) { order_ = 1; expnt_ = 0; return; }
    order_ = order / g;
    expnt_ = expnt / g;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    long l = std::lcm(order_, o.order_);
    return RootOfUnity(l, expnt_ * (l / order_) + o.expnt_ * (l / o.order_));
}

RootOfUnity RootOfUnity::pow(long e) const {
    long r = (e % order_) * expnt_ % order_;
    return RootOfUnity(order_, r);
}

std::complex<double> RootOfUnity::to_complex() const {
    if (order_ == 1) return {1.0, 0.0};
    if (order_ == 2) return {-1.0, 0.0};
    double t = 2.0 * M_PI * (double)expnt_ / (double)order_;
    return {std::cos(t), std::sin(t)};
}

ExactRational RootOfUnity::to_rational() const {
    if (order_ == 1) return ExactRational(1);
    if (order_ == 2) return ExactRational(-1);
    throw domain_error("root of unity of order " + std::to_string(order_) + " is not rational");
}

PadicNumber RootOfUnity::to_padic(const ExactInt& p, long prec) const {
    if (order_ == 1) return PadicNumber::from_int(p, 1, prec);
    ExactInt pm1 = p - 1;
    if (pm1 % order_ != 0)
        throw not_in_ground_field("root of unity of order " + std::to_string(order_) +
                                  " leaves Q_" + to_decimal(p) + " (order does not divide p-1)");
    long g = smallest_primitive_root(mpz_get_si(p.get_mpz_t()));
    PadicNumber zeta = teichmuller(g, p, prec).pow(mpz_get_si(ExactInt(pm1 / order_).get_mpz_t()));
    return zeta.pow(expnt_);
}

void unit_group_generators(long modulus, std::vector<long>& gens, std::vector<long>& orders) {
    gens.clear();
    orders.clear();
    if (modulus < 1) throw domain_error("modulus must be >= 1");
    if (modulus <= 2) return;  // trivial unit group

    // factor the modulus
    std::vector<std::pair<long, long>> fac;  // (q, q^e)
    long m = modulus;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q) continue;
        long qe = 1;
        while (m % q == 0) { m /= q; qe *= q; }
        fac.emplace_back(q, qe);
    }
    if (m > 1) fac.emplace_back(m, m);

    auto order_mod = [](long a, long mod) {
        long o = 1;
        long x = a % mod;
        while (x != 1) {
            x = (long)((__int128)x * a % mod);
            ++o;
        }
        return o;
    };
    // CRT lift: g at component qe, 1 elsewhere
    auto crt_lift = [&](long g, long qe) {
        long rest = modulus / qe;
        if (rest == 1) return g % modulus;
        ExactInt inv = inv_mod(ExactInt(rest) % qe, ExactInt(qe));
        // x = 1 + rest * t with x = g mod qe
        ExactInt t = (ExactInt(g) - 1) * inv % qe;
        if (t < 0) t += qe;
        ExactInt x = (1 + ExactInt(rest) * t) % modulus;
        return (long)mpz_get_si(x.get_mpz_t());
    };

    for (auto [q, qe] : fac) {
        if (q == 2) {
            if (qe == 2) continue;  // (Z/2)^* trivial already skipped by qe==2? qe=2 group trivial
            if (qe == 4) {
                gens.push_back(crt_lift(3, 4));
                orders.push_back(2);
                continue;
            }
            gens.push_back(crt_lift(qe - 1, qe));  // -1
            orders.push_back(2);
            gens.push_back(crt_lift(5, qe));
            orders.push_back(qe / 4);
            continue;
        }
        long phi = qe / q * (q - 1);
        long g = smallest_primitive_root(q);
        if (qe > q && order_mod(g, qe) != phi) g += q;  // g or g+q generates mod q^e
        if (order_mod(g % qe, qe) != phi) throw internal_error("primitive root lift failed");
        gens.push_back(crt_lift(g % qe, qe));
        orders.push_back(phi);
    }
}

DirichletCharacter DirichletCharacter::trivial(long modulus) {
    std::vector<long> gens, orders;
    unit_group_generators(modulus, gens, orders);
    return from_generator_images(modulus, std::vector<RootOfUnity>(gens.size()));
}

DirichletCharacter DirichletCharacter::quadratic(long p) {
    if (p < 3 || !is_prime(ExactInt(p)))
        throw domain_error("quadratic character: need an odd prime modulus");
    return from_generator_images(p, {RootOfUnity::minus_one()});
}

DirichletCharacter DirichletCharacter::from_generator_images(long modulus,
                                                             const std::vector<RootOfUnity>& images) {
    DirichletCharacter chi;
    chi.modulus_ = modulus;
    unit_group_generators(modulus, chi.gens_, chi.gen_orders_);
    if (images.size() != chi.gens_.size())
        throw domain_error("expected " + std::to_string(chi.gens_.size()) +
                           " generator images for modulus " + std::to_string(modulus));
    chi.images_ = images;
    for (size_t i = 0; i < images.size(); ++i) {
        if (chi.gen_orders_[i] % images[i].order() != 0)
            throw domain_error("image order " + std::to_string(images[i].order()) +
                               " does not divide generator order " +
                               std::to_string(chi.gen_orders_[i]));
    }
    chi.build_table();
    chi.compute_conductor();
    return chi;
}

void DirichletCharacter::build_table() {
    table_.assign((size_t)modulus_, std::nullopt);
    if (modulus_ == 1) { table_ = {RootOfUnity::one()}; return; }
    // walk the product of cyclic groups
    std::vector<long> exps(gens_.size(), 0);
    while (true) {
        long a = 1;
        RootOfUnity val = RootOfUnity::one();
        for (size_t i = 0; i < gens_.size(); ++i) {
            for (long t = 0; t < exps[i]; ++t) a = (long)((__int128)a * gens_[i] % modulus_);
            val = val * images_[i].pow(exps[i]);
        }
        table_[(size_t)a] = val;
        size_t i = 0;
        for (; i < exps.size(); ++i) {
            if (++exps[i] < gen_orders_[i]) break;
            exps[i] = 0;
        }
        if (i == exps.size()) break;
        if (exps.empty()) break;
    }
    if (gens_.empty()) table_[1 % modulus_] = RootOfUnity::one();
}

void DirichletCharacter::compute_conductor() {
    conductor_ = modulus_;
    for (long d = 1; d <= modulus_; ++d) {
        if (modulus_ % d) continue;
        bool ok = true;
        for (long a = 1; a < modulus_ && ok; ++a) {
            if (std::gcd(a, modulus_) != 1) continue;
            if (a % d == 1 % d && table_[(size_t)a] != RootOfUnity::one()) ok = false;
        }
        if (ok) { conductor_ = d; break; }
    }
}

std::optional<RootOfUnity> DirichletCharacter::value(long n) const {
    long a = n % modulus_;
    if (a < 0) a += modulus_;
    if (modulus_ == 1) return RootOfUnity::one();
    return table_[(size_t)a];
}

std::complex<double> DirichletCharacter::value_complex(long n) const {
    auto v = value(n);
    return v ? v->to_complex() : std::complex<double>(0.0, 0.0);
}

PadicNumber DirichletCharacter::value_padic(long n, const ExactInt& p, long prec) const {
    auto v = value(n);
    if (!v) return PadicNumber::zero_at(p, prec);
    return v->to_padic(p, prec);
}

bool DirichletCharacter::is_even() const {
    auto v = value(modulus_ - 1);  // -1 mod M
    if (modulus_ <= 2) return true;
    return v && v->is_one();
}

DirichletCharacter DirichletCharacter::component(long d) const {
    if (d < 1 || modulus_ % d != 0 || std::gcd(d, modulus_ / d) != 1)
        throw domain_error("component: need a coprime splitting of the modulus");
    long rest = modulus_ / d;
    std::vector<long> gens, orders;
    unit_group_generators(d, gens, orders);
    std::vector<RootOfUnity> images;
    for (long g : gens) {
        // lift g to x = g mod d, x = 1 mod rest
        long x;
        if (rest == 1) {
            x = g % modulus_;
        } else {
            ExactInt inv = inv_mod(ExactInt(rest) % d, ExactInt(d));
            ExactInt t = (ExactInt(g) - 1) * inv % d;
            if (t < 0) t += d;
            x = (long)mpz_get_si(ExactInt((1 + ExactInt(rest) * t) % modulus_).get_mpz_t());
        }
        auto v = value(x);
        if (!v) throw internal_error("component: lifted generator not a unit");
        images.push_back(*v);
    }
    return from_generator_images(d, images);
}

}  // namespace qpf
