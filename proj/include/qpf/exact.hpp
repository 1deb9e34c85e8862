#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "qpf/error.hpp"

namespace qpf {

/// Arbitrary-precision signed integer. Exact, no rounding anywhere.
using ExactInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP canonical form).
using ExactRational = mpq_class;

inline std::string to_decimal(const ExactInt& n) { return n.get_str(10); }

/// Renders "a" when the denominator is 1, "a/b" otherwise.
std::string to_decimal(const ExactRational& q);

ExactInt int_from_decimal(const std::string& s);
ExactRational rat_from_decimal(const std::string& s);

inline ExactInt pow_ui(const ExactInt& base, unsigned long e) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline ExactInt pow_mod(const ExactInt& base, const ExactInt& e, const ExactInt& mod) {
    ExactInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r;
}

/// Modular inverse; throws domain_error when gcd(a, mod) != 1.
ExactInt inv_mod(const ExactInt& a, const ExactInt& mod);

inline bool is_prime(const ExactInt& p) {
    return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 32) != 0;
}

/// Largest e with p^e | n; nullopt encodes v_p(0) = +infinity.
/// Throws domain_error when p is not prime.
std::optional<long> padic_valuation(const ExactInt& n, const ExactInt& p);

/// Valuation of a rational: v(num) - v(den).
std::optional<long> padic_valuation(const ExactRational& q, const ExactInt& p);

inline ExactInt exact_floor(const ExactRational& q) {
    ExactInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// Exact quotient n / d; throws internal_error when d does not divide n.
/// Used where a theorem guarantees divisibility (1728, 691, ...).
ExactInt exact_divide(const ExactInt& n, const ExactInt& d, const char* what);

std::vector<long> primes_upto(long bound);

/// Divisors of n in increasing order (trial division; desk-scale n).
std::vector<ExactInt> divisors(const ExactInt& n);

/// Smallest primitive root modulo an odd prime p.
long smallest_primitive_root(long p);

}  // namespace qpf
