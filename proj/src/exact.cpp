#include "qpf/exact.hpp"

#include <cstdlib>

namespace qpf {

std::string to_decimal(const ExactRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

ExactInt int_from_decimal(const std::string& s) {
    ExactInt n;
    if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
        throw domain_error("not a decimal integer: '" + s + "'");
    return n;
}

ExactRational rat_from_decimal(const std::string& s) {
    ExactRational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw domain_error("not a rational 'a' or 'a/b': '" + s + "'");
    if (q.get_den() == 0) throw domain_error("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

ExactInt inv_mod(const ExactInt& a, const ExactInt& mod) {
    ExactInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw domain_error("not invertible: " + to_decimal(a) + " mod " + to_decimal(mod));
    return r;
}

std::optional<long> padic_valuation(const ExactInt& n, const ExactInt& p) {
    if (!is_prime(p)) throw domain_error("p is not prime: " + to_decimal(p));
    if (n == 0) return std::nullopt;
    ExactInt q;
    return (long)mpz_remove(q.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::optional<long> padic_valuation(const ExactRational& q, const ExactInt& p) {
    if (q == 0) {
        if (!is_prime(p)) throw domain_error("p is not prime: " + to_decimal(p));
        return std::nullopt;
    }
    return *padic_valuation(ExactInt(q.get_num()), p) - *padic_valuation(ExactInt(q.get_den()), p);
}

ExactInt exact_divide(const ExactInt& n, const ExactInt& d, const char* what) {
    if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
        throw internal_error(std::string(what) + ": " + to_decimal(n) +
                             " not divisible by " + to_decimal(d));
    ExactInt r;
    mpz_divexact(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

std::vector<long> primes_upto(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<char> composite(bound + 1, 0);
    for (long i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (long j = i * i; j <= bound; j += i) composite[j] = 1;
    }
    return out;
}

std::vector<ExactInt> divisors(const ExactInt& n) {
    if (n <= 0) throw domain_error("divisors: need n >= 1");
    std::vector<ExactInt> small, large;
    for (ExactInt d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

long smallest_primitive_root(long p) {
    if (p == 2) return 1;
    if (!is_prime(ExactInt(p))) throw domain_error("primitive root: modulus not prime");
    // Factor p-1, then test candidates g by checking g^((p-1)/q) != 1.
    std::vector<long> qs;
    long m = p - 1;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q) continue;
        qs.push_back(q);
        while (m % q == 0) m /= q;
    }
    if (m > 1) qs.push_back(m);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : qs) {
            if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw internal_error("no primitive root found");
}

}  // namespace qpf
