#include "qpf/padic.hpp"

#include <algorithm>
#include <cmath>

namespace qpf {

namespace {

ExactInt ppow(const ExactInt& p, long e) {
    if (e < 0) throw internal_error("ppow: negative exponent");
    return pow_ui(p, (unsigned long)e);
}

void check_prime(const ExactInt& p) {
    if (!is_prime(p)) throw domain_error("p is not prime: " + to_decimal(p));
}

// Tonelli-Shanks square root modulo an odd prime; a must be a QR.
ExactInt sqrt_mod_prime(const ExactInt& a, const ExactInt& p) {
    if (a == 0) return 0;
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
    ExactInt q = p - 1;
    long s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    ExactInt z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    ExactInt m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p), r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        ExactInt tt = t;
        long i = 0;
        while (tt != 1) { tt = tt * tt % p; ++i; }
        ExactInt b = c;
        for (ExactInt j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

}  // namespace

PadicNumber PadicNumber::make(const ExactInt& p, long v, const ExactInt& u, long m) {
    if (m <= 0) return zero_at(p, v);
    PadicNumber x;
    x.kind_ = Kind::unit;
    x.p_ = p;
    x.v_ = v;
    x.m_ = m;
    ExactInt pm = ppow(p, m);
    x.u_ = u % pm;
    if (x.u_ < 0) x.u_ += pm;
    if (x.u_ == 0 || x.u_ % p == 0)
        throw internal_error("make: unit part not a unit");
    return x;
}

PadicNumber PadicNumber::zero_at(const ExactInt& p, long abs_prec) {
    check_prime(p);
    PadicNumber x;
    x.kind_ = Kind::zero;
    x.p_ = p;
    x.v_ = abs_prec;
    return x;
}

PadicNumber PadicNumber::one_like(const PadicNumber& sample) {
    if (sample.is_exact_zero()) throw domain_error("one_like: sample carries no prime");
    return make(sample.p_, 0, 1, std::max(sample.rel_precision(), 1L));
}

PadicNumber PadicNumber::from_int(const ExactInt& p, const ExactInt& n, long rel_prec) {
    check_prime(p);
    if (rel_prec < 1) throw domain_error("precision must be >= 1");
    if (n == 0) return zero_at(p, rel_prec);
    ExactInt u;
    long v = (long)mpz_remove(u.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return make(p, v, u, rel_prec);
}

PadicNumber PadicNumber::from_rational(const ExactInt& p, const ExactRational& q, long rel_prec) {
    check_prime(p);
    if (rel_prec < 1) throw domain_error("precision must be >= 1");
    if (q == 0) return zero_at(p, rel_prec);
    ExactInt nu, du;
    long vn = (long)mpz_remove(nu.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t());
    long vd = (long)mpz_remove(du.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t());
    ExactInt pm = ppow(p, rel_prec);
    ExactInt u = nu * inv_mod(du, pm) % pm;
    return make(p, vn - vd, u, rel_prec);
}

PadicNumber PadicNumber::from_rational_abs(const ExactInt& p, const ExactRational& q, long abs_prec) {
    if (q == 0) return zero_at(p, abs_prec);
    auto v = *padic_valuation(q, p);
    if (v >= abs_prec) return zero_at(p, abs_prec);
    return from_rational(p, q, abs_prec - v);
}

const ExactInt& PadicNumber::prime() const {
    if (is_exact_zero()) throw domain_error("exact zero carries no prime");
    return p_;
}

std::optional<long> PadicNumber::valuation() const {
    if (kind_ == Kind::unit) return v_;
    return std::nullopt;
}

const ExactInt& PadicNumber::unit_part() const {
    if (kind_ != Kind::unit) throw domain_error("zero has no unit part");
    return u_;
}

long PadicNumber::rel_precision() const {
    switch (kind_) {
        case Kind::exact_zero: return LONG_MAX;
        case Kind::zero: return 0;
        default: return m_;
    }
}

long PadicNumber::abs_precision() const {
    switch (kind_) {
        case Kind::exact_zero: return LONG_MAX;
        case Kind::zero: return v_;
        default: return v_ + m_;
    }
}

ExactInt PadicNumber::integer_rep() const {
    if (kind_ != Kind::unit) return 0;
    if (v_ < 0) throw domain_error("integer_rep: negative valuation");
    return u_ * ppow(p_, v_);
}

ExactRational PadicNumber::rational_rep() const {
    if (kind_ != Kind::unit) throw domain_error("rational_rep of zero");
    ExactRational r(u_);
    if (v_ >= 0) r *= ExactRational(ppow(p_, v_));
    else r /= ExactRational(ppow(p_, -v_));
    return r;
}

void PadicNumber::check_same_prime(const PadicNumber& a, const PadicNumber& b) {
    if (a.p_ != b.p_)
        throw domain_error("prime mismatch: " + to_decimal(a.p_) + " vs " + to_decimal(b.p_));
}

PadicNumber PadicNumber::operator-() const {
    if (kind_ != Kind::unit) return *this;
    return make(p_, v_, ppow(p_, m_) - u_, m_);
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    if (is_exact_zero()) return o;
    if (o.is_exact_zero()) return *this;
    check_same_prime(*this, o);
    if (kind_ == Kind::zero && o.kind_ == Kind::zero)
        return zero_at(p_, std::min(v_, o.v_));
    if (kind_ == Kind::zero || o.kind_ == Kind::zero) {
        const PadicNumber& z = (kind_ == Kind::zero) ? *this : o;
        const PadicNumber& x = (kind_ == Kind::zero) ? o : *this;
        if (x.v_ >= z.v_) return zero_at(p_, z.v_);
        return make(p_, x.v_, x.u_, std::min(x.m_, z.v_ - x.v_));
    }
    long w = std::min(v_, o.v_);
    long N = std::min(v_ + m_, o.v_ + o.m_);
    long L = N - w;
    if (L <= 0) return zero_at(p_, N);
    ExactInt pl = ppow(p_, L);
    ExactInt s = (u_ * ppow(p_, v_ - w) + o.u_ * ppow(p_, o.v_ - w)) % pl;
    if (s < 0) s += pl;
    if (s == 0) return zero_at(p_, N);
    ExactInt su;
    long sv = (long)mpz_remove(su.get_mpz_t(), s.get_mpz_t(), p_.get_mpz_t());
    if (w + sv >= N) return zero_at(p_, N);
    return make(p_, w + sv, su, N - (w + sv));
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const { return *this + (-o); }

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    if (is_exact_zero() || o.is_exact_zero()) return PadicNumber();
    check_same_prime(*this, o);
    if (kind_ == Kind::zero && o.kind_ == Kind::zero)
        return zero_at(p_, v_ + o.v_);
    if (kind_ == Kind::zero) return zero_at(p_, v_ + o.v_);
    if (o.kind_ == Kind::zero) return zero_at(p_, o.v_ + v_);
    long m = std::min(m_, o.m_);
    return make(p_, v_ + o.v_, (u_ * o.u_) % ppow(p_, m), m);
}

PadicNumber PadicNumber::inverse() const {
    if (kind_ == Kind::exact_zero) throw domain_error("inverse of exact zero");
    if (kind_ == Kind::zero)
        throw precision_error("inverse of zero-at-precision O(p^" + std::to_string(v_) + ")");
    ExactInt pm = ppow(p_, m_);
    return make(p_, -v_, inv_mod(u_, pm), m_);
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const {
    if (o.kind_ == Kind::exact_zero) throw domain_error("division by exact zero");
    if (o.kind_ == Kind::zero)
        throw precision_error("division by zero-at-precision O(p^" + std::to_string(o.v_) + ")");
    if (is_exact_zero()) return PadicNumber();
    check_same_prime(*this, o);
    if (kind_ == Kind::zero) return zero_at(p_, v_ - o.v_);
    return *this * o.inverse();
}

PadicNumber PadicNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (kind_ == Kind::exact_zero) {
        if (e == 0) throw domain_error("0^0 with no prime context");
        return PadicNumber();
    }
    if (e == 0) return make(p_, 0, 1, std::max(rel_precision(), 1L));
    if (kind_ == Kind::zero) {
        // (O(p^N))^e subset O(p^{Ne})
        return zero_at(p_, v_ * e);
    }
    PadicNumber acc = make(p_, 0, 1, m_);
    PadicNumber base = *this;
    long k = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

PadicNumber PadicNumber::truncated(long rel_prec) const {
    if (kind_ != Kind::unit || rel_prec >= m_) return *this;
    if (rel_prec <= 0) return zero_at(p_, v_);
    return make(p_, v_, u_ % ppow(p_, rel_prec), rel_prec);
}

PadicNumber PadicNumber::sqrt() const {
    if (kind_ == Kind::exact_zero) return *this;
    if (kind_ == Kind::zero) return zero_at(p_, (v_ + 1) / 2);
    if (v_ % 2 != 0)
        throw not_in_ground_field("sqrt: odd valuation " + std::to_string(v_));
    if (p_ == 2) {
        if (m_ < 3)
            throw precision_error("2-adic sqrt needs >= 3 digits to certify a square");
        if (u_ % 8 != 1)
            throw not_in_ground_field("2-adic unit not a square (not 1 mod 8)");
        // Bit-by-bit lift: if y^2 = u mod 2^k fails mod 2^{k+1}, flipping
        // bit k-1 of y fixes it (valid for k >= 3 since 2^{2k-2} = 0 mod 2^{k+1}).
        ExactInt y = 1;
        for (long k = 3; k < m_; ++k) {
            ExactInt r = (y * y - u_) % ppow(p_, k + 1);
            if (r < 0) r += ppow(p_, k + 1);
            if (r != 0) y += ppow(p_, k - 1);
        }
        // y determined mod 2^{m-1} up to sign; pin the sign by y = 1 mod 4.
        long mr = m_ - 1;
        ExactInt modr = ppow(p_, mr);
        y %= modr;
        if (y % 4 != 1) y = modr - y;
        return make(p_, v_ / 2, y, mr);
    }
    if (mpz_legendre(u_.get_mpz_t(), p_.get_mpz_t()) != 1)
        throw not_in_ground_field("unit is not a quadratic residue mod " + to_decimal(p_));
    ExactInt mod = ppow(p_, m_);
    ExactInt y = sqrt_mod_prime(u_ % p_, p_);
    // Hensel: simple root of y^2 - u mod p, derivative 2y is a unit.
    long known = 1;
    while (known < m_) {
        ExactInt d = inv_mod(2 * y, mod);
        y = (y - (y * y - u_) * d) % mod;
        if (y < 0) y += mod;
        known *= 2;
    }
    // canonical choice: least digit in [1, (p-1)/2]
    if (y % p_ > (p_ - 1) / 2) y = mod - y;
    return make(p_, v_ / 2, y, m_);
}

std::string PadicNumber::to_string() const {
    switch (kind_) {
        case Kind::exact_zero: return "0";
        case Kind::zero: return "O(" + to_decimal(p_) + "^" + std::to_string(v_) + ")";
        default: break;
    }
    std::string s = to_decimal(u_);
    if (v_ != 0) s = to_decimal(p_) + "^" + std::to_string(v_) + "*" + s;
    return s + " + O(" + to_decimal(p_) + "^" + std::to_string(v_ + m_) + ")";
}

std::vector<ExactInt> PadicNumber::unit_digits() const {
    if (kind_ != Kind::unit) return {};
    std::vector<ExactInt> out;
    ExactInt u = u_;
    for (long i = 0; i < m_; ++i) {
        out.push_back(u % p_);
        u /= p_;
    }
    return out;
}

PadicNumber teichmuller(const ExactInt& u, const ExactInt& p, long m) {
    check_prime(p);
    if (m < 1) throw domain_error("precision must be >= 1");
    if (u % p == 0) throw domain_error("teichmuller: argument divisible by p");
    ExactInt pm = pow_ui(p, (unsigned long)m);
    ExactInt x = u % pm;
    if (x < 0) x += pm;
    // x -> x^p gains one digit of agreement with omega(u) per step.
    for (long i = 0; i < m + 1; ++i) {
        ExactInt nx = pow_mod(x, p, pm);
        if (nx == x) break;
        x = nx;
    }
    return PadicNumber::make(p, 0, x, m);
}

namespace {

// Common core: sum of series with exact rational terms, reduced mod p^N.
PadicNumber sum_terms_mod(const ExactInt& p, const std::vector<ExactRational>& terms, long N) {
    ExactRational s = 0;
    for (const auto& t : terms) s += t;
    return PadicNumber::from_rational_abs(p, s, N);
}

}  // namespace

PadicNumber padic_log(const PadicNumber& z) {
    if (z.is_exact_zero()) throw domain_error("log of zero");
    const ExactInt& p = z.prime();
    PadicNumber zm1 = z - PadicNumber::make(p, 0, 1, std::max(z.rel_precision(), 1L));
    long N = zm1.abs_precision();
    if (zm1.is_zero_at_prec()) return PadicNumber::zero_at(p, N);
    long t = *zm1.valuation();
    long tmin = (p == 2) ? 2 : 1;
    if (t < tmin)
        throw domain_error("log domain: need z = 1 mod p" + std::string(p == 2 ? "^2" : ""));
    ExactInt X = zm1.integer_rep();
    double logp = std::log(mpz_get_d(p.get_mpz_t()));
    std::vector<ExactRational> terms;
    ExactInt Xn = 1;
    for (long n = 1;; ++n) {
        if ((double)n * t - std::log((double)n) / logp >= (double)N && n > 1) break;
        Xn *= X;
        ExactRational term(Xn);
        term /= ExactRational((n % 2 == 1) ? ExactInt(n) : ExactInt(-n));
        terms.push_back(term);
    }
    return sum_terms_mod(p, terms, N);
}

PadicNumber padic_exp(const PadicNumber& z) {
    if (z.is_exact_zero()) throw domain_error("exp needs a prime context; pass zero_at instead");
    const ExactInt& p = z.prime();
    long N = z.abs_precision();
    if (z.is_zero_at_prec())
        return PadicNumber::make(p, 0, 1, std::max(N, 1L));
    long t = *z.valuation();
    long tmin = (p == 2) ? 2 : 1;
    if (t < tmin)
        throw domain_error("exp domain: need v_p(z) >= " + std::to_string(tmin));
    ExactInt X = z.integer_rep();
    double pm1 = mpz_get_d(p.get_mpz_t()) - 1.0;
    std::vector<ExactRational> terms;
    terms.emplace_back(1);
    ExactInt Xn = 1, fact = 1;
    for (long n = 1;; ++n) {
        if ((double)n * t - (double)n / pm1 >= (double)N && n > 1) break;
        Xn *= X;
        fact *= n;
        ExactRational term(Xn);
        term /= ExactRational(fact);
        terms.push_back(term);
    }
    return sum_terms_mod(p, terms, N);
}

namespace {

// Hensel lift of the unit root of Y^2 + B*Y + C (B a unit, v(C) >= 1),
// all coefficients integer representatives mod p^L.
ExactInt lift_unit_quadratic_root(const ExactInt& p, const ExactInt& B, const ExactInt& C, long L) {
    ExactInt mod = pow_ui(p, (unsigned long)L);
    ExactInt y = (-B) % mod;
    if (y < 0) y += mod;
    for (long i = 0; i < L + 2; ++i) {
        ExactInt f = (y * y + B * y + C) % mod;
        if (f < 0) f += mod;
        if (f == 0) break;
        ExactInt fp = (2 * y + B) % mod;
        y = (y - f * inv_mod(fp, mod)) % mod;
        if (y < 0) y += mod;
    }
    return y;
}

}  // namespace

std::pair<PadicNumber, PadicNumber> quad_roots_padic(const PadicNumber& b, const PadicNumber& c) {
    if (b.is_exact_zero() && c.is_exact_zero())
        throw domain_error("quad_roots: no prime context");
    const ExactInt p = b.is_exact_zero() ? c.prime() : b.prime();
    if (!b.is_exact_zero() && !c.is_exact_zero() && b.prime() != c.prime())
        throw domain_error("quad_roots: prime mismatch");

    // c = 0: X(X + b).
    if (c.is_zero_at_prec()) {
        long Nc = c.is_exact_zero() ? LONG_MAX : c.abs_precision();
        PadicNumber r0 = c.is_exact_zero() ? PadicNumber() : PadicNumber::zero_at(p, (Nc + 1) / 2);
        return {r0, -b};
    }
    long vc = *c.valuation();

    bool distinct_slopes = false;
    if (!b.is_zero_at_prec()) {
        distinct_slopes = 2 * (*b.valuation()) < vc;
    } else {
        // b indistinguishable from 0: can still certify distinct slopes never;
        // fall through to the discriminant route.
    }

    if (distinct_slopes) {
        long vb = *b.valuation();
        // Scale X = p^vb Y: Y^2 + (b/p^vb) Y + c/p^{2vb}, the linear term a unit.
        PadicNumber Bu = b / PadicNumber::make(p, vb, 1, b.rel_precision());
        PadicNumber Cu = c / PadicNumber::make(p, 2 * vb, 1, c.rel_precision());
        long L = std::min(Bu.abs_precision(), Cu.abs_precision());
        ExactInt y = lift_unit_quadratic_root(p, Bu.integer_rep(),
                                              Cu.integer_rep() % pow_ui(p, (unsigned long)L), L);
        PadicNumber alpha = PadicNumber::make(p, vb, y, L);
        PadicNumber beta = c / alpha;
        return {alpha, beta};
    }

    // Equal slopes: both roots of valuation vc/2. Discriminant route.
    PadicNumber four = PadicNumber::from_int(p, 4, std::max({b.rel_precision() == LONG_MAX ? 1L : b.rel_precision(), c.rel_precision(), 1L}));
    PadicNumber disc = b * b - four * c;
    if (disc.is_zero_at_prec()) {
        // Double root -b/2 known to roughly half the digits.
        PadicNumber two = PadicNumber::from_int(p, 2, std::max(b.rel_precision(), 1L));
        PadicNumber r = -(b / two);
        long half = disc.is_exact_zero() ? LONG_MAX / 2 : disc.abs_precision() / 2;
        if (!r.is_exact_zero() && !r.is_zero_at_prec() && r.abs_precision() > half)
            r = r.truncated(std::max(half - *r.valuation(), 1L));
        return {r, r};
    }
    if (*disc.valuation() % 2 != 0)
        throw not_in_ground_field("discriminant has odd valuation");
    PadicNumber s = disc.sqrt();
    PadicNumber two = PadicNumber::from_int(p, 2, std::max({b.is_zero_at_prec() ? 1L : b.rel_precision(), s.rel_precision(), 1L}));
    PadicNumber r1 = ((-b) + s) / two;
    PadicNumber r2 = ((-b) - s) / two;
    // order: smaller valuation first; ties by unit part.
    auto key = [](const PadicNumber& x) {
        return x.is_zero_at_prec() ? LONG_MAX : *x.valuation();
    };
    if (key(r2) < key(r1)) std::swap(r1, r2);
    if (key(r1) == key(r2) && !r1.is_zero_at_prec() && !r2.is_zero_at_prec() &&
        r2.unit_part() < r1.unit_part())
        std::swap(r1, r2);
    return {r1, r2};
}

}  // namespace qpf
