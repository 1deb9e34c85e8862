#pragma once

#include <complex>

#include "qpf/exact.hpp"
#include "qpf/padic.hpp"

namespace qpf {

/// Element of the residue ring Z/mZ. A default-constructed value is the
/// unattached integer 0: it adopts the modulus of the other operand, so
/// that zero-filled containers work for any modulus.
class Zmod {
public:
    Zmod() : a_(0), m_(0) {}
    Zmod(const ExactInt& a, const ExactInt& mod) : a_(a), m_(mod) {
        if (mod < 0) throw domain_error("Zmod: negative modulus");
        reduce();
    }

    const ExactInt& value() const { return a_; }
    const ExactInt& modulus() const { return m_; }
    bool attached() const { return m_ != 0; }

    Zmod operator+(const Zmod& o) const { return combined(o, a_ + o.a_); }
    Zmod operator-(const Zmod& o) const { return combined(o, a_ - o.a_); }
    Zmod operator*(const Zmod& o) const { return combined(o, a_ * o.a_); }
    Zmod operator-() const { return Zmod(-a_, m_); }
    bool operator==(const Zmod& o) const {
        if (attached() && o.attached() && m_ != o.m_) return false;
        const ExactInt& m = attached() ? m_ : o.m_;
        if (m == 0) return a_ == o.a_;
        return (a_ - o.a_) % m == 0;
    }

    Zmod scaled(const ExactInt& n) const { return Zmod(a_ * n, m_); }

private:
    ExactInt a_, m_;

    void reduce() {
        if (m_ == 0) return;
        a_ %= m_;
        if (a_ < 0) a_ += m_;
    }
    Zmod combined(const Zmod& o, ExactInt raw) const {
        if (attached() && o.attached() && m_ != o.m_)
            throw domain_error("Zmod ring mismatch: mod " + to_decimal(m_) + " vs " + to_decimal(o.m_));
        return Zmod(std::move(raw), attached() ? m_ : o.m_);
    }
};

// --- uniform coefficient-ring hooks used by the series engine ---

inline bool coeff_is_zero(const ExactInt& x) { return x == 0; }
inline bool coeff_is_zero(const ExactRational& x) { return x == 0; }
inline bool coeff_is_zero(const std::complex<double>& x) { return x.real() == 0.0 && x.imag() == 0.0; }
inline bool coeff_is_zero(const PadicNumber& x) { return x.is_exact_zero(); }
inline bool coeff_is_zero(const Zmod& x) { return !x.attached() && x.value() == 0; }

/// Multiply in place by an exact integer without losing precision.
inline void coeff_scale(ExactInt& x, const ExactInt& n) { x *= n; }
inline void coeff_scale(ExactRational& x, const ExactInt& n) { x *= ExactRational(n); }
inline void coeff_scale(std::complex<double>& x, const ExactInt& n) { x *= mpz_get_d(n.get_mpz_t()); }
inline void coeff_scale(Zmod& x, const ExactInt& n) { x = x.scaled(n); }
inline void coeff_scale(PadicNumber& x, const ExactInt& n);

/// acc += x * y, fused where the backing type has one.
inline void coeff_addmul(ExactInt& acc, const ExactInt& x, const ExactInt& y) {
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}
inline void coeff_addmul(ExactRational& acc, const ExactRational& x, const ExactRational& y) {
    acc += x * y;
}
inline void coeff_addmul(std::complex<double>& acc, const std::complex<double>& x,
                         const std::complex<double>& y) {
    acc += x * y;
}
inline void coeff_addmul(Zmod& acc, const Zmod& x, const Zmod& y) { acc = acc + x * y; }
inline void coeff_addmul(PadicNumber& acc, const PadicNumber& x, const PadicNumber& y) {
    acc = acc + x * y;
}

inline void coeff_scale(PadicNumber& x, const ExactInt& n) {
    if (x.is_exact_zero()) return;
    if (n == 0) { x = PadicNumber(); return; }
    const ExactInt& p = x.prime();
    ExactInt un;
    long vn = (long)mpz_remove(un.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (x.is_zero_at_prec()) { x = PadicNumber::zero_at(p, x.abs_precision() + vn); return; }
    // exact multiplier: relative precision is preserved
    x = PadicNumber::make(p, *x.valuation() + vn, x.unit_part() * un, x.rel_precision());
}

}  // namespace qpf
