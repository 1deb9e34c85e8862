#pragma once

#include <climits>
#include <optional>
#include <string>
#include <utility>

#include "qpf/exact.hpp"

namespace qpf {

/// Precision-tracked element of Q_p.
///
/// Three states:
///   unit        x = p^v * u with u a unit known modulo p^m  (relative
///               precision m, absolute precision v + m)
///   zero        "zero at precision N": all that is known is v_p(x) >= N
///   exact_zero  the default-constructed additive zero, attached to no
///               prime; it combines with any operand and never loses
///               information
///
/// Arithmetic propagates precision by the worst-case rules: min of input
/// precisions, adjusted by the valuation drop in cancelling additions.
/// Operations never report more precision than the inputs justify.
class PadicNumber {
public:
    enum class Kind { exact_zero, zero, unit };

    PadicNumber() = default;

    /// n at relative precision m (n = 0 gives zero at absolute precision m).
    static PadicNumber from_int(const ExactInt& p, const ExactInt& n, long rel_prec);
    static PadicNumber from_rational(const ExactInt& p, const ExactRational& q, long rel_prec);
    /// Rational known exactly, truncated to absolute precision abs_prec.
    static PadicNumber from_rational_abs(const ExactInt& p, const ExactRational& q, long abs_prec);
    static PadicNumber zero_at(const ExactInt& p, long abs_prec);
    static PadicNumber one_like(const PadicNumber& sample);
    /// p^v * u with u already a unit; u is reduced modulo p^m.
    static PadicNumber make(const ExactInt& p, long v, const ExactInt& u, long m);

    Kind kind() const { return kind_; }
    bool is_exact_zero() const { return kind_ == Kind::exact_zero; }
    /// True for both zero states: indistinguishable from 0 at the carried precision.
    bool is_zero_at_prec() const { return kind_ != Kind::unit; }

    const ExactInt& prime() const;
    /// nullopt encodes "valuation >= absolute precision" (and +infinity for exact zero).
    std::optional<long> valuation() const;
    /// Unit part in [1, p^m), coprime to p. Throws on zero states.
    const ExactInt& unit_part() const;
    long rel_precision() const;  // LONG_MAX for exact zero
    long abs_precision() const;  // LONG_MAX for exact zero

    /// Integer representative of x mod p^{abs_precision}, i.e. p^v * u.
    ExactInt integer_rep() const;
    /// x as rational p^v * u (v may be negative). Throws on zero states.
    ExactRational rational_rep() const;

    PadicNumber operator-() const;
    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const;
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator/(const PadicNumber& o) const;
    PadicNumber inverse() const;
    PadicNumber pow(long e) const;

    /// Square root by Hensel lifting. p odd: requires even valuation and the
    /// unit a quadratic residue. p = 2: requires unit = 1 mod 8 (relative
    /// precision >= 3) and returns one digit less. The root with smallest
    /// least-significant digit is returned; the other root is its negative.
    PadicNumber sqrt() const;

    /// Truncate to at most rel_prec digits of unit.
    PadicNumber truncated(long rel_prec) const;

    /// x == y at the shared precision: x - y indistinguishable from zero.
    bool eq_at_prec(const PadicNumber& o) const { return (*this - o).is_zero_at_prec(); }

    std::string to_string() const;
    /// Base-p digits of the unit part, least significant first (size m).
    std::vector<ExactInt> unit_digits() const;

private:
    Kind kind_ = Kind::exact_zero;
    ExactInt p_;
    long v_ = 0;  // valuation (unit); absolute precision bound (zero)
    ExactInt u_;
    long m_ = 0;

    static void check_same_prime(const PadicNumber& a, const PadicNumber& b);
};

/// Teichmuller lift: the unique (p-1)-th root of unity congruent to u mod p,
/// computed to precision m. Rejects u divisible by p.
PadicNumber teichmuller(const ExactInt& u, const ExactInt& p, long m);

/// Iwasawa logarithm on 1 + pZ_p (p odd) / 1 + 4Z_2.
PadicNumber padic_log(const PadicNumber& z);

/// Exponential on pZ_p (p odd) / 4Z_2.
PadicNumber padic_exp(const PadicNumber& z);

/// Roots of X^2 + bX + c over Q_p, smaller valuation first (valuation ties
/// broken by lexicographic order on unit parts). Throws not_in_ground_field
/// when the roots require an extension of Q_p.
std::pair<PadicNumber, PadicNumber> quad_roots_padic(const PadicNumber& b, const PadicNumber& c);

}  // namespace qpf
