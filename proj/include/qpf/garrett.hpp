#pragma once

#include <array>
#include <complex>

#include "qpf/dirichlet.hpp"
#include "qpf/hecke.hpp"

namespace qpf {

/// Weight triple, stored sorted k1 >= k2 >= k3.
struct TripleWeights {
    long k1, k2, k3;
    TripleWeights(long a, long b, long c);
};

/// k1 >= k2 >= k3 >= 2 and k1 <= k2 + k3 - 2.
bool is_balanced(const TripleWeights& w);

/// Critical strip s = k1 .. k2+k3-2 with its center of symmetry
/// (k1+k2+k3-2)/2; empty (with a diagnostic) when the weights are unbalanced.
struct CriticalSet {
    long lo = 0, hi = -1;  // empty when hi < lo
    ExactRational center;
    std::string diagnostic;

    bool empty() const { return hi < lo; }
    long size() const { return empty() ? 0 : hi - lo + 1; }
    bool contains(long s) const { return !empty() && lo <= s && s <= hi; }
    std::vector<long> values() const;
};

CriticalSet critical_values(const TripleWeights& w);

/// s -> k1 + k2 + k3 - 2 - s.
long functional_eq_reflect(const TripleWeights& w, long s);

/// H = floor(2 (s1+s2+s3)) + 1 for nonnegative rational slopes.
long admissibility_H(const ExactRational& s1, const ExactRational& s2, const ExactRational& s3);

/// Local data of a triple at a common prime p away from the levels,
/// plus the twisting value chi(p).
struct TripleLocalData {
    HeckeLocalData f1, f2, f3;
    RootOfUnity chi_p;

    TripleLocalData(HeckeLocalData a, HeckeLocalData b, HeckeLocalData c,
                    RootOfUnity chi = RootOfUnity::one());
    long p() const { return f1.p; }
    TripleWeights weights() const { return {f1.weight, f2.weight, f3.weight}; }
};

enum class RingTag { exact, cplx, padic };

/// The inverse local factor prod_eta (1 - alpha_1^{(eta(1))} alpha_2^{(eta(2))}
/// alpha_3^{(eta(3))} X) over the 8 maps eta: {1,2,3} -> {1,2}, expanded
/// through power sums of the Satake pairs, so only (a_p, psi(p) p^{k-1})
/// enter and no individual root is ever needed.
struct Degree8Factor {
    RingTag ring;
    long p = 0;
    std::vector<ExactRational> exact;            // ring == exact
    std::vector<std::complex<double>> cplx;      // ring == cplx
    std::vector<PadicNumber> padic;              // ring == padic

    long degree() const;
};

Degree8Factor degree8_euler_factor(const TripleLocalData& d, RingTag ring, long padic_prec = 24);

/// Exact expansion straight from the pair data a_j = alpha_j + beta_j,
/// b_j = alpha_j beta_j (coefficients depend on nothing else).
std::vector<ExactRational> degree8_exact_from_pairs(const std::array<ExactRational, 3>& a,
                                                    const std::array<ExactRational, 3>& b);

/// Evaluate P(x) for the complex embedding of the factor.
std::complex<double> degree8_eval_complex(const Degree8Factor& f, std::complex<double> x);

struct LPartial {
    std::complex<double> value;
    double tail_bound;          // crude bound on the omitted tail (inf if divergent region)
    bool convergence_warning;   // s outside the guaranteed absolute-convergence region
};

/// Partial sum of L(f, s, chi) = sum chi(n) a_n n^{-s} to n_terms, with a
/// tail bound from |a_n| <= n^{(k+1)/2}. Computes even in the divergent
/// region but raises the warning flag.
LPartial dirichlet_L_partial(const std::vector<ExactInt>& a, const DirichletCharacter& chi,
                             std::complex<double> s, long n_terms, long weight);

/// Partial Euler product prod_{p <= P} 1 / P_p(chi(p) p^{-s}) over the given
/// local data (one entry per prime). Per-prime factors are independent and
/// evaluated in parallel; the reduction order is fixed by the prime order.
LPartial triple_L_partial(const std::vector<TripleLocalData>& locals, std::complex<double> s);

/// Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s) (Lanczos approximation).
std::complex<double> gamma_C(std::complex<double> s);

/// Gamma_C(s) Gamma_C(s-k3+1) Gamma_C(s-k2+1) Gamma_C(s-k1+1); a pole of any
/// factor raises domain_error naming the factor.
std::complex<double> gamma_normalization(const TripleWeights& w, std::complex<double> s);

}  // namespace qpf
