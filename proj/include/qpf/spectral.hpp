#pragma once

#include <functional>
#include <vector>

#include "qpf/hecke.hpp"
#include "qpf/padic.hpp"

namespace qpf {

/// Dense square matrix over a coefficient ring, row major.
template <class R>
struct SqMatrix {
    long n = 0;
    std::vector<R> a;

    SqMatrix() = default;
    explicit SqMatrix(long dim) : n(dim), a((size_t)(dim * dim)) {}

    const R& operator()(long i, long j) const { return a[(size_t)(i * n + j)]; }
    R& operator()(long i, long j) { return a[(size_t)(i * n + j)]; }

    SqMatrix operator+(const SqMatrix& o) const {
        check_dim(o);
        SqMatrix r(n);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }
    SqMatrix operator-(const SqMatrix& o) const {
        check_dim(o);
        SqMatrix r(n);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }
    SqMatrix operator*(const SqMatrix& o) const {
        check_dim(o);
        SqMatrix r(n);
        for (long i = 0; i < n; ++i)
            for (long k = 0; k < n; ++k)
                for (long j = 0; j < n; ++j)
                    r(i, j) = r(i, j) + (*this)(i, k) * o(k, j);
        return r;
    }
    SqMatrix scaled_by(const R& s) const {
        SqMatrix r(n);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
        return r;
    }
    std::vector<R> apply(const std::vector<R>& v) const {
        if ((long)v.size() != n) throw domain_error("matrix apply: dimension mismatch");
        std::vector<R> out((size_t)n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                out[(size_t)i] = out[(size_t)i] + (*this)(i, j) * v[(size_t)j];
        return out;
    }

    void check_dim(const SqMatrix& o) const {
        if (n != o.n) throw domain_error("matrix dimension mismatch");
    }
};

template <class R>
SqMatrix<R> kronecker(const SqMatrix<R>& A, const SqMatrix<R>& B) {
    SqMatrix<R> K(A.n * B.n);
    for (long i = 0; i < A.n; ++i)
        for (long j = 0; j < A.n; ++j)
            for (long k = 0; k < B.n; ++k)
                for (long l = 0; l < B.n; ++l)
                    K(i * B.n + k, j * B.n + l) = A(i, j) * B(k, l);
    return K;
}

/// Characteristic polynomial det(X I - M) by the Berkowitz algorithm
/// (division free, so it is exact over any commutative coefficient ring).
/// Returned lowest degree first: c[0] + c[1] X + ... + c[n] X^n, c[n] = 1.
template <class R>
std::vector<R> charpoly(const SqMatrix<R>& M, const R& one) {
    const long n = M.n;
    if (n == 0) return {one};
    // p_r = T_r p_{r-1}; vectors are stored highest degree first.
    std::vector<R> poly{one};
    for (long r = 1; r <= n; ++r) {
        // first column of the Toeplitz factor:
        // [1, -M[r-1][r-1], -(Row * Col), -(Row * A * Col), ...]
        std::vector<R> col((size_t)(r + 1));
        col[0] = one;
        col[1] = R() - M(r - 1, r - 1);
        std::vector<R> w((size_t)(r - 1));
        for (long i = 0; i < r - 1; ++i) w[(size_t)i] = M(i, r - 1);
        for (long t = 2; t <= r; ++t) {
            R dot{};
            for (long i = 0; i < r - 1; ++i) dot = dot + M(r - 1, i) * w[(size_t)i];
            col[(size_t)t] = R() - dot;
            if (t == r) break;
            std::vector<R> w2((size_t)(r - 1));
            for (long i = 0; i < r - 1; ++i) {
                R acc{};
                for (long j = 0; j < r - 1; ++j) acc = acc + M(i, j) * w[(size_t)j];
                w2[(size_t)i] = acc;
            }
            w = std::move(w2);
        }
        std::vector<R> next((size_t)(r + 1));
        for (long i = 0; i <= r; ++i) {
            // col[0] = 1 is applied as the identity so that exact inputs
            // never pass through a finite-precision multiplication
            R acc = (i < (long)poly.size()) ? poly[(size_t)i] : R();
            for (long j = 0; j < (long)poly.size(); ++j) {
                long shift = i - j;
                if (shift < 1 || shift > r) continue;
                acc = acc + col[(size_t)shift] * poly[(size_t)j];
            }
            next[(size_t)i] = acc;
        }
        poly = std::move(next);
    }
    std::reverse(poly.begin(), poly.end());
    return poly;
}

/// det(Id - T M): coefficient of T^j is the X^{n-j} coefficient of the
/// characteristic polynomial. Works over any ring; c[0] = 1.
template <class R>
std::vector<R> fredholm_coeffs(const SqMatrix<R>& M, const R& one) {
    auto cp = charpoly(M, one);
    std::reverse(cp.begin(), cp.end());
    return cp;
}

// --- p-adic specializations ---

using PadicMatrix = SqMatrix<PadicNumber>;

/// All entries must share one prime; throws domain_error otherwise.
/// Entries that are exact zeros are permitted (they carry no prime).
const ExactInt& matrix_prime(const PadicMatrix& M);

/// Fredholm / reversed characteristic series det(Id - T U) of a finite
/// truncation of the Atkin operator. c[0] = 1 exactly.
struct FredholmSeries {
    std::vector<PadicNumber> c;
    long degree() const { return (long)c.size() - 1; }
};

FredholmSeries fredholm_series(const PadicMatrix& M);

/// Lower convex hull of {(i, v_p(c_i))}; slopes ascend left to right and
/// give the valuations of the reciprocal roots.
struct NewtonPolygon {
    std::vector<std::pair<long, long>> vertices;        // (index, valuation)
    std::vector<std::pair<ExactRational, long>> slopes; // (slope, multiplicity)

    std::vector<ExactRational> slope_multiset() const;
    std::string render_text() const;
    std::string render_svg() const;
};

/// From explicit finite valuations (nullopt = +infinity, skipped).
NewtonPolygon newton_polygon(const std::vector<std::optional<long>>& vals);
NewtonPolygon newton_polygon(const FredholmSeries& P);
NewtonPolygon newton_polygon(const std::vector<ExactInt>& poly, const ExactInt& p);

/// U_p on the oldspace basis (f(z), f(pz)): U f = a_p f - psi(p) p^{k-1} V f,
/// U(Vf) = f. Its reversed characteristic polynomial is the Hecke polynomial.
PadicMatrix up_oldspace_matrix(const HeckeLocalData& d, long prec);

/// All roots of a monic-normalizable p-adic polynomial whose Newton polygon
/// has pairwise distinct integer slopes (each a simple root found by Hensel
/// lifting on its own segment); degree 2 also supports the equal-slope case
/// through the quadratic formula. Coefficients lowest degree first.
std::vector<PadicNumber> padic_poly_roots(const std::vector<PadicNumber>& coeffs);

/// Eigenvalues of M via its characteristic polynomial (same restrictions).
std::vector<PadicNumber> padic_eigenvalues(const PadicMatrix& M);

struct RieszProjector {
    PadicMatrix pi;
    PadicNumber lambda;
};

/// Spectral projector onto the lambda-eigenline by Lagrange interpolation
/// over the spectrum: pi = prod_{mu != lambda} (M - mu I)/(lambda - mu).
/// Requires lambda simple and all eigenvalues in Q_p; refuses to return
/// entries with fewer than `min_digits` correct digits.
RieszProjector riesz_projector(const PadicMatrix& M, const PadicNumber& lambda,
                               long min_digits = 4);

/// Coefficient of the normalized lambda-eigenvector in pi_lambda(v).
PadicNumber eigen_coordinate(const PadicMatrix& M, const PadicNumber& lambda,
                             const std::vector<PadicNumber>& v, long min_digits = 4);

/// The lambda-eigenvector normalized so that its first minimal-valuation
/// coordinate equals 1 (the normalization eigen_coordinate refers to).
std::vector<PadicNumber> padic_eigenvector(const PadicMatrix& M, const PadicNumber& lambda,
                                           long min_digits = 4);

/// Identity at the precision of a sample entry.
PadicMatrix padic_identity(long n, const ExactInt& p, long prec);

}  // namespace qpf
