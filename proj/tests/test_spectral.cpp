#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qpf/forms.hpp"
#include "qpf/spectral.hpp"

using namespace qpf;

namespace {

using IntMatrix = SqMatrix<ExactInt>;

PadicMatrix to_padic(const IntMatrix& M, long p, long prec) {
    PadicMatrix out(M.n);
    for (long i = 0; i < M.n; ++i)
        for (long j = 0; j < M.n; ++j) out(i, j) = PadicNumber::from_int(p, M(i, j), prec);
    return out;
}

// random unimodular 2x2 = [[1,b],[a,ab+1]] and its exact inverse
std::pair<IntMatrix, IntMatrix> random_unimodular2(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-9, 9);
    long a = dist(rng), b = dist(rng);
    IntMatrix S(2), T(2);
    S(0, 0) = 1;      S(0, 1) = b;
    S(1, 0) = a;      S(1, 1) = a * b + 1;
    T(0, 0) = a * b + 1; T(0, 1) = -b;
    T(1, 0) = -a;        T(1, 1) = 1;
    return {S, T};
}

// 2x2 with eigenvalues u1 p^{e1}, u2 p^{e2}, conjugated by a random
// unimodular integer matrix so the spectrum is known exactly.
IntMatrix conjugated_diag2(std::mt19937_64& rng, long p, long e1, long u1, long e2, long u2) {
    auto [S, T] = random_unimodular2(rng);
    IntMatrix D(2);
    D(0, 0) = u1 * pow_ui(ExactInt(p), (unsigned long)e1);
    D(1, 1) = u2 * pow_ui(ExactInt(p), (unsigned long)e2);
    return S * D * T;
}

bool mat_zero_at(const PadicMatrix& A, long digits) {
    for (const auto& x : A.a) {
        if (x.is_exact_zero()) continue;
        if (!x.is_zero_at_prec()) return false;
        if (x.abs_precision() < digits) return false;
    }
    return true;
}

bool mat_eq_at(const PadicMatrix& A, const PadicMatrix& B, long digits) {
    return mat_zero_at(A - B, digits);
}

}  // namespace

TEST_CASE("fredholm series of simple matrices") {
    ExactInt p(5);
    // identity, n = 3: (1 - T)^3
    auto I3 = padic_identity(3, p, 12);
    auto P = fredholm_series(I3);
    CHECK(P.degree() == 3);
    CHECK(P.c[0].eq_at_prec(PadicNumber::from_int(p, 1, 12)));
    CHECK(P.c[1].eq_at_prec(PadicNumber::from_int(p, -3, 12)));
    CHECK(P.c[2].eq_at_prec(PadicNumber::from_int(p, 3, 12)));
    CHECK(P.c[3].eq_at_prec(PadicNumber::from_int(p, -1, 12)));

    // diag(l, m): (1 - lT)(1 - mT)
    PadicMatrix D(2);
    D(0, 0) = PadicNumber::from_int(p, 7, 12);
    D(1, 1) = PadicNumber::from_int(p, 75, 12);
    auto Q = fredholm_series(D);
    CHECK(Q.c[1].eq_at_prec(PadicNumber::from_int(p, -82, 12)));
    CHECK(Q.c[2].eq_at_prec(PadicNumber::from_int(p, 525, 12)));
}

TEST_CASE("fredholm matches the cofactor-expansion oracle") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (long n : {2L, 3L, 4L}) {
        for (int it = 0; it < 10; ++it) {
            IntMatrix M(n);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) M(i, j) = dist(rng);
            auto Mp = to_padic(M, 7, 14);
            auto P = fredholm_series(Mp);
            auto ref = oracle::fredholm_by_cofactor(Mp, PadicNumber::from_int(7, 1, 14));
            REQUIRE(P.c.size() == ref.size());
            for (size_t i = 0; i < ref.size(); ++i) CHECK(P.c[i].eq_at_prec(ref[i]));
        }
    }
}

TEST_CASE("fredholm matches the eigenvalue product for known spectra") {
    std::mt19937_64 rng(1212);
    for (long p : {2L, 7L}) {
        for (int it = 0; it < 10; ++it) {
            long u1 = 1 + (long)(rng() % 50), u2 = 1 + (long)(rng() % 50);
            if (u1 % p == 0) ++u1;
            if (u2 % p == 0) ++u2;
            long e1 = (long)(rng() % 2), e2 = e1 + 1 + (long)(rng() % 3);
            ExactInt l1 = u1 * pow_ui(ExactInt(p), (unsigned long)e1);
            ExactInt l2 = u2 * pow_ui(ExactInt(p), (unsigned long)e2);
            auto M = conjugated_diag2(rng, p, e1, u1, e2, u2);
            auto P = fredholm_series(to_padic(M, p, 30));
            // (1 - l1 T)(1 - l2 T)
            CHECK(P.c[1].eq_at_prec(PadicNumber::from_int(p, -(l1 + l2), 28)));
            CHECK(P.c[2].eq_at_prec(PadicNumber::from_int(p, l1 * l2, 28)));
        }
    }
}

TEST_CASE("oldspace matrix for Delta") {
    for (long p : {2L, 3L, 5L, 7L}) {
        auto d = delta_local_data(p);
        auto M = up_oldspace_matrix(d, 24);
        // trace = a_p, det = p^{k-1}
        CHECK((M(0, 0) + M(1, 1)).eq_at_prec(PadicNumber::from_int(p, d.a_p, 24)));
        auto det = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
        CHECK(det.eq_at_prec(PadicNumber::make(p, 11, 1, 24)));
        // fredholm series = Hecke polynomial
        auto P = fredholm_series(M);
        auto hp = hecke_polynomial_padic(d, 24);
        for (int i = 0; i < 3; ++i) CHECK(P.c[(size_t)i].eq_at_prec(hp[(size_t)i]));
    }
    // Delta, p = 2: 1 + 24T + 2048T^2
    auto M = up_oldspace_matrix(delta_local_data(2), 24);
    auto P = fredholm_series(M);
    CHECK(P.c[1].eq_at_prec(PadicNumber::from_int(2, 24, 20)));
    CHECK(P.c[2].eq_at_prec(PadicNumber::from_int(2, 2048, 20)));

    // Eisenstein: eigenvalues {1, p^{k-1}}
    auto E = up_oldspace_matrix(eisenstein_local_data(5, 6), 20);
    auto eigs = padic_eigenvalues(E);
    CHECK(eigs[0].eq_at_prec(PadicNumber::from_int(5, 1, 20)));
    CHECK(eigs[1].eq_at_prec(PadicNumber::make(5, 5, 1, 20)));
}

TEST_CASE("newton polygon") {
    // 1 + 24T + 2048T^2 at p = 2: hull (0,0),(1,3),(2,11), slopes {3, 8}
    auto np = newton_polygon({ExactInt(1), ExactInt(24), ExactInt(2048)}, ExactInt(2));
    REQUIRE(np.vertices.size() == 3);
    CHECK(np.vertices[1] == std::pair<long, long>(1, 3));
    auto sm = np.slope_multiset();
    REQUIRE(sm.size() == 2);
    CHECK(sm[0] == 3);
    CHECK(sm[1] == 8);

    // (1 - T)^n: slope 0 with multiplicity n
    auto np2 = newton_polygon({ExactInt(1), ExactInt(-3), ExactInt(3), ExactInt(-1)}, ExactInt(5));
    REQUIRE(np2.slopes.size() == 1);
    CHECK(np2.slopes[0].first == 0);
    CHECK(np2.slopes[0].second == 3);

    // 1 + T + 5T^2 at p = 5: slopes {0, 1}
    auto np3 = newton_polygon({ExactInt(1), ExactInt(1), ExactInt(5)}, ExactInt(5));
    auto sm3 = np3.slope_multiset();
    CHECK(sm3[0] == 0);
    CHECK(sm3[1] == 1);

    // zero coefficients past c_0: degenerate
    CHECK_THROWS_AS(newton_polygon({ExactInt(1), ExactInt(0), ExactInt(0)}, ExactInt(5)),
                    domain_error);

    // half-integer slope survives as a rational
    auto np4 = newton_polygon({ExactInt(1), ExactInt(0), ExactInt(3)}, ExactInt(3));
    CHECK(np4.slopes[0].first == ExactRational(1, 2));
    CHECK(np4.slopes[0].second == 2);
}

TEST_CASE("polygon slopes = eigenvalue valuations; similarity invariance") {
    std::mt19937_64 rng(31);
    for (long p : {2L, 5L}) {
        for (int it = 0; it < 25; ++it) {
            long u1 = 1 + 2 * (long)(rng() % 40), u2 = 1 + 2 * (long)(rng() % 40);
            if (u1 % p == 0) u1 += 2;
            if (u2 % p == 0) u2 += 2;
            long e1 = (long)(rng() % 3), e2 = e1 + 1 + (long)(rng() % 3);
            auto M = conjugated_diag2(rng, p, e1, u1, e2, u2);
            auto Mp = to_padic(M, p, 30);
            auto sm = newton_polygon(fredholm_series(Mp)).slope_multiset();
            REQUIRE(sm.size() == 2);
            CHECK(sm[0] == e1);
            CHECK(sm[1] == e2);

            // conjugating once more leaves the polygon alone
            auto [S, T] = random_unimodular2(rng);
            auto Mc = to_padic(S * M * T, p, 30);
            auto sm2 = newton_polygon(fredholm_series(Mc)).slope_multiset();
            CHECK(sm == sm2);
        }
    }
}

TEST_CASE("padic_poly_roots on distinct-slope polynomials") {
    // (X - 1)(X - 5)(X - 50)(X - 375) over Q_5, slopes 0,1,2,3
    ExactInt p(5);
    std::vector<ExactInt> roots = {1, 5, 50, 375};
    std::vector<ExactInt> poly = {1};
    for (const auto& r : roots) {
        std::vector<ExactInt> next(poly.size() + 1);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * r;
        }
        poly = next;
    }
    std::vector<PadicNumber> cp;
    for (const auto& c : poly) cp.push_back(PadicNumber::from_int(p, c, 24));
    auto found = padic_poly_roots(cp);
    REQUIRE(found.size() == 4);
    for (size_t i = 0; i < 4; ++i)
        CHECK(found[i].eq_at_prec(PadicNumber::from_int(p, roots[i], 20)));
}

TEST_CASE("riesz projector on a diagonal matrix") {
    ExactInt p(5);
    PadicMatrix D(2);
    D(0, 0) = PadicNumber::from_int(p, 2, 20);        // unit
    D(1, 1) = PadicNumber::from_int(p, 15, 20);       // valuation 1
    auto proj = riesz_projector(D, D(0, 0));
    CHECK(proj.pi(0, 0).eq_at_prec(PadicNumber::from_int(p, 1, 18)));
    CHECK(proj.pi(1, 1).is_zero_at_prec());
    CHECK(proj.pi(0, 1).is_zero_at_prec());
    CHECK(proj.pi(1, 0).is_zero_at_prec());

    CHECK_THROWS_AS(riesz_projector(D, PadicNumber::from_int(p, 3, 20)), domain_error);
}

TEST_CASE("riesz projector on the Delta oldspace at p = 2") {
    long prec = 40;
    auto dl = delta_local_data(2);
    auto M = up_oldspace_matrix(dl, prec);
    auto [alpha, beta] = satake_padic(dl, prec);
    CHECK(*alpha.valuation() == 3);

    auto proj = riesz_projector(M, alpha);
    // projector identities
    CHECK(mat_eq_at(proj.pi * proj.pi, proj.pi, 4));
    CHECK(mat_eq_at(M * proj.pi, proj.pi * M, 4));
    CHECK(mat_eq_at(M * proj.pi, proj.pi.scaled_by(proj.lambda), 4));

    // rank 1: columns proportional, and the image is the (1, -beta) direction
    auto e = padic_eigenvector(M, alpha);
    // M e = alpha e
    auto Me = M.apply(e);
    for (long i = 0; i < 2; ++i) CHECK((Me[(size_t)i] - alpha * e[(size_t)i]).is_zero_at_prec());
    // e proportional to (1, -beta): e[1]/e[0] = -beta
    auto ratio = e[1] / e[0];
    CHECK(ratio.eq_at_prec(-beta));

    // pi_alpha + pi_beta = Id
    auto proj2 = riesz_projector(M, beta);
    auto sum = proj.pi + proj2.pi;
    CHECK(mat_eq_at(sum, padic_identity(2, ExactInt(2), prec), 4));
}

TEST_CASE("eigen coordinate") {
    long prec = 36;
    ExactInt p(5);
    std::mt19937_64 rng(4096);
    auto M = to_padic(conjugated_diag2(rng, 5, 0, 3, 2, 7), 5, prec);
    auto eigs = padic_eigenvalues(M);
    auto lam = eigs[0];
    auto e = padic_eigenvector(M, lam);
    CHECK(eigen_coordinate(M, lam, e).eq_at_prec(PadicNumber::from_int(p, 1, 8)));

    // complementary eigenvector maps to 0
    auto e2 = padic_eigenvector(M, eigs[1]);
    CHECK(eigen_coordinate(M, lam, e2).is_zero_at_prec());

    // linearity on random vectors
    std::uniform_int_distribution<long> dist(-500, 500);
    for (int it = 0; it < 20; ++it) {
        std::vector<PadicNumber> v(2), w(2), vw(2);
        for (int i = 0; i < 2; ++i) {
            long a = dist(rng), b = dist(rng);
            v[i] = PadicNumber::from_int(p, a, prec);
            w[i] = PadicNumber::from_int(p, b, prec);
            vw[i] = PadicNumber::from_int(p, a + b, prec);
        }
        auto c1 = eigen_coordinate(M, lam, v) + eigen_coordinate(M, lam, w);
        auto c2 = eigen_coordinate(M, lam, vw);
        CHECK((c1 - c2).is_zero_at_prec());
    }
}

TEST_CASE("8x8 Kronecker spectra and projectors") {
    std::mt19937_64 rng(255);
    // the slope spread plus the Lagrange divisions eat ~50 digits here,
    // so the working precision has to be generous
    long p = 3, prec = 96;
    // valuations {0,1}, {0,2}, {0,4}: the eight products land on 0..7
    auto A = conjugated_diag2(rng, p, 0, 2, 1, 4);
    auto B = conjugated_diag2(rng, p, 0, 5, 2, 7);
    auto C = conjugated_diag2(rng, p, 0, 8, 4, 2);
    auto K = kronecker(kronecker(A, B), C);
    auto Kp = to_padic(K, p, prec);

    auto eigs = padic_eigenvalues(Kp);
    REQUIRE(eigs.size() == 8);
    for (long i = 0; i < 8; ++i) CHECK(*eigs[(size_t)i].valuation() == i);

    // sum of all eight projectors is the identity; each satisfies the algebra
    PadicMatrix sum(8);
    for (const auto& lam : eigs) {
        auto proj = riesz_projector(Kp, lam);
        CHECK(mat_eq_at(proj.pi * proj.pi, proj.pi, 4));
        CHECK(mat_eq_at(Kp * proj.pi, proj.pi.scaled_by(lam), 4));
        sum = sum + proj.pi;
    }
    CHECK(mat_eq_at(sum, padic_identity(8, ExactInt(p), prec), 4));
}
