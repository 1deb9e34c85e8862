#include "qpf/spectral.hpp"

#include <algorithm>
#include <cstdio>

namespace qpf {

const ExactInt& matrix_prime(const PadicMatrix& M) {
    const ExactInt* p = nullptr;
    for (const auto& x : M.a) {
        if (x.is_exact_zero()) continue;
        if (!p) p = &x.prime();
        else if (*p != x.prime()) throw domain_error("matrix entries mix primes");
    }
    if (!p) throw domain_error("matrix has no attached prime (all exact zeros)");
    return *p;
}

FredholmSeries fredholm_series(const PadicMatrix& M) {
    const ExactInt& p = matrix_prime(M);
    long prec = 1;
    for (const auto& x : M.a)
        if (!x.is_zero_at_prec()) prec = std::max(prec, x.rel_precision());
    PadicNumber one = PadicNumber::from_int(p, 1, prec);
    FredholmSeries out;
    out.c = fredholm_coeffs(M, one);
    // det(Id - 0*M) = 1 exactly
    out.c[0] = one;
    return out;
}

NewtonPolygon newton_polygon(const std::vector<std::optional<long>>& vals) {
    std::vector<std::pair<long, long>> pts;
    for (long i = 0; i < (long)vals.size(); ++i)
        if (vals[(size_t)i]) pts.emplace_back(i, *vals[(size_t)i]);
    if (pts.size() < 2)
        throw domain_error("degenerate polygon: fewer than two finite coefficients");
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto [x1, y1] = hull[hull.size() - 2];
            auto [x2, y2] = hull[hull.size() - 1];
            // pop unless (x2,y2) lies strictly below segment (x1,y1)-(pt)
            ExactInt cross = ExactInt(x2 - x1) * (pt.second - y1) - ExactInt(y2 - y1) * (pt.first - x1);
            if (cross > 0) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    NewtonPolygon np;
    np.vertices = hull;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        ExactRational s(hull[i + 1].second - hull[i].second, hull[i + 1].first - hull[i].first);
        s.canonicalize();
        np.slopes.emplace_back(s, hull[i + 1].first - hull[i].first);
    }
    return np;
}

NewtonPolygon newton_polygon(const FredholmSeries& P) {
    std::vector<std::optional<long>> vals;
    for (const auto& c : P.c) vals.push_back(c.valuation());
    return newton_polygon(vals);
}

NewtonPolygon newton_polygon(const std::vector<ExactInt>& poly, const ExactInt& p) {
    std::vector<std::optional<long>> vals;
    for (const auto& c : poly) vals.push_back(padic_valuation(c, p));
    return newton_polygon(vals);
}

std::vector<ExactRational> NewtonPolygon::slope_multiset() const {
    std::vector<ExactRational> out;
    for (const auto& [s, mult] : slopes)
        for (long i = 0; i < mult; ++i) out.push_back(s);
    return out;
}

std::string NewtonPolygon::render_text() const {
    std::string out = "vertices:";
    for (auto [i, v] : vertices)
        out += " (" + std::to_string(i) + "," + std::to_string(v) + ")";
    out += "\nslopes:";
    for (const auto& [s, mult] : slopes)
        out += " " + to_decimal(s) + " x" + std::to_string(mult);
    out += "\n";
    return out;
}

std::string NewtonPolygon::render_svg() const {
    // 40 px per unit in x, 20 px per unit in y, origin top-left with y flipped
    long maxv = 0, maxi = 0;
    for (auto [i, v] : vertices) { maxv = std::max(maxv, v); maxi = std::max(maxi, i); }
    const long sx = 40, sy = 20, pad = 10;
    auto X = [&](long i) { return pad + i * sx; };
    auto Y = [&](long v) { return pad + (maxv - v) * sy; };
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(2 * pad + maxi * sx) + "\" height=\"" +
                      std::to_string(2 * pad + maxv * sy) + "\">\n<polyline points=\"";
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i) svg += " ";
        svg += std::to_string(X(vertices[i].first)) + "," + std::to_string(Y(vertices[i].second));
    }
    svg += "\" fill=\"none\" stroke=\"black\"/>\n";
    for (auto [i, v] : vertices)
        svg += "<circle cx=\"" + std::to_string(X(i)) + "\" cy=\"" + std::to_string(Y(v)) +
               "\" r=\"3\"/>\n";
    svg += "</svg>\n";
    return svg;
}

PadicMatrix up_oldspace_matrix(const HeckeLocalData& d, long prec) {
    ExactInt p(d.p);
    PadicMatrix M(2);
    M(0, 0) = PadicNumber::from_int(p, d.a_p, prec);
    M(0, 1) = PadicNumber::from_int(p, 1, prec);
    M(1, 0) = -(d.psi_p.to_padic(p, prec) * PadicNumber::make(p, d.weight - 1, 1, prec));
    M(1, 1) = PadicNumber();  // exactly zero
    return M;
}

namespace {

// Hensel lift of a simple root of g (integer coefficients) modulo p^L.
ExactInt hensel_lift_root(const std::vector<ExactInt>& g, const ExactInt& y0, const ExactInt& p,
                          long L) {
    ExactInt mod = pow_ui(p, (unsigned long)L);
    auto eval = [&](const std::vector<ExactInt>& poly, const ExactInt& x) {
        ExactInt acc = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (acc * x + *it) % mod;
        if (acc < 0) acc += mod;
        return acc;
    };
    std::vector<ExactInt> dg;
    for (long i = 1; i < (long)g.size(); ++i) dg.push_back(g[(size_t)i] * i);
    ExactInt y = y0 % mod;
    if (y < 0) y += mod;
    if (eval(dg, y) % p == 0)
        throw internal_error("Hensel lift: derivative not a unit at the seed");
    for (long it = 0; it < 2 * L + 4; ++it) {
        ExactInt fy = eval(g, y);
        if (fy == 0) break;
        ExactInt dy = eval(dg, y);
        y = (y - fy * inv_mod(dy, mod)) % mod;
        if (y < 0) y += mod;
    }
    if (eval(g, y) != 0)
        throw precision_error("Hensel lift did not converge at the working precision");
    return y;
}

}  // namespace

std::vector<PadicNumber> padic_poly_roots(const std::vector<PadicNumber>& coeffs) {
    if (coeffs.size() < 2) throw domain_error("padic_poly_roots: degree must be >= 1");
    const ExactInt* pp = nullptr;
    for (const auto& c : coeffs)
        if (!c.is_exact_zero()) { pp = &c.prime(); break; }
    if (!pp) throw domain_error("padic_poly_roots: no prime context");
    const ExactInt p = *pp;

    const long deg = (long)coeffs.size() - 1;
    if (deg == 2 && !coeffs[2].is_zero_at_prec()) {
        auto b = coeffs[1] / coeffs[2];
        auto c = coeffs[0] / coeffs[2];
        auto [r1, r2] = quad_roots_padic(b, c);
        return {r1, r2};
    }

    std::vector<std::optional<long>> vals;
    for (const auto& c : coeffs) vals.push_back(c.valuation());
    NewtonPolygon np = newton_polygon(vals);
    std::vector<PadicNumber> roots;
    for (const auto& [slope, mult] : np.slopes) {
        if (mult != 1)
            throw not_in_ground_field(
                "padic_poly_roots: slope of multiplicity " + std::to_string(mult) +
                " (only pairwise distinct integer slopes are supported above degree 2)");
        if (slope.get_den() != 1)
            throw not_in_ground_field("padic_poly_roots: non-integer slope " + to_decimal(slope));
    }
    for (size_t seg = 0; seg + 1 < np.vertices.size(); ++seg) {
        long i0 = np.vertices[seg].first;
        long w = np.vertices[seg].second - np.vertices[seg + 1].second;  // root valuation
        // substitute X = p^w Y, divide by p^c with c = min_i v(c_i) + i w
        long c = LONG_MAX;
        for (long i = 0; i < (long)coeffs.size(); ++i) {
            auto v = coeffs[(size_t)i].valuation();
            if (v) c = std::min(c, *v + i * w);
        }
        long L = LONG_MAX;
        for (long i = 0; i < (long)coeffs.size(); ++i) {
            const auto& ci = coeffs[(size_t)i];
            if (ci.is_exact_zero()) continue;
            long known = ci.abs_precision() + i * w - c;
            if (known <= 0)
                throw precision_error("padic_poly_roots: coefficient " + std::to_string(i) +
                                      " known to too few digits for slope " + std::to_string(w));
            L = std::min(L, known);
        }
        std::vector<ExactInt> g((size_t)coeffs.size());
        ExactInt modL = pow_ui(p, (unsigned long)L);
        for (long i = 0; i < (long)coeffs.size(); ++i) {
            const auto& ci = coeffs[(size_t)i];
            if (ci.is_zero_at_prec()) { g[(size_t)i] = 0; continue; }
            long e = *ci.valuation() + i * w - c;
            g[(size_t)i] = ci.unit_part() * pow_ui(p, (unsigned long)e) % modL;
        }
        // seed: the two hull monomials give a*y^i0 + b*y^{i0+1} = 0 mod p
        ExactInt a = g[(size_t)i0] % p, b = g[(size_t)(i0 + 1)] % p;
        if (a < 0) a += p;
        if (b < 0) b += p;
        ExactInt y0 = (p - a) * inv_mod(b, p) % p;
        ExactInt y = hensel_lift_root(g, y0, p, L);
        roots.push_back(PadicNumber::make(p, w, y, L));
    }
    std::sort(roots.begin(), roots.end(), [](const PadicNumber& x, const PadicNumber& y) {
        return *x.valuation() < *y.valuation();
    });
    return roots;
}

std::vector<PadicNumber> padic_eigenvalues(const PadicMatrix& M) {
    const ExactInt& p = matrix_prime(M);
    long prec = 1;
    for (const auto& x : M.a)
        if (!x.is_zero_at_prec()) prec = std::max(prec, x.rel_precision());
    PadicNumber one = PadicNumber::from_int(p, 1, prec);
    auto cp = charpoly(M, one);
    auto roots = padic_poly_roots(cp);
    if ((long)roots.size() != M.n)
        throw not_in_ground_field("padic_eigenvalues: found " + std::to_string(roots.size()) +
                                  " roots in Q_p for dimension " + std::to_string(M.n));
    return roots;
}

RieszProjector riesz_projector(const PadicMatrix& M, const PadicNumber& lambda, long min_digits) {
    const ExactInt& p = matrix_prime(M);
    auto eigs = padic_eigenvalues(M);
    long match = -1;
    for (long i = 0; i < (long)eigs.size(); ++i) {
        if (lambda.eq_at_prec(eigs[(size_t)i])) {
            if (match >= 0)
                throw domain_error("riesz_projector: lambda matches several eigenvalues "
                                   "(unsupported multiplicity at this precision)");
            match = i;
        }
    }
    if (match < 0)
        throw domain_error("riesz_projector: lambda is not an eigenvalue at the working precision");
    const PadicNumber lam = eigs[(size_t)match];

    PadicMatrix pi = padic_identity(M.n, p, std::max(lam.rel_precision(), 1L));
    for (long i = 0; i < (long)eigs.size(); ++i) {
        if (i == match) continue;
        const PadicNumber& mu = eigs[(size_t)i];
        PadicNumber den = lam - mu;
        if (den.is_zero_at_prec())
            throw domain_error("riesz_projector: eigenvalue of multiplicity > 1 at precision");
        PadicMatrix shift(M.n);
        for (long r = 0; r < M.n; ++r)
            for (long cidx = 0; cidx < M.n; ++cidx)
                shift(r, cidx) = (r == cidx) ? M(r, cidx) - mu : M(r, cidx);
        pi = pi * shift.scaled_by(den.inverse());
    }

    long worst = LONG_MAX;
    for (const auto& x : pi.a)
        if (!x.is_exact_zero()) worst = std::min(worst, x.abs_precision());
    if (worst < min_digits)
        throw precision_error("riesz_projector: only " + std::to_string(worst) +
                              " correct digits (< " + std::to_string(min_digits) + ")");
    return {pi, lam};
}

namespace {

// Pivot of a rank-one projector: first entry of minimal valuation.
std::pair<long, long> projector_pivot(const PadicMatrix& pi) {
    long bi = -1, bj = -1, bv = LONG_MAX;
    for (long i = 0; i < pi.n; ++i)
        for (long j = 0; j < pi.n; ++j) {
            auto v = pi(i, j).valuation();
            if (v && *v < bv) { bv = *v; bi = i; bj = j; }
        }
    if (bi < 0)
        throw domain_error("projector vanishes at precision: eigenvector normalization failure");
    return {bi, bj};
}

}  // namespace

std::vector<PadicNumber> padic_eigenvector(const PadicMatrix& M, const PadicNumber& lambda,
                                           long min_digits) {
    auto proj = riesz_projector(M, lambda, min_digits);
    auto [bi, bj] = projector_pivot(proj.pi);
    PadicNumber inv = proj.pi(bi, bj).inverse();
    std::vector<PadicNumber> e((size_t)proj.pi.n);
    for (long i = 0; i < proj.pi.n; ++i) e[(size_t)i] = proj.pi(i, bj) * inv;
    return e;
}

PadicNumber eigen_coordinate(const PadicMatrix& M, const PadicNumber& lambda,
                             const std::vector<PadicNumber>& v, long min_digits) {
    auto proj = riesz_projector(M, lambda, min_digits);
    auto [bi, bj] = projector_pivot(proj.pi);
    (void)bj;
    // The eigenvector is normalized so that coordinate bi equals 1, so the
    // coefficient of it inside pi(v) is just (pi v)_bi.
    auto w = proj.pi.apply(v);
    return w[(size_t)bi];
}

PadicMatrix padic_identity(long n, const ExactInt& p, long prec) {
    PadicMatrix I(n);
    for (long i = 0; i < n; ++i) I(i, i) = PadicNumber::from_int(p, 1, prec);
    return I;
}

}  // namespace qpf
