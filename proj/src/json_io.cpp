#include "qpf/json_io.hpp"

#include <cstdio>

namespace qpf {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_complex(std::complex<double> z) {
    return fmt_double(z.real()) + (z.imag() < 0 ? "" : "+") + fmt_double(z.imag()) + "i";
}

json to_json(const ExactInt& n) { return to_decimal(n); }
json to_json(const ExactRational& q) { return to_decimal(q); }

json to_json(const PadicNumber& x) {
    json j;
    if (x.is_exact_zero()) {
        j["p"] = nullptr;
        j["valuation"] = nullptr;
        j["unit_digits"] = json::array();
        j["precision"] = nullptr;
        return j;
    }
    j["p"] = to_decimal(x.prime());
    if (auto v = x.valuation()) j["valuation"] = *v;
    else j["valuation"] = nullptr;
    json digits = json::array();
    for (const auto& d : x.unit_digits()) digits.push_back(to_decimal(d));
    j["unit_digits"] = digits;
    j["precision"] = x.is_zero_at_prec() ? x.abs_precision() : x.rel_precision();
    return j;
}

json to_json(const RootOfUnity& z) {
    return json{{"order", z.order()}, {"exponent", z.expnt()}};
}

json to_json(const DirichletCharacter& chi) {
    json gens = json::array(), images = json::array();
    for (long g : chi.generators()) gens.push_back(g);
    for (const auto& im : chi.images()) images.push_back(to_json(im));
    return json{{"modulus", chi.modulus()},
                {"conductor", chi.conductor()},
                {"generators", gens},
                {"images", images}};
}

namespace {

template <class R, class F>
json series_json(const QSeries<R>& f, const std::string& ring, F&& coeff) {
    json coeffs = json::array();
    for (long n = 0; n < f.precision(); ++n) coeffs.push_back(coeff(f[n]));
    return json{{"ring", ring}, {"precision", f.precision()}, {"coeffs", coeffs}};
}

}  // namespace

json to_json(const QSeries<ExactInt>& f, const std::string& ring_tag) {
    return series_json(f, ring_tag, [](const ExactInt& c) { return to_decimal(c); });
}

json to_json(const QSeries<ExactRational>& f) {
    return series_json(f, "rat", [](const ExactRational& c) { return to_decimal(c); });
}

json to_json(const QSeries<std::complex<double>>& f) {
    return series_json(f, "complex", [](const std::complex<double>& c) {
        return json::array({fmt_double(c.real()), fmt_double(c.imag())});
    });
}

json to_json(const QSeries<PadicNumber>& f) {
    return series_json(f, "padic", [](const PadicNumber& c) { return to_json(c); });
}

json to_json(const PadicMatrix& M) {
    json rows = json::array();
    for (long i = 0; i < M.n; ++i) {
        json row = json::array();
        for (long j = 0; j < M.n; ++j) row.push_back(to_json(M(i, j)));
        rows.push_back(row);
    }
    return json{{"n", M.n}, {"entries", rows}};
}

json to_json(const FredholmSeries& P) {
    json coeffs = json::array();
    for (const auto& c : P.c) coeffs.push_back(to_json(c));
    return json{{"degree", P.degree()}, {"coeffs", coeffs}};
}

json to_json(const NewtonPolygon& np) {
    json verts = json::array(), slopes = json::array();
    for (auto [i, v] : np.vertices) verts.push_back(json::array({i, v}));
    for (const auto& [s, mult] : np.slopes)
        slopes.push_back(json{{"slope", to_decimal(s)}, {"multiplicity", mult}});
    return json{{"vertices", verts}, {"slopes", slopes}};
}

json to_json(const HeckeLocalData& d, long padic_prec) {
    auto [s1, s2] = d.slopes();
    json j{{"p", d.p},
           {"a_p", to_decimal(d.a_p)},
           {"psi_p", to_json(d.psi_p)},
           {"weight", d.weight},
           {"slopes", json::array({to_decimal(s1), to_decimal(s2)})},
           {"slopes_tied", d.slopes_tied()}};
    auto [ca, cb] = satake_complex(d);
    j["complex"] = json{{"alpha", fmt_complex(ca)}, {"beta", fmt_complex(cb)}};
    try {
        auto [pa, pb] = satake_padic(d, padic_prec);
        j["padic"] = json{{"alpha", to_json(pa)}, {"beta", to_json(pb)}};
    } catch (const not_in_ground_field& e) {
        j["padic"] = json{{"error", e.what()}};
    }
    return j;
}

QSeries<ExactInt> qseries_int_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("precision") || !j.contains("coeffs"))
        throw domain_error("q-expansion JSON needs ring/precision/coeffs");
    if (j["ring"] != "int")
        throw domain_error("expected ring tag 'int', got " + j["ring"].dump());
    long prec = j["precision"].get<long>();
    const auto& coeffs = j["coeffs"];
    if ((long)coeffs.size() != prec)
        throw domain_error("coefficient count does not match the precision");
    std::vector<ExactInt> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(int_from_decimal(s.get<std::string>()));
    return QSeries<ExactInt>(std::move(c));
}

json to_json(const Degree8Factor& f) {
    json j{{"p", f.p}, {"degree", f.degree()}};
    switch (f.ring) {
        case RingTag::exact: {
            j["ring"] = "exact";
            json c = json::array();
            for (const auto& q : f.exact) c.push_back(to_decimal(q));
            j["coeffs"] = c;
            break;
        }
        case RingTag::cplx: {
            j["ring"] = "complex";
            json c = json::array();
            for (const auto& z : f.cplx)
                c.push_back(json::array({fmt_double(z.real()), fmt_double(z.imag())}));
            j["coeffs"] = c;
            break;
        }
        case RingTag::padic: {
            j["ring"] = "padic";
            json c = json::array();
            for (const auto& x : f.padic) c.push_back(to_json(x));
            j["coeffs"] = c;
            break;
        }
    }
    return j;
}

json to_json(const CriticalSet& cs) {
    json vals = json::array();
    for (long s : cs.values()) vals.push_back(s);
    json j{{"values", vals}, {"center", to_decimal(cs.center)}, {"count", cs.size()}};
    if (!cs.diagnostic.empty()) j["diagnostic"] = cs.diagnostic;
    return j;
}

json to_json(const LPartial& v) {
    return json{{"value", json::array({fmt_double(v.value.real()), fmt_double(v.value.imag())})},
                {"tail_bound", fmt_double(v.tail_bound)},
                {"convergence_warning", v.convergence_warning}};
}

}  // namespace qpf
