// qpf: exact q-expansions, Hecke/Atkin operators, p-adic spectral theory,
// the Eisenstein weight-space family, and the degree-8 triple-product layer.
//
// Exit codes: 0 success, 1 usage, 2 domain error, 3 precision error.

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>

#include "qpf/families.hpp"
#include "qpf/json_io.hpp"

using namespace qpf;

namespace {

long env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    char* end = nullptr;
    long out = std::strtol(v, &end, 10);
    return (end && *end == '\0' && out > 0) ? out : fallback;
}

struct Cli {
    std::string format = "text";
    long qprec = env_long("QPF_QPREC", 32);
    long padic_prec = env_long("QPF_PADIC_PREC", 24);
    long terms = env_long("QPF_TERMS", 10000);

    json config;
    std::function<json()> run;

    void echo(const std::string& key, const std::string& value) { config[key] = value; }
    void echo(const std::string& key, long value) { config[key] = value; }
};

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

std::complex<double> parse_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

HeckeLocalData local_data_from_flags(const std::string& form, long p, long k,
                                     const std::string& ap, long psi_sign) {
    RootOfUnity psi = (psi_sign >= 0) ? RootOfUnity::one() : RootOfUnity::minus_one();
    if (!ap.empty()) return HeckeLocalData(p, int_from_decimal(ap), psi, k);
    if (form == "delta") return delta_local_data(p);
    if (form == "eis") return eisenstein_local_data(p, k);
    throw domain_error("unknown form '" + form + "' (expected delta or eis, or pass --ap)");
}

DirichletCharacter character_from_spec(const std::string& spec, long modulus) {
    if (spec == "trivial") return DirichletCharacter::trivial(modulus);
    if (spec == "quadratic") return DirichletCharacter::quadratic(modulus);
    auto colon = spec.find(':');
    if (colon != std::string::npos && spec.substr(0, colon) == "quadratic")
        return DirichletCharacter::quadratic(std::stol(spec.substr(colon + 1)));
    throw domain_error("unknown character spec '" + spec + "'");
}

PadicMatrix matrix_from_entries(const std::string& entries, long p, long prec) {
    std::vector<std::vector<long>> rows;
    std::string cur;
    rows.emplace_back();
    for (char c : entries + ";") {
        if (c == ';') {
            if (!cur.empty()) rows.back().push_back(std::stol(cur));
            cur.clear();
            rows.emplace_back();
        } else if (c == ',') {
            if (!cur.empty()) rows.back().push_back(std::stol(cur));
            cur.clear();
        } else if (!std::isspace((unsigned char)c)) {
            cur += c;
        }
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    long n = (long)rows.size();
    PadicMatrix M(n);
    for (long i = 0; i < n; ++i) {
        if ((long)rows[(size_t)i].size() != n)
            throw domain_error("matrix rows must all have length " + std::to_string(n));
        for (long j = 0; j < n; ++j)
            M(i, j) = PadicNumber::from_int(p, rows[(size_t)i][(size_t)j], prec);
    }
    return M;
}

int run_selftest() {
    // classical golden vectors as a one-command smoke suite
    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    const long tau19[20] = {0,      1,       -24,     252,      -1472,   4830,    -6048,
                            -16744, 84480,   -113643, -115920,  534612,  -370944, -577738,
                            401856, 1217160, 987136,  -6905934, 2727432, 10661420};
    auto d = delta_series(20);
    bool ok = true;
    for (long n = 1; n <= 19; ++n) ok = ok && d[n] == tau19[n];
    report("delta q-expansion through q^19", ok);

    auto defect = ramanujan_congruence_defect(8);
    report("(Delta - h12)/691 has q^7 coefficient -2861568", defect[7] == -2861568);

    auto np = newton_polygon({ExactInt(1), ExactInt(24), ExactInt(2048)}, ExactInt(2));
    auto sm = np.slope_multiset();
    report("Newton slopes {3, 8} for 1 + 24T + 2048T^2 at p = 2",
           sm.size() == 2 && sm[0] == 3 && sm[1] == 8);

    auto cs = critical_values({12, 12, 12});
    report("critical set {12..22} for weights (12,12,12)",
           cs.lo == 12 && cs.hi == 22 && cs.size() == 11 && cs.center == 17);

    report("H(3,3,3) = 19", admissibility_H(3, 3, 3) == 19);

    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular-form q-expansions with a p-adic spectral and triple-product layer"};
    app.require_subcommand(0, 1);
    Cli cli;

    bool selftest = false;
    app.add_flag("--selftest", selftest, "run the built-in golden-vector smoke suite");
    app.add_option("--format", cli.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--qprec", cli.qprec, "default q-expansion precision (env QPF_QPREC)");
    app.add_option("--padic-prec", cli.padic_prec, "default p-adic precision (env QPF_PADIC_PREC)");
    app.add_option("--terms", cli.terms, "default term/prime bound (env QPF_TERMS)");

    // ---- qexp ----
    auto* qexp = app.add_subcommand("qexp", "q-expansions: delta, e4, e6, hk, partition");
    std::string qexp_what;
    long qexp_prec = 0, qexp_k = 12;
    std::string qexp_route = "eisenstein";
    qexp->add_option("what", qexp_what, "one of delta|e4|e6|hk|partition")->required();
    qexp->add_option("--prec", qexp_prec, "q-precision (overrides --qprec)");
    qexp->add_option("--k", qexp_k, "weight for hk");
    qexp->add_option("--route", qexp_route, "delta route: eisenstein or eta")
        ->check(CLI::IsMember({"eisenstein", "eta"}));
    qexp->callback([&] {
        long N = qexp_prec > 0 ? qexp_prec : cli.qprec;
        cli.echo("what", qexp_what);
        cli.echo("prec", N);
        cli.run = [&cli, qexp_what, N, qexp_k, qexp_route]() -> json {
            if (qexp_what == "delta") {
                auto route = qexp_route == "eta" ? DeltaRoute::eta_product : DeltaRoute::eisenstein;
                return to_json(delta_series(N, route));
            }
            if (qexp_what == "e4") return to_json(eisenstein_e4(N));
            if (qexp_what == "e6") return to_json(eisenstein_e6(N));
            if (qexp_what == "hk") return to_json(divisor_sum_series(qexp_k, N));
            if (qexp_what == "partition") return to_json(partition_series(N));
            throw domain_error("unknown series '" + qexp_what + "'");
        };
    });

    // ---- tau ----
    auto* tau_cmd = app.add_subcommand("tau", "Ramanujan tau(n), single value or table");
    long tau_n = 0, tau_upto_n = 0;
    tau_cmd->add_option("--n", tau_n, "single index");
    tau_cmd->add_option("--upto", tau_upto_n, "emit tau(1..N)");
    tau_cmd->callback([&] {
        cli.echo("n", tau_n);
        cli.echo("upto", tau_upto_n);
        cli.run = [&cli, tau_n, tau_upto_n]() -> json {
            if (tau_n > 0) return json{{"n", tau_n}, {"tau", to_decimal(tau(tau_n))}};
            if (tau_upto_n > 0) {
                auto t = tau_upto(tau_upto_n);
                json vals = json::array();
                for (long n = 1; n <= tau_upto_n; ++n) vals.push_back(to_decimal(t[(size_t)n]));
                return json{{"upto", tau_upto_n}, {"tau", vals}};
            }
            throw domain_error("pass --n or --upto");
        };
    });

    // ---- congruence ----
    auto* cong = app.add_subcommand("congruence", "(Delta - h12)/691 as an integral series");
    long cong_prec = 0;
    cong->add_option("--prec", cong_prec, "q-precision");
    cong->callback([&] {
        long N = cong_prec > 0 ? cong_prec : cli.qprec;
        cli.echo("prec", N);
        cli.run = [N]() -> json { return to_json(ramanujan_congruence_defect(N)); };
    });

    // ---- shared local-data flags ----
    auto add_local_flags = [](CLI::App* cmd, std::string& form, long& p, long& k, std::string& ap,
                              long& psi) {
        cmd->add_option("--form", form, "delta or eis");
        cmd->add_option("--p", p, "prime")->required();
        cmd->add_option("--k", k, "weight (eis / explicit a_p)");
        cmd->add_option("--ap", ap, "explicit a_p as a decimal string");
        cmd->add_option("--psi-p", psi, "psi(p) = +1 or -1 with explicit a_p");
    };

    // ---- hecke-poly ----
    auto* hp = app.add_subcommand("hecke-poly", "Hecke polynomial 1 - a_p X + psi(p) p^{k-1} X^2");
    std::string hp_form = "delta", hp_ap;
    long hp_p = 0, hp_k = 12, hp_psi = 1;
    add_local_flags(hp, hp_form, hp_p, hp_k, hp_ap, hp_psi);
    hp->callback([&] {
        cli.echo("form", hp_form);
        cli.echo("p", hp_p);
        cli.run = [&cli, hp_form, hp_p, hp_k, hp_ap, hp_psi]() -> json {
            auto d = local_data_from_flags(hp_form, hp_p, hp_k, hp_ap, hp_psi);
            auto poly = hecke_polynomial_exact(d);
            json coeffs = json::array();
            for (const auto& c : poly) coeffs.push_back(to_decimal(c));
            return json{{"local_data", to_json(d)}, {"coeffs", coeffs}};
        };
    });

    // ---- satake ----
    auto* sat = app.add_subcommand("satake", "Satake parameters and slopes");
    std::string sat_form = "delta", sat_ap, sat_ring = "all";
    long sat_p = 0, sat_k = 12, sat_psi = 1;
    add_local_flags(sat, sat_form, sat_p, sat_k, sat_ap, sat_psi);
    sat->add_option("--ring", sat_ring, "all, complex, or padic")
        ->check(CLI::IsMember({"all", "complex", "padic"}));
    sat->callback([&] {
        cli.echo("form", sat_form);
        cli.echo("p", sat_p);
        cli.echo("ring", sat_ring);
        cli.echo("padic_prec", cli.padic_prec);
        long prec = cli.padic_prec;
        cli.run = [sat_form, sat_p, sat_k, sat_ap, sat_psi, sat_ring, prec]() -> json {
            auto d = local_data_from_flags(sat_form, sat_p, sat_k, sat_ap, sat_psi);
            json out{{"local_data", to_json(d)}};
            if (sat_ring != "padic") {
                auto [a, b] = satake_complex(d);
                out["complex"] = json{{"alpha", fmt_complex(a)}, {"beta", fmt_complex(b)}};
            }
            if (sat_ring != "complex") {
                try {
                    auto [a, b] = satake_padic(d, prec);
                    out["padic"] = json{{"alpha", to_json(a)}, {"beta", to_json(b)}};
                } catch (const not_in_ground_field& e) {
                    if (sat_ring == "padic") throw;
                    out["padic"] = json{{"error", e.what()}};
                }
            }
            return out;
        };
    });

    // ---- stabilize ----
    auto* stab = app.add_subcommand("stabilize", "p-stabilization f(z) - beta f(pz)");
    std::string stab_form = "delta", stab_ap, stab_root = "alpha", stab_ring = "padic";
    long stab_p = 0, stab_k = 12, stab_psi = 1, stab_prec = 0;
    add_local_flags(stab, stab_form, stab_p, stab_k, stab_ap, stab_psi);
    stab->add_option("--root", stab_root, "keep alpha or beta as U_p eigenvalue")
        ->check(CLI::IsMember({"alpha", "beta"}));
    stab->add_option("--ring", stab_ring, "padic or complex")
        ->check(CLI::IsMember({"padic", "complex"}));
    stab->add_option("--prec", stab_prec, "output q-precision");
    stab->callback([&] {
        long N = stab_prec > 0 ? stab_prec : cli.qprec;
        long pprec = cli.padic_prec;
        cli.echo("form", stab_form);
        cli.echo("p", stab_p);
        cli.echo("root", stab_root);
        cli.echo("ring", stab_ring);
        cli.echo("prec", N);
        cli.run = [stab_form, stab_p, stab_k, stab_ap, stab_psi, stab_root, stab_ring, N,
                   pprec]() -> json {
            auto d = local_data_from_flags(stab_form, stab_p, stab_k, stab_ap, stab_psi);
            if (stab_form == "eis" && d.weight != 4 && d.weight != 6)
                throw domain_error("stabilize --form eis supports k = 4 or 6 q-expansions");
            QSeries<ExactInt> f = (stab_form == "eis") ? (d.weight == 4 ? eisenstein_e4(stab_p * (N - 1) + 1)
                                                                        : eisenstein_e6(stab_p * (N - 1) + 1))
                                                       : delta_series(stab_p * (N - 1) + 1);
            if (stab_ring == "complex") {
                auto [alpha, beta] = satake_complex(d);
                auto keep = (stab_root == "alpha") ? alpha : beta;
                auto drop = (stab_root == "alpha") ? beta : alpha;
                QSeries<std::complex<double>> fc(N);
                for (long n = 0; n < N; ++n) fc.at(n) = mpz_get_d(f[n].get_mpz_t());
                auto f0 = p_stabilize(fc, stab_p, drop);
                return json{{"eigenvalue", fmt_complex(keep)}, {"series", to_json(f0)}};
            }
            auto [alpha, beta] = satake_padic(d, pprec);
            auto keep = (stab_root == "alpha") ? alpha : beta;
            auto drop = (stab_root == "alpha") ? beta : alpha;
            QSeries<PadicNumber> fp(N);
            for (long n = 0; n < N; ++n) fp.at(n) = PadicNumber::from_int(stab_p, f[n], pprec);
            auto f0 = p_stabilize(fp, stab_p, drop);
            return json{{"eigenvalue", to_json(keep)}, {"series", to_json(f0)}};
        };
    });

    // ---- up-matrix ----
    auto* upm = app.add_subcommand("up-matrix", "U_p on the oldspace basis (f(z), f(pz))");
    std::string upm_form = "delta", upm_ap;
    long upm_p = 0, upm_k = 12, upm_psi = 1;
    add_local_flags(upm, upm_form, upm_p, upm_k, upm_ap, upm_psi);
    upm->callback([&] {
        cli.echo("form", upm_form);
        cli.echo("p", upm_p);
        cli.echo("padic_prec", cli.padic_prec);
        long prec = cli.padic_prec;
        cli.run = [upm_form, upm_p, upm_k, upm_ap, upm_psi, prec]() -> json {
            auto d = local_data_from_flags(upm_form, upm_p, upm_k, upm_ap, upm_psi);
            return json{{"p", upm_p}, {"matrix", to_json(up_oldspace_matrix(d, prec))}};
        };
    });

    // ---- fredholm ----
    auto* fred = app.add_subcommand("fredholm", "det(Id - T U) for a p-adic matrix");
    std::string fred_form, fred_ap, fred_entries;
    long fred_p = 0, fred_k = 12, fred_psi = 1;
    fred->add_option("--form", fred_form, "delta or eis: use the 2x2 oldspace matrix");
    fred->add_option("--p", fred_p, "prime")->required();
    fred->add_option("--k", fred_k, "weight for eis");
    fred->add_option("--ap", fred_ap, "explicit a_p");
    fred->add_option("--psi-p", fred_psi, "+1 or -1");
    fred->add_option("--entries", fred_entries, "integer matrix 'a,b;c,d'");
    fred->callback([&] {
        cli.echo("p", fred_p);
        cli.echo("padic_prec", cli.padic_prec);
        long prec = cli.padic_prec;
        cli.run = [fred_form, fred_p, fred_k, fred_ap, fred_psi, fred_entries, prec]() -> json {
            PadicMatrix M = fred_entries.empty()
                                ? up_oldspace_matrix(
                                      local_data_from_flags(fred_form.empty() ? "delta" : fred_form,
                                                            fred_p, fred_k, fred_ap, fred_psi),
                                      prec)
                                : matrix_from_entries(fred_entries, fred_p, prec);
            return json{{"p", fred_p}, {"fredholm", to_json(fredholm_series(M))}};
        };
    });

    // ---- newton ----
    auto* newt = app.add_subcommand("newton", "Newton polygon of a polynomial");
    std::string newt_coeffs, newt_render = "none";
    long newt_p = 0;
    newt->add_option("--coeffs", newt_coeffs, "comma-separated integer coefficients, c0 first")
        ->required();
    newt->add_option("--p", newt_p, "prime")->required();
    newt->add_option("--render", newt_render, "also render: text or svg")
        ->check(CLI::IsMember({"none", "text", "svg"}));
    newt->callback([&] {
        cli.echo("p", newt_p);
        cli.echo("coeffs", newt_coeffs);
        cli.run = [newt_coeffs, newt_p, newt_render]() -> json {
            std::vector<ExactInt> poly;
            for (long c : parse_longs(newt_coeffs)) poly.emplace_back(c);
            auto np = newton_polygon(poly, ExactInt(newt_p));
            json out{{"polygon", to_json(np)}};
            if (newt_render == "text") out["rendered"] = np.render_text();
            if (newt_render == "svg") out["rendered"] = np.render_svg();
            return out;
        };
    });

    // ---- projector ----
    auto* proj = app.add_subcommand("projector", "Riesz projector onto a simple eigenvalue");
    std::string proj_form = "delta", proj_ap, proj_entries, proj_lambda;
    std::string proj_eigen = "alpha";
    long proj_p = 0, proj_k = 12, proj_psi = 1, proj_min_digits = 4;
    add_local_flags(proj, proj_form, proj_p, proj_k, proj_ap, proj_psi);
    proj->add_option("--entries", proj_entries, "integer matrix 'a,b;c,d' instead of --form");
    proj->add_option("--lambda", proj_lambda, "eigenvalue (integer string) with --entries");
    proj->add_option("--eigen", proj_eigen, "alpha or beta of the oldspace matrix")
        ->check(CLI::IsMember({"alpha", "beta"}));
    proj->add_option("--min-digits", proj_min_digits, "refuse below this many correct digits");
    proj->callback([&] {
        cli.echo("p", proj_p);
        cli.echo("padic_prec", cli.padic_prec);
        long prec = cli.padic_prec;
        cli.run = [proj_form, proj_p, proj_k, proj_ap, proj_psi, proj_entries, proj_lambda,
                   proj_eigen, proj_min_digits, prec]() -> json {
            PadicMatrix M(0);
            PadicNumber lambda;
            if (!proj_entries.empty()) {
                M = matrix_from_entries(proj_entries, proj_p, prec);
                if (proj_lambda.empty()) throw domain_error("--entries needs --lambda");
                lambda = PadicNumber::from_int(proj_p, int_from_decimal(proj_lambda), prec);
            } else {
                auto d = local_data_from_flags(proj_form, proj_p, proj_k, proj_ap, proj_psi);
                M = up_oldspace_matrix(d, prec);
                auto [alpha, beta] = satake_padic(d, prec);
                lambda = (proj_eigen == "alpha") ? alpha : beta;
            }
            auto pr = riesz_projector(M, lambda, proj_min_digits);
            auto e = padic_eigenvector(M, lambda, proj_min_digits);
            json ev = json::array();
            for (const auto& x : e) ev.push_back(to_json(x));
            return json{{"lambda", to_json(pr.lambda)},
                        {"projector", to_json(pr.pi)},
                        {"eigenvector", ev}};
        };
    });

    // ---- weight-eval ----
    auto* weval = app.add_subcommand("weight-eval", "evaluate an arithmetic point (r, chi) of weight space");
    long we_N = 1, we_p = 0, we_v = 1, we_r = 0, we_y1 = 1;
    std::string we_chi = "trivial", we_y2 = "1";
    weval->add_option("--N", we_N, "tame modulus");
    weval->add_option("--p", we_p, "prime")->required();
    weval->add_option("--v", we_v, "wild level");
    weval->add_option("--r", we_r, "integer twist");
    weval->add_option("--chi", we_chi, "trivial or quadratic (character mod N p^v)");
    weval->add_option("--y1", we_y1, "unit mod N");
    weval->add_option("--y2", we_y2, "p-adic unit (decimal)");
    weval->callback([&] {
        cli.echo("p", we_p);
        cli.echo("padic_prec", cli.padic_prec);
        long prec = cli.padic_prec;
        cli.run = [we_N, we_p, we_v, we_r, we_chi, we_y1, we_y2, prec]() -> json {
            long modulus = we_N;
            for (long i = 0; i < we_v; ++i) modulus *= we_p;
            auto chi = character_from_spec(we_chi, modulus);
            WeightSpacePoint pt(we_N, we_p, we_v, we_r, chi);
            auto val = eval_point(pt, we_y1, int_from_decimal(we_y2), prec);
            return json{{"value", to_json(val)}};
        };
    });

    // ---- eis-family ----
    auto* eisf = app.add_subcommand("eis-family", "interpolated Eisenstein coefficient a_n(k)");
    long ef_n = 1, ef_p = 0, ef_weight = 0, ef_j = 0;
    eisf->add_option("--n", ef_n, "index")->required();
    eisf->add_option("--p", ef_p, "prime")->required();
    eisf->add_option("--weight", ef_weight, "integer weight k")->required();
    eisf->add_option("--component", ef_j, "component j mod (p-1)");
    eisf->callback([&] {
        cli.echo("p", ef_p);
        cli.echo("padic_prec", cli.padic_prec);
        long prec = cli.padic_prec;
        cli.run = [ef_n, ef_p, ef_weight, ef_j, prec]() -> json {
            auto s = PadicNumber::from_int(ef_p, ef_weight, prec);
            auto v = eis_family_coeff(ef_n, s, ef_j, prec);
            return json{{"value", to_json(v)},
                        {"integral_check",
                         to_decimal(eis_family_coeff_integral(ef_n, ef_weight, ef_p))}};
        };
    });

    // ---- continuity ----
    auto* cont = app.add_subcommand("continuity", "v_p(a_n(k) - a_n(k')) for congruent weights");
    long ct_n = 1, ct_k = 2, ct_k2 = 2, ct_p = 0, ct_m = 0;
    cont->add_option("--n", ct_n)->required();
    cont->add_option("--k", ct_k)->required();
    cont->add_option("--k2", ct_k2)->required();
    cont->add_option("--p", ct_p)->required();
    cont->add_option("--m", ct_m, "congruence exponent");
    cont->callback([&] {
        cli.echo("p", ct_p);
        cli.run = [ct_n, ct_k, ct_k2, ct_p, ct_m]() -> json {
            auto v = continuity_defect(ct_n, ct_k, ct_k2, ct_p, ct_m);
            json out{{"m", ct_m}, {"contract", ct_m + 1}};
            if (v) out["defect"] = *v;
            else out["defect"] = "inf";
            return out;
        };
    });

    // ---- balanced / critical / reflect / admissibility ----
    auto* bal = app.add_subcommand("balanced", "balanced-weight test");
    std::string bal_w;
    bal->add_option("--weights", bal_w, "k1,k2,k3")->required();
    bal->callback([&] {
        cli.echo("weights", bal_w);
        cli.run = [bal_w]() -> json {
            auto v = parse_longs(bal_w);
            if (v.size() != 3) throw domain_error("--weights needs three integers");
            TripleWeights w(v[0], v[1], v[2]);
            return json{{"sorted", json::array({w.k1, w.k2, w.k3})}, {"balanced", is_balanced(w)}};
        };
    });

    auto* crit = app.add_subcommand("critical", "critical values s = k1 .. k2+k3-2");
    std::string crit_w;
    crit->add_option("--weights", crit_w, "k1,k2,k3")->required();
    crit->callback([&] {
        cli.echo("weights", crit_w);
        cli.run = [crit_w]() -> json {
            auto v = parse_longs(crit_w);
            if (v.size() != 3) throw domain_error("--weights needs three integers");
            return to_json(critical_values(TripleWeights(v[0], v[1], v[2])));
        };
    });

    auto* refl = app.add_subcommand("reflect", "functional-equation reflection of s");
    std::string refl_w;
    long refl_s = 0;
    refl->add_option("--weights", refl_w, "k1,k2,k3")->required();
    refl->add_option("--s", refl_s)->required();
    refl->callback([&] {
        cli.echo("weights", refl_w);
        cli.echo("s", refl_s);
        cli.run = [refl_w, refl_s]() -> json {
            auto v = parse_longs(refl_w);
            if (v.size() != 3) throw domain_error("--weights needs three integers");
            return json{{"s", refl_s},
                        {"reflected", functional_eq_reflect(TripleWeights(v[0], v[1], v[2]), refl_s)}};
        };
    });

    auto* adm = app.add_subcommand("admissibility", "H = floor(2(s1+s2+s3)) + 1");
    std::string adm_slopes;
    adm->add_option("--slopes", adm_slopes, "three rationals, e.g. 3,3,3 or 1/2,1/2,0")->required();
    adm->callback([&] {
        cli.echo("slopes", adm_slopes);
        cli.run = [adm_slopes]() -> json {
            std::vector<ExactRational> sl;
            std::string cur;
            for (char c : adm_slopes + ",") {
                if (c == ',') {
                    sl.push_back(rat_from_decimal(cur));
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            if (sl.size() != 3) throw domain_error("--slopes needs three rationals");
            return json{{"H", admissibility_H(sl[0], sl[1], sl[2])}};
        };
    });

    // ---- euler8 ----
    auto* e8 = app.add_subcommand("euler8", "degree-8 triple-product Euler factor at p");
    std::string e8_form = "delta", e8_ring = "exact";
    long e8_p = 0, e8_k = 12;
    e8->add_option("--form", e8_form, "delta (all three) or eis");
    e8->add_option("--p", e8_p, "prime")->required();
    e8->add_option("--k", e8_k, "weight for eis");
    e8->add_option("--ring", e8_ring, "exact, complex, or padic")
        ->check(CLI::IsMember({"exact", "complex", "padic"}));
    e8->callback([&] {
        cli.echo("p", e8_p);
        cli.echo("ring", e8_ring);
        long prec = cli.padic_prec;
        cli.run = [e8_form, e8_p, e8_k, e8_ring, prec]() -> json {
            auto d = local_data_from_flags(e8_form, e8_p, e8_k, "", 1);
            TripleLocalData t(d, d, d);
            RingTag tag = e8_ring == "exact" ? RingTag::exact
                        : e8_ring == "complex" ? RingTag::cplx : RingTag::padic;
            return to_json(degree8_euler_factor(t, tag, prec));
        };
    });

    // ---- lpartial ----
    auto* lp = app.add_subcommand("lpartial", "partial sum of L(f, s, chi)");
    std::string lp_s = "12", lp_chi = "trivial";
    long lp_terms = 0;
    lp->add_option("--s", lp_s, "complex s as 're' or 're,im'");
    lp->add_option("--chi", lp_chi, "trivial or quadratic:M");
    lp->add_option("--terms", lp_terms, "number of terms");
    lp->callback([&] {
        long n = lp_terms > 0 ? lp_terms : cli.terms;
        cli.echo("s", lp_s);
        cli.echo("chi", lp_chi);
        cli.echo("terms", n);
        cli.run = [lp_s, lp_chi, n]() -> json {
            auto chi = character_from_spec(lp_chi, 1);
            auto t = tau_upto(n);
            return to_json(dirichlet_L_partial(t, chi, parse_complex(lp_s), n, 12));
        };
    });

    // ---- triple-l ----
    auto* tl = app.add_subcommand("triple-l", "partial Euler product of L(Delta x Delta x Delta, s)");
    std::string tl_s = "20";
    long tl_pmax = 0;
    tl->add_option("--s", tl_s, "complex s as 're' or 're,im'");
    tl->add_option("--pmax", tl_pmax, "prime bound P");
    tl->callback([&] {
        long P = tl_pmax > 0 ? tl_pmax : 100;
        cli.echo("s", tl_s);
        cli.echo("pmax", P);
        cli.run = [tl_s, P]() -> json {
            auto taus = tau_upto(P + 1);
            std::vector<TripleLocalData> locals;
            for (long p : primes_upto(P)) {
                HeckeLocalData d(p, taus[(size_t)p], RootOfUnity::one(), 12);
                locals.emplace_back(d, d, d);
            }
            auto v = triple_L_partial(locals, parse_complex(tl_s));
            json out = to_json(v);
            out["pmax"] = P;
            out["primes"] = (long)locals.size();
            return out;
        };
    });

    // ---- gamma ----
    auto* gam = app.add_subcommand("gamma", "Gamma_C normalization factor of Lambda");
    std::string gam_w, gam_s = "12";
    gam->add_option("--weights", gam_w, "k1,k2,k3")->required();
    gam->add_option("--s", gam_s, "complex s");
    gam->callback([&] {
        cli.echo("weights", gam_w);
        cli.echo("s", gam_s);
        cli.run = [gam_w, gam_s]() -> json {
            auto v = parse_longs(gam_w);
            if (v.size() != 3) throw domain_error("--weights needs three integers");
            auto val = gamma_normalization(TripleWeights(v[0], v[1], v[2]), parse_complex(gam_s));
            return json{{"value", json::array({fmt_double(val.real()), fmt_double(val.imag())})}};
        };
    });

    for (auto* sc : app.get_subcommands([](CLI::App*) { return true; })) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (selftest) return run_selftest();
    if (!cli.run) {
        std::cerr << app.help() << "\n";
        return 1;
    }

    cli.config["format"] = cli.format;
    try {
        json result = cli.run();
        json envelope{{"schema", kSchemaId},
                      {"command", app.get_subcommands().front()->get_name()},
                      {"config", cli.config},
                      {"result", result}};
        if (cli.format == "json") {
            std::cout << envelope.dump() << "\n";
        } else {
            std::cout << "# " << envelope["command"].get<std::string>() << "\n";
            std::cout << "# config: " << cli.config.dump() << "\n";
            std::cout << result.dump(2) << "\n";
        }
        return 0;
    } catch (const precision_error& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
