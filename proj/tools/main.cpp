// Command-line front end: moment tables for polynomials in monotone
// independent elements, cross-path verification suites, and Wigner
// Monte Carlo comparisons. Reports go to stdout as JSON (or CSV),
// diagnostics to stderr. Exit codes: 0 success / all checks passed,
// 1 tolerance failure, 2 usage or input error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncmi/catalan.hpp"
#include "ncmi/closed_form.hpp"
#include "ncmi/engine.hpp"
#include "ncmi/matrix_lift.hpp"
#include "ncmi/report.hpp"
#include "ncmi/rmt.hpp"

using namespace ncmi;

namespace {

// ---------------------------------------------------------------------------
// input parsing

// Complex scalars on the command line: RE, RE+IMi or RE-IMi (a trailing
// bare imaginary like "2i" is also accepted).
cplx parse_complex(const std::string& text) {
    const auto fail = [&]() -> cplx {
        throw std::invalid_argument("malformed complex number '" + text +
                                    "' (expected RE, RE+IMi or RE-IMi)");
    };
    if (text.empty()) return fail();

    const auto to_double = [&](const std::string& part, bool allow_bare_sign) -> double {
        if (allow_bare_sign) {
            if (part == "+" || part.empty()) return 1.0;
            if (part == "-") return -1.0;
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            fail();
        }
        if (used != part.size()) fail();
        return v;
    };

    if (text.back() != 'i') return cplx(to_double(text, false), 0.0);

    const std::string body = text.substr(0, text.size() - 1);
    // Split at the last +/- that is not a leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    if (split == std::string::npos) return cplx(0.0, to_double(body, true));
    return cplx(to_double(body.substr(0, split), false),
                to_double(body.substr(split), true));
}

cplx json_to_complex(const nlohmann::json& v, const std::string& where) {
    if (v.is_number()) return cplx(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return cplx(v[0].get<double>(), v[1].get<double>());
    throw std::invalid_argument(where + ": moment entries must be numbers or [re,im] pairs");
}

AMomentData load_a_moments(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open a-moments file '" + path + "'");
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed a-moments file '" + path + "': " + e.what());
    }
    if (!j.is_object() || !j.contains("phi") || !j["phi"].is_array())
        throw std::invalid_argument("a-moments file '" + path +
                                    "' must be an object with a \"phi\" array");
    const auto& phi = j["phi"];
    std::vector<DualScalar> ms;
    ms.reserve(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i)
        ms.emplace_back(json_to_complex(phi[i], path + ": phi[" + std::to_string(i) + "]"));
    if (j.contains("phi_prime")) {
        const auto& pp = j["phi_prime"];
        if (!pp.is_array() || pp.size() > ms.size())
            throw std::invalid_argument("a-moments file '" + path +
                                        "': phi_prime must be an array no longer than phi");
        for (std::size_t i = 0; i < pp.size(); ++i)
            ms[i].eps = json_to_complex(pp[i], path + ": phi_prime[" + std::to_string(i) + "]");
    }
    return AMomentData::from_moments(std::move(ms));
}

// Options shared by the moment-table commands.
struct ADataOpts {
    std::string file;
    std::string law = "semicircle";
    int horizon = 0;
};

void add_a_options(CLI::App* cmd, ADataOpts& o) {
    cmd->add_option("--a-moments", o.file, "JSON file with phi/phi_prime moment arrays");
    cmd->add_option("--a-law", o.law, "built-in a law when no file is given")
        ->check(CLI::IsMember({"semicircle"}));
    cmd->add_option("--a-horizon", o.horizon,
                    "horizon of the built-in a law (default: what the run needs)");
}

AMomentData make_a_data(const ADataOpts& o, int needed_horizon) {
    if (!o.file.empty()) return load_a_moments(o.file);
    return AMomentData::semicircle(o.horizon > 0 ? o.horizon : needed_horizon);
}

void render_a_params(const ADataOpts& o, RunReport& rep) {
    if (!o.file.empty())
        rep.params.emplace_back("a_moments", json_string(o.file));
    else
        rep.params.emplace_back("a_law", json_string(o.law));
}

double rel_gap(cplx got, cplx ref) {
    return std::abs(got - ref) / std::max(1.0, std::abs(ref));
}

// Seeded draws for the verification suites.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : eng_(seed) {}
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    cplx disc(double rmin, double rmax) {
        const double r = uniform(rmin, rmax);
        const double t = 2.0 * 3.14159265358979323846 * uniform01();
        return {r * std::cos(t), r * std::sin(t)};
    }

private:
    std::mt19937_64 eng_;
};

SpanParams draw_span_params(Draw& d) {
    return SpanParams{d.disc(0.2, 2.0), d.disc(0.2, 2.0),
                      DualScalar(d.disc(0.0, 2.0), d.disc(0.0, 2.0)),
                      DualScalar(d.disc(0.0, 2.0), d.disc(0.0, 2.0))};
}

std::vector<DualScalar> draw_a_moments(Draw& d, int kmax) {
    std::vector<DualScalar> ms;
    ms.reserve(static_cast<std::size_t>(kmax));
    for (int k = 0; k < kmax; ++k)
        ms.emplace_back(d.disc(0.0, 1.0), d.disc(0.0, 1.0));
    return ms;
}

NCPolynomial span_polynomial(cplx alpha, cplx beta) {
    const NCWord ab{NCLetter::a(), NCLetter::b()};
    const NCWord ba{NCLetter::b(), NCLetter::a()};
    return NCPolynomial::monomial(ab, alpha) + NCPolynomial::monomial(ba, beta);
}

void emit(const RunReport& rep, const std::string& format) {
    std::cout << (format == "csv" ? to_csv(rep) : to_json(rep)) << "\n";
}

// ---------------------------------------------------------------------------
// subcommands

struct SpanOpts {
    std::string alpha = "1";
    std::string beta = "1";
    std::string b_mean = "0";
    std::string b_second = "1";
    std::string b_mean_eps = "0";
    std::string b_second_eps = "0";
    int k = 4;
    ADataOpts a;
    std::string format = "json";
};

void add_span_options(CLI::App* cmd, SpanOpts& o, bool with_coeffs) {
    if (with_coeffs) {
        cmd->add_option("--alpha", o.alpha, "coefficient of ab");
        cmd->add_option("--beta", o.beta, "coefficient of ba");
    }
    cmd->add_option("--b-mean", o.b_mean, "phi(b)");
    cmd->add_option("--b-second", o.b_second, "phi(b^2)");
    cmd->add_option("--b-mean-eps", o.b_mean_eps, "phi'(b)");
    cmd->add_option("--b-second-eps", o.b_second_eps, "phi'(b^2)");
    cmd->add_option("--k", o.k, "largest moment order")->check(CLI::PositiveNumber);
    add_a_options(cmd, o.a);
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

SpanParams span_params_from(const SpanOpts& o, cplx alpha, cplx beta) {
    return SpanParams{alpha, beta,
                      DualScalar(parse_complex(o.b_mean), parse_complex(o.b_mean_eps)),
                      DualScalar(parse_complex(o.b_second), parse_complex(o.b_second_eps))};
}

int run_span_like(const std::string& name, const SpanOpts& o, bool inf_formula_route) {
    const cplx alpha = name == "anticomm" ? cplx(1.0)
                       : name == "comm"   ? cplx(0.0, 1.0)
                                          : parse_complex(o.alpha);
    const cplx beta = name == "anticomm" ? cplx(1.0)
                      : name == "comm"   ? cplx(0.0, -1.0)
                                         : parse_complex(o.beta);
    const SpanParams params = span_params_from(o, alpha, beta);
    const AMomentData a = make_a_data(o.a, o.k);

    RunReport rep;
    rep.command = name;
    if (name == "span" || name == "inf-span") {
        rep.params.emplace_back("alpha", json_complex(alpha));
        rep.params.emplace_back("beta", json_complex(beta));
    }
    rep.params.emplace_back("b_mean", json_complex(params.b_mean.value));
    rep.params.emplace_back("b_mean_eps", json_complex(params.b_mean.eps));
    rep.params.emplace_back("b_second", json_complex(params.b_second.value));
    rep.params.emplace_back("b_second_eps", json_complex(params.b_second.eps));
    render_a_params(o.a, rep);
    rep.params.emplace_back("k", json_int(o.k));

    for (int k = 1; k <= o.k; ++k) {
        const DualScalar a_k = a(NCWord::power(NCLetter::a(), k));
        ReportRow row;
        row.k = k;
        if (inf_formula_route) {
            row.value = span_moment(params, k, a_k).value;
            row.eps = inf_span_moment_formula(params, k, a_k);
        } else {
            const DualScalar v = span_moment(params, k, a_k);
            row.value = v.value;
            row.eps = v.eps;
        }
        rep.rows.push_back(row);
    }
    emit(rep, o.format);
    return 0;
}

struct GeneralOpts {
    std::string b11 = "2", b22 = "2", b12 = "2";
    std::string bt1 = "1", bt2 = "1", ct1 = "1", ct2 = "1";
    int k = 4;
    ADataOpts a;
    std::string format = "json";
};

int run_general(const GeneralOpts& o) {
    const AMomentData base = make_a_data(o.a, 2 * o.k);
    const TwoAtomLaw law =
        two_atom_law(parse_complex(o.b11), parse_complex(o.b22), parse_complex(o.b12),
                     parse_complex(o.bt1), parse_complex(o.bt2), parse_complex(o.ct1),
                     parse_complex(o.ct2), base);

    RunReport rep;
    rep.command = "general";
    rep.params.emplace_back("b11", json_complex(parse_complex(o.b11)));
    rep.params.emplace_back("b22", json_complex(parse_complex(o.b22)));
    rep.params.emplace_back("b12", json_complex(parse_complex(o.b12)));
    rep.params.emplace_back("bt1", json_complex(parse_complex(o.bt1)));
    rep.params.emplace_back("bt2", json_complex(parse_complex(o.bt2)));
    rep.params.emplace_back("ct1", json_complex(parse_complex(o.ct1)));
    rep.params.emplace_back("ct2", json_complex(parse_complex(o.ct2)));
    render_a_params(o.a, rep);
    rep.params.emplace_back("k", json_int(o.k));
    rep.params.emplace_back("theta", json_complex(law.theta()));
    rep.params.emplace_back("zeta", json_complex(law.zeta()));
    rep.params.emplace_back("weight", law.zeta_degenerate() ? std::string("null")
                                                            : json_complex(law.weight()));

    for (int k = 1; k <= o.k; ++k) {
        ReportRow row;
        row.k = k;
        row.value = law.moment(k);
        rep.rows.push_back(row);
    }
    emit(rep, o.format);
    return 0;
}

struct WignerLimitOpts {
    std::string spec = "span";
    std::string alpha = "1";
    int m = 1;
    int wn = 1, wm = 1, wh = 1, ws = 1;
    int k = 4;
    std::string format = "json";
};

int run_wigner_limit(const WignerLimitOpts& o) {
    RunReport rep;
    rep.command = "wigner-limit";
    rep.params.emplace_back("spec", json_string(o.spec));

    if (o.spec == "span") {
        const cplx alpha = parse_complex(o.alpha);
        rep.params.emplace_back("alpha", json_complex(alpha));
        rep.params.emplace_back("m", json_int(o.m));
        rep.params.emplace_back("k", json_int(o.k));
        bool readings_differ = false;
        std::string alt = "[";
        for (int k = 1; k <= o.k; ++k) {
            const double v = wigner_ls_limit_moment(alpha, o.m, k);
            const double v_alt = wigner_ls_limit_moment_alt(alpha, o.m, k);
            if (v != v_alt) readings_differ = true;
            if (k > 1) alt += ',';
            alt += json_number(v_alt);
            ReportRow row;
            row.k = k;
            row.value = v;
            rep.rows.push_back(row);
        }
        alt += ']';
        // The statement-style scaling (|alpha| D_m)^{k/2}; shown whenever it
        // disagrees with the moment-verified (|alpha|^2 D_m)^{k/2}.
        if (readings_differ) rep.params.emplace_back("statement_scaling", alt);
    } else if (o.spec == "general") {
        rep.params.emplace_back("n", json_int(o.wn));
        rep.params.emplace_back("m", json_int(o.wm));
        rep.params.emplace_back("h", json_int(o.wh));
        rep.params.emplace_back("s", json_int(o.ws));
        rep.params.emplace_back("k", json_int(o.k));
        const TwoAtomLaw law = wigner_general_poly_limit(
            o.wn, o.wm, o.wh, o.ws, t_operator_limit_law(1, 2 * o.k + 2));
        rep.params.emplace_back("theta", json_complex(law.theta()));
        rep.params.emplace_back("zeta", json_complex(law.zeta()));
        rep.params.emplace_back("weight", law.zeta_degenerate()
                                              ? std::string("null")
                                              : json_complex(law.weight()));
        for (int k = 1; k <= o.k; ++k) {
            ReportRow row;
            row.k = k;
            row.value = law.moment(k);
            rep.rows.push_back(row);
        }
    } else {
        throw std::invalid_argument("wigner-limit: unknown spec '" + o.spec + "'");
    }
    emit(rep, o.format);
    return 0;
}

struct CheckOpts {
    int trials = 100;
    int kmax = 8;
    double tol = 1e-9;
    std::uint64_t seed = 42;
    std::string format = "json";
};

void add_check_options(CLI::App* cmd, CheckOpts& o) {
    cmd->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
    cmd->add_option("--kmax", o.kmax)->check(CLI::PositiveNumber);
    cmd->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed);
    cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
}

// Cross-checks the closed form, the factorization oracle, the matrix lift
// and the explicit infinitesimal formula on random parameter draws.
int run_oracle_check(const CheckOpts& o) {
    Draw d(o.seed);
    std::vector<double> gap_closed_v(static_cast<std::size_t>(o.kmax), 0.0);
    std::vector<double> gap_closed_e(static_cast<std::size_t>(o.kmax), 0.0);
    std::vector<double> gap_lift_v(static_cast<std::size_t>(o.kmax), 0.0);
    std::vector<double> gap_lift_e(static_cast<std::size_t>(o.kmax), 0.0);
    std::vector<double> gap_inf(static_cast<std::size_t>(o.kmax), 0.0);

    for (int t = 0; t < o.trials; ++t) {
        const SpanParams params = draw_span_params(d);
        const AMomentData a = AMomentData::from_moments(draw_a_moments(d, o.kmax));
        const BFamilyMoments b =
            BFamilyMoments::mean_and_second(params.b_mean, params.b_second);
        const NCPolynomial p = span_polynomial(params.alpha, params.beta);
        for (int k = 1; k <= o.kmax; ++k) {
            const DualScalar a_k = a(NCWord::power(NCLetter::a(), k));
            const DualScalar oracle = eval_poly_moment(p, k, a, b);
            const DualScalar closed = span_moment(params, k, a_k);
            const DualScalar lift = lift_span_moment(params, k, a_k);
            const cplx inf = inf_span_moment_formula(params, k, a_k);
            auto& cv = gap_closed_v[static_cast<std::size_t>(k - 1)];
            auto& ce = gap_closed_e[static_cast<std::size_t>(k - 1)];
            auto& lv = gap_lift_v[static_cast<std::size_t>(k - 1)];
            auto& le = gap_lift_e[static_cast<std::size_t>(k - 1)];
            auto& ie = gap_inf[static_cast<std::size_t>(k - 1)];
            cv = std::max(cv, rel_gap(closed.value, oracle.value));
            ce = std::max(ce, rel_gap(closed.eps, oracle.eps));
            lv = std::max(lv, rel_gap(lift.value, oracle.value));
            le = std::max(le, rel_gap(lift.eps, oracle.eps));
            ie = std::max(ie, rel_gap(inf, oracle.eps));
        }
    }

    RunReport rep;
    rep.command = "oracle-check";
    rep.params.emplace_back("trials", json_int(o.trials));
    rep.params.emplace_back("kmax", json_int(o.kmax));
    rep.params.emplace_back("tol", json_number(o.tol));
    rep.params.emplace_back("seed", json_int(static_cast<long long>(o.seed)));
    for (int k = 1; k <= o.kmax; ++k) {
        const std::size_t i = static_cast<std::size_t>(k - 1);
        ReportRow row;
        row.k = k;
        row.value = cplx(gap_closed_v[i], gap_closed_e[i]);
        row.eps = cplx(gap_lift_v[i], gap_lift_e[i]);
        row.gap = std::max({gap_closed_v[i], gap_closed_e[i], gap_lift_v[i],
                            gap_lift_e[i], gap_inf[i]});
        if (*row.gap > o.tol) rep.pass = false;
        rep.rows.push_back(row);
    }
    emit(rep, o.format);
    return rep.pass ? 0 : 1;
}

int run_lift_check(const CheckOpts& o) {
    Draw d(o.seed);
    std::vector<double> gap_v(static_cast<std::size_t>(o.kmax), 0.0);
    std::vector<double> gap_e(static_cast<std::size_t>(o.kmax), 0.0);
    double power_gap = 0.0;

    for (int t = 0; t < o.trials; ++t) {
        const SpanParams params = draw_span_params(d);
        const AMomentData a = AMomentData::from_moments(draw_a_moments(d, o.kmax));
        const LiftedTriple triple = make_lifted_triple(params);
        for (int k = 1; k <= o.kmax; ++k) {
            const DualScalar a_k = a(NCWord::power(NCLetter::a(), k));
            const DualScalar lift = lift_span_moment(params, k, a_k);
            const DualScalar closed = span_moment(params, k, a_k);
            gap_v[static_cast<std::size_t>(k - 1)] = std::max(
                gap_v[static_cast<std::size_t>(k - 1)], rel_gap(lift.value, closed.value));
            gap_e[static_cast<std::size_t>(k - 1)] = std::max(
                gap_e[static_cast<std::size_t>(k - 1)], rel_gap(lift.eps, closed.eps));
            const DualMatrix2 seq = matrix_power_seq(triple.transfer, k);
            const DualMatrix2 sqr = matrix_power_square(triple.transfer, k);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    power_gap = std::max(power_gap, rel_gap(sqr.e[i][j].value, seq.e[i][j].value));
                    power_gap = std::max(power_gap, rel_gap(sqr.e[i][j].eps, seq.e[i][j].eps));
                }
        }
    }

    RunReport rep;
    rep.command = "lift-check";
    rep.params.emplace_back("trials", json_int(o.trials));
    rep.params.emplace_back("kmax", json_int(o.kmax));
    rep.params.emplace_back("tol", json_number(o.tol));
    rep.params.emplace_back("seed", json_int(static_cast<long long>(o.seed)));
    rep.params.emplace_back("power_route_gap", json_number(power_gap));
    for (int k = 1; k <= o.kmax; ++k) {
        const std::size_t i = static_cast<std::size_t>(k - 1);
        ReportRow row;
        row.k = k;
        row.value = cplx(gap_v[i], gap_e[i]);
        row.gap = std::max(gap_v[i], gap_e[i]);
        if (*row.gap > o.tol) rep.pass = false;
        rep.rows.push_back(row);
    }
    if (power_gap > 1e-12) rep.pass = false;
    emit(rep, o.format);
    return rep.pass ? 0 : 1;
}

struct CatalanOpts {
    int nmax = 10;
    std::string format = "json";
};

int run_catalan_check(const CatalanOpts& o) {
    RunReport rep;
    rep.command = "catalan-check";
    rep.params.emplace_back("nmax", json_int(o.nmax));

    bool ok = true;
    // Exact growth identity (n+2) C_{n+1} = 2(2n+1) C_n.
    for (int n = 0; n <= 15; ++n)
        ok = ok && (static_cast<long long>(n + 2) * catalan(n + 1) ==
                    2LL * (2 * n + 1) * catalan(n));
    // Two-sided bound 2 C_n^2 C_m^2 <= C_{n+m}^2 <= C_{2n} C_{2m}.
    for (int n = 1; n <= o.nmax; ++n)
        for (int m = 1; m <= o.nmax; ++m) {
            const __int128 lhs = static_cast<__int128>(2) * catalan(n) * catalan(n) *
                                 catalan(m) * catalan(m);
            const __int128 mid = static_cast<__int128>(catalan(n + m)) * catalan(n + m);
            const __int128 rhs = static_cast<__int128>(catalan(2 * n)) * catalan(2 * m);
            ok = ok && lhs <= mid && mid <= rhs;
        }
    rep.pass = ok;

    for (int k = 1; k <= o.nmax; ++k) {
        ReportRow row;
        row.k = k;
        row.value = static_cast<double>(catalan(k));
        rep.rows.push_back(row);
    }
    emit(rep, o.format);
    return rep.pass ? 0 : 1;
}

struct RmtOpts {
    std::string spec = "t";
    int m = 1;
    std::string alpha = "1";
    int wn = 1, wm = 1, wh = 1, ws = 1;
    int k = 2;
    int n = 600;
    int n0 = 30;
    int samples = 400;
    std::uint64_t seed = 0;
    std::string ensemble = "complex";
    std::string entry_law = "gaussian";
    double tol_abs = 0.1;
    double tol_rel = 0.1;
    bool serial = false;
    std::string format = "json";
};

int run_rmt(const RmtOpts& o) {
    WignerConfig config;
    config.ensemble = o.ensemble == "real" ? Ensemble::real : Ensemble::complex;
    config.entry_law = o.entry_law == "rademacher" ? EntryLaw::rademacher : EntryLaw::gaussian;
    config.n = o.n;
    config.n0 = o.n0;
    config.samples = o.samples;
    config.seed = o.seed;

    PolySpec spec = o.spec == "t"      ? PolySpec::t_power(o.m)
                    : o.spec == "span" ? PolySpec::span(parse_complex(o.alpha), o.m)
                                       : PolySpec::general_word(o.wn, o.wm, o.wh, o.ws);

    const std::vector<MCEstimate> estimates = mc_moment_estimates(
        spec, o.k, config, o.serial ? Exec::serial : Exec::openmp);

    RunReport rep;
    rep.command = "rmt";
    rep.params.emplace_back("spec", json_string(o.spec));
    if (o.spec == "t" || o.spec == "span") rep.params.emplace_back("m", json_int(o.m));
    if (o.spec == "span")
        rep.params.emplace_back("alpha", json_complex(parse_complex(o.alpha)));
    if (o.spec == "general") {
        rep.params.emplace_back("wn", json_int(o.wn));
        rep.params.emplace_back("wm", json_int(o.wm));
        rep.params.emplace_back("wh", json_int(o.wh));
        rep.params.emplace_back("ws", json_int(o.ws));
    }
    rep.params.emplace_back("n", json_int(o.n));
    rep.params.emplace_back("n0", json_int(o.n0));
    rep.params.emplace_back("samples", json_int(o.samples));
    rep.params.emplace_back("seed", json_int(static_cast<long long>(o.seed)));
    rep.params.emplace_back("ensemble", json_string(o.ensemble));
    rep.params.emplace_back("entry_law", json_string(o.entry_law));
    rep.params.emplace_back("tol_abs", json_number(o.tol_abs));
    rep.params.emplace_back("tol_rel", json_number(o.tol_rel));

    for (const MCEstimate& e : estimates) {
        ReportRow row;
        row.k = e.k;
        row.value = e.mean;
        row.std_error = e.std_error;
        row.prediction = e.prediction;
        row.gap = e.abs_gap;
        double tol = 3.0 * e.std_error;
        if (e.prediction != cplx(0.0))
            tol = std::max({tol, o.tol_abs, o.tol_rel * std::abs(e.prediction)});
        if (e.abs_gap > tol) rep.pass = false;
        rep.rows.push_back(row);
    }
    emit(rep, o.format);
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"moment sequences of polynomials in monotone independent elements"};
    app.require_subcommand(1);
    int rc = 0;

    SpanOpts span_opts;
    auto* span_cmd = app.add_subcommand("span", "moments of alpha*ab + beta*ba");
    add_span_options(span_cmd, span_opts, true);
    span_cmd->callback([&] { rc = run_span_like("span", span_opts, false); });

    SpanOpts anticomm_opts;
    auto* anticomm_cmd = app.add_subcommand("anticomm", "moments of ab + ba");
    add_span_options(anticomm_cmd, anticomm_opts, false);
    anticomm_cmd->callback([&] { rc = run_span_like("anticomm", anticomm_opts, false); });

    SpanOpts comm_opts;
    auto* comm_cmd = app.add_subcommand("comm", "moments of i(ab - ba)");
    add_span_options(comm_cmd, comm_opts, false);
    comm_cmd->callback([&] { rc = run_span_like("comm", comm_opts, false); });

    SpanOpts inf_span_opts;
    auto* inf_span_cmd = app.add_subcommand(
        "inf-span", "span moments with the infinitesimal part from the explicit formula");
    add_span_options(inf_span_cmd, inf_span_opts, true);
    inf_span_cmd->callback([&] { rc = run_span_like("inf-span", inf_span_opts, true); });

    GeneralOpts general_opts;
    auto* general_cmd =
        app.add_subcommand("general", "two-atom law of b1*a*c1*a*b1 + b2*a*c2*a*b2");
    general_cmd->add_option("--b11", general_opts.b11, "phi(b1 b1)");
    general_cmd->add_option("--b22", general_opts.b22, "phi(b2 b2)");
    general_cmd->add_option("--b12", general_opts.b12, "phi(b1 b2) = phi(b2 b1)");
    general_cmd->add_option("--bt1", general_opts.bt1, "phi(b1)");
    general_cmd->add_option("--bt2", general_opts.bt2, "phi(b2)");
    general_cmd->add_option("--ct1", general_opts.ct1, "phi(c1)");
    general_cmd->add_option("--ct2", general_opts.ct2, "phi(c2)");
    general_cmd->add_option("--k", general_opts.k)->check(CLI::PositiveNumber);
    add_a_options(general_cmd, general_opts.a);
    general_cmd->add_option("--format", general_opts.format)
        ->check(CLI::IsMember({"json", "csv"}));
    general_cmd->callback([&] { rc = run_general(general_opts); });

    WignerLimitOpts wl_opts;
    auto* wl_cmd = app.add_subcommand("wigner-limit",
                                      "closed-form partial-trace limit predictions");
    wl_cmd->add_option("--spec", wl_opts.spec)->check(CLI::IsMember({"span", "general"}));
    wl_cmd->add_option("--alpha", wl_opts.alpha);
    wl_cmd->add_option("--m", wl_opts.m)->check(CLI::PositiveNumber);
    wl_cmd->add_option("--wn", wl_opts.wn)->check(CLI::PositiveNumber);
    wl_cmd->add_option("--wm", wl_opts.wm)->check(CLI::PositiveNumber);
    wl_cmd->add_option("--wh", wl_opts.wh)->check(CLI::PositiveNumber);
    wl_cmd->add_option("--ws", wl_opts.ws)->check(CLI::PositiveNumber);
    wl_cmd->add_option("--k", wl_opts.k)->check(CLI::PositiveNumber);
    wl_cmd->add_option("--format", wl_opts.format)->check(CLI::IsMember({"json", "csv"}));
    wl_cmd->callback([&] { rc = run_wigner_limit(wl_opts); });

    CheckOpts oracle_opts;
    auto* oracle_cmd = app.add_subcommand(
        "oracle-check", "closed form vs factorization oracle vs matrix lift");
    add_check_options(oracle_cmd, oracle_opts);
    oracle_cmd->callback([&] { rc = run_oracle_check(oracle_opts); });

    CheckOpts lift_opts;
    auto* lift_cmd = app.add_subcommand("lift-check", "matrix lift vs closed form");
    add_check_options(lift_cmd, lift_opts);
    lift_cmd->callback([&] { rc = run_lift_check(lift_opts); });

    CatalanOpts catalan_opts;
    auto* catalan_cmd =
        app.add_subcommand("catalan-check", "Catalan identities and moment bounds");
    catalan_cmd->add_option("--nmax", catalan_opts.nmax)->check(CLI::PositiveNumber);
    catalan_cmd->add_option("--format", catalan_opts.format)
        ->check(CLI::IsMember({"json", "csv"}));
    catalan_cmd->callback([&] { rc = run_catalan_check(catalan_opts); });

    RmtOpts rmt_opts;
    auto* rmt_cmd = app.add_subcommand(
        "rmt", "Wigner Monte Carlo vs closed-form partial-trace limits");
    rmt_cmd->add_option("--spec", rmt_opts.spec)
        ->check(CLI::IsMember({"t", "span", "general"}));
    rmt_cmd->add_option("--m", rmt_opts.m)->check(CLI::PositiveNumber);
    rmt_cmd->add_option("--alpha", rmt_opts.alpha);
    rmt_cmd->add_option("--wn", rmt_opts.wn)->check(CLI::PositiveNumber);
    rmt_cmd->add_option("--wm", rmt_opts.wm)->check(CLI::PositiveNumber);
    rmt_cmd->add_option("--wh", rmt_opts.wh)->check(CLI::PositiveNumber);
    rmt_cmd->add_option("--ws", rmt_opts.ws)->check(CLI::PositiveNumber);
    rmt_cmd->add_option("--k", rmt_opts.k)->check(CLI::PositiveNumber);
    rmt_cmd->add_option("--n", rmt_opts.n)->check(CLI::PositiveNumber);
    rmt_cmd->add_option("--n0", rmt_opts.n0)->check(CLI::PositiveNumber);
    rmt_cmd->add_option("--samples", rmt_opts.samples)->check(CLI::PositiveNumber);
    rmt_cmd->add_option("--seed", rmt_opts.seed);
    rmt_cmd->add_option("--ensemble", rmt_opts.ensemble)
        ->check(CLI::IsMember({"complex", "real"}));
    rmt_cmd->add_option("--entry-law", rmt_opts.entry_law)
        ->check(CLI::IsMember({"gaussian", "rademacher"}));
    rmt_cmd->add_option("--tol-abs", rmt_opts.tol_abs);
    rmt_cmd->add_option("--tol-rel", rmt_opts.tol_rel);
    rmt_cmd->add_flag("--serial", rmt_opts.serial, "disable the parallel sample loop");
    rmt_cmd->add_option("--format", rmt_opts.format)->check(CLI::IsMember({"json", "csv"}));
    rmt_cmd->callback([&] { rc = run_rmt(rmt_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
