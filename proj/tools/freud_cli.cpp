// Command-line front end: coefficient tables, polynomial dumps, the identity
// verification suite, and coefficient series for survey figures. All numeric
// I/O is decimal strings; CSV is UTF-8 with LF line endings and a mandatory
// header; JSON keys are emitted in a stable order.
//
// Exit codes: 0 success, 2 usage/config error, 3 numerical non-convergence,
// 4 cross-check or consistency failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "freud/hermite.hpp"
#include "freud/verify.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string t_list;
    int n_max = 12;
    int prec_bits = 256;
    std::string quad_tol = "1e-40";
    std::string tol_exact = "1e-18";
    std::string tol_quad = "1e-12";
    int digits_out = 30;
    std::string format = "csv";
    std::string out_path;
    std::string checks;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

std::vector<freud::Scalar> parse_t_values(const std::string& list) {
    std::vector<freud::Scalar> out;
    for (const auto& part : split_list(list)) out.push_back(freud::scalar_from_decimal(part));
    if (out.empty()) throw std::invalid_argument("--t: no values given");
    return out;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

struct ParsedCommon {
    std::vector<freud::Scalar> t_values;
    freud::Scalar quad_tol, tol_exact, tol_quad;
};

ParsedCommon validate(const CommonOpts& o, bool needs_t) {
    if (o.prec_bits < 64) throw std::invalid_argument("--prec-bits must be at least 64");
    if (o.n_max < 0) throw std::invalid_argument("--nmax must be nonnegative");
    if (o.digits_out < 2) throw std::invalid_argument("--digits-out must be at least 2");
    if (o.format != "csv" && o.format != "json")
        throw std::invalid_argument("--format must be csv or json");
    freud::set_working_precision(o.prec_bits);
    ParsedCommon p;
    p.quad_tol = freud::scalar_from_decimal(o.quad_tol);
    p.tol_exact = freud::scalar_from_decimal(o.tol_exact);
    p.tol_quad = freud::scalar_from_decimal(o.tol_quad);
    if (p.quad_tol <= 0 || p.tol_exact <= 0 || p.tol_quad <= 0)
        throw std::invalid_argument("tolerances must be positive");
    if (needs_t) p.t_values = parse_t_values(o.t_list);
    return p;
}

freud::Scalar single_t(const ParsedCommon& p, const char* cmd) {
    if (p.t_values.size() != 1)
        throw std::invalid_argument(std::string(cmd) +
                                    " expects exactly one --t value (its output carries no t column)");
    return p.t_values.front();
}

// ------------------------------------------------------------------ coeffs

int cmd_coeffs(const CommonOpts& o) {
    ParsedCommon p = validate(o, true);
    freud::Scalar t = single_t(p, "coeffs");
    freud::WeightSpec spec = freud::make_weight_spec(t, o.prec_bits, p.quad_tol);
    int n_max = o.n_max;
    int beta_max = 2 * n_max + 3;
    int r_max = std::max(n_max, 1);
    auto moments = freud::moment_table_for(spec, 2 * (beta_max + 1), std::max(2 * r_max + 1, 3));
    freud::NormalizationTable norm = freud::normalizations(*moments, beta_max, r_max);
    freud::CoefficientTables tables = freud::build_coefficient_tables(*moments, norm, n_max);

    auto val = [&](const std::vector<freud::Scalar>& v, int n) {
        return freud::to_decimal(freud::CoefficientTables::at(v, n), o.digits_out);
    };
    if (o.format == "csv") {
        std::ostringstream os;
        os << "n,beta,xi,psi,zeta,a_hat,b_hat,a_tilde,b_tilde,h,r\n";
        for (int n = 0; n <= n_max; ++n) {
            os << n << ',' << val(tables.beta, n) << ',' << val(tables.xi, n) << ','
               << val(tables.psi, n) << ',' << val(tables.zeta, n) << ',' << val(tables.a_hat, n)
               << ',' << val(tables.b_hat, n) << ',' << val(tables.a_tilde, n) << ','
               << val(tables.b_tilde, n) << ',' << val(tables.h, n) << ',' << val(tables.r, n)
               << '\n';
        }
        write_output(os.str(), o.out_path);
    } else {
        ordered_json j;
        j["t"] = freud::to_decimal(t, o.digits_out);
        j["n_max"] = n_max;
        j["rows"] = ordered_json::array();
        for (int n = 0; n <= n_max; ++n) {
            ordered_json row;
            row["n"] = n;
            row["beta"] = val(tables.beta, n);
            row["xi"] = val(tables.xi, n);
            row["psi"] = val(tables.psi, n);
            row["zeta"] = val(tables.zeta, n);
            row["a_hat"] = val(tables.a_hat, n);
            row["b_hat"] = val(tables.b_hat, n);
            row["a_tilde"] = val(tables.a_tilde, n);
            row["b_tilde"] = val(tables.b_tilde, n);
            row["h"] = val(tables.h, n);
            row["r"] = val(tables.r, n);
            j["rows"].push_back(std::move(row));
        }
        write_output(j.dump(2) + "\n", o.out_path);
    }
    return 0;
}

// -------------------------------------------------------------------- poly

int cmd_poly(const CommonOpts& o, const std::string& family, int n) {
    bool rational = family == "O" || family == "S";
    ParsedCommon p = validate(o, !rational);
    if (n < 0) throw std::invalid_argument("--n must be nonnegative");

    std::vector<std::string> coeff_strings;
    if (rational) {
        freud::HermiteFamilies fam = freud::build_hermite(n / 2 + 2);
        const auto& poly = family == "O" ? fam.O.at(static_cast<size_t>(n))
                                         : fam.S.at(static_cast<size_t>(n));
        for (int k = 0; k <= n; ++k)
            coeff_strings.push_back(freud::rational_to_string(poly.coeff(k)));
    } else {
        freud::Scalar t = single_t(p, "poly");
        freud::VerifyContext ctx =
            freud::build_context(t, std::max(n + 2, 4), o.prec_bits, p.quad_tol);
        const freud::PolyFamily* fam = nullptr;
        if (family == "P") fam = &ctx.P;
        else if (family == "Q") fam = &ctx.Q;
        else if (family == "P_hat") fam = &ctx.P_hat;
        else if (family == "P_tilde") fam = &ctx.P_tilde;
        else if (family == "Q_hat") fam = &ctx.Q_hat;
        else if (family == "Q_tilde") fam = &ctx.Q_tilde;
        else throw std::invalid_argument("unknown family: " + family);
        if (n >= fam->size())
            throw std::invalid_argument("family not buildable to the requested degree");
        const auto& poly = fam->at(n);
        for (int k = 0; k <= poly.degree(); ++k)
            coeff_strings.push_back(freud::to_decimal(poly.coeff(k), o.digits_out));
    }
    if (o.format == "csv") {
        std::ostringstream os;
        for (const auto& s : coeff_strings) os << s << '\n';
        write_output(os.str(), o.out_path);
    } else {
        ordered_json j;
        j["family"] = family;
        j["n"] = n;
        j["coefficients"] = coeff_strings;
        write_output(j.dump(2) + "\n", o.out_path);
    }
    return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const CommonOpts& o, bool checks_given) {
    ParsedCommon p = validate(o, true);
    freud::VerifyConfig cfg;
    cfg.t_values = p.t_values;
    cfg.n_max = o.n_max;
    cfg.prec_bits = o.prec_bits;
    cfg.quad_tol = p.quad_tol;
    cfg.tol_exact = p.tol_exact;
    cfg.tol_quad = p.tol_quad;

    std::optional<std::vector<std::string>> subset;
    if (checks_given) {
        subset = split_list(o.checks);
        for (const auto& id : *subset)
            if (!freud::is_known_check(id)) throw std::invalid_argument("unknown check id: " + id);
    }
    freud::VerificationReport report = freud::run_suite(cfg, subset);

    ordered_json j;
    j["config"]["t"] = ordered_json::array();
    for (const auto& t : cfg.t_values) j["config"]["t"].push_back(freud::to_decimal(t, o.digits_out));
    j["config"]["n_max"] = cfg.n_max;
    j["config"]["prec_bits"] = cfg.prec_bits;
    j["config"]["quad_tol"] = freud::to_decimal(cfg.quad_tol, 6);
    j["config"]["tol_exact"] = freud::to_decimal(cfg.tol_exact, 6);
    j["config"]["tol_quad"] = freud::to_decimal(cfg.tol_quad, 6);
    j["records"] = ordered_json::array();
    for (const auto& rec : report.records) {
        ordered_json r;
        r["check_id"] = rec.check_id;
        r["t"] = rec.t ? ordered_json(freud::to_decimal(*rec.t, o.digits_out)) : ordered_json(nullptr);
        r["index_lo"] = rec.index_lo;
        r["index_hi"] = rec.index_hi;
        r["max_abs_residual"] = freud::to_decimal(rec.max_abs_residual, 12);
        r["max_rel_residual"] = freud::to_decimal(rec.max_rel_residual, 12);
        r["tolerance"] = freud::to_decimal(rec.tolerance, 6);
        r["pass"] = rec.pass;
        r["runtime_ms"] = rec.runtime_ms;
        r["detail"] = rec.detail;
        j["records"].push_back(std::move(r));
    }
    j["all_pass"] = report.all_pass;
    write_output(j.dump(2) + "\n", o.out_path);
    return report.all_pass ? 0 : 4;
}

// ------------------------------------------------------------------ figure

int cmd_figure(const CommonOpts& o) {
    ParsedCommon p = validate(o, true);
    freud::Scalar t = single_t(p, "figure");
    freud::FigureSeries series = freud::figure_data(t, o.n_max, o.prec_bits, p.quad_tol);
    std::ostringstream os;
    os << "n,beta,xi,zeta,psi\n";
    for (int n = 0; n <= o.n_max; ++n) {
        os << n << ',' << freud::to_decimal(series.beta[static_cast<size_t>(n)], o.digits_out)
           << ',' << freud::to_decimal(series.xi[static_cast<size_t>(n)], o.digits_out) << ','
           << freud::to_decimal(series.zeta[static_cast<size_t>(n)], o.digits_out) << ','
           << freud::to_decimal(series.psi[static_cast<size_t>(n)], o.digits_out) << '\n';
    }
    write_output(os.str(), o.out_path);
    return 0;
}

void add_common(CLI::App* app, CommonOpts& o, bool with_t = true) {
    if (with_t) app->add_option("--t", o.t_list, "weight parameter t (comma list where supported)");
    app->add_option("--nmax", o.n_max, "largest sequence index");
    app->add_option("--prec-bits", o.prec_bits, "working precision in bits (default 256)");
    app->add_option("--quad-tol", o.quad_tol, "quadrature relative tolerance (default 1e-40)");
    app->add_option("--tol-exact", o.tol_exact, "tolerance for algebraic identities (default 1e-18)");
    app->add_option("--tol-quad", o.tol_quad, "tolerance for quadrature-backed checks (default 1e-12)");
    app->add_option("--digits-out", o.digits_out, "significant digits in output (default 30)");
    app->add_option("--format", o.format, "output format: csv or json");
    app->add_option("--out", o.out_path, "write to file instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew-orthogonal polynomial toolkit for the quartic weight exp(-x^4 + t x^2)"};
    app.require_subcommand(1);

    CommonOpts oc, op, ov, of;
    std::string family = "P";
    int poly_n = 0;

    CLI::App* coeffs = app.add_subcommand("coeffs", "emit coefficient tables");
    add_common(coeffs, oc);
    CLI::App* poly = app.add_subcommand("poly", "dump polynomial coefficients (ascending degree)");
    add_common(poly, op);
    poly->add_option("--family", family, "P|Q|P_hat|P_tilde|Q_hat|Q_tilde|O|S");
    poly->add_option("--n", poly_n, "member index");
    CLI::App* verify = app.add_subcommand("verify", "run the identity verification suite");
    add_common(verify, ov);
    CLI::Option* checks_opt =
        verify->add_option("--checks", ov.checks, "comma list of registry check ids");
    CLI::App* figure = app.add_subcommand("figure", "emit n,beta,xi,zeta,psi series");
    add_common(figure, of);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (coeffs->parsed()) return cmd_coeffs(oc);
        if (poly->parsed()) return cmd_poly(op, family, poly_n);
        if (verify->parsed()) return cmd_verify(ov, checks_opt->count() > 0);
        if (figure->parsed()) return cmd_figure(of);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const freud::NonConvergence& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const freud::CrossCheckFailure& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return 4;
    } catch (const freud::PositivityLoss& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return 4;
    } catch (const freud::ParityViolation& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return 4;
    } catch (const freud::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::out_of_range& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
