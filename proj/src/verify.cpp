#include "freud/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace freud {

namespace {

using Clock = std::chrono::steady_clock;

Scalar rel_dev(const Scalar& a, const Scalar& b) {
    Scalar scale = abs(a);
    if (abs(b) > scale) scale = abs(b);
    if (scale == 0) return Scalar(0);
    return abs(a - b) / scale;
}

struct ResidualTracker {
    Scalar max_abs = 0;
    Scalar max_rel = 0;
    void add(const Scalar& abs_r, const Scalar& rel_r) {
        if (abs_r > max_abs) max_abs = abs_r;
        if (rel_r > max_rel) max_rel = rel_r;
    }
    void add_rel(const Scalar& r) { add(r, r); }
};

CheckRecord finish(const std::string& id, const std::optional<Scalar>& t, int lo, int hi,
                   const ResidualTracker& tr, const Scalar& tol, const Clock::time_point& start,
                   const std::string& detail) {
    CheckRecord rec;
    rec.check_id = id;
    rec.t = t;
    rec.index_lo = lo;
    rec.index_hi = hi;
    rec.max_abs_residual = tr.max_abs;
    rec.max_rel_residual = tr.max_rel;
    rec.tolerance = tol;
    rec.pass = tr.max_rel <= tol;
    rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    rec.detail = detail;
    return rec;
}

}  // namespace

const std::vector<std::string>& check_registry() {
    static const std::vector<std::string> registry = {
        "dP1_residual",
        "beta_route_agreement",
        "structure_relation",
        "nbar_matrix_elements",
        "transition_identity",
        "xi_rh_crosscheck",
        "quasi_orthogonality_windows",
        "skew_orthogonality",
        "closed_even",
        "closed_odd",
        "closed_laguerre_even",
        "closed_laguerre_odd",
        "clarkson_identities",
        "continued_fraction_convergence",
        "kernel_biorthogonality",
        "hermite_exact",
    };
    return registry;
}

bool is_known_check(const std::string& id) {
    const auto& reg = check_registry();
    return std::find(reg.begin(), reg.end(), id) != reg.end();
}

VerifyContext build_context(const Scalar& t, int n_max, int prec_bits, const Scalar& quad_tol) {
    VerifyContext ctx;
    ctx.spec = make_weight_spec(t, prec_bits, quad_tol);
    int coeff_nmax = std::max(n_max, 11);
    int beta_max = 2 * coeff_nmax + 3;
    int r_max = coeff_nmax + 2;
    ctx.moments = moment_table_for(ctx.spec, 2 * (beta_max + 1), 2 * r_max + 1);
    ctx.norm = normalizations(*ctx.moments, beta_max, r_max);
    ctx.tables = build_coefficient_tables(*ctx.moments, ctx.norm, coeff_nmax);
    int qmax = std::max(2 * std::min(8, coeff_nmax) + 3, std::max(n_max, 2));
    qmax = std::min(qmax, 2 * coeff_nmax + 3);
    ctx.P = build_P(ctx.tables.beta, qmax);
    ctx.Q = build_Q(ctx.tables, ctx.P, qmax);
    std::tie(ctx.P_hat, ctx.P_tilde) = fold_to_laguerre(ctx.P);
    std::tie(ctx.Q_hat, ctx.Q_tilde) = fold_to_laguerre(ctx.Q);
    return ctx;
}

CheckRecord check_dp1_residual(const VerifyContext& ctx, const VerifyConfig& cfg) {
    auto start = Clock::now();
    ResidualTracker tr;
    int hi = static_cast<int>(ctx.tables.beta.size()) - 2;
    for (int n = 1; n <= hi; ++n) {
        Scalar r = abs(Scalar(n) -
                       8 * ctx.tables.beta_at(n) *
                           (ctx.tables.beta_at(n + 1) + ctx.tables.beta_at(n) +
                            ctx.tables.beta_at(n - 1)) +
                       4 * ctx.tables.t * ctx.tables.beta_at(n));
        tr.add(r, r / (1 + n));
    }
    return finish("dP1_residual", ctx.spec.t, 1, hi, tr, cfg.tol_exact, start,
                  "lattice relation n = 8 b_n (b_{n+1}+b_n+b_{n-1}) - 4 t b_n on the Hankel route");
}

CheckRecord check_skew_orthogonality(const VerifyContext& ctx, const VerifyConfig& cfg) {
    auto start = Clock::now();
    ResidualTracker tr;
    int hi = std::min(12, ctx.Q.size() - 1);
    std::vector<Scalar> norms(static_cast<size_t>(hi) + 1);
    for (int i = 0; i <= hi; ++i) norms[static_cast<size_t>(i)] = sym_norm(ctx.spec, ctx.Q.at(i));
    for (int i = 0; i <= hi; ++i) {
        for (int j = i + 1; j <= hi; ++j) {
            Scalar pair = skew_inner(*ctx.moments, ctx.Q.at(i), ctx.Q.at(j));
            Scalar expected = 0;
            if (i % 2 == 0 && j % 2 == 1 && j == i + 1)
                expected = ctx.tables.r.at(static_cast<size_t>(i) / 2);
            Scalar scale = norms[static_cast<size_t>(i)] * norms[static_cast<size_t>(j)];
            tr.add(abs(pair - expected), abs(pair - expected) / scale);
        }
    }
    return finish("skew_orthogonality", ctx.spec.t, 0, hi, tr, cfg.tol_quad, start,
                  "<Q_2i, Q_2j+1> = delta_ij r_j and vanishing same-parity pairings");
}

namespace {

CheckRecord check_beta_route_agreement(const VerifyContext& ctx, const VerifyConfig& cfg) {
    auto start = Clock::now();
    ResidualTracker tr;
    int hi = std::min<int>(20, static_cast<int>(ctx.tables.beta.size()) - 1);
    ForwardDp1Result fwd = beta_forward_dp1(ctx.tables.beta.at(1), ctx.tables.t, hi);
    for (int n = 1; n <= hi; ++n)
        tr.add_rel(rel_dev(fwd.beta.at(static_cast<size_t>(n)), ctx.tables.beta.at(static_cast<size_t>(n))));
    return finish("beta_route_agreement", ctx.spec.t, 1, hi, tr, Scalar("1e-15"), start,
                  "forward lattice iteration from the Hankel b_1 against Hankel ratios");
}

CheckRecord check_structure_relation(const VerifyContext& ctx, const VerifyConfig& cfg) {
    auto start = Clock::now();
    ResidualTracker tr;
    int hi = std::min(10, ctx.P.size() - 1);
    for (int n = 1; n <= hi; ++n)
        tr.add_rel(structure_relation_residual(ctx.P, ctx.tables.beta, n));
    return finish("structure_relation", ctx.spec.t, 1, hi, tr, cfg.tol_exact, start,
                  "P_n' = n P_{n-1} + 8 b_n b_{n-1} b_{n-2} P_{n-3} in coefficient space");
}

CheckRecord check_nbar_matrix_elements(const VerifyContext& ctx, const VerifyConfig& cfg) {
    auto start = Clock::now();
    ResidualTracker tr;
    auto inner_nbar = [&](int i, int j) {
        Poly<Scalar> nb = apply_nbar(ctx.P.at(j), ctx.tables.t);
        return sym_inner(ctx.spec, ctx.P.at(i), nb);
    };
    int kmax = 4;
    for (int k = 0; k <= kmax; ++k) {
        Scalar expect = -Scalar(2 * k + 1) / 2 * ctx.tables.h.at(static_cast<size_t>(2 * k));
        tr.add_rel(rel_dev(inner_nbar(2 * k + 1, 2 * k), expect));
        if (k >= 1) {
            Scalar e2 = Scalar(k) * ctx.tables.h.at(static_cast<size_t>(2 * k) - 1);
            tr.add_rel(rel_dev(inner_nbar(2 * k - 1, 2 * k), e2));
        }
        Scalar e3 = 4 * ctx.tables.h.at(static_cast<size_t>(k) + 3);
        tr.add_rel(rel_dev(inner_nbar(k, k + 3), e3));
    }
    return finish("nbar_matrix_elements", ctx.spec.t, 0, kmax, tr, cfg.tol_quad, start,
                  "(P_i, nbar P_j) quadrature against the banded closed forms");
}

CheckRecord check_transition_identity(const VerifyContext& ctx, const VerifyConfig& cfg) {
    auto start = Clock::now();
    int n_trunc = 12;
    FiniteMatrixBlock D = build_D(ctx.norm, n_trunc);
    FiniteMatrixBlock N = build_N(ctx.norm, n_trunc);
    FiniteMatrixBlock R = build_R(ctx.norm, n_trunc);
    FiniteMatrixBlock Q = build_Q_transition(ctx.tables.xi, ctx.tables.psi, ctx.tables.zeta, n_trunc);
    Scalar res = transition_identity_residual(Q, R, D, N, n_trunc);
    ResidualTracker tr;
    tr.add_rel(res);
    return finish("transition_identity", ctx.spec.t, 0, n_trunc - 5, tr, cfg.tol_exact, start,
                  "interior residual of Q^T R^-1 Q + D^-1 N D^-1 at finite truncation");
}

CheckRecord check_xi_rh(const VerifyContext& ctx, const VerifyConfig& cfg) {
    auto start = Clock::now();
    ResidualTracker tr;
    const auto& h = ctx.tables.h;
    const auto& r = ctx.tables.r;
    int hi = 8;
    for (int l = 0; l <= hi; ++l) {
        Scalar xi_rh = 4 * r.at(static_cast<size_t>(l) + 1) / h.at(static_cast<size_t>(2 * l));
        tr.add_rel(rel_dev(ctx.tables.xi_at(l), xi_rh));
        Scalar zeta_rh = -4 * r.at(static_cast<size_t>(l) + 2) / h.at(static_cast<size_t>(2 * l) + 1);
        tr.add_rel(rel_dev(ctx.tables.zeta_at(l), zeta_rh));
        Scalar psi_rh = 4 * ctx.tables.xi_at(l + 1) * r.at(static_cast<size_t>(l) + 1) /
                            h.at(static_cast<size_t>(2 * l) + 1) -
                        (l + 1) * r.at(static_cast<size_t>(l) + 1) / h.at(static_cast<size_t>(2 * l) + 2);
        tr.add_rel(rel_dev(ctx.tables.psi_at(l), psi_rh));
    }
    return finish("xi_rh_crosscheck", ctx.spec.t, 0, hi, tr, cfg.tol_quad, start,
                  "recurrence-built xi/psi/zeta against their Pfaffian/Hankel ratio forms");
}

CheckRecord check_quasi_windows(const VerifyContext& ctx, const VerifyConfig& cfg) {
    auto start = Clock::now();
    ResidualTracker tr;
    int hi = 6;
    std::vector<Scalar> norms(static_cast<size_t>(2 * hi) + 2);
    for (int i = 0; i <= 2 * hi + 1; ++i)
        norms[static_cast<size_t>(i)] = sym_norm(ctx.spec, ctx.Q.at(i));
    for (int n = 0; n <= hi; ++n) {
        for (int m = 0; m <= hi; ++m) {
            if (std::abs(n - m) <= 1) continue;
            Scalar v = sym_inner(ctx.spec, ctx.Q.at(2 * n), ctx.Q.at(2 * m));
            tr.add(abs(v), abs(v) / (norms[static_cast<size_t>(2 * n)] * norms[static_cast<size_t>(2 * m)]));
        }
    }
    for (int n = 0; n <= hi; ++n) {
        for (int m = 0; m <= hi; ++m) {
            if (std::abs(n - m) <= 2) continue;
            Scalar v = sym_inner(ctx.spec, ctx.Q.at(2 * n + 1), ctx.Q.at(2 * m + 1));
            tr.add(abs(v),
                   abs(v) / (norms[static_cast<size_t>(2 * n) + 1] * norms[static_cast<size_t>(2 * m) + 1]));
        }
    }
    // folded windows under the half-line weights
    auto lag_norm = [&](const PolyFamily& fam, int n, int two_lambda) {
        return sqrt(laguerre_inner(ctx.spec, fam.at(n), fam.at(n), two_lambda));
    };
    for (int n = 0; n <= hi; ++n) {
        for (int m = 0; m <= hi; ++m) {
            if (std::abs(n - m) >= 2) {
                Scalar v = laguerre_inner(ctx.spec, ctx.Q_hat.at(n), ctx.Q_hat.at(m), -1);
                Scalar sc = lag_norm(ctx.Q_hat, n, -1) * lag_norm(ctx.Q_hat, m, -1);
                tr.add(abs(v), abs(v) / sc);
            }
            if (std::abs(n - m) >= 3) {
                Scalar v = laguerre_inner(ctx.spec, ctx.Q_tilde.at(n), ctx.Q_tilde.at(m), 1);
                Scalar sc = lag_norm(ctx.Q_tilde, n, 1) * lag_norm(ctx.Q_tilde, m, 1);
                tr.add(abs(v), abs(v) / sc);
            }
        }
    }
    return finish("quasi_orthogonality_windows", ctx.spec.t, 0, hi, tr, cfg.tol_quad, start,
                  "vanishing symmetric pairings outside the quasi-orthogonality windows");
}

CheckRecord check_closed(const std::string& id, const VerifyContext& ctx, const VerifyConfig& cfg) {
    auto start = Clock::now();
    ResidualTracker tr;
    int lo, hi;
    std::function<Scalar(int)> eval;
    if (id == "closed_even") {
        lo = 2; hi = 8;
        eval = [&](int n) { return closed_even_residual(ctx.Q, ctx.tables, n); };
    } else if (id == "closed_odd") {
        lo = 3; hi = 8;
        eval = [&](int n) { return closed_odd_residual(ctx.Q, ctx.tables, n); };
    } else if (id == "closed_laguerre_even") {
        lo = 2; hi = 8;
        eval = [&](int n) { return closed_laguerre_even_residual(ctx.Q_hat, ctx.tables, n); };
    } else {
        lo = 3; hi = 8;
        eval = [&](int n) { return closed_laguerre_odd_residual(ctx.Q_tilde, ctx.tables, n); };
    }
    int avail = (ctx.Q.size() - 1 - 3) / 2;  // largest n with Q_{2n+3} built
    hi = std::min(hi, avail);
    for (int n = lo; n <= hi; ++n) tr.add_rel(eval(n));
    return finish(id, ctx.spec.t, lo, hi, tr, cfg.tol_exact, start,
                  "closed three-point relation residual in coefficient space");
}

CheckRecord check_clarkson(const VerifyContext& ctx, const VerifyConfig& cfg) {
    auto start = Clock::now();
    ResidualTracker tr;
    int hi = std::min<int>(10, static_cast<int>(ctx.tables.a_hat.size()) - 2);
    const Scalar& t = ctx.tables.t;
    auto run_family = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b, int two_lambda) {
        Scalar lam = Scalar(two_lambda) / 2;
        for (int n = 0; n <= hi; ++n) {
            Scalar lhs = 2 * b.at(static_cast<size_t>(n)) + 2 * b.at(static_cast<size_t>(n) + 1) +
                         a.at(static_cast<size_t>(n)) * (2 * a.at(static_cast<size_t>(n)) - t);
            Scalar rhs = Scalar(n) + (lam + 1) / 2;
            tr.add_rel(abs(lhs - rhs) / (1 + abs(rhs)));
        }
        for (int n = 1; n <= hi; ++n) {
            const Scalar& bn = b.at(static_cast<size_t>(n));
            Scalar lhs = (2 * a.at(static_cast<size_t>(n)) - t) * (2 * a.at(static_cast<size_t>(n) - 1) - t);
            Scalar rhs = (4 * bn - n) * (4 * bn - n - lam) / (4 * bn);
            tr.add_rel(rel_dev(lhs, rhs));
        }
    };
    run_family(ctx.tables.a_hat, ctx.tables.b_hat, -1);
    run_family(ctx.tables.a_tilde, ctx.tables.b_tilde, 1);
    return finish("clarkson_identities", ctx.spec.t, 0, hi, tr, cfg.tol_quad, start,
                  "recursive relations of the semi-classical Laguerre recurrence pairs");
}

CheckRecord check_cf_convergence(const VerifyContext& ctx, const VerifyConfig& cfg) {
    auto start = Clock::now();
    ResidualTracker tr;
    const auto& beta = ctx.tables.beta;
    // exact one-level identities with the true tails substituted
    Scalar s1 = continued_fraction_step(CfSource::hat, CfParity::even, 2, ctx.tables.a_hat,
                                        ctx.tables.b_hat, beta.at(6));
    tr.add_rel(rel_dev(s1, beta.at(4)));
    Scalar s2 = continued_fraction_step(CfSource::hat, CfParity::odd, 2, ctx.tables.a_hat,
                                        ctx.tables.b_hat, beta.at(5));
    tr.add_rel(rel_dev(s2, beta.at(3)));
    Scalar s3 = continued_fraction_step(CfSource::tilde, CfParity::even, 2, ctx.tables.a_tilde,
                                        ctx.tables.b_tilde, beta.at(6));
    tr.add_rel(rel_dev(s3, beta.at(4)));
    Scalar s4 = continued_fraction_step(CfSource::tilde, CfParity::odd, 2, ctx.tables.a_tilde,
                                        ctx.tables.b_tilde, beta.at(7));
    tr.add_rel(rel_dev(s4, beta.at(5)));
    // truncated approximants of beta_4 must converge monotonically in depth
    Scalar prev_dev = -1;
    int max_depth = std::min<int>(10, static_cast<int>(ctx.tables.a_hat.size()) - 3);
    for (int depth = 2; depth <= max_depth; ++depth) {
        std::vector<Scalar> approx = beta_from_continued_fraction(
            ctx.tables.a_hat, ctx.tables.b_hat, CfParity::even, CfSource::hat, depth, 3);
        Scalar dev = abs(approx.at(2) - beta.at(4));
        if (prev_dev >= 0 && dev > prev_dev) tr.add_rel((dev - prev_dev) / prev_dev);
        prev_dev = dev;
    }
    return finish("continued_fraction_convergence", ctx.spec.t, 2, max_depth, tr, cfg.tol_exact,
                  start, "exact inversion identities and monotone truncation convergence");
}

CheckRecord check_kernel_biorthogonality(const VerifyContext& ctx, const VerifyConfig& cfg) {
    auto start = Clock::now();
    ResidualTracker tr;
    int hi = 3;
    Scalar kernel_tol = Scalar("1e-10");
    for (int i = 0; i <= hi; ++i) {
        for (int j = 0; j <= hi; ++j) {
            Scalar vals[4];
            for (int ell = 1; ell <= 4; ++ell)
                vals[ell - 1] =
                    biorthogonal_kernel_product(ctx.spec, ctx.Q_hat, ctx.Q_tilde, ell, i, j);
            Scalar scale = abs(vals[0]);
            for (int k = 1; k < 4; ++k)
                if (abs(vals[k]) > scale) scale = abs(vals[k]);
            if (scale == 0) scale = 1;
            for (int k = 1; k < 4; ++k) tr.add(abs(vals[k] - vals[0]), abs(vals[k] - vals[0]) / scale);
            // the substituted skew product reproduces the pairing normalization
            Scalar folded = folded_skew_product(ctx.spec, ctx.Q_hat, ctx.Q_tilde, i, j);
            Scalar expected = i == j ? ctx.tables.r.at(static_cast<size_t>(j)) : Scalar(0);
            Scalar rscale = sqrt(ctx.tables.r.at(static_cast<size_t>(i)) *
                                 ctx.tables.r.at(static_cast<size_t>(j)));
            tr.add(abs(folded - expected), abs(folded - expected) / rscale);
        }
    }
    return finish("kernel_biorthogonality", ctx.spec.t, 0, hi, tr, kernel_tol, start,
                  "four kernel parameterizations agree; substituted pairing gives delta_ij r_j");
}

CheckRecord check_hermite_exact(const VerifyConfig& cfg) {
    auto start = Clock::now();
    ResidualTracker tr;
    int n_hi = 15;
    HermiteFamilies fam = build_hermite(n_hi);
    for (int n = 1; n <= n_hi; ++n) {
        auto [even, odd] = hermite_closed_residuals(fam, n);
        // exact rational arithmetic: any nonzero coefficient is a failure
        tr.add_rel(even.is_zero() ? Scalar(0) : Scalar(1));
        tr.add_rel(odd.is_zero() ? Scalar(0) : Scalar(1));
    }
    // skew-Gaussian pairing structure by quadrature
    int hi = 3;
    std::vector<Scalar> diag(static_cast<size_t>(hi) + 1);
    for (int i = 0; i <= hi; ++i)
        diag[static_cast<size_t>(i)] =
            hermite_skew_product(fam.S.at(static_cast<size_t>(2 * i)),
                                 fam.S.at(static_cast<size_t>(2 * i) + 1));
    for (int i = 0; i <= hi; ++i) {
        if (diag[static_cast<size_t>(i)] <= 0) tr.add_rel(Scalar(1));
        for (int j = 0; j <= hi; ++j) {
            Scalar scale = sqrt(abs(diag[static_cast<size_t>(i)] * diag[static_cast<size_t>(j)]));
            if (i != j) {
                Scalar v = hermite_skew_product(fam.S.at(static_cast<size_t>(2 * i)),
                                                fam.S.at(static_cast<size_t>(2 * j) + 1));
                tr.add(abs(v), abs(v) / scale);
            }
            if (j > i) {
                Scalar ve = hermite_skew_product(fam.S.at(static_cast<size_t>(2 * i)),
                                                 fam.S.at(static_cast<size_t>(2 * j)));
                Scalar vo = hermite_skew_product(fam.S.at(static_cast<size_t>(2 * i) + 1),
                                                 fam.S.at(static_cast<size_t>(2 * j) + 1));
                tr.add(abs(ve), abs(ve) / scale);
                tr.add(abs(vo), abs(vo) / scale);
            }
        }
    }
    return finish("hermite_exact", std::nullopt, 0, n_hi, tr, cfg.tol_quad, start,
                  "skew-Gaussian closed relations exact; pairing structure by quadrature");
}

}  // namespace

VerificationReport run_suite(const VerifyConfig& config,
                             const std::optional<std::vector<std::string>>& subset) {
    if (subset)
        for (const auto& id : *subset)
            if (!is_known_check(id)) throw std::invalid_argument("unknown check id: " + id);
    std::vector<std::string> active = subset ? *subset : check_registry();
    if (config.t_values.empty()) throw std::invalid_argument("run_suite: no t values");

    set_working_precision(config.prec_bits);
    VerificationReport report;
    report.config = config;

    std::vector<VerifyContext> contexts;
    bool needs_context = false;
    for (const auto& id : check_registry()) {
        if (id == "hermite_exact") continue;
        if (std::find(active.begin(), active.end(), id) != active.end()) needs_context = true;
    }
    if (needs_context)
        for (const auto& t : config.t_values)
            contexts.push_back(build_context(t, config.n_max, config.prec_bits, config.quad_tol));

    for (const auto& id : check_registry()) {
        if (std::find(active.begin(), active.end(), id) == active.end()) continue;
        if (id == "hermite_exact") {
            report.records.push_back(check_hermite_exact(config));
            continue;
        }
        for (const auto& ctx : contexts) {
            if (id == "dP1_residual") report.records.push_back(check_dp1_residual(ctx, config));
            else if (id == "beta_route_agreement") report.records.push_back(check_beta_route_agreement(ctx, config));
            else if (id == "structure_relation") report.records.push_back(check_structure_relation(ctx, config));
            else if (id == "nbar_matrix_elements") report.records.push_back(check_nbar_matrix_elements(ctx, config));
            else if (id == "transition_identity") report.records.push_back(check_transition_identity(ctx, config));
            else if (id == "xi_rh_crosscheck") report.records.push_back(check_xi_rh(ctx, config));
            else if (id == "quasi_orthogonality_windows") report.records.push_back(check_quasi_windows(ctx, config));
            else if (id == "skew_orthogonality") report.records.push_back(check_skew_orthogonality(ctx, config));
            else if (id == "closed_even" || id == "closed_odd" || id == "closed_laguerre_even" ||
                     id == "closed_laguerre_odd")
                report.records.push_back(check_closed(id, ctx, config));
            else if (id == "clarkson_identities") report.records.push_back(check_clarkson(ctx, config));
            else if (id == "continued_fraction_convergence") report.records.push_back(check_cf_convergence(ctx, config));
            else if (id == "kernel_biorthogonality") report.records.push_back(check_kernel_biorthogonality(ctx, config));
        }
    }
    report.all_pass = true;
    for (const auto& rec : report.records) report.all_pass = report.all_pass && rec.pass;
    return report;
}

FigureSeries figure_data(const Scalar& t, int n_max, int prec_bits, const Scalar& quad_tol) {
    set_working_precision(prec_bits);
    WeightSpec spec = make_weight_spec(t, prec_bits, quad_tol);
    int beta_max = 2 * n_max + 3;
    auto moments = moment_table_for(spec, 2 * (beta_max + 1), 5);
    NormalizationTable norm = normalizations(*moments, beta_max, 1);
    CoefficientTables tables = build_coefficient_tables(*moments, norm, n_max);
    FigureSeries series;
    series.t = t;
    for (int n = 0; n <= n_max; ++n) {
        series.beta.push_back(tables.beta_at(n));
        series.xi.push_back(tables.xi_at(n));
        series.zeta.push_back(tables.zeta_at(n));
        series.psi.push_back(tables.psi_at(n));
    }
    return series;
}

}  // namespace freud
