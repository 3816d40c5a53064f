#include "freud/polyfam.hpp"

namespace freud {

PolyFamily build_P(const std::vector<Scalar>& beta, int n_max) {
    PolyFamily fam;
    fam.kind = FamilyKind::P;
    fam.members.reserve(static_cast<size_t>(n_max) + 1);
    fam.members.push_back(Poly<Scalar>::one());
    if (n_max >= 1) fam.members.push_back(Poly<Scalar>::x());
    for (int n = 1; n < n_max; ++n) {
        const Poly<Scalar>& pn = fam.members[static_cast<size_t>(n)];
        const Poly<Scalar>& pm = fam.members[static_cast<size_t>(n) - 1];
        fam.members.push_back(pn.shifted(1) - beta.at(static_cast<size_t>(n)) * pm);
    }
    return fam;
}

PolyFamily build_Q(const CoefficientTables& tables, const PolyFamily& P, int n_max) {
    PolyFamily fam;
    fam.kind = FamilyKind::Q;
    fam.members.reserve(static_cast<size_t>(n_max) + 1);
    for (int m = 0; m <= n_max; ++m) {
        if (m == 0) {
            fam.members.push_back(Poly<Scalar>::one());
        } else if (m == 1) {
            fam.members.push_back(Poly<Scalar>::x());
        } else if (m % 2 == 0) {
            int n = m / 2;
            Poly<Scalar> q = P.at(2 * n) + tables.xi_at(n - 1) * P.at(2 * n - 2);
            fam.members.push_back(std::move(q));
        } else {
            int n = (m - 1) / 2;
            Poly<Scalar> q = P.at(2 * n + 1) + tables.psi_at(n - 1) * P.at(2 * n - 1);
            if (2 * n - 3 >= 0) q = q + tables.zeta_at(n - 2) * P.at(2 * n - 3);
            fam.members.push_back(std::move(q));
        }
    }
    return fam;
}

std::pair<PolyFamily, PolyFamily> fold_to_laguerre(const PolyFamily& family) {
    PolyFamily hat, tilde;
    switch (family.kind) {
        case FamilyKind::P:
            hat.kind = FamilyKind::P_hat;
            tilde.kind = FamilyKind::P_tilde;
            break;
        case FamilyKind::Q:
            hat.kind = FamilyKind::Q_hat;
            tilde.kind = FamilyKind::Q_tilde;
            break;
        default:
            throw std::invalid_argument("fold_to_laguerre: expects the P or Q family");
    }
    Scalar tol = pow(Scalar(2), -(working_precision_bits() / 2));
    for (int m = 0; m < family.size(); ++m) {
        const Poly<Scalar>& p = family.at(m);
        Scalar scale = max_abs_coeff(p);
        std::vector<Scalar> folded((static_cast<size_t>(m)) / 2 + 1, Scalar(0));
        for (int k = 0; k <= p.degree(); ++k) {
            Scalar ck = p.coeff(k);
            if (k % 2 != m % 2) {
                if (abs(ck) > tol * scale)
                    throw ParityViolation("fold_to_laguerre: off-parity coefficient in member " +
                                          std::to_string(m));
                continue;
            }
            folded[static_cast<size_t>(k) / 2] = ck;  // x^(2a) -> z^a, x^(2a+1)/x -> z^a
        }
        if (m % 2 == 0)
            hat.members.emplace_back(std::move(folded));
        else
            tilde.members.emplace_back(std::move(folded));
    }
    return {hat, tilde};
}

Poly<Scalar> apply_nbar(const Poly<Scalar>& p, const Scalar& t) {
    Poly<Scalar> cubic({Scalar(0), 2 * t, Scalar(0), Scalar(-4)});
    return p.derivative() + cubic * p;
}

namespace {

Scalar relative_defect(const Poly<Scalar>& defect, std::initializer_list<Poly<Scalar>> terms) {
    Scalar scale = 0;
    for (const auto& term : terms) {
        Scalar m = max_abs_coeff(term);
        if (m > scale) scale = m;
    }
    if (scale == 0) return Scalar(0);
    return max_abs_coeff(defect) / scale;
}

}  // namespace

Scalar structure_relation_residual(const PolyFamily& P, const std::vector<Scalar>& beta, int n) {
    if (n < 1) throw std::invalid_argument("structure relation: n must be >= 1");
    Poly<Scalar> dP = P.at(n).derivative();
    Poly<Scalar> first = Scalar(n) * P.at(n - 1);
    Poly<Scalar> third;
    if (n >= 3) {
        Scalar c = 8 * beta.at(static_cast<size_t>(n)) * beta.at(static_cast<size_t>(n) - 1) *
                   beta.at(static_cast<size_t>(n) - 2);
        third = c * P.at(n - 3);
    }
    Poly<Scalar> defect = dP - first - third;
    return relative_defect(defect, {dP, first, third});
}

Scalar closed_even_residual(const PolyFamily& Q, const CoefficientTables& tables, int n) {
    if (n < 2) throw std::invalid_argument("closed even relation: n must be >= 2");
    auto g = [&](int m) {
        return Poly<Scalar>({-tables.beta_at(2 * m) - tables.beta_at(2 * m + 1) + tables.xi_at(m),
                             Scalar(0), Scalar(1)});
    };
    auto f = [&](int m) {
        Poly<Scalar> base =
            Poly<Scalar>::constant(tables.beta_at(2 * m) * tables.beta_at(2 * m - 1));
        return base + tables.xi_at(m - 1) * g(m);
    };
    Poly<Scalar> fn1 = f(n - 1), fn = f(n), gn = g(n);
    Poly<Scalar> t1 = fn1 * Q.at(2 * n + 2);
    Poly<Scalar> t2 = (fn1 * gn - tables.xi_at(n - 2) * fn) * Q.at(2 * n);
    Poly<Scalar> t3 = (tables.beta_at(2 * n - 3) * tables.beta_at(2 * n - 2)) * fn * Q.at(2 * n - 2);
    Poly<Scalar> defect = t1 - t2 + t3;
    return relative_defect(defect, {t1, t2, t3});
}

Scalar closed_odd_residual(const PolyFamily& Q, const CoefficientTables& tables, int n) {
    if (n < 3) throw std::invalid_argument("closed odd relation: n must be >= 3");
    auto c = [&](int m) {
        return tables.zeta_at(m - 1) - tables.beta_at(2 * m + 1) * tables.beta_at(2 * m);
    };
    auto d = [&](int m) { return -c(m - 1) * c(m); };
    auto f = [&](int m) {
        return Poly<Scalar>({-tables.psi_at(m) + tables.beta_at(2 * m + 1) + tables.beta_at(2 * m + 2),
                             Scalar(0), Scalar(-1)});
    };
    auto g = [&](int m) {
        Scalar c0 = tables.psi_at(m - 2) * tables.beta_at(2 * m - 4) * tables.beta_at(2 * m - 3) -
                    tables.zeta_at(m - 3) * (tables.beta_at(2 * m - 2) + tables.beta_at(2 * m - 3));
        return Poly<Scalar>({c0, Scalar(0), tables.zeta_at(m - 3)});
    };
    Poly<Scalar> fn1 = f(n - 1), fn = f(n), gn = g(n), gn1 = g(n + 1);
    Poly<Scalar> a_coef = Poly<Scalar>::constant(d(n - 1)) + fn1 * gn;
    Poly<Scalar> b_coef = c(n) * gn +
                          (c(n - 2) * tables.beta_at(2 * n - 1) * tables.beta_at(2 * n - 2)) * fn +
                          fn * gn * (fn1 + Poly<Scalar>::constant(tables.psi_at(n - 1)));
    Poly<Scalar> c_coef = (tables.beta_at(2 * n - 4) * tables.beta_at(2 * n - 3)) *
                          (Poly<Scalar>::constant(d(n)) + fn * gn1);
    Poly<Scalar> t1 = a_coef * Q.at(2 * n + 3);
    Poly<Scalar> t2 = b_coef * Q.at(2 * n + 1);
    Poly<Scalar> t3 = c_coef * Q.at(2 * n - 1);
    Poly<Scalar> defect = t1 + t2 + t3;
    return relative_defect(defect, {t1, t2, t3});
}

Scalar closed_laguerre_even_residual(const PolyFamily& Q_hat, const CoefficientTables& tables,
                                     int n) {
    if (n < 2) throw std::invalid_argument("closed folded even relation: n must be >= 2");
    auto g = [&](int m) {
        return Poly<Scalar>({-CoefficientTables::at(tables.a_hat, m) + tables.xi_at(m), Scalar(1)});
    };
    auto f = [&](int m) {
        return Poly<Scalar>::constant(CoefficientTables::at(tables.b_hat, m)) +
               tables.xi_at(m - 1) * g(m);
    };
    Poly<Scalar> fn1 = f(n - 1), fn = f(n), gn = g(n);
    Poly<Scalar> t1 = fn1 * Q_hat.at(n + 1);
    Poly<Scalar> t2 = (fn1 * gn - tables.xi_at(n - 2) * fn) * Q_hat.at(n);
    Poly<Scalar> t3 = CoefficientTables::at(tables.b_hat, n - 1) * fn * Q_hat.at(n - 1);
    Poly<Scalar> defect = t1 - t2 + t3;
    return relative_defect(defect, {t1, t2, t3});
}

Scalar closed_laguerre_odd_residual(const PolyFamily& Q_tilde, const CoefficientTables& tables,
                                    int n) {
    if (n < 3) throw std::invalid_argument("closed folded odd relation: n must be >= 3");
    auto bt = [&](int m) { return CoefficientTables::at(tables.b_tilde, m); };
    auto at = [&](int m) { return CoefficientTables::at(tables.a_tilde, m); };
    auto c = [&](int m) { return tables.zeta_at(m - 1) - bt(m); };
    auto d = [&](int m) { return -c(m - 1) * c(m); };
    auto f = [&](int m) { return Poly<Scalar>({at(m) - tables.psi_at(m), Scalar(-1)}); };
    auto g = [&](int m) {
        return Poly<Scalar>({bt(m - 2) * tables.psi_at(m - 2) - tables.zeta_at(m - 3) * at(m - 2),
                             tables.zeta_at(m - 3)});
    };
    Poly<Scalar> fn1 = f(n - 1), fn = f(n), gn = g(n), gn1 = g(n + 1);
    Poly<Scalar> t1 = (Poly<Scalar>::constant(d(n - 1)) + fn1 * gn) * Q_tilde.at(n + 1);
    Poly<Scalar> t2 = (c(n) * gn + (c(n - 2) * bt(n - 1)) * fn +
                       fn * gn * (fn1 + Poly<Scalar>::constant(tables.psi_at(n - 1)))) *
                      Q_tilde.at(n);
    Poly<Scalar> t3 = (bt(n - 2) * (Poly<Scalar>::constant(d(n)) + fn * gn1)) * Q_tilde.at(n - 1);
    Poly<Scalar> defect = t1 + t2 + t3;
    return relative_defect(defect, {t1, t2, t3});
}

Scalar sym_inner(const WeightSpec& spec, const Poly<Scalar>& f, const Poly<Scalar>& g) {
    Poly<Scalar> prod = f * g;
    return integrate(
        [&](const Scalar& x) { return prod.eval(x) * freud_omega(spec, x); }, spec.quad);
}

Scalar skew_inner(const MomentTable& moments, const Poly<Scalar>& f, const Poly<Scalar>& g) {
    Scalar s = 0;
    for (int a = 0; a <= f.degree(); ++a) {
        Scalar fa = f.coeff(a);
        if (fa == 0) continue;
        for (int b = 0; b <= g.degree(); ++b) {
            Scalar gb = g.coeff(b);
            if (gb == 0) continue;
            if ((a + b) % 2 == 0) continue;
            s += fa * gb * moments.skew(a, b);
        }
    }
    return s;
}

Scalar sym_norm(const WeightSpec& spec, const Poly<Scalar>& f) {
    return sqrt(sym_inner(spec, f, f));
}

Scalar laguerre_inner(const WeightSpec& spec, const Poly<Scalar>& F, const Poly<Scalar>& G,
                      int two_lambda) {
    if (two_lambda != 1 && two_lambda != -1)
        throw std::invalid_argument("laguerre_inner: lambda must be +-1/2");
    Poly<Scalar> prod = F * G;
    // z = s^2 removes the z^(+-1/2) endpoint factor exactly
    return integrate(
        [&](const Scalar& s) {
            Scalar z = s * s;
            Scalar fac = two_lambda == 1 ? 2 * z : Scalar(2);
            return prod.eval(z) * fac * freud_omega(spec, s);
        },
        Scalar(0), spec.quad.domain_cut, spec.quad);
}

namespace {

struct KernelSides {
    // u-side and v-side weight exponents (2*lambda) and the kernel split
    // k_ell(u,v) = sgn(v-u) * ka(u) * kb(v)
    int two_lambda_u, two_lambda_v;
    std::function<Scalar(const Scalar&)> ka, kb;
};

KernelSides kernel_sides(int ell) {
    switch (ell) {
        case 1:
            return {-1, -1, [](const Scalar& u) { return Scalar(1) / 4; },
                    [](const Scalar& v) { return sqrt(v); }};
        case 2:
            return {1, 1, [](const Scalar& u) { return 1 / (4 * u); },
                    [](const Scalar& v) { return 1 / sqrt(v); }};
        case 3:
            return {1, -1, [](const Scalar& u) { return 1 / (4 * u); },
                    [](const Scalar& v) { return sqrt(v); }};
        case 4:
            return {-1, 1, [](const Scalar& u) { return Scalar(1) / 4; },
                    [](const Scalar& v) { return 1 / sqrt(v); }};
        default:
            throw std::invalid_argument("kernel product: ell must be in 1..4");
    }
}

Scalar semilag_weight(const WeightSpec& spec, int two_lambda, const Scalar& z) {
    Scalar base = exp(2 * (spec.t - z) * z);
    return two_lambda == 1 ? sqrt(z) * base : base / sqrt(z);
}

QuadratureConfig corroborative_config(const WeightSpec& spec) {
    QuadratureConfig cfg = spec.quad;
    cfg.target_rel_tol = Scalar("1e-16");
    return cfg;
}

}  // namespace

Scalar biorthogonal_kernel_product(const WeightSpec& spec, const PolyFamily& Q_hat,
                                   const PolyFamily& Q_tilde, int ell, int i, int j) {
    KernelSides sides = kernel_sides(ell);
    QuadratureConfig cfg = corroborative_config(spec);
    const Scalar X = cfg.domain_cut;
    const Poly<Scalar>& qh = Q_hat.at(i);
    const Poly<Scalar>& qt = Q_tilde.at(j);

    // after u = s^2, v = r^2 all endpoint singularities cancel against the
    // Jacobian; both side factors are smooth on (0, X)
    auto vside = [&](const Scalar& r) {
        Scalar v = r * r;
        return 2 * r * semilag_weight(spec, sides.two_lambda_v, v) * sides.kb(v);
    };
    MonomialCumulatives cum(vside, 2 * std::max(qt.degree(), 0), Scalar(0), X, cfg);
    std::vector<Scalar> dvals;
    auto outer = [&](const Scalar& s) -> Scalar {
        Scalar u = s * s;
        Scalar fu = s * semilag_weight(spec, sides.two_lambda_u, u) * sides.ka(u);  // 1/2 * 2s
        cum.eval_all(s, dvals);
        Scalar inner = 0;
        for (int b = 0; b <= qt.degree(); ++b) {
            Scalar cb = qt.coeff(b);
            if (cb == 0) continue;
            inner += cb * (cum.total(2 * b) - 2 * dvals[static_cast<size_t>(2 * b)]);
        }
        return qh.eval(u) * fu * inner;
    };
    return integrate(outer, Scalar(0), X, cfg);
}

Scalar folded_skew_product(const WeightSpec& spec, const PolyFamily& Q_hat,
                           const PolyFamily& Q_tilde, int i, int j) {
    QuadratureConfig cfg = corroborative_config(spec);
    const Scalar X = cfg.domain_cut;
    const Poly<Scalar>& qh = Q_hat.at(i);
    const Poly<Scalar>& qt = Q_tilde.at(j);

    Integrand w = [&](const Scalar& r) { return freud_w(spec, r); };
    MonomialCumulatives cum(w, 2 * std::max(qt.degree(), 0) + 1, Scalar(0), X, cfg);
    std::vector<Scalar> dvals;
    // <Q_2i, Q_{2j+1}>_t = iint_{s,r>0} Qhat_i(s^2) w(s) Qtilde_j(r^2) r w(r)
    //                      (sgn(r-s)+1) ds dr
    auto outer = [&](const Scalar& s) -> Scalar {
        cum.eval_all(s, dvals);
        Scalar inner = 0;
        for (int b = 0; b <= qt.degree(); ++b) {
            Scalar cb = qt.coeff(b);
            if (cb == 0) continue;
            int p = 2 * b + 1;
            inner += cb * (2 * cum.total(p) - 2 * dvals[static_cast<size_t>(p)]);
        }
        return qh.eval(s * s) * freud_w(spec, s) * inner;
    };
    return integrate(outer, Scalar(0), X, cfg);
}

}  // namespace freud
