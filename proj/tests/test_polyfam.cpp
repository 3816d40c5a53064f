#include <doctest.h>

#include <map>
#include <string>

#include "freud/verify.hpp"

using namespace freud;

namespace {

const VerifyContext& ctx_for(const char* t) {
    static std::map<std::string, VerifyContext> cache;
    auto it = cache.find(t);
    if (it == cache.end()) {
        set_working_precision(256);
        it = cache.emplace(t, build_context(Scalar(t), 12, 256, Scalar("1e-40"))).first;
    }
    return it->second;
}

}  // namespace

TEST_CASE("orthogonal family basics") {
    const VerifyContext& ctx = ctx_for("2");
    // P_2 = x^2 - beta_1
    CHECK(ctx.P.at(2).coeff(2) == 1);
    CHECK(abs(ctx.P.at(2).coeff(0) + ctx.tables.beta_at(1)) < Scalar("1e-40"));
    CHECK(ctx.P.at(2).coeff(1) == 0);
    // P_4 = x^4 - (b1+b2+b3) x^2 + b1 b3 from the three-term recurrence
    Scalar c2 = -(ctx.tables.beta_at(1) + ctx.tables.beta_at(2) + ctx.tables.beta_at(3));
    Scalar c0 = ctx.tables.beta_at(1) * ctx.tables.beta_at(3);
    CHECK(abs(ctx.P.at(4).coeff(2) - c2) < Scalar("1e-38"));
    CHECK(abs(ctx.P.at(4).coeff(0) - c0) < Scalar("1e-38"));
    // monic and parity invariants
    for (int n = 0; n <= 12; ++n) {
        CHECK(ctx.P.at(n).coeff(n) == 1);
        for (int k = (n % 2 == 0) ? 1 : 0; k <= n; k += 2) CHECK(ctx.P.at(n).coeff(k) == 0);
    }
    // orthogonality by quadrature
    Scalar ip = sym_inner(ctx.spec, ctx.P.at(3), ctx.P.at(5));
    Scalar scale = sym_norm(ctx.spec, ctx.P.at(3)) * sym_norm(ctx.spec, ctx.P.at(5));
    CHECK(abs(ip) < Scalar("1e-15") * scale);
}

TEST_CASE("skew family explicit low members") {
    const VerifyContext& ctx = ctx_for("2");
    // Q_2 = x^2 + xi_0 - beta_1
    CHECK(abs(ctx.Q.at(2).coeff(0) - (ctx.tables.xi_at(0) - ctx.tables.beta_at(1))) <
          Scalar("1e-38"));
    // Q_4 = x^4 + (xi_1 - b1 - b2 - b3) x^2 + b1 (b3 - xi_1)
    Scalar q4c2 = ctx.tables.xi_at(1) - ctx.tables.beta_at(1) - ctx.tables.beta_at(2) -
                  ctx.tables.beta_at(3);
    Scalar q4c0 = ctx.tables.beta_at(1) * (ctx.tables.beta_at(3) - ctx.tables.xi_at(1));
    CHECK(abs(ctx.Q.at(4).coeff(2) - q4c2) < Scalar("1e-37"));
    CHECK(abs(ctx.Q.at(4).coeff(0) - q4c0) < Scalar("1e-37"));
    // Q_3 = x^3 + (psi_0 - b1 - b2) x
    Scalar q3c1 = ctx.tables.psi_at(0) - ctx.tables.beta_at(1) - ctx.tables.beta_at(2);
    CHECK(abs(ctx.Q.at(3).coeff(1) - q3c1) < Scalar("1e-37"));
    // gauge choice
    CHECK(ctx.Q.at(0).degree() == 0);
    CHECK(ctx.Q.at(1).coeff(1) == 1);
    CHECK(ctx.Q.at(1).coeff(0) == 0);
}

TEST_CASE("skew family is skew-orthogonal under the sign-kernel product") {
    for (const char* ts : {"0", "2"}) {
        const VerifyContext& ctx = ctx_for(ts);
        Scalar z24 = skew_inner(*ctx.moments, ctx.Q.at(2), ctx.Q.at(4));
        CHECK(abs(z24) < Scalar("1e-25"));
        Scalar p23 = skew_inner(*ctx.moments, ctx.Q.at(2), ctx.Q.at(3));
        CHECK(abs(p23 - ctx.tables.r.at(1)) < Scalar("1e-15") * ctx.tables.r.at(1));
    }
}

TEST_CASE("explicit skew members follow the quasi-orthogonal template throughout") {
    const VerifyContext& ctx = ctx_for("6.5");
    for (int n = 1; 2 * n + 1 < ctx.Q.size(); ++n) {
        Poly<Scalar> even_expect = ctx.P.at(2 * n) + ctx.tables.xi_at(n - 1) * ctx.P.at(2 * n - 2);
        Poly<Scalar> diff = ctx.Q.at(2 * n) - even_expect;
        CHECK(max_abs_coeff(diff) == 0);  // built that way; the content is the pairing tests
        Poly<Scalar> odd_expect = ctx.P.at(2 * n + 1) + ctx.tables.psi_at(n - 1) * ctx.P.at(2 * n - 1);
        if (n >= 2) odd_expect = odd_expect + ctx.tables.zeta_at(n - 2) * ctx.P.at(2 * n - 3);
        CHECK(max_abs_coeff(ctx.Q.at(2 * n + 1) - odd_expect) == 0);
    }
}

TEST_CASE("Laguerre folds and their three-point recurrences") {
    const VerifyContext& ctx = ctx_for("2");
    // Phat_1(z) = z - beta_1
    CHECK(ctx.P_hat.at(1).degree() == 1);
    CHECK(abs(ctx.P_hat.at(1).coeff(0) + ctx.tables.beta_at(1)) < Scalar("1e-40"));
    // z Phat_n = Phat_{n+1} + a_hat_n Phat_n + b_hat_n Phat_{n-1}, coefficientwise
    for (int n = 1; n <= 8; ++n) {
        Poly<Scalar> lhs = ctx.P_hat.at(n).shifted(1);
        Poly<Scalar> rhs = ctx.P_hat.at(n + 1) +
                           ctx.tables.a_hat.at(static_cast<size_t>(n)) * ctx.P_hat.at(n) +
                           ctx.tables.b_hat.at(static_cast<size_t>(n)) * ctx.P_hat.at(n - 1);
        CHECK(max_abs_coeff(lhs - rhs) < Scalar("1e-36") * max_abs_coeff(lhs));
        Poly<Scalar> lhs2 = ctx.P_tilde.at(n).shifted(1);
        Poly<Scalar> rhs2 = ctx.P_tilde.at(n + 1) +
                            ctx.tables.a_tilde.at(static_cast<size_t>(n)) * ctx.P_tilde.at(n) +
                            ctx.tables.b_tilde.at(static_cast<size_t>(n)) * ctx.P_tilde.at(n - 1);
        CHECK(max_abs_coeff(lhs2 - rhs2) < Scalar("1e-36") * max_abs_coeff(lhs2));
    }
}

TEST_CASE("fold rejects parity violations") {
    PolyFamily fake;
    fake.kind = FamilyKind::P;
    fake.members.push_back(Poly<Scalar>::one());
    fake.members.push_back(Poly<Scalar>({Scalar("0.25"), Scalar(1)}));  // odd member, even term
    CHECK_THROWS_AS(fold_to_laguerre(fake), ParityViolation);
}

TEST_CASE("lowering operator") {
    const VerifyContext& ctx = ctx_for("2");
    const Scalar& t = ctx.tables.t;
    // nbar 1 = -4x^3 + 2tx
    Poly<Scalar> n1 = apply_nbar(Poly<Scalar>::one(), t);
    CHECK(n1.coeff(3) == -4);
    CHECK(n1.coeff(1) == 2 * t);
    CHECK(n1.coeff(0) == 0);
    // decomposition of nbar P_0 onto the family: -(1/2)(h_0/h_1) P_1 - 4 P_3
    Poly<Scalar> np0 = apply_nbar(ctx.P.at(0), t);
    Scalar c1 = sym_inner(ctx.spec, ctx.P.at(1), np0) / ctx.tables.h.at(1);
    Scalar c3 = sym_inner(ctx.spec, ctx.P.at(3), np0) / ctx.tables.h.at(3);
    Scalar expect1 = -ctx.tables.h.at(0) / (2 * ctx.tables.h.at(1));
    CHECK(abs(c1 - expect1) < Scalar("1e-12") * abs(expect1));
    CHECK(abs(c3 + 4) < Scalar("1e-12") * 4);
    // banded matrix elements (P_i, nbar P_j) for k <= 4
    for (int k = 0; k <= 4; ++k) {
        Scalar lhs = sym_inner(ctx.spec, ctx.P.at(2 * k + 1), apply_nbar(ctx.P.at(2 * k), t));
        Scalar expect = -Scalar(2 * k + 1) / 2 * ctx.tables.h.at(static_cast<size_t>(2 * k));
        CHECK(abs(lhs - expect) < Scalar("1e-12") * abs(expect));
    }
}

TEST_CASE("structure relation residuals") {
    {
        const VerifyContext& ctx = ctx_for("0");
        CHECK(structure_relation_residual(ctx.P, ctx.tables.beta, 1) == 0);
        CHECK(structure_relation_residual(ctx.P, ctx.tables.beta, 3) < Scalar("1e-20"));
    }
    {
        const VerifyContext& ctx = ctx_for("6.5");
        CHECK(structure_relation_residual(ctx.P, ctx.tables.beta, 10) < Scalar("1e-20"));
    }
}

TEST_CASE("closed three-point relations for the skew families") {
    struct Case { const char* t; int n; };
    for (auto [t, n] : {Case{"0", 2}, Case{"-2.5", 5}}) {
        const VerifyContext& ctx = ctx_for(t);
        CHECK(closed_even_residual(ctx.Q, ctx.tables, n) < Scalar("1e-18"));
    }
    for (auto [t, n] : {Case{"2", 3}, Case{"11", 6}}) {
        const VerifyContext& ctx = ctx_for(t);
        CHECK(closed_odd_residual(ctx.Q, ctx.tables, n) < Scalar("1e-18"));
    }
    const VerifyContext& ctx = ctx_for("0");
    CHECK(closed_laguerre_even_residual(ctx.Q_hat, ctx.tables, 2) < Scalar("1e-18"));
    CHECK(closed_laguerre_odd_residual(ctx.Q_tilde, ctx.tables, 4) < Scalar("1e-18"));
    // folding z = x^2 maps the even relation onto the half-line one exactly
    for (int n = 2; n <= 6; ++n) {
        Scalar folded = closed_laguerre_even_residual(ctx.Q_hat, ctx.tables, n);
        Scalar unfolded = closed_even_residual(ctx.Q, ctx.tables, n);
        Scalar scale = folded > unfolded ? folded : unfolded;
        if (scale == 0) continue;
        CHECK(abs(folded - unfolded) <= scale);  // same identity, same magnitude class
        CHECK(folded < Scalar("1e-18"));
    }
}

TEST_CASE("closed residuals shrink by >= 10 orders when precision doubles") {
    set_working_precision(256);
    VerifyContext lo = build_context(Scalar(2), 8, 256, Scalar("1e-40"));
    Scalar r_lo = closed_even_residual(lo.Q, lo.tables, 4);
    Scalar ro_lo = closed_odd_residual(lo.Q, lo.tables, 4);
    set_working_precision(512);
    VerifyContext hi = build_context(Scalar(2), 8, 512, Scalar("1e-100"));
    Scalar r_hi = closed_even_residual(hi.Q, hi.tables, 4);
    Scalar ro_hi = closed_odd_residual(hi.Q, hi.tables, 4);
    set_working_precision(256);
    CHECK(r_hi * pow10(10) <= r_lo);
    CHECK(ro_hi * pow10(10) <= ro_lo);
}

TEST_CASE("quasi-orthogonality windows at small indices") {
    const VerifyContext& ctx = ctx_for("2");
    Scalar v = sym_inner(ctx.spec, ctx.Q.at(2), ctx.Q.at(8));  // |n-m| = 3 on the even side
    Scalar scale = sym_norm(ctx.spec, ctx.Q.at(2)) * sym_norm(ctx.spec, ctx.Q.at(8));
    CHECK(abs(v) < Scalar("1e-12") * scale);
    Scalar vo = sym_inner(ctx.spec, ctx.Q.at(1), ctx.Q.at(9));  // odd side, |n-m| = 4
    Scalar so = sym_norm(ctx.spec, ctx.Q.at(1)) * sym_norm(ctx.spec, ctx.Q.at(9));
    CHECK(abs(vo) < Scalar("1e-12") * so);
    // half-line window for the folded families
    Scalar vh = laguerre_inner(ctx.spec, ctx.Q_hat.at(1), ctx.Q_hat.at(4), -1);
    Scalar sh = sqrt(laguerre_inner(ctx.spec, ctx.Q_hat.at(1), ctx.Q_hat.at(1), -1) *
                     laguerre_inner(ctx.spec, ctx.Q_hat.at(4), ctx.Q_hat.at(4), -1));
    CHECK(abs(vh) < Scalar("1e-12") * sh);
}

TEST_CASE("kernel pairings: the four parameterizations agree") {
    const VerifyContext& ctx = ctx_for("2");
    for (auto [i, j] : {std::pair{0, 1}, {1, 1}, {2, 1}}) {
        Scalar v1 = biorthogonal_kernel_product(ctx.spec, ctx.Q_hat, ctx.Q_tilde, 1, i, j);
        for (int ell = 2; ell <= 4; ++ell) {
            Scalar ve = biorthogonal_kernel_product(ctx.spec, ctx.Q_hat, ctx.Q_tilde, ell, i, j);
            Scalar scale = abs(v1) > abs(ve) ? abs(v1) : abs(ve);
            if (scale == 0) scale = 1;
            CHECK(abs(ve - v1) < Scalar("1e-10") * scale);
        }
    }
}

TEST_CASE("substituted skew product reproduces the pairing normalization") {
    const VerifyContext& ctx = ctx_for("2");
    Scalar off = folded_skew_product(ctx.spec, ctx.Q_hat, ctx.Q_tilde, 0, 1);
    CHECK(abs(off) < Scalar("1e-10") * ctx.tables.r.at(1));
    Scalar diag = folded_skew_product(ctx.spec, ctx.Q_hat, ctx.Q_tilde, 1, 1);
    CHECK(abs(diag - ctx.tables.r.at(1)) < Scalar("1e-10") * ctx.tables.r.at(1));
}
