#include <doctest.h>

#include "freud/coeffs.hpp"

using namespace freud;

// Gamma oracle: beta_1(0) = m_2(0)/m_0(0) = Gamma(3/4) / (sqrt(2) Gamma(1/4))
static const char* kBeta1T0 = "0.2389943987430624976819100009975587617548";

namespace {

struct Fixture {
    WeightSpec spec;
    std::shared_ptr<const MomentTable> moments;
    NormalizationTable norm;
    CoefficientTables tables;
    explicit Fixture(const char* t, int n_max = 12)
        : spec((set_working_precision(256), make_weight_spec(Scalar(t)))),
          moments(moment_table_for(spec, 2 * (2 * n_max + 3), 2 * (n_max + 2) + 1)),
          norm(normalizations(*moments, 2 * n_max + 2, n_max + 2)),
          tables(build_coefficient_tables(*moments, norm, n_max)) {}
};

}  // namespace

TEST_CASE("beta from the Hankel route: conventions and oracle values") {
    Fixture fx("0");
    CHECK(fx.tables.beta_at(0) == 0);
    CHECK(abs(fx.tables.beta_at(1) - Scalar(kBeta1T0)) < Scalar("1e-38"));
    // beta_2 solves the lattice relation at n = 1 with t = 0, beta_0 = 0
    Scalar expect = 1 / (8 * fx.tables.beta_at(1)) - fx.tables.beta_at(1);
    CHECK(abs(fx.tables.beta_at(2) - expect) < Scalar("1e-38"));
    for (size_t n = 1; n < fx.tables.beta.size(); ++n) CHECK(fx.tables.beta[n] > 0);
    CHECK(fx.tables.beta_at(-3) == 0);
}

TEST_CASE("lattice residual of the Hankel route") {
    for (const char* ts : {"0", "2", "-2.5", "6.5", "11"}) {
        Fixture fx(ts);
        const Scalar t(ts);
        int hi = static_cast<int>(fx.tables.beta.size()) - 2;
        for (int n = 1; n <= hi; ++n) {
            Scalar res = abs(Scalar(n) -
                             8 * fx.tables.beta_at(n) *
                                 (fx.tables.beta_at(n + 1) + fx.tables.beta_at(n) +
                                  fx.tables.beta_at(n - 1)) +
                             4 * t * fx.tables.beta_at(n));
            CHECK(res < Scalar("1e-20") * (1 + abs(fx.tables.beta_at(n))));
        }
    }
}

TEST_CASE("forward lattice route agrees, then loses positivity when perturbed") {
    Fixture fx("0", 12);
    ForwardDp1Result fwd = beta_forward_dp1(fx.tables.beta_at(1), Scalar(0), 20, &fx.tables.beta);
    CHECK(!fwd.positivity_loss_index);
    CHECK(!fwd.divergence_index);
    for (int n = 1; n <= 20; ++n)
        CHECK(abs(fwd.beta.at(static_cast<size_t>(n)) - fx.tables.beta_at(n)) <=
              Scalar("1e-15") * fx.tables.beta_at(n));

    ForwardDp1Result bad =
        beta_forward_dp1(fx.tables.beta_at(1) + Scalar("1e-10"), Scalar(0), 40, &fx.tables.beta);
    REQUIRE(bad.positivity_loss_index.has_value());
    CHECK(*bad.positivity_loss_index > 1);
    CHECK(*bad.positivity_loss_index <= 40);
    REQUIRE(bad.divergence_index.has_value());
    CHECK(*bad.divergence_index <= *bad.positivity_loss_index);
}

TEST_CASE("xi initial values: routes agree at the four survey t values") {
    for (const char* ts : {"-2.5", "2", "6.5", "11"}) {
        Fixture fx(ts);
        auto [xi0, xi1] = xi_initial(*fx.moments, fx.norm, fx.tables.beta);
        // Pfaffian-ratio route
        Scalar alt0 = 4 * fx.norm.r.at(1) / fx.norm.h.at(0);
        CHECK(abs(xi0 - alt0) <= Scalar("1e-12") * abs(xi0));

        // independent routes for xi1 through the quartic member of the skew family:
        // solve <Q_4, Q_1> = 0 = <Q_4, Q_3> for its coefficients gamma_2, gamma_0
        auto mu = [&](int i, int j) { return fx.moments->skew(i, j); };
        Scalar det = mu(0, 3) * mu(2, 1) - mu(0, 1) * mu(2, 3);
        Scalar g2 = (mu(0, 1) * mu(4, 3) - mu(0, 3) * mu(4, 1)) / det;
        Scalar g0 = (mu(2, 3) * mu(4, 1) - mu(2, 1) * mu(4, 3)) / det;
        Scalar xi1_a = g2 + fx.tables.beta_at(1) + fx.tables.beta_at(2) + fx.tables.beta_at(3);
        Scalar xi1_b = fx.tables.beta_at(3) - g0 / fx.tables.beta_at(1);
        CHECK(abs(xi1_a - xi1_b) <= Scalar("1e-12") * abs(xi1_a));
        CHECK(abs(xi1 - xi1_b) <= Scalar("1e-12") * abs(xi1));
        // Pfaffian-ratio route for xi1
        Scalar alt1 = 4 * fx.norm.r.at(2) / fx.norm.h.at(2);
        CHECK(abs(xi1 - alt1) <= Scalar("1e-12") * abs(xi1));
    }
}

TEST_CASE("xi sequence satisfies its defining recurrence") {
    Fixture fx("2");
    const auto& xi = fx.tables.xi;
    const auto& beta = fx.tables.beta;
    for (int l = 1; l + 1 < static_cast<int>(xi.size()); ++l) {
        Scalar res = 4 * beta.at(static_cast<size_t>(2 * l) - 1) * beta.at(static_cast<size_t>(2 * l)) *
                         beta.at(static_cast<size_t>(2 * l) + 1) -
                     Scalar(2 * l + 1) / 2 * xi.at(static_cast<size_t>(l) - 1) -
                     (l + 1) * xi.at(static_cast<size_t>(l) - 1) * xi.at(static_cast<size_t>(l)) /
                         beta.at(static_cast<size_t>(2 * l) + 2) +
                     4 * xi.at(static_cast<size_t>(l) - 1) * xi.at(static_cast<size_t>(l)) *
                         xi.at(static_cast<size_t>(l) + 1);
        CHECK(abs(res) < Scalar("1e-25"));
    }
}

TEST_CASE("xi and zeta reproduce their Pfaffian/Hankel ratio forms") {
    Fixture fx("6.5");
    for (int l = 0; l <= 8; ++l) {
        Scalar xi_rh = 4 * fx.norm.r.at(static_cast<size_t>(l) + 1) / fx.norm.h.at(static_cast<size_t>(2 * l));
        CHECK(abs(fx.tables.xi_at(l) - xi_rh) <= Scalar("1e-12") * abs(xi_rh));
        Scalar zeta_rh = -4 * fx.norm.r.at(static_cast<size_t>(l) + 2) / fx.norm.h.at(static_cast<size_t>(2 * l) + 1);
        CHECK(abs(fx.tables.zeta_at(l) - zeta_rh) <= Scalar("1e-12") * abs(zeta_rh));
    }
}

TEST_CASE("psi and zeta closed forms") {
    Fixture fx("2");
    // zeta_0 = -beta_2 xi_1
    CHECK(abs(fx.tables.zeta_at(0) + fx.tables.beta_at(2) * fx.tables.xi_at(1)) < Scalar("1e-30"));
    // psi_l in r/h form
    for (int l = 0; l <= 6; ++l) {
        Scalar rh = 4 * fx.tables.xi_at(l + 1) * fx.norm.r.at(static_cast<size_t>(l) + 1) /
                        fx.norm.h.at(static_cast<size_t>(2 * l) + 1) -
                    (l + 1) * fx.norm.r.at(static_cast<size_t>(l) + 1) /
                        fx.norm.h.at(static_cast<size_t>(2 * l) + 2);
        CHECK(abs(fx.tables.psi_at(l) - rh) <= Scalar("1e-12") * abs(rh));
    }
}

TEST_CASE("Laguerre pairs and their negative-index conventions") {
    Fixture fx("2");
    CHECK(fx.tables.a_hat.at(0) == fx.tables.beta_at(1));  // beta_0 = 0
    CHECK(fx.tables.b_hat.at(0) == 0);
    CHECK(fx.tables.b_tilde.at(0) == 0);
    for (int n = 1; n <= 8; ++n) {
        CHECK(fx.tables.a_hat.at(static_cast<size_t>(n)) ==
              fx.tables.beta_at(2 * n) + fx.tables.beta_at(2 * n + 1));
        CHECK(fx.tables.b_hat.at(static_cast<size_t>(n)) ==
              fx.tables.beta_at(2 * n - 1) * fx.tables.beta_at(2 * n));
        CHECK(fx.tables.a_tilde.at(static_cast<size_t>(n)) ==
              fx.tables.beta_at(2 * n + 2) + fx.tables.beta_at(2 * n + 1));
        CHECK(fx.tables.b_tilde.at(static_cast<size_t>(n)) ==
              fx.tables.beta_at(2 * n + 1) * fx.tables.beta_at(2 * n));
    }
}

TEST_CASE("recurrence-pair identities for both half-line families") {
    for (const char* ts : {"0", "2", "11"}) {
        Fixture fx(ts);
        const Scalar t(ts);
        auto check_family = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                int two_lambda) {
            Scalar lam = Scalar(two_lambda) / 2;
            for (int n = 0; n <= 10; ++n) {
                Scalar lhs = 2 * b.at(static_cast<size_t>(n)) + 2 * b.at(static_cast<size_t>(n) + 1) +
                             a.at(static_cast<size_t>(n)) * (2 * a.at(static_cast<size_t>(n)) - t);
                Scalar rhs = Scalar(n) + (lam + 1) / 2;
                CHECK(abs(lhs - rhs) <= Scalar("1e-12") * (1 + abs(rhs)));
            }
            for (int n = 1; n <= 10; ++n) {
                const Scalar& bn = b.at(static_cast<size_t>(n));
                Scalar lhs = (2 * a.at(static_cast<size_t>(n)) - t) *
                             (2 * a.at(static_cast<size_t>(n) - 1) - t);
                Scalar rhs = (4 * bn - n) * (4 * bn - n - lam) / (4 * bn);
                Scalar scale = abs(lhs) > abs(rhs) ? abs(lhs) : abs(rhs);
                if (scale < 1) scale = 1;
                CHECK(abs(lhs - rhs) <= Scalar("1e-12") * scale);
            }
        };
        check_family(fx.tables.a_hat, fx.tables.b_hat, -1);
        check_family(fx.tables.a_tilde, fx.tables.b_tilde, 1);
    }
}

TEST_CASE("continued fractions: exact one-level identities") {
    Fixture fx("2");
    const auto& beta = fx.tables.beta;
    for (int n = 1; n <= 4; ++n) {
        Scalar s = continued_fraction_step(CfSource::hat, CfParity::even, n, fx.tables.a_hat,
                                           fx.tables.b_hat, beta.at(static_cast<size_t>(2 * n) + 2));
        CHECK(abs(s - beta.at(static_cast<size_t>(2 * n))) < Scalar("1e-30"));
        s = continued_fraction_step(CfSource::hat, CfParity::odd, n, fx.tables.a_hat,
                                    fx.tables.b_hat, beta.at(static_cast<size_t>(2 * n) + 1));
        CHECK(abs(s - beta.at(static_cast<size_t>(2 * n) - 1)) < Scalar("1e-30"));
        s = continued_fraction_step(CfSource::tilde, CfParity::even, n, fx.tables.a_tilde,
                                    fx.tables.b_tilde, beta.at(static_cast<size_t>(2 * n) + 2));
        CHECK(abs(s - beta.at(static_cast<size_t>(2 * n))) < Scalar("1e-30"));
        s = continued_fraction_step(CfSource::tilde, CfParity::odd, n, fx.tables.a_tilde,
                                    fx.tables.b_tilde, beta.at(static_cast<size_t>(2 * n) + 3));
        CHECK(abs(s - beta.at(static_cast<size_t>(2 * n) + 1)) < Scalar("1e-30"));
    }
}

TEST_CASE("continued-fraction approximants converge monotonically") {
    Fixture fx("0");
    Scalar true_beta4 = fx.tables.beta_at(4);
    Scalar prev(-1);
    for (int depth = 2; depth <= 10; ++depth) {
        std::vector<Scalar> ap = beta_from_continued_fraction(fx.tables.a_hat, fx.tables.b_hat,
                                                              CfParity::even, CfSource::hat,
                                                              depth, 3);
        Scalar dev = abs(ap.at(2) - true_beta4);
        if (prev >= 0) CHECK(dev < prev);
        prev = dev;
    }
    // tilde-odd depth-1 with exact tail substitution is exact
    Scalar exact = continued_fraction_step(CfSource::tilde, CfParity::odd, 2, fx.tables.a_tilde,
                                           fx.tables.b_tilde, fx.tables.beta_at(7));
    CHECK(abs(exact - fx.tables.beta_at(5)) < Scalar("1e-30"));
}

TEST_CASE("degenerate guards") {
    Fixture fx("2");
    CHECK_THROWS_AS(beta_forward_dp1(Scalar(0), Scalar(2), 10), std::invalid_argument);
    CHECK_THROWS_AS(beta_from_continued_fraction(fx.tables.a_hat, fx.tables.b_hat,
                                                 CfParity::even, CfSource::hat, 0, 2),
                    std::invalid_argument);
}
