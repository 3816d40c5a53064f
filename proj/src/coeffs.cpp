#include "freud/coeffs.hpp"

namespace freud {

Scalar cross_tolerance(int bits) {
    return pow(Scalar(10), -(Scalar(bits) * Scalar("0.15")));
}

std::vector<Scalar> beta_from_hankel(const NormalizationTable& norm, int n_max) {
    if (static_cast<int>(norm.h.size()) <= n_max)
        throw std::invalid_argument("beta_from_hankel: normalization table too short");
    std::vector<Scalar> beta(static_cast<size_t>(n_max) + 1);
    beta[0] = 0;
    for (int n = 1; n <= n_max; ++n)
        beta[static_cast<size_t>(n)] = norm.h[static_cast<size_t>(n)] / norm.h[static_cast<size_t>(n) - 1];
    return beta;
}

ForwardDp1Result beta_forward_dp1(const Scalar& beta1, const Scalar& t, int n_max,
                                  const std::vector<Scalar>* reference) {
    if (beta1 <= 0) throw std::invalid_argument("beta_forward_dp1: beta1 must be positive");
    ForwardDp1Result out;
    out.beta.assign(static_cast<size_t>(n_max) + 1, Scalar(0));
    out.beta[1] = beta1;
    Scalar tol = cross_tolerance(working_precision_bits());
    for (int n = 1; n < n_max; ++n) {
        const Scalar& bn = out.beta[static_cast<size_t>(n)];
        const Scalar& bm = out.beta[static_cast<size_t>(n) - 1];
        Scalar next = Scalar(n) / (8 * bn) + t / 2 - bn - bm;
        out.beta[static_cast<size_t>(n) + 1] = next;
        if (next <= 0 && !out.positivity_loss_index) {
            out.positivity_loss_index = n + 1;
            break;
        }
        if (reference && !out.divergence_index && n + 1 < static_cast<int>(reference->size())) {
            const Scalar& ref = (*reference)[static_cast<size_t>(n) + 1];
            if (abs(next - ref) > tol * abs(ref)) out.divergence_index = n + 1;
        }
    }
    return out;
}

std::pair<Scalar, Scalar> xi_initial(const MomentTable& moments, const NormalizationTable& norm,
                                     const std::vector<Scalar>& beta) {
    Scalar mu01 = moments.skew(0, 1);
    Scalar guard = pow(Scalar(2), -(working_precision_bits() - 16));
    if (abs(mu01) <= guard)
        throw DivisionByNearZero("xi_initial: <1, y> vanishes", 0);
    Scalar xi0 = beta.at(1) - moments.skew(2, 1) / mu01;

    if (norm.r.size() < 2 || norm.h.empty())
        throw std::invalid_argument("xi_initial: normalization table too short");
    Scalar xi0_alt = 4 * norm.r[1] / norm.h[0];
    Scalar tol = cross_tolerance(working_precision_bits());
    if (abs(xi0 - xi0_alt) > tol * abs(xi0))
        throw CrossCheckFailure("xi_initial: moment route and Pfaffian route disagree for xi0",
                                xi0, xi0_alt);

    const Scalar& r0 = norm.r[0];
    Scalar xi1 = (Scalar(1) / (4 * xi0)) * (Scalar(1) / 2 - norm.h[1] / r0) + 1 / (4 * beta.at(2));
    return {xi0, xi1};
}

std::vector<Scalar> xi_sequence(const Scalar& xi0, const Scalar& xi1,
                                const std::vector<Scalar>& beta, int n_max) {
    if (static_cast<int>(beta.size()) < 2 * n_max + 1)
        throw std::invalid_argument("xi_sequence: beta table too short");
    std::vector<Scalar> xi(static_cast<size_t>(n_max) + 1);
    xi[0] = xi0;
    if (n_max >= 1) xi[1] = xi1;
    Scalar guard = pow(Scalar(2), -(working_precision_bits() - 16));
    for (int l = 1; l < n_max; ++l) {
        const Scalar& xm = xi[static_cast<size_t>(l) - 1];
        const Scalar& xc = xi[static_cast<size_t>(l)];
        Scalar den = 4 * xm * xc;
        if (abs(den) <= guard) throw DivisionByNearZero("xi_sequence: vanishing product", l);
        Scalar num = Scalar(2 * l + 1) / 2 * xm +
                     (l + 1) * xm * xc / beta.at(static_cast<size_t>(2 * l) + 2) -
                     4 * beta.at(static_cast<size_t>(2 * l) - 1) * beta.at(static_cast<size_t>(2 * l)) *
                         beta.at(static_cast<size_t>(2 * l) + 1);
        xi[static_cast<size_t>(l) + 1] = num / den;
    }
    return xi;
}

std::pair<std::vector<Scalar>, std::vector<Scalar>> psi_zeta(const std::vector<Scalar>& beta,
                                                             const std::vector<Scalar>& xi,
                                                             int n_max) {
    if (static_cast<int>(xi.size()) < n_max + 2)
        throw std::invalid_argument("psi_zeta: xi table too short");
    if (static_cast<int>(beta.size()) < 2 * n_max + 3)
        throw std::invalid_argument("psi_zeta: beta table too short");
    std::vector<Scalar> psi(static_cast<size_t>(n_max) + 1), zeta(static_cast<size_t>(n_max) + 1);
    for (int l = 0; l <= n_max; ++l) {
        const Scalar& b1 = beta[static_cast<size_t>(2 * l) + 1];
        const Scalar& b2 = beta[static_cast<size_t>(2 * l) + 2];
        psi[static_cast<size_t>(l)] =
            xi[static_cast<size_t>(l)] * xi[static_cast<size_t>(l) + 1] / b1 -
            (l + 1) * xi[static_cast<size_t>(l)] / (4 * b1 * b2);
        zeta[static_cast<size_t>(l)] = -b2 * xi[static_cast<size_t>(l) + 1];
    }
    return {psi, zeta};
}

LaguerrePairs laguerre_coeffs(const std::vector<Scalar>& beta, int n_max) {
    if (static_cast<int>(beta.size()) < 2 * n_max + 3)
        throw std::invalid_argument("laguerre_coeffs: beta table too short");
    LaguerrePairs out;
    out.a_hat.resize(static_cast<size_t>(n_max) + 1);
    out.b_hat.resize(static_cast<size_t>(n_max) + 1);
    out.a_tilde.resize(static_cast<size_t>(n_max) + 1);
    out.b_tilde.resize(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        out.a_hat[static_cast<size_t>(n)] =
            beta[static_cast<size_t>(2 * n)] + beta[static_cast<size_t>(2 * n) + 1];
        out.b_hat[static_cast<size_t>(n)] =
            n == 0 ? Scalar(0)
                   : beta[static_cast<size_t>(2 * n) - 1] * beta[static_cast<size_t>(2 * n)];
        out.a_tilde[static_cast<size_t>(n)] =
            beta[static_cast<size_t>(2 * n) + 2] + beta[static_cast<size_t>(2 * n) + 1];
        out.b_tilde[static_cast<size_t>(n)] =
            beta[static_cast<size_t>(2 * n) + 1] * beta[static_cast<size_t>(2 * n)];
    }
    return out;
}

Scalar continued_fraction_step(CfSource source, CfParity parity, int n,
                               const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                               const Scalar& tail) {
    auto A = [&](int k) { return a.at(static_cast<size_t>(k)); };
    auto B = [&](int k) { return b.at(static_cast<size_t>(k)); };
    if (source == CfSource::hat) {
        if (parity == CfParity::even) return A(n) - B(n + 1) / tail;
        return B(n) / (A(n) - tail);
    }
    if (parity == CfParity::even) return B(n) / (A(n) - tail);
    return A(n) - B(n + 1) / tail;
}

namespace {

Scalar cf_approximant(CfSource source, CfParity parity, int n, const std::vector<Scalar>& a,
                      const std::vector<Scalar>& b, int depth) {
    Scalar guard = pow(Scalar(2), -(working_precision_bits() - 16));
    // descending chains; the innermost tail is the bare a coefficient
    auto chain_minus = [&](int start, int levels) {
        // a_{start+levels-1} - b_{start+levels}/( ... ) evaluated bottom-up
        Scalar val = a.at(static_cast<size_t>(start) + static_cast<size_t>(levels));
        for (int k = levels; k >= 1; --k) {
            if (abs(val) <= guard)
                throw ZeroDenominator("continued fraction: denominator underflow", k);
            val = a.at(static_cast<size_t>(start) + static_cast<size_t>(k) - 1) -
                  b.at(static_cast<size_t>(start) + static_cast<size_t>(k)) / val;
        }
        return val;
    };
    bool outer_ratio = (source == CfSource::hat && parity == CfParity::odd) ||
                       (source == CfSource::tilde && parity == CfParity::even);
    if (!outer_ratio) {
        // beta_{2n} (hat) or beta_{2n+1} (tilde)
        return chain_minus(n, depth - 1);
    }
    // beta_{2n-1} = b_n / (a_n - ...) or beta_{2n} = b_n / (a_n - ...)
    Scalar den = a.at(static_cast<size_t>(n));
    if (depth >= 2) {
        Scalar inner = chain_minus(n + 1, depth - 2);
        if (abs(inner) <= guard)
            throw ZeroDenominator("continued fraction: denominator underflow", depth);
        den -= b.at(static_cast<size_t>(n) + 1) / inner;
    }
    if (abs(den) <= guard) throw ZeroDenominator("continued fraction: denominator underflow", 1);
    return b.at(static_cast<size_t>(n)) / den;
}

}  // namespace

std::vector<Scalar> beta_from_continued_fraction(const std::vector<Scalar>& a,
                                                 const std::vector<Scalar>& b, CfParity parity,
                                                 CfSource source, int depth, int n_count) {
    if (depth < 1) throw std::invalid_argument("beta_from_continued_fraction: depth must be >= 1");
    std::vector<Scalar> out;
    out.reserve(static_cast<size_t>(n_count));
    int n0 = (source == CfSource::hat && parity == CfParity::odd) ? 1 : 0;
    for (int n = n0; n < n0 + n_count; ++n)
        out.push_back(cf_approximant(source, parity, n, a, b, depth));
    return out;
}

CoefficientTables build_coefficient_tables(const MomentTable& moments,
                                           const NormalizationTable& norm, int n_max) {
    CoefficientTables tables;
    tables.t = moments.spec().t;
    int beta_max = std::min<int>(2 * n_max + 3, static_cast<int>(norm.h.size()) - 1);
    tables.beta = beta_from_hankel(norm, beta_max);
    auto [xi0, xi1] = xi_initial(moments, norm, tables.beta);
    int xi_max = std::min(n_max + 1, (beta_max - 1) / 2);
    tables.xi = xi_sequence(xi0, xi1, tables.beta, xi_max);
    int pz_max = std::min(n_max, std::min(xi_max - 1, (beta_max - 3) / 2));
    std::tie(tables.psi, tables.zeta) = psi_zeta(tables.beta, tables.xi, pz_max);
    int lag_max = std::min(n_max, (beta_max - 2) / 2);
    LaguerrePairs pairs = laguerre_coeffs(tables.beta, lag_max);
    tables.a_hat = std::move(pairs.a_hat);
    tables.b_hat = std::move(pairs.b_hat);
    tables.a_tilde = std::move(pairs.a_tilde);
    tables.b_tilde = std::move(pairs.b_tilde);
    tables.h = norm.h;
    tables.r = norm.r;
    return tables;
}

}  // namespace freud
