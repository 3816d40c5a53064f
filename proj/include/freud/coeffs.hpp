#pragma once

// Scalar coefficient sequences: the three-term recurrence coefficients beta_n
// through two independent routes, the transition-matrix bands xi/psi/zeta, the
// semi-classical Laguerre pairs, and continued-fraction inversions.
//
// Negative-index convention: every sequence is null below index 0; the *_at
// accessors return exact zero there.

#include <optional>
#include <vector>

#include "freud/moments.hpp"
#include "freud/skewlinalg.hpp"

namespace freud {

struct CoefficientTables {
    Scalar t;
    std::vector<Scalar> beta;   // beta[0] = 0
    std::vector<Scalar> xi;
    std::vector<Scalar> psi;
    std::vector<Scalar> zeta;
    std::vector<Scalar> a_hat, b_hat;
    std::vector<Scalar> a_tilde, b_tilde;
    std::vector<Scalar> h, r;

    Scalar beta_at(int n) const { return at(beta, n); }
    Scalar xi_at(int n) const { return at(xi, n); }
    Scalar psi_at(int n) const { return at(psi, n); }
    Scalar zeta_at(int n) const { return at(zeta, n); }

    static Scalar at(const std::vector<Scalar>& v, int n) {
        if (n < 0) return Scalar(0);
        return v.at(static_cast<size_t>(n));
    }
};

// Cross-check tolerance scaling with working precision, 10^(-0.15 bits).
Scalar cross_tolerance(int bits);

// beta_n = h_n / h_{n-1} for 1 <= n <= n_max, beta_0 = 0.
std::vector<Scalar> beta_from_hankel(const NormalizationTable& norm, int n_max);

// Forward lattice iteration beta_{n+1} = n/(8 beta_n) + t/2 - beta_n - beta_{n-1}.
// Numerically unstable by nature; the result records where positivity (or the
// optional agreement with a reference sequence) is first lost.
struct ForwardDp1Result {
    std::vector<Scalar> beta;
    std::optional<int> positivity_loss_index;
    std::optional<int> divergence_index;  // vs reference, at cross tolerance
};
ForwardDp1Result beta_forward_dp1(const Scalar& beta1, const Scalar& t, int n_max,
                                  const std::vector<Scalar>* reference = nullptr);

// Initial values for the xi recurrence. xi0 is computed from skew moments as
// beta_1 - mu_{2,1}/mu_{0,1} and cross-checked against 4 r_1 / h_0; a
// disagreement beyond the cross tolerance raises CrossCheckFailure.
// xi1 = (1/(4 xi0)) (1/2 - h_1/r_0) + 1/(4 beta_2).
std::pair<Scalar, Scalar> xi_initial(const MomentTable& moments, const NormalizationTable& norm,
                                     const std::vector<Scalar>& beta);

// Advance xi by the rearranged lattice recurrence
//   xi_{l+1} = [ (2l+1)/2 xi_{l-1} + (l+1) xi_{l-1} xi_l / beta_{2l+2}
//                - 4 beta_{2l-1} beta_{2l} beta_{2l+1} ] / (4 xi_{l-1} xi_l)
// for l >= 1; requires beta up to 2 n_max + 2.
std::vector<Scalar> xi_sequence(const Scalar& xi0, const Scalar& xi1,
                                const std::vector<Scalar>& beta, int n_max);

// psi_l = xi_l xi_{l+1} / beta_{2l+1} - (l+1) xi_l / (4 beta_{2l+1} beta_{2l+2}),
// zeta_l = -beta_{2l+2} xi_{l+1}; both to index n_max (xi needed to n_max + 1).
std::pair<std::vector<Scalar>, std::vector<Scalar>> psi_zeta(const std::vector<Scalar>& beta,
                                                             const std::vector<Scalar>& xi,
                                                             int n_max);

// a_hat_n = beta_2n + beta_{2n+1}, b_hat_n = beta_{2n-1} beta_2n,
// a_tilde_n = beta_{2n+2} + beta_{2n+1}, b_tilde_n = beta_{2n+1} beta_2n.
struct LaguerrePairs {
    std::vector<Scalar> a_hat, b_hat, a_tilde, b_tilde;
};
LaguerrePairs laguerre_coeffs(const std::vector<Scalar>& beta, int n_max);

enum class CfSource { hat, tilde };
enum class CfParity { even, odd };

// One level of the exact inversion identities,
//   hat/even:   beta_2n     = a_n - b_{n+1}/tail      (tail = beta_{2n+2})
//   hat/odd:    beta_{2n-1} = b_n / (a_n - tail)      (tail = beta_{2n+1})
//   tilde/even: beta_2n     = b_n / (a_n - tail)      (tail = beta_{2n+2})
//   tilde/odd:  beta_{2n+1} = a_n - b_{n+1}/tail      (tail = beta_{2n+3})
Scalar continued_fraction_step(CfSource source, CfParity parity, int n,
                               const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                               const Scalar& tail);

// Depth-truncated continued-fraction approximants of beta from the (a, b)
// pair; entry n approximates the beta index named above. Truncation replaces
// the innermost tail by the bare a coefficient.
std::vector<Scalar> beta_from_continued_fraction(const std::vector<Scalar>& a,
                                                 const std::vector<Scalar>& b, CfParity parity,
                                                 CfSource source, int depth, int n_count);

// Everything above bundled; beta to 2 n_max + 2 when the normalization table
// allows, xi to n_max + 1, the rest to n_max.
CoefficientTables build_coefficient_tables(const MomentTable& moments,
                                           const NormalizationTable& norm, int n_max);

}  // namespace freud
