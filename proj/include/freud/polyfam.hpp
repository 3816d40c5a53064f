#pragma once

// The six polynomial families attached to the quartic weight: orthogonal P,
// skew-orthogonal Q, and their even/odd folds onto the semi-classical
// Laguerre line z = x^2; the lowering operator; the structure relation; and
// the closed three-point recurrences satisfied by the skew families.

#include <vector>

#include "freud/coeffs.hpp"
#include "freud/poly.hpp"

namespace freud {

enum class FamilyKind { P, Q, P_hat, P_tilde, Q_hat, Q_tilde, O_hermite, S_hermite };

struct PolyFamily {
    FamilyKind kind;
    std::vector<Poly<Scalar>> members;
    const Poly<Scalar>& at(int n) const { return members.at(static_cast<size_t>(n)); }
    int size() const { return static_cast<int>(members.size()); }
};

// P_0 = 1, P_1 = x, P_{n+1} = x P_n - beta_n P_{n-1}; all members monic with
// the parity of their index.
PolyFamily build_P(const std::vector<Scalar>& beta, int n_max);

// Q_0 = 1, Q_1 = x (gauge choice), Q_{2n} = P_{2n} + xi_{n-1} P_{2n-2},
// Q_{2n+1} = P_{2n+1} + psi_{n-1} P_{2n-1} + zeta_{n-2} P_{2n-3}, null below
// index zero.
PolyFamily build_Q(const CoefficientTables& tables, const PolyFamily& P, int n_max);

// Substitute z = x^2: even members map directly, odd members after dividing
// by x. Throws ParityViolation when a member carries coefficients of the
// wrong parity above tolerance.
std::pair<PolyFamily, PolyFamily> fold_to_laguerre(const PolyFamily& family);

// nbar p = p' - 4x^3 p + 2 t x p
Poly<Scalar> apply_nbar(const Poly<Scalar>& p, const Scalar& t);

// Relative coefficient residual of P_n' - n P_{n-1} - 8 beta_n beta_{n-1}
// beta_{n-2} P_{n-3} (n >= 1; indices below zero are null).
Scalar structure_relation_residual(const PolyFamily& P, const std::vector<Scalar>& beta, int n);

// Closed three-point relations in coefficient space. Each returns the max-abs
// defect coefficient divided by the max-abs coefficient among the terms.
// Even family, n >= 2, with g_m = x^2 - beta_{2m} - beta_{2m+1} + xi_m and
// f_m = beta_{2m} beta_{2m-1} + xi_{m-1} g_m:
//   f_{n-1} Q_{2n+2} = (f_{n-1} g_n - xi_{n-2} f_n) Q_{2n}
//                      - beta_{2n-3} beta_{2n-2} f_n Q_{2n-2}.
Scalar closed_even_residual(const PolyFamily& Q, const CoefficientTables& tables, int n);

// Odd family, n >= 3, with c_m = zeta_{m-1} - beta_{2m+1} beta_{2m},
// d_m = -c_{m-1} c_m, f_m = -(psi_m + x^2 - beta_{2m+1} - beta_{2m+2}),
// g_m = psi_{m-2} beta_{2m-4} beta_{2m-3} + zeta_{m-3}(x^2 - beta_{2m-2} - beta_{2m-3}):
//   (d_{n-1} + f_{n-1} g_n) Q_{2n+3}
//   + (c_n g_n + c_{n-2} f_n beta_{2n-1} beta_{2n-2} + f_n g_n (f_{n-1} + psi_{n-1})) Q_{2n+1}
//   + beta_{2n-4} beta_{2n-3} (d_n + f_n g_{n+1}) Q_{2n-1} = 0.
Scalar closed_odd_residual(const PolyFamily& Q, const CoefficientTables& tables, int n);

// Folded versions on the Laguerre side, same contracts (z variable).
Scalar closed_laguerre_even_residual(const PolyFamily& Q_hat, const CoefficientTables& tables,
                                     int n);
Scalar closed_laguerre_odd_residual(const PolyFamily& Q_tilde, const CoefficientTables& tables,
                                    int n);

// Symmetric inner product (f, g) = int f g omega dx by fresh quadrature.
Scalar sym_inner(const WeightSpec& spec, const Poly<Scalar>& f, const Poly<Scalar>& g);
// Skew product <f, g> evaluated through the skew moment table.
Scalar skew_inner(const MomentTable& moments, const Poly<Scalar>& f, const Poly<Scalar>& g);
// L2-type scale ||f|| = sqrt((f, f)).
Scalar sym_norm(const WeightSpec& spec, const Poly<Scalar>& f);

// Laguerre-side inner products int_0^inf F(z) G(z) z^(lambda) exp(-2z^2+2tz) dz,
// lambda = -1/2 (hat side) or +1/2 (tilde side), computed after z = s^2.
Scalar laguerre_inner(const WeightSpec& spec, const Poly<Scalar>& F, const Poly<Scalar>& G,
                      int two_lambda);

// The four kernel-weighted quadrant pairings of the folded families
// (ell = 1..4). All four parameterize the same integral
//   1/2 iint_{u,v>0} Qhat_i(u) Qtilde_j(v) w_a(u) w_b(v) k_ell(u,v) du dv
// and are evaluated independently after u = s^2, v = r^2.
Scalar biorthogonal_kernel_product(const WeightSpec& spec, const PolyFamily& Q_hat,
                                   const PolyFamily& Q_tilde, int ell, int i, int j);

// The skew product <Q_{2i}, Q_{2j+1}>_t rewritten over the positive quadrant
// in the folded variables (kernel (sgn(v-u)+1)/2 against the once-folded
// weight); equals delta_ij r_j and serves as the 2-D crosscheck of the
// moment-table route.
Scalar folded_skew_product(const WeightSpec& spec, const PolyFamily& Q_hat,
                           const PolyFamily& Q_tilde, int i, int j);

}  // namespace freud
