#pragma once

// Identity verification suites across parameter values: a fixed registry of
// named checks, machine-readable records with residuals and tolerances, and
// the coefficient series behind the survey figures.

#include <optional>
#include <string>
#include <vector>

#include "freud/coeffs.hpp"
#include "freud/hermite.hpp"
#include "freud/polyfam.hpp"

namespace freud {

struct CheckRecord {
    std::string check_id;
    std::optional<Scalar> t;  // empty for t-independent checks
    int index_lo = 0;
    int index_hi = 0;
    Scalar max_abs_residual;
    Scalar max_rel_residual;
    Scalar tolerance;
    bool pass = false;
    long runtime_ms = 0;
    std::string detail;
};

struct VerifyConfig {
    std::vector<Scalar> t_values;
    int n_max = 12;
    int prec_bits = 256;
    Scalar quad_tol = Scalar("1e-40");
    Scalar tol_exact = Scalar("1e-18");  // algebraic identities
    Scalar tol_quad = Scalar("1e-12");   // quadrature-backed comparisons
};

struct VerificationReport {
    VerifyConfig config;
    std::vector<CheckRecord> records;
    bool all_pass = false;
};

// Registry order is fixed; run_suite rejects unknown ids. A missing subset
// runs the whole registry; an empty subset runs nothing.
const std::vector<std::string>& check_registry();
bool is_known_check(const std::string& id);

VerificationReport run_suite(const VerifyConfig& config,
                             const std::optional<std::vector<std::string>>& subset = std::nullopt);

struct FigureSeries {
    Scalar t;
    std::vector<Scalar> beta, xi, zeta, psi;  // columns aligned on n = 0..n_max
};

FigureSeries figure_data(const Scalar& t, int n_max, int prec_bits = 256,
                         const Scalar& quad_tol = Scalar("1e-40"));

// Per-t bundle of tables and families shared by the checks. Exposed so the
// test suites can build (and deliberately corrupt) one.
struct VerifyContext {
    WeightSpec spec;
    std::shared_ptr<const MomentTable> moments;
    NormalizationTable norm;
    CoefficientTables tables;
    PolyFamily P, Q, P_hat, P_tilde, Q_hat, Q_tilde;
};

VerifyContext build_context(const Scalar& t, int n_max, int prec_bits, const Scalar& quad_tol);

// Individual checks (one record per call); exposed for targeted testing.
CheckRecord check_dp1_residual(const VerifyContext& ctx, const VerifyConfig& cfg);
CheckRecord check_skew_orthogonality(const VerifyContext& ctx, const VerifyConfig& cfg);

}  // namespace freud
