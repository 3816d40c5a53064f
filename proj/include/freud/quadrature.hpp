#pragma once

// Adaptive quadrature over truncated real-line domains for integrands with
// exp(-x^4)-type decay. The core rule is tanh-sinh with level doubling until
// two successive levels agree to the target relative tolerance; cumulative
// antiderivatives are built from panelwise Gauss-Legendre rules so they can
// be evaluated at arbitrary interior points.

#include <functional>
#include <memory>
#include <vector>

#include "freud/scalar.hpp"

namespace freud {

using Integrand = std::function<Scalar(const Scalar&)>;

struct QuadratureConfig {
    int precision_bits = 256;
    Scalar target_rel_tol = Scalar("1e-40");
    int max_refinement_levels = 12;
    Scalar domain_cut;  // truncation half-width X
};

// Truncation half-width X with 2X^4 - 2|t|X^2 >= (bits + 16) ln 2, so the tail
// of exp(-2x^4 + 2tx^2) beyond X sits below working precision.
Scalar quartic_domain_cut(const Scalar& t, int bits);
// Variant for integrands x^k exp(-2x^4 + 2tx^2): the cut absorbs the k ln x
// amplification of the tail.
Scalar quartic_domain_cut_for_power(const Scalar& t, int bits, int k);
// Same idea for exp(-x^2/2)-type weights (products decay like exp(-x^2)).
Scalar gaussian_domain_cut(int bits);

QuadratureConfig make_quad_config(const Scalar& t, int bits = 256,
                                  const Scalar& rel_tol = Scalar("1e-40"),
                                  int max_levels = 12);

// Integral of f over [-X, X] (X = cfg.domain_cut). Throws NonConvergence when
// the level budget is exhausted before two successive levels agree.
Scalar integrate(const Integrand& f, const QuadratureConfig& cfg);

// Integral of f over [a, b] with the same refinement contract.
Scalar integrate(const Integrand& f, const Scalar& a, const Scalar& b,
                 const QuadratureConfig& cfg);

// Evaluable antiderivative F(x) = int_{-X}^{x} f, consistent with integrate():
// F(X) matches integrate(f) to the target tolerance.
class CumulativeIntegral {
  public:
    CumulativeIntegral() = default;
    Scalar operator()(const Scalar& x) const;
    const Scalar& total() const;
    const Scalar& lower() const { return a_; }
    const Scalar& upper() const { return b_; }

  private:
    friend CumulativeIntegral cumulative_integrate(const Integrand&, const Scalar&,
                                                   const Scalar&, const QuadratureConfig&);
    Integrand f_;
    Scalar a_, b_, panel_width_;
    int order_ = 0;
    int bits_ = 0;
    std::vector<Scalar> prefix_;  // prefix_[p] = int_a^{edge_p} f
};

CumulativeIntegral cumulative_integrate(const Integrand& f, const QuadratureConfig& cfg);
CumulativeIntegral cumulative_integrate(const Integrand& f, const Scalar& a, const Scalar& b,
                                        const QuadratureConfig& cfg);

// Antiderivatives of the whole family x^j * f(x), j = 0..jmax, sharing one
// panel grid so that evaluating all of them at a point costs a single batch
// of f evaluations. Used for sign-kernel reductions of double integrals.
class MonomialCumulatives {
  public:
    MonomialCumulatives(Integrand f, int jmax, const Scalar& a, const Scalar& b,
                        const QuadratureConfig& cfg);
    // out[j] = int_a^x y^j f(y) dy
    void eval_all(const Scalar& x, std::vector<Scalar>& out) const;
    const Scalar& total(int j) const { return totals_[static_cast<size_t>(j)]; }
    int jmax() const { return jmax_; }
    const Scalar& lower() const { return a_; }
    const Scalar& upper() const { return b_; }

  private:
    void build(const QuadratureConfig& cfg);
    Integrand f_;
    int jmax_ = 0;
    Scalar a_, b_, panel_width_;
    int order_ = 0;
    int bits_ = 0;
    std::vector<std::vector<Scalar>> prefix_;  // [j][panel]
    std::vector<Scalar> totals_;
};

// Internals shared with the moment engine: tanh-sinh nodes on (-1,1), stored
// for u >= 0 only (the rule is symmetric), grouped by refinement level.
struct TanhSinhNodes {
    struct Node {
        Scalar tau;    // abscissa in (0,1); level 0 also carries tau = 0
        Scalar sigma;  // weight factor, du measure excluded
    };
    std::vector<std::vector<Node>> levels;
    static const TanhSinhNodes& get(int bits, int max_level);
};

struct GaussLegendreRule {
    std::vector<Scalar> nodes;    // on (-1, 1), ascending
    std::vector<Scalar> weights;
    static const GaussLegendreRule& get(int order, int bits);
};

}  // namespace freud
