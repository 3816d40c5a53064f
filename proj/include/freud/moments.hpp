#pragma once

// Moments of the quartic weight pair: symmetric moments m_k of
// omega(x;t) = exp(-2x^4 + 2tx^2) and skew moments
// mu_{i,j} = 1/2 iint x^i y^j sgn(y-x) w(x)w(y) dx dy with w = exp(-x^4 + tx^2).

#include <memory>
#include <vector>

#include "freud/quadrature.hpp"
#include "freud/scalar.hpp"

namespace freud {

struct WeightSpec {
    Scalar t;
    QuadratureConfig quad;
};

WeightSpec make_weight_spec(const Scalar& t, int bits = 256,
                            const Scalar& quad_tol = Scalar("1e-40"));

Scalar freud_w(const WeightSpec& spec, const Scalar& x);      // exp(-x^4 + t x^2)
Scalar freud_omega(const WeightSpec& spec, const Scalar& x);  // w^2

class MomentTable {
  public:
    MomentTable(const WeightSpec& spec, int sym_order, int skew_order);

    const WeightSpec& spec() const { return spec_; }
    int sym_order() const { return sym_order_; }
    int skew_order() const { return skew_order_; }

    // m_k; zero for odd k, throws std::out_of_range beyond the table.
    Scalar sym(int k) const;
    // mu_{i,j}; antisymmetric, zero whenever i + j is even.
    Scalar skew(int i, int j) const;

  private:
    void build_sym();
    void build_skew();

    WeightSpec spec_;
    int sym_order_, skew_order_;
    std::vector<Scalar> sym_;             // even k only, index k/2
    std::vector<std::vector<Scalar>> mu_; // i < j, i + j odd
};

// m_k(t): base cases by quadrature, higher orders by the first-order moment
// recurrence 8 m_{k+4} = (k+1) m_k + 4t m_{k+2}, spot-checked by quadrature.
Scalar sym_moment(const WeightSpec& spec, int k);

// mu_{i,j}(t) via the 1-D reduction
// mu_{i,j} = 1/2 M_i M_j - int x^i w(x) C_j(x) dx,  C_j(x) = int_{-X}^x y^j w.
Scalar skew_moment(const WeightSpec& spec, int i, int j);

// Shared table per (t, precision); grows on demand, immutable once returned.
std::shared_ptr<const MomentTable> moment_table_for(const WeightSpec& spec, int sym_order,
                                                    int skew_order);

}  // namespace freud
