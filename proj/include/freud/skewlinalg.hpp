#pragma once

// Hankel determinants, Pfaffians of skew moment blocks, the normalization
// sequences h_n and r_n they generate, and the finite-truncation residual of
// the transition-matrix identity Q^T R^-1 Q = -D^-1 N D^-1.

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <vector>

#include "freud/moments.hpp"
#include "freud/scalar.hpp"

namespace freud {

using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

enum class BlockKind { hankel_moment, skew_moment, n_matrix, d_matrix, r_matrix, q_transition };

struct FiniteMatrixBlock {
    BlockKind kind;
    Matrix entries;
    int dim() const { return static_cast<int>(entries.rows()); }
};

bool is_skew_kind(BlockKind kind);

// (m_{i+j})_{0<=i,j<n} and (mu_{i,j})_{0<=i,j<n}
FiniteMatrixBlock hankel_block(const MomentTable& moments, int n);
FiniteMatrixBlock skew_block(const MomentTable& moments, int n);

// det of the n x n Hankel moment block; the empty determinant is 1.
Scalar hankel_tau(const MomentTable& moments, int n);

// Pfaffian by skew-symmetric elimination with greedy pivoting (Parlett-Reid
// style, see Wimmer, arXiv:1102.3440). Sign convention pf([[0,a],[-a,0]]) = a.
// For dim <= 6 the result is cross-checked against recursive expansion.
Scalar pfaffian(const FiniteMatrixBlock& block);
Scalar pfaffian_recursive(const Matrix& a);  // O(n!!), small dims only

struct NormalizationTable {
    std::vector<Scalar> h;  // h_n = tau_{n+1}/tau_n
    std::vector<Scalar> r;  // r_n = pf(mu block 2n+2)/pf(mu block 2n)
};

// h_n for n <= n_max via one LDL^T pass over the largest Hankel block
// (its diagonal is exactly h_n); r_n for n <= r_max via Pfaffian ratios.
NormalizationTable normalizations(const MomentTable& moments, int n_max, int r_max = -1);

// Finite truncations of the four matrices entering the transition identity.
FiniteMatrixBlock build_D(const NormalizationTable& norm, int dim);
FiniteMatrixBlock build_N(const NormalizationTable& norm, int dim);
FiniteMatrixBlock build_R(const NormalizationTable& norm, int dim);
FiniteMatrixBlock build_Q_transition(const std::vector<Scalar>& xi, const std::vector<Scalar>& psi,
                                     const std::vector<Scalar>& zeta, int dim);

// Max-abs entry of Q^T R^-1 Q + D^-1 N D^-1 over the interior
// (n_trunc-4) x (n_trunc-4) block; the trailing rows/columns are
// truncation-polluted by the bandwidth of N and Q.
Scalar transition_identity_residual(const FiniteMatrixBlock& Q, const FiniteMatrixBlock& R,
                                    const FiniteMatrixBlock& D, const FiniteMatrixBlock& N,
                                    int n_trunc);

}  // namespace freud
