#include "freud/skewlinalg.hpp"

#include <Eigen/LU>
#include <functional>

namespace freud {

bool is_skew_kind(BlockKind kind) {
    return kind == BlockKind::skew_moment || kind == BlockKind::n_matrix ||
           kind == BlockKind::r_matrix;
}

FiniteMatrixBlock hankel_block(const MomentTable& moments, int n) {
    FiniteMatrixBlock block;
    block.kind = BlockKind::hankel_moment;
    block.entries.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) block.entries(i, j) = moments.sym(i + j);
    return block;
}

FiniteMatrixBlock skew_block(const MomentTable& moments, int n) {
    FiniteMatrixBlock block;
    block.kind = BlockKind::skew_moment;
    block.entries.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) block.entries(i, j) = moments.skew(i, j);
    return block;
}

Scalar hankel_tau(const MomentTable& moments, int n) {
    if (n < 0) throw std::invalid_argument("hankel_tau: negative dimension");
    if (n == 0) return Scalar(1);
    FiniteMatrixBlock block = hankel_block(moments, n);
    if (n == 1) return block.entries(0, 0);
    Eigen::FullPivLU<Matrix> lu(block.entries);
    return lu.determinant();
}

Scalar pfaffian_recursive(const Matrix& a) {
    int n = static_cast<int>(a.rows());
    if (n % 2 == 1) return Scalar(0);
    std::vector<int> rows(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = i;
    std::function<Scalar(std::vector<int>&)> pf = [&](std::vector<int>& idx) -> Scalar {
        if (idx.empty()) return Scalar(1);
        int i0 = idx[0];
        Scalar s = 0;
        int sign = 1;
        for (size_t pos = 1; pos < idx.size(); ++pos) {
            std::vector<int> rest;
            rest.reserve(idx.size() - 2);
            for (size_t k = 1; k < idx.size(); ++k)
                if (k != pos) rest.push_back(idx[k]);
            s += sign * a(i0, idx[pos]) * pf(rest);
            sign = -sign;
        }
        return s;
    };
    return pf(rows);
}

Scalar pfaffian(const FiniteMatrixBlock& block) {
    if (!is_skew_kind(block.kind))
        throw std::invalid_argument("pfaffian: block kind is not skew-symmetric");
    int n = block.dim();
    if (n % 2 == 1) throw std::invalid_argument("pfaffian: dimension must be even");
    if (n == 0) return Scalar(1);

    Scalar max_abs = 0;
    Scalar skew_defect = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar v = abs(block.entries(i, j));
            if (v > max_abs) max_abs = v;
            Scalar d = abs(block.entries(i, j) + block.entries(j, i));
            if (d > skew_defect) skew_defect = d;
        }
    Scalar skew_tol = max_abs * pow(Scalar(2), -(working_precision_bits() / 2));
    if (max_abs > 0 && skew_defect > skew_tol)
        throw std::invalid_argument("pfaffian: block is not skew-symmetric within tolerance");

    Matrix a = block.entries;
    Scalar result = 1;
    Scalar min_pivot = -1;
    for (int k = 0; k + 1 < n; k += 2) {
        int kp = k + 1;
        for (int i = k + 2; i < n; ++i)
            if (abs(a(i, k)) > abs(a(kp, k))) kp = i;
        if (kp != k + 1) {
            a.row(k + 1).swap(a.row(kp));
            a.col(k + 1).swap(a.col(kp));
            result = -result;
        }
        Scalar pivot = a(k, k + 1);
        if (pivot == 0) return Scalar(0);  // whole pivot column is null, pf vanishes exactly
        if (abs(pivot) < max_abs * pow(Scalar(2), -(working_precision_bits() - 16)))
            throw SingularPivot("pfaffian: all candidate pivots underflow at step " +
                                std::to_string(k));
        result *= pivot;
        Scalar ap = abs(pivot);
        if (min_pivot < 0 || ap < min_pivot) min_pivot = ap;
        if (k + 2 < n) {
            // skew-symmetric rank-2 update of the trailing block
            for (int i = k + 2; i < n; ++i) {
                Scalar ti = a(i, k) / pivot;
                if (ti == 0 && a(i, k + 1) == 0) continue;
                Scalar si = a(i, k + 1) / pivot;
                for (int j = i + 1; j < n; ++j) {
                    Scalar upd = ti * a(k + 1, j) - si * a(k, j);
                    // a(k+1,j) pairs with a(i,k), a(k,j) with a(i,k+1)
                    a(i, j) += upd;
                    a(j, i) = -a(i, j);
                }
            }
        }
    }
    if (min_pivot > 0 && max_abs > 0) {
        Scalar loss = log10(max_abs / min_pivot);
        if (loss > Scalar(6) * digits_for_bits(working_precision_bits()) / 10)
            throw PrecisionExhausted("pfaffian: pivot decay beyond precision budget");
    }
    if (n <= 6) {
        Scalar check = pfaffian_recursive(block.entries);
        Scalar scale = abs(result);
        if (abs(check) > scale) scale = abs(check);
        if (scale > 0 && abs(result - check) > scale * pow(Scalar(2), -(working_precision_bits() / 2)))
            throw CrossCheckFailure("pfaffian: elimination disagrees with recursive expansion",
                                    result, check);
    }
    return result;
}

NormalizationTable normalizations(const MomentTable& moments, int n_max, int r_max) {
    if (r_max < 0) r_max = n_max;
    NormalizationTable table;

    // LDL^T of the (n_max+1) x (n_max+1) Hankel block; h_n is the n-th pivot.
    {
        int n = n_max + 1;
        FiniteMatrixBlock H = hankel_block(moments, n);
        Matrix L = Matrix::Identity(n, n);
        Vector d(n);
        Scalar max_entry = H.entries.cwiseAbs().maxCoeff();
        Scalar min_d = -1;
        for (int k = 0; k < n; ++k) {
            Scalar dk = H.entries(k, k);
            for (int j = 0; j < k; ++j) dk -= L(k, j) * L(k, j) * d(j);
            if (dk <= 0)
                throw PrecisionExhausted("normalizations: Hankel pivot lost positivity at n = " +
                                         std::to_string(k));
            d(k) = dk;
            if (min_d < 0 || dk < min_d) min_d = dk;
            for (int i = k + 1; i < n; ++i) {
                Scalar lik = H.entries(i, k);
                for (int j = 0; j < k; ++j) lik -= L(i, j) * L(k, j) * d(j);
                L(i, k) = lik / dk;
            }
        }
        Scalar loss = log10(max_entry / min_d);
        if (loss > Scalar(6) * digits_for_bits(working_precision_bits()) / 10)
            throw PrecisionExhausted("normalizations: Hankel determinant ratios exhausted precision");
        table.h.assign(static_cast<size_t>(n_max) + 1, Scalar(0));
        for (int k = 0; k <= n_max; ++k) table.h[static_cast<size_t>(k)] = d(k);
    }

    if (r_max >= 0 && moments.skew_order() >= 1) {
        table.r.reserve(static_cast<size_t>(r_max) + 1);
        Scalar pf_prev = 1;  // pf of the empty block
        for (int k = 0; k <= r_max; ++k) {
            int dim = 2 * k + 2;
            if (dim - 1 > moments.skew_order()) break;
            Scalar pf_cur = pfaffian(skew_block(moments, dim));
            if (pf_prev == 0) throw SingularPivot("normalizations: vanishing Pfaffian ratio");
            table.r.push_back(pf_cur / pf_prev);
            pf_prev = pf_cur;
        }
    }
    return table;
}

FiniteMatrixBlock build_D(const NormalizationTable& norm, int dim) {
    FiniteMatrixBlock block;
    block.kind = BlockKind::d_matrix;
    block.entries = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) block.entries(i, i) = norm.h[static_cast<size_t>(i)];
    return block;
}

FiniteMatrixBlock build_N(const NormalizationTable& norm, int dim) {
    // bands: N_{i,i+1} = (i+1)/2 h_i, N_{i,i+3} = 4 h_{i+3}, antisymmetric
    FiniteMatrixBlock block;
    block.kind = BlockKind::n_matrix;
    block.entries = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (i + 1 < dim) {
            Scalar v = Scalar(i + 1) / 2 * norm.h[static_cast<size_t>(i)];
            block.entries(i, i + 1) = v;
            block.entries(i + 1, i) = -v;
        }
        if (i + 3 < dim) {
            Scalar v = 4 * norm.h[static_cast<size_t>(i) + 3];
            block.entries(i, i + 3) = v;
            block.entries(i + 3, i) = -v;
        }
    }
    return block;
}

FiniteMatrixBlock build_R(const NormalizationTable& norm, int dim) {
    FiniteMatrixBlock block;
    block.kind = BlockKind::r_matrix;
    block.entries = Matrix::Zero(dim, dim);
    for (int k = 0; 2 * k + 1 < dim; ++k) {
        const Scalar& rk = norm.r[static_cast<size_t>(k)];
        block.entries(2 * k, 2 * k + 1) = rk;
        block.entries(2 * k + 1, 2 * k) = -rk;
    }
    return block;
}

FiniteMatrixBlock build_Q_transition(const std::vector<Scalar>& xi, const std::vector<Scalar>& psi,
                                     const std::vector<Scalar>& zeta, int dim) {
    FiniteMatrixBlock block;
    block.kind = BlockKind::q_transition;
    block.entries = Matrix::Identity(dim, dim);
    for (int l = 0; 2 * l + 2 < dim; ++l)
        block.entries(2 * l + 2, 2 * l) = xi[static_cast<size_t>(l)];
    for (int l = 0; 2 * l + 3 < dim; ++l)
        block.entries(2 * l + 3, 2 * l + 1) = psi[static_cast<size_t>(l)];
    for (int l = 0; 2 * l + 5 < dim; ++l)
        block.entries(2 * l + 5, 2 * l + 1) = zeta[static_cast<size_t>(l)];
    return block;
}

Scalar transition_identity_residual(const FiniteMatrixBlock& Q, const FiniteMatrixBlock& R,
                                    const FiniteMatrixBlock& D, const FiniteMatrixBlock& N,
                                    int n_trunc) {
    if (n_trunc < 8) throw std::invalid_argument("transition residual: n_trunc must be >= 8");
    if (Q.dim() != n_trunc || R.dim() != n_trunc || D.dim() != n_trunc || N.dim() != n_trunc)
        throw std::invalid_argument("transition residual: block dimensions disagree");

    Matrix r_inv = Matrix::Zero(n_trunc, n_trunc);
    for (int k = 0; 2 * k + 1 < n_trunc; ++k) {
        Scalar rk = R.entries(2 * k, 2 * k + 1);
        if (rk == 0) throw SingularPivot("transition residual: zero r block");
        r_inv(2 * k, 2 * k + 1) = -1 / rk;
        r_inv(2 * k + 1, 2 * k) = 1 / rk;
    }
    Matrix d_inv = Matrix::Zero(n_trunc, n_trunc);
    for (int i = 0; i < n_trunc; ++i) d_inv(i, i) = 1 / D.entries(i, i);

    Matrix lhs = Q.entries.transpose() * r_inv * Q.entries;
    Matrix rhs = d_inv * N.entries * d_inv;
    Matrix defect = lhs + rhs;
    int m = n_trunc - 4;
    return defect.topLeftCorner(m, m).cwiseAbs().maxCoeff();
}

}  // namespace freud
