#pragma once

#include <vector>

#include "pmuid/matrix.hpp"

namespace pmuid {

// Module-wide numerical knobs. Functions take these as defaulted
// parameters so callers can override them without global state.
inline constexpr double kRankDropTol = 1e-12;   // relative to sigma_1
inline constexpr double kOrthoTol = 1e-8;       // orthonormality validation
inline constexpr double kCondLimit = 1e14;      // singularity declaration

// Thin SVD of a matrix, truncated at numerical rank: singular values at
// or below drop_tol * sigma_1 are dropped along with their vectors.
struct SvdFactors {
    Matrix U;                             // N x R, orthonormal columns
    std::vector<double> singular_values;  // R values, non-increasing, > 0
    Matrix V;                             // T x R, orthonormal columns

    int rank() const { return static_cast<int>(singular_values.size()); }

    // sigma_{K+1} in 1-based math notation: the first discarded singular
    // value after keeping K, defined as 0 once K reaches the rank.
    double sigma_next(int K) const {
        return K < rank() ? singular_values[K] : 0.0;
    }
};

SvdFactors compute_svd(const Matrix& y, double drop_tol = kRankDropTol);
SvdFactors compute_svd(const DataMatrix& y, double drop_tol = kRankDropTol);

// Best rank-K approximation U_K Sigma_K V_K^T. Requires 1 <= K <= rank.
Matrix truncate(const SvdFactors& svd, int K);

// Smallest K whose relative Frobenius truncation error is <= alpha.
int rank_for_tolerance(const SvdFactors& svd, double alpha);

// Largest singular value.
double spectral_norm(const Matrix& a);

// Moore-Penrose pseudoinverse via the SVD, same drop tolerance rule.
Matrix pinv(const Matrix& a, double drop_tol = kRankDropTol);

// argmin_Z || Y - Z * R_S ||_F, i.e. the least-squares weights that
// express every row of Y in terms of the K pilot rows R_S. Throws
// degeneracy_error when the pilot rows are linearly dependent.
Matrix solve_weights_row(const Matrix& y, const Matrix& r_s);

}  // namespace pmuid
