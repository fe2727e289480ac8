#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pmuid/matrix.hpp"

namespace pmuid {

enum class Axis { rows, columns };
enum class Strategy { deim, qdeim, random };

std::string to_string(Axis a);
std::string to_string(Strategy s);
Axis axis_from_string(const std::string& s);
Strategy strategy_from_string(const std::string& s);

// An ordered list of distinct pilot indices. For DEIM the order is the
// selection order, so every prefix is itself a valid (smaller) pilot set.
struct PilotSet {
    std::vector<int> indices;
    Axis axis = Axis::rows;
    Strategy strategy = Strategy::deim;

    int size() const { return static_cast<int>(indices.size()); }
};

// eta = || (S^T U_K)^{-1} ||_2 for a K-column orthonormal basis; always
// >= 1 and small exactly when the selected rows of U_K stay close to
// orthonormal among themselves.
struct ErrorFactor {
    double eta = 1.0;
    int K = 0;
};

// Greedy selection: index k is the largest-magnitude entry of the
// residual u_k - P_{k-1} u_k of the interpolatory projection onto the
// previously selected rows. Ties break toward the smaller index.
// U must have orthonormal columns (validated against ortho_tol).
PilotSet deim_select(const Matrix& u, Axis axis = Axis::rows,
                     double ortho_tol = kOrthoTolSelection);

// All K indices at once, as the row pivots of a column-pivoted QR of
// U^T. The index set is invariant under right-rotation of U.
PilotSet qdeim_select(const Matrix& u, Axis axis = Axis::rows,
                      double ortho_tol = kOrthoTolSelection);

// K distinct indices drawn uniformly without replacement; deterministic
// for a fixed seed.
PilotSet random_select(int n, int k, uint64_t seed, Axis axis = Axis::rows);

// Applies the interpolatory projector P = U_k (S_k^T U_k)^{-1} S_k^T to
// x via a k x k solve. The result matches x exactly at the selected
// indices.
std::vector<double> interp_project(const Matrix& u_k, const PilotSet& s_k,
                                   std::span<const double> x);

// Error factor of the selected K x K submatrix; throws degeneracy_error
// when that submatrix is singular (condition estimate beyond kCondLimit).
ErrorFactor error_factor(const Matrix& u_k, const PilotSet& s);

inline constexpr double kOrthoTolSelection = 1e-8;

}  // namespace pmuid
