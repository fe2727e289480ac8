#pragma once

#include "pmuid/matrix.hpp"

namespace pmuid::kernels {

// Data-parallel dense kernels. The functions in this namespace are the
// OpenMP implementations used throughout the library; kernels::serial
// holds the plain-loop references the tests compare against and the
// benchmark times. Both sides accumulate in the same order per output
// element, so results are bit-identical regardless of thread count.

Matrix matmul(const Matrix& a, const Matrix& b);      // a(r x k) * b(k x c)
Matrix matmul_nt(const Matrix& a, const Matrix& b);   // a(r x k) * b(c x k)^T
Matrix matmul_tn(const Matrix& a, const Matrix& b);   // a(k x r)^T * b(k x c)
Matrix transpose(const Matrix& a);
Matrix subtract(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

namespace serial {
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matmul_nt(const Matrix& a, const Matrix& b);
Matrix matmul_tn(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix subtract(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
}  // namespace serial

}  // namespace pmuid::kernels
