#pragma once

#include <vector>

#include "num/matrix.hpp"

namespace efg::num {

// Dense kernels behind the MLP forward/backward passes. Each kernel has an
// OpenMP variant (default entry points) and a serial reference in
// num::serial. The parallel variants split work by output row only, with the
// same inner accumulation order as the reference, so results are
// bit-identical for any thread count. kernels_test checks that exactly;
// tools/kernel_bench compares throughput.

namespace serial {

// c = a * b
void matmul(const Matrix& a, const Matrix& b, Matrix& c);
// c = a^T * b
void matmul_tn(const Matrix& a, const Matrix& b, Matrix& c);
// c = a * b^T
void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c);
// m(i, :) += bias
void add_bias(Matrix& m, const std::vector<double>& bias);
// m = max(m, 0)
void relu(Matrix& m);
// grad(i, j) = 0 where pre(i, j) <= 0
void relu_backward(const Matrix& pre, Matrix& grad);
// y += alpha * x (same shape)
void axpy(double alpha, const Matrix& x, Matrix& y);
// out(j) = sum_i m(i, j)
void column_sums(const Matrix& m, std::vector<double>& out);

}  // namespace serial

void matmul(const Matrix& a, const Matrix& b, Matrix& c);
void matmul_tn(const Matrix& a, const Matrix& b, Matrix& c);
void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c);
void add_bias(Matrix& m, const std::vector<double>& bias);
void relu(Matrix& m);
void relu_backward(const Matrix& pre, Matrix& grad);
void axpy(double alpha, const Matrix& x, Matrix& y);
void column_sums(const Matrix& m, std::vector<double>& out);

}  // namespace efg::num
