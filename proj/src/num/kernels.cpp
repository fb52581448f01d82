#include "num/kernels.hpp"

#include <algorithm>
#include <cstring>

#include "util/errors.hpp"

namespace efg::num {

namespace {

void check_mm(const Matrix& a, const Matrix& b, const Matrix& c, int m, int k,
              int n) {
  check_contract(a.rows() >= 0 && c.rows() == m && c.cols() == n && k >= 0 &&
                     b.cols() >= 0,
                 "matmul: shape mismatch");
}

// Work below this many multiply-adds is not worth a parallel region.
constexpr long long kParallelCutoff = 64 * 1024;

inline void matmul_row(const double* arow, const Matrix& b, double* crow,
                       int k, int n) {
  std::fill(crow, crow + n, 0.0);
  for (int p = 0; p < k; ++p) {
    const double apk = arow[p];
    if (apk == 0.0) continue;
    const double* brow = b.row(p);
    for (int j = 0; j < n; ++j) crow[j] += apk * brow[j];
  }
}

inline void matmul_tn_row(const Matrix& a, const Matrix& b, double* crow,
                          int i, int m, int n) {
  std::fill(crow, crow + n, 0.0);
  for (int r = 0; r < m; ++r) {
    const double ari = a(r, i);
    if (ari == 0.0) continue;
    const double* brow = b.row(r);
    for (int j = 0; j < n; ++j) crow[j] += ari * brow[j];
  }
}

inline void matmul_nt_row(const double* arow, const Matrix& b, double* crow,
                          int k, int n) {
  for (int j = 0; j < n; ++j) {
    const double* brow = b.row(j);
    double acc = 0.0;
    for (int p = 0; p < k; ++p) acc += arow[p] * brow[p];
    crow[j] = acc;
  }
}

}  // namespace

namespace serial {

void matmul(const Matrix& a, const Matrix& b, Matrix& c) {
  const int m = a.rows(), k = a.cols(), n = b.cols();
  check_mm(a, b, c, m, k, n);
  check_contract(b.rows() == k, "matmul: inner dimension mismatch");
  for (int i = 0; i < m; ++i) matmul_row(a.row(i), b, c.row(i), k, n);
}

void matmul_tn(const Matrix& a, const Matrix& b, Matrix& c) {
  const int m = a.rows(), k = a.cols(), n = b.cols();
  check_contract(b.rows() == m && c.rows() == k && c.cols() == n,
                 "matmul_tn: shape mismatch");
  for (int i = 0; i < k; ++i) matmul_tn_row(a, b, c.row(i), i, m, n);
}

void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c) {
  const int m = a.rows(), k = a.cols(), n = b.rows();
  check_contract(b.cols() == k && c.rows() == m && c.cols() == n,
                 "matmul_nt: shape mismatch");
  for (int i = 0; i < m; ++i) matmul_nt_row(a.row(i), b, c.row(i), k, n);
}

void add_bias(Matrix& m, const std::vector<double>& bias) {
  check_contract(static_cast<int>(bias.size()) == m.cols(),
                 "add_bias: width mismatch");
  for (int i = 0; i < m.rows(); ++i) {
    double* row = m.row(i);
    for (int j = 0; j < m.cols(); ++j) row[j] += bias[j];
  }
}

void relu(Matrix& m) {
  double* d = m.data();
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) d[i] = d[i] > 0.0 ? d[i] : 0.0;
}

void relu_backward(const Matrix& pre, Matrix& grad) {
  check_contract(pre.rows() == grad.rows() && pre.cols() == grad.cols(),
                 "relu_backward: shape mismatch");
  const double* p = pre.data();
  double* g = grad.data();
  const std::size_t n = grad.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] <= 0.0) g[i] = 0.0;
  }
}

void axpy(double alpha, const Matrix& x, Matrix& y) {
  check_contract(x.rows() == y.rows() && x.cols() == y.cols(),
                 "axpy: shape mismatch");
  const double* xd = x.data();
  double* yd = y.data();
  const std::size_t n = y.size();
  for (std::size_t i = 0; i < n; ++i) yd[i] += alpha * xd[i];
}

void column_sums(const Matrix& m, std::vector<double>& out) {
  out.assign(m.cols(), 0.0);
  for (int i = 0; i < m.rows(); ++i) {
    const double* row = m.row(i);
    for (int j = 0; j < m.cols(); ++j) out[j] += row[j];
  }
}

}  // namespace serial

void matmul(const Matrix& a, const Matrix& b, Matrix& c) {
  const int m = a.rows(), k = a.cols(), n = b.cols();
  check_mm(a, b, c, m, k, n);
  check_contract(b.rows() == k, "matmul: inner dimension mismatch");
  const long long work = 1ll * m * k * n;
#pragma omp parallel for schedule(static) if (work > kParallelCutoff)
  for (int i = 0; i < m; ++i) matmul_row(a.row(i), b, c.row(i), k, n);
}

void matmul_tn(const Matrix& a, const Matrix& b, Matrix& c) {
  const int m = a.rows(), k = a.cols(), n = b.cols();
  check_contract(b.rows() == m && c.rows() == k && c.cols() == n,
                 "matmul_tn: shape mismatch");
  const long long work = 1ll * m * k * n;
#pragma omp parallel for schedule(static) if (work > kParallelCutoff)
  for (int i = 0; i < k; ++i) matmul_tn_row(a, b, c.row(i), i, m, n);
}

void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c) {
  const int m = a.rows(), k = a.cols(), n = b.rows();
  check_contract(b.cols() == k && c.rows() == m && c.cols() == n,
                 "matmul_nt: shape mismatch");
  const long long work = 1ll * m * k * n;
#pragma omp parallel for schedule(static) if (work > kParallelCutoff)
  for (int i = 0; i < m; ++i) matmul_nt_row(a.row(i), b, c.row(i), k, n);
}

void add_bias(Matrix& m, const std::vector<double>& bias) {
  check_contract(static_cast<int>(bias.size()) == m.cols(),
                 "add_bias: width mismatch");
  const int rows = m.rows(), cols = m.cols();
#pragma omp parallel for schedule(static) if (1ll * rows * cols > kParallelCutoff)
  for (int i = 0; i < rows; ++i) {
    double* row = m.row(i);
    for (int j = 0; j < cols; ++j) row[j] += bias[j];
  }
}

void relu(Matrix& m) {
  const int rows = m.rows(), cols = m.cols();
#pragma omp parallel for schedule(static) if (1ll * rows * cols > kParallelCutoff)
  for (int i = 0; i < rows; ++i) {
    double* row = m.row(i);
    for (int j = 0; j < cols; ++j) row[j] = row[j] > 0.0 ? row[j] : 0.0;
  }
}

void relu_backward(const Matrix& pre, Matrix& grad) {
  check_contract(pre.rows() == grad.rows() && pre.cols() == grad.cols(),
                 "relu_backward: shape mismatch");
  const int rows = grad.rows(), cols = grad.cols();
#pragma omp parallel for schedule(static) if (1ll * rows * cols > kParallelCutoff)
  for (int i = 0; i < rows; ++i) {
    const double* p = pre.row(i);
    double* g = grad.row(i);
    for (int j = 0; j < cols; ++j) {
      if (p[j] <= 0.0) g[j] = 0.0;
    }
  }
}

void axpy(double alpha, const Matrix& x, Matrix& y) {
  check_contract(x.rows() == y.rows() && x.cols() == y.cols(),
                 "axpy: shape mismatch");
  const int rows = y.rows(), cols = y.cols();
#pragma omp parallel for schedule(static) if (1ll * rows * cols > kParallelCutoff)
  for (int i = 0; i < rows; ++i) {
    const double* xd = x.row(i);
    double* yd = y.row(i);
    for (int j = 0; j < cols; ++j) yd[j] += alpha * xd[j];
  }
}

void column_sums(const Matrix& m, std::vector<double>& out) {
  // Column reduction parallelizes poorly at our sizes; keep the reference.
  serial::column_sums(m, out);
}

}  // namespace efg::num
