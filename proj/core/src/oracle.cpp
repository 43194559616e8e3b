#include "svv/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "svv/splitmix64.hpp"

namespace svv {

namespace {

using Complex = std::complex<double>;
using Matrix = std::vector<Complex>;  // row-major d x d

Matrix random_matrix(SplitMix64& rng, int d) {
  Matrix A(static_cast<std::size_t>(d) * d);
  for (Complex& a : A) a = rng.next_complex();
  return A;
}

Matrix matmul(const Matrix& A, const Matrix& B, int d) {
  Matrix C(static_cast<std::size_t>(d) * d, Complex(0));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const Complex a = A[i * d + k];
      for (int j = 0; j < d; ++j) C[i * d + j] += a * B[k * d + j];
    }
  return C;
}

Complex trace(const Matrix& A, int d) {
  Complex t = 0;
  for (int i = 0; i < d; ++i) t += A[i * d + i];
  return t;
}

Complex determinant(Matrix A, int d) {
  Complex det = 1;
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    for (int r = col + 1; r < d; ++r)
      if (std::abs(A[r * d + col]) > std::abs(A[pivot * d + col])) pivot = r;
    if (std::abs(A[pivot * d + col]) == 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < d; ++j) std::swap(A[pivot * d + j], A[col * d + j]);
      det = -det;
    }
    det *= A[col * d + col];
    for (int r = col + 1; r < d; ++r) {
      const Complex factor = A[r * d + col] / A[col * d + col];
      for (int j = col; j < d; ++j) A[r * d + j] -= factor * A[col * d + j];
    }
  }
  return det;
}

/// One kernel vector of a numerically rank-deficient matrix.
std::vector<Complex> kernel_vector(Matrix M, int d) {
  std::vector<int> pivot_col_of_row;
  int row = 0;
  std::vector<bool> is_pivot(d, false);
  for (int col = 0; col < d && row < d; ++col) {
    int pivot = row;
    for (int r = row + 1; r < d; ++r)
      if (std::abs(M[r * d + col]) > std::abs(M[pivot * d + col])) pivot = r;
    if (std::abs(M[pivot * d + col]) < 1e-9) continue;  // free column
    if (pivot != row)
      for (int j = 0; j < d; ++j) std::swap(M[pivot * d + j], M[row * d + j]);
    for (int r = 0; r < d; ++r) {
      if (r == row) continue;
      const Complex factor = M[r * d + col] / M[row * d + col];
      for (int j = col; j < d; ++j) M[r * d + j] -= factor * M[row * d + j];
    }
    pivot_col_of_row.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  int free_col = -1;
  for (int col = 0; col < d; ++col)
    if (!is_pivot[col]) free_col = col;
  if (free_col < 0) throw std::runtime_error("matrix is numerically nonsingular; no kernel");

  std::vector<Complex> x(d, Complex(0));
  x[free_col] = 1;
  for (int r = static_cast<int>(pivot_col_of_row.size()) - 1; r >= 0; --r) {
    const int pc = pivot_col_of_row[r];
    Complex rhs = -M[r * d + free_col];
    x[pc] = rhs / M[r * d + pc];
  }
  return x;
}

void check_non_isotropic(const std::vector<Complex>& x) {
  Complex bilinear = 0;
  double norm2 = 0;
  for (const Complex& xi : x) {
    bilinear += xi * xi;  // transpose form, no conjugation
    norm2 += std::norm(xi);
  }
  if (std::abs(bilinear) <= 1e-6 * norm2)
    throw std::runtime_error("computed eigenvector is numerically isotropic");
}

}  // namespace

std::vector<Complex> characteristic_polynomial(const Matrix& A, int d) {
  // Faddeev-LeVerrier: p(x) = x^d + c_{d-1} x^{d-1} + ... + c_0.
  std::vector<Complex> coeffs(d + 1);
  coeffs[d] = 1;
  Matrix M(static_cast<std::size_t>(d) * d, Complex(0));
  Complex c = 1;
  for (int k = 1; k <= d; ++k) {
    for (int i = 0; i < d; ++i) M[i * d + i] += c;
    M = matmul(A, M, d);
    c = -trace(M, d) / static_cast<double>(k);
    coeffs[d - k] = c;
  }
  return coeffs;
}

int matrix_eigen_count(int d, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const Matrix A = random_matrix(rng, d);
  const RootReport report = roots_of_polynomial(characteristic_polynomial(A, d));
  for (const Complex& lambda : report.roots) {
    Matrix M = A;
    for (int i = 0; i < d; ++i) M[i * d + i] -= lambda;
    check_non_isotropic(kernel_vector(std::move(M), d));
  }
  return report.distinct_count;
}

int binary_tensor_eigen_count(int m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int entries = 1 << m;
  std::vector<Complex> T(entries);
  for (Complex& t : T) t = rng.next_complex();

  // f_k(x) = T(e_k, x, .., x) is a binary form of degree m-1; its
  // coefficient of x_1^a x_2^{m-1-a} sums the entries whose source index
  // tuple has exactly a first-coordinate picks.
  std::vector<std::vector<Complex>> c(2, std::vector<Complex>(m, Complex(0)));
  for (int idx = 0; idx < entries; ++idx) {
    const int k = idx >> (m - 1);      // target index (mode 0)
    int ones = 0;                      // source coordinates equal to 1 (0-based: bit clear)
    for (int bit = 0; bit < m - 1; ++bit)
      if (((idx >> bit) & 1) == 0) ++ones;
    c[k][ones] += T[idx];
  }

  // g = f_1 x_2 - f_2 x_1, degree m; dehomogenise at x_2 = 1.
  std::vector<Complex> g(m + 1, Complex(0));
  for (int a = 0; a <= m - 1; ++a) {
    g[a] += c[0][a];
    g[a + 1] -= c[1][a];
  }
  const RootReport report = roots_of_polynomial(g);
  return report.distinct_count + (report.includes_infinity ? 1 : 0);
}

int generalized_eigen_count(int d, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const Matrix A = random_matrix(rng, d);
  const Matrix B = random_matrix(rng, d);

  // p(lambda) = det(A - lambda B), degree d; recover coefficients by an
  // inverse DFT over d+1 roots of unity.
  const int nodes = d + 1;
  std::vector<Complex> values(nodes);
  for (int j = 0; j < nodes; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / nodes;
    const Complex lambda(std::cos(angle), std::sin(angle));
    Matrix M = A;
    for (int i = 0; i < d * d; ++i) M[i] -= lambda * B[i];
    values[j] = determinant(std::move(M), d);
  }
  std::vector<Complex> coeffs(nodes, Complex(0));
  for (int k = 0; k < nodes; ++k) {
    for (int j = 0; j < nodes; ++j) {
      const double angle = -2.0 * std::numbers::pi * j * k / nodes;
      coeffs[k] += values[j] * Complex(std::cos(angle), std::sin(angle));
    }
    coeffs[k] /= static_cast<double>(nodes);
  }
  const double scale = std::abs(coeffs[d]);
  if (!(scale > 1e-12)) throw std::runtime_error("interpolated determinant is ill-conditioned");

  return roots_of_polynomial(coeffs).distinct_count;
}

int matrix_singular_pair_count(int d, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const Matrix A = random_matrix(rng, d);
  Matrix At(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) At[i * d + j] = A[j * d + i];
  const Matrix M = matmul(At, A, d);
  return roots_of_polynomial(characteristic_polynomial(M, d)).distinct_count;
}

}  // namespace svv
