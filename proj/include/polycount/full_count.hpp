#pragma once

#include <vector>

#include "polycount/catalan.hpp"
#include "polycount/matrix.hpp"

namespace polycount {

// F(n, m): the number of n-vertex connected components of the degree-3 tree
// containing a fixed full component with m boundary (and m-2 interior)
// vertices. Two exact routes are provided:
//
//   * a convolution of Catalan sequences (the defining sum over
//     compositions of n-m+2 into m positive parts), and
//   * a closed linear combination  a_1 C_{n+1} + a_2 C_n + ... + a_m C_{n-m+2}
//     whose coefficient vector is generated by a matrix recurrence and does
//     not depend on n.

// Coefficients a_1..a_m of the closed form; a_1 = 1 and every entry is
// nonzero. Stored 0-based: coeffs[j] is a_{j+1}.
struct FullCoefficients {
  int m = 1;
  std::vector<BigInt> coeffs;
};

// m x m unit-lower-triangular Toeplitz step matrix: subdiagonal -2*C_0,
// then -C_1, -C_2, ... down the first column. Requires m >= 2.
Matrix matrix_A(int m, const CatalanTable& cat);
Matrix matrix_A(int m);

// (m-1) x m Catalan block with entry (i, j) = -C_{m+i-j} (1-based indices),
// i.e. first row -C_m .. -C_1. Requires m >= 2.
Matrix matrix_B(int m, const CatalanTable& cat);
Matrix matrix_B(int m);

// a(1) = (1); a(k+1) = A_{k+1} * (a(k) with a zero appended). m >= 1.
FullCoefficients gen_vector_full(int m);

// True iff matrix_B(m) * gen_vector_full(m) is the zero vector. m >= 2.
bool kernel_check(int m);

// Defining convolution sum. Returns 0 for n < 2m-2 (empty index set).
// Requires m >= 2, n >= 0.
BigInt full_count_convolution(int n, int m);

// row[n] = F(n, m) for 0 <= n <= n_max, computed with one DP pass.
std::vector<BigInt> full_count_convolution_row(int m, int n_max, const CatalanTable& cat);

// Closed form over the certified domain n >= 2m-2 (smaller n rejected).
BigInt full_count_closed(int n, int m);
BigInt full_count_closed(int n, int m, const FullCoefficients& coeffs, const CatalanTable& cat);

// Leading-order size 4^{n-m+2} / (sqrt(pi) (n-m+2)^{3/2}).
// Requires m >= 2, n >= 2m-2.
double full_asymptotic(int n, int m);

}  // namespace polycount
