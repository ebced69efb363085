#pragma once

#include <vector>

#include "polycount/catalan.hpp"
#include "polycount/matrix.hpp"

namespace polycount {

// T(n, m): the number of n-vertex connected components of the degree-3 tree
// containing the two endpoints of a fixed m-vertex shortest path. Three
// exact routes: the defining convolution (end factors >= 1 vertex, inner
// path factors >= 0), the two-term recurrence
// T(n, m) = T(n, m-1) - T(n-1, m-2), and a signed Catalan combination of
// length floor_m(m) = floor((m-1)/2) + 2.

// Signed coefficients of the closed form, length floor_m(m); signs strictly
// alternate starting positive. Stored 0-based: coeffs[l] multiplies C_{n+1-l}.
struct PathCoefficients {
  int m = 2;
  std::vector<BigInt> coeffs;
};

// floor((m-1)/2) + 2 for m >= 2: the closed form's vector length.
int floor_m(int m);

// size x size unit-lower-triangular Toeplitz matrix with first column
// 1, -C_0, -C_1, -C_2, ...
Matrix matrix_T(int size, const CatalanTable& cat);
Matrix matrix_T(int size);

// Matrix route: a(2) = (1, -2); stepping m -> m+1 multiplies by
// matrix_T(floor_m(m+1)), first appending a zero exactly when
// floor_m(m+1) > floor_m(m). Requires m >= 2.
PathCoefficients gen_vector_path(int m);

// Same vector from the additive recurrence on coefficient magnitudes
// |a_l| over m: |a_l|(m+1) = |a_l|(m) + |a_{l-1}|(m-1), out-of-range terms
// zero. Kept as an independent construction route.
PathCoefficients gen_vector_path_additive(int m);

// Defining convolution sum. Returns 0 for n < m. Requires m >= 2, n >= 0.
BigInt path_count_convolution(int n, int m);

// row[n] = T(n, m) for 0 <= n <= n_max, one DP pass.
std::vector<BigInt> path_count_convolution_row(int m, int n_max, const CatalanTable& cat);

// Two-term recurrence with memo table, grounded at the formal bases
// T(n, 1) := C_{n+1} - C_n and T(n, 2) = C_{n+1} - 2 C_n.
// Requires m >= 2, n >= m.
BigInt path_count_recurrence(int n, int m);

// Signed Catalan combination over the certified domain n >= m.
BigInt path_count_closed(int n, int m);
BigInt path_count_closed(int n, int m, const PathCoefficients& coeffs, const CatalanTable& cat);

// Leading-order size 4^{n-floor_m(m)+2} / (sqrt(pi) (n-floor_m(m)+2)^{3/2}).
// Requires m >= 2, n >= m.
double path_asymptotic(int n, int m);

}  // namespace polycount
