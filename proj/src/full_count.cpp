#include "polycount/full_count.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace polycount {

namespace {

void require_m_at_least(int m, int minimum, const char* what) {
  if (m < minimum) {
    throw std::invalid_argument(std::string(what) + " requires m >= " +
                                std::to_string(minimum) + ", got " + std::to_string(m));
  }
}

// (a * b)[t] for t <= limit.
std::vector<BigInt> convolve_prefix(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                                    std::size_t limit) {
  std::vector<BigInt> out(limit + 1);
  for (std::size_t i = 0; i < a.size() && i <= limit; ++i) {
    if (a[i].is_zero()) {
      continue;
    }
    const std::size_t jmax = std::min(limit - i, b.size() - 1);
    for (std::size_t j = 0; j <= jmax; ++j) {
      if (!b[j].is_zero()) {
        out[i + j] += a[i] * b[j];
      }
    }
  }
  return out;
}

std::vector<BigInt> append_zero(std::vector<BigInt> v) {
  v.emplace_back(0);
  return v;
}

}  // namespace

Matrix matrix_A(int m, const CatalanTable& cat) {
  require_m_at_least(m, 2, "matrix_A");
  const auto size = static_cast<std::size_t>(m);
  Matrix a(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    a.at(i, i) = 1;
    if (i >= 1) {
      a.at(i, i - 1) = -2;  // -2 * C_0
    }
    for (std::size_t j = 0; j + 1 < i; ++j) {
      a.at(i, j) = -cat.at(i - j - 1);
    }
  }
  return a;
}

Matrix matrix_A(int m) {
  require_m_at_least(m, 2, "matrix_A");
  return matrix_A(m, catalan_table(static_cast<std::size_t>(m) - 2));
}

Matrix matrix_B(int m, const CatalanTable& cat) {
  require_m_at_least(m, 2, "matrix_B");
  const auto rows = static_cast<std::size_t>(m - 1);
  const auto cols = static_cast<std::size_t>(m);
  Matrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      // 1-based entry (i, j) is -C_{m+i-j}.
      b.at(i, j) = -cat.at(static_cast<std::size_t>(m) + i - j);
    }
  }
  return b;
}

Matrix matrix_B(int m) {
  require_m_at_least(m, 2, "matrix_B");
  return matrix_B(m, catalan_table(2 * static_cast<std::size_t>(m) - 2));
}

FullCoefficients gen_vector_full(int m) {
  require_m_at_least(m, 1, "gen_vector_full");
  const CatalanTable cat = catalan_table(m >= 2 ? static_cast<std::size_t>(m) - 2 : 0);
  std::vector<BigInt> coeffs{BigInt(1)};
  for (int k = 2; k <= m; ++k) {
    coeffs = matrix_A(k, cat).apply(append_zero(std::move(coeffs)));
  }
  return FullCoefficients{m, std::move(coeffs)};
}

bool kernel_check(int m) {
  require_m_at_least(m, 2, "kernel_check");
  const CatalanTable cat = catalan_table(2 * static_cast<std::size_t>(m) - 2);
  const FullCoefficients vec = gen_vector_full(m);
  const std::vector<BigInt> image = matrix_B(m, cat).apply(vec.coeffs);
  return std::all_of(image.begin(), image.end(), [](const BigInt& x) { return x.is_zero(); });
}

std::vector<BigInt> full_count_convolution_row(int m, int n_max, const CatalanTable& cat) {
  require_m_at_least(m, 2, "full_count_convolution_row");
  std::vector<BigInt> row(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
  const int s_max = n_max - m + 2;
  if (s_max < m) {
    return row;  // every composition needs m positive parts
  }
  const auto limit = static_cast<std::size_t>(s_max);
  // One factor per boundary vertex: C_r with r >= 1.
  std::vector<BigInt> factor(limit + 1);
  for (std::size_t r = 1; r <= limit; ++r) {
    factor[r] = cat.at(r);
  }
  std::vector<BigInt> acc = factor;
  for (int step = 2; step <= m; ++step) {
    acc = convolve_prefix(acc, factor, limit);
  }
  for (int n = 0; n <= n_max; ++n) {
    const int s = n - m + 2;
    if (s >= 0 && s <= s_max) {
      row[static_cast<std::size_t>(n)] = acc[static_cast<std::size_t>(s)];
    }
  }
  return row;
}

BigInt full_count_convolution(int n, int m) {
  require_m_at_least(m, 2, "full_count_convolution");
  if (n < 0) {
    throw std::invalid_argument("full_count_convolution requires n >= 0");
  }
  if (n < 2 * m - 2) {
    return 0;
  }
  const CatalanTable cat = catalan_table(static_cast<std::size_t>(n - m + 2));
  return full_count_convolution_row(m, n, cat)[static_cast<std::size_t>(n)];
}

BigInt full_count_closed(int n, int m, const FullCoefficients& coeffs, const CatalanTable& cat) {
  require_m_at_least(m, 2, "full_count_closed");
  if (n < 2 * m - 2) {
    throw std::invalid_argument("full_count_closed is certified for n >= 2m-2; got n=" +
                                std::to_string(n) + ", m=" + std::to_string(m));
  }
  if (coeffs.m != m) {
    throw std::invalid_argument("coefficient vector does not match m");
  }
  BigInt sum = 0;
  for (int j = 1; j <= m; ++j) {
    sum += coeffs.coeffs[static_cast<std::size_t>(j - 1)] *
           cat.at(static_cast<std::size_t>(n + 2 - j));
  }
  return sum;
}

BigInt full_count_closed(int n, int m) {
  require_m_at_least(m, 2, "full_count_closed");
  if (n < 2 * m - 2) {
    throw std::invalid_argument("full_count_closed is certified for n >= 2m-2; got n=" +
                                std::to_string(n) + ", m=" + std::to_string(m));
  }
  const CatalanTable cat = catalan_table(static_cast<std::size_t>(n) + 1);
  return full_count_closed(n, m, gen_vector_full(m), cat);
}

double full_asymptotic(int n, int m) {
  require_m_at_least(m, 2, "full_asymptotic");
  if (n < 2 * m - 2) {
    throw std::invalid_argument("full_asymptotic requires n >= 2m-2");
  }
  return catalan_asymptotic(static_cast<std::size_t>(n - m + 2));
}

}  // namespace polycount
