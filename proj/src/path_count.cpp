#include "polycount/path_count.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace polycount {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw std::invalid_argument(message);
  }
}

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

}  // namespace

int floor_m(int m) {
  require(m >= 2, "floor_m requires m >= 2");
  return (m - 1) / 2 + 2;
}

Matrix matrix_T(int size, const CatalanTable& cat) {
  require(size >= 1, "matrix_T requires size >= 1");
  const auto n = static_cast<std::size_t>(size);
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    t.at(i, i) = 1;
    for (std::size_t j = 0; j < i; ++j) {
      t.at(i, j) = -cat.at(i - j - 1);
    }
  }
  return t;
}

Matrix matrix_T(int size) {
  require(size >= 1, "matrix_T requires size >= 1");
  return matrix_T(size, catalan_table(static_cast<std::size_t>(size) - 1));
}

PathCoefficients gen_vector_path(int m) {
  require(m >= 2, "gen_vector_path requires m >= 2");
  const int final_len = floor_m(m);
  const CatalanTable cat = catalan_table(static_cast<std::size_t>(final_len));
  std::vector<BigInt> coeffs{BigInt(1), BigInt(-2)};
  for (int k = 2; k < m; ++k) {
    if (floor_m(k + 1) > floor_m(k)) {
      coeffs.emplace_back(0);
    }
    coeffs = matrix_T(floor_m(k + 1), cat).apply(coeffs);
  }
  return PathCoefficients{m, std::move(coeffs)};
}

PathCoefficients gen_vector_path_additive(int m) {
  require(m >= 2, "gen_vector_path_additive requires m >= 2");
  // Magnitudes only; the sign of entry l is (-1)^l (0-based).
  std::vector<BigInt> prev{BigInt(1), BigInt(2)};           // m = 2
  std::vector<BigInt> last{BigInt(1), BigInt(3), BigInt(1)};  // m = 3
  if (m == 2) {
    last = std::move(prev);
  }
  for (int k = 3; k < m; ++k) {
    const auto len = static_cast<std::size_t>(floor_m(k + 1));
    std::vector<BigInt> next(len);
    for (std::size_t l = 0; l < len; ++l) {
      if (l < last.size()) {
        next[l] += last[l];
      }
      if (l >= 1 && l - 1 < prev.size()) {
        next[l] += prev[l - 1];
      }
    }
    prev = std::move(last);
    last = std::move(next);
  }
  for (std::size_t l = 1; l < last.size(); l += 2) {
    last[l] = -last[l];
  }
  return PathCoefficients{m, std::move(last)};
}

std::vector<BigInt> path_count_convolution_row(int m, int n_max, const CatalanTable& cat) {
  require(m >= 2, "path_count_convolution_row requires m >= 2");
  std::vector<BigInt> row(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
  const int s_max = n_max - m + 2;
  if (s_max < 2) {
    return row;  // the two endpoint factors already need 2
  }
  const auto limit = static_cast<std::size_t>(s_max);
  // Endpoint factor C_r with r >= 1; inner path factor C_r with r >= 0.
  std::vector<BigInt> endpoint(limit + 1);
  std::vector<BigInt> inner(limit + 1);
  for (std::size_t r = 0; r <= limit; ++r) {
    inner[r] = cat.at(r);
    if (r >= 1) {
      endpoint[r] = cat.at(r);
    }
  }
  std::vector<BigInt> acc = endpoint;
  for (int step = 0; step < m - 2; ++step) {
    acc = convolve_prefix(acc, inner, limit);
  }
  acc = convolve_prefix(acc, endpoint, limit);
  for (int n = 0; n <= n_max; ++n) {
    const int s = n - m + 2;
    if (s >= 0 && s <= s_max) {
      row[static_cast<std::size_t>(n)] = acc[static_cast<std::size_t>(s)];
    }
  }
  return row;
}

BigInt path_count_convolution(int n, int m) {
  require(m >= 2, "path_count_convolution requires m >= 2");
  require(n >= 0, "path_count_convolution requires n >= 0");
  if (n < m) {
    return 0;
  }
  const CatalanTable cat = catalan_table(static_cast<std::size_t>(n - m + 2));
  return path_count_convolution_row(m, n, cat)[static_cast<std::size_t>(n)];
}

BigInt path_count_recurrence(int n, int m) {
  require(m >= 2, "path_count_recurrence requires m >= 2");
  require(n >= m, "path_count_recurrence requires n >= m; got n=" + std::to_string(n) +
                      ", m=" + std::to_string(m));
  const CatalanTable cat = catalan_table(static_cast<std::size_t>(n) + 1);
  const auto width = static_cast<std::size_t>(n) + 1;
  // Formal base rows: T(., 1) = C_{.+1} - C_. and T(., 2) = C_{.+1} - 2 C_..
  std::vector<BigInt> two_back(width);
  std::vector<BigInt> one_back(width);
  for (std::size_t nn = 0; nn < width; ++nn) {
    two_back[nn] = cat.at(nn + 1) - cat.at(nn);
    one_back[nn] = cat.at(nn + 1) - 2 * cat.at(nn);
  }
  if (m == 2) {
    return one_back[static_cast<std::size_t>(n)];
  }
  for (int mm = 3; mm <= m; ++mm) {
    std::vector<BigInt> next(width);
    for (std::size_t nn = 1; nn < width; ++nn) {
      next[nn] = one_back[nn] - two_back[nn - 1];
    }
    two_back = std::move(one_back);
    one_back = std::move(next);
  }
  return one_back[static_cast<std::size_t>(n)];
}

BigInt path_count_closed(int n, int m, const PathCoefficients& coeffs, const CatalanTable& cat) {
  require(m >= 2, "path_count_closed requires m >= 2");
  require(n >= m, "path_count_closed is certified for n >= m; got n=" + std::to_string(n) +
                      ", m=" + std::to_string(m));
  if (coeffs.m != m) {
    throw std::invalid_argument("coefficient vector does not match m");
  }
  BigInt sum = 0;
  const int len = floor_m(m);
  for (int l = 1; l <= len; ++l) {
    sum += coeffs.coeffs[static_cast<std::size_t>(l - 1)] *
           cat.at(static_cast<std::size_t>(n + 2 - l));
  }
  return sum;
}

BigInt path_count_closed(int n, int m) {
  require(m >= 2, "path_count_closed requires m >= 2");
  require(n >= m, "path_count_closed is certified for n >= m; got n=" + std::to_string(n) +
                      ", m=" + std::to_string(m));
  const CatalanTable cat = catalan_table(static_cast<std::size_t>(n) + 1);
  return path_count_closed(n, m, gen_vector_path(m), cat);
}

double path_asymptotic(int n, int m) {
  require(m >= 2, "path_asymptotic requires m >= 2");
  require(n >= m, "path_asymptotic requires n >= m");
  return catalan_asymptotic(static_cast<std::size_t>(n - floor_m(m) + 2));
}

}  // namespace polycount
