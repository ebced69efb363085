#include "polycount/matrix.hpp"

#include <stdexcept>

namespace polycount {

std::vector<BigInt> Matrix::apply(std::span<const BigInt> v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("matrix apply: vector length mismatch");
  }
  std::vector<BigInt> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const BigInt& cell = cells_[i * cols_ + j];
      if (!cell.is_zero()) {
        sum += cell * v[j];
      }
    }
    out[i] = std::move(sum);
  }
  return out;
}

}  // namespace polycount
