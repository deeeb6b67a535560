#include "finact/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "finact/error.hpp"

namespace finact {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.dim_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.dim_) {
      throw PreconditionError("matrix row " + std::to_string(i) + " has wrong length");
    }
    for (int j = 0; j < m.dim_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

std::int64_t IntMatrix::determinant() const {
  if (dim_ == 0) return 1;
  // Bareiss: every intermediate value is a minor of the input, so division is exact.
  std::vector<__int128> a(entries_.begin(), entries_.end());
  auto at = [&](int r, int c) -> __int128& { return a[r * dim_ + c]; };
  int sign = 1;
  __int128 previous = 1;
  for (int k = 0; k + 1 < dim_; ++k) {
    if (at(k, k) == 0) {
      int swap_row = k + 1;
      while (swap_row < dim_ && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == dim_) return 0;
      for (int c = 0; c < dim_; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (int i = k + 1; i < dim_; ++i) {
      for (int j = k + 1; j < dim_; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / previous;
      }
    }
    previous = at(k, k);
  }
  return sign * static_cast<std::int64_t>(at(dim_ - 1, dim_ - 1));
}

std::vector<std::vector<std::int64_t>> IntMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(dim_, std::vector<std::int64_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < dim_; ++i) {
    out << (i ? ",[" : "[");
    for (int j = 0; j < dim_; ++j) out << (j ? "," : "") << (*this)(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw PreconditionError("matrix product: dimension mismatch");
  IntMatrix c(a.dim_);
  for (int i = 0; i < a.dim_; ++i) {
    for (int k = 0; k < a.dim_; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.dim_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

}  // namespace finact
