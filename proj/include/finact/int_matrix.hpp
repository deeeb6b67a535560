#ifndef FINACT_INT_MATRIX_HPP
#define FINACT_INT_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace finact {

/// Dense square integer matrix, row-major. Dimension 0 is allowed (genus-0
/// graphs) and behaves as the empty identity.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim, 0) {}
  /// Throws PreconditionError unless rows form a square matrix.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(int dim);

  int dim() const { return dim_; }
  std::int64_t& operator()(int row, int col) { return entries_[row * dim_ + col]; }
  std::int64_t operator()(int row, int col) const { return entries_[row * dim_ + col]; }

  std::int64_t trace() const;
  /// Exact determinant by fraction-free elimination.
  std::int64_t determinant() const;
  bool is_identity() const { return *this == identity(dim_); }

  std::vector<std::vector<std::int64_t>> rows() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;
  bool operator<(const IntMatrix& other) const {
    return dim_ != other.dim_ ? dim_ < other.dim_ : entries_ < other.entries_;
  }

 private:
  int dim_ = 0;
  std::vector<std::int64_t> entries_;
};

}  // namespace finact

#endif  // FINACT_INT_MATRIX_HPP
