#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zzq/field.hpp"

namespace zzq {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over GF(p). Column vectors are the convention
/// throughout: a matrix of shape (m x n) maps GF(p)^n to GF(p)^m.
class Mat {
 public:
  Mat() = default;
  Mat(Field field, std::size_t rows, std::size_t cols);
  /// Entries are reduced mod p.
  Mat(Field field, std::initializer_list<std::initializer_list<long long>> rows);

  static Mat identity(Field field, std::size_t n);
  /// Matrix whose columns are the given vectors (each of length `rows`).
  static Mat from_columns(Field field, std::size_t rows, std::span<const Vec> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const noexcept { return data_; }

  Vec column(std::size_t c) const;
  Vec apply(const Vec& x) const;
  Mat transpose() const;
  Mat scaled(Scalar s) const;
  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  friend bool operator==(const Mat& a, const Mat& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Mat reduced;                      // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(Mat m);
std::size_t rank(const Mat& m);

/// Basis of the right null space, size cols - rank.
std::vector<Vec> kernel_basis(const Mat& m);
/// Same basis packed as the columns of a (cols x nullity) matrix.
Mat kernel_matrix(const Mat& m);

/// Some x with m x = b, or nullopt when inconsistent. Throws ContractViolation on shape mismatch.
std::optional<Vec> solve(const Mat& m, const Vec& b);
/// Some X with a X = b (column by column), or nullopt.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Linearly independent columns spanning the column space of m.
Mat column_basis(const Mat& m);
/// Standard basis vectors extending the column space of `basis` to the ambient space.
Mat complement_columns(const Mat& basis);

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat power(const Mat& m, std::size_t e);
bool is_invertible(const Mat& m);

}  // namespace zzq
