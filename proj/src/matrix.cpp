#include "zzq/matrix.hpp"

#include <sstream>
#include <utility>

#include "zzq/error.hpp"

namespace zzq {

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat::Mat(Field field, std::initializer_list<std::initializer_list<long long>> rows) : field_(field) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ContractViolation("ragged matrix literal");
    for (long long x : row) data_.push_back(field_.reduce(x));
  }
}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(Field field, std::size_t rows, std::span<const Vec> columns) {
  Mat m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ContractViolation("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Mat::apply(const Vec& x) const {
  if (x.size() != cols_) throw ContractViolation("matrix-vector shape mismatch");
  Vec y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<std::uint64_t>((*this)(r, c)) * x[c] % field_.p();
    y[r] = static_cast<Scalar>(acc % field_.p());
  }
  return y;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::scaled(Scalar s) const {
  Mat m = *this;
  for (auto& x : m.data_) x = field_.mul(x, s);
  return m;
}

bool Mat::is_zero() const noexcept {
  for (auto x : data_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) throw ContractViolation("matrix product shape mismatch");
  Mat out(field_, rows_, rhs.cols_);
  const std::uint64_t p = field_.p();
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      const Scalar* row = rhs.data_.data() + k * rhs.cols_;
      for (std::size_t c = 0; c < rhs.cols_; ++c) acc[c] = (acc[c] + a * row[c]) % p;
    }
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) = static_cast<Scalar>(acc[c]);
  }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ContractViolation("matrix sum shape mismatch");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ContractViolation("matrix difference shape mismatch");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Echelon row_reduce(Mat m) {
  const Field& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pr, k), m(r, k));
    const Scalar inv = f.inv(m(r, c));
    for (std::size_t k = c; k < cols; ++k) m(r, k) = f.mul(m(r, k), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar factor = m(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (m(r, k) != 0) m(i, k) = f.sub(m(i, k), f.mul(factor, m(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& m) {
  if (m.empty()) return 0;
  return row_reduce(m).pivots.size();
}

std::vector<Vec> kernel_basis(const Mat& m) {
  const std::size_t cols = m.cols();
  const Field& f = m.field();
  std::vector<Vec> basis;
  if (m.rows() == 0) {
    for (std::size_t c = 0; c < cols; ++c) {
      Vec v(cols, 0);
      v[c] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const Echelon e = row_reduce(m);
  std::vector<int> pivot_row(cols, -1);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) pivot_row[e.pivots[i]] = static_cast<int>(i);
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_row[free] >= 0) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat kernel_matrix(const Mat& m) {
  const auto basis = kernel_basis(m);
  return Mat::from_columns(m.field(), m.cols(), basis);
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw ContractViolation("solve: right-hand side has wrong length");
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = row_reduce(std::move(aug));
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw ContractViolation("solve: row count mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  Mat aug(a.field(), a.rows(), n + k);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < k; ++c) aug(r, n + c) = b(r, c);
  }
  const Echelon e = row_reduce(std::move(aug));
  Mat x(a.field(), n, k);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n) return std::nullopt;
    for (std::size_t c = 0; c < k; ++c) x(e.pivots[i], c) = e.reduced(i, n + c);
  }
  return x;
}

Mat column_basis(const Mat& m) {
  if (m.empty()) return Mat(m.field(), m.rows(), 0);
  const Echelon e = row_reduce(m);
  Mat out(m.field(), m.rows(), e.pivots.size());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, i) = m(r, e.pivots[i]);
  return out;
}

Mat complement_columns(const Mat& basis) {
  const std::size_t n = basis.rows();
  Mat with_units = hstack(basis, Mat::identity(basis.field(), n));
  const Echelon e = row_reduce(with_units);
  std::vector<std::size_t> chosen;
  for (auto c : e.pivots)
    if (c >= basis.cols()) chosen.push_back(c - basis.cols());
  Mat out(basis.field(), n, chosen.size());
  for (std::size_t i = 0; i < chosen.size(); ++i) out(chosen[i], i) = 1;
  return out;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw ContractViolation("hstack: row count mismatch");
  Mat out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw ContractViolation("vstack: column count mismatch");
  Mat out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

Mat power(const Mat& m, std::size_t e) {
  if (m.rows() != m.cols()) throw ContractViolation("power of a non-square matrix");
  Mat result = Mat::identity(m.field(), m.rows());
  Mat base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool is_invertible(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

}  // namespace zzq
