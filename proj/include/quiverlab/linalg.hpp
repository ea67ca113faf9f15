#pragma once

// Exact dense linear algebra over the rationals and prime fields.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace quiverlab {

using Scalar = mpq_class;

/// Ground field: the rationals (characteristic 0) or F_p for a prime p.
///
/// Scalars over F_p are stored as integers in [0, p). All arithmetic on
/// scalars that may belong to a prime field goes through the field so the
/// representative stays canonical.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar reduce(const Scalar& x) const;
  Scalar from_int(long v) const { return reduce(Scalar(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inverse(const Scalar& a) const;

  // acc += a * b
  void add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const;
  // acc -= a * b
  void sub_mul(Scalar& acc, const Scalar& a, const Scalar& b) const;

  /// "Q" or "F <p>", the spelling used by the algebra file format.
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Dense row-major matrix. Zero-row and zero-column shapes are legal.
class Mat {
 public:
  Mat() = default;
  Mat(Field field, std::size_t rows, std::size_t cols);

  static Mat identity(Field field, std::size_t n);
  static Mat zero(Field field, std::size_t rows, std::size_t cols) {
    return Mat(field, rows, cols);
  }
  /// Single column holding `values`.
  static Mat column(Field field, const std::vector<Scalar>& values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  /// Sets an entry, reducing into the field.
  void set(std::size_t r, std::size_t c, const Scalar& v) {
    data_[r * cols_ + c] = field_.reduce(v);
  }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Mat operator*(const Mat& other) const;
  Mat operator+(const Mat& other) const;
  Mat operator-(const Mat& other) const;
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;

  Mat hstack(const Mat& right) const;
  Mat vstack(const Mat& below) const;
  Mat col(std::size_t c) const;
  Mat select_columns(const std::vector<std::size_t>& cols) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& m);

  std::vector<Scalar> column_values(std::size_t c) const;
  /// Entries in row-major order.
  const std::vector<Scalar>& values() const { return data_; }

  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Mat m);
std::size_t rank(const Mat& m);

/// Columns form a basis of {v : m v = 0}.
Mat kernel_basis(const Mat& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
/// Throws std::invalid_argument when the row counts differ.
std::optional<Mat> solve(const Mat& m, const Mat& b);

/// Linearly independent subset of the columns spanning the column space.
Mat column_space_basis(const Mat& m);

/// Standard unit vectors completing the columns of `sub` (assumed
/// independent) to a basis of the ambient space.
Mat complement_basis(const Mat& sub);

/// Basis of the intersection of two column spaces.
Mat intersect_column_spaces(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

Mat power(const Mat& m, std::size_t k);

}  // namespace quiverlab
