#include "quiverlab/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace quiverlab {

namespace {

constexpr std::uint64_t kMaxPrime = (1ULL << 31);

std::uint64_t residue(const Scalar& x) { return x.get_num().get_ui(); }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  if (p >= kMaxPrime) throw std::invalid_argument("field modulus must be below 2^31");
  return Field(p);
}

Scalar Field::reduce(const Scalar& x) const {
  if (p_ == 0) return x;
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class num = x.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = x.get_den() % pz;
  if (den == 0) throw std::domain_error("denominator divisible by the field characteristic");
  std::uint64_t d = den.get_ui();
  std::uint64_t inv = pow_mod(d, p_ - 2, p_);
  return Scalar(mpz_class(static_cast<unsigned long>(num.get_ui() * inv % p_)));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  return Scalar(mpz_class(static_cast<unsigned long>((residue(a) + residue(b)) % p_)));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  return Scalar(mpz_class(static_cast<unsigned long>((residue(a) + p_ - residue(b)) % p_)));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  return Scalar(mpz_class(static_cast<unsigned long>(residue(a) * residue(b) % p_)));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  return Scalar(mpz_class(static_cast<unsigned long>((p_ - residue(a)) % p_)));
}

Scalar Field::inverse(const Scalar& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero");
  if (p_ == 0) return 1 / a;
  return Scalar(mpz_class(static_cast<unsigned long>(pow_mod(residue(a), p_ - 2, p_))));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) {
    if (sgn(b) == 0) throw std::domain_error("division by zero");
    return a / b;
  }
  return mul(a, inverse(b));
}

void Field::add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const {
  if (p_ == 0) {
    acc += a * b;
    return;
  }
  std::uint64_t v = (residue(acc) + residue(a) * residue(b)) % p_;
  acc = Scalar(mpz_class(static_cast<unsigned long>(v)));
}

void Field::sub_mul(Scalar& acc, const Scalar& a, const Scalar& b) const {
  if (p_ == 0) {
    acc -= a * b;
    return;
  }
  std::uint64_t prod = residue(a) * residue(b) % p_;
  std::uint64_t v = (residue(acc) + p_ - prod) % p_;
  acc = Scalar(mpz_class(static_cast<unsigned long>(v)));
}

std::string Field::to_string() const {
  if (p_ == 0) return "Q";
  return "F " + std::to_string(p_);
}

// ---------------------------------------------------------------------------

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::column(Field field, const std::vector<Scalar>& values) {
  Mat m(field, values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, 0, values[i]);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Mat Mat::operator*(const Mat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
  Mat out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Scalar& b = other(k, j);
        if (sgn(b) == 0) continue;
        field_.add_mul(out(i, j), a, b);
      }
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum: shapes differ");
  Mat out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], other.data_[i]);
  return out;
}

Mat Mat::operator-(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix difference: shapes differ");
  Mat out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], other.data_[i]);
  return out;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat out(field_, rows_, cols_);
  Scalar r = field_.reduce(s);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(data_[i], r);
  return out;
}

Mat Mat::transpose() const {
  Mat out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Mat Mat::hstack(const Mat& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("hstack: row counts differ");
  Mat out(field_, rows_, cols_ + right.cols_);
  out.set_block(0, 0, *this);
  out.set_block(0, cols_, right);
  return out;
}

Mat Mat::vstack(const Mat& below) const {
  if (cols_ != below.cols_) throw std::invalid_argument("vstack: column counts differ");
  Mat out(field_, rows_ + below.rows_, cols_);
  out.set_block(0, 0, *this);
  out.set_block(rows_, 0, below);
  return out;
}

Mat Mat::col(std::size_t c) const { return block(0, c, rows_, 1); }

Mat Mat::select_columns(const std::vector<std::size_t>& cols) const {
  Mat out(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
  return out;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
  Mat out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::out_of_range("block outside matrix");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

std::vector<Scalar> Mat::column_values(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << (*this)(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

Echelon rref(Mat m) {
  const Field f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(m(i, c)) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = f.inverse(m(r, c));
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) f.sub_mul(m(i, j), factor, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) return rref(m.transpose()).pivots.size();
  return rref(m).pivots.size();
}

Mat kernel_basis(const Mat& m) {
  const std::size_t n = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Mat out(m.field(), n, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    std::size_t fc = free[k];
    out(fc, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Scalar& v = e.reduced(r, fc);
      if (sgn(v) != 0) out(e.pivots[r], k) = m.field().neg(v);
    }
  }
  return out;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: row counts differ");
  const std::size_t n = m.cols();
  Echelon e = rref(m.hstack(b));
  Mat x(m.field(), n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
  }
  return x;
}

Mat column_space_basis(const Mat& m) {
  Echelon e = rref(m);
  return m.select_columns(e.pivots);
}

Mat complement_basis(const Mat& sub) {
  const std::size_t n = sub.rows();
  Mat aug = sub.hstack(Mat::identity(sub.field(), n));
  Echelon e = rref(aug);
  std::vector<std::size_t> picked;
  for (auto p : e.pivots)
    if (p >= sub.cols()) picked.push_back(p - sub.cols());
  return Mat::identity(sub.field(), n).select_columns(picked);
}

Mat intersect_column_spaces(const Mat& a, const Mat& b) {
  // x in both iff x = a u = b w; kernel of [a | -b].
  Mat k = kernel_basis(a.hstack(b.scaled(-1)));
  Mat u = k.block(0, 0, a.cols(), k.cols());
  return column_space_basis(a * u);
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Echelon e = rref(m.hstack(Mat::identity(m.field(), n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Mat power(const Mat& m, std::size_t k) {
  Mat result = Mat::identity(m.field(), m.rows());
  Mat base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

}  // namespace quiverlab
