#include "endoscope/linear.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace endoscope {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '+'; }),
          s.end());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Scalar q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + std::string(text));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

// ---------------------------------------------------------------- Field

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n with these witnesses.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 62) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^62");
  return Field{p};
}

std::string Field::name() const {
  return is_rational() ? "q" : "fp:" + std::to_string(characteristic);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fp:")) {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw std::invalid_argument("bad field spec: " + std::string(text));
    return prime(p);
  }
  throw std::invalid_argument("bad field spec: " + std::string(text));
}

// ---------------------------------------------------------------- Mat

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  Mat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Mat Mat::column(const Vec& v) { return from_columns({v}, v.size()); }

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Scalar Mat::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& block) {
  if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
    throw DimensionError("block out of range");
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) (*this)(r0 + r, c0 + c) = block(r, c);
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionError("block out of range");
  Mat b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
  Mat out(rows_, rhs.cols_);
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(k, j);
        if (sgn(b) == 0) continue;
        t = a * b;
        out(i, j) += t;
      }
    }
  }
  return out;
}

Vec Mat::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vec out(rows_);
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0 || sgn(v[k]) == 0) continue;
      t = a * v[k];
      out[i] += t;
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  Mat out = *this;
  out += rhs;
  return out;
}

Mat& Mat::operator+=(const Mat& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Mat Mat::operator-(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference shape mismatch");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Mat Mat::operator*(const Scalar& s) const {
  Mat out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool Mat::operator==(const Mat& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
  Mat out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
  Mat out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Mat vstack(const std::vector<Mat>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw DimensionError("vstack column mismatch");
    rows += p.rows();
  }
  Mat out(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

// ---------------------------------------------------------------- elimination

RrefResult rref(const Mat& m) {
  Mat a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nonzero;
  Scalar factor, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) swap(a(p, j), a(r, j));

    if (a(r, c) != 1) {
      factor = 1 / a(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a(r, j)) != 0) a(r, j) *= factor;
    }
    nonzero.clear();
    for (std::size_t j = c + 1; j < cols; ++j)
      if (sgn(a(r, j)) != 0) nonzero.push_back(j);

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      factor = a(i, c);
      a(i, c) = 0;
      for (std::size_t j : nonzero) {
        t = factor * a(r, j);
        a(i, j) -= t;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  auto [red, pivots] = rref(hstack(m, Mat::identity(n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) return std::nullopt;
  return red.block(0, n, n, n);
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Mat::identity(ambient_dim);
  return s;
}

Subspace Subspace::span(const Mat& columns) {
  Subspace s(columns.rows());
  if (columns.cols() == 0) return s;
  auto [red, pivots] = rref(columns.transpose());
  s.basis_ = red.block(0, 0, pivots.size(), red.cols()).transpose();
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
  if (vectors.empty()) return Subspace(ambient_dim);
  return span(Mat::from_columns(vectors, ambient_dim));
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t c = 0; c < dim(); ++c) out.push_back(basis_.col(c));
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("vector not in ambient space");
  // Canonical basis columns have a unit at their pivot row and zeros at the
  // other pivot rows, so v is in the span iff v equals the combination read
  // off at the pivots.
  Vec residual = v;
  Scalar t;
  for (std::size_t c = 0; c < dim(); ++c) {
    std::size_t pivot = 0;
    while (sgn(basis_(pivot, c)) == 0) ++pivot;
    const Scalar coeff = v[pivot];
    if (sgn(coeff) == 0) continue;
    for (std::size_t r = 0; r < ambient_; ++r) {
      if (sgn(basis_(r, c)) == 0) continue;
      t = coeff * basis_(r, c);
      residual[r] -= t;
    }
  }
  return endoscope::is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspace ambient mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t c = 0; c < other.dim(); ++c)
    if (!contains(other.basis_.col(c))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspace ambient mismatch");
  return span(hstack(basis_, other.basis_));
}

Subspace Subspace::mapped(const Mat& map) const {
  if (map.cols() != ambient_) throw DimensionError("map domain mismatch");
  return span(map * basis_);
}

Subspace Subspace::preimage(const Mat& map) const {
  if (map.rows() != ambient_) throw DimensionError("map codomain mismatch");
  return kernel_basis(annihilator() * map);
}

Mat Subspace::annihilator() const {
  Subspace left = kernel_basis(basis_.transpose());
  return left.basis().transpose();
}

Subspace kernel_basis(const Mat& m) {
  const std::size_t cols = m.cols();
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> vectors;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (sgn(red(k, f)) != 0) v[pivots[k]] = -red(k, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(vectors, cols);
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  auto [red, pivots] = rref(hstack(m, Mat::column(b)));
  const std::size_t n = m.cols();
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vec x(n);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = red(k, n);
  return x;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("intersect: ambient mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_dim());
  if (b.is_full()) return a;
  if (a.is_full()) return b;
  Subspace coeffs = kernel_basis(b.annihilator() * a.basis());
  return Subspace::span(a.basis() * coeffs.basis());
}

// ---------------------------------------------------------------- SpanBuilder

void SpanBuilder::reduce(Vec& v) const {
  Scalar t;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    const Scalar coeff = v[p];
    const Vec& row = rows_[k];
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(row[j]) == 0) continue;
      t = coeff * row[j];
      v[j] -= t;
    }
  }
}

bool SpanBuilder::insert(Vec v) {
  if (v.size() != ambient_) throw DimensionError("SpanBuilder: vector length mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && sgn(v[p]) == 0) ++p;
  if (p == ambient_) return false;
  const Scalar inv = 1 / v[p];
  for (auto& x : v)
    if (sgn(x) != 0) x *= inv;
  Scalar t;
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    const Scalar coeff = row[p];
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(v[j]) == 0) continue;
      t = coeff * v[j];
      row[j] -= t;
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(Vec v) const {
  if (v.size() != ambient_) throw DimensionError("SpanBuilder: vector length mismatch");
  reduce(v);
  return is_zero(v);
}

Subspace SpanBuilder::subspace() const { return Subspace::span(rows_, ambient_); }

// ---------------------------------------------------------------- CoordinateMap

CoordinateMap::CoordinateMap(const Mat& basis) : basis_(basis) {
  auto [red, pivots] = rref(basis.transpose());
  if (pivots.size() != basis.cols()) throw DimensionError("CoordinateMap: dependent basis");
  pivot_rows_ = pivots;
  Mat square(pivots.size(), pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < pivots.size(); ++j) square(i, j) = basis(pivots[i], j);
  pivot_inverse_ = *inverse(square);
}

std::optional<Vec> CoordinateMap::coordinates(const Vec& v) const {
  if (v.size() != basis_.rows()) throw DimensionError("CoordinateMap: vector length mismatch");
  Vec picked(pivot_rows_.size());
  for (std::size_t i = 0; i < pivot_rows_.size(); ++i) picked[i] = v[pivot_rows_[i]];
  Vec coords = pivot_inverse_ * picked;
  if (basis_ * coords != v) return std::nullopt;
  return coords;
}

// ---------------------------------------------------------------- F_p

namespace modp {

std::uint64_t reduce(const Scalar& s, std::uint64_t p) {
  mpz_class num = s.get_num(), den = s.get_den();
  std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
  std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (d == 0) throw std::domain_error("denominator divisible by field characteristic");
  return mulmod(n, powmod(d, p - 2, p), p);
}

namespace {

struct Reduced {
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> pivots;
};

Reduced eliminate(const Mat& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = reduce(m(i, j), p);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t inv = powmod(a[r][c], p - 2, p);
    for (auto& x : a[r]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t j = c; j < m.cols(); ++j)
        a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace

std::size_t rank(const Mat& m, std::uint64_t p) { return eliminate(m, p).pivots.size(); }

std::size_t nullity(const Mat& m, std::uint64_t p) { return m.cols() - rank(m, p); }

std::vector<std::vector<std::uint64_t>> kernel(const Mat& m, std::uint64_t p) {
  auto [a, pivots] = eliminate(m, p);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = (p - a[k][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace modp

std::size_t rank(const Mat& m, const Field& field) {
  return field.is_rational() ? rank(m) : modp::rank(m, field.characteristic);
}

}  // namespace endoscope
