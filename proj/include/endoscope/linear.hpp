#pragma once

// Exact dense linear algebra over the rationals.
//
// Everything in the toolkit bottoms out here: Hom spaces are kernels of
// commuting systems, endosocles are common kernels, matrix subgroups are
// projections of solution sets.  Matrices are dense, row-major, and hold GMP
// rationals which are always kept in canonical (reduced) form.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace endoscope {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

/// Parses "p/q", "p" or "-p/q"; the result is canonicalized.
Scalar parse_scalar(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& s);

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ground field selector.  Characteristic 0 means the rationals.
struct Field {
  std::uint64_t characteristic = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint64_t p);
  bool is_rational() const { return characteristic == 0; }
  std::string name() const;
  /// Accepts "q" or "fp:<p>".
  static Field parse(std::string_view text);
  bool operator==(const Field&) const = default;
};

/// Raised by operations that are only valid in characteristic zero.
class UnsupportedField : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  /// One column per vector; all vectors must share a length.
  static Mat from_columns(const std::vector<Vec>& columns, std::size_t rows);
  static Mat column(const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  const std::vector<Scalar>& data() const { return data_; }

  Mat transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Scalar trace() const;

  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Mat& block);
  Mat block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  Mat operator*(const Mat& rhs) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat operator*(const Scalar& s) const;
  Mat& operator+=(const Mat& rhs);

  bool operator==(const Mat& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat vstack(const std::vector<Mat>& parts, std::size_t cols);

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form.  Pivot columns are strictly increasing.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);

bool is_zero(const Vec& v);
Vec operator-(const Vec& a, const Vec& b);

/// A linear subspace of Q^n, stored by a canonical basis: the columns of the
/// transposed RREF of any spanning set.  Two subspaces are equal iff their
/// stored bases are equal entrywise.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  /// Span of the columns of `columns` (they need not be independent).
  static Subspace span(const Mat& columns);
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim);
  /// Column space of `m`.
  static Subspace image(const Mat& m) { return span(m); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  /// ambient_dim x dim matrix with independent columns in canonical form.
  const Mat& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;

  /// Image under a linear map with `map.cols() == ambient_dim()`.
  Subspace mapped(const Mat& map) const;
  /// {x : map * x in this}, for a map into this subspace's ambient space.
  Subspace preimage(const Mat& map) const;
  /// A matrix whose kernel is exactly this subspace.
  Mat annihilator() const;

  bool operator==(const Subspace& rhs) const = default;

 private:
  std::size_t ambient_ = 0;
  Mat basis_;
};

/// {x : m x = 0}; dimension is cols(m) - rank(m).
Subspace kernel_basis(const Mat& m);
/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);
/// a ∩ b; throws DimensionError on ambient mismatch.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Incrementally maintained span with a fully reduced echelon basis.  Used for
/// building spans of many generated vectors without re-running elimination.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  /// Returns true when `v` enlarged the span.
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  Subspace subspace() const;

 private:
  void reduce(Vec& v) const;

  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coordinates with respect to a fixed independent family of vectors.
class CoordinateMap {
 public:
  CoordinateMap() = default;
  /// `basis` columns must be linearly independent.
  explicit CoordinateMap(const Mat& basis);

  std::size_t size() const { return basis_.cols(); }
  /// Coordinates of `v`, or nullopt when v lies outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;
  Vec combine(const Vec& coords) const { return basis_ * coords; }

 private:
  Mat basis_;
  std::vector<std::size_t> pivot_rows_;
  Mat pivot_inverse_;
};

/// Rank and kernel over F_p for matrices with rational entries whose
/// denominators are prime to p.
namespace modp {
std::size_t rank(const Mat& m, std::uint64_t p);
std::size_t nullity(const Mat& m, std::uint64_t p);
/// Basis of {x : m x = 0} over F_p, entries in [0, p).
std::vector<std::vector<std::uint64_t>> kernel(const Mat& m, std::uint64_t p);
/// Reduces a rational modulo p; throws std::domain_error if p divides the denominator.
std::uint64_t reduce(const Scalar& s, std::uint64_t p);
}  // namespace modp

/// Rank over the chosen field.
std::size_t rank(const Mat& m, const Field& field);

}  // namespace endoscope
