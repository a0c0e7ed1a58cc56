#pragma once

// Finite-dimensional representations of bound quivers.
//
// The total space of a representation is the concatenation of its vertex
// spaces in declared vertex order; every total-space matrix in the toolkit
// uses that layout.

#include <cstddef>
#include <string>
#include <vector>

#include "endoscope/linear.hpp"
#include "endoscope/quiver.hpp"

namespace endoscope {

class Representation {
 public:
  Representation() = default;
  /// Checks matrix shapes (target dim x source dim per arrow) and that every
  /// relation acts as zero.
  Representation(PresentationPtr presentation, std::vector<std::size_t> dims,
                 std::vector<Mat> arrow_matrices, std::string label = {});
  static Representation zero(PresentationPtr presentation);

  const PresentationPtr& presentation() const { return presentation_; }
  const Quiver& quiver() const { return presentation_->quiver(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  std::size_t total_dim() const { return total_; }
  /// Offset of vertex v's block inside the total space.
  std::size_t offset(std::size_t v) const { return offsets_.at(v); }
  const Mat& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Mat>& arrow_matrices() const { return arrows_; }

  /// Composition length.  Simple modules of a bound quiver algebra are
  /// one-dimensional, so this is the total dimension.
  std::size_t length() const { return total_; }

  const std::string& label() const { return label_; }
  Representation with_label(std::string label) const;

  /// Equal presentations, dims and matrices.  Labels are ignored.
  bool operator==(const Representation& rhs) const;

 private:
  PresentationPtr presentation_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  std::vector<Mat> arrows_;
  std::string label_;
};

/// Linear map on the total space induced by an algebra element.
Mat act(const AlgebraElement& a, const Representation& rep);

/// A vertex-indexed tuple of matrices; block v maps source vertex space v to
/// target vertex space v.
struct Morphism {
  std::vector<Mat> blocks;

  static Morphism identity(const Representation& m);
  static Morphism zero(const Representation& source, const Representation& target);
  /// Inverse of flatten(): blocks read row-major, vertex by vertex.
  static Morphism unflatten(const Vec& flat, const std::vector<std::size_t>& source_dims,
                            const std::vector<std::size_t>& target_dims);

  Vec flatten() const;
  std::size_t flat_size() const;
  /// Block-diagonal total-space matrix.
  Mat total() const;
  bool is_zero() const;
  /// Apply to a total-space vector.
  Vec apply(const Vec& x) const;

  /// Composite "this after rhs".
  Morphism operator*(const Morphism& rhs) const;
  Morphism operator+(const Morphism& rhs) const;
  Morphism operator-(const Morphism& rhs) const;
  Morphism operator*(const Scalar& s) const;
  bool operator==(const Morphism&) const = default;
};

/// f_{t(a)} M_a == N_a f_{s(a)} for every arrow a.
bool is_homomorphism(const Morphism& f, const Representation& m, const Representation& n);

/// One subspace per vertex.
struct SubspaceFamily {
  std::vector<Subspace> parts;

  static SubspaceFamily zero(const Representation& m);
  static SubspaceFamily full(const Representation& m);
  /// Splits a total-space subspace that is a direct sum of vertex pieces.
  /// Throws std::invalid_argument when it is not graded.
  static SubspaceFamily from_total(const Subspace& total, const Representation& m);

  std::vector<std::size_t> dims() const;
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  /// The same subspace inside the total space.
  Subspace total(const Representation& m) const;
  bool contains(const SubspaceFamily& other) const;
  SubspaceFamily meet(const SubspaceFamily& other) const;
  bool operator==(const SubspaceFamily&) const = default;
};

struct DirectSum {
  Representation sum;
  std::vector<Morphism> embeddings;   // in_i : part_i -> sum
  std::vector<Morphism> projections;  // pr_i : sum -> part_i
};

/// Blockwise direct sum.  Within each vertex block the parts appear in list order.
DirectSum direct_sum(const PresentationPtr& presentation, const std::vector<Representation>& parts);
DirectSum direct_sum(const std::vector<Representation>& parts);

/// Vector-space dual over the opposite presentation: transposed arrow matrices.
Representation dual(const Representation& rep);
Morphism dual(const Morphism& f);

/// Largest semisimple subrepresentation: at each vertex, the vectors killed
/// by every arrow leaving that vertex.
SubspaceFamily socle(const Representation& rep);

/// The subrepresentation carried by an arrow-closed subspace family, in the
/// family's canonical bases.  Throws std::invalid_argument if not closed.
Representation sub_from_family(const Representation& rep, const SubspaceFamily& family);
/// Inclusion of sub_from_family(rep, family) into rep.
Morphism inclusion(const Representation& rep, const SubspaceFamily& family);

/// Kronecker preinjective string module with n tops: dims (n, n-1) on the
/// source and target vertex of the two parallel arrows.  Valley j is joined
/// to top j by beta and to top j+1 by alpha.
Representation kronecker_preinjective(std::size_t n);
/// The same string module for right modules, i.e. over the opposite quiver.
Representation kronecker_preinjective_right(std::size_t n);
/// Dual of the right preinjective: dims (n-1, n).
Representation kronecker_preprojective(std::size_t n);

class RegularParameter {
 public:
  enum class Kind { Finite, Infinity };

  static RegularParameter finite(const Scalar& lambda) { return {Kind::Finite, lambda}; }
  static RegularParameter infinity() { return {Kind::Infinity, 0}; }
  /// "inf" / "infinity" or a rational literal.
  static RegularParameter parse(std::string_view text);

  Kind kind() const { return kind_; }
  const Scalar& value() const { return value_; }
  bool is_infinite() const { return kind_ == Kind::Infinity; }
  std::string to_string() const;
  bool operator==(const RegularParameter&) const = default;

 private:
  RegularParameter(Kind k, Scalar v) : kind_(k), value_(std::move(v)) {}
  Kind kind_;
  Scalar value_;
};

/// Dims (n, n): alpha = I, beta = Jordan block J_n(lambda); for lambda = inf
/// the roles swap (alpha = J_n(0), beta = I).
Representation kronecker_regular(std::size_t n, const RegularParameter& lambda);
/// Simple module at vertex v.
Representation simple(const PresentationPtr& presentation, std::size_t v);

/// Base change: the representation with arrow matrices P_t M_a P_s^{-1}.
Representation rebase(const Representation& rep, const std::vector<Mat>& change);

}  // namespace endoscope
