#pragma once

// Quivers, paths and bound path-algebra presentations.
//
// Paths are stored in written (composition) order: the path "p q" applies q
// first and p second, so arrows[0] is the arrow applied last.  A trivial path
// e_v has no arrows and records its vertex.

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "endoscope/linear.hpp"

namespace endoscope {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  /// Throws std::invalid_argument on duplicate names or unknown endpoints.
  Quiver(std::vector<std::string> vertices,
         std::vector<std::tuple<std::string, std::string, std::string>> arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  std::optional<std::size_t> vertex_index(const std::string& name) const;
  std::optional<std::size_t> arrow_index(const std::string& name) const;

  /// Same vertices and arrow names with every arrow reversed.
  Quiver opposite() const;
  bool is_acyclic() const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

struct Path {
  std::size_t vertex = 0;            // source vertex (the vertex itself for e_v)
  std::vector<std::size_t> arrows;   // written order, last-applied first

  static Path trivial(std::size_t v) { return {v, {}}; }
  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }

  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;
};

/// A formal linear combination of paths with like terms merged and zero
/// coefficients dropped.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(const Path& p, const Scalar& coeff = 1);

  const std::map<Path, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Path& p, const Scalar& coeff);

  AlgebraElement operator+(const AlgebraElement& rhs) const;
  AlgebraElement operator-(const AlgebraElement& rhs) const;
  AlgebraElement operator*(const Scalar& s) const;
  bool operator==(const AlgebraElement&) const = default;

 private:
  std::map<Path, Scalar> terms_;
};

class AlgebraPresentation {
 public:
  AlgebraPresentation() = default;
  /// Validates paths and admissibility: every relation term is a path of
  /// length >= 2, and all terms of one relation are parallel.
  AlgebraPresentation(Quiver quiver, std::vector<AlgebraElement> relations);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<AlgebraElement>& relations() const { return relations_; }

  /// Builds a path from arrows in written order; throws if not composable.
  Path path(std::vector<std::size_t> arrows) const;
  Path path(const std::vector<std::string>& arrow_names) const;
  std::size_t source(const Path& p) const;
  std::size_t target(const Path& p) const;
  bool is_valid(const Path& p) const;

  /// Product a*b ("apply b, then a"), with terms containing a monomial
  /// relation as a subpath removed.  Non-monomial relations are not used for
  /// normalization.
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

  AlgebraElement vertex(std::size_t v) const { return AlgebraElement(Path::trivial(v)); }
  AlgebraElement arrow(std::size_t a) const;
  AlgebraElement arrow(const std::string& name) const;
  /// Sum of all vertex idempotents.
  AlgebraElement one() const;

  /// All paths of the (acyclic) quiver, trivial paths first.
  std::vector<Path> all_paths() const;
  /// dim KQ/I for an acyclic quiver; throws std::logic_error otherwise.
  std::size_t dimension() const;

  /// Reversed arrows, reversed relation paths.
  AlgebraPresentation opposite() const;

  bool operator==(const AlgebraPresentation&) const = default;

 private:
  bool contains_zero_relation(const Path& p) const;
  AlgebraElement concatenate(const AlgebraElement& a, const AlgebraElement& b) const;

  Quiver quiver_;
  std::vector<AlgebraElement> relations_;
  std::vector<Path> monomial_zeros_;
};

using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

/// Kronecker quiver: vertices "1", "2"; arrows alpha, beta : 1 -> 2.
PresentationPtr kronecker();
/// Shared instance of the opposite Kronecker quiver (arrows 2 -> 1).
PresentationPtr kronecker_opposite();
PresentationPtr opposite(const PresentationPtr& p);
bool same_presentation(const PresentationPtr& a, const PresentationPtr& b);

}  // namespace endoscope
