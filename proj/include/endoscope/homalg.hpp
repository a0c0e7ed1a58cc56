#pragma once

// Hom spaces, endomorphism rings and their radicals, isomorphism tests, and
// Fitting-lemma decomposition.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "endoscope/linear.hpp"
#include "endoscope/representation.hpp"

namespace endoscope {

/// Raised when an answer could not be certified within the search budget.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A basis of some subspace of Hom(M, N).
class HomSpace {
 public:
  HomSpace() = default;
  HomSpace(std::vector<std::size_t> source_dims, std::vector<std::size_t> target_dims,
           std::vector<Morphism> basis);

  const std::vector<Morphism>& basis() const& { return basis_; }
  // Lets `for (auto& f : hom_basis(m, n).basis())` outlive the temporary.
  std::vector<Morphism> basis() && { return std::move(basis_); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::size_t>& source_dims() const { return source_dims_; }
  const std::vector<std::size_t>& target_dims() const { return target_dims_; }

  /// Coordinates of f in this basis, or nullopt if f is outside the span.
  std::optional<Vec> coordinates(const Morphism& f) const;
  bool contains(const Morphism& f) const { return coordinates(f).has_value(); }
  Morphism element(const Vec& coords) const;
  /// The span as a subspace of the flattened morphism space.
  Subspace as_subspace() const;

 private:
  std::vector<std::size_t> source_dims_, target_dims_;
  std::vector<Morphism> basis_;
  CoordinateMap coords_;
};

/// Basis of Hom(M, N): the kernel of f_t(a) M_a - N_a f_s(a) = 0 over all arrows.
HomSpace hom_basis(const Representation& m, const Representation& n);
/// dim Hom(M, N) over the chosen field (rank-only, so F_p is allowed).
std::size_t hom_dimension(const Representation& m, const Representation& n,
                          const Field& field = Field::rationals());
/// The commuting system whose kernel is Hom(M, N), in flattened coordinates.
Mat hom_system(const Representation& m, const Representation& n);

/// f after g.  Throws DimensionError when the shapes do not chain.
Morphism compose(const Morphism& f, const Morphism& g);

class EndoRing {
 public:
  EndoRing() = default;
  /// Builds the multiplication table over `endos` (a basis of End(M)) with the
  /// identity moved to the front, and computes the radical.
  EndoRing(const Representation& m, const HomSpace& endos);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Morphism>& basis() const { return basis_; }
  /// Left multiplication by basis element i, acting on coordinate vectors.
  const Mat& left_mult(std::size_t i) const { return left_mult_.at(i); }
  /// b_i b_k in coordinates.
  Vec product(std::size_t i, std::size_t k) const { return left_mult_[i].col(k); }
  Vec multiply(const Vec& x, const Vec& y) const;

  /// Radical as a subspace of coordinate space.
  const Subspace& radical() const { return radical_; }
  std::vector<Morphism> radical_morphisms() const;
  /// Smallest k with J^k = 0.
  std::size_t nilpotency_index() const { return nilpotency_; }

  Morphism element(const Vec& coords) const;
  Vec coordinates(const Morphism& f) const;
  bool contains(const Morphism& f) const { return space_.contains(f); }

 private:
  std::vector<Morphism> basis_;
  HomSpace space_;
  std::vector<Mat> left_mult_;
  Subspace radical_;
  std::size_t nilpotency_ = 0;
};

EndoRing end_ring(const Representation& m);

/// The radical of End(M) computed as the radical of the trace form
/// (x, y) -> tr(L_x L_y).  Throws UnsupportedField outside characteristic 0.
Subspace jacobson_radical(const EndoRing& e, const Field& field = Field::rationals());
/// Raw trace-form radical with no verification; used by EndoRing itself.
Subspace trace_form_radical(const std::vector<Mat>& left_mult);

bool is_isomorphism(const Morphism& f);

struct IsoCertificate {
  enum class Verdict { Isomorphic, CertifiedNo, PresumedNo };
  Verdict verdict = Verdict::PresumedNo;
  std::optional<Morphism> iso;      // M -> N, verified
  std::optional<Morphism> inverse;  // N -> M, verified
  std::string reason;

  bool isomorphic() const { return verdict == Verdict::Isomorphic; }
  /// Certificate for (N, M).
  IsoCertificate inverted() const;
};

std::string to_string(IsoCertificate::Verdict v);

/// Decides M ≅ N.  Certified "no" from dimension data; otherwise searches
/// Hom(M, N) for an invertible element, first along a fixed deterministic
/// coefficient sequence and then with seeded random coefficients.
IsoCertificate are_isomorphic(const Representation& m, const Representation& n,
                              std::uint64_t seed = 0);
IsoCertificate are_isomorphic(const Representation& m, const Representation& n,
                              const HomSpace& forward, const HomSpace& backward,
                              std::size_t end_m_dim, std::size_t end_n_dim, std::uint64_t seed);

enum class Locality { Local, NotLocal, Inconclusive };
std::string to_string(Locality l);

/// Local when End/J is one-dimensional; not local when a nontrivial
/// idempotent is found by Fitting splitting of basis elements and pairwise
/// sums; otherwise inconclusive.
Locality is_local(const Representation& m, const EndoRing& e);
Locality is_local(const Representation& m);

/// A nontrivial idempotent of End(M) if the Fitting search finds one.
std::optional<Morphism> find_idempotent(const Representation& m, const EndoRing& e);

/// Indecomposable summands of M (in new bases).  Throws Inconclusive when a
/// summand has End/J of dimension > 1 and no split was found.
std::vector<Representation> indecompose(const Representation& m);

/// The non-isomorphisms in Hom(M, N) for indecomposable M, N with local
/// endomorphism rings.  Throws Inconclusive when locality is unverified.
HomSpace noniso_subspace(const Representation& m, const Representation& n, std::uint64_t seed = 0);

/// Rational roots of a polynomial given by coefficients, lowest degree first.
std::vector<Scalar> rational_roots(const Vec& coeffs);
/// Characteristic polynomial det(xI - A), lowest degree first.
Vec characteristic_polynomial(const Mat& a);

/// Cached Hom/End/iso/non-iso data for a finite family of indecomposable,
/// local members.  All pairwise data is computed on construction, in parallel.
class FamilyAnalysis {
 public:
  /// Throws Inconclusive if some member's locality cannot be verified and
  /// std::invalid_argument if some member is decomposable.
  explicit FamilyAnalysis(std::vector<Representation> members, std::uint64_t seed = 0);

  std::size_t size() const { return members_.size(); }
  const std::vector<Representation>& members() const { return members_; }
  const Representation& member(std::size_t i) const { return members_.at(i); }
  const HomSpace& hom(std::size_t i, std::size_t j) const { return homs_.at(i * size() + j); }
  const EndoRing& end(std::size_t i) const { return ends_.at(i); }
  const IsoCertificate& iso(std::size_t i, std::size_t j) const { return isos_.at(i * size() + j); }
  const HomSpace& noniso(std::size_t i, std::size_t j) const { return nonisos_.at(i * size() + j); }
  /// Number of iso certificates that are only presumed.
  std::size_t presumed_count() const;

 private:
  std::vector<Representation> members_;
  std::vector<HomSpace> homs_;
  std::vector<EndoRing> ends_;
  std::vector<IsoCertificate> isos_;
  std::vector<HomSpace> nonisos_;
};

/// Runs f(i) for i in [0, n) on a small thread pool.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace endoscope
