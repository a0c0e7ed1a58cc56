#pragma once

// Finite matrix subgroups [A, alpha]M: the alpha-th projection of the
// solution set in M^J of the homogeneous system sum_j a_ij X_j = 0.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "endoscope/quiver.hpp"
#include "endoscope/representation.hpp"

namespace endoscope {

class PointedMatrix {
 public:
  PointedMatrix() = default;
  /// `entries` is row-major with rows * cols elements; pointer < cols.
  PointedMatrix(std::size_t rows, std::size_t cols, std::vector<AlgebraElement> entries, std::size_t pointer);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t pointer() const { return pointer_; }
  const AlgebraElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<AlgebraElement>& entries() const { return entries_; }

  /// Same matrix with one more row appended.
  PointedMatrix with_row(std::vector<AlgebraElement> row) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<AlgebraElement> entries_;
  std::size_t pointer_ = 0;
};

/// [A, alpha]M as a subspace of the total space of M.
Subspace evaluate(const PointedMatrix& pm, const Representation& m);

/// rM, encoded as the pointed matrix [[1, -r]] pointed at column 0.
PointedMatrix image_matrix(const AlgebraElement& r, const AlgebraPresentation& presentation);
Subspace image_subgroup(const AlgebraElement& r, const Representation& m);

/// f(sub) ⊆ sub for every basis endomorphism f of M.
bool check_endo_invariant(const Subspace& sub, const Representation& m);

/// Iterated intersection; throws DimensionError on ambient mismatch or an empty list.
Subspace meet(const std::vector<Subspace>& subs);

/// Entries drawn uniformly from {0, e_v, arrows, sums of two arrows}.
PointedMatrix random_pointed_matrix(const AlgebraPresentation& presentation, std::size_t rows,
                                    std::size_t cols, std::mt19937_64& rng);

}  // namespace endoscope
