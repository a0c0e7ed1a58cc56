#include "endoscope/matrix_subgroups.hpp"

#include <stdexcept>

#include "endoscope/homalg.hpp"

namespace endoscope {

PointedMatrix::PointedMatrix(std::size_t rows, std::size_t cols, std::vector<AlgebraElement> entries,
                             std::size_t pointer)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), pointer_(pointer) {
  if (entries_.size() != rows_ * cols_) throw DimensionError("pointed matrix entry count mismatch");
  if (pointer_ >= cols_) throw std::invalid_argument("pointer outside the column range");
}

PointedMatrix PointedMatrix::with_row(std::vector<AlgebraElement> row) const {
  if (row.size() != cols_) throw DimensionError("appended row has the wrong length");
  std::vector<AlgebraElement> entries = entries_;
  entries.insert(entries.end(), row.begin(), row.end());
  return PointedMatrix(rows_ + 1, cols_, std::move(entries), pointer_);
}

Subspace evaluate(const PointedMatrix& pm, const Representation& m) {
  const std::size_t n = m.total_dim();
  const auto& pres = *m.presentation();
  for (const auto& e : pm.entries())
    for (const auto& [p, c] : e.terms())
      if (!pres.is_valid(p)) throw std::invalid_argument("evaluate: entry is not over this presentation");

  // Unknowns X_0 .. X_{J-1}, each a vector in the total space.
  Mat system(pm.rows() * n, pm.cols() * n);
  for (std::size_t i = 0; i < pm.rows(); ++i)
    for (std::size_t j = 0; j < pm.cols(); ++j)
      if (!pm(i, j).is_zero()) system.set_block(i * n, j * n, act(pm(i, j), m));
  Subspace solutions = kernel_basis(system);
  Mat projected = solutions.basis().block(pm.pointer() * n, 0, n, solutions.dim());
  return Subspace::span(projected);
}

PointedMatrix image_matrix(const AlgebraElement& r, const AlgebraPresentation& presentation) {
  return PointedMatrix(1, 2, {presentation.one(), r * Scalar(-1)}, 0);
}

Subspace image_subgroup(const AlgebraElement& r, const Representation& m) {
  return evaluate(image_matrix(r, *m.presentation()), m);
}

bool check_endo_invariant(const Subspace& sub, const Representation& m) {
  if (sub.ambient_dim() != m.total_dim()) throw DimensionError("subspace is not in the total space");
  const HomSpace endos = hom_basis(m, m);
  for (const auto& f : endos.basis())
    if (!sub.contains(sub.mapped(f.total()))) return false;
  return true;
}

Subspace meet(const std::vector<Subspace>& subs) {
  if (subs.empty()) throw DimensionError("meet of an empty list");
  Subspace acc = subs.front();
  for (std::size_t i = 1; i < subs.size(); ++i) acc = intersect(acc, subs[i]);
  return acc;
}

PointedMatrix random_pointed_matrix(const AlgebraPresentation& presentation, std::size_t rows,
                                    std::size_t cols, std::mt19937_64& rng) {
  const Quiver& q = presentation.quiver();
  std::vector<AlgebraElement> pool;
  pool.emplace_back();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) pool.push_back(presentation.vertex(v));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) pool.push_back(presentation.arrow(a));
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    for (std::size_t b = a + 1; b < q.arrow_count(); ++b)
      if (q.arrow(a).source == q.arrow(b).source && q.arrow(a).target == q.arrow(b).target)
        pool.push_back(presentation.arrow(a) + presentation.arrow(b));
  std::vector<AlgebraElement> entries;
  for (std::size_t k = 0; k < rows * cols; ++k) entries.push_back(pool[rng() % pool.size()]);
  return PointedMatrix(rows, cols, std::move(entries), static_cast<std::size_t>(rng() % cols));
}

}  // namespace endoscope
