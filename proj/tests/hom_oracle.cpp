#include "hom_oracle.hpp"

namespace oracle {

Kronecker preinjective(std::size_t n) {
  Kronecker k;
  k.d1 = n;
  k.d2 = n - 1;
  k.alpha.assign(k.d2, std::vector<Rational>(k.d1, 0));
  k.beta = k.alpha;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    k.beta[j][j] = 1;
    k.alpha[j][j + 1] = 1;
  }
  return k;
}

std::size_t nullity(Matrix rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return cols - rank;
}

std::size_t hom_dimension(const Kronecker& m, const Kronecker& n) {
  // Unknowns: f1 (n.d1 x m.d1) then f2 (n.d2 x m.d2), row-major.
  const std::size_t f1_size = n.d1 * m.d1;
  const std::size_t cols = f1_size + n.d2 * m.d2;
  auto f1 = [&](std::size_t r, std::size_t c) { return r * m.d1 + c; };
  auto f2 = [&](std::size_t r, std::size_t c) { return f1_size + r * m.d2 + c; };
  Matrix eqs;
  for (const auto* pair : {&m.alpha, &m.beta}) {
    const Matrix& ma = *pair;
    const Matrix& na = pair == &m.alpha ? n.alpha : n.beta;
    // Entry (r, c) of f2 M_a - N_a f1, for r < n.d2, c < m.d1.
    for (std::size_t r = 0; r < n.d2; ++r)
      for (std::size_t c = 0; c < m.d1; ++c) {
        std::vector<Rational> row(cols, 0);
        for (std::size_t k = 0; k < m.d2; ++k) row[f2(r, k)] += ma[k][c];
        for (std::size_t k = 0; k < n.d1; ++k) row[f1(k, c)] -= na[r][k];
        eqs.push_back(std::move(row));
      }
  }
  return nullity(std::move(eqs), cols);
}

}  // namespace oracle
