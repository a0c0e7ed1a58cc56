#include <doctest.h>

#include <random>

#include "endoscope/matrix_subgroups.hpp"

using namespace endoscope;

namespace {
Representation I(std::size_t n) { return kronecker_preinjective(n); }
}  // namespace

TEST_CASE("evaluate examples") {
  auto k = kronecker();
  Representation i2 = I(2);
  CHECK(evaluate(PointedMatrix(1, 1, {k->one()}, 0), i2).dim() == 0);
  CHECK(evaluate(PointedMatrix(1, 1, {AlgebraElement()}, 0), i2).is_full());
  Subspace ann = evaluate(PointedMatrix(1, 1, {k->arrow("alpha")}, 0), i2);
  CHECK(ann.dim() == 2);
  CHECK(ann == kernel_basis(act(k->arrow("alpha"), i2)));
}

TEST_CASE("image subgroups") {
  auto k = kronecker();
  Representation i2 = I(2);
  CHECK(image_subgroup(k->one(), i2).is_full());
  CHECK(image_subgroup(AlgebraElement(), i2).dim() == 0);
  CHECK(image_subgroup(k->arrow("alpha"), i2).dim() == 1);
  for (const auto& r : {k->arrow("alpha"), k->arrow("beta") * Scalar(2) + k->vertex(0), k->vertex(1)})
    for (const auto& m : {I(3), kronecker_preprojective(3)})
      CHECK(image_subgroup(r, m) == Subspace::image(act(r, m)));
}

TEST_CASE("check_endo_invariant") {
  DirectSum s = direct_sum({I(1), I(2)});
  CHECK(check_endo_invariant(Subspace::full(s.sum.total_dim()), s.sum));
  // The line through I1's top plus I2's first top is moved by the projection onto I1.
  Vec v(s.sum.total_dim());
  v[0] = 1;
  v[1] = 1;
  CHECK_FALSE(check_endo_invariant(Subspace::span({v}, v.size()), s.sum));
}

TEST_CASE("meet") {
  auto k = kronecker();
  Subspace x = Subspace::span({Vec{1, 0, 0}}, 3);
  CHECK(meet({x}) == x);
  CHECK(meet({Subspace::full(3), x}) == x);
  Representation i2 = I(2);
  Subspace a = evaluate(PointedMatrix(1, 1, {k->arrow("alpha")}, 0), i2);
  Subspace b = evaluate(PointedMatrix(1, 1, {k->arrow("beta")}, 0), i2);
  CHECK(meet({a, b}).dim() == intersect(kernel_basis(act(k->arrow("alpha"), i2)),
                                        kernel_basis(act(k->arrow("beta"), i2))).dim());
  CHECK(meet({a, b}).dim() == 1);
  CHECK_THROWS_AS(meet({}), DimensionError);
  CHECK_THROWS_AS(meet({x, Subspace::full(2)}), DimensionError);
}

TEST_CASE("random matrix subgroups are endo-invariant and additive") {
  auto k = kronecker();
  std::mt19937_64 rng(99);
  std::vector<Representation> parts{I(1), I(2), kronecker_preprojective(2)};
  DirectSum s = direct_sum(parts);
  for (int t = 0; t < 40; ++t) {
    PointedMatrix pm = random_pointed_matrix(*k, 1 + rng() % 3, 1 + rng() % 3, rng);
    Subspace whole = evaluate(pm, s.sum);
    CHECK(check_endo_invariant(whole, s.sum));
    Subspace assembled = Subspace::zero(s.sum.total_dim());
    for (std::size_t i = 0; i < parts.size(); ++i)
      assembled = assembled + evaluate(pm, parts[i]).mapped(s.embeddings[i].total());
    CHECK(assembled == whole);
  }
}

TEST_CASE("appending rows gives descending chains") {
  auto k = kronecker();
  std::mt19937_64 rng(5);
  Representation m = direct_sum({I(3), kronecker_preprojective(3)}).sum;
  for (int t = 0; t < 10; ++t) {
    PointedMatrix pm = random_pointed_matrix(*k, 1, 2, rng);
    Subspace prev = evaluate(pm, m);
    for (int step = 0; step < 3; ++step) {
      PointedMatrix extra = random_pointed_matrix(*k, 1, 2, rng);
      pm = pm.with_row({extra(0, 0), extra(0, 1)});
      Subspace next = evaluate(pm, m);
      CHECK(prev.contains(next));
      CHECK(meet({prev, next}) == next);
      prev = next;
    }
  }
}

TEST_CASE("pointed matrix validation") {
  auto k = kronecker();
  CHECK_THROWS_AS(PointedMatrix(1, 2, {k->one()}, 0), DimensionError);
  CHECK_THROWS_AS(PointedMatrix(1, 1, {k->one()}, 1), std::invalid_argument);
  PointedMatrix pm(1, 1, {k->one()}, 0);
  CHECK_THROWS_AS(pm.with_row({k->one(), k->one()}), DimensionError);
}
