#include <doctest.h>

#include "endoscope/homalg.hpp"
#include "endoscope/representation.hpp"

using namespace endoscope;

namespace {
RegularParameter lam(long v) { return RegularParameter::finite(Scalar(v)); }
}  // namespace

TEST_CASE("direct sum examples") {
  DirectSum empty = direct_sum(kronecker(), {});
  CHECK(empty.sum.total_dim() == 0);

  DirectSum s = direct_sum({kronecker_preinjective(1), kronecker_preinjective(2)});
  CHECK(s.sum.dims() == std::vector<std::size_t>{3, 1});

  Representation m = kronecker_preinjective(3);
  DirectSum with_zero = direct_sum({m, Representation::zero(kronecker())});
  CHECK(are_isomorphic(with_zero.sum, m).isomorphic());
}

TEST_CASE("direct sum embeddings and projections") {
  std::vector<Representation> parts{kronecker_preinjective(2), kronecker_preprojective(2),
                                    kronecker_regular(2, lam(3))};
  DirectSum s = direct_sum(parts);
  Mat sum_of_idempotents = Mat::zero(s.sum.total_dim(), s.sum.total_dim());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    CHECK(is_homomorphism(s.embeddings[i], parts[i], s.sum));
    CHECK(is_homomorphism(s.projections[i], s.sum, parts[i]));
    for (std::size_t j = 0; j < parts.size(); ++j) {
      Morphism pi = s.projections[i] * s.embeddings[j];
      if (i == j)
        CHECK(pi == Morphism::identity(parts[i]));
      else
        CHECK(pi.is_zero());
    }
    sum_of_idempotents += (s.embeddings[i] * s.projections[i]).total();
  }
  CHECK(sum_of_idempotents == Mat::identity(s.sum.total_dim()));
}

TEST_CASE("preinjective constructor") {
  Representation s1 = kronecker_preinjective(1);
  CHECK(s1.dims() == std::vector<std::size_t>{1, 0});
  CHECK(kronecker_preinjective(2).dims() == std::vector<std::size_t>{2, 1});
  CHECK(kronecker_preinjective(2).length() == 3);
  CHECK(kronecker_preinjective(4).length() == 7);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(kronecker_preinjective(n).length() == 2 * n - 1);
  CHECK_THROWS(kronecker_preinjective(0));
  // Valley j joins top j by beta and top j+1 by alpha.
  Representation i3 = kronecker_preinjective(3);
  CHECK(i3.arrow(0) == Mat{{0, 1, 0}, {0, 0, 1}});
  CHECK(i3.arrow(1) == Mat{{1, 0, 0}, {0, 1, 0}});
}

TEST_CASE("preprojective constructor") {
  CHECK(kronecker_preprojective(1).dims() == std::vector<std::size_t>{0, 1});
  Representation p2 = kronecker_preprojective(2);
  CHECK(p2.dims() == std::vector<std::size_t>{1, 2});
  // P2 is the indecomposable projective at vertex 1: generated by one vector.
  CHECK(p2.arrow(0).col(0) != p2.arrow(1).col(0));
  for (std::size_t n = 1; n <= 8; ++n) CHECK(kronecker_preprojective(n).length() == 2 * n - 1);
  CHECK_THROWS(kronecker_preprojective(0));
}

TEST_CASE("regular constructor") {
  Representation r0 = kronecker_regular(1, lam(0));
  CHECK(r0.arrow(0) == Mat{{1}});
  CHECK(r0.arrow(1) == Mat{{0}});
  Representation rinf = kronecker_regular(1, RegularParameter::infinity());
  CHECK(rinf.arrow(0) == Mat{{0}});
  CHECK(rinf.arrow(1) == Mat{{1}});
  CHECK(hom_basis(kronecker_regular(1, lam(2)), kronecker_regular(1, lam(5))).dim() == 0);
  CHECK(RegularParameter::parse("inf").is_infinite());
  CHECK(RegularParameter::parse("-1/3").value() == Scalar(-1, 3));
  CHECK(kronecker_regular(2, lam(0)).label() == "R2(0)");
}

TEST_CASE("duality") {
  Representation s1 = kronecker_preinjective(1);
  Representation d = dual(s1);
  CHECK(d.presentation() == kronecker_opposite());
  CHECK(d.dims() == std::vector<std::size_t>{1, 0});
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(dual(kronecker_preinjective_right(n)).dims() == std::vector<std::size_t>{n - 1, n});
    Representation m = kronecker_preprojective(n);
    CHECK(dual(dual(m)) == m);
    CHECK(dual(dual(m)).presentation() == kronecker());
  }
  // Contravariance on Hom.
  std::vector<Representation> corpus{kronecker_preinjective(2), kronecker_preinjective(3), kronecker_preprojective(2),
                                     kronecker_preprojective(3), kronecker_regular(2, lam(1))};
  for (const auto& m : corpus)
    for (const auto& n : corpus) {
      CHECK(hom_basis(m, n).dim() == hom_basis(dual(n), dual(m)).dim());
      for (const auto& f : hom_basis(m, n).basis()) CHECK(is_homomorphism(dual(f), dual(n), dual(m)));
    }
}

TEST_CASE("socle examples") {
  Representation s1 = kronecker_preinjective(1);
  CHECK(socle(s1) == SubspaceFamily::full(s1));
  CHECK(socle(kronecker_preinjective(2)).dims() == std::vector<std::size_t>{0, 1});
  CHECK(socle(kronecker_preprojective(2)).dims() == std::vector<std::size_t>{0, 2});
  for (const auto& m : {kronecker_preinjective(4), kronecker_preprojective(3), kronecker_regular(3, lam(2))}) {
    SubspaceFamily soc = socle(m);
    Representation sub = sub_from_family(m, soc);
    for (const auto& a : sub.arrow_matrices()) CHECK(a.is_zero());
  }
}

TEST_CASE("sub_from_family") {
  Representation i2 = kronecker_preinjective(2);
  CHECK(sub_from_family(i2, SubspaceFamily::full(i2)) == i2);
  CHECK(sub_from_family(i2, SubspaceFamily::zero(i2)).total_dim() == 0);
  Representation soc = sub_from_family(i2, socle(i2));
  CHECK(soc == simple(kronecker(), 1));
  CHECK(is_homomorphism(inclusion(i2, socle(i2)), soc, i2));
  // A vertex-1 line is not closed under the arrows.
  SubspaceFamily bad{{Subspace::span({Vec{1, 0}}, 2), Subspace::zero(1)}};
  CHECK_THROWS_AS(sub_from_family(i2, bad), std::invalid_argument);
}

TEST_CASE("representation validation") {
  CHECK_THROWS_AS(Representation(kronecker(), {2, 1}, {Mat(1, 1), Mat(1, 2)}), DimensionError);
  CHECK_THROWS(Representation(kronecker(), {2}, {Mat(1, 2), Mat(1, 2)}));
}

TEST_CASE("rebase yields an isomorphic copy") {
  Representation i2 = kronecker_preinjective(2);
  Representation moved = rebase(i2, {Mat{{1, 1}, {0, 1}}, Mat{{2}}});
  CHECK_FALSE(moved == i2);
  IsoCertificate c = are_isomorphic(i2, moved);
  CHECK(c.isomorphic());
}
