#include <doctest.h>

#include "endoscope/homalg.hpp"

using namespace endoscope;

namespace {
RegularParameter lam(long v) { return RegularParameter::finite(Scalar(v)); }
Representation I(std::size_t n) { return kronecker_preinjective(n); }
}  // namespace

TEST_CASE("hom_basis examples") {
  Representation s1 = simple(kronecker(), 0), s2 = simple(kronecker(), 1);
  CHECK(hom_basis(s1, s1).dim() == 1);
  CHECK(hom_basis(s2, s1).dim() == 0);
  CHECK(hom_basis(I(2), I(1)).dim() == 2);
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = 1; j <= 6; ++j) CHECK(hom_basis(I(i), I(j)).dim() == (i >= j ? i - j + 1 : 0));
}

TEST_CASE("hom basis elements commute exactly") {
  std::vector<Representation> corpus{I(3), kronecker_preprojective(3), kronecker_regular(2, lam(1)),
                                     kronecker_regular(3, RegularParameter::infinity())};
  for (const auto& m : corpus)
    for (const auto& n : corpus)
      for (const auto& f : hom_basis(m, n).basis()) CHECK(is_homomorphism(f, m, n));
}

TEST_CASE("hom dimension over a prime field") {
  CHECK(hom_dimension(I(4), I(2), Field::prime(5)) == 3);
  CHECK(hom_dimension(I(4), I(2), Field::rationals()) == 3);
}

TEST_CASE("End of a sum adds up") {
  std::vector<std::pair<Representation, Representation>> pairs{
      {I(1), I(2)}, {I(2), kronecker_preprojective(2)}, {kronecker_regular(2, lam(0)), kronecker_regular(1, lam(0))}};
  for (const auto& [m, n] : pairs) {
    DirectSum s = direct_sum({m, n});
    CHECK(hom_basis(s.sum, s.sum).dim() ==
          hom_basis(m, m).dim() + hom_basis(n, n).dim() + hom_basis(m, n).dim() + hom_basis(n, m).dim());
  }
}

TEST_CASE("compose") {
  Representation m = I(3);
  HomSpace h32 = hom_basis(I(3), I(2)), h21 = hom_basis(I(2), I(1)), h31 = hom_basis(I(3), I(1));
  Morphism f = h32.basis()[0];
  CHECK(compose(f, Morphism::identity(I(3))) == f);
  CHECK(compose(Morphism::identity(I(2)), f) == f);
  for (const auto& g : h21.basis())
    for (const auto& f2 : h32.basis()) CHECK(h31.contains(compose(g, f2)));
  CHECK_THROWS_AS(compose(f, f), DimensionError);
}

TEST_CASE("end_ring and radical examples") {
  EndoRing s1 = end_ring(simple(kronecker(), 0));
  CHECK(s1.dim() == 1);
  CHECK(s1.radical().dim() == 0);

  EndoRing i2 = end_ring(I(2));
  CHECK(i2.dim() == 1);
  CHECK(i2.radical().dim() == 0);

  DirectSum s = direct_sum({I(1), I(2)});
  EndoRing e = end_ring(s.sum);
  CHECK(e.dim() == 4);
  CHECK(e.radical().dim() == 2);
  CHECK(e.nilpotency_index() == 2);
  for (const auto& x : e.radical_morphisms())
    for (const auto& y : e.radical_morphisms()) CHECK((x * y).is_zero());

  DirectSum cube = direct_sum({I(1), I(1), I(1)});
  EndoRing m3 = end_ring(cube.sum);
  CHECK(m3.dim() == 9);
  CHECK(m3.radical().dim() == 0);

  CHECK_THROWS_AS(jacobson_radical(e, Field::prime(7)), UnsupportedField);
}

TEST_CASE("radical is a nilpotent two-sided ideal") {
  std::vector<Representation> corpus{direct_sum({I(1), I(2), I(3)}).sum, kronecker_regular(3, lam(0)),
                                     direct_sum({kronecker_preprojective(2), I(2)}).sum};
  for (const auto& m : corpus) {
    EndoRing e = end_ring(m);
    const auto& j = e.radical();
    for (const auto& x : j.basis_vectors())
      for (std::size_t b = 0; b < e.dim(); ++b) {
        Vec unit(e.dim());
        unit[b] = 1;
        CHECK(j.contains(e.multiply(x, unit)));
        CHECK(j.contains(e.multiply(unit, x)));
      }
    CHECK(e.nilpotency_index() <= e.dim());
    CHECK(e.basis()[0] == Morphism::identity(m));
  }
}

TEST_CASE("is_isomorphism") {
  CHECK(is_isomorphism(Morphism::identity(I(3))));
  for (const auto& f : hom_basis(I(2), I(1)).basis()) CHECK_FALSE(is_isomorphism(f));
  CHECK_FALSE(is_isomorphism(Morphism::zero(I(2), I(2))));
}

TEST_CASE("are_isomorphic") {
  Representation m = I(3);
  auto self = are_isomorphic(m, m);
  CHECK(self.isomorphic());
  auto no = are_isomorphic(kronecker_regular(1, lam(0)), kronecker_regular(1, lam(1)));
  CHECK(no.verdict == IsoCertificate::Verdict::CertifiedNo);
  CHECK(are_isomorphic(I(2), I(3)).verdict == IsoCertificate::Verdict::CertifiedNo);

  Representation moved = rebase(I(2), {Mat{{0, 1}, {1, 0}}, Mat{{-1}}});
  auto found = are_isomorphic(I(2), moved);
  REQUIRE(found.isomorphic());
  CHECK(is_homomorphism(*found.iso, I(2), moved));
  CHECK(*found.inverse * *found.iso == Morphism::identity(I(2)));

  // Symmetry via the inverted certificate, transitivity via composition.
  auto back = found.inverted();
  CHECK(is_homomorphism(*back.iso, moved, I(2)));
  Representation moved2 = rebase(moved, {Mat{{1, 2}, {0, 1}}, Mat{{3}}});
  auto second = are_isomorphic(moved, moved2);
  REQUIRE(second.isomorphic());
  CHECK(is_isomorphism(*second.iso * *found.iso));
  CHECK(is_homomorphism(*second.iso * *found.iso, I(2), moved2));

  // Equal dimension data but not isomorphic: R2(0) vs R1(0)+R1(0).
  auto split = are_isomorphic(kronecker_regular(2, lam(0)),
                              direct_sum({kronecker_regular(1, lam(0)), kronecker_regular(1, lam(0))}).sum);
  CHECK_FALSE(split.isomorphic());
}

TEST_CASE("locality") {
  CHECK(is_local(I(2)) == Locality::Local);
  CHECK(is_local(simple(kronecker(), 0)) == Locality::Local);
  CHECK(is_local(kronecker_regular(3, lam(2))) == Locality::Local);
  CHECK(is_local(direct_sum({I(1), I(2)}).sum) == Locality::NotLocal);
  CHECK(is_local(direct_sum({I(1), I(1)}).sum) == Locality::NotLocal);
}

TEST_CASE("indecompose") {
  auto one = indecompose(simple(kronecker(), 0));
  REQUIRE(one.size() == 1);
  CHECK(one[0].dims() == std::vector<std::size_t>{1, 0});

  auto parts = indecompose(direct_sum({I(1), I(2)}).sum);
  REQUIRE(parts.size() == 2);
  std::vector<std::size_t> lengths{parts[0].length(), parts[1].length()};
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::size_t>{1, 3});

  auto proj = indecompose(kronecker_preprojective(2));
  CHECK(proj.size() == 1);

  // A scrambled sum of four pieces, including two isomorphic regulars.
  std::vector<Representation> pieces{I(2), kronecker_preprojective(3), kronecker_regular(1, lam(1)),
                                     kronecker_regular(1, lam(1))};
  DirectSum s = direct_sum(pieces);
  const auto& d = s.sum.dims();
  Mat p0 = Mat::identity(d[0]), p1 = Mat::identity(d[1]);
  for (std::size_t i = 0; i + 1 < d[0]; ++i) p0(i, i + 1) = 1;
  for (std::size_t i = 0; i + 1 < d[1]; ++i) p1(i + 1, i) = -1;
  Representation scrambled = rebase(s.sum, {p0, p1});
  auto found = indecompose(scrambled);
  REQUIRE(found.size() == 4);
  for (const auto& piece : pieces) {
    bool matched = false;
    for (const auto& f : found) matched = matched || are_isomorphic(piece, f).isomorphic();
    CHECK(matched);
  }
}

TEST_CASE("noniso_subspace") {
  CHECK(noniso_subspace(I(3), I(1)).dim() == hom_basis(I(3), I(1)).dim());
  CHECK(noniso_subspace(I(2), I(2)).dim() == 0);
  HomSpace r = noniso_subspace(kronecker_regular(2, lam(0)), kronecker_regular(2, lam(0)));
  CHECK(r.dim() == 1);
  for (const auto& f : r.basis()) CHECK_FALSE(is_isomorphism(f));
  CHECK_THROWS(noniso_subspace(direct_sum({I(1), I(2)}).sum, I(1)));
}

TEST_CASE("noniso between isomorphic but different presentations") {
  Representation moved = rebase(kronecker_regular(2, lam(0)), {Mat{{1, 1}, {0, 1}}, Mat{{2, 0}, {0, 1}}});
  HomSpace n = noniso_subspace(kronecker_regular(2, lam(0)), moved);
  CHECK(n.dim() == 1);
  for (const auto& f : n.basis()) CHECK_FALSE(is_isomorphism(f));
}

TEST_CASE("rational roots and characteristic polynomials") {
  // (x - 1)(x + 2)(2x - 1) = 2x^3 + x^2 - 5x + 2
  auto roots = rational_roots(Vec{2, -5, 1, 2});
  CHECK(roots == std::vector<Scalar>{Scalar(-2), Scalar(1, 2), Scalar(1)});
  CHECK(rational_roots(Vec{0, 0, 1}) == std::vector<Scalar>{Scalar(0)});
  CHECK(rational_roots(Vec{1, 0, 1}).empty());
  Vec cp = characteristic_polynomial(Mat{{2, 1}, {0, 3}});
  CHECK(cp == Vec{6, -5, 1});
}

TEST_CASE("family analysis refuses decomposable members") {
  CHECK_THROWS_AS(FamilyAnalysis({direct_sum({I(1), I(2)}).sum}), std::invalid_argument);
}
