#include <doctest.h>

#include "endoscope/endostructure.hpp"

using namespace endoscope;

namespace {
RegularParameter lam(long v) { return RegularParameter::finite(Scalar(v)); }
Representation I(std::size_t n) { return kronecker_preinjective(n); }
Representation P(std::size_t n) { return kronecker_preprojective(n); }

std::vector<Representation> preinjectives(std::size_t from, std::size_t to) {
  std::vector<Representation> out;
  for (std::size_t n = from; n <= to; ++n) out.push_back(I(n));
  return out;
}
}  // namespace

TEST_CASE("single-module endosocle examples") {
  Representation s1 = simple(kronecker(), 0);
  CHECK(endosocle(s1) == SubspaceFamily::full(s1));
  CHECK(endosocle(I(2)) == SubspaceFamily::full(I(2)));
  DirectSum s = direct_sum({I(1), I(2)});
  SubspaceFamily e = endosocle(s.sum);
  CHECK(e.total_dim() == 2);
  Subspace expected = SubspaceFamily::full(I(1)).total(I(1)).mapped(s.embeddings[0].total()) +
                      socle(I(2)).total(I(2)).mapped(s.embeddings[1].total());
  CHECK(e.total(s.sum) == expected);
  CHECK_THROWS_AS(endosocle(I(2), Field::prime(3)), UnsupportedField);
}

TEST_CASE("family endosocle of preinjectives") {
  EndosocleReport r = family_endosocle(preinjectives(1, 8));
  CHECK(r.support == std::vector<std::size_t>{0, 1});
  CHECK(r.pieces[0].total_dim() == 1);
  CHECK(r.pieces[1] == socle(I(2)));
  for (std::size_t i = 2; i < 8; ++i) CHECK(r.pieces[i].is_zero());
  CHECK(r.total_dim == 2);
}

TEST_CASE("trimmed preinjectives") {
  for (std::size_t m = 2; m <= 4; ++m) {
    EndosocleReport r = family_endosocle(preinjectives(m, m + 6));
    CHECK(r.support == std::vector<std::size_t>{0});
    CHECK(r.pieces[0].total_dim() == 2 * m - 1);
  }
}

TEST_CASE("regular simples are orthogonal") {
  std::vector<Representation> members;
  for (long l = 1; l <= 5; ++l) members.push_back(kronecker_regular(1, lam(l)));
  EndosocleReport r = family_endosocle(members);
  CHECK(r.support.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) CHECK(r.pieces[k] == SubspaceFamily::full(members[k]));
}

TEST_CASE("family endosocle pieces are killed by the radical and by non-isomorphisms") {
  std::vector<Representation> members{I(1), I(2), I(3), P(2), kronecker_regular(2, lam(0))};
  FamilyAnalysis fam(members);
  EndosocleReport r = family_endosocle(fam);
  for (std::size_t i = 0; i < members.size(); ++i) {
    Subspace b = r.pieces[i].total(members[i]);
    for (const auto& x : fam.end(i).radical_morphisms()) CHECK(b.mapped(x.total()).is_zero());
    for (std::size_t j = 0; j < members.size(); ++j)
      for (const auto& f : fam.noniso(i, j).basis()) CHECK(b.mapped(f.total()).is_zero());
    // Arrow-closed.
    CHECK_NOTHROW(sub_from_family(members[i], r.pieces[i]));
  }
}

TEST_CASE("trim monotonicity") {
  const std::size_t n = 7;
  FamilyAnalysis fam(preinjectives(1, n));
  EndosocleReport whole = family_endosocle(fam);
  for (std::size_t drop = 0; drop < n; ++drop) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < n; ++i)
      if (i != drop) active.push_back(i);
    EndosocleReport trimmed = family_endosocle(fam, active);
    for (std::size_t k = 0; k < active.size(); ++k)
      CHECK(trimmed.pieces[k].contains(whole.piece_for(active[k])));
  }
}

TEST_CASE("embedding chains have trivial endosocle below the top") {
  // Each preprojective embeds in the next; pieces vanish except at the top.
  for (std::size_t n = 3; n <= 6; ++n) {
    std::vector<Representation> chain;
    for (std::size_t k = 1; k <= n; ++k) chain.push_back(P(k));
    for (std::size_t k = 0; k + 1 < n; ++k) {
      bool injective = false;
      for (const auto& f : hom_basis(chain[k], chain[k + 1]).basis())
        injective = injective || kernel_basis(f.total()).dim() == 0;
      CHECK(injective);
    }
    EndosocleReport r = family_endosocle(chain);
    for (std::size_t k = 0; k + 1 < n; ++k) CHECK(r.pieces[k].is_zero());
  }
}

TEST_CASE("power endosocle") {
  CHECK(power_endosocle(I(2), 1) == endosocle(I(2)));
  CHECK(power_endosocle(I(2), 3).total_dim() == 9);
  SubspaceFamily r = endosocle(kronecker_regular(2, lam(0)));
  CHECK(r.total_dim() == 2);
  CHECK(power_endosocle(kronecker_regular(2, lam(0)), 2).total_dim() == 4);
}

TEST_CASE("ascending endosocle series") {
  SeriesReport simple_series = endosocle_series(simple(kronecker(), 1));
  CHECK(simple_series.length() == 1);

  DirectSum s = direct_sum({I(1), I(2)});
  SeriesReport series = endosocle_series(s.sum);
  REQUIRE(series.length() == 2);
  CHECK(series.terms[0].total_dim() == 2);
  CHECK(series.terms[1].total_dim() == 4);
  CHECK(series.terms[1].contains(series.terms[0]));

  CHECK(endosocle_series(I(4)).length() == 1);
}

TEST_CASE("relative endosocle series") {
  RelativeSeriesReport r = relative_endosocle_series(FamilyAnalysis(preinjectives(1, 6)));
  std::vector<std::vector<std::size_t>> expected{{0, 1}, {2}, {3}, {4}, {5}};
  CHECK(r.supports() == expected);

  RelativeSeriesReport single = relative_endosocle_series(FamilyAnalysis({I(3)}));
  CHECK(single.length() == 1);

  std::vector<Representation> pp;
  for (std::size_t k = 1; k <= 5; ++k) pp.push_back(P(k));
  RelativeSeriesReport p = relative_endosocle_series(FamilyAnalysis(pp));
  REQUIRE(p.length() >= 1);
  CHECK(p.supports()[0] == std::vector<std::size_t>{4});
}

TEST_CASE("families with isomorphic members") {
  // Two copies of R2(0) in different bases: each piece is the image of the radical's kernel.
  Representation r = kronecker_regular(2, lam(0));
  Representation moved = rebase(r, {Mat{{1, 1}, {0, 1}}, Mat{{1, 1}, {0, 1}}});
  EndosocleReport rep = family_endosocle({r, moved});
  CHECK(rep.pieces[0].total_dim() == 2);
  CHECK(rep.pieces[1].total_dim() == 2);
  DirectSum s = direct_sum({r, moved});
  CHECK(endosocle(s.sum).total_dim() == 4);
}
