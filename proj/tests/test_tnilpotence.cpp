#include <doctest.h>

#include "endoscope/tnilpotence.hpp"

using namespace endoscope;

namespace {
RegularParameter lam(long v) { return RegularParameter::finite(Scalar(v)); }
Representation I(std::size_t n) { return kronecker_preinjective(n); }
}  // namespace

TEST_CASE("profile of the first three preinjectives") {
  FamilyAnalysis fam({I(1), I(2), I(3)});
  RadicalProfile p = radical_profile(fam, 10);
  REQUIRE(p.vanishing_depth);
  CHECK(*p.vanishing_depth == 3);
  CHECK(p.dim(1, 1, 0) == 2);
  CHECK(p.dim(1, 2, 1) == 2);
  CHECK(p.dim(1, 2, 0) == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(p.dim(1, i, i) == 0);
  CHECK(p.dim(2, 2, 0) > 0);
}

TEST_CASE("singleton profiles") {
  RadicalProfile i2 = radical_profile(FamilyAnalysis({I(2)}), 5);
  CHECK(*i2.vanishing_depth == 1);
  RadicalProfile r2 = radical_profile(FamilyAnalysis({kronecker_regular(2, lam(0))}), 5);
  CHECK(r2.dim(1, 0, 0) == 1);
  CHECK(r2.dim(2, 0, 0) == 0);
  CHECK(*r2.vanishing_depth == 2);
}

TEST_CASE("profile monotonicity and composite membership") {
  std::vector<Representation> members{I(1), I(2), I(3), kronecker_preprojective(2), kronecker_regular(2, lam(1))};
  FamilyAnalysis fam(members);
  RadicalProfile p = radical_profile(fam, 20);
  REQUIRE(p.vanishing_depth);
  const std::size_t n = members.size();
  for (std::size_t d = 1; d + 1 < p.dims.size(); ++d)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(p.dim(d + 1, i, j) <= p.dim(d, i, j));
        // Every rad^{d+1} basis element lies in rad^d.
        for (const auto& f : p.spaces[d + 1][i * n + j].basis()) CHECK(p.spaces[d][i * n + j].contains(f));
      }
  for (std::size_t k = 0; k < n * n; ++k) CHECK(p.dims[*p.vanishing_depth][k] == 0);
}

TEST_CASE("left profile is the right profile of the duals, transposed") {
  std::vector<Representation> members{I(1), I(2), I(3)};
  RadicalProfile right = radical_profile(FamilyAnalysis(members), 10);
  RadicalProfile left = left_profile(members, 10);
  REQUIRE(left.vanishing_depth);
  CHECK(*left.vanishing_depth == 3);
  for (std::size_t d = 0; d < right.dims.size(); ++d)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(right.dim(d, i, j) == left.dim(d, j, i));

  std::vector<Representation> pp{kronecker_preprojective(1), kronecker_preprojective(2), kronecker_preprojective(3)};
  CHECK(*left_profile(pp, 10).vanishing_depth == 3);

  std::vector<Representation> regs{kronecker_regular(1, lam(0)), kronecker_regular(1, lam(1))};
  CHECK(*left_profile(regs, 10).vanishing_depth == 1);
  CHECK(*radical_profile(FamilyAnalysis(regs), 10).vanishing_depth == 1);
}

TEST_CASE("harada-sai checks") {
  std::vector<Representation> short_ones{simple(kronecker(), 0), simple(kronecker(), 1), kronecker_preprojective(2),
                                         I(2), kronecker_regular(1, lam(0)), kronecker_regular(1, lam(1)),
                                         kronecker_regular(1, RegularParameter::infinity())};
  HaradaSaiResult r3 = harada_sai_check(FamilyAnalysis(short_ones), 3);
  CHECK(r3.bound == 7);
  CHECK(r3.pass);
  REQUIRE(r3.depth);
  CHECK(*r3.depth <= 7);

  HaradaSaiResult single = harada_sai_check(FamilyAnalysis({simple(kronecker(), 0)}), 1);
  CHECK(single.pass);
  CHECK(*single.depth == 1);

  HaradaSaiResult pre = harada_sai_check(FamilyAnalysis({I(1), I(2), I(3)}), 5);
  CHECK(*pre.depth == 3);
  CHECK(pre.bound == 31);

  CHECK_THROWS_AS(harada_sai_check(FamilyAnalysis({I(3)}), 3), std::invalid_argument);
}

TEST_CASE("right witnesses") {
  FamilyAnalysis fam({I(1), I(2), I(3)});
  // Top generator of I3: first basis vector at vertex 1.
  Vec x(I(3).total_dim());
  x[0] = 1;
  auto chain = right_witness(fam, 2, x, 2);
  REQUIRE(chain);
  CHECK(chain->indices.size() == 3);
  CHECK(chain->indices.front() == 2);
  for (std::size_t s = 0; s < chain->maps.size(); ++s) {
    CHECK_FALSE(is_isomorphism(chain->maps[s]));
    CHECK_FALSE(is_zero(chain->trail[s + 1]));
    CHECK(chain->maps[s].apply(chain->trail[s]) == chain->trail[s + 1]);
  }
  CHECK_FALSE(right_witness(fam, 2, x, 3).has_value());

  // A socle element of I2 is killed by every radical map out of I2.
  Vec soc(I(2).total_dim());
  soc[2] = 1;
  CHECK_FALSE(right_witness(fam, 1, soc, 1).has_value());

  // Distinct-index chains cannot revisit a member.
  auto distinct = right_witness(fam, 2, x, 2, true);
  REQUIRE(distinct);
  CHECK(distinct->indices == std::vector<std::size_t>{2, 1, 0});
}
