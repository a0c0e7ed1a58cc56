#pragma once

// Endosocles: the socle of a module over its own endomorphism ring S, i.e.
// the common kernel of J(S).  For a direct sum of modules with local
// endomorphism rings the endosocle splits as a sum of pieces B_i, where B_i
// is the part of M_i killed by every non-isomorphism leaving M_i.

#include <cstddef>
#include <vector>

#include "endoscope/homalg.hpp"
#include "endoscope/representation.hpp"

namespace endoscope {

/// Common kernel of the radical of End(M), vertex by vertex.
SubspaceFamily endosocle(const Representation& m, const Field& field = Field::rationals());
SubspaceFamily endosocle(const Representation& m, const EndoRing& e);

struct EndosocleReport {
  std::vector<std::size_t> members;   // family positions taking part, ascending
  std::vector<SubspaceFamily> pieces; // B_i, parallel to `members`
  std::vector<std::size_t> support;   // positions with B_i != 0, ascending
  std::size_t total_dim = 0;

  const SubspaceFamily& piece_for(std::size_t position) const;
};

/// B_i for every member: the intersection of the kernels of all non-isomorphisms
/// from M_i into family members (M_i itself included).
EndosocleReport family_endosocle(const FamilyAnalysis& family);
/// Same, restricted to the members at the given positions (a trimmed family).
EndosocleReport family_endosocle(const FamilyAnalysis& family, const std::vector<std::size_t>& active);
EndosocleReport family_endosocle(const std::vector<Representation>& members, std::uint64_t seed = 0);

/// Endosocle of M^k, computed directly on the k-fold direct sum.
SubspaceFamily power_endosocle(const Representation& m, std::size_t k);

struct SeriesReport {
  std::vector<SubspaceFamily> terms;  // soc_1, soc_2, ..., soc_length = M
  std::size_t length() const { return terms.size(); }
};

/// Ascending endosocle series: soc_{t+1} = {x : J(S) x ⊆ soc_t}.
SeriesReport endosocle_series(const Representation& m, const Field& field = Field::rationals());

struct RelativeSeriesReport {
  std::vector<EndosocleReport> terms;  // nonzero terms only
  /// Supports of the successive terms.
  std::vector<std::vector<std::size_t>> supports() const;
  std::size_t length() const { return terms.size(); }
};

/// Iterated endosocles of trimmed sums: take the family endosocle, remove the
/// supported members, repeat until the endosocle of what is left vanishes.
/// Verifies that the recorded terms form a direct sum.
RelativeSeriesReport relative_endosocle_series(const FamilyAnalysis& family);

/// The recorded pieces of a report placed inside the total space of the
/// direct sum of all family members.
Subspace embed_report(const FamilyAnalysis& family, const EndosocleReport& report,
                      const DirectSum& sum);

}  // namespace endoscope
