#pragma once

// Powers of the radical of the category restricted to a finite family.
//
// rad^1(i, j) is the space of non-isomorphisms M_i -> M_j, and rad^{d+1}(i, j)
// is spanned by the composites g f with f in rad^d(i, k), g in rad^1(k, j)
// over all members k.  The family is right T-nilpotent at finite scale
// exactly when some power vanishes; left T-nilpotence is read off the dual
// family.

#include <cstddef>
#include <optional>
#include <vector>

#include "endoscope/homalg.hpp"

namespace endoscope {

struct RadicalProfile {
  std::size_t size = 0;
  /// dims[d][i * size + j] = dim rad^d(i, j); dims[0] is dim Hom(i, j).
  std::vector<std::vector<std::size_t>> dims;
  /// Least d >= 1 with rad^d = 0 on every pair, if reached within the cap.
  std::optional<std::size_t> vanishing_depth;
  /// Spanning bases, same indexing as dims (kept for witness search).
  std::vector<std::vector<HomSpace>> spaces;

  std::size_t dim(std::size_t d, std::size_t i, std::size_t j) const { return dims.at(d).at(i * size + j); }
  std::size_t max_depth() const { return dims.empty() ? 0 : dims.size() - 1; }
};

/// Computes rad^1 .. rad^{d_max}, stopping early once everything vanishes.
RadicalProfile radical_profile(const FamilyAnalysis& family, std::size_t d_max);

/// Right profile of the dual family over the opposite quiver.  Duality
/// reverses arrows, so its pair (j, i) describes composites M_i -> M_j read
/// from the left; its vanishing depth is the left vanishing depth of the
/// original family.
RadicalProfile left_profile(const std::vector<Representation>& members, std::size_t d_max,
                            std::uint64_t seed = 0);

struct HaradaSaiResult {
  std::optional<std::size_t> depth;  // measured vanishing depth
  std::size_t bound = 0;             // 2^b - 1
  std::size_t length_bound = 0;      // b
  bool pass = false;
};

/// Compares the measured vanishing depth with 2^b - 1.  Requires every member
/// length to be at most b; throws std::invalid_argument otherwise.  The
/// profile is computed one step past the bound so a violation is visible.
HaradaSaiResult harada_sai_check(const FamilyAnalysis& family, std::size_t length_bound);

struct WitnessChain {
  std::vector<std::size_t> indices;  // M_{i_0} -> M_{i_1} -> ... ; size = steps + 1
  std::vector<Morphism> maps;        // basis non-isomorphisms
  std::vector<Vec> trail;            // x, f_1 x, f_2 f_1 x, ... all nonzero
};

/// A chain of d basis non-isomorphisms whose composite does not kill x, found
/// breadth-first.  With `distinct` set, no member index repeats.
std::optional<WitnessChain> right_witness(const FamilyAnalysis& family, std::size_t start, const Vec& x,
                                          std::size_t d, bool distinct = false);

}  // namespace endoscope
