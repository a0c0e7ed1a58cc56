#pragma once

// Family construction, transversals, truncation sweeps and the named
// verification suites behind the `endoscope` command line.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endoscope/serialize.hpp"

namespace endoscope {

enum class FamilyKind { Preinjective, Preprojective, Regular, File };

/// Accepts "preinj", "kronecker-preinjective", "preproj",
/// "kronecker-preprojective", "regular", "kronecker-regular", "file".
FamilyKind parse_family_kind(const std::string& name);
std::string to_string(FamilyKind kind);

/// "a..b" (inclusive, a <= b) or a single number "a".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

struct FamilySpec {
  FamilyKind kind = FamilyKind::Preinjective;
  std::size_t first = 1;
  std::size_t last = 1;
  /// Regular families: dimension n of every R_n(lambda).
  std::size_t regular_size = 1;
  /// Regular families: explicit parameters.  When empty the parameters are
  /// the integers first..last.
  std::vector<RegularParameter> lambdas;
  std::string path;
};

struct Family {
  std::vector<Representation> members;
  /// Natural index of each member: n for I_n and P_n, the 1-based position
  /// for regular and file families.
  std::vector<std::size_t> indices;
  /// Position of the member at the truncation edge, for families that stand
  /// in for an infinite range.
  std::optional<std::size_t> boundary;
};

/// Builds the family; `truncation` replaces the upper end of the range (or
/// keeps the first `truncation` entries of a list or file).  File members are
/// split into indecomposables first.
Family build_family(const FamilySpec& spec, std::optional<std::size_t> truncation = std::nullopt);

/// "I3", "P2", "S1", "R2(0)", "R1(inf)", "R2:1/2".
Representation parse_module(const std::string& name);

struct Transversal {
  std::vector<std::size_t> representatives;  // member positions
  std::vector<std::size_t> class_of;         // per member: index into representatives
  std::vector<std::size_t> multiplicities;   // per representative
  std::vector<std::string> warnings;         // presumed-no certificates
};

Transversal transversal(const std::vector<Representation>& members, std::uint64_t seed = 0);

enum class Invariant { EndosocSupport, EndosocDim, RelativeLength, RadicalDepth };
Invariant parse_invariant(const std::string& name);
std::string to_string(Invariant inv);

struct SweepRow {
  std::size_t truncation = 0;
  Invariant invariant = Invariant::EndosocSupport;
  std::optional<std::size_t> value;  // empty when a radical profile did not vanish within its cap
  bool boundary_flag = false;
};

/// One row per truncation in [lo, hi].  Endosocle values exclude the boundary
/// member; boundary_flag records that the boundary member carried a nonzero
/// piece (or, for relative-length, appeared in some support).  Points are
/// computed concurrently; rows come back in truncation order.
std::vector<SweepRow> sweep(const FamilySpec& spec, Invariant invariant, std::size_t lo, std::size_t hi,
                            std::uint64_t seed = 0);
std::string sweep_csv(const std::vector<SweepRow>& rows);
Json sweep_json(const std::vector<SweepRow>& rows);

struct Check {
  std::string name;
  bool pass = false;
  Json detail;
};

struct SuiteResult {
  std::string suite;
  std::string anchor;
  std::vector<Check> checks;
  double seconds = 0;
  bool pass() const;
  Json to_json() const;  // timing excluded
};

/// Canonical suite names in registration order.
std::vector<std::string> suite_names();
/// Resolves a name or alias; nullopt when unknown.
std::optional<std::string> resolve_suite(const std::string& name);
/// Throws std::invalid_argument for unknown suites.  Inconclusive propagates.
SuiteResult run_suite(const std::string& name, std::uint64_t seed = 0);

/// Report JSON for a family endosocle.
Json endosocle_json(const Family& family, const EndosocleReport& report);
/// {"pairs":{"i->j":[d0, d1, ...]}, "vanishing_depth": n | null}
Json profile_json(const Family& family, const RadicalProfile& profile);

/// {"command", "config":{"seed","field","truncation"}, "results", "timing":{"seconds"}}
Json make_report(const std::string& command, std::uint64_t seed, const Field& field, const Json& truncation,
                 const Json& results, double seconds);

}  // namespace endoscope
