#include "endoscope/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace endoscope {

// ---------------------------------------------------------------- families

FamilyKind parse_family_kind(const std::string& name) {
  if (name == "preinj" || name == "kronecker-preinjective") return FamilyKind::Preinjective;
  if (name == "preproj" || name == "kronecker-preprojective") return FamilyKind::Preprojective;
  if (name == "regular" || name == "kronecker-regular") return FamilyKind::Regular;
  if (name == "file") return FamilyKind::File;
  throw std::invalid_argument("unknown family: " + name);
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Preinjective: return "kronecker-preinjective";
    case FamilyKind::Preprojective: return "kronecker-preprojective";
    case FamilyKind::Regular: return "kronecker-regular";
    case FamilyKind::File: return "file";
  }
  return "?";
}

namespace {

std::size_t parse_count(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("expected a nonnegative integer, got \"" + std::string(s) + "\"");
  return v;
}

std::vector<Representation> load_members(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j = Json::parse(in);
  std::vector<Representation> out;
  if (j.is_array()) {
    for (const auto& r : j) out.push_back(representation_from_json(r));
  } else if (j.contains("members")) {
    for (auto r : j.at("members")) {
      if (j.contains("algebra") && !r.contains("algebra")) r["algebra"] = j.at("algebra");
      out.push_back(representation_from_json(r));
    }
  } else {
    out.push_back(representation_from_json(j));
  }
  return out;
}

}  // namespace

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto v = parse_count(text);
    return {v, v};
  }
  auto a = parse_count(std::string_view(text).substr(0, dots));
  auto b = parse_count(std::string_view(text).substr(dots + 2));
  if (a > b) throw std::invalid_argument("empty range " + text);
  return {a, b};
}

Family build_family(const FamilySpec& spec, std::optional<std::size_t> truncation) {
  Family fam;
  switch (spec.kind) {
    case FamilyKind::Preinjective:
    case FamilyKind::Preprojective: {
      const std::size_t last = truncation.value_or(spec.last);
      if (spec.first == 0) throw std::invalid_argument("range families start at index 1");
      if (last < spec.first) throw std::invalid_argument("truncation below the start of the range");
      for (std::size_t n = spec.first; n <= last; ++n) {
        fam.members.push_back(spec.kind == FamilyKind::Preinjective ? kronecker_preinjective(n)
                                                                     : kronecker_preprojective(n));
        fam.indices.push_back(n);
      }
      fam.boundary = fam.members.size() - 1;
      break;
    }
    case FamilyKind::Regular: {
      if (spec.regular_size == 0) throw std::invalid_argument("regular size must be positive");
      std::vector<RegularParameter> params = spec.lambdas;
      if (params.empty()) {
        const std::size_t last = truncation.value_or(spec.last);
        if (last < spec.first) throw std::invalid_argument("truncation below the start of the range");
        for (std::size_t l = spec.first; l <= last; ++l)
          params.push_back(RegularParameter::finite(Scalar(static_cast<unsigned long>(l))));
      } else if (truncation) {
        if (*truncation > params.size()) throw std::invalid_argument("truncation exceeds the parameter list");
        params.erase(params.begin() + static_cast<std::ptrdiff_t>(*truncation), params.end());
      }
      for (const auto& p : params) {
        fam.members.push_back(kronecker_regular(spec.regular_size, p));
        fam.indices.push_back(fam.members.size());
      }
      break;
    }
    case FamilyKind::File: {
      for (const auto& m : load_members(spec.path))
        for (auto& part : indecompose(m)) fam.members.push_back(std::move(part));
      if (truncation) {
        if (*truncation > fam.members.size()) throw std::invalid_argument("truncation exceeds the family size");
        fam.members.resize(*truncation);
      }
      for (std::size_t i = 0; i < fam.members.size(); ++i) fam.indices.push_back(i + 1);
      break;
    }
  }
  if (fam.members.empty()) throw std::invalid_argument("empty family");
  return fam;
}

Representation parse_module(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad module name: " + name);
  const char kind = name[0];
  const std::string rest = name.substr(1);
  if (kind == 'I') return kronecker_preinjective(parse_count(rest));
  if (kind == 'P') return kronecker_preprojective(parse_count(rest));
  if (kind == 'S') {
    auto v = kronecker()->quiver().vertex_index(rest);
    if (!v) throw std::invalid_argument("unknown vertex in " + name);
    return simple(kronecker(), *v);
  }
  if (kind == 'R') {
    std::string size, param;
    if (auto open = rest.find('('); open != std::string::npos && rest.back() == ')') {
      size = rest.substr(0, open);
      param = rest.substr(open + 1, rest.size() - open - 2);
    } else if (auto colon = rest.find(':'); colon != std::string::npos) {
      size = rest.substr(0, colon);
      param = rest.substr(colon + 1);
    } else {
      throw std::invalid_argument("regular modules are written R<n>(<lambda>): " + name);
    }
    return kronecker_regular(parse_count(size), RegularParameter::parse(param));
  }
  throw std::invalid_argument("bad module name: " + name);
}

// ---------------------------------------------------------------- transversal

Transversal transversal(const std::vector<Representation>& members, std::uint64_t seed) {
  Transversal t;
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::optional<std::size_t> cls;
    for (std::size_t r = 0; r < t.representatives.size() && !cls; ++r) {
      const auto& rep = members[t.representatives[r]];
      IsoCertificate cert = are_isomorphic(members[i], rep, seed);
      if (cert.isomorphic()) {
        cls = r;
      } else if (cert.verdict == IsoCertificate::Verdict::PresumedNo) {
        t.warnings.push_back("presumed non-isomorphic: " + members[i].label() + " vs " + rep.label() + " (" +
                             cert.reason + ")");
      }
    }
    if (!cls) {
      cls = t.representatives.size();
      t.representatives.push_back(i);
      t.multiplicities.push_back(0);
    }
    t.class_of.push_back(*cls);
    ++t.multiplicities[*cls];
  }
  return t;
}

// ---------------------------------------------------------------- sweeps

Invariant parse_invariant(const std::string& name) {
  if (name == "endosoc-support") return Invariant::EndosocSupport;
  if (name == "endosoc-dim") return Invariant::EndosocDim;
  if (name == "relative-length") return Invariant::RelativeLength;
  if (name == "radical-depth") return Invariant::RadicalDepth;
  throw std::invalid_argument("unknown invariant: " + name);
}

std::string to_string(Invariant inv) {
  switch (inv) {
    case Invariant::EndosocSupport: return "endosoc-support";
    case Invariant::EndosocDim: return "endosoc-dim";
    case Invariant::RelativeLength: return "relative-length";
    case Invariant::RadicalDepth: return "radical-depth";
  }
  return "?";
}

namespace {

// Depth cap for radical profiles: one past the Harada-Sai bound, clipped so a
// misbehaving family cannot run away.
std::size_t profile_cap(const std::vector<Representation>& members) {
  std::size_t b = 1;
  for (const auto& m : members) b = std::max(b, m.length());
  return b >= 10 ? 1024 : (std::size_t{1} << b);
}

SweepRow sweep_point(const FamilySpec& spec, Invariant invariant, std::size_t truncation, std::uint64_t seed) {
  Family fam = build_family(spec, truncation);
  FamilyAnalysis analysis(fam.members, seed);
  SweepRow row{truncation, invariant, std::nullopt, false};
  auto excluded = [&](std::size_t i) { return fam.boundary && *fam.boundary == i; };
  switch (invariant) {
    case Invariant::EndosocSupport:
    case Invariant::EndosocDim: {
      EndosocleReport r = family_endosocle(analysis);
      std::size_t support = 0, dim = 0;
      for (std::size_t k = 0; k < r.members.size(); ++k) {
        const std::size_t d = r.pieces[k].total_dim();
        if (excluded(r.members[k])) {
          row.boundary_flag = d > 0;
          continue;
        }
        support += d > 0;
        dim += d;
      }
      row.value = invariant == Invariant::EndosocSupport ? support : dim;
      break;
    }
    case Invariant::RelativeLength: {
      RelativeSeriesReport r = relative_endosocle_series(analysis);
      row.value = r.length();
      for (const auto& s : r.supports())
        for (auto i : s) row.boundary_flag = row.boundary_flag || excluded(i);
      break;
    }
    case Invariant::RadicalDepth: {
      RadicalProfile p = radical_profile(analysis, profile_cap(fam.members));
      row.value = p.vanishing_depth;
      break;
    }
  }
  return row;
}

}  // namespace

std::vector<SweepRow> sweep(const FamilySpec& spec, Invariant invariant, std::size_t lo, std::size_t hi,
                            std::uint64_t seed) {
  if (lo > hi) throw std::invalid_argument("empty sweep range");
  std::vector<SweepRow> rows(hi - lo + 1);
  parallel_for(rows.size(), [&](std::size_t k) { rows[k] = sweep_point(spec, invariant, lo + k, seed); });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "truncation,invariant,value,boundary_flag\n";
  for (const auto& r : rows) {
    out << r.truncation << ',' << to_string(r.invariant) << ',';
    if (r.value) out << *r.value;
    out << ',' << (r.boundary_flag ? 1 : 0) << '\n';
  }
  return out.str();
}

Json sweep_json(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"truncation", r.truncation},
                   {"invariant", to_string(r.invariant)},
                   {"value", r.value ? Json(*r.value) : Json()},
                   {"boundary_flag", r.boundary_flag ? 1 : 0}});
  return out;
}

// ---------------------------------------------------------------- report helpers

Json endosocle_json(const Family& family, const EndosocleReport& report) {
  const Quiver& q = family.members.front().quiver();
  Json members = Json::array();
  for (std::size_t i = 0; i < family.members.size(); ++i)
    members.push_back({{"index", family.indices[i]}, {"label", family.members[i].label()}});
  Json pieces = Json::object();
  for (std::size_t k = 0; k < report.members.size(); ++k) {
    Json dims = Json::object();
    const auto d = report.pieces[k].dims();
    for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[q.vertices()[v]] = d[v];
    pieces[std::to_string(family.indices[report.members[k]])] = dims;
  }
  Json support = Json::array();
  for (auto i : report.support) support.push_back(family.indices[i]);
  Json out{{"members", members}, {"B", pieces}, {"support", support}, {"total_dim", report.total_dim}};
  out["boundary"] = family.boundary ? Json(family.indices[*family.boundary]) : Json();
  return out;
}

Json profile_json(const Family& family, const RadicalProfile& profile) {
  Json pairs = Json::object();
  for (std::size_t i = 0; i < profile.size; ++i)
    for (std::size_t j = 0; j < profile.size; ++j) {
      Json dims = Json::array();
      for (std::size_t d = 0; d < profile.dims.size(); ++d) dims.push_back(profile.dim(d, i, j));
      pairs[std::to_string(family.indices[i]) + "->" + std::to_string(family.indices[j])] = dims;
    }
  return {{"pairs", pairs},
          {"vanishing_depth", profile.vanishing_depth ? Json(*profile.vanishing_depth) : Json()}};
}

Json make_report(const std::string& command, std::uint64_t seed, const Field& field, const Json& truncation,
                 const Json& results, double seconds) {
  return {{"command", command},
          {"config", {{"seed", seed}, {"field", field.name()}, {"truncation", truncation}}},
          {"results", results},
          {"timing", {{"seconds", seconds}}}};
}

// ---------------------------------------------------------------- suites

bool SuiteResult::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json SuiteResult::to_json() const {
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", suite}, {"anchor", anchor}, {"pass", pass()}, {"checks", cs}};
}

namespace {

std::vector<Representation> preinjectives(std::size_t from, std::size_t to) {
  std::vector<Representation> out;
  for (std::size_t n = from; n <= to; ++n) out.push_back(kronecker_preinjective(n));
  return out;
}

std::vector<Representation> preprojectives(std::size_t from, std::size_t to) {
  std::vector<Representation> out;
  for (std::size_t n = from; n <= to; ++n) out.push_back(kronecker_preprojective(n));
  return out;
}

RegularParameter lam(long v) { return RegularParameter::finite(Scalar(v)); }

Json sizes(const std::vector<std::size_t>& v) { return Json(v); }

// Positions are 0-based internally; suites report 1-based indices.
std::vector<std::size_t> one_based(const std::vector<std::size_t>& v, std::size_t offset = 1) {
  std::vector<std::size_t> out;
  for (auto x : v) out.push_back(x + offset);
  return out;
}

std::vector<Check> preinjective_endosocle(std::uint64_t seed) {
  std::vector<Check> checks;
  for (std::size_t n = 4; n <= 12; ++n) {
    FamilyAnalysis fam(preinjectives(1, n), seed);
    EndosocleReport r = family_endosocle(fam);
    bool ok = r.support == std::vector<std::size_t>{0, 1};
    ok = ok && r.pieces[0] == SubspaceFamily::full(fam.member(0));
    ok = ok && r.pieces[1] == socle(fam.member(1)) && r.pieces[1].total_dim() == 1;
    for (std::size_t i = 2; i < n; ++i) ok = ok && r.pieces[i].is_zero();
    std::vector<std::size_t> dims;
    for (const auto& p : r.pieces) dims.push_back(p.total_dim());
    checks.push_back({"N=" + std::to_string(n), ok,
                      {{"support", one_based(r.support)}, {"B_dims", sizes(dims)}}});
  }
  return checks;
}

std::vector<Check> trimmed_preinjectives(std::uint64_t seed) {
  std::vector<Check> checks;
  for (std::size_t m = 2; m <= 6; ++m) {
    const std::size_t n = m + 6;
    FamilyAnalysis fam(preinjectives(m, n), seed);
    EndosocleReport r = family_endosocle(fam);
    const std::size_t boundary = n - m;
    std::vector<std::size_t> interior;
    for (auto i : r.support)
      if (i != boundary) interior.push_back(i + m);
    bool ok = interior == std::vector<std::size_t>{m};
    ok = ok && r.pieces[0] == SubspaceFamily::full(fam.member(0)) && r.pieces[0].total_dim() == 2 * m - 1;
    checks.push_back({"m=" + std::to_string(m) + ",N=" + std::to_string(n), ok,
                      {{"support_excluding_boundary", interior},
                       {"boundary", n},
                       {"boundary_flag", !r.pieces[boundary].is_zero()},
                       {"dim_B_m", r.pieces[0].total_dim()}}});
  }
  return checks;
}

std::vector<Check> preprojective_vanishing(std::uint64_t seed) {
  std::vector<Check> checks;
  for (std::size_t n = 3; n <= 10; ++n) {
    FamilyAnalysis fam(preprojectives(1, n), seed);
    EndosocleReport r = family_endosocle(fam);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n; ++i) ok = ok && r.pieces[i].is_zero();
    checks.push_back({"N=" + std::to_string(n), ok,
                      {{"interior_dim", r.total_dim - r.pieces[n - 1].total_dim()},
                       {"boundary", n},
                       {"boundary_dim", r.pieces[n - 1].total_dim()}}});
  }
  return checks;
}

std::vector<Check> relative_series(std::uint64_t seed) {
  std::vector<Check> checks;
  for (std::size_t n : {5u, 8u}) {
    FamilyAnalysis fam(preinjectives(1, n), seed);
    RelativeSeriesReport r = relative_endosocle_series(fam);
    std::vector<std::vector<std::size_t>> expected{{0, 1}};
    for (std::size_t i = 2; i < n; ++i) expected.push_back({i});
    Json supports = Json::array();
    for (const auto& s : r.supports()) supports.push_back(one_based(s));
    checks.push_back({"N=" + std::to_string(n), r.supports() == expected && r.length() == n - 1,
                      {{"supports", supports}, {"length", r.length()}}});
  }
  return checks;
}

// k copies of a vertexwise family, laid out as in direct_sum (parts adjacent
// inside each vertex block).
SubspaceFamily repeat(const SubspaceFamily& f, const Representation& m, std::size_t k) {
  std::vector<Representation> parts(k, m);
  DirectSum sum = direct_sum(parts);
  Subspace acc = Subspace::zero(sum.sum.total_dim());
  for (std::size_t c = 0; c < k; ++c) acc = acc + f.total(m).mapped(sum.embeddings[c].total());
  return SubspaceFamily::from_total(acc, sum.sum);
}

std::vector<Check> power_endosocle_suite(std::uint64_t) {
  std::vector<Check> checks;
  for (const auto& m : {kronecker_preinjective(2), kronecker_regular(2, lam(0))}) {
    SubspaceFamily single = endosocle(m);
    for (std::size_t k : {2u, 3u}) {
      SubspaceFamily power = power_endosocle(m, k);
      bool ok = power.total_dim() == k * single.total_dim() && power == repeat(single, m, k);
      checks.push_back({m.label() + "^" + std::to_string(k), ok,
                        {{"dim_power", power.total_dim()}, {"dim_single", single.total_dim()}}});
    }
  }
  return checks;
}

std::vector<Representation> duality_corpus() {
  std::vector<Representation> corpus;
  for (std::size_t n = 1; n <= 5; ++n) {
    corpus.push_back(kronecker_preinjective(n));
    corpus.push_back(kronecker_preprojective(n));
    for (const auto& l : {lam(0), lam(1), RegularParameter::infinity()}) corpus.push_back(kronecker_regular(n, l));
  }
  return corpus;
}

std::vector<Check> duality_suite(std::uint64_t seed) {
  std::vector<Check> checks;
  const auto corpus = duality_corpus();
  std::vector<Representation> duals(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) duals[i] = dual(corpus[i]);

  bool reflexive = true;
  Json failures = Json::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    IsoCertificate c = are_isomorphic(dual(duals[i]), corpus[i], seed);
    if (!c.isomorphic()) {
      reflexive = false;
      failures.push_back(corpus[i].label());
    }
  }
  checks.push_back({"double dual is isomorphic to the original", reflexive,
                    {{"members", corpus.size()}, {"failures", failures}}});

  const std::size_t n = corpus.size();
  std::vector<int> agree(n * n, 0);
  parallel_for(n * n, [&](std::size_t idx) {
    const std::size_t i = idx / n, j = idx % n;
    agree[idx] = hom_basis(corpus[i], corpus[j]).dim() == hom_basis(duals[j], duals[i]).dim();
  });
  const auto mismatches = static_cast<std::size_t>(std::count(agree.begin(), agree.end(), 0));
  checks.push_back({"dim Hom(M,N) = dim Hom(DN,DM)", mismatches == 0,
                    {{"pairs", n * n}, {"mismatches", mismatches}}});

  bool dims_ok = true;
  Json dims = Json::array();
  for (std::size_t k = 1; k <= 5; ++k) {
    Representation d = dual(kronecker_preinjective_right(k));
    dims_ok = dims_ok && d.dims() == std::vector<std::size_t>{k - 1, k} && d == kronecker_preprojective(k);
    dims.push_back(d.dims());
  }
  checks.push_back({"dual of right preinjective has dims (n-1, n)", dims_ok, {{"dims", dims}}});
  return checks;
}

std::vector<Check> hom_table(std::uint64_t) {
  std::vector<Check> checks;
  constexpr std::uint64_t kCheckPrime = 1000003;
  bool ok = true;
  Json table = Json::array();
  for (std::size_t i = 1; i <= 6; ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= 6; ++j) {
      const auto mi = kronecker_preinjective(i), mj = kronecker_preinjective(j);
      const std::size_t expected = i >= j ? i - j + 1 : 0;
      const std::size_t fast = hom_basis(mi, mj).dim();
      const Mat system = hom_system(mi, mj);
      const std::size_t plain = system.cols() - rref(system).pivots.size();
      const std::size_t modular = modp::nullity(system, kCheckPrime);
      ok = ok && fast == expected && plain == expected && modular == expected;
      row.push_back(fast);
    }
    table.push_back(std::move(row));
  }
  checks.push_back({"dim Hom(I_i, I_j) = max(0, i-j+1) for i,j <= 6", ok, {{"table", table}}});
  return checks;
}

std::vector<Representation> short_indecomposables() {
  std::vector<Representation> out;
  for (std::size_t n = 1; n <= 3; ++n) out.push_back(kronecker_preprojective(n));
  for (std::size_t n = 1; n <= 3; ++n) out.push_back(kronecker_preinjective(n));
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& l : {lam(0), lam(1), RegularParameter::infinity()}) out.push_back(kronecker_regular(n, l));
  return out;
}

std::vector<Check> harada_sai(std::uint64_t seed) {
  FamilyAnalysis fam(short_indecomposables(), seed);
  HaradaSaiResult r = harada_sai_check(fam, 5);
  Json labels = Json::array();
  for (const auto& m : fam.members()) labels.push_back(m.label());
  return {{"length <= 5 sample", r.pass,
           {{"members", labels},
            {"depth", r.depth ? Json(*r.depth) : Json()},
            {"bound", r.bound}}}};
}

std::vector<Check> regular_support(std::uint64_t seed) {
  std::vector<Check> checks;
  for (std::size_t n = 3; n <= 10; ++n) {
    std::vector<Representation> members;
    for (std::size_t l = 0; l < n; ++l) members.push_back(kronecker_regular(1, lam(static_cast<long>(l))));
    EndosocleReport r = family_endosocle(FamilyAnalysis(members, seed));
    checks.push_back({"N=" + std::to_string(n), r.support.size() == n, {{"support_size", r.support.size()}}});
  }
  return checks;
}

std::vector<Check> matrix_subgroups_suite(std::uint64_t seed) {
  const auto pres = kronecker();
  const std::vector<std::pair<std::string, std::vector<Representation>>> modules{
      {"I1+I2", {kronecker_preinjective(1), kronecker_preinjective(2)}},
      {"P2+I2", {kronecker_preprojective(2), kronecker_preinjective(2)}}};
  std::vector<Check> checks;
  for (const auto& [name, parts] : modules) {
    DirectSum sum = direct_sum(parts);
    std::mt19937_64 rng(seed);
    std::size_t invariant = 0, distributes = 0;
    constexpr std::size_t kSamples = 100;
    for (std::size_t s = 0; s < kSamples; ++s) {
      const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
      PointedMatrix pm = random_pointed_matrix(*pres, rows, cols, rng);
      Subspace whole = evaluate(pm, sum.sum);
      invariant += check_endo_invariant(whole, sum.sum);
      Subspace assembled = Subspace::zero(sum.sum.total_dim());
      for (std::size_t k = 0; k < parts.size(); ++k)
        assembled = assembled + evaluate(pm, parts[k]).mapped(sum.embeddings[k].total());
      distributes += assembled == whole;
    }
    checks.push_back({name + " endo-invariant", invariant == kSamples, {{"passed", invariant}, {"samples", kSamples}}});
    checks.push_back({name + " commutes with direct sum", distributes == kSamples,
                      {{"passed", distributes}, {"samples", kSamples}}});
  }
  return checks;
}

std::vector<std::pair<std::string, std::vector<Representation>>> mixed_families() {
  return {
      {"I1,I2", {kronecker_preinjective(1), kronecker_preinjective(2)}},
      {"I1,I2,I3", preinjectives(1, 3)},
      {"P2,I2,R1(0)", {kronecker_preprojective(2), kronecker_preinjective(2), kronecker_regular(1, lam(0))}},
      {"R1(0),R1(1),R2(0)", {kronecker_regular(1, lam(0)), kronecker_regular(1, lam(1)), kronecker_regular(2, lam(0))}},
      {"P1,P2,I1,R1(inf)",
       {kronecker_preprojective(1), kronecker_preprojective(2), kronecker_preinjective(1),
        kronecker_regular(1, RegularParameter::infinity())}},
  };
}

std::vector<Check> two_route(std::uint64_t seed) {
  std::vector<Check> checks;
  for (const auto& [name, members] : mixed_families()) {
    FamilyAnalysis fam(members, seed);
    EndosocleReport r = family_endosocle(fam);
    DirectSum sum = direct_sum(members);
    Subspace via_family = embed_report(fam, r, sum);
    Subspace via_sum = endosocle(sum.sum).total(sum.sum);
    checks.push_back({name, via_family == via_sum, {{"dim_family_route", via_family.dim()}, {"dim_sum_route", via_sum.dim()}}});
  }
  return checks;
}

struct SuiteEntry {
  std::string name;
  std::vector<std::string> aliases;
  std::string anchor;
  std::vector<Check> (*run)(std::uint64_t);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> suites{
      {"preinjective-endosocle", {"example-c2"},
       "endosocle of the sum of all preinjectives is the first preinjective plus the socle of the second",
       preinjective_endosocle},
      {"trimmed-preinjectives", {}, "endosocle of the preinjectives from index m on is the m-th preinjective",
       trimmed_preinjectives},
      {"preprojective-vanishing", {}, "sums of preprojectives have zero endosocle away from the truncation edge",
       preprojective_vanishing},
      {"relative-series", {}, "relative endosocle series of the preinjectives removes one summand per step",
       relative_series},
      {"power-endosocle", {"lemma-b1"}, "endosocle of a power is one homogeneous component", power_endosocle_suite},
      {"duality", {"examples-o"},
       "vector-space duality is reflexive, reverses Hom, and turns right preinjectives into preprojectives",
       duality_suite},
      {"hom-table", {}, "Hom dimensions between preinjectives", hom_table},
      {"harada-sai", {}, "composites of 2^b-1 radical maps between modules of length at most b vanish", harada_sai},
      {"regular-support", {"corollary-n"}, "regular simple families have endosocle support of unbounded size",
       regular_support},
      {"matrix-subgroups", {}, "matrix subgroups are endo-submodules and commute with direct sums",
       matrix_subgroups_suite},
      {"two-route", {"lemma-b2"},
       "family endosocle from non-isomorphisms equals the radical kernel on the direct sum", two_route},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s.name);
  return out;
}

std::optional<std::string> resolve_suite(const std::string& name) {
  for (const auto& s : registry()) {
    if (s.name == name) return s.name;
    if (std::find(s.aliases.begin(), s.aliases.end(), name) != s.aliases.end()) return s.name;
  }
  return std::nullopt;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  auto canonical = resolve_suite(name);
  if (!canonical) throw std::invalid_argument("unknown suite: " + name);
  for (const auto& s : registry()) {
    if (s.name != *canonical) continue;
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r{s.name, s.anchor, s.run(seed), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw std::logic_error("suite registry out of sync");
}

}  // namespace endoscope
