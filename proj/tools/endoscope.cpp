// endoscope: command-line front end for the endo-structure toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 inconclusive computation.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "endoscope/harness.hpp"

using namespace endoscope;

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

struct Common {
  std::uint64_t seed = 0;
  std::string field = "q";
};

struct FamilyOptions {
  std::string family;
  std::string range = "1..4";
  std::size_t size = 1;
  std::string lambdas;
  std::string file;

  void attach(CLI::App* app, bool require_family = true) {
    auto* opt = app->add_option("--family", family, "preinj | preproj | regular | file");
    if (require_family) opt->required();
    app->add_option("--range", range, "index range a..b (regular: integer parameters)");
    app->add_option("--size", size, "dimension n of each regular member R_n(lambda)");
    app->add_option("--lambdas", lambdas, "comma-separated regular parameters, e.g. 0,1,1/2,inf");
    app->add_option("--file", file, "JSON file with representations (family=file)");
  }

  FamilySpec spec() const {
    FamilySpec s;
    s.kind = parse_family_kind(family);
    std::tie(s.first, s.last) = parse_range(range);
    s.regular_size = size;
    s.path = file;
    if (s.kind == FamilyKind::File && file.empty()) throw std::invalid_argument("--family file needs --file");
    std::stringstream in(lambdas);
    for (std::string item; std::getline(in, item, ',');)
      if (!item.empty()) s.lambdas.push_back(RegularParameter::parse(item));
    return s;
  }
};

Field require_rationals(const Common& c, const std::string& command) {
  Field f = Field::parse(c.field);
  if (!f.is_rational())
    throw UnsupportedField(command + " needs the Jacobson radical, which is computed in characteristic 0 only");
  return f;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

Representation load_module(const std::string& text) {
  if (text.rfind("file:", 0) == 0) {
    std::ifstream in(text.substr(5));
    if (!in) throw std::invalid_argument("cannot open " + text.substr(5));
    return representation_from_json(Json::parse(in));
  }
  // A '+'-separated list of names is read as a direct sum.
  std::vector<Representation> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, '+');) parts.push_back(parse_module(item));
  if (parts.size() == 1) return parts.front();
  return direct_sum(parts).sum;
}

std::string command_line(int argc, char** argv) {
  std::string s = "endoscope";
  for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Endo-structure invariants of quiver representations in exact arithmetic"};
  app.require_subcommand(1);
  // Subcommands hand unknown options back here, so --seed/--field work anywhere.
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "seed for randomized searches")->capture_default_str();
  app.add_option("--field", common.field, "q or fp:<p>; fp is allowed for rank-only commands")->capture_default_str();

  // endosoc
  auto* endosoc_cmd = app.add_subcommand("endosoc", "family endosocle B_i and its support");
  FamilyOptions endosoc_fam;
  std::string endosoc_format = "json";
  endosoc_fam.attach(endosoc_cmd);
  endosoc_cmd->add_option("--format", endosoc_format, "json | text")->check(CLI::IsMember({"json", "text"}));

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "an invariant across truncations");
  FamilyOptions sweep_fam;
  std::string invariant, sweep_out, sweep_format;
  std::size_t sweep_min = 3, sweep_max = 0;
  sweep_fam.attach(sweep_cmd);
  sweep_cmd->add_option("--invariant", invariant, "endosoc-support | endosoc-dim | relative-length | radical-depth")
      ->required();
  sweep_cmd->add_option("--min", sweep_min, "smallest truncation")->capture_default_str();
  sweep_cmd->add_option("--max", sweep_max, "largest truncation")->required();
  sweep_cmd->add_option("--out", sweep_out, "output file (stdout when omitted)");
  sweep_cmd->add_option("--format", sweep_format, "csv | json (default: from --out extension, else csv)")
      ->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite, or 'all'");
  std::string suite;
  verify_cmd->add_option("suite", suite, "suite name")->required();

  // radical-profile
  auto* profile_cmd = app.add_subcommand("radical-profile", "dimensions of rad^d between family members");
  FamilyOptions profile_fam;
  std::size_t dmax = 64;
  bool left = false;
  profile_fam.attach(profile_cmd);
  profile_cmd->add_option("--dmax", dmax, "largest depth computed")->capture_default_str();
  profile_cmd->add_flag("--left", left, "profile of the dual family (left T-nilpotence)");

  // series
  auto* series_cmd = app.add_subcommand("series", "relative endosocle series of a family");
  FamilyOptions series_fam;
  series_fam.attach(series_cmd);

  // hom
  auto* hom_cmd = app.add_subcommand("hom", "dim Hom(M, N); supports --field fp:<p>");
  std::string hom_source, hom_target;
  hom_cmd->add_option("source", hom_source, "module: I3, P2, S1, R2(0), A+B, or file:<path>")->required();
  hom_cmd->add_option("target", hom_target, "module, same syntax")->required();

  // transversal
  auto* trans_cmd = app.add_subcommand("transversal", "isomorphism classes of a family");
  FamilyOptions trans_fam;
  trans_fam.attach(trans_cmd);

  // matsub eval
  auto* matsub_cmd = app.add_subcommand("matsub", "matrix subgroups");
  matsub_cmd->require_subcommand(1);
  auto* eval_cmd = matsub_cmd->add_subcommand("eval", "evaluate a pointed matrix on a module");
  std::string matrix_path, matsub_module;
  eval_cmd->add_option("--matrix", matrix_path, "pointed matrix JSON file")->required();
  eval_cmd->add_option("--module", matsub_module, "module: I3, I1+I2, file:<path>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  const std::string invocation = command_line(argc, argv);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*endosoc_cmd) {
      const Field field = require_rationals(common, "endosoc");
      Family fam = build_family(endosoc_fam.spec());
      FamilyAnalysis analysis(fam.members, common.seed);
      Json results = endosocle_json(fam, family_endosocle(analysis));
      if (endosoc_format == "text") {
        std::cout << "support:";
        for (const auto& i : results["support"]) std::cout << ' ' << i;
        std::cout << "\ntotal_dim: " << results["total_dim"] << '\n';
        for (auto& [k, v] : results["B"].items()) std::cout << "B_" << k << ": " << v.dump() << '\n';
      } else {
        std::cout << make_report(invocation, common.seed, field, fam.members.size(), results, seconds_since(start))
                         .dump(2)
                  << '\n';
      }
      return 0;
    }

    if (*sweep_cmd) {
      const Field field = require_rationals(common, "sweep");
      auto rows = sweep(sweep_fam.spec(), parse_invariant(invariant), sweep_min, sweep_max, common.seed);
      std::string format = sweep_format;
      if (format.empty())
        format = sweep_out.size() >= 5 && sweep_out.substr(sweep_out.size() - 5) == ".json" ? "json" : "csv";
      if (format == "csv") {
        emit(sweep_csv(rows), sweep_out);
      } else {
        Json trunc{{"min", sweep_min}, {"max", sweep_max}};
        emit(make_report(invocation, common.seed, field, trunc, sweep_json(rows), seconds_since(start)).dump(2) + "\n",
             sweep_out);
      }
      return 0;
    }

    if (*verify_cmd) {
      const Field field = require_rationals(common, "verify");
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else if (auto canonical = resolve_suite(suite)) {
        names.push_back(*canonical);
      } else {
        std::cerr << "unknown suite '" << suite << "'; known suites:";
        for (const auto& n : suite_names()) std::cerr << ' ' << n;
        std::cerr << '\n';
        return kUsage;
      }
      Json results = Json::array();
      bool pass = true;
      for (const auto& n : names) {
        SuiteResult r = run_suite(n, common.seed);
        pass = pass && r.pass();
        results.push_back(r.to_json());
        std::cerr << (r.pass() ? "PASS " : "FAIL ") << r.suite << '\n';
      }
      std::cout << make_report(invocation, common.seed, field, nullptr, results, seconds_since(start)).dump(2) << '\n';
      return pass ? 0 : kFailure;
    }

    if (*profile_cmd) {
      const Field field = require_rationals(common, "radical-profile");
      Family fam = build_family(profile_fam.spec());
      RadicalProfile p = left ? left_profile(fam.members, dmax, common.seed)
                              : radical_profile(FamilyAnalysis(fam.members, common.seed), dmax);
      Json results = profile_json(fam, p);
      results["side"] = left ? "left" : "right";
      std::cout << make_report(invocation, common.seed, field, fam.members.size(), results, seconds_since(start)).dump(2)
                << '\n';
      return 0;
    }

    if (*series_cmd) {
      const Field field = require_rationals(common, "series");
      Family fam = build_family(series_fam.spec());
      FamilyAnalysis analysis(fam.members, common.seed);
      RelativeSeriesReport r = relative_endosocle_series(analysis);
      Json terms = Json::array();
      for (const auto& t : r.terms) terms.push_back(endosocle_json(fam, t));
      Json results{{"length", r.length()}, {"terms", terms}};
      std::cout << make_report(invocation, common.seed, field, fam.members.size(), results, seconds_since(start)).dump(2)
                << '\n';
      return 0;
    }

    if (*hom_cmd) {
      const Field field = Field::parse(common.field);
      Representation m = load_module(hom_source), n = load_module(hom_target);
      Json results{{"source", m.label()}, {"target", n.label()}, {"dim", hom_dimension(m, n, field)}};
      std::cout << make_report(invocation, common.seed, field, nullptr, results, seconds_since(start)).dump(2) << '\n';
      return 0;
    }

    if (*trans_cmd) {
      const Field field = require_rationals(common, "transversal");
      Family fam = build_family(trans_fam.spec());
      Transversal t = transversal(fam.members, common.seed);
      Json reps = Json::array();
      for (std::size_t r = 0; r < t.representatives.size(); ++r)
        reps.push_back({{"index", fam.indices[t.representatives[r]]},
                        {"label", fam.members[t.representatives[r]].label()},
                        {"multiplicity", t.multiplicities[r]}});
      Json results{{"size", t.representatives.size()}, {"representatives", reps}, {"warnings", t.warnings}};
      for (const auto& w : t.warnings) std::cerr << "warning: " << w << '\n';
      std::cout << make_report(invocation, common.seed, field, fam.members.size(), results, seconds_since(start)).dump(2)
                << '\n';
      return 0;
    }

    if (*eval_cmd) {
      const Field field = Field::parse(common.field);
      if (!field.is_rational()) throw UnsupportedField("matsub eval works over the rationals");
      Representation m = load_module(matsub_module);
      std::ifstream in(matrix_path);
      if (!in) throw std::invalid_argument("cannot open " + matrix_path);
      PointedMatrix pm = pointed_matrix_from_json(Json::parse(in), *m.presentation());
      Subspace s = evaluate(pm, m);
      Json results{{"module", m.label()}, {"subgroup", to_json(s)}, {"endo_invariant", check_endo_invariant(s, m)}};
      std::cout << make_report(invocation, common.seed, field, nullptr, results, seconds_since(start)).dump(2) << '\n';
      return 0;
    }
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const UnsupportedField& e) {
    std::cerr << "unsupported field: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "bad JSON input: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
