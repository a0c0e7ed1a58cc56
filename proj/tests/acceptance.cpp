// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "endoscope/harness.hpp"
#include "hom_oracle.hpp"

using namespace endoscope;

namespace {

struct Outcome {
  bool pass = false;
  std::string note;
};

Outcome suite(const std::string& name) {
  SuiteResult r = run_suite(name);
  std::string note;
  for (const auto& c : r.checks)
    if (!c.pass) note += " failed[" + c.name + ": " + c.detail.dump() + "]";
  return {r.pass(), note};
}

Outcome hom_table_with_oracle() {
  Outcome o = suite("hom-table");
  std::size_t disagreements = 0;
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = 1; j <= 6; ++j) {
      const std::size_t fast = hom_basis(kronecker_preinjective(i), kronecker_preinjective(j)).dim();
      const std::size_t brute = oracle::hom_dimension(oracle::preinjective(i), oracle::preinjective(j));
      const std::size_t formula = i >= j ? i - j + 1 : 0;
      disagreements += fast != brute || brute != formula;
    }
  if (disagreements) o.note += " oracle disagreements=" + std::to_string(disagreements);
  o.pass = o.pass && disagreements == 0;
  return o;
}

Outcome harada_sai_with_depth() {
  SuiteResult r = run_suite("harada-sai");
  const Json& d = r.checks.at(0).detail;
  return {r.pass(), " depth=" + d["depth"].dump() + " bound=" + d["bound"].dump()};
}

struct Criterion {
  int number;
  std::string title;
  std::function<Outcome()> run;
  std::optional<double> limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "preinjective family endosocle, N=4..12", [] { return suite("preinjective-endosocle"); }, 10.0},
      {2, "trimmed preinjectives, m=2..6", [] { return suite("trimmed-preinjectives"); }, 10.0},
      {3, "preprojective vanishing, N=3..10", [] { return suite("preprojective-vanishing"); }, 10.0},
      {4, "relative endosocle series of preinjectives, N=5,8", [] { return suite("relative-series"); }, std::nullopt},
      {5, "endosocle of powers of I2 and R2(0)", [] { return suite("power-endosocle"); }, std::nullopt},
      {6, "duality on preinjectives, preprojectives, regulars up to 5", [] { return suite("duality"); }, std::nullopt},
      {7, "Hom table of preinjectives vs independent oracle", hom_table_with_oracle, std::nullopt},
      {8, "radical profile of length<=5 indecomposables within 2^5-1", harada_sai_with_depth, 60.0},
      {9, "regular simple family support size N, N=3..10", [] { return suite("regular-support"); }, std::nullopt},
      {10, "100 random matrix subgroups on I1+I2 and P2+I2", [] { return suite("matrix-subgroups"); }, 30.0},
      {11, "two-route endosocle on five mixed families", [] { return suite("two-route"); }, std::nullopt},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string(" exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds && secs >= *c.limit_seconds) {
      o.pass = false;
      o.note += " over time limit " + std::to_string(*c.limit_seconds) + "s";
    }
    failures += !o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << " - " << c.title << " ("
              << timing << ")" << o.note << '\n';
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << (criteria.size() - failures) << "/" << criteria.size() << '\n';
  return failures ? 1 : 0;
}
