#include "endoscope/tnilpotence.hpp"

#include <map>
#include <stdexcept>

namespace endoscope {

RadicalProfile radical_profile(const FamilyAnalysis& family, std::size_t d_max) {
  const std::size_t n = family.size();
  RadicalProfile profile;
  profile.size = n;

  auto record = [&](std::vector<HomSpace> level) {
    std::vector<std::size_t> dims(n * n);
    for (std::size_t k = 0; k < n * n; ++k) dims[k] = level[k].dim();
    profile.dims.push_back(std::move(dims));
    profile.spaces.push_back(std::move(level));
  };

  std::vector<HomSpace> homs(n * n), rad1(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      homs[i * n + j] = family.hom(i, j);
      rad1[i * n + j] = family.noniso(i, j);
    }
  record(std::move(homs));
  if (d_max == 0) return profile;
  record(rad1);

  for (std::size_t d = 1;; ++d) {
    const auto& current = profile.spaces[d];
    bool all_zero = true;
    for (const auto& h : current) all_zero = all_zero && h.dim() == 0;
    if (all_zero) {
      profile.vanishing_depth = d;
      break;
    }
    if (d == d_max) break;

    std::vector<HomSpace> next(n * n);
    parallel_for(n * n, [&](std::size_t idx) {
      const std::size_t i = idx / n, j = idx % n;
      const auto& src = family.member(i).dims();
      const auto& tgt = family.member(j).dims();
      std::size_t flat = 0;
      for (std::size_t v = 0; v < src.size(); ++v) flat += src[v] * tgt[v];
      SpanBuilder span(flat);
      std::vector<Morphism> basis;
      for (std::size_t k = 0; k < n; ++k) {
        const auto& first = current[i * n + k].basis();
        const auto& second = rad1[k * n + j].basis();
        for (const auto& f : first)
          for (const auto& g : second) {
            Morphism c = g * f;
            if (span.insert(c.flatten())) basis.push_back(std::move(c));
          }
      }
      next[idx] = HomSpace(src, tgt, std::move(basis));
    });
    record(std::move(next));
  }
  return profile;
}

RadicalProfile left_profile(const std::vector<Representation>& members, std::size_t d_max,
                            std::uint64_t seed) {
  std::vector<Representation> duals;
  for (const auto& m : members) duals.push_back(dual(m));
  return radical_profile(FamilyAnalysis(std::move(duals), seed), d_max);
}

HaradaSaiResult harada_sai_check(const FamilyAnalysis& family, std::size_t length_bound) {
  if (length_bound == 0 || length_bound > 20) throw std::invalid_argument("length bound must be in 1..20");
  for (const auto& m : family.members())
    if (m.length() > length_bound)
      throw std::invalid_argument("member " + m.label() + " is longer than the length bound");
  HaradaSaiResult result;
  result.length_bound = length_bound;
  result.bound = (std::size_t{1} << length_bound) - 1;
  RadicalProfile profile = radical_profile(family, result.bound + 1);
  result.depth = profile.vanishing_depth;
  result.pass = result.depth && *result.depth <= result.bound;
  return result;
}

std::optional<WitnessChain> right_witness(const FamilyAnalysis& family, std::size_t start, const Vec& x,
                                          std::size_t d, bool distinct) {
  if (start >= family.size()) throw std::out_of_range("witness start index out of range");
  if (x.size() != family.member(start).total_dim()) throw DimensionError("witness element has the wrong length");
  if (is_zero(x)) throw std::invalid_argument("witness element must be nonzero");

  constexpr std::size_t kFrontierCap = 200000;
  std::vector<WitnessChain> frontier{WitnessChain{{start}, {}, {x}}};
  for (std::size_t step = 0; step < d; ++step) {
    std::map<std::tuple<std::vector<std::size_t>, std::size_t, Vec>, WitnessChain> next;
    for (const auto& chain : frontier) {
      const std::size_t k = chain.indices.back();
      for (std::size_t j = 0; j < family.size(); ++j) {
        if (distinct && std::find(chain.indices.begin(), chain.indices.end(), j) != chain.indices.end())
          continue;
        for (const auto& f : family.noniso(k, j).basis()) {
          Vec y = f.apply(chain.trail.back());
          if (is_zero(y)) continue;
          std::vector<std::size_t> visited;
          if (distinct) {
            visited = chain.indices;
            std::sort(visited.begin(), visited.end());
          }
          auto key = std::make_tuple(std::move(visited), j, y);
          if (next.count(key)) continue;
          WitnessChain longer = chain;
          longer.indices.push_back(j);
          longer.maps.push_back(f);
          longer.trail.push_back(std::move(y));
          next.emplace(std::move(key), std::move(longer));
          if (next.size() > kFrontierCap) throw Inconclusive("witness search frontier exceeded its cap");
        }
      }
    }
    if (next.empty()) return std::nullopt;
    frontier.clear();
    for (auto& [key, chain] : next) frontier.push_back(std::move(chain));
  }
  return frontier.front();
}

}  // namespace endoscope
