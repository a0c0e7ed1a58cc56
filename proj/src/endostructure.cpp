#include "endoscope/endostructure.hpp"

#include <algorithm>
#include <stdexcept>

namespace endoscope {

namespace {

// Common kernel at each vertex of a list of morphisms out of `m`.
SubspaceFamily common_kernel(const Representation& m, const std::vector<Morphism>& maps) {
  SubspaceFamily out;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    std::vector<Mat> blocks;
    for (const auto& f : maps)
      if (f.blocks[v].rows() > 0) blocks.push_back(f.blocks[v]);
    out.parts.push_back(blocks.empty() ? Subspace::full(m.dim(v)) : kernel_basis(vstack(blocks, m.dim(v))));
  }
  return out;
}

}  // namespace

SubspaceFamily endosocle(const Representation& m, const EndoRing& e) {
  return common_kernel(m, e.radical_morphisms());
}

SubspaceFamily endosocle(const Representation& m, const Field& field) {
  EndoRing e = end_ring(m);
  jacobson_radical(e, field);
  return endosocle(m, e);
}

const SubspaceFamily& EndosocleReport::piece_for(std::size_t position) const {
  auto it = std::find(members.begin(), members.end(), position);
  if (it == members.end()) throw std::out_of_range("member not part of this report");
  return pieces[static_cast<std::size_t>(it - members.begin())];
}

EndosocleReport family_endosocle(const FamilyAnalysis& family, const std::vector<std::size_t>& active) {
  EndosocleReport report;
  report.members = active;
  std::sort(report.members.begin(), report.members.end());
  report.pieces.resize(report.members.size());
  parallel_for(report.members.size(), [&](std::size_t k) {
    const std::size_t i = report.members[k];
    std::vector<Morphism> maps;
    for (std::size_t j : report.members)
      for (const auto& f : family.noniso(i, j).basis()) maps.push_back(f);
    report.pieces[k] = common_kernel(family.member(i), maps);
  });
  for (std::size_t k = 0; k < report.members.size(); ++k) {
    const std::size_t d = report.pieces[k].total_dim();
    report.total_dim += d;
    if (d > 0) report.support.push_back(report.members[k]);
  }
  return report;
}

EndosocleReport family_endosocle(const FamilyAnalysis& family) {
  std::vector<std::size_t> all(family.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return family_endosocle(family, all);
}

EndosocleReport family_endosocle(const std::vector<Representation>& members, std::uint64_t seed) {
  return family_endosocle(FamilyAnalysis(members, seed));
}

SubspaceFamily power_endosocle(const Representation& m, std::size_t k) {
  if (k == 0) throw std::invalid_argument("power_endosocle needs k >= 1");
  std::vector<Representation> copies(k, m);
  return endosocle(direct_sum(m.presentation(), copies).sum);
}

SeriesReport endosocle_series(const Representation& m, const Field& field) {
  EndoRing e = end_ring(m);
  jacobson_radical(e, field);
  const auto radical = e.radical_morphisms();
  SeriesReport report;
  SubspaceFamily current = SubspaceFamily::zero(m);
  while (true) {
    SubspaceFamily next;
    for (std::size_t v = 0; v < m.dims().size(); ++v) {
      // x in soc_{t+1} iff g x in soc_t for every radical g.
      const Mat ann = current.parts[v].annihilator();
      std::vector<Mat> rows;
      for (const auto& g : radical)
        if (ann.rows() > 0) rows.push_back(ann * g.blocks[v]);
      next.parts.push_back(rows.empty() ? Subspace::full(m.dim(v)) : kernel_basis(vstack(rows, m.dim(v))));
    }
    if (next == current) break;
    if (!next.contains(current)) throw std::logic_error("endosocle series is not ascending");
    report.terms.push_back(next);
    current = std::move(next);
  }
  if (m.total_dim() > 0 && current.total_dim() != m.total_dim())
    throw std::logic_error("endosocle series stalled below the whole module");
  return report;
}

std::vector<std::vector<std::size_t>> RelativeSeriesReport::supports() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& t : terms) out.push_back(t.support);
  return out;
}

Subspace embed_report(const FamilyAnalysis& family, const EndosocleReport& report, const DirectSum& sum) {
  Subspace acc = Subspace::zero(sum.sum.total_dim());
  for (std::size_t k = 0; k < report.members.size(); ++k) {
    const std::size_t i = report.members[k];
    const Representation& mi = family.member(i);
    Subspace piece = report.pieces[k].total(mi);
    acc = acc + piece.mapped(sum.embeddings[i].total());
  }
  return acc;
}

RelativeSeriesReport relative_endosocle_series(const FamilyAnalysis& family) {
  RelativeSeriesReport series;
  std::vector<std::size_t> remaining(family.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  while (!remaining.empty()) {
    EndosocleReport term = family_endosocle(family, remaining);
    if (term.support.empty()) break;
    std::vector<std::size_t> rest;
    std::set_difference(remaining.begin(), remaining.end(), term.support.begin(), term.support.end(),
                        std::back_inserter(rest));
    remaining = std::move(rest);
    series.terms.push_back(std::move(term));
  }

  if (family.size() > 0 && !series.terms.empty()) {
    DirectSum sum = direct_sum(family.member(0).presentation(), family.members());
    Subspace total = Subspace::zero(sum.sum.total_dim());
    std::size_t dims = 0;
    for (const auto& t : series.terms) {
      total = total + embed_report(family, t, sum);
      dims += t.total_dim;
    }
    if (total.dim() != dims) throw std::logic_error("relative endosocle terms do not form a direct sum");
  }
  return series;
}

}  // namespace endoscope
