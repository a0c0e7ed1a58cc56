#include "endoscope/serialize.hpp"

#include <stdexcept>

namespace endoscope {

Json to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(mpz_class(std::to_string(j.get<long long>())));
  throw std::invalid_argument("rational must be a string or an integer: " + j.dump());
}

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  Mat m(rows, cols);
  if (rows == 0 || cols == 0) {
    // Accept [] or a list of empty rows for degenerate shapes.
    for (const auto& row : j)
      if (!row.is_array() || !row.empty()) throw DimensionError("nonempty data for an empty matrix");
    return m;
  }
  if (j.size() != rows) throw DimensionError("matrix has the wrong number of rows");
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw DimensionError("matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

// ---------------------------------------------------------------- algebra

namespace {

Json term_to_json(const Path& p, const Scalar& c, const AlgebraPresentation& pres) {
  Json t{{"coeff", to_json(c)}};
  if (p.is_trivial()) {
    t["vertex"] = pres.quiver().vertices()[p.vertex];
  } else {
    Json names = Json::array();
    for (auto a : p.arrows) names.push_back(pres.quiver().arrow(a).name);
    t["path"] = std::move(names);
  }
  return t;
}

Path term_path(const Json& t, const AlgebraPresentation& pres) {
  if (t.contains("vertex")) {
    auto v = pres.quiver().vertex_index(t.at("vertex").get<std::string>());
    if (!v) throw std::invalid_argument("unknown vertex in algebra element");
    return Path::trivial(*v);
  }
  return pres.path(t.at("path").get<std::vector<std::string>>());
}

}  // namespace

Json to_json(const AlgebraElement& a, const AlgebraPresentation& p) {
  Json terms = Json::array();
  for (const auto& [path, c] : a.terms()) terms.push_back(term_to_json(path, c, p));
  return terms;
}

AlgebraElement element_from_json(const Json& j, const AlgebraPresentation& p) {
  if (!j.is_array()) throw std::invalid_argument("algebra element must be an array of terms");
  AlgebraElement out;
  for (const auto& t : j) out.add_term(term_path(t, p), scalar_from_json(t.value("coeff", Json("1"))));
  return out;
}

Json to_json(const AlgebraPresentation& p) {
  Json arrows = Json::array();
  for (const auto& a : p.quiver().arrows())
    arrows.push_back({{"name", a.name},
                      {"source", p.quiver().vertices()[a.source]},
                      {"target", p.quiver().vertices()[a.target]}});
  Json relations = Json::array();
  for (const auto& r : p.relations()) relations.push_back(to_json(r, p));
  return {{"vertices", p.quiver().vertices()}, {"arrows", arrows}, {"relations", relations}};
}

PresentationPtr presentation_from_json(const Json& j) {
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "kronecker")) return kronecker();
  if (j.is_string() && j.get<std::string>() == "kronecker-op") return kronecker_opposite();
  if (!j.is_object()) throw std::invalid_argument("algebra must be an object or \"kronecker\"");
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const auto& a : j.at("arrows"))
    arrows.emplace_back(a.at("name").get<std::string>(), a.at("source").get<std::string>(),
                        a.at("target").get<std::string>());
  Quiver q(j.at("vertices").get<std::vector<std::string>>(), std::move(arrows));
  // Relations need a presentation to resolve arrow names.
  AlgebraPresentation bare(q, {});
  std::vector<AlgebraElement> relations;
  for (const auto& r : j.value("relations", Json::array())) relations.push_back(element_from_json(r, bare));
  AlgebraPresentation pres(std::move(q), std::move(relations));
  if (pres == *kronecker()) return kronecker();
  if (pres == *kronecker_opposite()) return kronecker_opposite();
  return std::make_shared<const AlgebraPresentation>(std::move(pres));
}

// ---------------------------------------------------------------- modules

Json to_json(const Representation& r) {
  const Quiver& q = r.quiver();
  Json dims = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[q.vertices()[v]] = r.dim(v);
  Json mats = Json::object();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) mats[q.arrow(a).name] = to_json(r.arrow(a));
  Json out{{"algebra", to_json(*r.presentation())}, {"dims", dims}, {"matrices", mats}};
  if (!r.label().empty()) out["label"] = r.label();
  return out;
}

Representation representation_from_json(const Json& j) {
  PresentationPtr pres = presentation_from_json(j.contains("algebra") ? j.at("algebra") : Json());
  const Quiver& q = pres->quiver();
  std::vector<std::size_t> dims(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[v] = j.at("dims").at(q.vertices()[v]).get<std::size_t>();
  std::vector<Mat> mats;
  const Json& given = j.at("matrices");
  for (const auto& a : q.arrows()) {
    const std::size_t rows = dims[a.target], cols = dims[a.source];
    if (!given.contains(a.name)) {
      if (rows * cols != 0) throw std::invalid_argument("missing matrix for arrow " + a.name);
      mats.emplace_back(rows, cols);
      continue;
    }
    mats.push_back(mat_from_json(given.at(a.name), rows, cols));
  }
  return Representation(pres, std::move(dims), std::move(mats), j.value("label", std::string()));
}

Json to_json(const Morphism& f, const Quiver& q) {
  Json out = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out[q.vertices()[v]] = to_json(f.blocks.at(v));
  return out;
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis_vectors()) {
    Json col = Json::array();
    for (const auto& x : v) col.push_back(to_json(x));
    basis.push_back(std::move(col));
  }
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

Json to_json(const SubspaceFamily& f, const Quiver& q) {
  Json out = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out[q.vertices()[v]] = to_json(f.parts.at(v));
  return out;
}

// ---------------------------------------------------------------- pointed matrices

Json to_json(const PointedMatrix& pm, const AlgebraPresentation& p) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < pm.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < pm.cols(); ++c) row.push_back(to_json(pm(r, c), p));
    rows.push_back(std::move(row));
  }
  return {{"rows", pm.rows()}, {"cols", pm.cols()}, {"pointer", pm.pointer()}, {"entries", rows}};
}

PointedMatrix pointed_matrix_from_json(const Json& j, const AlgebraPresentation& p) {
  const Json& rows = j.at("entries");
  const std::size_t r = j.value("rows", rows.size());
  const std::size_t c = j.value("cols", rows.empty() ? std::size_t{0} : rows[0].size());
  if (rows.size() != r) throw DimensionError("pointed matrix row count mismatch");
  std::vector<AlgebraElement> entries;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("pointed matrix row length mismatch");
    for (const auto& e : row) entries.push_back(element_from_json(e, p));
  }
  return PointedMatrix(r, c, std::move(entries), j.value("pointer", std::size_t{0}));
}

}  // namespace endoscope
