#pragma once

// JSON dialect shared by the CLI and report files.  Rationals are strings
// "p/q" (or "p"); matrices are arrays of rows; vertex- and arrow-indexed data
// are objects keyed by name.

#include <json.hpp>

#include "endoscope/endostructure.hpp"
#include "endoscope/homalg.hpp"
#include "endoscope/matrix_subgroups.hpp"
#include "endoscope/representation.hpp"
#include "endoscope/tnilpotence.hpp"

namespace endoscope {

using Json = nlohmann::json;

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const Mat& m);
/// `rows` and `cols` are needed to read empty matrices unambiguously.
Mat mat_from_json(const Json& j, std::size_t rows, std::size_t cols);

Json to_json(const AlgebraPresentation& p);
PresentationPtr presentation_from_json(const Json& j);

/// Terms as [{"coeff", "path":[arrow names]}], or {"coeff", "vertex"} for e_v.
Json to_json(const AlgebraElement& a, const AlgebraPresentation& p);
AlgebraElement element_from_json(const Json& j, const AlgebraPresentation& p);

Json to_json(const Representation& r);
/// "algebra" may be omitted or the string "kronecker" for the built-in quiver.
Representation representation_from_json(const Json& j);

Json to_json(const Morphism& f, const Quiver& q);
Json to_json(const SubspaceFamily& f, const Quiver& q);
Json to_json(const Subspace& s);

Json to_json(const PointedMatrix& pm, const AlgebraPresentation& p);
/// {"rows","cols","pointer","entries":[[element, ...], ...]}
PointedMatrix pointed_matrix_from_json(const Json& j, const AlgebraPresentation& p);

}  // namespace endoscope
