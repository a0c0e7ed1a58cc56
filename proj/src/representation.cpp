#include "endoscope/representation.hpp"

#include <numeric>
#include <stdexcept>

namespace endoscope {

Representation::Representation(PresentationPtr presentation, std::vector<std::size_t> dims,
                               std::vector<Mat> arrow_matrices, std::string label)
    : presentation_(std::move(presentation)),
      dims_(std::move(dims)),
      arrows_(std::move(arrow_matrices)),
      label_(std::move(label)) {
  if (!presentation_) throw std::invalid_argument("representation without presentation");
  const Quiver& q = presentation_->quiver();
  if (dims_.size() != q.vertex_count()) throw DimensionError("dimension vector length mismatch");
  if (arrows_.size() != q.arrow_count()) throw DimensionError("arrow matrix count mismatch");
  offsets_.resize(dims_.size());
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    offsets_[v] = total_;
    total_ += dims_[v];
  }
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (arrows_[a].rows() != dims_[arr.target] || arrows_[a].cols() != dims_[arr.source])
      throw DimensionError("arrow " + arr.name + " has the wrong shape");
  }
  for (const auto& rel : presentation_->relations())
    if (!act(rel, *this).is_zero()) throw std::invalid_argument("representation violates a relation");
}

Representation Representation::zero(PresentationPtr presentation) {
  const Quiver& q = presentation->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  std::vector<Mat> mats(q.arrow_count());
  return Representation(std::move(presentation), std::move(dims), std::move(mats));
}

Representation Representation::with_label(std::string label) const {
  Representation r = *this;
  r.label_ = std::move(label);
  return r;
}

bool Representation::operator==(const Representation& rhs) const {
  return same_presentation(presentation_, rhs.presentation_) && dims_ == rhs.dims_ &&
         arrows_ == rhs.arrows_;
}

Mat act(const AlgebraElement& a, const Representation& rep) {
  const auto& pres = *rep.presentation();
  const std::size_t n = rep.total_dim();
  Mat out(n, n);
  for (const auto& [path, coeff] : a.terms()) {
    if (!pres.is_valid(path)) throw std::invalid_argument("algebra element uses an invalid path");
    const std::size_t s = pres.source(path), t = pres.target(path);
    Mat block;
    if (path.is_trivial()) {
      block = Mat::identity(rep.dim(s));
    } else {
      block = rep.arrow(path.arrows.front());
      for (std::size_t i = 1; i < path.arrows.size(); ++i) block = block * rep.arrow(path.arrows[i]);
    }
    block = block * coeff;
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c)
        out(rep.offset(t) + r, rep.offset(s) + c) += block(r, c);
  }
  return out;
}

// ---------------------------------------------------------------- Morphism

Morphism Morphism::identity(const Representation& m) {
  Morphism f;
  for (auto d : m.dims()) f.blocks.push_back(Mat::identity(d));
  return f;
}

Morphism Morphism::zero(const Representation& source, const Representation& target) {
  Morphism f;
  for (std::size_t v = 0; v < source.dims().size(); ++v)
    f.blocks.emplace_back(target.dim(v), source.dim(v));
  return f;
}

Morphism Morphism::unflatten(const Vec& flat, const std::vector<std::size_t>& source_dims,
                             const std::vector<std::size_t>& target_dims) {
  Morphism f;
  std::size_t k = 0;
  for (std::size_t v = 0; v < source_dims.size(); ++v) {
    Mat b(target_dims[v], source_dims[v]);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = flat.at(k++);
    f.blocks.push_back(std::move(b));
  }
  if (k != flat.size()) throw DimensionError("flattened morphism has the wrong length");
  return f;
}

Vec Morphism::flatten() const {
  Vec out;
  out.reserve(flat_size());
  for (const auto& b : blocks) out.insert(out.end(), b.data().begin(), b.data().end());
  return out;
}

std::size_t Morphism::flat_size() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows() * b.cols();
  return n;
}

Mat Morphism::total() const {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Mat out(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

bool Morphism::is_zero() const {
  for (const auto& b : blocks)
    if (!b.is_zero()) return false;
  return true;
}

Vec Morphism::apply(const Vec& x) const {
  Vec out;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    Vec piece(x.begin() + static_cast<std::ptrdiff_t>(c),
              x.begin() + static_cast<std::ptrdiff_t>(c + b.cols()));
    Vec image = b * piece;
    out.insert(out.end(), image.begin(), image.end());
    c += b.cols();
  }
  if (c != x.size()) throw DimensionError("morphism applied to a vector of the wrong length");
  return out;
}

Morphism Morphism::operator*(const Morphism& rhs) const {
  if (blocks.size() != rhs.blocks.size()) throw DimensionError("composite of unrelated morphisms");
  Morphism out;
  for (std::size_t v = 0; v < blocks.size(); ++v) out.blocks.push_back(blocks[v] * rhs.blocks[v]);
  return out;
}

Morphism Morphism::operator+(const Morphism& rhs) const {
  if (blocks.size() != rhs.blocks.size()) throw DimensionError("sum of unrelated morphisms");
  Morphism out;
  for (std::size_t v = 0; v < blocks.size(); ++v) out.blocks.push_back(blocks[v] + rhs.blocks[v]);
  return out;
}

Morphism Morphism::operator-(const Morphism& rhs) const {
  if (blocks.size() != rhs.blocks.size()) throw DimensionError("difference of unrelated morphisms");
  Morphism out;
  for (std::size_t v = 0; v < blocks.size(); ++v) out.blocks.push_back(blocks[v] - rhs.blocks[v]);
  return out;
}

Morphism Morphism::operator*(const Scalar& s) const {
  Morphism out;
  for (const auto& b : blocks) out.blocks.push_back(b * s);
  return out;
}

bool is_homomorphism(const Morphism& f, const Representation& m, const Representation& n) {
  const Quiver& q = m.quiver();
  if (f.blocks.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (f.blocks[v].rows() != n.dim(v) || f.blocks[v].cols() != m.dim(v)) return false;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (f.blocks[arr.target] * m.arrow(a) != n.arrow(a) * f.blocks[arr.source]) return false;
  }
  return true;
}

// ---------------------------------------------------------------- SubspaceFamily

SubspaceFamily SubspaceFamily::zero(const Representation& m) {
  SubspaceFamily f;
  for (auto d : m.dims()) f.parts.push_back(Subspace::zero(d));
  return f;
}

SubspaceFamily SubspaceFamily::full(const Representation& m) {
  SubspaceFamily f;
  for (auto d : m.dims()) f.parts.push_back(Subspace::full(d));
  return f;
}

SubspaceFamily SubspaceFamily::from_total(const Subspace& total, const Representation& m) {
  if (total.ambient_dim() != m.total_dim()) throw DimensionError("subspace is not in the total space");
  SubspaceFamily f;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    Mat coords(m.total_dim(), m.dim(v));
    for (std::size_t i = 0; i < m.dim(v); ++i) coords(m.offset(v) + i, i) = 1;
    Subspace piece = intersect(total, Subspace::span(coords));
    f.parts.push_back(Subspace::span(piece.basis().block(m.offset(v), 0, m.dim(v), piece.dim())));
  }
  if (f.total_dim() != total.dim()) throw std::invalid_argument("subspace is not vertex-graded");
  return f;
}

std::vector<std::size_t> SubspaceFamily::dims() const {
  std::vector<std::size_t> d;
  for (const auto& p : parts) d.push_back(p.dim());
  return d;
}

std::size_t SubspaceFamily::total_dim() const {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.dim();
  return n;
}

Subspace SubspaceFamily::total(const Representation& m) const {
  Mat cols(m.total_dim(), total_dim());
  std::size_t c = 0;
  for (std::size_t v = 0; v < parts.size(); ++v) {
    cols.set_block(m.offset(v), c, parts[v].basis());
    c += parts[v].dim();
  }
  return Subspace::span(cols);
}

bool SubspaceFamily::contains(const SubspaceFamily& other) const {
  if (other.parts.size() != parts.size()) throw DimensionError("subspace families of different shape");
  for (std::size_t v = 0; v < parts.size(); ++v)
    if (!parts[v].contains(other.parts[v])) return false;
  return true;
}

SubspaceFamily SubspaceFamily::meet(const SubspaceFamily& other) const {
  if (other.parts.size() != parts.size()) throw DimensionError("subspace families of different shape");
  SubspaceFamily out;
  for (std::size_t v = 0; v < parts.size(); ++v) out.parts.push_back(intersect(parts[v], other.parts[v]));
  return out;
}

// ---------------------------------------------------------------- direct sums

DirectSum direct_sum(const PresentationPtr& presentation, const std::vector<Representation>& parts) {
  const Quiver& q = presentation->quiver();
  const std::size_t nv = q.vertex_count();
  for (const auto& p : parts)
    if (!same_presentation(p.presentation(), presentation))
      throw std::invalid_argument("direct_sum: presentation mismatch");

  std::vector<std::size_t> dims(nv, 0);
  // starts[i][v]: offset of part i inside vertex block v.
  std::vector<std::vector<std::size_t>> starts(parts.size(), std::vector<std::size_t>(nv));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t v = 0; v < nv; ++v) {
      starts[i][v] = dims[v];
      dims[v] += parts[i].dim(v);
    }

  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    Mat m(dims[arr.target], dims[arr.source]);
    for (std::size_t i = 0; i < parts.size(); ++i)
      m.set_block(starts[i][arr.target], starts[i][arr.source], parts[i].arrow(a));
    mats.push_back(std::move(m));
  }

  std::string label;
  for (const auto& p : parts) label += (label.empty() ? "" : "+") + p.label();

  DirectSum out{Representation(presentation, dims, std::move(mats), label), {}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Morphism in, pr;
    for (std::size_t v = 0; v < nv; ++v) {
      Mat e(dims[v], parts[i].dim(v));
      for (std::size_t k = 0; k < parts[i].dim(v); ++k) e(starts[i][v] + k, k) = 1;
      pr.blocks.push_back(e.transpose());
      in.blocks.push_back(std::move(e));
    }
    out.embeddings.push_back(std::move(in));
    out.projections.push_back(std::move(pr));
  }
  return out;
}

DirectSum direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of an empty list needs a presentation");
  return direct_sum(parts.front().presentation(), parts);
}

// ---------------------------------------------------------------- duality

namespace {

// Reuses the shared Kronecker instances so duals of duals compare by pointer.
PresentationPtr canonical_opposite(const PresentationPtr& p) {
  if (same_presentation(p, kronecker())) return kronecker_opposite();
  if (same_presentation(p, kronecker_opposite())) return kronecker();
  return opposite(p);
}

}  // namespace

Representation dual(const Representation& rep) {
  std::vector<Mat> mats;
  for (const auto& m : rep.arrow_matrices()) mats.push_back(m.transpose());
  std::string label = rep.label().empty() ? "" : "D(" + rep.label() + ")";
  return Representation(canonical_opposite(rep.presentation()), rep.dims(), std::move(mats),
                        std::move(label));
}

Morphism dual(const Morphism& f) {
  Morphism out;
  for (const auto& b : f.blocks) out.blocks.push_back(b.transpose());
  return out;
}

// ---------------------------------------------------------------- socle, subs

SubspaceFamily socle(const Representation& rep) {
  const Quiver& q = rep.quiver();
  SubspaceFamily out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<Mat> outgoing;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).source == v) outgoing.push_back(rep.arrow(a));
    out.parts.push_back(outgoing.empty() ? Subspace::full(rep.dim(v))
                                         : kernel_basis(vstack(outgoing, rep.dim(v))));
  }
  return out;
}

Representation sub_from_family(const Representation& rep, const SubspaceFamily& family) {
  const Quiver& q = rep.quiver();
  if (family.parts.size() != q.vertex_count()) throw DimensionError("subspace family shape mismatch");
  std::vector<CoordinateMap> coords;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (family.parts[v].ambient_dim() != rep.dim(v)) throw DimensionError("subspace family shape mismatch");
    coords.emplace_back(family.parts[v].basis());
  }
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    const Mat& src = family.parts[arr.source].basis();
    Mat image = rep.arrow(a) * src;
    Mat restricted(family.parts[arr.target].dim(), src.cols());
    for (std::size_t c = 0; c < src.cols(); ++c) {
      auto x = coords[arr.target].coordinates(image.col(c));
      if (!x) throw std::invalid_argument("subspace family is not closed under arrow " + arr.name);
      for (std::size_t r = 0; r < x->size(); ++r) restricted(r, c) = (*x)[r];
    }
    mats.push_back(std::move(restricted));
  }
  return Representation(rep.presentation(), family.dims(), std::move(mats));
}

Morphism inclusion(const Representation& rep, const SubspaceFamily& family) {
  Morphism f;
  for (std::size_t v = 0; v < rep.dims().size(); ++v) f.blocks.push_back(family.parts[v].basis());
  return f;
}

// ---------------------------------------------------------------- Kronecker families

namespace {

Representation string_module(const PresentationPtr& pres, std::size_t n, std::string label) {
  if (n == 0) throw std::invalid_argument("string module index must be positive");
  const Quiver& q = pres->quiver();
  const std::size_t alpha = *q.arrow_index("alpha"), beta = *q.arrow_index("beta");
  const std::size_t top = q.arrow(alpha).source, valley = q.arrow(alpha).target;
  std::vector<std::size_t> dims(2);
  dims[top] = n;
  dims[valley] = n - 1;
  Mat a(n - 1, n), b(n - 1, n);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    b(j, j) = 1;
    a(j, j + 1) = 1;
  }
  std::vector<Mat> mats(2);
  mats[alpha] = std::move(a);
  mats[beta] = std::move(b);
  return Representation(pres, dims, std::move(mats), std::move(label));
}

}  // namespace

Representation kronecker_preinjective(std::size_t n) {
  return string_module(kronecker(), n, "I" + std::to_string(n));
}

Representation kronecker_preinjective_right(std::size_t n) {
  return string_module(kronecker_opposite(), n, "I" + std::to_string(n) + "^op");
}

Representation kronecker_preprojective(std::size_t n) {
  return dual(kronecker_preinjective_right(n)).with_label("P" + std::to_string(n));
}

RegularParameter RegularParameter::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  return finite(parse_scalar(text));
}

std::string RegularParameter::to_string() const {
  return is_infinite() ? "inf" : endoscope::to_string(value_);
}

Representation kronecker_regular(std::size_t n, const RegularParameter& lambda) {
  if (n == 0) throw std::invalid_argument("regular module size must be positive");
  Mat jordan(n, n);
  const Scalar diag = lambda.is_infinite() ? Scalar(0) : lambda.value();
  for (std::size_t i = 0; i < n; ++i) {
    jordan(i, i) = diag;
    if (i + 1 < n) jordan(i, i + 1) = 1;
  }
  std::vector<Mat> mats = lambda.is_infinite() ? std::vector<Mat>{jordan, Mat::identity(n)}
                                               : std::vector<Mat>{Mat::identity(n), jordan};
  return Representation(kronecker(), {n, n}, std::move(mats),
                        "R" + std::to_string(n) + "(" + lambda.to_string() + ")");
}

Representation simple(const PresentationPtr& presentation, std::size_t v) {
  const Quiver& q = presentation->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims.at(v) = 1;
  std::vector<Mat> mats;
  for (const auto& a : q.arrows()) mats.emplace_back(dims[a.target], dims[a.source]);
  return Representation(presentation, dims, std::move(mats), "S" + q.vertices()[v]);
}

Representation rebase(const Representation& rep, const std::vector<Mat>& change) {
  const Quiver& q = rep.quiver();
  if (change.size() != q.vertex_count()) throw DimensionError("base change needs one matrix per vertex");
  std::vector<Mat> inverses;
  for (std::size_t v = 0; v < change.size(); ++v) {
    auto inv = inverse(change[v]);
    if (!inv || change[v].rows() != rep.dim(v)) throw std::invalid_argument("base change is not invertible");
    inverses.push_back(std::move(*inv));
  }
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    mats.push_back(change[arr.target] * rep.arrow(a) * inverses[arr.source]);
  }
  return Representation(rep.presentation(), rep.dims(), std::move(mats), rep.label());
}

}  // namespace endoscope
