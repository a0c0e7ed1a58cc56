#include "endoscope/homalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace endoscope {

// ---------------------------------------------------------------- HomSpace

namespace {

std::size_t flat_size(const std::vector<std::size_t>& src, const std::vector<std::size_t>& tgt) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < src.size(); ++v) n += src[v] * tgt[v];
  return n;
}

Mat flattened_columns(const std::vector<Morphism>& basis, std::size_t flat) {
  std::vector<Vec> cols;
  cols.reserve(basis.size());
  for (const auto& f : basis) cols.push_back(f.flatten());
  return Mat::from_columns(cols, flat);
}

}  // namespace

HomSpace::HomSpace(std::vector<std::size_t> source_dims, std::vector<std::size_t> target_dims,
                   std::vector<Morphism> basis)
    : source_dims_(std::move(source_dims)),
      target_dims_(std::move(target_dims)),
      basis_(std::move(basis)),
      coords_(flattened_columns(basis_, flat_size(source_dims_, target_dims_))) {}

std::optional<Vec> HomSpace::coordinates(const Morphism& f) const {
  return coords_.coordinates(f.flatten());
}

Morphism HomSpace::element(const Vec& coords) const {
  if (coords.size() != dim()) throw DimensionError("HomSpace::element: coordinate length mismatch");
  return Morphism::unflatten(coords_.combine(coords), source_dims_, target_dims_);
}

Subspace HomSpace::as_subspace() const {
  return Subspace::span(flattened_columns(basis_, flat_size(source_dims_, target_dims_)));
}

Mat hom_system(const Representation& m, const Representation& n) {
  if (!same_presentation(m.presentation(), n.presentation()))
    throw std::invalid_argument("hom: presentation mismatch");
  const Quiver& q = m.quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> var_offset(nv);
  std::size_t cols = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    var_offset[v] = cols;
    cols += n.dim(v) * m.dim(v);
  }
  std::size_t rows = 0;
  for (const auto& a : q.arrows()) rows += n.dim(a.target) * m.dim(a.source);

  // Unknown f_v(r, c) sits at var_offset[v] + r * m.dim(v) + c.
  Mat sys(rows, cols);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const std::size_t s = arr.source, t = arr.target;
    const Mat& ma = m.arrow(a);
    const Mat& na = n.arrow(a);
    for (std::size_t r = 0; r < n.dim(t); ++r) {
      for (std::size_t c = 0; c < m.dim(s); ++c, ++row) {
        // (f_t M_a)(r, c) = sum_k f_t(r, k) M_a(k, c)
        for (std::size_t k = 0; k < m.dim(t); ++k)
          if (sgn(ma(k, c)) != 0) sys(row, var_offset[t] + r * m.dim(t) + k) += ma(k, c);
        // (N_a f_s)(r, c) = sum_k N_a(r, k) f_s(k, c)
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (sgn(na(r, k)) != 0) sys(row, var_offset[s] + k * m.dim(s) + c) -= na(r, k);
      }
    }
  }
  return sys;
}

HomSpace hom_basis(const Representation& m, const Representation& n) {
  Subspace kernel = kernel_basis(hom_system(m, n));
  std::vector<Morphism> basis;
  for (const auto& v : kernel.basis_vectors()) basis.push_back(Morphism::unflatten(v, m.dims(), n.dims()));
  return HomSpace(m.dims(), n.dims(), std::move(basis));
}

std::size_t hom_dimension(const Representation& m, const Representation& n, const Field& field) {
  Mat sys = hom_system(m, n);
  return sys.cols() - rank(sys, field);
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.blocks.size() != g.blocks.size()) throw DimensionError("compose: vertex count mismatch");
  for (std::size_t v = 0; v < f.blocks.size(); ++v)
    if (f.blocks[v].cols() != g.blocks[v].rows()) throw DimensionError("compose: source(f) != target(g)");
  return f * g;
}

// ---------------------------------------------------------------- EndoRing

Subspace trace_form_radical(const std::vector<Mat>& left_mult) {
  const std::size_t r = left_mult.size();
  Mat form(r, r);
  Scalar t;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = i; k < r; ++k) {
      Scalar tr = 0;
      const Mat& a = left_mult[i];
      const Mat& b = left_mult[k];
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y) {
          if (sgn(a(x, y)) == 0 || sgn(b(y, x)) == 0) continue;
          t = a(x, y) * b(y, x);
          tr += t;
        }
      form(i, k) = tr;
      form(k, i) = tr;
    }
  }
  return kernel_basis(form);
}

EndoRing::EndoRing(const Representation& m, const HomSpace& endos) {
  const Morphism id = Morphism::identity(m);
  const std::size_t flat = id.flat_size();
  SpanBuilder span(flat);
  span.insert(id.flatten());
  basis_.push_back(id);
  for (const auto& f : endos.basis())
    if (span.insert(f.flatten())) basis_.push_back(f);
  if (basis_.size() != endos.dim()) throw std::logic_error("identity is not in the endomorphism space");
  space_ = HomSpace(m.dims(), m.dims(), basis_);

  const std::size_t r = basis_.size();
  left_mult_.assign(r, Mat(r, r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      auto c = space_.coordinates(basis_[i] * basis_[k]);
      if (!c) throw std::logic_error("endomorphism space not closed under composition");
      for (std::size_t l = 0; l < r; ++l) left_mult_[i](l, k) = (*c)[l];
    }

  radical_ = trace_form_radical(left_mult_);

  // Two-sided ideal.
  const auto rad = radical_.basis_vectors();
  for (std::size_t i = 0; i < r; ++i) {
    Vec unit(r);
    unit[i] = 1;
    for (const auto& y : rad)
      if (!radical_.contains(multiply(unit, y)) || !radical_.contains(multiply(y, unit)))
        throw std::logic_error("trace-form radical is not an ideal");
  }
  // Nilpotent: J^k = 0 for some k <= r + 1.
  std::vector<Vec> power = rad;
  nilpotency_ = 1;
  while (!power.empty()) {
    if (nilpotency_ > r + 1) throw std::logic_error("trace-form radical is not nilpotent");
    SpanBuilder next(r);
    for (const auto& x : power)
      for (const auto& y : rad) next.insert(multiply(x, y));
    power = next.subspace().basis_vectors();
    ++nilpotency_;
  }
  if (rad.empty()) nilpotency_ = 1;
}

Vec EndoRing::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Vec part = left_mult_[i] * y;
    for (std::size_t l = 0; l < dim(); ++l) out[l] += x[i] * part[l];
  }
  return out;
}

std::vector<Morphism> EndoRing::radical_morphisms() const {
  std::vector<Morphism> out;
  for (const auto& v : radical_.basis_vectors()) out.push_back(element(v));
  return out;
}

Morphism EndoRing::element(const Vec& coords) const { return space_.element(coords); }

Vec EndoRing::coordinates(const Morphism& f) const {
  auto c = space_.coordinates(f);
  if (!c) throw std::invalid_argument("not an endomorphism of this module");
  return *c;
}

EndoRing end_ring(const Representation& m) { return EndoRing(m, hom_basis(m, m)); }

Subspace jacobson_radical(const EndoRing& e, const Field& field) {
  if (!field.is_rational())
    throw UnsupportedField("radical computation via the trace form needs characteristic 0, got " +
                           field.name());
  return e.radical();
}

// ---------------------------------------------------------------- isomorphism

bool is_isomorphism(const Morphism& f) {
  for (const auto& b : f.blocks) {
    if (!b.is_square()) return false;
    if (rank(b) != b.rows()) return false;
  }
  return true;
}

IsoCertificate IsoCertificate::inverted() const {
  IsoCertificate c = *this;
  std::swap(c.iso, c.inverse);
  return c;
}

std::string to_string(IsoCertificate::Verdict v) {
  switch (v) {
    case IsoCertificate::Verdict::Isomorphic: return "isomorphic";
    case IsoCertificate::Verdict::CertifiedNo: return "certified-no";
    case IsoCertificate::Verdict::PresumedNo: return "presumed-no";
  }
  return "?";
}

namespace {

IsoCertificate certified_no(std::string reason) {
  IsoCertificate c;
  c.verdict = IsoCertificate::Verdict::CertifiedNo;
  c.reason = std::move(reason);
  return c;
}

std::optional<Morphism> invert(const Morphism& f) {
  Morphism inv;
  for (const auto& b : f.blocks) {
    if (!b.is_square()) return std::nullopt;
    auto i = inverse(b);
    if (!i) return std::nullopt;
    inv.blocks.push_back(std::move(*i));
  }
  return inv;
}

// Deterministic coefficient vectors: unit vectors, then a Weyl sequence
// t * frac(sqrt(prime_k)) mapped to small integers.
std::vector<Vec> sweep_coefficients(std::size_t r) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  std::vector<Vec> out;
  for (std::size_t k = 0; k < r; ++k) {
    Vec c(r);
    c[k] = 1;
    out.push_back(std::move(c));
  }
  for (int t = 1; t <= 48; ++t) {
    Vec c(r);
    bool nonzero = false;
    for (std::size_t k = 0; k < r; ++k) {
      const double alpha = std::sqrt(static_cast<double>(primes[k % 20])) + static_cast<double>(k / 20);
      double frac = t * alpha;
      frac -= std::floor(frac);
      const long v = static_cast<long>(std::floor(frac * 9.0)) - 4;
      c[k] = v;
      nonzero = nonzero || v != 0;
    }
    if (nonzero) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

IsoCertificate are_isomorphic(const Representation& m, const Representation& n,
                              const HomSpace& forward, const HomSpace& backward,
                              std::size_t end_m_dim, std::size_t end_n_dim, std::uint64_t seed) {
  if (!same_presentation(m.presentation(), n.presentation()))
    throw std::invalid_argument("are_isomorphic: presentation mismatch");
  if (m.dims() != n.dims()) return certified_no("dimension vectors differ");
  if (m == n) {
    IsoCertificate c;
    c.verdict = IsoCertificate::Verdict::Isomorphic;
    c.iso = Morphism::identity(m);
    c.inverse = Morphism::identity(m);
    c.reason = "identical";
    return c;
  }
  if (forward.dim() == 0 || backward.dim() == 0) return certified_no("a Hom space between them is zero");
  if (forward.dim() != end_m_dim || backward.dim() != end_n_dim || end_m_dim != end_n_dim)
    return certified_no("Hom dimensions differ from endomorphism dimensions");

  auto attempt = [&](const Vec& coeffs) -> std::optional<IsoCertificate> {
    Morphism f = forward.element(coeffs);
    auto inv = invert(f);
    if (!inv) return std::nullopt;
    if (!is_homomorphism(f, m, n) || !is_homomorphism(*inv, n, m) ||
        f * *inv != Morphism::identity(n) || *inv * f != Morphism::identity(m))
      throw std::logic_error("isomorphism certificate failed verification");
    IsoCertificate c;
    c.verdict = IsoCertificate::Verdict::Isomorphic;
    c.iso = std::move(f);
    c.inverse = std::move(*inv);
    c.reason = "invertible element of Hom found";
    return c;
  };

  const std::size_t r = forward.dim();
  for (const auto& c : sweep_coefficients(r))
    if (auto cert = attempt(c)) return *cert;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int trial = 0; trial < 64; ++trial) {
    Vec c(r);
    for (auto& x : c) x = static_cast<long>(rng() % 17) - 8;
    if (auto cert = attempt(c)) return *cert;
  }
  IsoCertificate c;
  c.verdict = IsoCertificate::Verdict::PresumedNo;
  c.reason = "no invertible element found within the search budget";
  return c;
}

IsoCertificate are_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
  if (!same_presentation(m.presentation(), n.presentation()))
    throw std::invalid_argument("are_isomorphic: presentation mismatch");
  if (m.dims() != n.dims()) return certified_no("dimension vectors differ");
  return are_isomorphic(m, n, hom_basis(m, n), hom_basis(n, m), hom_dimension(m, m),
                        hom_dimension(n, n), seed);
}

// ---------------------------------------------------------------- polynomials

Vec characteristic_polynomial(const Mat& a) {
  if (!a.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  Vec c(n + 1);
  c[n] = 1;
  Mat m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -(a * m).trace() / Scalar(static_cast<long>(k));
  }
  return c;
}

namespace {

constexpr unsigned long long kDivisorLimit = 1'000'000'000'000ull;

std::vector<unsigned long long> divisors(unsigned long long n) {
  std::vector<unsigned long long> small, large;
  for (unsigned long long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Scalar evaluate(const Vec& coeffs, const Scalar& x) {
  Scalar acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::vector<Scalar> rational_roots(const Vec& coeffs) {
  Vec p = coeffs;
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  if (p.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::set<Scalar> roots;
  std::size_t shift = 0;
  while (shift < p.size() && sgn(p[shift]) == 0) ++shift;
  if (shift > 0) {
    roots.insert(Scalar(0));
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (p.size() >= 2) {
    mpz_class lcm = 1;
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class a0 = abs(mpz_class(p.front() * lcm));
    mpz_class an = abs(mpz_class(p.back() * lcm));
    if (a0 <= static_cast<unsigned long>(kDivisorLimit) && an <= static_cast<unsigned long>(kDivisorLimit)) {
      for (auto num : divisors(a0.get_ui()))
        for (auto den : divisors(an.get_ui()))
          for (int sign : {1, -1}) {
            mpz_class signed_num = mpz_class(static_cast<unsigned long>(num)) * sign;
            Scalar x(signed_num,
                     mpz_class(static_cast<unsigned long>(den)));
            x.canonicalize();
            if (sgn(evaluate(p, x)) == 0) roots.insert(x);
          }
    }
  }
  return {roots.begin(), roots.end()};
}

// ---------------------------------------------------------------- Fitting

namespace {

struct FittingSplit {
  SubspaceFamily kernel;
  SubspaceFamily image;
};

Mat power(Mat base, std::size_t e) {
  Mat result = Mat::identity(base.rows());
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::optional<FittingSplit> fitting_split(const Representation& m, const Morphism& g) {
  const std::size_t n = m.total_dim();
  if (n == 0) return std::nullopt;
  std::set<Scalar> eigen;
  for (const auto& b : g.blocks) {
    if (b.rows() == 0) continue;
    for (auto& x : rational_roots(characteristic_polynomial(b))) eigen.insert(x);
  }
  for (const auto& lambda : eigen) {
    FittingSplit split;
    std::size_t kernel_dim = 0;
    for (std::size_t v = 0; v < g.blocks.size(); ++v) {
      Mat h = g.blocks[v] - Mat::identity(g.blocks[v].rows()) * lambda;
      Mat hp = power(h, n);
      split.kernel.parts.push_back(kernel_basis(hp));
      split.image.parts.push_back(Subspace::image(hp));
      kernel_dim += split.kernel.parts.back().dim();
    }
    if (kernel_dim > 0 && kernel_dim < n) return split;
  }
  return std::nullopt;
}

std::optional<FittingSplit> search_split(const Representation& m, const EndoRing& e) {
  const auto& basis = e.basis();
  for (std::size_t i = 1; i < basis.size(); ++i)
    if (auto s = fitting_split(m, basis[i])) return s;
  for (std::size_t i = 1; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (auto s = fitting_split(m, basis[i] + basis[j])) return s;
  return std::nullopt;
}

}  // namespace

std::optional<Morphism> find_idempotent(const Representation& m, const EndoRing& e) {
  auto split = search_split(m, e);
  if (!split) return std::nullopt;
  Morphism p;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    const Mat& im = split->image.parts[v].basis();
    const Mat& ker = split->kernel.parts[v].basis();
    Mat change = hstack(im, ker);
    Mat diag(m.dim(v), m.dim(v));
    for (std::size_t i = 0; i < im.cols(); ++i) diag(i, i) = 1;
    auto inv = inverse(change);
    if (!inv) throw std::logic_error("Fitting decomposition is not a direct sum");
    p.blocks.push_back(change * diag * *inv);
  }
  if (!is_homomorphism(p, m, m) || p * p != p) throw std::logic_error("Fitting idempotent failed verification");
  return p;
}

Locality is_local(const Representation& m, const EndoRing& e) {
  if (m.total_dim() == 0) return Locality::NotLocal;
  if (e.dim() - e.radical().dim() == 1) return Locality::Local;
  if (find_idempotent(m, e)) return Locality::NotLocal;
  return Locality::Inconclusive;
}

Locality is_local(const Representation& m) { return is_local(m, end_ring(m)); }

std::string to_string(Locality l) {
  switch (l) {
    case Locality::Local: return "local";
    case Locality::NotLocal: return "not-local";
    case Locality::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<Representation> indecompose(const Representation& m) {
  if (m.total_dim() == 0) return {};
  EndoRing e = end_ring(m);
  if (e.dim() - e.radical().dim() == 1) return {m};
  auto split = search_split(m, e);
  if (!split)
    throw Inconclusive("no Fitting split found for " + (m.label().empty() ? "module" : m.label()) +
                       " although End/J has dimension " + std::to_string(e.dim() - e.radical().dim()));
  std::vector<Representation> out;
  for (const auto* part : {&split->image, &split->kernel}) {
    auto pieces = indecompose(sub_from_family(m, *part));
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = out[i].with_label((m.label().empty() ? "M" : m.label()) + "." + std::to_string(i + 1));
  return out;
}

HomSpace noniso_subspace(const Representation& m, const Representation& n, std::uint64_t seed) {
  FamilyAnalysis fam({m, n}, seed);
  return fam.noniso(0, 1);
}

// ---------------------------------------------------------------- families

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

FamilyAnalysis::FamilyAnalysis(std::vector<Representation> members, std::uint64_t seed)
    : members_(std::move(members)) {
  const std::size_t n = members_.size();
  for (std::size_t i = 1; i < n; ++i)
    if (!same_presentation(members_[i].presentation(), members_[0].presentation()))
      throw std::invalid_argument("family members over different presentations");

  homs_.resize(n * n);
  parallel_for(n * n, [&](std::size_t k) { homs_[k] = hom_basis(members_[k / n], members_[k % n]); });

  ends_.resize(n);
  std::vector<Locality> locality(n);
  parallel_for(n, [&](std::size_t i) {
    ends_[i] = EndoRing(members_[i], hom(i, i));
    locality[i] = is_local(members_[i], ends_[i]);
  });
  for (std::size_t i = 0; i < n; ++i) {
    const std::string name = members_[i].label().empty() ? "#" + std::to_string(i) : members_[i].label();
    if (locality[i] == Locality::Inconclusive)
      throw Inconclusive("locality of family member " + name + " could not be verified");
    if (locality[i] == Locality::NotLocal)
      throw std::invalid_argument("family member " + name + " is decomposable");
  }

  isos_.resize(n * n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    isos_[i * n + i] = are_isomorphic(members_[i], members_[i], hom(i, i), hom(i, i), ends_[i].dim(),
                                      ends_[i].dim(), seed);
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  parallel_for(pairs.size(), [&](std::size_t k) {
    auto [i, j] = pairs[k];
    isos_[i * n + j] = are_isomorphic(members_[i], members_[j], hom(i, j), hom(j, i), ends_[i].dim(),
                                      ends_[j].dim(), seed + i * n + j);
    isos_[j * n + i] = isos_[i * n + j].inverted();
  });

  nonisos_.resize(n * n);
  parallel_for(n * n, [&](std::size_t k) {
    const std::size_t i = k / n, j = k % n;
    const IsoCertificate& cert = iso(i, j);
    if (!cert.isomorphic()) {
      nonisos_[k] = hom(i, j);
      return;
    }
    std::vector<Morphism> basis;
    for (const auto& r : ends_[i].radical_morphisms()) {
      Morphism f = *cert.iso * r;
      if (is_isomorphism(f)) throw std::logic_error("radical element composed with an iso is invertible");
      basis.push_back(std::move(f));
    }
    nonisos_[k] = HomSpace(members_[i].dims(), members_[j].dims(), std::move(basis));
  });
}

std::size_t FamilyAnalysis::presumed_count() const {
  return static_cast<std::size_t>(std::count_if(isos_.begin(), isos_.end(), [](const IsoCertificate& c) {
    return c.verdict == IsoCertificate::Verdict::PresumedNo;
  }));
}

}  // namespace endoscope
