#include "endoscope/quiver.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace endoscope {

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows)
    : vertices_(std::move(vertices)) {
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw std::invalid_argument("duplicate vertex name");
  std::set<std::string> arrow_names;
  for (auto& [name, src, tgt] : arrows) {
    if (!arrow_names.insert(name).second) throw std::invalid_argument("duplicate arrow name: " + name);
    auto s = vertex_index(src);
    auto t = vertex_index(tgt);
    if (!s || !t) throw std::invalid_argument("arrow " + name + " has an undeclared endpoint");
    arrows_.push_back({name, *s, *t});
  }
}

std::optional<std::size_t> Quiver::vertex_index(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& name) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].name == name) return a;
  return std::nullopt;
}

Quiver Quiver::opposite() const {
  Quiver q;
  q.vertices_ = vertices_;
  for (const auto& a : arrows_) q.arrows_.push_back({a.name, a.target, a.source});
  return q;
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm.
  std::vector<std::size_t> indegree(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indegree[a.target];
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t visited = 0;
  while (!ready.empty()) {
    auto v = ready.front();
    ready.pop_front();
    ++visited;
    for (const auto& a : arrows_)
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
  }
  return visited == vertices_.size();
}

// ---------------------------------------------------------------- AlgebraElement

AlgebraElement::AlgebraElement(const Path& p, const Scalar& coeff) { add_term(p, coeff); }

void AlgebraElement::add_term(const Path& p, const Scalar& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
  AlgebraElement out = *this;
  for (const auto& [p, c] : rhs.terms_) out.add_term(p, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
  AlgebraElement out = *this;
  for (const auto& [p, c] : rhs.terms_) out.add_term(p, -c);
  return out;
}

AlgebraElement AlgebraElement::operator*(const Scalar& s) const {
  AlgebraElement out;
  for (const auto& [p, c] : terms_) out.add_term(p, c * s);
  return out;
}

// ---------------------------------------------------------------- presentation

AlgebraPresentation::AlgebraPresentation(Quiver quiver, std::vector<AlgebraElement> relations)
    : quiver_(std::move(quiver)), relations_(std::move(relations)) {
  for (const auto& rel : relations_) {
    if (rel.is_zero()) throw std::invalid_argument("zero relation");
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& [p, c] : rel.terms()) {
      if (!is_valid(p)) throw std::invalid_argument("relation uses an invalid path");
      if (p.length() < 2) throw std::invalid_argument("relation terms must have length >= 2");
      std::pair<std::size_t, std::size_t> e{source(p), target(p)};
      if (ends && *ends != e) throw std::invalid_argument("relation terms are not parallel");
      ends = e;
    }
    if (rel.terms().size() == 1) monomial_zeros_.push_back(rel.terms().begin()->first);
  }
}

Path AlgebraPresentation::path(std::vector<std::size_t> arrows) const {
  if (arrows.empty()) throw std::invalid_argument("use Path::trivial for vertex paths");
  for (auto a : arrows)
    if (a >= quiver_.arrow_count()) throw std::invalid_argument("unknown arrow index");
  Path p{quiver_.arrow(arrows.back()).source, std::move(arrows)};
  if (!is_valid(p)) throw std::invalid_argument("arrows are not composable");
  return p;
}

Path AlgebraPresentation::path(const std::vector<std::string>& arrow_names) const {
  std::vector<std::size_t> idx;
  for (const auto& n : arrow_names) {
    auto a = quiver_.arrow_index(n);
    if (!a) throw std::invalid_argument("unknown arrow: " + n);
    idx.push_back(*a);
  }
  return path(std::move(idx));
}

std::size_t AlgebraPresentation::source(const Path& p) const {
  return p.is_trivial() ? p.vertex : quiver_.arrow(p.arrows.back()).source;
}

std::size_t AlgebraPresentation::target(const Path& p) const {
  return p.is_trivial() ? p.vertex : quiver_.arrow(p.arrows.front()).target;
}

bool AlgebraPresentation::is_valid(const Path& p) const {
  if (p.vertex >= quiver_.vertex_count()) return false;
  if (p.is_trivial()) return true;
  for (auto a : p.arrows)
    if (a >= quiver_.arrow_count()) return false;
  if (quiver_.arrow(p.arrows.back()).source != p.vertex) return false;
  for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (quiver_.arrow(p.arrows[i + 1]).target != quiver_.arrow(p.arrows[i]).source) return false;
  return true;
}

bool AlgebraPresentation::contains_zero_relation(const Path& p) const {
  for (const auto& z : monomial_zeros_) {
    if (z.length() > p.length()) continue;
    if (std::search(p.arrows.begin(), p.arrows.end(), z.arrows.begin(), z.arrows.end()) !=
        p.arrows.end())
      return true;
  }
  return false;
}

AlgebraElement AlgebraPresentation::concatenate(const AlgebraElement& a,
                                                const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [p, c] : a.terms()) {
    for (const auto& [q, d] : b.terms()) {
      if (source(p) != target(q)) continue;
      Path r;
      if (p.is_trivial()) {
        r = q;
      } else if (q.is_trivial()) {
        r = p;
      } else {
        r.vertex = q.vertex;
        r.arrows = p.arrows;
        r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
      }
      out.add_term(r, c * d);
    }
  }
  return out;
}

AlgebraElement AlgebraPresentation::multiply(const AlgebraElement& a,
                                             const AlgebraElement& b) const {
  AlgebraElement raw = concatenate(a, b);
  if (monomial_zeros_.empty()) return raw;
  AlgebraElement out;
  for (const auto& [p, c] : raw.terms())
    if (!contains_zero_relation(p)) out.add_term(p, c);
  return out;
}

AlgebraElement AlgebraPresentation::arrow(std::size_t a) const {
  return AlgebraElement(path(std::vector<std::size_t>{a}));
}

AlgebraElement AlgebraPresentation::arrow(const std::string& name) const {
  return AlgebraElement(path(std::vector<std::string>{name}));
}

AlgebraElement AlgebraPresentation::one() const {
  AlgebraElement e;
  for (std::size_t v = 0; v < quiver_.vertex_count(); ++v) e.add_term(Path::trivial(v), 1);
  return e;
}

std::vector<Path> AlgebraPresentation::all_paths() const {
  if (!quiver_.is_acyclic()) throw std::logic_error("path enumeration requires an acyclic quiver");
  std::vector<Path> out;
  for (std::size_t v = 0; v < quiver_.vertex_count(); ++v) out.push_back(Path::trivial(v));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t end = target(out[i]);
    for (std::size_t a = 0; a < quiver_.arrow_count(); ++a) {
      if (quiver_.arrow(a).source != end) continue;
      Path longer;
      longer.vertex = source(out[i]);
      longer.arrows.push_back(a);
      longer.arrows.insert(longer.arrows.end(), out[i].arrows.begin(), out[i].arrows.end());
      out.push_back(std::move(longer));
    }
  }
  return out;
}

std::size_t AlgebraPresentation::dimension() const {
  const auto paths = all_paths();
  if (relations_.empty()) return paths.size();
  std::map<Path, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;
  SpanBuilder ideal(paths.size());
  for (const auto& rel : relations_) {
    const Path& some = rel.terms().begin()->first;
    const std::size_t s = source(some), t = target(some);
    for (const auto& u : paths) {
      if (source(u) != t) continue;
      for (const auto& w : paths) {
        if (target(w) != s) continue;
        AlgebraElement gen = concatenate(concatenate(AlgebraElement(u), rel), AlgebraElement(w));
        Vec v(paths.size());
        for (const auto& [p, c] : gen.terms()) v[index.at(p)] = c;
        ideal.insert(std::move(v));
      }
    }
  }
  return paths.size() - ideal.dim();
}

AlgebraPresentation AlgebraPresentation::opposite() const {
  Quiver q = quiver_.opposite();
  std::vector<AlgebraElement> rels;
  for (const auto& rel : relations_) {
    AlgebraElement r;
    for (const auto& [p, c] : rel.terms()) {
      Path o;
      o.vertex = target(p);
      o.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
      r.add_term(o, c);
    }
    rels.push_back(std::move(r));
  }
  return AlgebraPresentation(std::move(q), std::move(rels));
}

PresentationPtr kronecker() {
  static const PresentationPtr instance = std::make_shared<const AlgebraPresentation>(
      Quiver({"1", "2"}, {{"alpha", "1", "2"}, {"beta", "1", "2"}}), std::vector<AlgebraElement>{});
  return instance;
}

PresentationPtr kronecker_opposite() {
  static const PresentationPtr instance = opposite(kronecker());
  return instance;
}

PresentationPtr opposite(const PresentationPtr& p) {
  return std::make_shared<const AlgebraPresentation>(p->opposite());
}

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace endoscope
