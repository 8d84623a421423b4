#include "factorcomplex/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "factorcomplex/errors.hpp"
#include "factorcomplex/homology.hpp"
#include "factorcomplex/parallel.hpp"

namespace fcx {

namespace {

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : f) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

bool strictly_increasing(const Face& f) {
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f[i - 1] >= f[i]) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex(std::vector<Vertex> vertices, std::vector<Face> faces)
    : vertices_(std::move(vertices)) {
  index_vertices();
  for (auto& f : faces) {
    if (f.empty()) throw InvalidArgument("empty face is not stored");
    if (!strictly_increasing(f)) throw InvalidArgument("face vertices must be strictly increasing");
    for (int v : f) {
      if (!has_vertex(v)) throw InvalidArgument("face references unknown vertex " + std::to_string(v));
    }
    if (faces_.size() < f.size()) faces_.resize(f.size());
    faces_[f.size() - 1].push_back(std::move(f));
  }
  for (auto& layer : faces_) {
    std::sort(layer.begin(), layer.end());
    if (std::adjacent_find(layer.begin(), layer.end()) != layer.end()) {
      throw InvalidArgument("duplicate face");
    }
  }
  // Every listed vertex is a 0-face.
  if (faces_.empty() && !vertices_.empty()) faces_.resize(1);
  if (!vertices_.empty()) {
    const std::size_t given = faces_[0].size();
    for (const auto& v : vertices_) {
      Face single{v.id};
      if (!std::binary_search(faces_[0].begin(), faces_[0].begin() + given, single)) {
        faces_[0].push_back(single);
      }
    }
    std::sort(faces_[0].begin(), faces_[0].end());
  }
  // Closure: checking codimension-one faces suffices by induction.
  for (std::size_t d = 1; d < faces_.size(); ++d) {
    for (const auto& f : faces_[d]) {
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        Face g;
        g.reserve(f.size() - 1);
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (i != skip) g.push_back(f[i]);
        }
        if (!std::binary_search(faces_[d - 1].begin(), faces_[d - 1].end(), g)) {
          throw InvalidArgument("face family is not closed under subsets");
        }
      }
    }
  }
}

SimplicialComplex::SimplicialComplex(Trusted, std::vector<Vertex> vertices,
                                     std::vector<std::vector<Face>> by_dim)
    : vertices_(std::move(vertices)), faces_(std::move(by_dim)) {
  index_vertices();
}

void SimplicialComplex::index_vertices() {
  vertex_index_.clear();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i].id, i).second) {
      throw InvalidArgument("duplicate vertex id " + std::to_string(vertices_[i].id));
    }
  }
}

const std::string& SimplicialComplex::label(int id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw InvalidArgument("unknown vertex id " + std::to_string(id));
  return vertices_[it->second].label;
}

const std::vector<Face>& SimplicialComplex::faces_of_dim(int d) const {
  static const std::vector<Face> kNone;
  if (d < 0 || d >= static_cast<int>(faces_.size())) return kNone;
  return faces_[d];
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& layer : faces_) total += layer.size();
  return total;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& layer : faces_) out.push_back(layer.size());
  return out;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t d = 0; d < faces_.size(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(faces_[d].size());
  }
  return chi;
}

bool SimplicialComplex::contains(const Face& face) const {
  if (face.empty() || face.size() > faces_.size()) return false;
  const auto& layer = faces_[face.size() - 1];
  return std::binary_search(layer.begin(), layer.end(), face);
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  if (faces_.empty()) return out;
  std::unordered_set<Face, FaceHash> covered;
  for (std::size_t d = faces_.size(); d-- > 0;) {
    for (const auto& f : faces_[d]) {
      if (!covered.count(f)) out.push_back(f);
      if (f.size() < 2) continue;
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        Face g;
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (i != skip) g.push_back(f[i]);
        }
        covered.insert(std::move(g));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

SimplicialComplex face_closure(std::vector<Vertex> vertices, const std::vector<Face>& maximal_faces) {
  std::unordered_set<int> known;
  for (const auto& v : vertices) known.insert(v.id);
  std::vector<std::unordered_set<Face, FaceHash>> layers;
  for (const auto& raw : maximal_faces) {
    if (raw.empty()) continue;
    Face f = raw;
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw InvalidArgument("duplicate vertex within a face");
    }
    if (f.size() > 30) throw CapExceeded("face with more than 30 vertices");
    for (int v : f) {
      if (!known.count(v)) throw InvalidArgument("face references unknown vertex " + std::to_string(v));
    }
    if (layers.size() < f.size()) layers.resize(f.size());
    // Skip subsets already present via an earlier face.
    if (layers[f.size() - 1].count(f)) continue;
    const std::uint32_t full = (1u << f.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (mask & (1u << i)) sub.push_back(f[i]);
      }
      layers[sub.size() - 1].insert(std::move(sub));
    }
  }
  std::vector<std::vector<Face>> by_dim(layers.size());
  for (std::size_t d = 0; d < layers.size(); ++d) {
    by_dim[d].assign(layers[d].begin(), layers[d].end());
  }
  if (by_dim.empty() && !vertices.empty()) by_dim.resize(1);
  for (const auto& v : vertices) {
    if (!layers.empty() && layers[0].count(Face{v.id})) continue;
    by_dim[0].push_back(Face{v.id});
  }
  for (auto& layer : by_dim) std::sort(layer.begin(), layer.end());
  return SimplicialComplex(SimplicialComplex::Trusted{}, std::move(vertices), std::move(by_dim));
}

SimplicialComplex face_closure(const std::vector<Face>& maximal_faces) {
  std::set<int> ids;
  for (const auto& f : maximal_faces) ids.insert(f.begin(), f.end());
  std::vector<Vertex> vertices;
  for (int id : ids) vertices.push_back({id, std::to_string(id)});
  return face_closure(std::move(vertices), maximal_faces);
}

// ---------------------------------------------------------------------------
// Poset

Poset Poset::from_leq(std::vector<std::string> labels, const std::function<bool(int, int)>& leq) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> above(n);
  for (int a = 0; a < n; ++a) {
    if (!leq(a, a)) throw InvalidArgument("relation is not reflexive at " + labels[a]);
    for (int b = 0; b < n; ++b) {
      if (a != b && leq(a, b)) above[a].push_back(b);
    }
  }
  return from_strict_above(std::move(labels), std::move(above));
}

Poset Poset::from_covers(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& covers) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> up(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : covers) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidArgument("cover pair references unknown element");
    if (a == b) throw InvalidArgument("cover pair (a, a) is not strict");
    up[a].push_back(b);
    ++indeg[b];
  }
  // Topological order; a leftover element means a cycle.
  std::vector<int> order;
  std::vector<int> stack;
  for (int a = 0; a < n; ++a) {
    if (indeg[a] == 0) stack.push_back(a);
  }
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    order.push_back(a);
    for (int b : up[a]) {
      if (--indeg[b] == 0) stack.push_back(b);
    }
  }
  if (static_cast<int>(order.size()) != n) throw InvalidArgument("cover relation contains a cycle");
  std::vector<std::vector<int>> above(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::set<int> acc;
    for (int b : up[*it]) {
      acc.insert(b);
      acc.insert(above[b].begin(), above[b].end());
    }
    above[*it].assign(acc.begin(), acc.end());
  }
  return from_strict_above(std::move(labels), std::move(above));
}

Poset Poset::from_strict_above(std::vector<std::string> labels, std::vector<std::vector<int>> above) {
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(above.size()) != n) throw InvalidArgument("relation size mismatch");
  for (int a = 0; a < n; ++a) {
    auto& up = above[a];
    std::sort(up.begin(), up.end());
    up.erase(std::unique(up.begin(), up.end()), up.end());
    for (int b : up) {
      if (b < 0 || b >= n) throw InvalidArgument("relation references unknown element");
      if (b == a) throw InvalidArgument("strict relation contains a <= a");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b : above[a]) {
      if (std::binary_search(above[b].begin(), above[b].end(), a)) {
        throw InvalidArgument("relation is not antisymmetric: " + labels[a] + " / " + labels[b]);
      }
      if (!std::includes(above[a].begin(), above[a].end(), above[b].begin(), above[b].end())) {
        throw InvalidArgument("relation is not transitive through " + labels[b]);
      }
    }
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.above_ = std::move(above);
  p.finish();
  return p;
}

void Poset::finish() {
  const int n = size();
  below_.assign(n, {});
  for (int a = 0; a < n; ++a) {
    for (int b : above_[a]) below_[b].push_back(a);
  }
  hasse_.clear();
  for (int a = 0; a < n; ++a) {
    for (int b : above_[a]) {
      // b covers a unless some c in above(a) lies strictly below b.
      bool cover = true;
      for (int c : above_[a]) {
        if (c != b && std::binary_search(above_[c].begin(), above_[c].end(), b)) {
          cover = false;
          break;
        }
      }
      if (cover) hasse_.emplace_back(a, b);
    }
  }
}

bool Poset::leq(int a, int b) const {
  if (a == b) return true;
  const auto& up = above_.at(a);
  return std::binary_search(up.begin(), up.end(), b);
}

Poset Poset::induced(const std::vector<int>& elements) const {
  std::unordered_map<int, int> position;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 0 || elements[i] >= size()) throw InvalidArgument("unknown element in induced()");
    if (!position.emplace(elements[i], static_cast<int>(i)).second) {
      throw InvalidArgument("repeated element in induced()");
    }
    labels.push_back(labels_[elements[i]]);
  }
  std::vector<std::vector<int>> above(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (int b : above_[elements[i]]) {
      auto it = position.find(b);
      if (it != position.end()) above[i].push_back(it->second);
    }
    std::sort(above[i].begin(), above[i].end());
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.above_ = std::move(above);
  p.finish();
  return p;
}

PosetMap::PosetMap(std::shared_ptr<const Poset> src, std::shared_ptr<const Poset> tgt, std::vector<int> assign)
    : source(std::move(src)), target(std::move(tgt)), assignment(std::move(assign)) {
  if (!source || !target) throw InvalidArgument("poset map needs a source and a target");
  if (static_cast<int>(assignment.size()) != source->size()) {
    throw InvalidArgument("poset map is not total on its source");
  }
  for (int y : assignment) {
    if (y < 0 || y >= target->size()) throw InvalidArgument("poset map hits an unknown target element");
  }
}

// ---------------------------------------------------------------------------
// Constructions

std::vector<std::vector<int>> enumerate_chains(const Poset& p, int max_chain_length) {
  std::vector<std::vector<int>> chains;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int top) {
    chains.push_back(current);
    for (int b : p.above(top)) {
      if (static_cast<int>(current.size()) >= max_chain_length) {
        throw CapExceeded("chain longer than " + std::to_string(max_chain_length) + " elements");
      }
      current.push_back(b);
      extend(b);
      current.pop_back();
    }
  };
  for (int a = 0; a < p.size(); ++a) {
    current = {a};
    extend(a);
  }
  std::sort(chains.begin(), chains.end());
  return chains;
}

Poset chain_poset(const Poset& p, int max_chain_length) {
  auto chains = enumerate_chains(p, max_chain_length);
  std::map<std::vector<int>, int> index;
  std::vector<std::string> labels;
  labels.reserve(chains.size());
  for (std::size_t i = 0; i < chains.size(); ++i) {
    index.emplace(chains[i], static_cast<int>(i));
    std::string label = "{";
    for (std::size_t j = 0; j < chains[i].size(); ++j) {
      if (j) label += " < ";
      label += p.label(chains[i][j]);
    }
    labels.push_back(label + "}");
  }
  // Every subset of a chain is a chain, so sub-chains are found by subset
  // enumeration rather than pairwise comparison.
  std::vector<std::vector<int>> above(chains.size());
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const auto& c = chains[i];
    const std::uint32_t full = (1u << c.size()) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      std::vector<int> sub;
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (mask & (1u << j)) sub.push_back(c[j]);
      }
      above[index.at(sub)].push_back(static_cast<int>(i));
    }
  }
  return Poset::from_strict_above(std::move(labels), std::move(above));
}

SimplicialComplex order_complex(const Poset& p) {
  std::vector<Vertex> vertices;
  vertices.reserve(p.size());
  for (int a = 0; a < p.size(); ++a) vertices.push_back({a, p.label(a)});
  std::vector<std::vector<Face>> by_dim;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int top) {
    Face f = current;
    std::sort(f.begin(), f.end());
    if (by_dim.size() < f.size()) by_dim.resize(f.size());
    by_dim[f.size() - 1].push_back(std::move(f));
    for (int b : p.above(top)) {
      current.push_back(b);
      extend(b);
      current.pop_back();
    }
  };
  for (int a = 0; a < p.size(); ++a) {
    current = {a};
    extend(a);
  }
  std::vector<Face> all;
  for (auto& layer : by_dim) {
    for (auto& f : layer) all.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(vertices), std::move(all));
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  int k_max = -1;
  for (const auto& v : k.vertices()) k_max = std::max(k_max, v.id);
  bool clash = false;
  int l_min = 0;
  for (const auto& v : l.vertices()) {
    if (k.has_vertex(v.id)) clash = true;
    l_min = std::min(l_min, v.id);
  }
  const int shift = clash ? k_max + 1 - l_min : 0;

  std::vector<Vertex> vertices = k.vertices();
  for (const auto& v : l.vertices()) vertices.push_back({v.id + shift, v.label});

  std::vector<Face> k_faces;
  std::vector<Face> l_faces;
  for (int d = 0; d <= k.dimension(); ++d) {
    for (const auto& f : k.faces_of_dim(d)) k_faces.push_back(f);
  }
  for (int d = 0; d <= l.dimension(); ++d) {
    for (auto f : l.faces_of_dim(d)) {
      for (int& v : f) v += shift;
      l_faces.push_back(std::move(f));
    }
  }
  std::vector<Face> faces = k_faces;
  faces.insert(faces.end(), l_faces.begin(), l_faces.end());
  for (const auto& a : k_faces) {
    for (const auto& b : l_faces) {
      Face f = a;
      f.insert(f.end(), b.begin(), b.end());
      std::sort(f.begin(), f.end());
      faces.push_back(std::move(f));
    }
  }
  return SimplicialComplex(std::move(vertices), std::move(faces));
}

bool is_order_preserving(const PosetMap& f) {
  for (int a = 0; a < f.source->size(); ++a) {
    for (int b : f.source->above(a)) {
      if (!f.target->leq(f.assignment[a], f.assignment[b])) return false;
    }
  }
  return true;
}

std::vector<int> lower_fiber_elements(const PosetMap& f, int q) {
  if (q < 0 || q >= f.target->size()) throw InvalidArgument("unknown target element " + std::to_string(q));
  std::vector<int> out;
  for (int x = 0; x < f.source->size(); ++x) {
    if (f.target->leq(f.assignment[x], q)) out.push_back(x);
  }
  return out;
}

Poset lower_fiber(const PosetMap& f, int q) { return f.source->induced(lower_fiber_elements(f, q)); }

QuillenReport check_quillen_fibers(const PosetMap& f, unsigned threads) {
  QuillenReport report;
  report.fibers = parallel_map<FiberRecord>(f.target->size(), threads, [&](std::size_t qi) {
    const int q = static_cast<int>(qi);
    Poset fiber = lower_fiber(f, q);
    FiberRecord rec{q, f.target->label(q), static_cast<std::size_t>(fiber.size()), {}, false};
    if (fiber.size() == 0) return rec;
    auto cc = ChainComplex::of(order_complex(fiber));
    rec.reduced_betti = betti(cc, Coefficients::rationals());
    rec.pass = std::all_of(rec.reduced_betti.begin(), rec.reduced_betti.end(), [](long long b) { return b == 0; });
    return rec;
  });
  for (const auto& rec : report.fibers) report.all_pass = report.all_pass && rec.pass;
  return report;
}

}  // namespace fcx
