#include "factorcomplex/spheres.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "factorcomplex/errors.hpp"
#include "factorcomplex/parallel.hpp"

namespace fcx {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<LabeledGraph::EdgeEnds> normalized(std::vector<LabeledGraph::EdgeEnds> edges) {
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

LabeledGraph::LabeledGraph(int n, int base, std::vector<int> genus, std::vector<EdgeEnds> edges)
    : n_(n), base_(base), genus_(std::move(genus)), edges_(normalized(std::move(edges))) {
  const int v = vertex_count();
  if (v == 0 || base_ < 0 || base_ >= v) throw InvalidArgument("base vertex out of range");
  for (int g : genus_) {
    if (g < 0) throw InvalidArgument("negative genus label");
  }
  if (edges_.empty()) throw InvalidArgument("a sphere system graph needs at least one edge");
  DisjointSets ds(v);
  for (const auto& [a, b] : edges_) {
    if (a < 0 || b >= v) throw InvalidArgument("edge references an unknown vertex");
    ds.unite(a, b);
  }
  for (int x = 0; x < v; ++x) {
    if (ds.find(x) != 0) throw InvalidArgument("graph is disconnected");
  }
  if (total_rank() != n_) {
    throw InvalidArgument("first Betti number plus genera is " + std::to_string(total_rank()) + ", expected " +
                          std::to_string(n_));
  }
}

int LabeledGraph::valence(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

int LabeledGraph::loops_at(int v) const {
  int c = 0;
  for (const auto& [a, b] : edges_) c += (a == v && b == v);
  return c;
}

int LabeledGraph::total_rank() const {
  return first_betti() + std::accumulate(genus_.begin(), genus_.end(), 0);
}

int degree(const LabeledGraph& g) {
  int d = 0;
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (x != g.base()) d += g.valence(x) - 2 + 2 * g.genus(x);
  }
  return d;
}

std::vector<int> pillar_edges(const LabeledGraph& g) {
  std::vector<int> out;
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto [a, b] = g.edges()[i];
    if (a != b && (a == g.base() || b == g.base())) out.push_back(i);
  }
  return out;
}

std::vector<PuncturedComponent> punctured_components(const LabeledGraph& g) {
  const int base = g.base();
  DisjointSets ds(g.vertex_count());
  for (const auto& [a, b] : g.edges()) {
    if (a != base && b != base) ds.unite(a, b);
  }
  std::vector<PuncturedComponent> out;
  std::map<int, std::size_t> slot;  // root -> component index
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto [a, b] = g.edges()[i];
    if (a == base && b == base) {
      out.push_back({{}, {i}});
      continue;
    }
    const int root = ds.find(a == base ? b : a);
    auto [it, fresh] = slot.emplace(root, out.size());
    if (fresh) out.push_back({});
    out[it->second].edges.push_back(i);
  }
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (x != base) out[slot.at(ds.find(x))].vertices.push_back(x);
  }
  return out;
}

bool is_cut_basepoint(const LabeledGraph& g) { return punctured_components(g).size() > 1; }

bool is_cut_basepoint_loop_reading(const LabeledGraph& g) {
  return is_cut_basepoint(g) || g.loops_at(g.base()) > 0;
}

bool is_cut(const LabeledGraph& g) { return g.genus(g.base()) == 0 && is_cut_basepoint(g); }

bool in_FCDg(const LabeledGraph& g) { return g.genus(g.base()) > 0 || is_cut_basepoint(g); }

bool in_FCDg_loop_reading(const LabeledGraph& g) {
  return g.genus(g.base()) > 0 || is_cut_basepoint_loop_reading(g);
}

LabeledGraph collapse_edge(const LabeledGraph& g, int edge) {
  if (edge < 0 || edge >= g.edge_count()) throw InvalidArgument("unknown edge " + std::to_string(edge));
  if (g.edge_count() == 1) throw InvalidArgument("collapsing the only edge leaves no sphere");
  auto genus = g.genera();
  std::vector<LabeledGraph::EdgeEnds> edges;
  const auto [a, b] = g.edges()[edge];
  int base = g.base();
  if (a == b) {
    genus[a] += 1;
    for (int i = 0; i < g.edge_count(); ++i) {
      if (i != edge) edges.push_back(g.edges()[i]);
    }
  } else {
    const int keep = (b == base) ? b : a;
    const int gone = keep == a ? b : a;
    genus[keep] += genus[gone];
    genus.erase(genus.begin() + gone);
    auto remap = [&](int x) {
      if (x == gone) x = keep;
      return x > gone ? x - 1 : x;
    };
    for (int i = 0; i < g.edge_count(); ++i) {
      if (i != edge) edges.emplace_back(remap(g.edges()[i].first), remap(g.edges()[i].second));
    }
    base = remap(base);
  }
  const int betti = static_cast<int>(edges.size()) - static_cast<int>(genus.size()) + 1;
  if (betti + std::accumulate(genus.begin(), genus.end(), 0) != g.rank()) {
    throw InvariantBreach("collapse changed the total rank");
  }
  return LabeledGraph(g.rank(), base, std::move(genus), std::move(edges));
}

std::vector<int> decomposition_ranks(const LabeledGraph& g) {
  if (!is_cut(g)) throw InvalidArgument("decomposition ranks need a cut graph with base genus 0");
  std::vector<int> ranks;
  for (const auto& c : punctured_components(g)) {
    int r = static_cast<int>(c.edges.size()) - static_cast<int>(c.vertices.size());
    for (int x : c.vertices) r += g.genus(x);
    ranks.push_back(r);
  }
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

LabeledGraph tau_d_graph(const std::vector<int>& ranks) {
  if (ranks.empty()) throw InvalidArgument("tau_d needs at least one rank");
  std::vector<int> genus{0};
  std::vector<LabeledGraph::EdgeEnds> edges;
  int n = 0;
  for (int r : ranks) {
    if (r < 1) throw InvalidArgument("ranks must be positive");
    edges.emplace_back(0, static_cast<int>(genus.size()));
    genus.push_back(r);
    n += r;
  }
  return LabeledGraph(n, 0, std::move(genus), std::move(edges));
}

bool bounds_ball(const LabeledGraph& g) {
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (x != g.base() && g.genus(x) == 0 && g.valence(x) == 1) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Canonical labelling

namespace {

struct RawGraph {
  int n = 0;
  int base = 0;
  std::vector<int> genus;
  std::vector<LabeledGraph::EdgeEnds> edges;
};

class Canonizer {
 public:
  explicit Canonizer(const RawGraph& g) : g_(g), v_(static_cast<int>(g.genus.size())), mult_(v_ * v_, 0) {
    std::vector<int> valence(v_, 0);
    for (const auto& [a, b] : g.edges) {
      if (a == b) {
        mult_[a * v_ + a] += 1;
        valence[a] += 2;
      } else {
        mult_[a * v_ + b] += 1;
        mult_[b * v_ + a] += 1;
        valence[a] += 1;
        valence[b] += 1;
      }
    }
    std::vector<std::tuple<int, int, int, int>> seeds(v_);
    for (int x = 0; x < v_; ++x) seeds[x] = {x == g.base ? 0 : 1, g.genus[x], valence[x], mult_[x * v_ + x]};
    auto sorted = seeds;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    seed_.resize(v_);
    for (int x = 0; x < v_; ++x) {
      seed_[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), seeds[x]) - sorted.begin());
    }
  }

  CanonicalForm run() {
    search(seed_);
    return {best_order_, best_};
  }

 private:
  int m(int a, int b) const { return mult_[a * v_ + b]; }

  // Colour refinement: a vertex's new colour is its old colour plus the
  // multiset of (neighbour colour, multiplicity); colours are ranks, so the
  // induced order on cells only ever refines.
  std::vector<int> refine(std::vector<int> colors) const {
    int classes = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
    while (true) {
      std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(v_);
      for (int x = 0; x < v_; ++x) {
        sig[x].first = colors[x];
        for (int y = 0; y < v_; ++y) {
          if (y != x && m(x, y) > 0) sig[x].second.emplace_back(colors[y], m(x, y));
        }
        std::sort(sig[x].second.begin(), sig[x].second.end());
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int x = 0; x < v_; ++x) {
        colors[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
      }
      const int now = static_cast<int>(sorted.size());
      if (now == classes) return colors;
      classes = now;
    }
  }

  bool twins(int a, int b) const {
    if (seed_[a] != seed_[b] || m(a, a) != m(b, b)) return false;
    for (int y = 0; y < v_; ++y) {
      if (y != a && y != b && m(a, y) != m(b, y)) return false;
    }
    return true;
  }

  std::vector<int> encode(const std::vector<int>& order) const {
    std::vector<int> enc{g_.n, v_};
    for (int x : order) {
      enc.push_back(x == g_.base ? 1 : 0);
      enc.push_back(g_.genus[x]);
      enc.push_back(m(x, x));
    }
    for (int i = 0; i < v_; ++i) {
      for (int j = i + 1; j < v_; ++j) enc.push_back(m(order[i], order[j]));
    }
    return enc;
  }

  void search(std::vector<int> colors) {
    colors = refine(std::move(colors));
    std::vector<int> order(v_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
    int cell_color = -1;
    for (int i = 0; i + 1 < v_; ++i) {
      if (colors[order[i]] == colors[order[i + 1]]) {
        cell_color = colors[order[i]];
        break;
      }
    }
    if (cell_color < 0) {
      auto enc = encode(order);
      if (best_.empty() || enc < best_) {
        best_ = std::move(enc);
        best_order_ = order;
      }
      return;
    }
    std::vector<int> reps;
    for (int x : order) {
      if (colors[x] != cell_color) continue;
      bool covered = false;
      for (int r : reps) {
        if (twins(r, x)) {
          covered = true;
          break;
        }
      }
      if (!covered) reps.push_back(x);
    }
    for (int x : reps) {
      std::vector<int> next(v_);
      for (int y = 0; y < v_; ++y) next[y] = 2 * colors[y] + 1;
      next[x] = 2 * colors[x];
      search(std::move(next));
    }
  }

  const RawGraph& g_;
  int v_;
  std::vector<int> mult_;
  std::vector<int> seed_;
  std::vector<int> best_;
  std::vector<int> best_order_;
};

RawGraph raw_of(const LabeledGraph& g) { return {g.rank(), g.base(), g.genera(), g.edges()}; }

RawGraph relabel(const RawGraph& g, const std::vector<int>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  RawGraph out{g.n, pos[g.base], std::vector<int>(order.size()), {}};
  for (std::size_t i = 0; i < order.size(); ++i) out.genus[i] = g.genus[order[i]];
  for (const auto& [a, b] : g.edges) out.edges.emplace_back(pos[a], pos[b]);
  out.edges = normalized(std::move(out.edges));
  return out;
}

}  // namespace

CanonicalForm canonical_form(const LabeledGraph& g) {
  const RawGraph raw = raw_of(g);
  return Canonizer(raw).run();
}

LabeledGraph canonical_graph(const LabeledGraph& g) {
  const RawGraph raw = raw_of(g);
  auto form = Canonizer(raw).run();
  auto out = relabel(raw, form.order);
  return LabeledGraph(out.n, out.base, std::move(out.genus), std::move(out.edges));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Skeleton {
  RawGraph graph;  // genus all zero, base 0, canonical
  int betti = 0;
};

int leaf_count(const RawGraph& g) {
  std::vector<int> valence(g.genus.size(), 0);
  for (const auto& [a, b] : g.edges) {
    valence[a]++;
    valence[b]++;
  }
  int leaves = 0;
  for (std::size_t x = 0; x < valence.size(); ++x) leaves += (static_cast<int>(x) != g.base && valence[x] == 1);
  return leaves;
}

// Leaves need genus >= 1 in the end. Each further edge between existing
// vertices adds one to the Betti number and removes at most two leaves,
// and pendant edges never reduce the leaf count.
bool completable(const RawGraph& g, int betti, int n, int edges_left) {
  const int k = std::min(edges_left, n - betti);
  return leaf_count(g) - 2 * k <= n - betti - k;
}

std::vector<int> canonical_key(const RawGraph& g, RawGraph* canonical) {
  auto form = Canonizer(g).run();
  if (canonical) *canonical = relabel(g, form.order);
  return form.encoding;
}

}  // namespace

std::vector<LabeledGraph> enumerate_graphs(int n, int max_edges, unsigned threads) {
  if (n < 1 || max_edges < 1) throw InvalidArgument("enumerate_graphs needs n >= 1 and max_edges >= 1");
  if (n > kMaxSphereRank) throw CapExceeded("enumerate_graphs supports n <= " + std::to_string(kMaxSphereRank));
  if (max_edges > kMaxSphereEdges) {
    throw CapExceeded("enumerate_graphs supports max_edges <= " + std::to_string(kMaxSphereEdges));
  }
  std::vector<Skeleton> level{{RawGraph{n, 0, {0}, {}}, 0}};
  std::vector<std::vector<Skeleton>> levels;
  for (int e = 1; e <= max_edges; ++e) {
    auto grown = parallel_map<std::vector<std::pair<std::vector<int>, Skeleton>>>(
        level.size(), threads, [&](std::size_t idx) {
          const auto& s = level[idx];
          const int v = static_cast<int>(s.graph.genus.size());
          std::vector<std::pair<std::vector<int>, Skeleton>> out;
          auto consider = [&](RawGraph g, int betti) {
            if (!completable(g, betti, n, max_edges - e)) return;
            RawGraph canonical;
            auto key = canonical_key(g, &canonical);
            out.push_back({std::move(key), {std::move(canonical), betti}});
          };
          if (s.betti < n) {
            for (int a = 0; a < v; ++a) {
              for (int b = a; b < v; ++b) {
                RawGraph g = s.graph;
                g.edges.emplace_back(a, b);
                g.edges = normalized(std::move(g.edges));
                consider(std::move(g), s.betti + 1);
              }
            }
          }
          for (int a = 0; a < v; ++a) {
            RawGraph g = s.graph;
            g.genus.push_back(0);
            g.edges.emplace_back(a, v);
            consider(std::move(g), s.betti);
          }
          return out;
        });
    std::map<std::vector<int>, Skeleton> unique;
    for (auto& list : grown) {
      for (auto& [key, s] : list) unique.emplace(std::move(key), std::move(s));
    }
    level.clear();
    for (auto& [key, s] : unique) level.push_back(std::move(s));
    levels.push_back(level);
  }

  std::vector<Skeleton> skeletons;
  for (auto& l : levels) skeletons.insert(skeletons.end(), l.begin(), l.end());
  // Genus distributions per skeleton; isomorphic labelled graphs can only
  // come from the same skeleton, so dedup stays local.
  auto labelled = parallel_map<std::vector<std::pair<std::vector<int>, RawGraph>>>(
      skeletons.size(), threads, [&](std::size_t idx) {
        const auto& s = skeletons[idx];
        const RawGraph& sk = s.graph;
        const int v = static_cast<int>(sk.genus.size());
        std::vector<int> valence(v, 0);
        for (const auto& [a, b] : sk.edges) {
          valence[a]++;
          valence[b]++;
        }
        std::vector<int> genus(v, 0);
        int budget = n - s.betti;
        for (int x = 0; x < v; ++x) {
          if (x != sk.base && valence[x] == 1) {
            genus[x] = 1;
            --budget;
          }
        }
        std::map<std::vector<int>, RawGraph> found;
        if (budget < 0) return std::vector<std::pair<std::vector<int>, RawGraph>>{};
        std::function<void(int, int)> spread = [&](int x, int left) {
          if (x == v - 1) {
            genus[x] += left;
            RawGraph g = sk;
            g.genus = genus;
            RawGraph canonical;
            auto key = canonical_key(g, &canonical);
            found.emplace(std::move(key), std::move(canonical));
            genus[x] -= left;
            return;
          }
          for (int k = 0; k <= left; ++k) {
            genus[x] += k;
            spread(x + 1, left - k);
            genus[x] -= k;
          }
        };
        spread(0, budget);
        return std::vector<std::pair<std::vector<int>, RawGraph>>(found.begin(), found.end());
      });
  std::vector<std::pair<std::vector<int>, RawGraph>> all;
  for (auto& list : labelled) {
    for (auto& item : list) all.push_back(std::move(item));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.second.edges.size() != b.second.edges.size()) return a.second.edges.size() < b.second.edges.size();
    return a.first < b.first;
  });
  std::vector<LabeledGraph> out;
  out.reserve(all.size());
  for (auto& [key, g] : all) {
    LabeledGraph lg(g.n, g.base, std::move(g.genus), std::move(g.edges));
    if (bounds_ball(lg)) throw InvariantBreach("enumeration produced a ball-bounding vertex");
    out.push_back(std::move(lg));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verifiers

namespace {

using Check = std::function<void(const LabeledGraph&, std::size_t& checked, std::size_t& changes,
                                 std::vector<SphereViolation>& violations)>;

SphereReport run_check(const std::string& name, const std::vector<LabeledGraph>& graphs, unsigned threads,
                       const Check& check) {
  struct Partial {
    std::size_t checked = 0;
    std::size_t changes = 0;
    std::vector<SphereViolation> violations;
  };
  auto parts = parallel_map<Partial>(graphs.size(), threads, [&](std::size_t i) {
    Partial p;
    check(graphs[i], p.checked, p.changes, p.violations);
    return p;
  });
  SphereReport report;
  report.n = graphs.empty() ? 0 : graphs.front().rank();
  for (const auto& g : graphs) report.max_edges = std::max(report.max_edges, g.edge_count());
  report.graphs = graphs.size();
  std::size_t checked = 0;
  for (auto& p : parts) {
    checked += p.checked;
    report.reading_outcome_changes += p.changes;
    for (auto& v : p.violations) report.violations.push_back(std::move(v));
  }
  report.checked.emplace_back(name, checked);
  return report;
}

void merge_into(SphereReport& into, SphereReport&& from) {
  for (auto& c : from.checked) into.checked.push_back(std::move(c));
  for (auto& v : from.violations) into.violations.push_back(std::move(v));
  into.reading_outcome_changes += from.reading_outcome_changes;
}

}  // namespace

SphereReport verify_degree_pillar(const std::vector<LabeledGraph>& graphs, unsigned threads) {
  return run_check("degree-pillar", graphs, threads,
                   [](const LabeledGraph& g, std::size_t& checked, std::size_t&, std::vector<SphereViolation>& out) {
                     if (g.edge_count() < 2) return;
                     const auto pillar = pillar_edges(g);
                     const int before = degree(g);
                     for (int e = 0; e < g.edge_count(); ++e) {
                       if (std::binary_search(pillar.begin(), pillar.end(), e)) continue;
                       auto h = collapse_edge(g, e);
                       ++checked;
                       if (degree(h) != before) {
                         out.push_back({"degree-pillar",
                                        "collapsing non-pillar edge " + std::to_string(e) + " changed the degree from " +
                                            std::to_string(before) + " to " + std::to_string(degree(h)),
                                        g,
                                        {h}});
                       }
                     }
                   });
}

SphereReport verify_degree_inclusion(const std::vector<LabeledGraph>& graphs, unsigned threads) {
  return run_check(
      "degree-inclusion", graphs, threads,
      [](const LabeledGraph& g, std::size_t& checked, std::size_t& changes, std::vector<SphereViolation>& out) {
        if (degree(g) > g.rank() - 2) return;
        ++checked;
        const bool pass = in_FCDg(g);
        if (pass != in_FCDg_loop_reading(g)) ++changes;
        if (!pass) {
          out.push_back({"degree-inclusion", "degree " + std::to_string(degree(g)) + " <= n-2 but not in FCD^g", g, {}});
        }
      });
}

SphereReport verify_face_closure(const std::vector<LabeledGraph>& graphs, unsigned threads) {
  return run_check(
      "face-closure", graphs, threads,
      [](const LabeledGraph& g, std::size_t& checked, std::size_t& changes, std::vector<SphereViolation>& out) {
        if (g.edge_count() < 2) return;
        const bool in = in_FCDg(g);
        const bool in_alt = in_FCDg_loop_reading(g);
        for (int e = 0; e < g.edge_count(); ++e) {
          auto h = collapse_edge(g, e);
          const bool ok = !in || in_FCDg(h);
          const bool ok_alt = !in_alt || in_FCDg_loop_reading(h);
          if (in) ++checked;
          if (ok != ok_alt) ++changes;
          if (!ok) {
            out.push_back({"face-closure", "collapsing edge " + std::to_string(e) + " leaves FCD^g", g, {h}});
          }
        }
      });
}

SphereReport verify_decomposition_ranks(const std::vector<LabeledGraph>& graphs, unsigned threads) {
  return run_check("decomposition-ranks", graphs, threads,
                   [](const LabeledGraph& g, std::size_t& checked, std::size_t&, std::vector<SphereViolation>& out) {
                     if (!is_cut(g)) return;
                     ++checked;
                     const auto ranks = decomposition_ranks(g);
                     const int sum = std::accumulate(ranks.begin(), ranks.end(), 0);
                     const bool positive = std::all_of(ranks.begin(), ranks.end(), [](int r) { return r > 0; });
                     if (sum != g.rank() || !positive || ranks.size() < 2) {
                       out.push_back({"decomposition-ranks",
                                      "ranks sum to " + std::to_string(sum) + " over " + std::to_string(ranks.size()) +
                                          " components",
                                      g,
                                      {}});
                     }
                   });
}

SphereReport verify_tau_degree(int n) {
  if (n < 1) throw InvalidArgument("verify_tau_degree needs n >= 1");
  std::vector<LabeledGraph> stars;
  std::vector<std::vector<int>> partitions;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      auto p = current;
      std::sort(p.begin(), p.end());
      partitions.push_back(std::move(p));
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(left - part, part);
      current.pop_back();
    }
  };
  for (int m = 1; m <= n; ++m) rec(m, m);
  SphereReport report;
  report.n = n;
  std::size_t checked = 0;
  for (const auto& p : partitions) {
    const auto g = tau_d_graph(p);
    const int total = std::accumulate(p.begin(), p.end(), 0);
    const int k = static_cast<int>(p.size());
    ++checked;
    std::vector<std::string> problems;
    if (degree(g) != 2 * total - k) problems.push_back("degree " + std::to_string(degree(g)) + " != 2n-k");
    if (!in_FCDg(g) && k > 1) problems.push_back("not in FCD^g");
    if (k > 1 && decomposition_ranks(g) != p) problems.push_back("decomposition ranks differ from input");
    if (k > 1 && !(canonical_graph(tau_d_graph(decomposition_ranks(g))) == canonical_graph(g))) {
      problems.push_back("tau_d of the decomposition ranks is not isomorphic to the input");
    }
    if (!pillar_edges(g).empty() && static_cast<int>(pillar_edges(g).size()) != k) {
      problems.push_back("pillar is not every edge");
    }
    for (auto& msg : problems) report.violations.push_back({"tau-degree", msg, g, {}});
  }
  report.checked.emplace_back("tau-degree", checked);
  return report;
}

SphereReport verify_all(int n, int max_edges, unsigned threads) {
  const auto graphs = enumerate_graphs(n, max_edges, threads);
  SphereReport report;
  report.n = n;
  report.max_edges = max_edges;
  report.graphs = graphs.size();
  for (const auto& g : graphs) {
    if (g.genus(g.base()) == 0 && is_cut_basepoint(g) != is_cut_basepoint_loop_reading(g)) {
      ++report.reading_divergences;
    }
  }
  merge_into(report, verify_degree_pillar(graphs, threads));
  merge_into(report, verify_degree_inclusion(graphs, threads));
  merge_into(report, verify_face_closure(graphs, threads));
  merge_into(report, verify_decomposition_ranks(graphs, threads));
  merge_into(report, verify_tau_degree(n));
  return report;
}

}  // namespace fcx
