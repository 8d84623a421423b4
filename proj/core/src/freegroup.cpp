#include "factorcomplex/freegroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "factorcomplex/errors.hpp"
#include "factorcomplex/parallel.hpp"

namespace fcx {

// ---------------------------------------------------------------------------
// Words

Word parse_word(const std::string& text, int n) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    int letter = 0;
    if (c >= 'a' && c <= 'z') {
      letter = c - 'a' + 1;
    } else if (c >= 'A' && c <= 'Z') {
      letter = -(c - 'A' + 1);
    } else if (c == '1' && text.size() == 1) {
      return {};
    } else {
      throw InvalidArgument(std::string("invalid letter '") + c + "' in word \"" + text + "\"");
    }
    w.push_back(letter);
  }
  check_letters(w, n);
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (int l : w) {
    out.push_back(l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1));
  }
  return out;
}

void check_letters(const Word& w, int n) {
  if (n < 1 || n > 26) throw InvalidArgument("rank must lie in 1..26");
  for (int l : w) {
    if (l == 0 || l > n || l < -n) {
      throw InvalidArgument("letter " + std::to_string(l) + " outside F_" + std::to_string(n));
    }
  }
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (l == 0) throw InvalidArgument("zero letter");
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

// ---------------------------------------------------------------------------
// Stallings graphs

namespace {

using Edge = StallingsGraph::Edge;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Keeps the smaller representative so the base (vertex 0) stays 0.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

// Identifies vertices until no two edges with one label share a source or
// a target, then compacts ids with the base at 0.
std::pair<int, std::vector<Edge>> fold_raw(int vertex_count, std::vector<Edge> edges) {
  UnionFind uf(vertex_count);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::tuple<int, int, int>, int> slot;
    for (const auto& e : edges) {
      const int s = uf.find(e.source);
      const int t = uf.find(e.target);
      auto [fwd, fwd_new] = slot.emplace(std::make_tuple(s, e.label, 0), t);
      if (!fwd_new && uf.find(fwd->second) != t) {
        uf.unite(fwd->second, t);
        changed = true;
      }
      auto [bwd, bwd_new] = slot.emplace(std::make_tuple(uf.find(t), e.label, 1), uf.find(s));
      if (!bwd_new && uf.find(bwd->second) != uf.find(s)) {
        uf.unite(bwd->second, s);
        changed = true;
      }
    }
  }
  std::vector<int> compact(vertex_count, -1);
  int next = 0;
  compact[uf.find(0)] = next++;
  for (int v = 0; v < vertex_count; ++v) {
    const int r = uf.find(v);
    if (compact[r] < 0) compact[r] = next++;
  }
  std::set<Edge> unique;
  for (const auto& e : edges) unique.insert({compact[uf.find(e.source)], e.label, compact[uf.find(e.target)]});
  return {next, std::vector<Edge>(unique.begin(), unique.end())};
}

// Removes hanging trees: repeatedly deletes non-base vertices of degree 1.
std::pair<int, std::vector<Edge>> prune_core(int vertex_count, std::vector<Edge> edges) {
  std::vector<int> degree(vertex_count, 0);
  std::vector<std::vector<int>> incident(vertex_count);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    degree[edges[i].source]++;
    degree[edges[i].target]++;
    incident[edges[i].source].push_back(static_cast<int>(i));
    if (edges[i].target != edges[i].source) incident[edges[i].target].push_back(static_cast<int>(i));
  }
  std::vector<bool> edge_alive(edges.size(), true);
  std::vector<bool> vertex_alive(vertex_count, true);
  std::deque<int> queue;
  for (int v = 1; v < vertex_count; ++v) {
    if (degree[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (!vertex_alive[v] || degree[v] > 1) continue;
    vertex_alive[v] = false;
    for (int i : incident[v]) {
      if (!edge_alive[i]) continue;
      edge_alive[i] = false;
      const int other = edges[i].source == v ? edges[i].target : edges[i].source;
      degree[v]--;
      degree[other]--;
      if (other != 0 && vertex_alive[other] && degree[other] <= 1) queue.push_back(other);
    }
  }
  std::vector<int> compact(vertex_count, -1);
  int next = 0;
  for (int v = 0; v < vertex_count; ++v) {
    if (vertex_alive[v]) compact[v] = next++;
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edge_alive[i]) kept.push_back({compact[edges[i].source], edges[i].label, compact[edges[i].target]});
  }
  return {next, kept};
}

}  // namespace

StallingsGraph::StallingsGraph(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("rank must be positive");
  out_.assign(n, -1);
  in_.assign(n, -1);
  key_ = std::to_string(n) + ";1;";
}

StallingsGraph StallingsGraph::from_edges(int n, int vertex_count, const std::vector<Edge>& edges) {
  std::vector<int> out(static_cast<std::size_t>(vertex_count) * n, -1);
  std::vector<int> in(static_cast<std::size_t>(vertex_count) * n, -1);
  for (const auto& e : edges) {
    int& o = out[e.source * n + e.label];
    int& i = in[e.target * n + e.label];
    if (o >= 0 || i >= 0) throw InvariantBreach("graph handed to canonicalization is not folded");
    o = e.target;
    i = e.source;
  }
  // Breadth-first relabelling from the base over slots in a fixed order.
  std::vector<int> relabel(vertex_count, -1);
  std::vector<int> order{0};
  relabel[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int v = order[head];
    for (int l = 0; l < n; ++l) {
      for (int w : {out[v * n + l], in[v * n + l]}) {
        if (w >= 0 && relabel[w] < 0) {
          relabel[w] = static_cast<int>(order.size());
          order.push_back(w);
        }
      }
    }
  }
  if (static_cast<int>(order.size()) != vertex_count) throw InvariantBreach("Stallings graph is disconnected");
  StallingsGraph g(n);
  g.vertices_ = vertex_count;
  for (const auto& e : edges) g.edges_.push_back({relabel[e.source], e.label, relabel[e.target]});
  std::sort(g.edges_.begin(), g.edges_.end());
  g.out_.assign(static_cast<std::size_t>(vertex_count) * n, -1);
  g.in_.assign(static_cast<std::size_t>(vertex_count) * n, -1);
  std::ostringstream key;
  key << n << ';' << vertex_count << ';';
  for (const auto& e : g.edges_) {
    g.out_[e.source * n + e.label] = e.target;
    g.in_[e.target * n + e.label] = e.source;
    key << e.source << ',' << e.label << ',' << e.target << ';';
  }
  g.key_ = key.str();
  return g;
}

int StallingsGraph::step(int v, int letter) const {
  if (letter > 0) return out_[v * n_ + letter - 1];
  return in_[v * n_ - letter - 1];
}

bool StallingsGraph::contains(const Word& w) const {
  check_letters(w, n_);
  int v = 0;
  for (int l : w) {
    v = step(v, l);
    if (v < 0) return false;
  }
  return v == 0;
}

std::vector<Word> StallingsGraph::generators() const {
  std::vector<Word> path(vertices_);
  std::vector<bool> seen(vertices_, false);
  std::set<std::pair<int, int>> tree;  // (source, label) of tree edges
  std::vector<int> order{0};
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int v = order[head];
    for (int l = 0; l < n_; ++l) {
      const int w_out = out_[v * n_ + l];
      if (w_out >= 0 && !seen[w_out]) {
        seen[w_out] = true;
        path[w_out] = path[v];
        path[w_out].push_back(l + 1);
        tree.insert({v, l});
        order.push_back(w_out);
      }
      const int w_in = in_[v * n_ + l];
      if (w_in >= 0 && !seen[w_in]) {
        seen[w_in] = true;
        path[w_in] = path[v];
        path[w_in].push_back(-(l + 1));
        tree.insert({w_in, l});
        order.push_back(w_in);
      }
    }
  }
  std::vector<Word> gens;
  for (const auto& e : edges_) {
    if (tree.count({e.source, e.label})) continue;
    Word w = path[e.source];
    w.push_back(e.label + 1);
    gens.push_back(concat(w, inverse(path[e.target])));
  }
  return gens;
}

std::string StallingsGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph stallings {\n  0 [shape=doublecircle];\n";
  for (const auto& e : edges_) {
    out << "  " << e.source << " -> " << e.target << " [label=\"" << static_cast<char>('a' + e.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

StallingsGraph fold(int n, const std::vector<Word>& generators) {
  int vertex_count = 1;
  std::vector<Edge> edges;
  for (const auto& raw : generators) {
    check_letters(raw, n);
    const Word w = free_reduce(raw);
    if (w.empty()) continue;
    int prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int next = i + 1 == w.size() ? 0 : vertex_count++;
      const int l = w[i];
      if (l > 0) {
        edges.push_back({prev, l - 1, next});
      } else {
        edges.push_back({next, -l - 1, prev});
      }
      prev = next;
    }
  }
  auto [v1, folded] = fold_raw(vertex_count, std::move(edges));
  auto [v2, core] = prune_core(v1, std::move(folded));
  return StallingsGraph::from_edges(n, v2, core);
}

StallingsGraph intersect(const StallingsGraph& a, const StallingsGraph& b) {
  if (a.n_ != b.n_) throw InvalidArgument("intersection across different ranks");
  const int n = a.n_;
  std::map<std::pair<int, int>, int> id{{{0, 0}, 0}};
  std::vector<std::pair<int, int>> order{{0, 0}};
  std::set<Edge> edges;
  auto visit = [&](int x, int y) {
    auto [it, fresh] = id.emplace(std::make_pair(x, y), static_cast<int>(order.size()));
    if (fresh) order.emplace_back(x, y);
    return it->second;
  };
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto [x, y] = order[head];
    const int here = static_cast<int>(head);
    for (int l = 0; l < n; ++l) {
      const int xo = a.out_[x * n + l];
      const int yo = b.out_[y * n + l];
      if (xo >= 0 && yo >= 0) edges.insert({here, l, visit(xo, yo)});
      const int xi = a.in_[x * n + l];
      const int yi = b.in_[y * n + l];
      if (xi >= 0 && yi >= 0) edges.insert({visit(xi, yi), l, here});
    }
  }
  auto [v, core] = prune_core(static_cast<int>(order.size()), std::vector<Edge>(edges.begin(), edges.end()));
  return StallingsGraph::from_edges(n, v, core);
}

bool is_subgroup(const StallingsGraph& a, const StallingsGraph& b) {
  if (a.rank_context() != b.rank_context()) throw InvalidArgument("subgroups of different ranks");
  for (const auto& w : a.generators()) {
    if (!b.contains(w)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Automorphisms

Word apply(const Automorphism& phi, const Word& w) {
  Word out;
  for (int l : w) {
    const Word& image = phi.at(std::abs(l) - 1);
    if (l > 0) {
      out.insert(out.end(), image.begin(), image.end());
    } else {
      const Word inv = inverse(image);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

const std::vector<Automorphism>& whitehead_moves(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Automorphism>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n < 1) throw InvalidArgument("rank must be positive");
  if (n > 6) throw CapExceeded("Whitehead moves are listed for rank <= 6");
  std::set<Automorphism> moves;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      Automorphism phi(n);
      for (int i = 0; i < n; ++i) phi[i] = {(signs >> i & 1) ? -(perm[i] + 1) : perm[i] + 1};
      moves.insert(std::move(phi));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Type II: for x != a^{+-1} pick one of x, xa, a^{-1}x, a^{-1}xa.
  int options = 1;
  for (int i = 1; i < n; ++i) options *= 4;
  for (int k = 0; k < n; ++k) {
    for (int a : {k + 1, -(k + 1)}) {
      for (int code = 0; code < options; ++code) {
        Automorphism phi(n);
        int c = code;
        for (int j = 0; j < n; ++j) {
          const int x = j + 1;
          if (j == k) {
            phi[j] = {x};
            continue;
          }
          switch (c % 4) {
            case 0: phi[j] = {x}; break;
            case 1: phi[j] = {x, a}; break;
            case 2: phi[j] = {-a, x}; break;
            default: phi[j] = {-a, x, a}; break;
          }
          c /= 4;
        }
        moves.insert(std::move(phi));
      }
    }
  }
  return cache.emplace(n, std::vector<Automorphism>(moves.begin(), moves.end())).first->second;
}

bool is_primitive(const Word& w, int n) {
  check_letters(w, n);
  Word current = cyclic_reduce(w);
  if (current.empty()) throw InvalidArgument("the trivial word is not primitive");
  const auto& moves = whitehead_moves(n);
  while (current.size() > 1) {
    Word best = current;
    for (const auto& phi : moves) {
      Word image = cyclic_reduce(fcx::apply(phi, current));
      if (image.size() < best.size() || (image.size() == best.size() && image.size() < current.size() && image < best)) {
        best = std::move(image);
      }
    }
    if (best.size() >= current.size()) break;
    current = std::move(best);
  }
  return current.size() == 1;
}

// ---------------------------------------------------------------------------
// Bases

namespace {

Word orient(const Word& w) {
  Word inv = inverse(w);
  return inv < w ? inv : w;
}

Basis normalize_basis(const std::vector<Word>& words) {
  Basis b;
  b.reserve(words.size());
  for (const auto& w : words) b.push_back(orient(w));
  std::sort(b.begin(), b.end());
  return b;
}

}  // namespace

std::vector<Basis> enumerate_bases(int n, int L, unsigned threads) {
  if (n < 1 || L < 1) throw InvalidArgument("enumerate_bases needs n >= 1 and L >= 1");
  if (n > kMaxFreeRank) throw CapExceeded("enumerate_bases supports n <= " + std::to_string(kMaxFreeRank));
  if (L > kMaxBasisLength) throw CapExceeded("enumerate_bases supports L <= " + std::to_string(kMaxBasisLength));
  std::vector<Word> standard;
  for (int i = 1; i <= n; ++i) standard.push_back({i});
  std::set<Basis> seen{normalize_basis(standard)};
  std::vector<Basis> frontier{*seen.begin()};
  while (!frontier.empty()) {
    auto next_lists = parallel_map<std::vector<Basis>>(frontier.size(), threads, [&](std::size_t idx) {
      const Basis& b = frontier[idx];
      std::vector<Basis> found;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          for (const Word& v : {b[j], inverse(b[j])}) {
            for (const Word& image : {concat(b[i], v), concat(v, b[i])}) {
              if (static_cast<int>(image.size()) > L) continue;
              auto moved = b;
              moved[i] = image;
              found.push_back(normalize_basis(moved));
            }
          }
        }
      }
      return found;
    });
    std::vector<Basis> next;
    for (auto& list : next_lists) {
      for (auto& b : list) {
        if (seen.insert(b).second) next.push_back(std::move(b));
      }
    }
    if (seen.size() > kMaxEnumeratedBases) {
      throw CapExceeded("more than " + std::to_string(kMaxEnumeratedBases) + " bases for n = " + std::to_string(n) +
                        ", L = " + std::to_string(L));
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<Basis> out(seen.begin(), seen.end());
  parallel_for(out.size(), threads, [&](std::size_t i) {
    if (!fold(n, out[i]).is_whole_group()) {
      std::string witness = "[";
      for (std::size_t k = 0; k < out[i].size(); ++k) witness += (k ? ",\"" : "\"") + format_word(out[i][k]) + "\"";
      throw InvariantBreach("enumerated tuple does not generate F_n", witness + "]");
    }
  });
  return out;
}

namespace {

std::string subgroup_label(const StallingsGraph& g) {
  std::string out = "<";
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += format_word(gens[i]);
  }
  return out + ">";
}

struct FactorRegistry {
  std::vector<StallingsGraph> factors;
  std::map<std::string, int> index;
};

// Folds every proper non-empty subset of every basis. Factors are ordered by
// (rank, key) so ids do not depend on enumeration order.
FactorRegistry collect_factors(int n, const std::vector<Basis>& bases, unsigned threads) {
  const std::uint32_t full = (1u << n) - 1;
  auto per_basis = parallel_map<std::vector<StallingsGraph>>(bases.size(), threads, [&](std::size_t b) {
    std::vector<StallingsGraph> out;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      std::vector<Word> subset;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) subset.push_back(bases[b][i]);
      }
      out.push_back(fold(n, subset));
    }
    return out;
  });
  std::map<std::pair<int, std::string>, const StallingsGraph*> unique;
  for (const auto& list : per_basis) {
    for (const auto& g : list) unique.emplace(std::make_pair(g.rank(), g.key()), &g);
  }
  FactorRegistry reg;
  for (const auto& [k, g] : unique) {
    reg.index.emplace(g->key(), static_cast<int>(reg.factors.size()));
    reg.factors.push_back(*g);
  }
  return reg;
}

void check_free_caps(int n, const std::vector<Basis>& bases) {
  if (n < 2) throw InvalidArgument("truncated builders need n >= 2");
  if (n > kMaxFreeRank) throw CapExceeded("truncated builders support n <= " + std::to_string(kMaxFreeRank));
  for (const auto& b : bases) {
    if (static_cast<int>(b.size()) != n) throw InvalidArgument("basis of the wrong size");
  }
}

}  // namespace

FreeFactorComplex build_truncated_CB(int n, const std::vector<Basis>& bases, unsigned threads) {
  check_free_caps(n, bases);
  auto reg = collect_factors(n, bases, threads);
  const std::uint32_t full = (1u << n) - 1;
  std::set<Face> faces;
  for (const auto& b : bases) {
    Face face;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      std::vector<Word> subset;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) subset.push_back(b[i]);
      }
      face.push_back(reg.index.at(fold(n, subset).key()));
    }
    std::sort(face.begin(), face.end());
    faces.insert(std::move(face));
  }
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < reg.factors.size(); ++i) vertices.push_back({static_cast<int>(i), subgroup_label(reg.factors[i])});
  auto complex = face_closure(std::move(vertices), std::vector<Face>(faces.begin(), faces.end()));
  return {std::move(reg.factors), std::move(complex)};
}

FreeFactorComplex build_truncated_CB(int n, int L, unsigned threads) {
  return build_truncated_CB(n, enumerate_bases(n, L, threads), threads);
}

FreeDecompositionPoset build_truncated_PD(int n, const std::vector<Basis>& bases) {
  check_free_caps(n, bases);
  auto reg = collect_factors(n, bases, 1);
  std::set<std::vector<int>> elements;
  std::map<std::vector<Word>, int> fold_cache;
  auto factor_of = [&](std::vector<Word> block) {
    auto it = fold_cache.find(block);
    if (it != fold_cache.end()) return it->second;
    const int id = reg.index.at(fold(n, block).key());
    fold_cache.emplace(std::move(block), id);
    return id;
  };
  for (const auto& b : bases) {
    // Assign each basis element to "unused" (-1) or a block id; blocks are
    // numbered in order of first use so every set partition appears once.
    std::vector<int> block_of(n, -1);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
      if (i == n) {
        if (blocks == 0) return;
        std::vector<std::vector<Word>> parts(blocks);
        for (int k = 0; k < n; ++k) {
          if (block_of[k] >= 0) parts[block_of[k]].push_back(b[k]);
        }
        if (blocks == 1 && static_cast<int>(parts[0].size()) == n) return;
        std::vector<int> element;
        for (auto& p : parts) element.push_back(factor_of(std::move(p)));
        std::sort(element.begin(), element.end());
        elements.insert(std::move(element));
        return;
      }
      for (int k = -1; k <= blocks; ++k) {
        block_of[i] = k;
        rec(i + 1, k == blocks ? blocks + 1 : blocks);
      }
    };
    rec(0, 0);
  }
  FreeDecompositionPoset out;
  out.elements.assign(elements.begin(), elements.end());
  std::stable_sort(out.elements.begin(), out.elements.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const int f = static_cast<int>(reg.factors.size());
  std::vector<std::vector<bool>> sub(f, std::vector<bool>(f, false));
  for (int i = 0; i < f; ++i) {
    for (int j = 0; j < f; ++j) {
      sub[i][j] = i == j || (reg.factors[i].rank() <= reg.factors[j].rank() && is_subgroup(reg.factors[i], reg.factors[j]));
    }
  }
  std::vector<std::string> labels;
  for (const auto& e : out.elements) {
    std::string label = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) label += ',';
      label += subgroup_label(reg.factors[e[i]]);
    }
    labels.push_back(label + "}");
  }
  const auto& els = out.elements;
  auto poset = Poset::from_leq(std::move(labels), [&](int x, int y) {
    for (int a : els[x]) {
      bool inside = false;
      for (int b : els[y]) {
        if (sub[a][b]) {
          inside = true;
          break;
        }
      }
      if (!inside) return false;
    }
    return true;
  });
  out.factors = std::move(reg.factors);
  out.poset = std::make_shared<const Poset>(std::move(poset));
  return out;
}

FreeDecompositionPoset build_truncated_PD(int n, int L) { return build_truncated_PD(n, enumerate_bases(n, L)); }

}  // namespace fcx
