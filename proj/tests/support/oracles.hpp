#pragma once

// Independent reference implementations used by the tests. Nothing here
// calls into the library's algorithms; only plain data types are shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "factorcomplex/poset.hpp"
#include "factorcomplex/spheres.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using Dense = std::vector<std::vector<std::int64_t>>;

/// Rank over Q by fraction-free (Bareiss) elimination on big integers.
inline std::size_t dense_rank(const Dense& m) {
  if (m.empty()) return 0;
  std::vector<std::vector<cpp_int>> a(m.size(), std::vector<cpp_int>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) a[i][j] = m[i][j];
  }
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  cpp_int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Rank modulo a prime by plain Gaussian elimination.
inline std::size_t dense_rank_mod(const Dense& m, std::int64_t p) {
  if (m.empty()) return 0;
  std::vector<std::vector<std::int64_t>> a = m;
  for (auto& row : a) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  auto inv = [&](std::int64_t x) {
    std::int64_t r = 1, e = p - 2, b = x;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const std::int64_t iv = inv(a[r][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t f = a[i][c] * iv % p;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// Textbook Smith normal form of a small dense integer matrix: non-zero
/// invariant factors in divisibility order.
inline std::vector<cpp_int> dense_snf(const Dense& m) {
  if (m.empty() || m[0].empty()) return {};
  std::vector<std::vector<cpp_int>> a(m.size(), std::vector<cpp_int>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) a[i][j] = m[i][j];
  }
  const std::size_t rows = a.size(), cols = a[0].size();
  std::vector<cpp_int> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest non-zero entry in the remaining block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const cpp_int f = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const cpp_int f = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility into the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a[t][t] == 0) break;
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

/// Reduced Betti numbers over Q, from boundary matrices assembled here from
/// the face lists.
inline std::vector<long long> reduced_betti(const fcx::SimplicialComplex& k, std::int64_t p = 0) {
  const int top = k.dimension();
  if (top < 0) return {};
  std::vector<std::map<fcx::Face, std::size_t>> index(top + 1);
  for (int d = 0; d <= top; ++d) {
    const auto& faces = k.faces_of_dim(d);
    for (std::size_t i = 0; i < faces.size(); ++i) index[d][faces[i]] = i;
  }
  std::vector<long long> rank(top + 2, 0);
  for (int d = 1; d <= top; ++d) {
    const auto& faces = k.faces_of_dim(d);
    Dense m(k.faces_of_dim(d - 1).size(), std::vector<std::int64_t>(faces.size(), 0));
    for (std::size_t c = 0; c < faces.size(); ++c) {
      for (std::size_t drop = 0; drop < faces[c].size(); ++drop) {
        fcx::Face sub = faces[c];
        sub.erase(sub.begin() + static_cast<long>(drop));
        m[index[d - 1].at(sub)][c] = drop % 2 == 0 ? 1 : -1;
      }
    }
    rank[d] = static_cast<long long>(p == 0 ? dense_rank(m) : dense_rank_mod(m, p));
  }
  std::vector<long long> betti(top + 1);
  for (int d = 0; d <= top; ++d) {
    betti[d] = static_cast<long long>(k.faces_of_dim(d).size()) - rank[d] - rank[d + 1];
  }
  betti[0] -= 1;
  return betti;
}

// ---------------------------------------------------------------------------
// Free groups: words as signed ints, reduced by a stack.

using Word = std::vector<int>;

inline Word reduce(const Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline Word invert(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word mul(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(out);
}

/// Every element of length <= max_len that occurs in some ordered basis of
/// F_2 reachable from (a, b) by elementary Nielsen moves through bases whose
/// entries have length <= bound.
inline std::set<Word> primitive_orbit_f2(std::size_t max_len, std::size_t bound) {
  using Pair = std::pair<Word, Word>;
  std::set<Pair> seen{{{1}, {2}}};
  std::vector<Pair> frontier(seen.begin(), seen.end());
  std::set<Word> found;
  while (!frontier.empty()) {
    std::vector<Pair> next;
    for (const auto& [u, v] : frontier) {
      const std::vector<Pair> moves = {
          {mul(u, v), v}, {mul(u, invert(v)), v}, {mul(v, u), v}, {mul(invert(v), u), v},
          {u, mul(v, u)}, {u, mul(v, invert(u))}, {u, mul(u, v)}, {u, mul(invert(u), v)},
          {invert(u), v}, {u, invert(v)}, {v, u}};
      for (const auto& m : moves) {
        if (m.first.size() > bound || m.second.size() > bound) continue;
        if (seen.insert(m).second) next.push_back(m);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [u, v] : seen) {
    for (const Word& w : {u, v, invert(u), invert(v)}) {
      if (w.size() <= max_len) found.insert(w);
    }
  }
  return found;
}

/// All elements expressible as products of at most `factors` generators or
/// their inverses.
inline std::set<Word> bounded_products(const std::vector<Word>& gens, int factors) {
  std::set<Word> all{{}};
  std::set<Word> layer{{}};
  std::vector<Word> letters;
  for (const auto& g : gens) {
    letters.push_back(reduce(g));
    letters.push_back(invert(reduce(g)));
  }
  for (int k = 0; k < factors; ++k) {
    std::set<Word> next;
    for (const auto& w : layer) {
      for (const auto& g : letters) {
        Word x = mul(w, g);
        if (all.insert(x).second) next.insert(x);
      }
    }
    layer = std::move(next);
  }
  return all;
}

/// Whether w is a product of at most `factors` generators or inverses; stops
/// at the first layer containing w.
inline bool in_bounded_products(const std::vector<Word>& gens, const Word& w, int factors) {
  const Word target = reduce(w);
  std::set<Word> all{{}};
  std::vector<Word> layer{{}};
  std::vector<Word> letters;
  for (const auto& g : gens) {
    letters.push_back(reduce(g));
    letters.push_back(invert(reduce(g)));
  }
  if (target.empty()) return true;
  for (int k = 0; k < factors; ++k) {
    std::vector<Word> next;
    for (const auto& x : layer) {
      for (const auto& g : letters) {
        Word y = mul(x, g);
        if (y == target) return true;
        if (all.insert(y).second) next.push_back(std::move(y));
      }
    }
    layer = std::move(next);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Vector spaces over a prime field, vectors encoded as base-q integers.

struct PrimeSpace {
  int n;
  int q;

  int size() const {
    int s = 1;
    for (int i = 0; i < n; ++i) s *= q;
    return s;
  }
  std::vector<int> digits(int v) const {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) {
      d[i] = v % q;
      v /= q;
    }
    return d;
  }
  int encode(const std::vector<int>& d) const {
    int v = 0;
    for (int i = n - 1; i >= 0; --i) v = v * q + d[i];
    return v;
  }
  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < n; ++i) x[i] = (x[i] + y[i]) % q;
    return encode(x);
  }
  int scale(int a, int c) const {
    auto x = digits(a);
    for (auto& d : x) d = d * c % q;
    return encode(x);
  }
  /// The set of vectors spanned by the given ones.
  std::set<int> span(const std::vector<int>& gens) const {
    std::set<int> s{0};
    for (int g : gens) {
      std::set<int> next;
      for (int v : s) {
        for (int c = 0; c < q; ++c) next.insert(add(v, scale(g, c)));
      }
      s = std::move(next);
    }
    return s;
  }
  /// All subspaces as vector sets, proper and non-zero only.
  std::vector<std::set<int>> proper_subspaces() const {
    std::set<std::set<int>> found;
    const int total = size();
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& gens, int start) {
      auto s = span(gens);
      if (s.size() > 1 && static_cast<int>(s.size()) < total) found.insert(s);
      if (static_cast<int>(gens.size()) == n) return;
      for (int v = start; v < total; ++v) {
        if (s.count(v)) continue;
        gens.push_back(v);
        rec(gens, v + 1);
        gens.pop_back();
      }
    };
    std::vector<int> gens;
    rec(gens, 1);
    return {found.begin(), found.end()};
  }
  /// Every ordered basis.
  std::vector<std::vector<int>> ordered_bases() const {
    std::vector<std::vector<int>> out;
    std::vector<int> b;
    std::function<void()> rec = [&]() {
      if (static_cast<int>(b.size()) == n) {
        out.push_back(b);
        return;
      }
      const auto s = span(b);
      for (int v = 1; v < size(); ++v) {
        if (s.count(v)) continue;
        b.push_back(v);
        rec();
        b.pop_back();
      }
    };
    rec();
    return out;
  }
  /// Some ordered basis spans each member by the basis vectors it contains.
  bool common_basis(const std::vector<std::set<int>>& family, const std::vector<std::vector<int>>& bases) const {
    for (const auto& b : bases) {
      bool ok = true;
      for (const auto& s : family) {
        std::vector<int> inside;
        for (int v : b) {
          if (s.count(v)) inside.push_back(v);
        }
        if (span(inside) != s) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }
};

// ---------------------------------------------------------------------------
// Graphs: brute-force canonical key over all base-fixing permutations.

inline std::vector<int> brute_canonical_key(const fcx::LabeledGraph& g) {
  const int v = g.vertex_count();
  std::vector<int> others;
  for (int x = 0; x < v; ++x) {
    if (x != g.base()) others.push_back(x);
  }
  std::vector<int> best;
  do {
    std::vector<int> order{g.base()};
    order.insert(order.end(), others.begin(), others.end());
    std::vector<int> pos(v);
    for (int i = 0; i < v; ++i) pos[order[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
      a = pos[a];
      b = pos[b];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<int> key{g.rank(), v};
    for (int x : order) key.push_back(g.genus(x));
    for (const auto& [a, b] : edges) {
      key.push_back(a);
      key.push_back(b);
    }
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(others.begin(), others.end()));
  return best;
}

/// All based-isomorphism classes of connected genus-labelled multigraphs of
/// total rank n with exactly `edges` edges and no genus-0 leaf, by listing
/// every labelled multigraph and keeping brute-force canonical keys.
inline std::set<std::vector<int>> brute_graph_classes(int n, int edges) {
  std::set<std::vector<int>> classes;
  for (int v = 1; v <= edges + 1; ++v) {
    const int betti = edges - v + 1;
    if (betti < 0 || betti > n) continue;
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < v; ++a) {
      for (int b = a; b < v; ++b) slots.emplace_back(a, b);
    }
    // Multisets of `edges` slots.
    std::vector<int> pick(edges, 0);
    std::function<void(int, int)> rec = [&](int i, int start) {
      if (i == edges) {
        std::vector<std::pair<int, int>> es;
        for (int s : pick) es.push_back(slots[s]);
        std::vector<int> genus(v, 0);
        std::function<void(int, int)> spread = [&](int x, int left) {
          if (x == v) {
            if (left != 0) return;
            try {
              fcx::LabeledGraph g(n, 0, genus, es);
              if (fcx::bounds_ball(g)) return;
              classes.insert(brute_canonical_key(g));
            } catch (const std::exception&) {
            }
            return;
          }
          for (int k = 0; k <= left; ++k) {
            genus[x] = k;
            spread(x + 1, left - k);
          }
          genus[x] = 0;
        };
        spread(0, n - betti);
        return;
      }
      for (int s = start; s < static_cast<int>(slots.size()); ++s) {
        pick[i] = s;
        rec(i + 1, s);
      }
    };
    rec(0, 0);
  }
  return classes;
}

}  // namespace oracle
