#include "factorcomplex/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "factorcomplex/errors.hpp"

namespace fcx {

// ---------------------------------------------------------------------------
// SparseMatrix / Coefficients

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  const int r = static_cast<int>(dense.size());
  const int c = r == 0 ? 0 : static_cast<int>(dense[0].size());
  SparseMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(dense[i].size()) != c) throw InvalidArgument("ragged dense matrix");
    for (int j = 0; j < c; ++j) {
      if (dense[i][j] != 0) m.columns[j].emplace_back(i, dense[i][j]);
    }
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& col : columns) total += col.size();
  return total;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Coefficients Coefficients::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw InvalidArgument("coefficient characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  Coefficients c;
  c.kind = Kind::Prime;
  c.p = static_cast<std::uint32_t>(p);
  return c;
}

Coefficients Coefficients::parse(const std::string& spec) {
  if (spec == "Q") return rationals();
  std::string digits;
  if (spec.rfind("GFp:", 0) == 0) {
    digits = spec.substr(4);
  } else if (spec.rfind("GF(", 0) == 0 && spec.size() > 4 && spec.back() == ')') {
    digits = spec.substr(3, spec.size() - 4);
  } else {
    throw InvalidArgument("unknown coefficients '" + spec + "' (expected Q or GFp:<p>)");
  }
  if (digits.empty() || digits.size() > 12 ||
      !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw InvalidArgument("bad prime in coefficients '" + spec + "'");
  }
  return prime(std::stoull(digits));
}

std::string Coefficients::name() const {
  return kind == Kind::Rational ? std::string("Q") : "GF(" + std::to_string(p) + ")";
}

// ---------------------------------------------------------------------------
// ChainComplex

ChainComplex ChainComplex::of(const SimplicialComplex& k) {
  ChainComplex cc;
  const int top = k.dimension();
  for (int d = 0; d <= top; ++d) cc.counts_.push_back(k.faces_of_dim(d).size());
  for (int d = 1; d <= top; ++d) {
    const auto& lower = k.faces_of_dim(d - 1);
    const auto& upper = k.faces_of_dim(d);
    SparseMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    Face sub;
    for (std::size_t j = 0; j < upper.size(); ++j) {
      const Face& f = upper[j];
      auto& col = m.columns[j];
      col.reserve(f.size());
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        sub.clear();
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (i != skip) sub.push_back(f[i]);
        }
        auto it = std::lower_bound(lower.begin(), lower.end(), sub);
        if (it == lower.end() || *it != sub) throw InvariantBreach("complex is not closed under faces");
        col.emplace_back(static_cast<int>(it - lower.begin()), skip % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
    }
    cc.boundaries_.push_back(std::move(m));
  }
  cc.check_composites();
  return cc;
}

ChainComplex::ChainComplex(std::vector<std::size_t> counts, std::vector<SparseMatrix> boundaries)
    : counts_(std::move(counts)), boundaries_(std::move(boundaries)) {
  if (counts_.empty() ? !boundaries_.empty() : boundaries_.size() + 1 != counts_.size()) {
    throw InvalidArgument("chain complex needs one boundary per positive dimension");
  }
  for (std::size_t d = 1; d < counts_.size(); ++d) {
    auto& m = boundaries_[d - 1];
    if (m.rows != static_cast<int>(counts_[d - 1]) || m.cols != static_cast<int>(counts_[d]) ||
        m.columns.size() != counts_[d]) {
      throw InvalidArgument("boundary " + std::to_string(d) + " has the wrong shape");
    }
    for (auto& col : m.columns) {
      std::sort(col.begin(), col.end());
      for (auto [r, v] : col) {
        if (r < 0 || r >= m.rows || v == 0) throw InvalidArgument("bad boundary entry");
        if (v != 1 && v != -1) {
          throw InvariantBreach("simplicial boundary entries must be +1 or -1");
        }
      }
      if (col.size() != d + 1) {
        throw InvariantBreach("boundary column of a " + std::to_string(d) + "-face must have " +
                              std::to_string(d + 1) + " entries");
      }
    }
  }
  check_composites();
}

void ChainComplex::check_composites() const {
  for (std::size_t d = 1; d + 1 < counts_.size(); ++d) {
    const auto& lower = boundaries_[d - 1];
    const auto& upper = boundaries_[d];
    std::map<int, std::int64_t> acc;
    for (int c = 0; c < upper.cols; ++c) {
      acc.clear();
      for (auto [r, a] : upper.columns[c]) {
        for (auto [r2, b] : lower.columns[r]) acc[r2] += a * b;
      }
      for (auto [r2, v] : acc) {
        if (v != 0) {
          throw InvariantBreach("boundary composite is non-zero in dimension " + std::to_string(d + 1),
                                "{\"dimension\":" + std::to_string(d + 1) + ",\"column\":" + std::to_string(c) +
                                    ",\"row\":" + std::to_string(r2) + "}");
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Ranks

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Row positions ordered by ascending row weight; columns by ascending
/// weight. Sparse rows first keeps fill-in low (static Markowitz order).
struct EliminationOrder {
  std::vector<int> row_position;
  std::vector<int> column_order;
};

EliminationOrder elimination_order(const SparseMatrix& m) {
  std::vector<int> weight(m.rows, 0);
  for (const auto& col : m.columns) {
    for (auto [r, v] : col) ++weight[r];
  }
  std::vector<int> rows(m.rows);
  std::iota(rows.begin(), rows.end(), 0);
  std::stable_sort(rows.begin(), rows.end(), [&](int a, int b) { return weight[a] < weight[b]; });
  EliminationOrder order;
  order.row_position.assign(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) order.row_position[rows[i]] = i;
  order.column_order.resize(m.cols);
  std::iota(order.column_order.begin(), order.column_order.end(), 0);
  std::stable_sort(order.column_order.begin(), order.column_order.end(),
                   [&](int a, int b) { return m.columns[a].size() < m.columns[b].size(); });
  return order;
}

}  // namespace

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
  if (p < 2) throw InvalidArgument("modulus must be prime");
  using Vec = std::vector<std::pair<int, std::uint64_t>>;
  const auto order = elimination_order(m);
  std::vector<Vec> pivots(m.rows);
  std::vector<char> has_pivot(m.rows, 0);
  std::size_t rank = 0;
  Vec v;
  Vec scratch;
  for (int c : order.column_order) {
    v.clear();
    for (auto [r, a] : m.columns[c]) {
      std::int64_t red = a % static_cast<std::int64_t>(p);
      if (red < 0) red += p;
      if (red) v.emplace_back(order.row_position[r], static_cast<std::uint64_t>(red));
    }
    std::sort(v.begin(), v.end());
    while (!v.empty() && has_pivot[v.front().first]) {
      const Vec& pv = pivots[v.front().first];
      const std::uint64_t factor = v.front().second;  // pivot rows are monic
      scratch.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < v.size() || j < pv.size()) {
        if (j == pv.size() || (i < v.size() && v[i].first < pv[j].first)) {
          scratch.push_back(v[i++]);
        } else if (i == v.size() || pv[j].first < v[i].first) {
          scratch.emplace_back(pv[j].first, (p - factor * pv[j].second % p) % p);
          ++j;
        } else {
          const std::uint64_t val = (v[i].second + p - factor * pv[j].second % p) % p;
          if (val) scratch.emplace_back(v[i].first, val);
          ++i;
          ++j;
        }
      }
      v.swap(scratch);
    }
    if (v.empty()) continue;
    const std::uint64_t inv = pow_mod(v.front().second, p - 2, p);
    for (auto& e : v) e.second = e.second * inv % p;
    has_pivot[v.front().first] = 1;
    pivots[v.front().first] = v;
    ++rank;
  }
  return rank;
}

std::size_t rank_exact(const SparseMatrix& m) {
  using Vec = std::vector<std::pair<int, BigInt>>;
  const auto order = elimination_order(m);
  std::vector<Vec> pivots(m.rows);
  std::vector<char> has_pivot(m.rows, 0);
  std::size_t rank = 0;
  Vec v;
  Vec scratch;
  for (int c : order.column_order) {
    v.clear();
    for (auto [r, a] : m.columns[c]) v.emplace_back(order.row_position[r], BigInt(a));
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!v.empty() && has_pivot[v.front().first]) {
      const Vec& pv = pivots[v.front().first];
      const BigInt lead_v = v.front().second;
      const BigInt lead_p = pv.front().second;
      // v <- lead_p * v - lead_v * pv, then divide out the content.
      scratch.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < v.size() || j < pv.size()) {
        if (j == pv.size() || (i < v.size() && v[i].first < pv[j].first)) {
          scratch.emplace_back(v[i].first, lead_p * v[i].second);
          ++i;
        } else if (i == v.size() || pv[j].first < v[i].first) {
          scratch.emplace_back(pv[j].first, -lead_v * pv[j].second);
          ++j;
        } else {
          BigInt val = lead_p * v[i].second - lead_v * pv[j].second;
          if (val != 0) scratch.emplace_back(v[i].first, std::move(val));
          ++i;
          ++j;
        }
      }
      BigInt g = 0;
      for (const auto& e : scratch) g = boost::multiprecision::gcd(g, e.second);
      if (g > 1) {
        for (auto& e : scratch) e.second /= g;
      }
      v.swap(scratch);
    }
    if (v.empty()) continue;
    has_pivot[v.front().first] = 1;
    pivots[v.front().first] = v;
    ++rank;
  }
  return rank;
}

namespace {

std::uint32_t random_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(1u << 30, (1u << 31) - 1);
  std::uint32_t candidate = dist(rng) | 1u;
  while (!is_prime(candidate)) candidate += 2;
  return candidate;
}

}  // namespace

std::size_t rank_rational(const SparseMatrix& m, const RankOptions& opts) {
  if (m.nonzeros() == 0) return 0;
  std::mt19937_64 rng(opts.seed);
  const std::uint32_t p1 = random_prime(rng);
  std::uint32_t p2 = random_prime(rng);
  while (p2 == p1) p2 = random_prime(rng);
  const std::size_t r1 = rank_mod_p(m, p1);
  const std::size_t r2 = rank_mod_p(m, p2);
  if (r1 == r2) return r1;
  return rank_exact(m);
}

std::vector<long long> betti(const ChainComplex& c, const Coefficients& coeffs, const RankOptions& opts) {
  const int top = c.top_dimension();
  if (top < 0) return {};
  std::vector<long long> ranks(top + 2, 0);
  for (int d = 1; d <= top; ++d) {
    ranks[d] = static_cast<long long>(coeffs.kind == Coefficients::Kind::Rational ? rank_rational(c.boundary(d), opts)
                                                                                  : rank_mod_p(c.boundary(d), coeffs.p));
  }
  std::vector<long long> out(top + 1);
  for (int d = 0; d <= top; ++d) {
    out[d] = static_cast<long long>(c.counts()[d]) - ranks[d] - ranks[d + 1];
  }
  out[0] -= 1;
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct Overflow {};

inline std::int64_t sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t prod;
  std::int64_t out;
  if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
  return out;
}
inline BigInt sub_mul(const BigInt& a, const BigInt& f, const BigInt& b) { return a - f * b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

/// Eliminates unit pivots in place. Returns the number of unit invariant
/// factors found; `rest` receives the surviving entries as a dense matrix.
template <class T>
std::size_t unit_prereduce(const SparseMatrix& m, std::vector<std::vector<BigInt>>& rest) {
  std::vector<std::map<int, T>> rows(m.rows);
  std::vector<std::set<int>> col_rows(m.cols);
  for (int c = 0; c < m.cols; ++c) {
    for (auto [r, v] : m.columns[c]) {
      rows[r][c] = T(v);
      col_rows[c].insert(r);
    }
  }
  std::size_t units = 0;
  bool progress = true;
  std::vector<int> cols(m.cols);
  while (progress) {
    progress = false;
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(),
                     [&](int a, int b) { return col_rows[a].size() < col_rows[b].size(); });
    for (int c : cols) {
      if (col_rows[c].empty()) continue;
      int best = -1;
      for (int r : col_rows[c]) {
        if (is_unit(rows[r].at(c)) && (best < 0 || rows[r].size() < rows[best].size())) best = r;
      }
      if (best < 0) continue;
      const T u = rows[best].at(c);
      const std::vector<int> others(col_rows[c].begin(), col_rows[c].end());
      for (int s : others) {
        if (s == best) continue;
        const T f = rows[s].at(c) * u;
        for (const auto& [cc, val] : rows[best]) {
          auto it = rows[s].find(cc);
          const T cur = it == rows[s].end() ? T(0) : it->second;
          T next = sub_mul(cur, f, val);
          if (next == 0) {
            if (it != rows[s].end()) {
              rows[s].erase(it);
              col_rows[cc].erase(s);
            }
          } else if (it == rows[s].end()) {
            rows[s].emplace(cc, std::move(next));
            col_rows[cc].insert(s);
          } else {
            it->second = std::move(next);
          }
        }
      }
      for (const auto& [cc, val] : rows[best]) col_rows[cc].erase(best);
      rows[best].clear();
      ++units;
      progress = true;
    }
  }
  std::vector<int> live_rows;
  std::set<int> live_cols;
  for (int r = 0; r < m.rows; ++r) {
    if (rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& [c, v] : rows[r]) live_cols.insert(c);
  }
  if (live_cols.size() > kMaxDenseSnfColumns) {
    throw CapExceeded("Smith form: " + std::to_string(live_cols.size()) + " columns remain after unit elimination");
  }
  std::unordered_map<int, int> col_index;
  for (int c : live_cols) col_index.emplace(c, static_cast<int>(col_index.size()));
  rest.assign(live_rows.size(), std::vector<BigInt>(live_cols.size(), 0));
  for (std::size_t i = 0; i < live_rows.size(); ++i) {
    for (const auto& [c, v] : rows[live_rows[i]]) rest[i][col_index.at(c)] = BigInt(v);
  }
  return units;
}

std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> diag;
  const std::size_t R = a.size();
  const std::size_t C = R == 0 ? 0 : a[0].size();
  auto abs_big = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };
  for (std::size_t t = 0; t < R && t < C; ++t) {
    // Smallest non-zero entry of the trailing block becomes the pivot.
    auto place_min = [&]() -> bool {
      std::size_t bi = R;
      std::size_t bj = C;
      BigInt best = 0;
      for (std::size_t i = t; i < R; ++i) {
        for (std::size_t j = t; j < C; ++j) {
          if (a[i][j] != 0 && (bi == R || abs_big(a[i][j]) < best)) {
            best = abs_big(a[i][j]);
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == R) return false;
      std::swap(a[t], a[bi]);
      if (bj != t) {
        for (std::size_t i = 0; i < R; ++i) std::swap(a[i][t], a[i][bj]);
      }
      return true;
    };
    if (!place_min()) break;
    bool settled = false;
    while (!settled) {
      settled = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < C; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          settled = false;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < R; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (std::size_t i = 0; i < R; ++i) std::swap(a[i][t], a[i][j]);
          settled = false;
        }
      }
      if (!settled) continue;
      // The pivot must divide the whole trailing block.
      for (std::size_t i = t + 1; i < R && settled; ++i) {
        for (std::size_t j = t + 1; j < C; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < C; ++k) a[t][k] += a[i][k];
            settled = false;
            break;
          }
        }
      }
    }
    diag.push_back(abs_big(a[t][t]));
  }
  return diag;
}

}  // namespace

std::vector<BigInt> smith_normal_form(const SparseMatrix& m) {
  std::vector<std::vector<BigInt>> rest;
  std::size_t units = 0;
  try {
    units = unit_prereduce<std::int64_t>(m, rest);
  } catch (const Overflow&) {
    units = unit_prereduce<BigInt>(m, rest);
  }
  std::vector<BigInt> factors(units, BigInt(1));
  auto tail = dense_snf(std::move(rest));
  std::sort(tail.begin(), tail.end());
  factors.insert(factors.end(), tail.begin(), tail.end());
  return factors;
}

// ---------------------------------------------------------------------------
// Report

HomologyReport homology_report(const SimplicialComplex& k, const HomologyOptions& opts) {
  HomologyReport rep;
  rep.coefficients = opts.coefficients;
  rep.face_counts = k.f_vector();
  rep.euler = k.euler_characteristic();
  const ChainComplex cc = ChainComplex::of(k);
  const int top = cc.top_dimension();
  if (top < 0) return rep;
  auto witness = [&](int d) {
    std::string w = "{\"face_counts\":[";
    for (std::size_t i = 0; i < rep.face_counts.size(); ++i) w += (i ? "," : "") + std::to_string(rep.face_counts[i]);
    return w + "],\"dimension\":" + std::to_string(d) + "}";
  };

  std::vector<long long> rational_rank(top + 2, 0);
  for (int d = 1; d <= top; ++d) {
    rational_rank[d] = static_cast<long long>(rank_rational(cc.boundary(d), opts.rank));
  }
  long long chi_betti = 0;
  for (int d = 0; d <= top; ++d) {
    const long long b = static_cast<long long>(cc.counts()[d]) - rational_rank[d] - rational_rank[d + 1];
    chi_betti += (d % 2 == 0 ? 1 : -1) * b;
  }
  if (chi_betti != rep.euler) {
    throw InvariantBreach("Euler characteristic mismatch: faces give " + std::to_string(rep.euler) +
                              ", Betti numbers give " + std::to_string(chi_betti),
                          witness(-1));
  }

  rep.torsion.assign(top + 1, {});
  bool torsion_free = true;
  if (opts.compute_torsion) {
    for (int d = 1; d <= top; ++d) {
      auto factors = smith_normal_form(cc.boundary(d));
      if (static_cast<long long>(factors.size()) != rational_rank[d]) {
        throw InvariantBreach("Smith form rank " + std::to_string(factors.size()) + " differs from rational rank " +
                              std::to_string(rational_rank[d]) + " in dimension " + std::to_string(d),
                              witness(d));
      }
      for (auto& f : factors) {
        if (f > 1) {
          rep.torsion[d - 1].push_back(std::move(f));
          torsion_free = false;
        }
      }
    }
    if (torsion_free) {
      for (int d = 1; d <= top; ++d) {
        const auto r2 = static_cast<long long>(rank_mod_p(cc.boundary(d), 2));
        if (r2 != rational_rank[d]) {
          throw InvariantBreach("torsion-free complex has mod-2 rank " + std::to_string(r2) + " != rational rank " +
                                std::to_string(rational_rank[d]) + " in dimension " + std::to_string(d),
                                witness(d));
        }
      }
    }
  }

  if (opts.coefficients.kind == Coefficients::Kind::Rational) {
    rep.betti.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
      rep.betti[d] = static_cast<long long>(cc.counts()[d]) - rational_rank[d] - rational_rank[d + 1];
    }
    rep.betti[0] -= 1;
  } else {
    rep.betti = betti(cc, opts.coefficients, opts.rank);
  }
  return rep;
}

}  // namespace fcx
