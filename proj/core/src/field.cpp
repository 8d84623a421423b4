#include "factorcomplex/field.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "factorcomplex/errors.hpp"
#include "factorcomplex/parallel.hpp"

namespace fcx {

// ---------------------------------------------------------------------------
// GaloisField

namespace {

// Irreducible polynomials for the non-prime fields, as coefficient lists of
// the reduction x^k = sum c_i x^i (low degree first).
struct Extension {
  int q;
  int p;
  int k;
  std::vector<int> reduction;
};

const Extension* extension_for(int q) {
  static const std::array<Extension, 3> table = {{
      {4, 2, 2, {1, 1}},     // x^2 = x + 1
      {8, 2, 3, {1, 1, 0}},  // x^3 = x + 1
      {9, 3, 2, {2, 0}},     // x^2 = -1
  }};
  for (const auto& e : table) {
    if (e.q == q) return &e;
  }
  return nullptr;
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
  const Extension* ext = extension_for(q);
  if (ext == nullptr && !(q == 2 || q == 3 || q == 5 || q == 7)) {
    throw InvalidArgument("field order " + std::to_string(q) + " is not a prime power <= 9");
  }
  p_ = ext ? ext->p : q;
  const int k = ext ? ext->k : 1;
  auto digits = [&](int a) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = k - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  };
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a);
    std::vector<int> dn(k);
    for (int i = 0; i < k; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<std::uint8_t>(encode(dn));
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b);
      std::vector<int> ds(k);
      for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = static_cast<std::uint8_t>(encode(ds));
      // Schoolbook product, then reduce degrees >= k.
      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      }
      for (int deg = 2 * k - 2; deg >= k; --deg) {
        const int c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (int i = 0; i < k; ++i) prod[deg - k + i] = (prod[deg - k + i] + c * ext->reduction[i]) % p_;
      }
      prod.resize(k);
      mul_[a * q + b] = static_cast<std::uint8_t>(encode(prod));
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
    if (inv_[a] == 0) throw InvariantBreach("GF(" + std::to_string(q) + ") table has no inverse");
  }
}

const GaloisField& GaloisField::get(int q) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaloisField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[q];
  if (!slot) slot = std::make_unique<GaloisField>(q);
  return *slot;
}

std::uint8_t GaloisField::inv(std::uint8_t a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  return inv_[a];
}

// ---------------------------------------------------------------------------
// Linear algebra

std::vector<FieldVector> rref(const GaloisField& f, std::vector<FieldVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < n && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const std::uint8_t inv = f.inv(rows[lead][col]);
    for (auto& x : rows[lead]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      const std::uint8_t factor = rows[r][col];
      for (std::size_t c = 0; c < n; ++c) rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[lead][c]));
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

Subspace::Subspace(int n, int q, std::vector<FieldVector> generators) : n_(n), q_(q) {
  const auto& f = GaloisField::get(q);
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n) throw InvalidArgument("generator has the wrong length");
    for (auto x : g) {
      if (x >= q) throw InvalidArgument("generator entry outside GF(q)");
    }
  }
  rows_ = rref(f, std::move(generators));
  if (rows_.empty()) throw InvalidArgument("the zero subspace is not a Subspace");
}

bool Subspace::contains(const FieldVector& v) const {
  auto rows = rows_;
  rows.push_back(v);
  return static_cast<int>(rref(GaloisField::get(q_), std::move(rows)).size()) == dimension();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_ || other.q_ != q_) throw InvalidArgument("subspaces of different ambient spaces");
  if (other.dimension() > dimension()) return false;
  auto rows = rows_;
  rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
  return static_cast<int>(rref(GaloisField::get(q_), std::move(rows)).size()) == dimension();
}

std::string Subspace::key() const {
  std::string out;
  out.reserve(2 + rows_.size() * n_);
  out.push_back(static_cast<char>(n_));
  out.push_back(static_cast<char>(q_));
  for (const auto& r : rows_) {
    for (auto x : r) out.push_back(static_cast<char>(x));
  }
  return out;
}

std::string Subspace::label() const {
  std::string out = "<";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ',';
    for (auto x : rows_[i]) out += static_cast<char>('0' + x);
  }
  return out + ">";
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.q_ <=> b.q_; c != 0) return c;
  if (auto c = a.dimension() <=> b.dimension(); c != 0) return c;
  if (a.rows_ < b.rows_) return std::strong_ordering::less;
  if (b.rows_ < a.rows_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  auto rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient_dimension(), a.field_order(), std::move(rows));
}

Subspace span_of(const std::vector<Subspace>& parts) {
  if (parts.empty()) throw InvalidArgument("span of an empty family");
  std::vector<FieldVector> rows;
  for (const auto& s : parts) rows.insert(rows.end(), s.basis().begin(), s.basis().end());
  return Subspace(parts[0].ambient_dimension(), parts[0].field_order(), std::move(rows));
}

bool is_independent(const std::vector<Subspace>& parts) {
  if (parts.empty()) return true;
  int total = 0;
  for (const auto& s : parts) total += s.dimension();
  return span_of(parts).dimension() == total;
}

std::uint64_t gaussian_binomial(int n, int d, int q) {
  if (d < 0 || d > n) return 0;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  std::vector<std::uint64_t> pw(n + 1, 1);
  for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * static_cast<std::uint64_t>(q);
  for (int i = 0; i < d; ++i) {
    num *= pw[n - i] - 1;
    den *= pw[i + 1] - 1;
  }
  return num / den;
}

namespace {

void check_ambient(int n, int q) {
  GaloisField::get(q);
  if (n < 1) throw InvalidArgument("ambient dimension must be positive");
  if (n > 4) throw CapExceeded("ambient dimension " + std::to_string(n) + " exceeds 4");
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(int n, int q, int d) {
  check_ambient(n, q);
  if (d < 1 || d > n) throw InvalidArgument("subspace dimension out of range");
  std::vector<Subspace> out;
  // Choose pivot columns, then fill the free entries right of each pivot.
  std::vector<int> pivots(d);
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == d) {
      std::vector<std::pair<int, int>> free_slots;
      for (int r = 0; r < d; ++r) {
        for (int c = pivots[r] + 1; c < n; ++c) {
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_slots.emplace_back(r, c);
        }
      }
      std::vector<int> values(free_slots.size(), 0);
      while (true) {
        std::vector<FieldVector> rows(d, FieldVector(n, 0));
        for (int r = 0; r < d; ++r) rows[r][pivots[r]] = 1;
        for (std::size_t i = 0; i < free_slots.size(); ++i) {
          rows[free_slots[i].first][free_slots[i].second] = static_cast<std::uint8_t>(values[i]);
        }
        out.emplace_back(n, q, std::move(rows));
        std::size_t i = 0;
        while (i < values.size() && ++values[i] == q) values[i++] = 0;
        if (i == values.size()) break;
      }
      return;
    }
    for (int c = start; c < n; ++c) {
      pivots[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> proper_subspaces(int n, int q) {
  std::vector<Subspace> out;
  for (int d = 1; d < n; ++d) {
    auto layer = enumerate_subspaces(n, q, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decompositions

FieldDecomposition::FieldDecomposition(std::vector<Subspace> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("a decomposition needs at least one part");
  std::sort(parts_.begin(), parts_.end());
  if (std::adjacent_find(parts_.begin(), parts_.end()) != parts_.end()) {
    throw InvalidArgument("repeated part in decomposition");
  }
  for (const auto& s : parts_) {
    if (s.ambient_dimension() != parts_[0].ambient_dimension() || s.field_order() != parts_[0].field_order()) {
      throw InvalidArgument("decomposition mixes ambient spaces");
    }
  }
  if (!is_independent(parts_)) throw InvalidArgument("decomposition parts are not independent");
}

int FieldDecomposition::total_dimension() const {
  int total = 0;
  for (const auto& s : parts_) total += s.dimension();
  return total;
}

bool FieldDecomposition::is_full() const { return total_dimension() == parts_[0].ambient_dimension(); }

bool FieldDecomposition::refines(const FieldDecomposition& coarser) const {
  for (const auto& a : parts_) {
    bool inside = false;
    for (const auto& b : coarser.parts_) {
      if (b.contains(a)) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

std::string FieldDecomposition::key() const {
  std::string out;
  for (const auto& s : parts_) {
    out += s.key();
    out.push_back('\xff');
  }
  return out;
}

std::string FieldDecomposition::label() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += parts_[i].label();
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Common bases

const std::vector<std::vector<FieldVector>>& projective_bases(int n, int q) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<std::vector<FieldVector>>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({n, q});
  if (it != cache.end()) return it->second;
  check_ambient(n, q);
  const auto& f = GaloisField::get(q);
  std::vector<FieldVector> points;
  for (const auto& line : enumerate_subspaces(n, q, 1)) points.push_back(line.basis()[0]);
  std::vector<std::vector<FieldVector>> bases;
  std::vector<int> pick(n);
  std::function<void(int, int)> rec = [&](int idx, int start) {
    if (idx == n) {
      std::vector<FieldVector> rows;
      for (int i : pick) rows.push_back(points[i]);
      if (static_cast<int>(rref(f, rows).size()) == n) bases.push_back(std::move(rows));
      return;
    }
    for (int i = start; i < static_cast<int>(points.size()); ++i) {
      pick[idx] = i;
      rec(idx + 1, i + 1);
    }
  };
  rec(0, 0);
  return cache.emplace(std::make_pair(n, q), std::move(bases)).first->second;
}

namespace {

bool basis_spans_family(const std::vector<FieldVector>& basis, const std::vector<Subspace>& family) {
  for (const auto& s : family) {
    int inside = 0;
    for (const auto& v : basis) {
      if (s.contains(v)) ++inside;
    }
    if (inside != s.dimension()) return false;
  }
  return true;
}

}  // namespace

CommonBasisResult has_common_basis(const std::vector<Subspace>& family) {
  if (family.empty()) throw InvalidArgument("common basis of an empty family");
  const int n = family[0].ambient_dimension();
  const int q = family[0].field_order();
  for (const auto& s : family) {
    if (s.ambient_dimension() != n || s.field_order() != q) throw InvalidArgument("family mixes ambient spaces");
  }
  std::vector<std::string> keys;
  for (const auto& s : family) keys.push_back(s.key());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::string memo_key;
  for (const auto& k : keys) memo_key += k + '\xff';

  static std::mutex mutex;
  static std::map<std::string, CommonBasisResult> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(memo_key);
    if (it != memo.end()) return it->second;
  }
  CommonBasisResult result;
  for (const auto& basis : projective_bases(n, q)) {
    if (basis_spans_family(basis, family)) {
      result.found = true;
      result.witness = basis;
      break;
    }
  }
  std::lock_guard lock(mutex);
  memo.emplace(memo_key, result);
  return result;
}

bool verify_common_basis_witness(const std::vector<Subspace>& family, const std::vector<FieldVector>& witness) {
  if (family.empty()) return false;
  const int n = family[0].ambient_dimension();
  const auto& f = GaloisField::get(family[0].field_order());
  if (static_cast<int>(witness.size()) != n || static_cast<int>(rref(f, witness).size()) != n) return false;
  for (const auto& s : family) {
    std::vector<FieldVector> inside;
    for (const auto& v : witness) {
      if (s.contains(v)) inside.push_back(v);
    }
    if (inside.empty()) return false;
    if (Subspace(n, family[0].field_order(), inside) != s) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Builders

void check_field_caps(int n, int q) {
  if (n < 2) throw InvalidArgument("field builders need n >= 2");
  if (n > 4) throw CapExceeded("field builders support n <= 4");
  if (q != 2 && q != 3) throw CapExceeded("field builders support q in {2, 3}");
  if (n == 4 && q != 2) throw CapExceeded("n = 4 is only supported for q = 2");
}

SimplicialComplex build_CB(int n, int q, unsigned threads) {
  check_field_caps(n, q);
  const auto vertices_list = proper_subspaces(n, q);
  std::map<std::string, int> id_of;
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < vertices_list.size(); ++i) {
    id_of.emplace(vertices_list[i].key(), static_cast<int>(i));
    vertices.push_back({static_cast<int>(i), vertices_list[i].label()});
  }
  const auto& bases = projective_bases(n, q);
  // One maximal simplex per basis: spans of its non-empty proper subsets.
  auto simplices = parallel_map<Face>(bases.size(), threads, [&](std::size_t b) {
    const auto& basis = bases[b];
    Face face;
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      std::vector<FieldVector> rows;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) rows.push_back(basis[i]);
      }
      face.push_back(id_of.at(Subspace(n, q, rows).key()));
    }
    std::sort(face.begin(), face.end());
    return face;
  });
  return face_closure(std::move(vertices), simplices);
}

DecompositionPoset build_PD(int n, int q) {
  check_field_caps(n, q);
  const auto subspaces = proper_subspaces(n, q);
  std::vector<FieldDecomposition> elements;
  std::vector<Subspace> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int dim) {
    if (!chosen.empty()) elements.emplace_back(chosen);
    for (std::size_t i = start; i < subspaces.size(); ++i) {
      if (dim + subspaces[i].dimension() > n) continue;
      chosen.push_back(subspaces[i]);
      if (is_independent(chosen)) rec(i + 1, dim + subspaces[i].dimension());
      chosen.pop_back();
    }
  };
  rec(0, 0);
  std::sort(elements.begin(), elements.end(), [](const FieldDecomposition& a, const FieldDecomposition& b) {
    if (a.parts().size() != b.parts().size()) return a.parts().size() < b.parts().size();
    return a.parts() < b.parts();
  });
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(e.label());
  auto poset = Poset::from_leq(std::move(labels), [&](int a, int b) { return elements[a].refines(elements[b]); });
  return {std::move(elements), std::make_shared<const Poset>(std::move(poset))};
}

DecompositionPoset build_D(int n, int q) {
  auto pd = build_PD(n, q);
  std::vector<int> keep;
  DecompositionPoset out;
  for (std::size_t i = 0; i < pd.elements.size(); ++i) {
    if (pd.elements[i].is_full()) {
      keep.push_back(static_cast<int>(i));
      out.elements.push_back(pd.elements[i]);
    }
  }
  out.poset = std::make_shared<const Poset>(pd.poset->induced(keep));
  return out;
}

FactorPoset build_FC(int n, int q) {
  check_field_caps(n, q);
  FactorPoset out;
  out.elements = proper_subspaces(n, q);
  std::vector<std::string> labels;
  for (const auto& s : out.elements) labels.push_back(s.label());
  const auto& els = out.elements;
  out.poset = std::make_shared<const Poset>(
      Poset::from_leq(std::move(labels), [&](int a, int b) { return els[b].contains(els[a]); }));
  return out;
}

std::string FcdElement::key() const {
  std::string out = factor ? factor->key() : std::string("F");
  out += '|';
  out += decomposition ? decomposition->key() : std::string("0");
  return out;
}

std::string FcdElement::label() const {
  std::string out = "(";
  out += factor ? factor->label() : std::string("F");
  out += ',';
  out += decomposition ? decomposition->label() : std::string("{}");
  return out + ")";
}

int FcdPoset::index_of(const FcdElement& e) const {
  const std::string k = e.key();
  auto it = std::lower_bound(index_.begin(), index_.end(), k,
                             [](const std::pair<std::string, int>& entry, const std::string& key) {
                               return entry.first < key;
                             });
  if (it == index_.end() || it->first != k) return -1;
  return it->second;
}

FcdPoset build_FCD(int n, int q) {
  check_field_caps(n, q);
  const auto factors = proper_subspaces(n, q);
  const auto d = build_D(n, q);
  FcdPoset out;
  for (const auto& a : factors) out.elements.push_back({a, std::nullopt});
  for (const auto& dec : d.elements) out.elements.push_back({std::nullopt, dec});
  for (const auto& a : factors) {
    for (const auto& dec : d.elements) {
      auto family = dec.parts();
      family.push_back(a);
      if (has_common_basis(family).found) out.elements.push_back({a, dec});
    }
  }
  std::vector<std::string> labels;
  for (const auto& e : out.elements) {
    labels.push_back(e.label());
    out.index_.emplace_back(e.key(), static_cast<int>(out.index_.size()));
  }
  std::sort(out.index_.begin(), out.index_.end());
  const auto& els = out.elements;
  auto leq = [&](int x, int y) {
    const auto& a = els[x];
    const auto& b = els[y];
    // Factor coordinate: reverse inclusion, whole space is the minimum.
    if (a.factor) {
      if (!b.factor || !a.factor->contains(*b.factor)) return false;
    }
    // Decomposition coordinate: refinement, empty marker is the minimum.
    if (a.decomposition) {
      if (!b.decomposition || !a.decomposition->refines(*b.decomposition)) return false;
    }
    return true;
  };
  out.poset = std::make_shared<const Poset>(Poset::from_leq(std::move(labels), leq));
  return out;
}

PhiMap phi_map(int n, int q) {
  auto pd = build_PD(n, q);
  auto chains = enumerate_chains(*pd.poset);
  auto source = std::make_shared<const Poset>(chain_poset(*pd.poset));
  auto fcd = build_FCD(n, q);
  std::vector<int> assignment;
  assignment.reserve(chains.size());
  for (const auto& chain : chains) {
    FcdElement image;
    // Chains are listed bottom-up: the first non-full member is the minimum
    // of the non-full part, the last full member the maximum of the rest.
    for (int idx : chain) {
      const auto& dec = pd.elements[idx];
      if (!dec.is_full()) {
        if (!image.factor) image.factor = dec.span();
      } else {
        image.decomposition = dec;
      }
    }
    const int target = fcd.index_of(image);
    if (target < 0) {
      std::string witness = "{\"chain\":[";
      for (std::size_t i = 0; i < chain.size(); ++i) {
        witness += (i ? ",\"" : "\"") + pd.elements[chain[i]].label() + "\"";
      }
      witness += "],\"image\":\"" + image.label() + "\"}";
      throw InvariantBreach("chain maps outside FCD", witness);
    }
    assignment.push_back(target);
  }
  auto target = fcd.poset;
  PosetMap map(source, target, std::move(assignment));
  return PhiMap{std::move(pd), std::move(chains), std::move(fcd), std::move(map)};
}

}  // namespace fcx
