#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fcx {

/// A simplex as a strictly increasing list of vertex ids.
using Face = std::vector<int>;

struct Vertex {
  int id;
  std::string label;
};

/// Finite abstract simplicial complex. Faces are kept per dimension in sorted
/// order; the empty face is never stored. Immutable once built.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Validating constructor: every face must be sorted, reference known
  /// vertices, and the family must be closed under taking non-empty subsets.
  SimplicialComplex(std::vector<Vertex> vertices, std::vector<Face> faces);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::string& label(int id) const;
  bool has_vertex(int id) const { return vertex_index_.count(id) != 0; }

  /// (size of largest face) - 1; -1 for the void complex.
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<Face>& faces_of_dim(int d) const;
  std::size_t face_count() const;
  std::vector<std::size_t> f_vector() const;
  long long euler_characteristic() const;

  bool contains(const Face& face) const;
  /// Inclusion-maximal faces, sorted by (size, lexicographic).
  std::vector<Face> facets() const;

 private:
  friend SimplicialComplex face_closure(std::vector<Vertex>, const std::vector<Face>&);
  struct Trusted {};
  SimplicialComplex(Trusted, std::vector<Vertex> vertices, std::vector<std::vector<Face>> by_dim);
  void index_vertices();

  std::vector<Vertex> vertices_;
  std::unordered_map<int, std::size_t> vertex_index_;
  std::vector<std::vector<Face>> faces_;
};

/// Complex whose faces are all non-empty subsets of the given faces.
/// Vertices not mentioned by any face are kept as given; vertex ids used by
/// faces but absent from `vertices` are rejected.
SimplicialComplex face_closure(std::vector<Vertex> vertices, const std::vector<Face>& maximal_faces);
/// Overload that derives vertices (labelled by their id) from the faces.
SimplicialComplex face_closure(const std::vector<Face>& maximal_faces);

/// Finite partial order on elements 0..size()-1. Stores the strict relation
/// in both directions plus the Hasse (cover) reduction.
class Poset {
 public:
  Poset() = default;

  /// Builds from a (reflexive) order predicate; checks the order axioms.
  static Poset from_leq(std::vector<std::string> labels, const std::function<bool(int, int)>& leq);
  /// Builds from cover pairs (a, b) meaning a < b; takes the transitive
  /// closure and rejects cycles.
  static Poset from_covers(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& covers);
  /// Builds from strict up-sets; checks transitivity and antisymmetry.
  static Poset from_strict_above(std::vector<std::string> labels, std::vector<std::vector<int>> above);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(int a, int b) const;
  bool less(int a, int b) const { return a != b && leq(a, b); }
  const std::vector<int>& above(int a) const { return above_.at(a); }
  const std::vector<int>& below(int a) const { return below_.at(a); }
  /// Cover relations (a, b), a < b, sorted.
  const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }

  /// Subposet on the given elements (in the given order).
  Poset induced(const std::vector<int>& elements) const;

 private:
  void finish();

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> above_;
  std::vector<std::vector<int>> below_;
  std::vector<std::pair<int, int>> hasse_;
};

/// A total assignment source element -> target element. Order preservation
/// is a property checked by is_order_preserving, not assumed.
struct PosetMap {
  std::shared_ptr<const Poset> source;
  std::shared_ptr<const Poset> target;
  std::vector<int> assignment;

  PosetMap(std::shared_ptr<const Poset> src, std::shared_ptr<const Poset> tgt, std::vector<int> assign);
};

/// Default cap on the length of a single chain for chain_poset.
inline constexpr int kDefaultMaxChainLength = 25;

/// Chains of `p` listed in increasing order, sorted lexicographically.
std::vector<std::vector<int>> enumerate_chains(const Poset& p, int max_chain_length = kDefaultMaxChainLength);

/// The poset of non-empty chains ordered by inclusion (sd p). Element i is
/// the i-th chain of enumerate_chains(p).
Poset chain_poset(const Poset& p, int max_chain_length = kDefaultMaxChainLength);

/// Vertices are the elements of p (id = index), faces are the non-empty chains.
SimplicialComplex order_complex(const Poset& p);

/// Join of two complexes; vertex ids of `l` are shifted when they collide
/// with those of `k`.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

bool is_order_preserving(const PosetMap& f);

/// Elements of the source mapping below q, as indices into the source.
std::vector<int> lower_fiber_elements(const PosetMap& f, int q);
/// Induced subposet of the source on {x : f(x) <= q}.
Poset lower_fiber(const PosetMap& f, int q);

struct FiberRecord {
  int target;
  std::string label;
  std::size_t fiber_size;
  std::vector<long long> reduced_betti;
  bool pass;
};

struct QuillenReport {
  std::vector<FiberRecord> fibers;
  bool all_pass = true;
};

/// For every target element, computes the reduced rational Betti numbers of
/// the lower fiber. A fiber passes iff it is non-empty and acyclic.
QuillenReport check_quillen_fibers(const PosetMap& f, unsigned threads = 1);

}  // namespace fcx
