#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fcx {

/// Based multigraph with genus labels: the dual graph of a sphere system.
/// Vertices are 0..genus.size()-1; edges are unordered pairs stored as
/// (min, max) and kept sorted; loops are (v, v).
class LabeledGraph {
 public:
  using EdgeEnds = std::pair<int, int>;

  /// Validates: base in range, genera >= 0, at least one edge, connected,
  /// and first Betti number + total genus = n.
  LabeledGraph(int n, int base, std::vector<int> genus, std::vector<EdgeEnds> edges);

  int rank() const { return n_; }
  int base() const { return base_; }
  int vertex_count() const { return static_cast<int>(genus_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int genus(int v) const { return genus_.at(v); }
  const std::vector<int>& genera() const { return genus_; }
  const std::vector<EdgeEnds>& edges() const { return edges_; }

  /// Loops count twice.
  int valence(int v) const;
  int loops_at(int v) const;
  int first_betti() const { return edge_count() - vertex_count() + 1; }
  int total_rank() const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) = default;

 private:
  int n_;
  int base_;
  std::vector<int> genus_;
  std::vector<EdgeEnds> edges_;
};

/// Sum over non-base vertices of valence - 2 + 2 genus.
int degree(const LabeledGraph& g);

/// Indices of non-loop edges incident to the base.
std::vector<int> pillar_edges(const LabeledGraph& g);

/// A connected component of the realization with the base point removed.
struct PuncturedComponent {
  std::vector<int> vertices;  // non-base vertices; empty for a base loop
  std::vector<int> edges;     // edge indices, including those reaching the base
};

/// Each loop at the base is its own open arc; the remaining pieces are the
/// non-base vertices grouped by non-base edges, each carrying its edges to
/// the base. Sorted by smallest edge index.
std::vector<PuncturedComponent> punctured_components(const LabeledGraph& g);

/// The base is a cut point of the realization: more than one punctured
/// component.
bool is_cut_basepoint(const LabeledGraph& g);
/// Alternative reading where any loop at the base also makes it a cut point.
bool is_cut_basepoint_loop_reading(const LabeledGraph& g);

/// Base genus 0 and the base is a cut point.
bool is_cut(const LabeledGraph& g);
/// Base genus > 0, or cut.
bool in_FCDg(const LabeledGraph& g);
bool in_FCDg_loop_reading(const LabeledGraph& g);

/// A loop raises the genus of its vertex by one; a non-loop edge merges its
/// ends, adding genera, with the base surviving. Throws InvalidArgument for
/// an unknown edge or when the graph has a single edge.
LabeledGraph collapse_edge(const LabeledGraph& g, int edge);

/// Ranks of the punctured components (first Betti number of the component
/// plus the base, plus its genera). Requires is_cut(g). Sorted.
std::vector<int> decomposition_ranks(const LabeledGraph& g);

/// Star with a genus-0 base and one leaf of genus r per entry of `ranks`.
LabeledGraph tau_d_graph(const std::vector<int>& ranks);

/// A non-base vertex of genus 0 and valence 1: the sphere on its edge would
/// bound a ball.
bool bounds_ball(const LabeledGraph& g);

/// Canonical labelling under based isomorphism.
struct CanonicalForm {
  std::vector<int> order;      // order[i] = original vertex placed at position i
  std::vector<int> encoding;   // equal iff isomorphic
};

CanonicalForm canonical_form(const LabeledGraph& g);
/// Relabelled copy with the canonical order (base becomes vertex 0).
LabeledGraph canonical_graph(const LabeledGraph& g);

inline constexpr int kMaxSphereRank = 4;
inline constexpr int kMaxSphereEdges = 8;

/// One representative per based-isomorphism class of connected genus
/// labelled multigraphs with total rank n and 1..max_edges edges, without
/// ball-bounding vertices. Canonical graphs, sorted by (edges, encoding).
std::vector<LabeledGraph> enumerate_graphs(int n, int max_edges, unsigned threads = 1);

struct SphereViolation {
  std::string check;
  std::string message;
  LabeledGraph graph;
  std::vector<LabeledGraph> related;  // e.g. the collapsed graph
};

struct SphereReport {
  int n = 0;
  int max_edges = 0;
  std::size_t graphs = 0;
  /// Per check: number of instances examined.
  std::vector<std::pair<std::string, std::size_t>> checked;
  std::vector<SphereViolation> violations;
  /// Graphs on which the two readings of the cut condition disagree, and
  /// the number of lemma outcomes that would change under the loop reading.
  std::size_t reading_divergences = 0;
  std::size_t reading_outcome_changes = 0;
};

SphereReport verify_degree_pillar(const std::vector<LabeledGraph>& graphs, unsigned threads = 1);
SphereReport verify_degree_inclusion(const std::vector<LabeledGraph>& graphs, unsigned threads = 1);
SphereReport verify_face_closure(const std::vector<LabeledGraph>& graphs, unsigned threads = 1);
SphereReport verify_decomposition_ranks(const std::vector<LabeledGraph>& graphs, unsigned threads = 1);
/// Over every multiset of positive ranks summing to n.
SphereReport verify_tau_degree(int n);

/// Enumerates once and runs every check above; reports are merged.
SphereReport verify_all(int n, int max_edges, unsigned threads = 1);

}  // namespace fcx
