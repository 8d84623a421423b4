#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "factorcomplex/poset.hpp"

namespace fcx {

/// A word in F_n: letter +(i+1) is generator i, -(i+1) its inverse.
using Word = std::vector<int>;

/// Parses "abA" style words: a-z generators, A-Z inverses. Throws
/// InvalidArgument on other characters or generators beyond the rank.
Word parse_word(const std::string& text, int n);
std::string format_word(const Word& w);

/// Throws InvalidArgument on letters outside the rank.
void check_letters(const Word& w, int n);
Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

/// Folded core graph of a finitely generated subgroup, canonically
/// relabelled: the base is vertex 0 and the remaining vertices are numbered
/// in breadth-first order over the slots (x1 out, x1 in, x2 out, ...).
class StallingsGraph {
 public:
  struct Edge {
    int source;
    int label;  // generator index 0..n-1
    int target;
    auto operator<=>(const Edge&) const = default;
  };

  /// The trivial subgroup of F_n.
  explicit StallingsGraph(int n);

  int rank_context() const { return n_; }
  int vertex_count() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Rank of the subgroup, E - V + 1.
  int rank() const { return static_cast<int>(edges_.size()) - vertices_ + 1; }
  bool is_trivial() const { return edges_.empty(); }
  bool is_whole_group() const { return vertices_ == 1 && static_cast<int>(edges_.size()) == n_; }

  /// Target of the edge labelled `letter` leaving v (inverse letters walk
  /// edges backwards), or -1.
  int step(int v, int letter) const;
  bool contains(const Word& w) const;
  /// Free basis read off a breadth-first spanning tree.
  std::vector<Word> generators() const;
  /// Byte key; equal keys iff equal subgroups.
  const std::string& key() const { return key_; }
  std::string to_dot() const;

  friend bool operator==(const StallingsGraph& a, const StallingsGraph& b) { return a.key_ == b.key_; }

 private:
  friend StallingsGraph fold(int n, const std::vector<Word>& generators);
  friend StallingsGraph intersect(const StallingsGraph& a, const StallingsGraph& b);
  static StallingsGraph from_edges(int n, int vertex_count, const std::vector<Edge>& edges);

  int n_;
  int vertices_ = 1;
  std::vector<Edge> edges_;
  std::vector<int> out_;  // vertex * n + label -> target or -1
  std::vector<int> in_;
  std::string key_;
};

StallingsGraph fold(int n, const std::vector<Word>& generators);
StallingsGraph intersect(const StallingsGraph& a, const StallingsGraph& b);
/// a <= b as subgroups.
bool is_subgroup(const StallingsGraph& a, const StallingsGraph& b);

/// An endomorphism of F_n given by the images of the generators.
using Automorphism = std::vector<Word>;

Word apply(const Automorphism& phi, const Word& w);

/// Whitehead's generators of Aut(F_n): signed permutations and the type II
/// moves (A, a), deduplicated by image tuple. Sorted; identity included.
const std::vector<Automorphism>& whitehead_moves(int n);

/// Whitehead descent on cyclic length, ties broken by the lexicographically
/// least image. `n` is the rank context. Throws InvalidArgument for the
/// trivial word.
bool is_primitive(const Word& w, int n);

/// Unordered basis; each entry is the lexicographically smaller of w and
/// w^{-1}, entries sorted.
using Basis = std::vector<Word>;

inline constexpr int kMaxFreeRank = 3;
inline constexpr int kMaxBasisLength = 6;
/// Enumeration stops with CapExceeded once this many bases are found.
inline constexpr std::size_t kMaxEnumeratedBases = 1000000;

/// Bases reachable from the standard one by Nielsen moves through bases
/// whose elements all have length <= L. Every result is checked to fold
/// to the whole group. Sorted.
std::vector<Basis> enumerate_bases(int n, int L, unsigned threads = 1);

struct FreeFactorComplex {
  std::vector<StallingsGraph> factors;  // vertex i
  SimplicialComplex complex;
};

FreeFactorComplex build_truncated_CB(int n, const std::vector<Basis>& bases, unsigned threads = 1);
FreeFactorComplex build_truncated_CB(int n, int L, unsigned threads = 1);

struct FreeDecompositionPoset {
  std::vector<StallingsGraph> factors;
  std::vector<std::vector<int>> elements;  // sorted factor indices
  std::shared_ptr<const Poset> poset;
};

/// Partial decompositions obtained by grouping a subset of an enumerated
/// basis into blocks, ordered by refinement.
FreeDecompositionPoset build_truncated_PD(int n, const std::vector<Basis>& bases);
FreeDecompositionPoset build_truncated_PD(int n, int L);

}  // namespace fcx
