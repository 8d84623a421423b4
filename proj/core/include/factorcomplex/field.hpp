#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "factorcomplex/poset.hpp"

namespace fcx {

/// GF(q) for the prime powers q <= 9. Elements are 0..q-1; for q = p^k an
/// element encodes the coefficient vector of a polynomial in base p.
class GaloisField {
 public:
  explicit GaloisField(int q);
  static const GaloisField& get(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const;
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }

 private:
  int q_;
  int p_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

using FieldVector = std::vector<std::uint8_t>;

/// Reduced row echelon form with zero rows removed.
std::vector<FieldVector> rref(const GaloisField& f, std::vector<FieldVector> rows);

/// A non-zero subspace of GF(q)^n, stored by its RREF basis. Two subspaces
/// are equal iff their RREF matrices are identical.
class Subspace {
 public:
  Subspace(int n, int q, std::vector<FieldVector> generators);

  int ambient_dimension() const { return n_; }
  int field_order() const { return q_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  const std::vector<FieldVector>& basis() const { return rows_; }
  bool is_full() const { return dimension() == n_; }

  bool contains(const FieldVector& v) const;
  bool contains(const Subspace& other) const;
  /// Byte string; equal keys iff equal subspaces (within one ambient space).
  std::string key() const;
  /// "<101,010>" style rendering of the RREF rows.
  std::string label() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.q_ == b.q_ && a.rows_ == b.rows_;
  }
  /// Ordered by dimension, then RREF rows.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  int n_;
  int q_;
  std::vector<FieldVector> rows_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Span of all parts of a family.
Subspace span_of(const std::vector<Subspace>& parts);

/// Gaussian binomial [n choose d]_q.
std::uint64_t gaussian_binomial(int n, int d, int q);

/// All d-dimensional subspaces of GF(q)^n, each once, sorted.
std::vector<Subspace> enumerate_subspaces(int n, int q, int d);
/// All proper non-zero subspaces, sorted by (dimension, RREF).
std::vector<Subspace> proper_subspaces(int n, int q);

/// A set of independent subspaces (dimension of the sum = sum of dimensions).
class FieldDecomposition {
 public:
  explicit FieldDecomposition(std::vector<Subspace> parts);

  const std::vector<Subspace>& parts() const { return parts_; }
  int total_dimension() const;
  bool is_full() const;
  Subspace span() const { return span_of(parts_); }
  /// c <= d iff every part of c lies in some part of d.
  bool refines(const FieldDecomposition& coarser) const;
  std::string key() const;
  std::string label() const;

  friend bool operator==(const FieldDecomposition& a, const FieldDecomposition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<Subspace> parts_;
};

bool is_independent(const std::vector<Subspace>& parts);

/// Unordered bases of GF(q)^n up to scaling of the basis vectors, each as
/// n normalized vectors (first non-zero coordinate 1).
const std::vector<std::vector<FieldVector>>& projective_bases(int n, int q);

struct CommonBasisResult {
  bool found = false;
  std::vector<FieldVector> witness;  // ordered basis, one vector per row
};

/// Decides whether some basis of GF(q)^n spans every member of the family by
/// a subset. Exhaustive over projective_bases with memoization.
CommonBasisResult has_common_basis(const std::vector<Subspace>& family);

/// Independent re-check of a witness: the rows form a basis and each member
/// is spanned by the rows it contains.
bool verify_common_basis_witness(const std::vector<Subspace>& family, const std::vector<FieldVector>& witness);

/// Throws CapExceeded unless (n, q) is within the builder caps:
/// 2 <= n <= 4, q in {2, 3}, and q = 2 when n = 4.
void check_field_caps(int n, int q);

SimplicialComplex build_CB(int n, int q, unsigned threads = 1);

struct DecompositionPoset {
  std::vector<FieldDecomposition> elements;
  std::shared_ptr<const Poset> poset;
};

DecompositionPoset build_PD(int n, int q);
DecompositionPoset build_D(int n, int q);

struct FactorPoset {
  std::vector<Subspace> elements;
  std::shared_ptr<const Poset> poset;
};

FactorPoset build_FC(int n, int q);

/// Element of FCD: `factor` empty means the whole space, `decomposition`
/// empty means the added minimum of D.
struct FcdElement {
  std::optional<Subspace> factor;
  std::optional<FieldDecomposition> decomposition;

  std::string key() const;
  std::string label() const;
};

struct FcdPoset {
  std::vector<FcdElement> elements;
  std::shared_ptr<const Poset> poset;
  int index_of(const FcdElement& e) const;

 private:
  friend FcdPoset build_FCD(int n, int q);
  std::vector<std::pair<std::string, int>> index_;  // sorted by key
};

/// Factors ordered by reverse inclusion, decompositions by refinement with
/// the empty marker minimal, (full, empty) excluded.
FcdPoset build_FCD(int n, int q);

struct PhiMap {
  DecompositionPoset pd;
  std::vector<std::vector<int>> chains;  // source element i = chains[i] (indices into pd)
  FcdPoset fcd;
  PosetMap map;
};

/// The map from chains of PD to FCD: factor coordinate is the span of the
/// smallest non-full member of the chain (whole space if none), the
/// decomposition coordinate is the largest full member (empty if none).
PhiMap phi_map(int n, int q);

}  // namespace fcx
