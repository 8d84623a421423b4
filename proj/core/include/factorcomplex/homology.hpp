#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "factorcomplex/poset.hpp"

namespace fcx {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix; each column is sorted by row index
/// and holds no explicit zeros.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> columns;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);
  std::size_t nonzeros() const;
};

/// Coefficient field for Betti numbers.
struct Coefficients {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint32_t p = 0;

  static Coefficients rationals() { return {}; }
  /// Throws InvalidArgument unless p is prime.
  static Coefficients prime(std::uint64_t p);
  /// Accepts "Q", "GFp:<p>" and "GF(<p>)".
  static Coefficients parse(const std::string& spec);
  /// "Q" or "GF(p)".
  std::string name() const;
};

bool is_prime(std::uint64_t n);

/// Simplicial chain complex with faces in the deterministic order of the
/// source complex and boundary signs from alternating deletion in
/// increasing vertex order. Construction verifies that consecutive
/// boundaries compose to zero.
class ChainComplex {
 public:
  static ChainComplex of(const SimplicialComplex& k);
  /// Validating constructor for externally supplied data (throws
  /// InvariantBreach when a composite boundary is non-zero).
  ChainComplex(std::vector<std::size_t> counts, std::vector<SparseMatrix> boundaries);

  const std::vector<std::size_t>& counts() const { return counts_; }
  int top_dimension() const { return static_cast<int>(counts_.size()) - 1; }
  /// Boundary d -> d-1 for 1 <= d <= top_dimension().
  const SparseMatrix& boundary(int d) const { return boundaries_.at(d - 1); }

 private:
  ChainComplex() = default;
  void check_composites() const;

  std::vector<std::size_t> counts_;
  std::vector<SparseMatrix> boundaries_;
};

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);
/// Exact rank over the rationals by fraction-free elimination.
std::size_t rank_exact(const SparseMatrix& m);

struct RankOptions {
  std::uint64_t seed = 0x5eed;
};

/// Rank over Q: ranks modulo two random large primes; on disagreement the
/// exact elimination decides.
std::size_t rank_rational(const SparseMatrix& m, const RankOptions& opts = {});

/// Reduced Betti numbers in dimensions 0..top. Empty for the void complex.
std::vector<long long> betti(const ChainComplex& c, const Coefficients& coeffs, const RankOptions& opts = {});

/// Largest number of columns handed to dense Smith form after unit-pivot
/// pre-reduction.
inline constexpr std::size_t kMaxDenseSnfColumns = 20000;

/// Non-zero invariant factors d1 | d2 | ... of m (positive).
std::vector<BigInt> smith_normal_form(const SparseMatrix& m);

struct HomologyReport {
  Coefficients coefficients;
  std::vector<long long> betti;               // reduced, per dimension
  std::vector<std::vector<BigInt>> torsion;   // invariant factors > 1 of H_d
  long long euler = 0;
  std::vector<std::size_t> face_counts;
};

struct HomologyOptions {
  Coefficients coefficients = Coefficients::rationals();
  RankOptions rank;
  bool compute_torsion = true;
};

/// Betti numbers plus integral torsion. Runs the engine self-checks and
/// throws InvariantBreach on any inconsistency: boundary composites,
/// Euler characteristic from faces vs. from Betti numbers, Smith-form rank
/// vs. rational rank, and mod-2 rank vs. rational rank when torsion-free.
HomologyReport homology_report(const SimplicialComplex& k, const HomologyOptions& opts = {});

}  // namespace fcx
