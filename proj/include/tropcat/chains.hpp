#pragma once

#include <cstdint>
#include <vector>

#include "tropcat/arc.hpp"
#include "tropcat/errors.hpp"
#include "tropcat/tropical.hpp"

namespace tropcat::chains {

/// Monotone zero-preserving map between the finite chains {0..src_rank} and
/// {0..dst_rank} with their join (max) structure.  vals holds the images of
/// 1..src_rank; 0 always maps to 0.
struct ChainMap {
  int src_rank = 0;
  int dst_rank = 0;
  std::vector<int> vals;

  static ChainMap make(int src_rank, int dst_rank, std::vector<int> vals);
  static ChainMap identity(int rank);

  int operator()(int x) const;

  friend bool operator==(const ChainMap&, const ChainMap&) = default;
};

/// No nonzero element maps to zero; these are exactly the simplicial maps.
bool is_zero_reflecting(const ChainMap& f);

/// The top element maps to the top element.
bool is_endpoint_preserving(const ChainMap& f);

/// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Pairing of two chain elements: zero iff x <= y.
trop::BElem b_pairing(int x, int y);

/// Galois adjoint value max{x : f(x) <= y}, in source coordinates.
int transpose_at(const ChainMap& f, int y);

/// Transpose of f as a map between the opposite chains, stored in dual
/// coordinates: dual element y stands for dst_rank - y of the original, so no
/// reversed container is needed and transposing twice returns f itself.
ChainMap b_transpose(const ChainMap& f);

/// Square boolean matrix acting on column vectors over the two-element
/// semifield.
struct BMatrix {
  int n = 0;
  std::vector<trop::BElem> a;  // row-major, n*n

  static BMatrix make(int n);
  trop::BElem& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  trop::BElem at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  friend BMatrix operator*(const BMatrix& x, const BMatrix& y);
  friend bool operator==(const BMatrix&, const BMatrix&) = default;

  /// Applies the matrix to a column vector given as a bitmask.
  std::uint32_t apply(std::uint32_t v) const;
};

/// The idempotent lower-triangular all-ones matrix; projects coordinate
/// vectors onto the rank-n chain inside the free semimodule of rank n.
BMatrix projection_matrix(int n);

/// Number of rank-k subsemimodules of the rank-n chain: n choose k.
std::uint64_t count_submodules(int n, int k);

/// All monotone zero-preserving maps between chains of the given ranks.
std::vector<ChainMap> enumerate_chain_maps(int src_rank, int dst_rank);

/// Nonzero chain element x of the rank-n chain as the integer point x - 1.
int iota_point(int x, int n);

/// Scalar action composed with iota: the point (j - 1) + e * n, for a nonzero
/// scalar u^e and nonzero chain element j of the rank-n chain.
long long phi_point(trop::TropInt x, int j, int n);

/// A simplicial (zero-reflecting) chain map of ranks n -> m read as the
/// degree-1 morphism of periods n -> m with values f(j + 1) - 1.
arc::ArcMorphism simplicial_embedding(const ChainMap& f);

}  // namespace tropcat::chains
