#pragma once

#include <cstdint>
#include <vector>

#include "pathbetti/caps.hpp"
#include "pathbetti/path_complex.hpp"

namespace pathbetti {

/// Faces of a complex grouped by dimension; faces_by_dim[k + 1] holds the
/// k-faces, each list in lexicographic order of sorted vertex labels.
struct ChainData {
  std::vector<std::vector<VertexSet>> faces_by_dim;

  int top_dimension() const { return static_cast<int>(faces_by_dim.size()) - 2; }
  std::size_t face_count() const;
  const std::vector<VertexSet>& faces(int k) const { return faces_by_dim[k + 1]; }
};

/// Downward closure of the facet list, including the empty face.
/// The void complex yields no faces at all. Throws CapExceeded past caps.max_faces.
ChainData all_faces(const SimplicialComplex& complex, const Caps& caps = {});

/// Prime used for the modular recheck of every boundary rank.
inline constexpr std::int64_t kCheckPrime = 32003;

/// Reduced homology over Q together with the data needed to audit it.
struct HomologyDims {
  /// dims[k + 1] = dim H~_k for k = -1 .. top dimension.
  std::vector<long> dims;
  /// face_counts[k + 1] = number of k-faces.
  std::vector<long> face_counts;
  /// boundary_ranks[k + 1] = rank of d_k : C_k -> C_{k-1} over Q (d_{-1} = 0).
  std::vector<long> boundary_ranks;
  /// The same ranks computed over GF(kCheckPrime).
  std::vector<long> modular_ranks;

  long at(int k) const;
  bool euler_holds() const;
  bool modular_agrees() const { return boundary_ranks == modular_ranks; }
};

HomologyDims reduced_homology(const SimplicialComplex& complex, const Caps& caps = {});

/// Rank over Q of a sparse integer matrix given as rows of (column, value).
/// Exact: integer row operations, promoted to GMP on 64-bit overflow.
using SparseRow = std::vector<std::pair<int, std::int64_t>>;
long rational_rank(const std::vector<SparseRow>& rows);
long modular_rank(const std::vector<SparseRow>& rows, std::int64_t prime);

/// Signed boundary matrix of d_k, one row per k-face.
std::vector<SparseRow> boundary_rows(const ChainData& chains, int k);

/// Hochster-type sums over every induced subcollection, with audit counters.
struct HochsterResult {
  CountGrid grid;
  long evaluations = 0;
  long euler_failures = 0;
  long modular_mismatches = 0;
};

/// beta_{i,j} for all 0 <= i, j <= n as sums of dim H~_{i-2} of the complement
/// of each induced subcollection on its own vertices. beta_{0,0} = 1.
HochsterResult hochster_grid(const PathFamily& family, const Caps& caps = {},
                             Execution exec = Execution::parallel);

Count hochster_betti(const PathFamily& family, int i, int j, const Caps& caps = {},
                     Execution exec = Execution::parallel);

}  // namespace pathbetti
