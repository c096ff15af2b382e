#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pathbetti/caps.hpp"
#include "pathbetti/combinatorics.hpp"

namespace pathbetti {

/// Vertex subset of [1, 64]; bit (v - 1) holds vertex x_v.
using VertexSet = std::uint64_t;
/// Subset of facet labels; bit (k - 1) holds facet F_k.
using FacetMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }
inline int popcount(std::uint64_t s) { return __builtin_popcountll(s); }

/// Sorted vertex labels of a set.
std::vector<int> vertices_of(VertexSet s);
VertexSet make_vertex_set(std::initializer_list<int> vertices);
std::string format_set(VertexSet s);

/// Facet list over the ambient vertices 1..n.
///
/// Facets are pairwise incomparable and distinct. The only complex allowed
/// to carry the empty set is the irrelevant complex <{}>; a complex with no
/// facets at all is the void complex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Validates the facet list as given; throws std::invalid_argument.
  SimplicialComplex(int n, std::vector<VertexSet> facets);

  /// Deduplicates and keeps only inclusion-maximal sets.
  static SimplicialComplex from_sets(int n, std::vector<VertexSet> sets);

  int ambient_size() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  VertexSet vertex_union() const;

  /// Facet sets compared without regard to order.
  bool same_facets(const SimplicialComplex& other) const;

 private:
  int n_ = 0;
  std::vector<VertexSet> facets_;
};

/// ground \ F for every facet F, reduced to the maximal sets.
SimplicialComplex complement(const SimplicialComplex& complex, VertexSet ground);

enum class GraphKind { line, cycle };

std::string to_string(GraphKind kind);
std::optional<GraphKind> parse_graph_kind(const std::string& text);

/// Names the t-path complex of the line or cycle on n vertices.
struct PathFamily {
  GraphKind kind = GraphKind::line;
  int n = 2;
  int t = 2;

  /// Throws std::invalid_argument unless 2 <= t <= n (t < n for cycles).
  void validate() const;
  int facet_count() const { return kind == GraphKind::line ? n - t + 1 : n; }
  std::string name() const;

  friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

/// Facets in standard-label order: F_k = {x_k, ..., x_{k+t-1}}, wrapping mod n
/// for cycles.
SimplicialComplex build_path_complex(const PathFamily& family);

/// An induced subcollection of a path complex, held as its facet labels.
struct InducedSubcollection {
  FacetMask facets = 0;
  VertexSet vertices = 0;

  std::vector<int> labels() const;
  int vertex_count() const { return popcount(vertices); }
};

/// Enumerates induced subcollections of one path complex.
class InducedEnumerator {
 public:
  /// Throws CapExceeded if the complex has more than caps.max_facets facets.
  InducedEnumerator(const PathFamily& family, const Caps& caps = {});

  const PathFamily& family() const { return family_; }
  int facet_count() const { return static_cast<int>(facet_sets_.size()); }
  VertexSet facet_vertices(int label) const { return facet_sets_[label - 1]; }

  /// Induced closure test for one facet subset; fills `vertices` on success.
  bool is_induced(FacetMask mask, VertexSet& vertices) const;

  /// Every induced subcollection, the empty one included, in increasing mask order.
  std::vector<InducedSubcollection> all(Execution exec = Execution::parallel) const;

  /// Visits induced subcollections in increasing mask order.
  void for_each(const std::function<void(const InducedSubcollection&)>& visit) const;

  /// The subcollection induced on a vertex set.
  InducedSubcollection induced_on(VertexSet vertices) const;

 private:
  PathFamily family_;
  std::vector<VertexSet> facet_sets_;
};

struct Run {
  int first = 1;   ///< label of the first facet
  int length = 0;  ///< number of facets
};

/// Maximal blocks of consecutive facet labels (cyclically consecutive for cycles).
struct RunDecomposition {
  std::vector<Run> runs;
  /// Set when every facet of a cycle complex is selected: one closed block
  /// that is not a run.
  bool whole_cycle = false;

  std::vector<int> lengths() const;
};

RunDecomposition decompose_runs(const PathFamily& family, FacetMask facets);

/// Run lengths split as (t+1)p + 1 (the p-list) or (t+1)q + 2 (the q-list).
struct EligibilityProfile {
  int alpha = 0;
  int beta = 0;
  std::vector<int> p_list;
  std::vector<int> q_list;
  int P = 0;
  int Q = 0;

  int homological_degree() const { return 2 * (P + Q) + 2 * beta + alpha; }
  int internal_degree(int t) const { return (t + 1) * (P + Q) + t * (alpha + beta) + beta; }
};

std::optional<EligibilityProfile> eligibility_profile(const RunDecomposition& decomposition,
                                                      int t);

/// Grid of counts indexed by (i, j), 0 <= i, j <= n.
class CountGrid {
 public:
  explicit CountGrid(int n = 0) : n_(n), cells_((n + 1) * (n + 1)) {}
  int n() const { return n_; }
  bool in_range(int i, int j) const { return i >= 0 && j >= 0 && i <= n_ && j <= n_; }
  Count& at(int i, int j) { return cells_[i * (n_ + 1) + j]; }
  const Count& at(int i, int j) const { return cells_[i * (n_ + 1) + j]; }
  CountGrid& operator+=(const CountGrid& other);

 private:
  int n_;
  std::vector<Count> cells_;
};

/// Number of (i, j)-eligible induced subcollections; requires j < n.
Count count_eligible(const PathFamily& family, int i, int j, const Caps& caps = {},
                     Execution exec = Execution::parallel);

/// All eligible counts with j < n from a single enumeration pass.
CountGrid eligible_grid(const PathFamily& family, const Caps& caps = {},
                        Execution exec = Execution::parallel);

}  // namespace pathbetti
