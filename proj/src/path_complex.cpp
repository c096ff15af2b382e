#include "pathbetti/path_complex.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pathbetti {

std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(__builtin_ctzll(s) + 1);
    s &= s - 1;
  }
  return out;
}

VertexSet make_vertex_set(std::initializer_list<int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) throw std::invalid_argument("vertex label out of range");
    s |= vertex_bit(v);
  }
  return s;
}

std::string format_set(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : vertices_of(s)) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

// ---------------------------------------------------------------------------
// SimplicialComplex

namespace {

VertexSet ambient_mask(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

bool subset_of(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

}  // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexSet> facets)
    : n_(n), facets_(std::move(facets)) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("ambient size out of range");
  const VertexSet ambient = ambient_mask(n);
  for (std::size_t a = 0; a < facets_.size(); ++a) {
    if (!subset_of(facets_[a], ambient))
      throw std::invalid_argument("facet " + format_set(facets_[a]) + " outside ambient vertices");
    if (facets_[a] == 0 && facets_.size() != 1)
      throw std::invalid_argument("empty facet only allowed in the complex <{}>");
    for (std::size_t b = 0; b < facets_.size(); ++b) {
      if (a != b && subset_of(facets_[a], facets_[b]))
        throw std::invalid_argument("facet " + format_set(facets_[a]) + " is contained in " +
                                    format_set(facets_[b]));
    }
  }
}

SimplicialComplex SimplicialComplex::from_sets(int n, std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> maximal;
  for (VertexSet s : sets) {
    const bool dominated = std::any_of(sets.begin(), sets.end(), [s](VertexSet other) {
      return other != s && subset_of(s, other);
    });
    if (!dominated) maximal.push_back(s);
  }
  return SimplicialComplex(n, std::move(maximal));
}

VertexSet SimplicialComplex::vertex_union() const {
  VertexSet u = 0;
  for (VertexSet f : facets_) u |= f;
  return u;
}

bool SimplicialComplex::same_facets(const SimplicialComplex& other) const {
  auto a = facets_;
  auto b = other.facets_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

SimplicialComplex complement(const SimplicialComplex& complex, VertexSet ground) {
  std::vector<VertexSet> sets;
  sets.reserve(complex.facets().size());
  for (VertexSet f : complex.facets()) {
    if (!subset_of(f, ground))
      throw std::invalid_argument("facet " + format_set(f) + " not contained in ground set " +
                                  format_set(ground));
    sets.push_back(ground & ~f);
  }
  return SimplicialComplex::from_sets(complex.ambient_size(), std::move(sets));
}

// ---------------------------------------------------------------------------
// Path families

std::string to_string(GraphKind kind) { return kind == GraphKind::line ? "line" : "cycle"; }

std::optional<GraphKind> parse_graph_kind(const std::string& text) {
  if (text == "line") return GraphKind::line;
  if (text == "cycle") return GraphKind::cycle;
  return std::nullopt;
}

void PathFamily::validate() const {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (t > n) throw std::invalid_argument("t must not exceed n");
  if (kind == GraphKind::cycle && t >= n)
    throw std::invalid_argument("cycles need t < n for the standard labeling");
}

std::string PathFamily::name() const {
  std::ostringstream out;
  out << to_string(kind) << "(n=" << n << ",t=" << t << ")";
  return out.str();
}

SimplicialComplex build_path_complex(const PathFamily& family) {
  family.validate();
  if (family.n > kMaxVertices) throw std::invalid_argument("at most 64 vertices supported");
  std::vector<VertexSet> facets;
  for (int k = 1; k <= family.facet_count(); ++k) {
    VertexSet f = 0;
    for (int s = 0; s < family.t; ++s) f |= vertex_bit((k - 1 + s) % family.n + 1);
    facets.push_back(f);
  }
  return SimplicialComplex(family.n, std::move(facets));
}

// ---------------------------------------------------------------------------
// Induced subcollections

std::vector<int> InducedSubcollection::labels() const { return vertices_of(facets); }

InducedEnumerator::InducedEnumerator(const PathFamily& family, const Caps& caps)
    : family_(family) {
  family.validate();
  if (family.facet_count() > caps.max_facets || family.facet_count() > 62)
    throw CapExceeded(family.name() + " has " + std::to_string(family.facet_count()) +
                      " facets, above the enumeration cap of " +
                      std::to_string(caps.max_facets));
  facet_sets_ = build_path_complex(family).facets();
}

bool InducedEnumerator::is_induced(FacetMask mask, VertexSet& vertices) const {
  VertexSet u = 0;
  for (FacetMask m = mask; m != 0; m &= m - 1) u |= facet_sets_[__builtin_ctzll(m)];
  const int count = facet_count();
  for (int k = 0; k < count; ++k) {
    if ((mask >> k) & 1) continue;
    if (subset_of(facet_sets_[k], u)) return false;
  }
  vertices = u;
  return true;
}

namespace {

// Masks are split into fixed-size blocks so the parallel kernels can
// concatenate or reduce per-block results in mask order.
constexpr int kBlockBits = 10;

}  // namespace

std::vector<InducedSubcollection> InducedEnumerator::all(Execution exec) const {
  const FacetMask total = FacetMask{1} << facet_count();
  std::vector<InducedSubcollection> out;
  if (exec == Execution::serial || total <= (FacetMask{1} << kBlockBits)) {
    VertexSet v = 0;
    for (FacetMask mask = 0; mask < total; ++mask)
      if (is_induced(mask, v)) out.push_back({mask, v});
    return out;
  }
  const long blocks = static_cast<long>(total >> kBlockBits);
  std::vector<std::vector<InducedSubcollection>> per_block(blocks);
#pragma omp parallel for schedule(dynamic)
  for (long b = 0; b < blocks; ++b) {
    VertexSet v = 0;
    const FacetMask begin = static_cast<FacetMask>(b) << kBlockBits;
    const FacetMask end = begin + (FacetMask{1} << kBlockBits);
    for (FacetMask mask = begin; mask < end; ++mask)
      if (is_induced(mask, v)) per_block[b].push_back({mask, v});
  }
  for (auto& block : per_block) out.insert(out.end(), block.begin(), block.end());
  return out;
}

void InducedEnumerator::for_each(
    const std::function<void(const InducedSubcollection&)>& visit) const {
  const FacetMask total = FacetMask{1} << facet_count();
  VertexSet v = 0;
  for (FacetMask mask = 0; mask < total; ++mask)
    if (is_induced(mask, v)) visit({mask, v});
}

InducedSubcollection InducedEnumerator::induced_on(VertexSet vertices) const {
  InducedSubcollection out;
  for (int k = 0; k < facet_count(); ++k) {
    if (subset_of(facet_sets_[k], vertices)) {
      out.facets |= FacetMask{1} << k;
      out.vertices |= facet_sets_[k];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Runs and eligibility

std::vector<int> RunDecomposition::lengths() const {
  std::vector<int> out;
  out.reserve(runs.size());
  for (const Run& r : runs) out.push_back(r.length);
  return out;
}

RunDecomposition decompose_runs(const PathFamily& family, FacetMask facets) {
  RunDecomposition out;
  const int count = family.facet_count();
  auto selected = [&](int label) { return ((facets >> (label - 1)) & 1) != 0; };
  if (facets == 0) return out;

  int start = 1;
  if (family.kind == GraphKind::cycle) {
    int gap = 0;
    for (int k = 1; k <= count; ++k)
      if (!selected(k)) gap = k;
    if (gap == 0) {
      out.whole_cycle = true;
      out.runs.push_back({1, count});
      return out;
    }
    // Begin scanning just after an unselected label so no block is split by the wrap.
    start = gap % count + 1;
  }
  Run current{0, 0};
  for (int step = 0; step < count; ++step) {
    const int label = (start - 1 + step) % count + 1;
    if (selected(label)) {
      if (current.length == 0) current.first = label;
      ++current.length;
    } else if (current.length > 0) {
      out.runs.push_back(current);
      current = {0, 0};
    }
  }
  if (current.length > 0) out.runs.push_back(current);
  std::sort(out.runs.begin(), out.runs.end(),
            [](const Run& a, const Run& b) { return a.first < b.first; });
  return out;
}

std::optional<EligibilityProfile> eligibility_profile(const RunDecomposition& decomposition,
                                                      int t) {
  if (decomposition.whole_cycle) return std::nullopt;
  EligibilityProfile profile;
  const int period = t + 1;
  for (const Run& run : decomposition.runs) {
    const int residue = run.length % period;
    if (residue == 1) {
      profile.p_list.push_back((run.length - 1) / period);
      profile.P += profile.p_list.back();
      ++profile.alpha;
    } else if (residue == 2) {
      profile.q_list.push_back((run.length - 2) / period);
      profile.Q += profile.q_list.back();
      ++profile.beta;
    } else {
      return std::nullopt;
    }
  }
  return profile;
}

CountGrid& CountGrid::operator+=(const CountGrid& other) {
  if (other.n_ != n_) throw std::invalid_argument("grid size mismatch");
  for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] += other.cells_[k];
  return *this;
}

namespace {

void tally_eligible(const PathFamily& family, const InducedSubcollection& sub, CountGrid& grid) {
  if (sub.vertex_count() >= family.n) return;
  const auto profile = eligibility_profile(decompose_runs(family, sub.facets), family.t);
  if (!profile) return;
  const int i = profile->homological_degree();
  const int j = profile->internal_degree(family.t);
  if (grid.in_range(i, j) && j < family.n) ++grid.at(i, j);
}

}  // namespace

CountGrid eligible_grid(const PathFamily& family, const Caps& caps, Execution exec) {
  const InducedEnumerator enumerator(family, caps);
  CountGrid grid(family.n);
  const FacetMask total = FacetMask{1} << enumerator.facet_count();
  if (exec == Execution::serial || total <= (FacetMask{1} << kBlockBits)) {
    enumerator.for_each([&](const InducedSubcollection& sub) { tally_eligible(family, sub, grid); });
    return grid;
  }
  const long blocks = static_cast<long>(total >> kBlockBits);
  std::vector<CountGrid> partial(omp_get_max_threads(), CountGrid(family.n));
#pragma omp parallel for schedule(dynamic)
  for (long b = 0; b < blocks; ++b) {
    CountGrid& local = partial[omp_get_thread_num()];
    VertexSet v = 0;
    const FacetMask begin = static_cast<FacetMask>(b) << kBlockBits;
    const FacetMask end = begin + (FacetMask{1} << kBlockBits);
    for (FacetMask mask = begin; mask < end; ++mask)
      if (enumerator.is_induced(mask, v)) tally_eligible(family, {mask, v}, local);
  }
  for (const CountGrid& g : partial) grid += g;
  return grid;
}

Count count_eligible(const PathFamily& family, int i, int j, const Caps& caps, Execution exec) {
  family.validate();
  if (j >= family.n)
    throw std::invalid_argument("eligible-subcollection counts need j < n");
  if (i < 0 || j < 0) return Count(0);
  if (i > family.n) return Count(0);
  return eligible_grid(family, caps, exec).at(i, j);
}

}  // namespace pathbetti
