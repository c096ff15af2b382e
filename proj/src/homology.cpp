#include "pathbetti/homology.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace pathbetti {

std::size_t ChainData::face_count() const {
  std::size_t total = 0;
  for (const auto& level : faces_by_dim) total += level.size();
  return total;
}

namespace {

// Lexicographic order on sorted vertex lists of equal size: the set holding
// the smallest vertex of the symmetric difference comes first.
bool lex_less(VertexSet a, VertexSet b) {
  const VertexSet diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

}  // namespace

ChainData all_faces(const SimplicialComplex& complex, const Caps& caps) {
  ChainData chains;
  if (complex.is_void()) return chains;

  std::unordered_set<VertexSet> seen;
  int top = -1;
  for (VertexSet f : complex.facets()) {
    top = std::max(top, popcount(f) - 1);
    if (popcount(f) >= 62) throw CapExceeded("facet too large for face enumeration");
    // Every subset of f, f itself first and the empty set last.
    VertexSet sub = f;
    while (true) {
      seen.insert(sub);
      if (seen.size() > caps.max_faces)
        throw CapExceeded("complex has more than " + std::to_string(caps.max_faces) + " faces");
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  chains.faces_by_dim.resize(top + 2);
  for (VertexSet face : seen) chains.faces_by_dim[popcount(face)].push_back(face);
  for (auto& level : chains.faces_by_dim) std::sort(level.begin(), level.end(), lex_less);
  return chains;
}

std::vector<SparseRow> boundary_rows(const ChainData& chains, int k) {
  std::vector<SparseRow> rows;
  if (k < 0 || k > chains.top_dimension()) return rows;
  const auto& lower = chains.faces(k - 1);
  std::unordered_map<VertexSet, int> index;
  index.reserve(lower.size());
  for (std::size_t c = 0; c < lower.size(); ++c) index.emplace(lower[c], static_cast<int>(c));

  for (VertexSet face : chains.faces(k)) {
    SparseRow row;
    int position = 0;
    for (VertexSet rest = face; rest != 0; rest &= rest - 1, ++position) {
      const VertexSet v = rest & (~rest + 1);
      row.emplace_back(index.at(face & ~v), position % 2 == 0 ? 1 : -1);
    }
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Exact ranks by sparse row echelon on leading columns.

namespace {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}

inline mpz_class checked_mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class checked_sub(const mpz_class& a, const mpz_class& b) { return a - b; }

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline mpz_class gcd_of(const mpz_class& a, const mpz_class& b) { return gcd(a, b); }

template <typename T>
using Row = std::vector<std::pair<int, T>>;

// Returns (scale_r * r - scale_p * p), dropping zeros.
template <typename T>
Row<T> combine(const Row<T>& r, const T& scale_r, const Row<T>& p, const T& scale_p) {
  Row<T> out;
  out.reserve(r.size() + p.size());
  std::size_t a = 0, b = 0;
  while (a < r.size() || b < p.size()) {
    if (b == p.size() || (a < r.size() && r[a].first < p[b].first)) {
      out.emplace_back(r[a].first, checked_mul(scale_r, r[a].second));
      ++a;
    } else if (a == r.size() || p[b].first < r[a].first) {
      out.emplace_back(p[b].first, checked_sub(T(0), checked_mul(scale_p, p[b].second)));
      ++b;
    } else {
      T v = checked_sub(checked_mul(scale_r, r[a].second), checked_mul(scale_p, p[b].second));
      if (v != 0) out.emplace_back(r[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

template <typename T>
void divide_content(Row<T>& r) {
  T g = 0;
  for (const auto& [col, v] : r) {
    g = gcd_of(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& entry : r) entry.second /= g;
}

int column_count(const std::vector<SparseRow>& rows) {
  int cols = 0;
  for (const auto& row : rows)
    for (const auto& entry : row) cols = std::max(cols, entry.first + 1);
  return cols;
}

template <typename T>
long integer_echelon_rank(const std::vector<SparseRow>& rows) {
  std::vector<std::optional<Row<T>>> pivot(column_count(rows));
  long rank = 0;
  for (const auto& input : rows) {
    Row<T> r;
    r.reserve(input.size());
    for (const auto& [col, v] : input)
      if (v != 0) r.emplace_back(col, T(v));
    std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!r.empty()) {
      auto& slot = pivot[r.front().first];
      if (!slot) {
        divide_content(r);
        slot = std::move(r);
        ++rank;
        break;
      }
      const T g = gcd_of(r.front().second, slot->front().second);
      const T scale_r = slot->front().second / g;
      const T scale_p = r.front().second / g;
      r = combine(r, scale_r, *slot, scale_p);
      divide_content(r);
    }
  }
  return rank;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

long rational_rank(const std::vector<SparseRow>& rows) {
  try {
    return integer_echelon_rank<std::int64_t>(rows);
  } catch (const Overflow&) {
    return integer_echelon_rank<mpz_class>(rows);
  }
}

long modular_rank(const std::vector<SparseRow>& rows, std::int64_t prime) {
  std::vector<std::optional<Row<std::int64_t>>> pivot(column_count(rows));
  long rank = 0;
  for (const auto& input : rows) {
    Row<std::int64_t> r;
    for (const auto& [col, v] : input) {
      const std::int64_t m = ((v % prime) + prime) % prime;
      if (m != 0) r.emplace_back(col, m);
    }
    std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!r.empty()) {
      auto& slot = pivot[r.front().first];
      if (!slot) {
        // Store pivot rows monic.
        const std::int64_t inv = mod_inverse(r.front().second, prime);
        for (auto& entry : r) entry.second = entry.second * inv % prime;
        slot = std::move(r);
        ++rank;
        break;
      }
      const std::int64_t factor = r.front().second;
      Row<std::int64_t> next;
      std::size_t a = 0, b = 0;
      const auto& p = *slot;
      while (a < r.size() || b < p.size()) {
        if (b == p.size() || (a < r.size() && r[a].first < p[b].first)) {
          next.push_back(r[a++]);
        } else if (a == r.size() || p[b].first < r[a].first) {
          next.emplace_back(p[b].first, (prime - factor * p[b].second % prime) % prime);
          ++b;
        } else {
          const std::int64_t v = ((r[a].second - factor * p[b].second) % prime + prime) % prime;
          if (v != 0) next.emplace_back(r[a].first, v);
          ++a;
          ++b;
        }
      }
      r = std::move(next);
    }
  }
  return rank;
}

// ---------------------------------------------------------------------------

long HomologyDims::at(int k) const {
  const int idx = k + 1;
  if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
  return dims[idx];
}

bool HomologyDims::euler_holds() const {
  long from_faces = 0, from_homology = 0;
  for (std::size_t idx = 0; idx < face_counts.size(); ++idx) {
    const long sign = (idx % 2 == 1) ? 1 : -1;  // idx = k + 1, sign (-1)^k
    from_faces += sign * face_counts[idx];
    from_homology += sign * dims[idx];
  }
  return from_faces == from_homology;
}

HomologyDims reduced_homology(const SimplicialComplex& complex, const Caps& caps) {
  const ChainData chains = all_faces(complex, caps);
  HomologyDims out;
  const std::size_t levels = chains.faces_by_dim.size();
  out.face_counts.resize(levels);
  out.boundary_ranks.assign(levels, 0);
  out.modular_ranks.assign(levels, 0);
  out.dims.resize(levels);
  for (std::size_t idx = 0; idx < levels; ++idx) {
    out.face_counts[idx] = static_cast<long>(chains.faces_by_dim[idx].size());
    const int k = static_cast<int>(idx) - 1;
    if (k < 0) continue;
    const auto rows = boundary_rows(chains, k);
    out.boundary_ranks[idx] = rational_rank(rows);
    out.modular_ranks[idx] = modular_rank(rows, kCheckPrime);
  }
  for (std::size_t idx = 0; idx < levels; ++idx) {
    const long next_rank = idx + 1 < levels ? out.boundary_ranks[idx + 1] : 0;
    out.dims[idx] = out.face_counts[idx] - out.boundary_ranks[idx] - next_rank;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hochster-type oracle

namespace {

void accumulate_hochster(const InducedEnumerator& enumerator, const InducedSubcollection& sub,
                         const Caps& caps, HochsterResult& into) {
  if (sub.facets == 0) return;
  std::vector<VertexSet> selected;
  for (int label : sub.labels()) selected.push_back(enumerator.facet_vertices(label));
  const SimplicialComplex gamma(enumerator.family().n, std::move(selected));
  const HomologyDims h = reduced_homology(complement(gamma, sub.vertices), caps);
  ++into.evaluations;
  if (!h.euler_holds()) ++into.euler_failures;
  if (!h.modular_agrees()) ++into.modular_mismatches;
  const int j = sub.vertex_count();
  for (std::size_t idx = 0; idx < h.dims.size(); ++idx) {
    if (h.dims[idx] == 0) continue;
    const int i = static_cast<int>(idx) + 1;  // k + 2 with k = idx - 1
    if (into.grid.in_range(i, j)) into.grid.at(i, j) += h.dims[idx];
  }
}

}  // namespace

HochsterResult hochster_grid(const PathFamily& family, const Caps& caps, Execution exec) {
  const InducedEnumerator enumerator(family, caps);
  HochsterResult result{CountGrid(family.n)};
  result.grid.at(0, 0) = 1;

  const auto subs = enumerator.all(exec);
  if (exec == Execution::serial) {
    for (const auto& sub : subs) accumulate_hochster(enumerator, sub, caps, result);
    return result;
  }
  std::vector<HochsterResult> partial(omp_get_max_threads(), HochsterResult{CountGrid(family.n)});
  bool capped = false;
  std::string cap_message;
#pragma omp parallel for schedule(dynamic)
  for (long s = 0; s < static_cast<long>(subs.size()); ++s) {
    try {
      accumulate_hochster(enumerator, subs[s], caps, partial[omp_get_thread_num()]);
    } catch (const CapExceeded& e) {
#pragma omp critical
      {
        capped = true;
        cap_message = e.what();
      }
    }
  }
  if (capped) throw CapExceeded(cap_message);
  for (const auto& p : partial) {
    result.grid += p.grid;
    result.evaluations += p.evaluations;
    result.euler_failures += p.euler_failures;
    result.modular_mismatches += p.modular_mismatches;
  }
  return result;
}

Count hochster_betti(const PathFamily& family, int i, int j, const Caps& caps, Execution exec) {
  family.validate();
  if (i < 0 || j < 0 || i > family.n || j > family.n) return Count(0);
  return hochster_grid(family, caps, exec).grid.at(i, j);
}

}  // namespace pathbetti
