#include "lnat/domain.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace lnat {

namespace {

constexpr Int kInf = std::numeric_limits<Int>::max() / 4;

// Arc u -> v with weight w encodes the constraint y_v - y_u <= w.
// Node 0 is the origin variable pinned to zero; node i+1 is coordinate i.
struct Arc {
  int from;
  int to;
  Int weight;
};

std::vector<Arc> constraint_arcs(const std::vector<Int>& lower, const std::vector<Int>& upper,
                                 const DiffBounds& diff, const BoxRefinement* extra) {
  const int d = static_cast<int>(lower.size());
  std::vector<Arc> arcs;
  arcs.reserve(2 * d + 4);
  for (int i = 0; i < d; ++i) {
    Int lo = lower[i], hi = upper[i];
    if (extra && i < static_cast<int>(extra->size()) && (*extra)[i]) {
      const auto& [rlo, rhi] = *(*extra)[i];
      if (rlo > rhi) throw std::invalid_argument("box refinement with empty interval");
      lo = std::max(lo, rlo);
      hi = std::min(hi, rhi);
      if (lo > hi) throw InfeasibleRegionError("box refinement excludes the whole domain");
    }
    arcs.push_back({0, i + 1, hi});
    arcs.push_back({i + 1, 0, -lo});
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j)
        if (auto g = diff.get(i, j)) arcs.push_back({j + 1, i + 1, *g});
  return arcs;
}

// Bellman-Ford from src over n nodes; d+1-pass relaxation, one extra pass
// certifies the absence of negative cycles. Returns nullopt on a cycle.
std::optional<std::vector<Int>> shortest_from(int n, const std::vector<Arc>& arcs, int src) {
  std::vector<Int> dist(n, kInf);
  dist[src] = 0;
  for (int pass = 0; pass < n - 1; ++pass) {
    bool changed = false;
    for (const Arc& a : arcs) {
      if (dist[a.from] < kInf && dist[a.from] + a.weight < dist[a.to]) {
        dist[a.to] = dist[a.from] + a.weight;
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (const Arc& a : arcs)
    if (dist[a.from] < kInf && dist[a.from] + a.weight < dist[a.to]) return std::nullopt;
  return dist;
}

std::optional<std::vector<std::vector<Int>>> all_pairs(int n, const std::vector<Arc>& arcs) {
  std::vector<std::vector<Int>> dist;
  dist.reserve(n);
  for (int src = 0; src < n; ++src) {
    auto row = shortest_from(n, arcs, src);
    if (!row) return std::nullopt;
    dist.push_back(std::move(*row));
  }
  return dist;
}

Int floor_half(Int s) { return s >= 0 ? s / 2 : -((-s + 1) / 2); }
Int ceil_half(Int s) { return -floor_half(-s); }

}  // namespace

void DiffBounds::set(int i, int j, Int bound) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw std::invalid_argument("diff bound index out of range");
  if (i == j) {
    if (bound != 0) throw std::invalid_argument("diagonal difference bound must be zero");
    return;
  }
  entries_[static_cast<std::size_t>(i) * dim_ + j] = bound;
}

LNatDomain::LNatDomain(std::vector<Int> lower, std::vector<Int> upper, DiffBounds diff)
    : lower_(std::move(lower)), upper_(std::move(upper)), diff_(std::move(diff)) {
  const int d = static_cast<int>(lower_.size());
  if (d == 0) throw DomainError("domain must have at least one coordinate");
  if (static_cast<int>(upper_.size()) != d || diff_.dim() != d)
    throw DimensionMismatchError("lower/upper/diff dimensions disagree");
  for (int i = 0; i < d; ++i)
    if (lower_[i] > upper_[i])
      throw EmptyDomainError("empty box: lower exceeds upper at coordinate " + std::to_string(i + 1));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j && diff_.get(i, j)) ++arc_count_;

  const auto arcs = constraint_arcs(lower_, upper_, diff_, nullptr);
  auto dist = all_pairs(d + 1, arcs);
  if (!dist) throw EmptyDomainError("difference constraints admit no point (negative cycle)");
  dist_ = std::move(*dist);

  for (int u = 0; u <= d; ++u)
    for (int v = u + 1; v <= d; ++v)
      if (dist_[u][v] + dist_[v][u] == 0) {
        if (u == 0)
          throw NotFullDimensionalError("coordinate " + std::to_string(v) + " is pinned to " +
                                        std::to_string(dist_[0][v]));
        throw NotFullDimensionalError("coordinates " + std::to_string(u) + " and " + std::to_string(v) +
                                      " are rigidly coupled (tight difference cycle)");
      }
}

Int LNatDomain::max_range() const {
  Int n = 0;
  for (int i = 0; i < dim(); ++i) n = std::max(n, upper_[i] - lower_[i]);
  return n;
}

bool LNatDomain::contains(const LatticePoint& z) const {
  const int d = dim();
  if (static_cast<int>(z.size()) != d) throw DimensionMismatchError("point dimension mismatch");
  for (int i = 0; i < d; ++i)
    if (z[i] < lower_[i] || z[i] > upper_[i]) return false;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j)
        if (auto g = diff_.get(i, j); g && z[i] - z[j] > *g) return false;
  return true;
}

bool LNatDomain::contains(const RatVec& x) const {
  const int d = dim();
  if (static_cast<int>(x.size()) != d) throw DimensionMismatchError("point dimension mismatch");
  for (int i = 0; i < d; ++i)
    if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j)
        if (auto g = diff_.get(i, j); g && x[i] - x[j] > *g) return false;
  return true;
}

double LNatDomain::hull_violation(const RealVec& x) const {
  const int d = dim();
  if (static_cast<int>(x.size()) != d) throw DimensionMismatchError("point dimension mismatch");
  double worst = 0;
  for (int i = 0; i < d; ++i) {
    worst = std::max(worst, static_cast<double>(lower_[i]) - x[i]);
    worst = std::max(worst, x[i] - static_cast<double>(upper_[i]));
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j)
        if (auto g = diff_.get(i, j)) worst = std::max(worst, x[i] - x[j] - static_cast<double>(*g));
  return std::max(worst, 0.0);
}

Int LNatDomain::tightest_difference(int i, int j) const {
  const int d = dim();
  if (i < 0 || j < 0 || i >= d || j >= d) throw std::invalid_argument("coordinate index out of range");
  if (i == j) throw std::invalid_argument("tightest_difference requires distinct coordinates");
  return dist_[j + 1][i + 1];
}

Int LNatDomain::coordinate_max(const BoxRefinement& extra_box, int i) const {
  const int d = dim();
  if (i < 0 || i >= d) throw std::invalid_argument("coordinate index out of range");
  if (static_cast<int>(extra_box.size()) > d) throw DimensionMismatchError("refinement longer than dimension");
  const auto arcs = constraint_arcs(lower_, upper_, diff_, &extra_box);
  auto dist = shortest_from(d + 1, arcs, 0);
  if (!dist) throw InfeasibleRegionError("refined region is empty");
  return (*dist)[i + 1];
}

Int LNatDomain::coordinate_min(const BoxRefinement& extra_box, int i) const {
  const int d = dim();
  if (i < 0 || i >= d) throw std::invalid_argument("coordinate index out of range");
  if (static_cast<int>(extra_box.size()) > d) throw DimensionMismatchError("refinement longer than dimension");
  const auto arcs = constraint_arcs(lower_, upper_, diff_, &extra_box);
  auto dist = shortest_from(d + 1, arcs, i + 1);
  if (!dist) throw InfeasibleRegionError("refined region is empty");
  return -(*dist)[0];
}

bool LNatDomain::is_full_dimensional() const {
  return is_full_dimensional(lower_, upper_, diff_);
}

bool LNatDomain::is_feasible(const std::vector<Int>& lower, const std::vector<Int>& upper,
                             const DiffBounds& diff) {
  const int d = static_cast<int>(lower.size());
  for (int i = 0; i < d; ++i)
    if (lower[i] > upper[i]) return false;
  const auto arcs = constraint_arcs(lower, upper, diff, nullptr);
  return shortest_from(d + 1, arcs, 0).has_value();
}

bool LNatDomain::is_full_dimensional(const std::vector<Int>& lower, const std::vector<Int>& upper,
                                     const DiffBounds& diff) {
  const int d = static_cast<int>(lower.size());
  for (int i = 0; i < d; ++i)
    if (lower[i] >= upper[i]) return false;
  const auto arcs = constraint_arcs(lower, upper, diff, nullptr);
  const auto dist = all_pairs(d + 1, arcs);
  if (!dist) return false;
  for (int u = 0; u <= d; ++u)
    for (int v = u + 1; v <= d; ++v)
      if ((*dist)[u][v] + (*dist)[v][u] == 0) return false;
  return true;
}

// Assigning coordinates in index order with intervals propagated through the
// shortest-path closure is backtrack-free for difference-constraint systems,
// so the traversal emits exactly K in lexicographic order.
void LNatDomain::enumerate_impl(std::size_t cap, std::vector<LatticePoint>* out,
                                std::size_t* count) const {
  const int d = dim();
  std::vector<std::vector<Int>> lo(d + 1, std::vector<Int>(d)), hi(d + 1, std::vector<Int>(d));
  for (int k = 0; k < d; ++k) {
    lo[0][k] = -dist_[k + 1][0];
    hi[0][k] = dist_[0][k + 1];
  }
  LatticePoint z(d);
  std::vector<Int> cursor(d);
  int level = 0;
  cursor[0] = lo[0][0];
  while (level >= 0) {
    if (cursor[level] > hi[level][level]) {
      --level;
      if (level >= 0) ++cursor[level];
      continue;
    }
    z[level] = cursor[level];
    if (level == d - 1) {
      if (++*count > cap) throw TooLargeError("domain exceeds enumeration cap of " + std::to_string(cap));
      if (out) out->push_back(z);
      ++cursor[level];
      continue;
    }
    const Int v = cursor[level];
    for (int k = level + 1; k < d; ++k) {
      lo[level + 1][k] = std::max(lo[level][k], v - dist_[k + 1][level + 1]);
      hi[level + 1][k] = std::min(hi[level][k], v + dist_[level + 1][k + 1]);
    }
    ++level;
    cursor[level] = lo[level][level];
  }
}

std::vector<LatticePoint> LNatDomain::enumerate(std::size_t cap) const {
  std::vector<LatticePoint> out;
  std::size_t n = 0;
  enumerate_impl(cap, &out, &n);
  return out;
}

std::size_t LNatDomain::count(std::size_t cap) const {
  std::size_t n = 0;
  enumerate_impl(cap, nullptr, &n);
  return n;
}

RatVec LNatDomain::nearest_feasible(const RealVec& x, double slack) const {
  const int d = dim();
  if (static_cast<int>(x.size()) != d) throw DimensionMismatchError("point dimension mismatch");
  RatVec q = rat_vec_from_doubles(x);
  for (int i = 0; i < d; ++i) q[i] = std::min(std::max(q[i], Rat(static_cast<long>(lower_[i]))),
                                              Rat(static_cast<long>(upper_[i])));
  if (arc_count_ == 0 || contains(q)) return q;

  Rat delta = rat_from_double(std::max(slack, 1e-12));
  const Rat give_up = rat_from_double(std::max(slack, 1e-12) * 1e6);
  while (delta <= give_up) {
    // Maximal point of conv(K) cut down to the per-coordinate interval
    // [x - delta, x + delta]: rational shortest paths from the origin node.
    RatVec ulim(d), llim(d);
    for (int i = 0; i < d; ++i) {
      ulim[i] = std::min(Rat(static_cast<long>(upper_[i])), Rat(q[i] + delta));
      llim[i] = std::max(Rat(static_cast<long>(lower_[i])), Rat(q[i] - delta));
    }
    std::vector<std::tuple<int, int, Rat>> arcs;
    for (int i = 0; i < d; ++i) {
      arcs.emplace_back(0, i + 1, ulim[i]);
      arcs.emplace_back(i + 1, 0, -llim[i]);
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (i != j)
          if (auto g = diff_.get(i, j)) arcs.emplace_back(j + 1, i + 1, Rat(static_cast<long>(*g)));

    std::vector<Rat> dist(d + 1);
    std::vector<bool> seen(d + 1, false);
    seen[0] = true;
    bool negative_cycle = false;
    for (int pass = 0; pass <= d; ++pass) {
      bool changed = false;
      for (const auto& [from, to, w] : arcs) {
        if (!seen[from]) continue;
        const Rat cand = dist[from] + w;
        if (!seen[to] || cand < dist[to]) {
          if (pass == d) {
            negative_cycle = true;
            break;
          }
          dist[to] = cand;
          seen[to] = true;
          changed = true;
        }
      }
      if (negative_cycle || !changed) break;
    }
    if (!negative_cycle) {
      RatVec y(d);
      for (int i = 0; i < d; ++i) y[i] = dist[i + 1];
      return y;
    }
    delta *= 4;
  }
  throw OutOfDomainError("point is not within the repair slack of conv(K)");
}

std::string LNatDomain::to_text() const {
  std::ostringstream os;
  const int d = dim();
  os << "dim " << d << "\n";
  os << "lower";
  for (Int v : lower_) os << ' ' << v;
  os << "\nupper";
  for (Int v : upper_) os << ' ' << v;
  os << "\n";
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j)
        if (auto g = diff_.get(i, j)) os << "diff " << (i + 1) << ' ' << (j + 1) << ' ' << *g << "\n";
  return os.str();
}

LNatDomain LNatDomain::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int d = -1;
  std::vector<Int> lower, upper;
  std::vector<std::tuple<int, int, Int>> diffs;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "dim") {
      if (!(ls >> d) || d <= 0) throw DomainError("bad dim line in domain text");
    } else if (key == "lower" || key == "upper") {
      auto& dst = (key == "lower") ? lower : upper;
      Int v;
      while (ls >> v) dst.push_back(v);
    } else if (key == "diff") {
      int i, j;
      Int g;
      if (!(ls >> i >> j >> g)) throw DomainError("bad diff line in domain text");
      diffs.emplace_back(i, j, g);
    } else {
      throw DomainError("unknown field '" + key + "' in domain text");
    }
  }
  if (d < 0) throw DomainError("domain text is missing the dim field");
  if (static_cast<int>(lower.size()) != d || static_cast<int>(upper.size()) != d)
    throw DomainError("lower/upper length does not match dim");
  DiffBounds diff(d);
  for (const auto& [i, j, g] : diffs) {
    if (i < 1 || j < 1 || i > d || j > d) throw DomainError("diff indices out of range (1-based)");
    diff.set(i - 1, j - 1, g);
  }
  return LNatDomain(std::move(lower), std::move(upper), std::move(diff));
}

bool verify_lnatural_set(const std::vector<LatticePoint>& points) {
  if (points.empty()) return true;
  std::vector<LatticePoint> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto member = [&](const LatticePoint& z) {
    return std::binary_search(sorted.begin(), sorted.end(), z);
  };
  const std::size_t n = sorted.size();
  const std::size_t d = sorted.front().size();
  LatticePoint up(d), down(d);
  for (std::size_t a = 0; a < n; ++a) {
    if (sorted[a].size() != d) throw DimensionMismatchError("points of mixed dimension");
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t k = 0; k < d; ++k) {
        const Int s = sorted[a][k] + sorted[b][k];
        up[k] = ceil_half(s);
        down[k] = floor_half(s);
      }
      if (!member(up) || !member(down)) return false;
    }
  }
  return true;
}

}  // namespace lnat
