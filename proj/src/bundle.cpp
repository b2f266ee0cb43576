#include "toric/bundle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/error.hpp"
#include "toric/lattice_count.hpp"

namespace toric {

namespace {

// Lattice-point counts of lambda-weighted Minkowski sums, cached per lambda.
class WeightedSumCounter {
 public:
  explicit WeightedSumCounter(const BundleData& bundle) : bundle_(bundle) {}

  const BigInt& count(const std::vector<long>& lambda) {
    auto it = cache_.find(lambda);
    if (it != cache_.end()) return it->second;
    std::optional<Polytope> sum;
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      if (lambda[j] == 0) continue;
      Polytope scaled = dilate(bundle_.summands[j], lambda[j]);
      sum = sum ? minkowski_sum(*sum, scaled) : scaled;
    }
    BigInt value = sum ? count_points(*sum) : BigInt(1);
    return cache_.emplace(lambda, std::move(value)).first->second;
  }

  // Sum over compositions of k with lambda_j >= 1 for j in `subset`.
  BigInt cayley(std::span<const std::size_t> subset, long k) {
    const std::size_t parts = bundle_.summands.size();
    std::vector<long> lower(parts, 0);
    for (std::size_t j : subset) {
      if (j >= parts) throw ToricError(ErrorKind::OutOfRange, "summand index out of range");
      lower[j] = 1;
    }
    long remaining = k;
    for (long l : lower) remaining -= l;
    if (remaining < 0) return 0;
    BigInt total = 0;
    std::vector<long> lambda(lower);
    distribute(lambda, 0, remaining, lower, total);
    return total;
  }

 private:
  void distribute(std::vector<long>& lambda, std::size_t j, long remaining,
                  const std::vector<long>& lower, BigInt& total) {
    if (j + 1 == lambda.size()) {
      lambda[j] = lower[j] + remaining;
      total += count(lambda);
      return;
    }
    for (long extra = 0; extra <= remaining; ++extra) {
      lambda[j] = lower[j] + extra;
      distribute(lambda, j + 1, remaining - extra, lower, total);
    }
  }

  const BundleData& bundle_;
  std::map<std::vector<long>, BigInt> cache_;
};

// Calls f(subset) for every t-subset of {0..m-1}.
template <class F>
void for_each_subset(std::size_t m, std::size_t t, F&& f) {
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (idx.size() == t) {
      f(std::span<const std::size_t>(idx));
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
}

// Unique solution of the square system rows * x = rhs, if any.
std::optional<RationalVector> solve(std::vector<RationalVector> rows, RationalVector rhs) {
  const std::size_t n = rows.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && rows[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[c], rows[pivot]);
    std::swap(rhs[c], rhs[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[c][c];
      for (std::size_t j = c; j < n; ++j) rows[r][j] -= factor * rows[c][j];
      rhs[r] -= factor * rhs[c];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / rows[i][i];
  return x;
}

Halfspace reduced(LatticeVector normal, BigInt offset) {
  BigInt g = 0;
  for (const auto& a : normal) g = gcd(g, a);
  g = gcd(g, offset);
  if (g > 1) {
    for (auto& a : normal) a /= g;
    offset /= g;
  }
  return Halfspace{std::move(normal), std::move(offset)};
}

}  // namespace

BundleData BundleData::make(std::vector<Polytope> summands) {
  if (summands.size() < 2) {
    throw ToricError(ErrorKind::OutOfRange, "a bundle needs at least two summands (s >= 1)");
  }
  const std::size_t n = summands.front().dim();
  for (std::size_t j = 0; j < summands.size(); ++j) {
    if (summands[j].dim() != n) {
      throw ToricError(ErrorKind::DimensionMismatch,
                       "summand " + std::to_string(j) + " has dimension " +
                           std::to_string(summands[j].dim()) + ", expected " + std::to_string(n));
    }
    require_simple(summands[j]);
  }
  return BundleData{n, std::move(summands)};
}

BigInt cayley_count(const BundleData& bundle, std::span<const std::size_t> subset, long k) {
  if (k < 0) return 0;
  std::set<std::size_t> distinct(subset.begin(), subset.end());
  std::vector<std::size_t> unique(distinct.begin(), distinct.end());
  WeightedSumCounter counter(bundle);
  return counter.cayley(unique, k);
}

BigInt h0_relative(const BundleData& bundle, long p, long k) {
  const long s = static_cast<long>(bundle.rank()) - 1;
  if (p < 0 || p > s) {
    throw ToricError(ErrorKind::OutOfRange,
                     "relative form degree " + std::to_string(p) + " outside 0.." + std::to_string(s));
  }
  if (k < 0) throw ToricError(ErrorKind::OutOfRange, "twist k must be >= 0");
  WeightedSumCounter counter(bundle);
  BigInt total = 0;
  for (long t = 0; t <= p; ++t) {
    BigInt layer = 0;
    for_each_subset(bundle.rank(), static_cast<std::size_t>(t),
                    [&](std::span<const std::size_t> subset) { layer += counter.cayley(subset, k); });
    total += sign_pow(p - t) * layer;
  }
  return total;
}

Nabla nabla(const BundleData& bundle, long k, std::span<const long> lower_bounds) {
  const std::size_t parts = bundle.rank();
  const std::size_t s = parts - 1;
  const std::size_t n = bundle.base_dim;
  if (lower_bounds.size() != parts) {
    throw ToricError(ErrorKind::DimensionMismatch, "need one lower bound per summand");
  }
  long slack = k;
  for (long b : lower_bounds) slack += b;
  if (slack < 0) {
    throw ToricError(ErrorKind::EmptyPolytope, "k + sum of lower bounds is negative");
  }

  Nabla out;
  out.dim = s + n;
  // lambda_j >= -k_j, j = 1..s
  for (std::size_t j = 1; j <= s; ++j) {
    LatticeVector a(out.dim, 0);
    a[j - 1] = 1;
    out.inequalities.push_back(reduced(std::move(a), -lower_bounds[j]));
  }
  // lambda_0 = k - sum lambda_j >= -k_0
  {
    LatticeVector a(out.dim, 0);
    for (std::size_t j = 0; j < s; ++j) a[j] = -1;
    out.inequalities.push_back(reduced(std::move(a), BigInt(-k - lower_bounds[0])));
  }
  // <x, v> >= -sum_j lambda_j a_j(v) over the normals of the common refinement.
  if (n > 0) {
    Polytope total = bundle.summands.front();
    for (std::size_t j = 1; j < parts; ++j) total = minkowski_sum(total, bundle.summands[j]);
    for (const auto& facet : total.facets()) {
      std::vector<BigInt> support(parts);
      for (std::size_t j = 0; j < parts; ++j) {
        const auto& verts = bundle.summands[j].vertices();
        BigInt lowest = Halfspace{facet.normal, 0}.evaluate(verts.front());
        for (const auto& v : verts) lowest = std::min(lowest, Halfspace{facet.normal, 0}.evaluate(v));
        support[j] = -lowest;
      }
      LatticeVector a(out.dim, 0);
      for (std::size_t j = 1; j <= s; ++j) a[j - 1] = support[j] - support[0];
      for (std::size_t i = 0; i < n; ++i) a[s + i] = facet.normal[i];
      out.inequalities.push_back(reduced(std::move(a), -BigInt(k) * support[0]));
    }
  }

  // Vertices: feasible unique intersections of dim inequalities.
  std::set<RationalVector> found;
  for_each_subset(out.inequalities.size(), out.dim, [&](std::span<const std::size_t> subset) {
    std::vector<RationalVector> rows;
    RationalVector rhs;
    for (std::size_t i : subset) {
      const auto& h = out.inequalities[i];
      rows.emplace_back(h.normal.begin(), h.normal.end());
      rhs.emplace_back(h.offset);
    }
    auto x = solve(std::move(rows), std::move(rhs));
    if (!x) return;
    for (const auto& h : out.inequalities) {
      if (h.evaluate(*x) < Rational(h.offset)) return;
    }
    found.insert(std::move(*x));
  });
  if (found.empty()) throw ToricError(ErrorKind::EmptyPolytope, "no feasible vertex");
  for (const auto& x : found) {
    LatticeVector v;
    for (const auto& c : x) {
      if (denominator(c) != 1) {
        throw ToricError(ErrorKind::NonLatticeVertex, "nabla has a fractional vertex");
      }
      v.push_back(numerator(c));
    }
    out.vertices.push_back(std::move(v));
  }
  return out;
}

BigInt Nabla::lattice_points() const {
  LatticeVector lo = vertices.front();
  LatticeVector hi = vertices.front();
  for (const auto& v : vertices) {
    for (std::size_t i = 0; i < dim; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  return count_points(dim, inequalities, lo, hi);
}

Polytope Nabla::polytope() const { return Polytope::from_vertices(dim, vertices); }

}  // namespace toric
