#include "toric/lattice_count.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <thread>

#include "toric/error.hpp"

namespace toric {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

template <class T>
T convert(const BigInt& x) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return x;
  } else {
    return static_cast<T>(x);
  }
}

// Inequalities <a_f, x> >= b_f over the box [lo, hi], in the scanner's integer type.
template <class T>
struct System {
  std::size_t dim = 0;
  std::vector<std::vector<T>> a;
  std::vector<T> b;
  std::vector<T> lo;
  std::vector<T> hi;
};

template <class T>
System<T> make_system(std::size_t dim, std::span<const Halfspace> ineqs, const LatticeVector& lo,
                      const LatticeVector& hi) {
  System<T> s;
  s.dim = dim;
  for (const auto& h : ineqs) {
    std::vector<T> row;
    row.reserve(dim);
    for (const auto& x : h.normal) row.push_back(convert<T>(x));
    s.a.push_back(std::move(row));
    s.b.push_back(convert<T>(h.offset));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    s.lo.push_back(convert<T>(lo[i]));
    s.hi.push_back(convert<T>(hi[i]));
  }
  return s;
}

// True when every partial sum fits comfortably in 64 bits.
bool fits_int64(std::span<const Halfspace> ineqs, const LatticeVector& lo, const LatticeVector& hi) {
  BigInt m = 0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    m = std::max(m, BigInt(abs(lo[i])));
    m = std::max(m, BigInt(abs(hi[i])));
  }
  const BigInt limit = BigInt(1) << 61;
  for (const auto& h : ineqs) {
    BigInt bound = abs(h.offset);
    for (const auto& x : h.normal) bound += abs(x) * m;
    if (bound >= limit) return false;
  }
  return true;
}

// Visits every line parallel to the last axis whose prefix lies in the box and whose integer
// range within the system is nonempty. `on_line(partial, lo, hi)` receives the prefix part of each
// inequality's left-hand side. Coordinate 0 is restricted to [first_lo, first_hi] when dim >= 2.
template <class T, class OnLine>
void scan_lines(const System<T>& sys, T first_lo, T first_hi, OnLine&& on_line) {
  const std::size_t n = sys.dim;
  const std::size_t m = sys.a.size();
  const std::size_t last = n - 1;

  auto emit = [&](const std::vector<T>& partial) {
    T lo = sys.lo[last];
    T hi = sys.hi[last];
    for (std::size_t f = 0; f < m; ++f) {
      const T& c = sys.a[f][last];
      const T r = sys.b[f] - partial[f];
      if (c > 0) {
        T bound;
        if constexpr (std::is_same_v<T, BigInt>) {
          bound = toric::ceil_div(r, c);
        } else {
          bound = ceil_div(r, c);
        }
        if (bound > lo) lo = bound;
      } else if (c < 0) {
        T bound;
        if constexpr (std::is_same_v<T, BigInt>) {
          bound = toric::floor_div(r, c);
        } else {
          bound = floor_div(r, c);
        }
        if (bound < hi) hi = bound;
      } else if (r > 0) {
        return;
      }
      if (lo > hi) return;
    }
    on_line(partial, lo, hi);
  };

  // partial[level] holds the sums over coordinates < level.
  std::vector<std::vector<T>> partial(n, std::vector<T>(m, T(0)));
  if (n == 1) {
    emit(partial[0]);
    return;
  }
  std::vector<T> x(n, T(0));
  // Iterative odometer over coordinates 0..n-2.
  std::size_t level = 0;
  x[0] = first_lo;
  while (true) {
    const T level_hi = level == 0 ? first_hi : sys.hi[level];
    if (x[level] > level_hi) {
      if (level == 0) return;
      --level;
      ++x[level];
      continue;
    }
    auto& next = partial[level + 1];
    for (std::size_t f = 0; f < m; ++f) next[f] = partial[level][f] + sys.a[f][level] * x[level];
    if (level + 1 == last) {
      emit(next);
      ++x[level];
    } else {
      ++level;
      x[level] = sys.lo[level];
    }
  }
}

template <class T, class MakeWorker, class Merge>
void run_partitioned(const System<T>& sys, unsigned threads, MakeWorker&& make_worker,
                     Merge&& merge) {
  if (sys.dim < 2 || threads <= 1) {
    auto w = make_worker();
    if (sys.dim == 1) {
      scan_lines(sys, T(0), T(0), w);
    } else {
      scan_lines(sys, sys.lo[0], sys.hi[0], w);
    }
    merge(w);
    return;
  }
  const T lo = sys.lo[0];
  const T hi = sys.hi[0];
  const T span = hi - lo + 1;
  std::vector<T> bounds;
  for (unsigned t = 0; t <= threads; ++t) bounds.push_back(lo + (span * T(t)) / T(threads));
  std::vector<decltype(make_worker())> workers;
  for (unsigned t = 0; t < threads; ++t) workers.push_back(make_worker());
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      if (bounds[t] >= bounds[t + 1]) continue;
      pool.emplace_back([&, t] { scan_lines(sys, bounds[t], T(bounds[t + 1] - 1), workers[t]); });
    }
  }
  for (auto& w : workers) merge(w);
}

template <class T>
struct LineCounter {
  BigInt total = 0;
  void operator()(const std::vector<T>&, const T& lo, const T& hi) {
    total += BigInt(hi - lo + 1);
  }
};

template <class T>
BigInt count_with(const System<T>& sys, unsigned threads) {
  BigInt total = 0;
  run_partitioned(
      sys, threads, [] { return LineCounter<T>{}; },
      [&](const LineCounter<T>& w) { total += w.total; });
  return total;
}

// Histogram of lattice points by tight-facet set, i.e. by smallest face.
template <class T>
struct FaceHistogram {
  const System<T>* sys = nullptr;
  const FaceLattice* lattice = nullptr;
  std::vector<BigInt> interior;

  void add(const std::vector<std::size_t>& tight, const BigInt& amount) {
    auto id = lattice->find_by_tight_facets(tight);
    if (!id) throw std::logic_error("lattice point with no matching face");
    interior[*id] += amount;
  }

  void operator()(const std::vector<T>& partial, const T& lo, const T& hi) {
    const std::size_t last = sys->dim - 1;
    std::vector<std::size_t> base;
    std::map<T, std::vector<std::size_t>> events;
    for (std::size_t f = 0; f < sys->a.size(); ++f) {
      const T& c = sys->a[f][last];
      const T r = sys->b[f] - partial[f];
      if (c == 0) {
        if (r == 0) base.push_back(f);
      } else if (r % c == 0) {
        const T x = r / c;
        if (x >= lo && x <= hi) events[x].push_back(f);
      }
    }
    // If every point on the line is an event, `base` alone need not be a face's tight set.
    const BigInt rest = BigInt(hi - lo + 1) - BigInt(events.size());
    if (rest > 0) add(base, rest);
    for (const auto& [x, facets] : events) {
      std::vector<std::size_t> tight;
      std::merge(base.begin(), base.end(), facets.begin(), facets.end(),
                 std::back_inserter(tight));
      add(tight, 1);
    }
  }
};

template <class T>
std::vector<BigInt> histogram_with(const System<T>& sys, const FaceLattice& lattice,
                                   unsigned threads) {
  std::vector<BigInt> interior(lattice.size(), 0);
  run_partitioned(
      sys, threads,
      [&] { return FaceHistogram<T>{&sys, &lattice, std::vector<BigInt>(lattice.size(), 0)}; },
      [&](const FaceHistogram<T>& w) {
        for (std::size_t i = 0; i < interior.size(); ++i) interior[i] += w.interior[i];
      });
  return interior;
}

void bounding_box(const Polytope& p, LatticeVector& lo, LatticeVector& hi) {
  lo = p.vertices().front();
  hi = p.vertices().front();
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  }
}

std::vector<std::vector<std::size_t>> triangulate(const Polytope& p, std::size_t face_id) {
  const auto& lattice = p.faces();
  const Face& f = lattice.face(face_id);
  if (f.dim == 0) return {{f.vertex_ids.front()}};
  const std::size_t apex = f.vertex_ids.front();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t g : lattice.subfaces(face_id)) {
    const Face& sub = lattice.face(g);
    if (sub.dim + 1 != f.dim) continue;
    if (std::binary_search(sub.vertex_ids.begin(), sub.vertex_ids.end(), apex)) continue;
    for (auto& simplex : triangulate(p, g)) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace

BigInt count_points(std::size_t dim, std::span<const Halfspace> inequalities,
                    const LatticeVector& lo, const LatticeVector& hi, const ScanOptions& opts) {
  for (std::size_t i = 0; i < dim; ++i) {
    if (lo[i] > hi[i]) return 0;
  }
  if (dim == 0) {
    const bool ok = std::all_of(inequalities.begin(), inequalities.end(),
                                [](const Halfspace& h) { return h.offset <= 0; });
    return ok ? 1 : 0;
  }
  if (fits_int64(inequalities, lo, hi)) {
    return count_with(make_system<std::int64_t>(dim, inequalities, lo, hi), opts.threads);
  }
  return count_with(make_system<BigInt>(dim, inequalities, lo, hi), opts.threads);
}

BigInt count_points(const Polytope& p, const ScanOptions& opts) {
  LatticeVector lo;
  LatticeVector hi;
  bounding_box(p, lo, hi);
  return count_points(p.dim(), p.facets(), lo, hi, opts);
}

FaceCountTable count_table(const Polytope& p, const ScanOptions& opts) {
  const auto& lattice = p.faces();
  const std::size_t n = p.dim();
  std::vector<BigInt> interior;
  if (n == 0) {
    interior.assign(lattice.size(), 0);
    interior[lattice.full_face()] = 1;
  } else {
    LatticeVector lo;
    LatticeVector hi;
    bounding_box(p, lo, hi);
    if (fits_int64(p.facets(), lo, hi)) {
      interior = histogram_with(make_system<std::int64_t>(n, p.facets(), lo, hi), lattice,
                                opts.threads);
    } else {
      interior =
          histogram_with(make_system<BigInt>(n, p.facets(), lo, hi), lattice, opts.threads);
    }
  }

  FaceCountTable table;
  table.per_face.resize(lattice.size());
  // A point counts toward l(F) iff its tight-facet set contains every facet through F.
  for (std::size_t f = 0; f < lattice.size(); ++f) {
    const auto& tf = lattice.face(f).tight_facets;
    BigInt closed = 0;
    for (std::size_t g = 0; g < lattice.size(); ++g) {
      const auto& tg = lattice.face(g).tight_facets;
      if (std::includes(tg.begin(), tg.end(), tf.begin(), tf.end())) closed += interior[g];
    }
    table.per_face[f] = FaceCount{closed, interior[f]};
  }
  table.closed_by_codim.assign(n + 1, 0);
  table.interior_by_dim.assign(n + 1, 0);
  for (std::size_t f = 0; f < lattice.size(); ++f) {
    const std::size_t d = lattice.face(f).dim;
    table.closed_by_codim[n - d] += table.per_face[f].l;
    table.interior_by_dim[d] += table.per_face[f].l_star;
  }
  return table;
}

BigInt count(const Polytope& p, std::size_t face_id) {
  p.faces().face(face_id);
  return count_table(p).per_face[face_id].l;
}

BigInt count_interior(const Polytope& p, std::size_t face_id) {
  p.faces().face(face_id);
  return count_table(p).per_face[face_id].l_star;
}

Rational volume(const Polytope& p) {
  const std::size_t n = p.dim();
  BigInt total = 0;
  for (const auto& simplex : triangulate(p, p.faces().full_face())) {
    const auto& apex = p.vertices()[simplex.back()];
    std::vector<std::vector<BigInt>> m;
    for (std::size_t i = 0; i + 1 < simplex.size(); ++i) {
      const auto& v = p.vertices()[simplex[i]];
      std::vector<BigInt> row(n);
      for (std::size_t c = 0; c < n; ++c) row[c] = v[c] - apex[c];
      m.push_back(std::move(row));
    }
    total += abs(determinant(std::move(m)));
  }
  BigInt factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= i;
  return Rational(total, factorial);
}

}  // namespace toric
