#include "toric/polytope.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

LatticeVector difference(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void make_primitive(LatticeVector& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

// Calls f(indices) for every k-subset of {0..m-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(std::as_const(idx));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Halfspace> enumerate_facets(std::size_t dim, const std::vector<LatticeVector>& pts) {
  std::set<std::pair<LatticeVector, BigInt>> seen;
  std::vector<Halfspace> facets;
  std::vector<LatticeVector> chosen(dim);
  for_each_subset(pts.size(), dim, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < dim; ++i) chosen[i] = pts[idx[i]];
    auto normal = hyperplane_normal(chosen);
    if (!normal) return;
    Halfspace h{std::move(*normal), 0};
    h.offset = h.evaluate(pts[idx[0]]);
    bool above = false;
    bool below = false;
    for (const auto& p : pts) {
      const BigInt v = h.evaluate(p);
      if (v > h.offset) above = true;
      if (v < h.offset) below = true;
      if (above && below) return;
    }
    if (below) {
      for (auto& x : h.normal) x = -x;
      h.offset = -h.offset;
    }
    if (seen.emplace(h.normal, h.offset).second) facets.push_back(std::move(h));
  });
  return facets;
}

}  // namespace

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

BigInt Halfspace::evaluate(const LatticeVector& x) const {
  BigInt s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * x[i];
  return s;
}

Rational Halfspace::evaluate(const RationalVector& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += Rational(normal[i]) * x[i];
  return s;
}

long affine_dimension(std::span<const LatticeVector> points) {
  if (points.empty()) return -1;
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) rows.push_back(difference(points[i], points[0]));
  return static_cast<long>(rank(std::move(rows)));
}

std::optional<LatticeVector> hyperplane_normal(std::span<const LatticeVector> points) {
  const std::size_t n = points.size();
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(difference(points[i], points[0]));
  LatticeVector normal(n);
  bool nonzero = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<BigInt>> minor;
    minor.reserve(rows.size());
    for (const auto& r : rows) {
      std::vector<BigInt> m;
      m.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) m.push_back(r[c]);
      }
      minor.push_back(std::move(m));
    }
    normal[col] = determinant(std::move(minor));
    if (col % 2 == 1) normal[col] = -normal[col];
    if (normal[col] != 0) nonzero = true;
  }
  if (!nonzero) return std::nullopt;
  make_primitive(normal);
  return normal;
}

// ---------------------------------------------------------------------------

FaceLattice::FaceLattice(std::vector<Face> faces, std::size_t ambient_dim)
    : faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_ids < b.vertex_ids;
  });
  by_dim_.assign(ambient_dim + 1, {});
  std::size_t num_vertices = 0;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const Face& f = faces_[i];
    by_dim_.at(f.dim).push_back(i);
    by_tight_.emplace(f.tight_facets, i);
    by_vertices_.emplace(f.vertex_ids, i);
    if (f.dim == 0) num_vertices = std::max(num_vertices, f.vertex_ids.front() + 1);
  }
  vertex_faces_.assign(num_vertices, 0);
  for (std::size_t id : by_dim_[0]) vertex_faces_[faces_[id].vertex_ids.front()] = id;

  subfaces_.assign(faces_.size(), {});
  superfaces_.assign(faces_.size(), {});
  for (std::size_t outer = 0; outer < faces_.size(); ++outer) {
    for (std::size_t inner = 0; inner <= outer; ++inner) {
      if (contains(outer, inner)) {
        subfaces_[outer].push_back(inner);
        superfaces_[inner].push_back(outer);
      }
    }
  }
  for (auto& s : superfaces_) std::sort(s.begin(), s.end());
}

const Face& FaceLattice::face(std::size_t id) const {
  if (id >= faces_.size()) {
    throw ToricError(ErrorKind::UnknownFace, "face id " + std::to_string(id) + " out of range");
  }
  return faces_[id];
}

std::vector<BigInt> FaceLattice::f_vector() const {
  std::vector<BigInt> f;
  f.reserve(by_dim_.size());
  for (const auto& ids : by_dim_) f.emplace_back(ids.size());
  return f;
}

const std::vector<std::size_t>& FaceLattice::faces_of_dim(std::size_t d) const {
  static const std::vector<std::size_t> none;
  return d < by_dim_.size() ? by_dim_[d] : none;
}

bool FaceLattice::contains(std::size_t outer, std::size_t inner) const {
  const auto& a = face(outer).vertex_ids;
  const auto& b = face(inner).vertex_ids;
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

std::optional<std::size_t> FaceLattice::find_by_tight_facets(
    const std::vector<std::size_t>& tight) const {
  auto it = by_tight_.find(tight);
  if (it == by_tight_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FaceLattice::find_by_vertices(
    const std::vector<std::size_t>& vertex_ids) const {
  auto it = by_vertices_.find(vertex_ids);
  if (it == by_vertices_.end()) return std::nullopt;
  return it->second;
}

std::size_t FaceLattice::vertex_face(std::size_t vertex_id) const {
  if (vertex_id >= vertex_faces_.size()) {
    throw ToricError(ErrorKind::UnknownFace, "no vertex " + std::to_string(vertex_id));
  }
  return vertex_faces_[vertex_id];
}

// ---------------------------------------------------------------------------

Polytope Polytope::from_vertices(std::span<const LatticeVector> points) {
  if (points.empty()) throw ToricError(ErrorKind::Empty, "no points given");
  return from_vertices(points.front().size(), points);
}

Polytope Polytope::from_vertices(std::size_t dim, std::span<const LatticeVector> points) {
  if (points.empty()) throw ToricError(ErrorKind::Empty, "no points given");
  std::vector<LatticeVector> pts;
  std::set<LatticeVector> seen;
  for (const auto& p : points) {
    if (p.size() != dim) {
      throw ToricError(ErrorKind::DimensionMismatch,
                       "point " + to_string(p) + " has " + std::to_string(p.size()) +
                           " coordinates, expected " + std::to_string(dim));
    }
    if (seen.insert(p).second) pts.push_back(p);
  }
  const long affine = affine_dimension(pts);
  if (affine < static_cast<long>(dim)) {
    throw ToricError(ErrorKind::LowDimensional, "affine hull has dimension " +
                                                    std::to_string(affine) + " < " +
                                                    std::to_string(dim));
  }

  std::vector<Halfspace> facets = enumerate_facets(dim, pts);

  // A point is a vertex iff the normals of the facets through it span R^dim.
  std::vector<LatticeVector> vertices;
  for (const auto& p : pts) {
    std::vector<std::vector<BigInt>> normals;
    for (const auto& h : facets) {
      if (h.is_tight(p)) normals.push_back(h.normal);
    }
    if (rank(std::move(normals)) == dim) vertices.push_back(p);
  }

  std::vector<std::vector<std::size_t>> facet_vertices;
  for (const auto& h : facets) {
    std::vector<std::size_t> ids;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (h.is_tight(vertices[v])) ids.push_back(v);
    }
    facet_vertices.push_back(std::move(ids));
  }
  {
    std::vector<std::size_t> order(facets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return facet_vertices[a] < facet_vertices[b];
    });
    std::vector<Halfspace> sorted_facets;
    std::vector<std::vector<std::size_t>> sorted_vertices;
    for (std::size_t i : order) {
      sorted_facets.push_back(std::move(facets[i]));
      sorted_vertices.push_back(std::move(facet_vertices[i]));
    }
    facets = std::move(sorted_facets);
    facet_vertices = std::move(sorted_vertices);
  }

  // Close the facet vertex sets under intersection.
  std::set<std::vector<std::size_t>> known(facet_vertices.begin(), facet_vertices.end());
  std::deque<std::vector<std::size_t>> queue(facet_vertices.begin(), facet_vertices.end());
  while (!queue.empty()) {
    auto current = std::move(queue.front());
    queue.pop_front();
    for (const auto& fv : facet_vertices) {
      auto meet = intersect(current, fv);
      if (meet.empty() || meet == current) continue;
      if (known.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  std::vector<std::size_t> all(vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  known.insert(all);
  // In dimension 1 the facets are already the vertices; in dimension 0 there are no facets.
  for (std::size_t v = 0; v < vertices.size(); ++v) known.insert({v});

  std::vector<Face> faces;
  faces.reserve(known.size());
  for (const auto& ids : known) {
    Face f;
    f.vertex_ids = ids;
    for (std::size_t i = 0; i < facet_vertices.size(); ++i) {
      const auto& fv = facet_vertices[i];
      if (std::includes(fv.begin(), fv.end(), ids.begin(), ids.end())) f.tight_facets.push_back(i);
    }
    std::vector<LatticeVector> coords;
    for (std::size_t v : ids) coords.push_back(vertices[v]);
    f.dim = static_cast<std::size_t>(affine_dimension(coords));
    faces.push_back(std::move(f));
  }
  auto lattice = std::make_shared<const FaceLattice>(std::move(faces), dim);
  return Polytope(dim, std::move(vertices), std::move(facets), std::move(lattice));
}

bool Polytope::contains(const LatticeVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Halfspace& h) { return h.contains(x); });
}

bool is_simple(const Polytope& p) {
  const auto& lattice = p.faces();
  for (std::size_t id : lattice.faces_of_dim(0)) {
    if (lattice.face(id).tight_facets.size() != p.dim()) return false;
  }
  return true;
}

void require_simple(const Polytope& p) {
  const auto& lattice = p.faces();
  for (std::size_t id : lattice.faces_of_dim(0)) {
    const Face& f = lattice.face(id);
    if (f.tight_facets.size() != p.dim()) {
      throw ToricError(ErrorKind::NotSimple,
                       "vertex " + to_string(p.vertices()[f.vertex_ids.front()]) + " lies on " +
                           std::to_string(f.tight_facets.size()) + " facets, expected " +
                           std::to_string(p.dim()));
    }
  }
}

Polytope dilate(const Polytope& p, const BigInt& k) {
  if (k < 1) {
    throw ToricError(ErrorKind::NonPositiveDilation, "dilation factor " + k.str() + " < 1");
  }
  auto vertices = p.vertices_;
  for (auto& v : vertices) {
    for (auto& x : v) x *= k;
  }
  auto facets = p.facets_;
  for (auto& h : facets) h.offset *= k;
  return Polytope(p.dim_, std::move(vertices), std::move(facets), p.lattice_);
}

Polytope translate(const Polytope& p, const LatticeVector& shift) {
  if (shift.size() != p.dim_) {
    throw ToricError(ErrorKind::DimensionMismatch, "shift has wrong length");
  }
  auto vertices = p.vertices_;
  for (auto& v : vertices) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift[i];
  }
  auto facets = p.facets_;
  for (auto& h : facets) h.offset += h.evaluate(shift);
  return Polytope(p.dim_, std::move(vertices), std::move(facets), p.lattice_);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) {
    throw ToricError(ErrorKind::DimensionMismatch, "cannot add polytopes of dimensions " +
                                                       std::to_string(p.dim()) + " and " +
                                                       std::to_string(q.dim()));
  }
  std::vector<LatticeVector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      LatticeVector s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  }
  return Polytope::from_vertices(p.dim(), sums);
}

std::optional<std::size_t> smallest_face(const Polytope& p, const RationalVector& x) {
  if (x.size() != p.dim()) {
    throw ToricError(ErrorKind::DimensionMismatch, "query point has wrong length");
  }
  std::vector<std::size_t> tight;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const Halfspace& h = p.facets()[i];
    const Rational v = h.evaluate(x);
    if (v < Rational(h.offset)) return std::nullopt;
    if (v == Rational(h.offset)) tight.push_back(i);
  }
  return p.faces().find_by_tight_facets(tight);
}

std::optional<std::size_t> smallest_face(const Polytope& p, const LatticeVector& x) {
  RationalVector q(x.begin(), x.end());
  return smallest_face(p, q);
}

}  // namespace toric
