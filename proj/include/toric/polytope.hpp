#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

using LatticeVector = std::vector<BigInt>;
using RationalVector = std::vector<Rational>;

std::string to_string(const LatticeVector& v);

/// The inequality <normal, x> >= offset. Facet normals are primitive and inward.
struct Halfspace {
  LatticeVector normal;
  BigInt offset;

  BigInt evaluate(const LatticeVector& x) const;
  Rational evaluate(const RationalVector& x) const;
  bool contains(const LatticeVector& x) const { return evaluate(x) >= offset; }
  bool is_tight(const LatticeVector& x) const { return evaluate(x) == offset; }

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

struct Face {
  std::vector<std::size_t> vertex_ids;    // sorted
  std::vector<std::size_t> tight_facets;  // sorted
  std::size_t dim = 0;
};

/// All nonempty faces of a polytope, sorted by dimension and then by vertex set.
/// The last face is the polytope itself.
class FaceLattice {
 public:
  FaceLattice() = default;
  FaceLattice(std::vector<Face> faces, std::size_t ambient_dim);

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(std::size_t id) const;
  std::size_t size() const { return faces_.size(); }
  std::size_t full_face() const { return faces_.size() - 1; }

  /// f_0, ..., f_n.
  std::vector<BigInt> f_vector() const;
  /// Ids of faces of dimension d, in lattice order.
  const std::vector<std::size_t>& faces_of_dim(std::size_t d) const;

  /// True iff face `inner` is contained in face `outer`.
  bool contains(std::size_t outer, std::size_t inner) const;
  /// Every face contained in `id`, including `id` itself.
  const std::vector<std::size_t>& subfaces(std::size_t id) const { return subfaces_.at(id); }
  /// Every face containing `id`, including `id` itself.
  const std::vector<std::size_t>& superfaces(std::size_t id) const { return superfaces_.at(id); }

  std::optional<std::size_t> find_by_tight_facets(const std::vector<std::size_t>& tight) const;
  std::optional<std::size_t> find_by_vertices(const std::vector<std::size_t>& vertex_ids) const;
  std::size_t vertex_face(std::size_t vertex_id) const;

 private:
  std::vector<Face> faces_;
  std::vector<std::vector<std::size_t>> by_dim_;
  std::vector<std::vector<std::size_t>> subfaces_;
  std::vector<std::vector<std::size_t>> superfaces_;
  std::map<std::vector<std::size_t>, std::size_t> by_tight_;
  std::map<std::vector<std::size_t>, std::size_t> by_vertices_;
  std::vector<std::size_t> vertex_faces_;
};

/// Full-dimensional convex lattice polytope. Immutable; copies share the face lattice.
class Polytope {
 public:
  /// Convex hull of `points` in R^dim. Throws Empty, LowDimensional, DimensionMismatch.
  static Polytope from_vertices(std::size_t dim, std::span<const LatticeVector> points);
  static Polytope from_vertices(std::span<const LatticeVector> points);

  std::size_t dim() const { return dim_; }
  const std::vector<LatticeVector>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const FaceLattice& faces() const { return *lattice_; }

  bool contains(const LatticeVector& x) const;

  friend Polytope dilate(const Polytope& p, const BigInt& k);
  friend Polytope translate(const Polytope& p, const LatticeVector& shift);

 private:
  Polytope(std::size_t dim, std::vector<LatticeVector> vertices, std::vector<Halfspace> facets,
           std::shared_ptr<const FaceLattice> lattice)
      : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)),
        lattice_(std::move(lattice)) {}

  std::size_t dim_ = 0;
  std::vector<LatticeVector> vertices_;
  std::vector<Halfspace> facets_;
  std::shared_ptr<const FaceLattice> lattice_;
};

bool is_simple(const Polytope& p);
/// Throws NotSimple naming the first vertex that lies on more than dim facets.
void require_simple(const Polytope& p);

/// k * P with the same vertex and facet indexing. Throws NonPositiveDilation for k < 1.
Polytope dilate(const Polytope& p, const BigInt& k);
Polytope translate(const Polytope& p, const LatticeVector& shift);
/// Convex hull of all pairwise vertex sums. Throws DimensionMismatch.
Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// The face whose relative interior contains x, or nullopt if x lies outside P.
std::optional<std::size_t> smallest_face(const Polytope& p, const RationalVector& x);
std::optional<std::size_t> smallest_face(const Polytope& p, const LatticeVector& x);

/// Affine dimension of a point set (-1 for the empty set).
long affine_dimension(std::span<const LatticeVector> points);

/// Primitive normal orthogonal to the n-1 difference vectors of n points, or nullopt if the
/// points are affinely dependent.
std::optional<LatticeVector> hyperplane_normal(std::span<const LatticeVector> points);

}  // namespace toric
