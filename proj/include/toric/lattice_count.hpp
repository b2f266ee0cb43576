#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toric/numeric.hpp"
#include "toric/polytope.hpp"

namespace toric {

struct ScanOptions {
  // Number of worker threads splitting the range of the first coordinate.
  unsigned threads = 1;
};

struct FaceCount {
  BigInt l;       // lattice points in the closed face
  BigInt l_star;  // lattice points in the relative interior
};

struct FaceCountTable {
  std::vector<FaceCount> per_face;  // indexed by face id
  // closed_by_codim[j] = sum of l(F) over faces of dimension n - j.
  std::vector<BigInt> closed_by_codim;
  // interior_by_dim[s] = sum of l*(F) over faces of dimension s.
  std::vector<BigInt> interior_by_dim;
};

/// Lattice points of the whole polytope. Faster than count_table when per-face data is not needed.
BigInt count_points(const Polytope& p, const ScanOptions& opts = {});

/// Lattice points satisfying every inequality, scanning the box [lo, hi].
BigInt count_points(std::size_t dim, std::span<const Halfspace> inequalities,
                    const LatticeVector& lo, const LatticeVector& hi,
                    const ScanOptions& opts = {});

FaceCountTable count_table(const Polytope& p, const ScanOptions& opts = {});

/// l(F). Throws UnknownFace.
BigInt count(const Polytope& p, std::size_t face_id);
/// l*(F). Throws UnknownFace.
BigInt count_interior(const Polytope& p, std::size_t face_id);

/// Euclidean volume; the unit cube has volume 1.
Rational volume(const Polytope& p);

}  // namespace toric
