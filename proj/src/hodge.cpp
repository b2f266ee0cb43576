#include "toric/hodge.hpp"

#include "toric/bott.hpp"
#include "toric/error.hpp"

namespace toric {

Hypersurface::Hypersurface(Polytope poly) : poly_(std::move(poly)), simple_(is_simple(poly_)) {
  for (std::size_t k = 1; k <= std::max<std::size_t>(poly_.dim(), 1); ++k) {
    tables_.push_back(count_table(dilate(poly_, k)));
  }
}

void Hypersurface::require_simple_polytope() const {
  if (!simple_) require_simple(poly_);
}

BigInt Hypersurface::interior_of_dilate(std::size_t face_id, long k) const {
  poly_.faces().face(face_id);
  if (k < 1) throw ToricError(ErrorKind::NonPositiveDilation, "dilation " + std::to_string(k));
  if (static_cast<std::size_t>(k) <= tables_.size()) return table(k).per_face[face_id].l_star;
  return count_table(dilate(poly_, k)).per_face[face_id].l_star;
}

BigInt Hypersurface::phi(std::size_t face_id, long i) const {
  const long d = static_cast<long>(poly_.faces().face(face_id).dim);
  BigInt sum = 0;
  for (long k = 1; k <= i; ++k) {
    sum += sign_pow(i - k) * binomial(d + 1, i - k) * interior_of_dilate(face_id, k);
  }
  return sum;
}

BigInt Hypersurface::euler_ep(long p) const {
  require_simple_polytope();
  const long n = static_cast<long>(poly_.dim());
  if (p < 0 || p > n - 1) {
    throw ToricError(ErrorKind::OutOfRange, "e^p needs 0 <= p <= n-1");
  }
  const auto f = poly_.faces().f_vector();
  BigInt ambient = 0;
  for (long k = 0; k <= n; ++k) ambient += sign_pow(k) * binomial(k, p + 1) * f[k];
  ambient *= sign_pow(p + 1);

  BigInt faces = 0;
  const auto& lattice = poly_.faces();
  for (std::size_t id = 0; id < lattice.size(); ++id) {
    const long d = static_cast<long>(lattice.face(id).dim);
    faces += sign_pow(d) * phi(id, d - p);
  }
  return ambient - faces;
}

ChiLog Hypersurface::chi_log_routes(long q) const {
  require_simple_polytope();
  const long n = static_cast<long>(poly_.dim());
  if (q < 0 || q > n) throw ToricError(ErrorKind::OutOfRange, "chi_log needs 0 <= q <= n");
  if (q == 0) return ChiLog{1, 1};

  auto chi = [&](long form, long dilation) { return twisted_by_interiors(table(dilation), form); };
  ChiLog out;
  out.telescoped = chi(q, 1);
  for (long k = 1; k <= n - q; ++k) {
    out.telescoped += sign_pow(k) * (chi(q + k, k + 1) - chi(q + k, k));
  }

  const auto& lattice = poly_.faces();
  BigInt sum = 0;
  for (std::size_t id = 0; id < lattice.size(); ++id) {
    const long d = static_cast<long>(lattice.face(id).dim);
    sum += sign_pow(d) * phi(id, d - q + 1);
  }
  out.by_phi = sign_pow(q) * sum;
  return out;
}

BigInt Hypersurface::chi_log(long q) const {
  const auto routes = chi_log_routes(q);
  if (routes.telescoped != routes.by_phi) {
    throw ToricError(ErrorKind::RouteMismatch,
                     "chi(Omega^" + std::to_string(q) + "(log D)): telescoped " +
                         to_string(routes.telescoped) + " vs phi form " + to_string(routes.by_phi));
  }
  return routes.telescoped;
}

BigInt Hypersurface::chi_log_printed(long q) const {
  const long n = static_cast<long>(poly_.dim());
  if (q < 0 || q > n) throw ToricError(ErrorKind::OutOfRange, "chi_log needs 0 <= q <= n");
  const auto& lattice = poly_.faces();
  BigInt sum = 0;
  for (long k = 1; k <= n - q; ++k) {
    BigInt inner = 0;
    for (std::size_t id = 0; id < lattice.size(); ++id) {
      const long d = static_cast<long>(lattice.face(id).dim);
      inner += binomial(d + 1, q + k) * interior_of_dilate(id, k);
    }
    sum += sign_pow(k + 1) * inner;
  }
  return sum;
}

namespace {

HodgeVector hodge_sum(const Hypersurface& h, bool with_face_sign) {
  const auto& poly = h.polytope();
  const long n = static_cast<long>(poly.dim());
  if (n < 2) throw ToricError(ErrorKind::OutOfRange, "primitive Hodge numbers need n >= 2");
  const auto& lattice = poly.faces();
  HodgeVector v;
  v.n = poly.dim();
  for (long p = 0; p <= n - 1; ++p) {
    BigInt sum = 0;
    for (std::size_t id = 0; id < lattice.size(); ++id) {
      const long d = static_cast<long>(lattice.face(id).dim);
      sum += (with_face_sign ? sign_pow(d) : 1) * h.phi(id, d - p);
    }
    v.values.push_back(sign_pow(n) * sum);
  }
  return v;
}

}  // namespace

HodgeVector Hypersurface::primitive_hodge() const {
  require_simple_polytope();
  const long n = static_cast<long>(poly_.dim());
  if (n < 2) throw ToricError(ErrorKind::OutOfRange, "primitive Hodge numbers need n >= 2");
  // e^p(D) = sum_q (-1)^(p+q) h^{p,q}(D). Off the middle row h^{p,q}(D) is ambient: h^{p,p}(P)
  // below it and h^{p+1,p+1}(P) above it; the middle row adds h^{p,p}(P) when 2p = n-1.
  const auto f = poly_.faces().f_vector();
  auto ambient = [&](long p) { return untwisted_by_faces(f, p); };
  HodgeVector v;
  v.n = poly_.dim();
  for (long p = 0; p <= n - 1; ++p) {
    BigInt rest;
    if (2 * p < n - 1) rest = ambient(p);
    else if (2 * p > n - 1) rest = ambient(p + 1);
    else rest = sign_pow(n - 1) * ambient(p);
    v.values.push_back(sign_pow(n - 1) * (euler_ep(p) - rest));
  }
  const std::size_t m = v.values.size();
  for (std::size_t p = 0; p < m; ++p) {
    if (v.values[p] < 0) {
      throw ToricError(ErrorKind::NegativeEntry, "h_0^{" + std::to_string(p) + "," +
                                                     std::to_string(m - 1 - p) +
                                                     "} = " + to_string(v.values[p]));
    }
    if (v.values[p] != v.values[m - 1 - p]) {
      throw ToricError(ErrorKind::HodgeAsymmetric,
                       "h_0^{" + std::to_string(p) + "," + std::to_string(m - 1 - p) + "} = " +
                           to_string(v.values[p]) + " but mirrored entry is " +
                           to_string(v.values[m - 1 - p]));
    }
  }
  return v;
}

HodgeVector Hypersurface::primitive_hodge_phi_sum() const {
  require_simple_polytope();
  return hodge_sum(*this, true);
}

HodgeVector Hypersurface::primitive_hodge_printed() const {
  require_simple_polytope();
  return hodge_sum(*this, false);
}

BigInt phi(const Polytope& poly, std::size_t face_id, long i) {
  poly.faces().face(face_id);
  if (i <= 0) return 0;
  return Hypersurface(poly).phi(face_id, i);
}

BigInt euler_ep(const Polytope& poly, long p) {
  require_simple(poly);
  return Hypersurface(poly).euler_ep(p);
}

BigInt chi_log(const Polytope& poly, long q) {
  require_simple(poly);
  return Hypersurface(poly).chi_log(q);
}

HodgeVector primitive_hodge(const Polytope& poly) {
  require_simple(poly);
  return Hypersurface(poly).primitive_hodge();
}

}  // namespace toric
