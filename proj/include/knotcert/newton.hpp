// Newton polygons of two-variable polynomials: support, convex hull, and the
// vertex list (hull corners only; points interior to an edge are not
// vertices).
#ifndef KNOTCERT_NEWTON_HPP
#define KNOTCERT_NEWTON_HPP

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "knotcert/poly.hpp"

namespace knotcert {

struct LatticePoint {
  long long x = 0, y = 0;
  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;
};

struct NewtonPolygon {
  std::vector<LatticePoint> support;   // sorted ascending
  std::vector<LatticePoint> vertices;  // hull corners, counter-clockwise

  bool has_vertex(long long x, long long y) const {
    return std::find(vertices.begin(), vertices.end(),
                     LatticePoint{x, y}) != vertices.end();
  }
  long long vertex_coordinate_gcd() const {
    long long g = 0;
    for (const auto& v : vertices) {
      g = std::gcd(g, std::abs(v.x));
      g = std::gcd(g, std::abs(v.y));
    }
    return g;
  }
};

namespace detail {

inline long long cross(const LatticePoint& o, const LatticePoint& a,
                       const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew monotone chain with strict turns; collinear boundary points are
// dropped, so the output is exactly the corner set, counter-clockwise from
// the lexicographically smallest point.
inline std::vector<LatticePoint> hull_vertices(
    std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<LatticePoint> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace detail

template <class Ring>
NewtonPolygon newton_polygon(const MultiPoly<Ring>& f) {
  if (f.is_zero()) throw Error("newton_polygon: zero polynomial");
  if (f.vars().size() != 2)
    throw Error("newton_polygon: expected exactly two variables");
  NewtonPolygon np;
  for (const auto& [m, c] : f.terms())
    np.support.push_back({m.exps[0], m.exps[1]});
  std::sort(np.support.begin(), np.support.end());
  np.vertices = detail::hull_vertices(np.support);
  return np;
}

}  // namespace knotcert

#endif  // KNOTCERT_NEWTON_HPP
