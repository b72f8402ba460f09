#pragma once

#include "rectpoint/geometry.hpp"

namespace rectpoint {

template <class S>
struct Triangle {
  Point<S> u, v, w;
};

// Projective weights relative to a triangle; (x, y, z) != (0, 0, 0) and
// equality is up to a common nonzero scale.
template <class S>
struct Barycentrics {
  S x, y, z;
};

template <class S>
void require_proper(const Triangle<S>& t) {
  if (points_coincide(t.u, t.v) || points_coincide(t.v, t.w) || points_coincide(t.u, t.w) ||
      are_collinear(t.u, t.v, t.w)) {
    throw construction_error("degenerate triangle");
  }
}

template <class S>
Point<S> centroid(const Triangle<S>& t) {
  const S three = scalar_traits<S>::constant(t.u.x, 3);
  return {(t.u.x + t.v.x + t.w.x) / three, (t.u.y + t.v.y + t.w.y) / three};
}

template <class S>
Point<S> circumcenter(const Triangle<S>& t) {
  require_proper(t);
  return intersect_lines(perpendicular_bisector(t.u, t.v), perpendicular_bisector(t.u, t.w));
}

// H = u + v + w - 2*O; both altitude perpendicularity conditions follow and
// are exercised by the symbolic property tests.
template <class S>
Point<S> orthocenter(const Triangle<S>& t) {
  const S two = scalar_traits<S>::constant(t.u.x, 2);
  const Point<S> o = circumcenter(t);
  return {t.u.x + t.v.x + t.w.x - two * o.x, t.u.y + t.v.y + t.w.y - two * o.y};
}

template <class S>
Point<S> nine_point_center(const Triangle<S>& t) {
  return midpoint(circumcenter(t), orthocenter(t));
}

template <class S>
S squared_distance(const Point<S>& p, const Point<S>& q) {
  return (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
}

// Squared-side-length weighted vertex average; equals the point with
// barycentrics (lu : lv : lw), the isogonal conjugate of the centroid.
// No square root ever enters: everything stays in the base field.
template <class S>
Point<S> symmedian_point(const Triangle<S>& t) {
  require_proper(t);
  const S lu = squared_distance(t.v, t.w);
  const S lv = squared_distance(t.u, t.w);
  const S lw = squared_distance(t.u, t.v);
  const S sum = lu + lv + lw;
  return {(lu * t.u.x + lv * t.v.x + lw * t.w.x) / sum,
          (lu * t.u.y + lv * t.v.y + lw * t.w.y) / sum};
}

template <class S>
Line<S> euler_line(const Triangle<S>& t) {
  const Point<S> o = circumcenter(t);
  const Point<S> g = centroid(t);
  if (points_coincide(o, g)) throw construction_error("euler line undefined (equilateral)");
  return line_through(o, g);
}

template <class S>
Line<S> brocard_axis(const Triangle<S>& t) {
  const Point<S> o = circumcenter(t);
  const Point<S> k = symmedian_point(t);
  if (points_coincide(o, k)) throw construction_error("brocard axis undefined");
  return line_through(o, k);
}

// Signed-area weights (each is twice a signed area; the common factor
// cancels projectively).
template <class S>
Barycentrics<S> barycentrics_of(const Point<S>& p, const Triangle<S>& t) {
  require_proper(t);
  auto area2 = [](const Point<S>& a, const Point<S>& b, const Point<S>& c) -> S {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  };
  return {area2(p, t.v, t.w), area2(t.u, p, t.w), area2(t.u, t.v, p)};
}

template <class S>
Point<S> point_from_barycentrics(const Barycentrics<S>& b, const Triangle<S>& t) {
  S sum = b.x + b.y + b.z;
  if (effectively_zero<S>(sum, detail::magnitude_scale<S>(b.x, b.y, b.z))) {
    throw construction_error("point at infinity (barycentric weights sum to zero)");
  }
  return {(b.x * t.u.x + b.y * t.v.x + b.z * t.w.x) / sum,
          (b.x * t.u.y + b.y * t.v.y + b.z * t.w.y) / sum};
}

// (x : y : z) -> (lu*y*z : lv*x*z : lw*x*y) with l* the squared side
// lengths opposite each vertex. Involution off the side lines and the
// circumcircle.
template <class S>
Point<S> isogonal_conjugate_in_triangle(const Point<S>& p, const Triangle<S>& t) {
  const Barycentrics<S> b = barycentrics_of(p, t);
  const double sc = detail::magnitude_scale<S>(b.x, b.y, b.z);
  if (effectively_zero<S>(b.x, sc) || effectively_zero<S>(b.y, sc) ||
      effectively_zero<S>(b.z, sc)) {
    throw construction_error("point on a side line");
  }
  const S lu = squared_distance(t.v, t.w);
  const S lv = squared_distance(t.u, t.w);
  const S lw = squared_distance(t.u, t.v);
  Barycentrics<S> conj{lu * b.y * b.z, lv * b.x * b.z, lw * b.x * b.y};
  S sum = conj.x + conj.y + conj.z;
  if (effectively_zero<S>(sum, detail::magnitude_scale<S>(conj.x, conj.y, conj.z))) {
    throw construction_error("point on the circumcircle (conjugate at infinity)");
  }
  return point_from_barycentrics(conj, t);
}

}  // namespace rectpoint
