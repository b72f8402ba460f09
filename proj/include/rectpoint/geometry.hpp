#pragma once

#include <cmath>
#include <initializer_list>

#include "rectpoint/errors.hpp"
#include "rectpoint/scalar.hpp"

namespace rectpoint {

template <class S>
struct Point {
  S x, y;
};

// u*x + v*y + w = 0 with (u, v) != (0, 0). Equality is projective: scaling
// all three coefficients by a nonzero scalar names the same line.
template <class S>
struct Line {
  S u, v, w;
};

// x^2 + y^2 + D*x + E*y + F = 0.
template <class S>
struct Circle {
  S D, E, F;
};

namespace detail {

template <class S, class... Ts>
double magnitude_scale(const Ts&... terms) {
  if constexpr (is_float_scalar_v<S>) {
    double s = 1.0;
    ((s = std::max(s, std::abs(terms))), ...);
    return s;
  } else {
    return 1.0;
  }
}

}  // namespace detail

template <class S>
bool points_coincide(const Point<S>& p, const Point<S>& q) {
  const double scale = detail::magnitude_scale<S>(p.x, q.x, p.y, q.y);
  return effectively_zero<S>(p.x - q.x, scale) && effectively_zero<S>(p.y - q.y, scale);
}

template <class S>
Point<S> midpoint(const Point<S>& p, const Point<S>& q) {
  const S two = scalar_traits<S>::constant(p.x, 2);
  return {(p.x + q.x) / two, (p.y + q.y) / two};
}

// reflect_in_point(p, c) = 2c - p, so midpoint(p, reflect_in_point(p, c)) = c.
template <class S>
Point<S> reflect_in_point(const Point<S>& p, const Point<S>& center) {
  const S two = scalar_traits<S>::constant(p.x, 2);
  return {two * center.x - p.x, two * center.y - p.y};
}

template <class S>
Line<S> line_through(const Point<S>& p, const Point<S>& q) {
  if (points_coincide(p, q)) throw construction_error("coincident points");
  S u = q.y - p.y;
  S v = p.x - q.x;
  S w = -(u * p.x + v * p.y);
  return {std::move(u), std::move(v), std::move(w)};
}

// Coefficients are doubled so rational inputs stay fraction-free:
// 2*dx*x + 2*dy*y - (|q|^2 - |p|^2) = 0.
template <class S>
Line<S> perpendicular_bisector(const Point<S>& p, const Point<S>& q) {
  if (points_coincide(p, q)) throw construction_error("coincident points");
  const S two = scalar_traits<S>::constant(p.x, 2);
  S u = two * (q.x - p.x);
  S v = two * (q.y - p.y);
  S w = p.x * p.x + p.y * p.y - q.x * q.x - q.y * q.y;
  return {std::move(u), std::move(v), std::move(w)};
}

template <class S>
Point<S> intersect_lines(const Line<S>& l1, const Line<S>& l2) {
  S det = l1.u * l2.v - l2.u * l1.v;
  if (effectively_zero<S>(det, detail::magnitude_scale<S>(l1.u * l2.v, l2.u * l1.v))) {
    throw construction_error("no unique intersection (parallel or identical lines)");
  }
  S x = (l1.v * l2.w - l2.v * l1.w) / det;
  S y = (l1.w * l2.u - l2.w * l1.u) / det;
  return {std::move(x), std::move(y)};
}

// --- exact predicates -------------------------------------------------

template <class S>
Residual<S> on_line_residual(const Point<S>& p, const Line<S>& l) {
  S r = l.u * p.x + l.v * p.y + l.w;
  return {std::move(r), detail::magnitude_scale<S>(l.u * p.x, l.v * p.y, l.w)};
}

template <class S>
bool is_on_line(const Point<S>& p, const Line<S>& l) {
  return residual_zero(on_line_residual(p, l));
}

// Twice the signed area of pqr; zero iff collinear.
template <class S>
Residual<S> collinearity_residual(const Point<S>& p, const Point<S>& q, const Point<S>& r) {
  S t1 = (q.x - p.x) * (r.y - p.y);
  S t2 = (q.y - p.y) * (r.x - p.x);
  return {t1 - t2, detail::magnitude_scale<S>(t1, t2)};
}

template <class S>
bool are_collinear(const Point<S>& p, const Point<S>& q, const Point<S>& r) {
  return residual_zero(collinearity_residual(p, q, r));
}

template <class S>
Residual<S> parallelism_residual(const Line<S>& l1, const Line<S>& l2) {
  S t1 = l1.u * l2.v;
  S t2 = l2.u * l1.v;
  return {t1 - t2, detail::magnitude_scale<S>(t1, t2)};
}

template <class S>
bool are_parallel(const Line<S>& l1, const Line<S>& l2) {
  return residual_zero(parallelism_residual(l1, l2));
}

template <class S>
bool lines_equal(const Line<S>& l1, const Line<S>& l2) {
  auto cross = [](const S& a, const S& b, const S& c, const S& d) {
    S t1 = a * d;
    S t2 = b * c;
    return Residual<S>{t1 - t2, detail::magnitude_scale<S>(t1, t2)};
  };
  return residual_zero(cross(l1.u, l2.u, l1.v, l2.v)) &&
         residual_zero(cross(l1.u, l2.u, l1.w, l2.w)) &&
         residual_zero(cross(l1.v, l2.v, l1.w, l2.w));
}

// --- projections and reflections ---------------------------------------

template <class S>
Point<S> project_onto_line(const Point<S>& p, const Line<S>& l) {
  S n2 = l.u * l.u + l.v * l.v;
  S t = (l.u * p.x + l.v * p.y + l.w) / n2;
  return {p.x - l.u * t, p.y - l.v * t};
}

template <class S>
Point<S> reflect_over_line(const Point<S>& p, const Line<S>& l) {
  const S two = scalar_traits<S>::constant(p.x, 2);
  S n2 = l.u * l.u + l.v * l.v;
  S t = (l.u * p.x + l.v * p.y + l.w) / n2;
  return {p.x - two * l.u * t, p.y - two * l.v * t};
}

// --- circles ------------------------------------------------------------

template <class S>
Residual<S> on_circle_residual(const Point<S>& p, const Circle<S>& c) {
  S t1 = p.x * p.x + p.y * p.y;
  S t2 = c.D * p.x;
  S t3 = c.E * p.y;
  return {t1 + t2 + t3 + c.F, detail::magnitude_scale<S>(t1, t2, t3, c.F)};
}

template <class S>
bool is_on_circle(const Point<S>& p, const Circle<S>& c) {
  return residual_zero(on_circle_residual(p, c));
}

template <class S>
Circle<S> circle_through(const Point<S>& p, const Point<S>& q, const Point<S>& r) {
  // subtracting the circle equation pairwise leaves a 2x2 linear system in D, E
  S det_t1 = (p.x - q.x) * (q.y - r.y);
  S det_t2 = (p.y - q.y) * (q.x - r.x);
  S det = det_t1 - det_t2;
  if (effectively_zero<S>(det, detail::magnitude_scale<S>(det_t1, det_t2))) {
    throw construction_error("collinear or coincident points");
  }
  S rp = q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y;
  S rq = r.x * r.x + r.y * r.y - q.x * q.x - q.y * q.y;
  S D = (rp * (q.y - r.y) - rq * (p.y - q.y)) / det;
  S E = ((p.x - q.x) * rq - (q.x - r.x) * rp) / det;
  S F = -(p.x * p.x + p.y * p.y + D * p.x + E * p.y);
  return {std::move(D), std::move(E), std::move(F)};
}

template <class S>
Point<S> circle_center(const Circle<S>& c) {
  const S two = scalar_traits<S>::constant(c.D, 2);
  return {-c.D / two, -c.E / two};
}

// The unique second common point of two circles that already share p.
// Intersects the radical line (D1-D2)x + (E1-E2)y + (F1-F2) = 0, which
// passes through p, with c1; the quadratic along it has p as one root, so
// the other root is rational whenever the inputs are.
template <class S>
Point<S> circles_second_intersection(const Circle<S>& c1, const Circle<S>& c2,
                                     const Point<S>& p) {
  if (!is_on_circle(p, c1) || !is_on_circle(p, c2)) {
    throw std::invalid_argument("circles_second_intersection: p must lie on both circles");
  }
  S u = c1.D - c2.D;
  S v = c1.E - c2.E;
  const double uv_scale = detail::magnitude_scale<S>(c1.D, c2.D, c1.E, c2.E);
  if (effectively_zero<S>(u, uv_scale) && effectively_zero<S>(v, uv_scale)) {
    throw construction_error("identical circles");
  }
  // parameterize the radical line as p + t*(-v, u); substituting into c1
  // gives t * (t*(u^2+v^2) + B) = 0
  const S two = scalar_traits<S>::constant(u, 2);
  S B_t1 = two * (p.y * u - p.x * v);
  S B_t2 = c1.E * u;
  S B_t3 = c1.D * v;
  S B = B_t1 + B_t2 - B_t3;
  if (effectively_zero<S>(B, detail::magnitude_scale<S>(B_t1, B_t2, B_t3))) {
    throw construction_error("tangent circles");
  }
  S t = -B / (u * u + v * v);
  return {p.x - v * t, p.y + u * t};
}

// --- angle symmetry -----------------------------------------------------

// Treating the plane as complex numbers with origin at v: the undirected
// line pairs (v->x, v->y) and (v->s1, v->s2) share an angle-bisector pair
// iff Im((x-v)(y-v) * conj((s1-v)(s2-v))) = 0. Sign flips of any direction
// cancel in the product, so this is well-defined for undirected lines.
template <class S>
Residual<S> isogonal_residual(const Point<S>& v, const Point<S>& s1, const Point<S>& s2,
                              const Point<S>& x, const Point<S>& y) {
  auto diff = [&](const Point<S>& t) { return Point<S>{t.x - v.x, t.y - v.y}; };
  auto cmul = [](const Point<S>& z1, const Point<S>& z2) {
    return Point<S>{z1.x * z2.x - z1.y * z2.y, z1.x * z2.y + z1.y * z2.x};
  };
  const Point<S> u = diff(s1), w = diff(s2), pp = diff(x), qq = diff(y);
  for (const Point<S>* z : {&u, &w, &pp, &qq}) {
    const double sc = detail::magnitude_scale<S>(v.x, v.y, s1.x, s1.y, x.x, y.x);
    if (effectively_zero<S>(z->x, sc) && effectively_zero<S>(z->y, sc)) {
      throw construction_error("zero-length direction");
    }
  }
  const Point<S> m = cmul(pp, qq);
  const Point<S> n = cmul(u, w);
  S t1 = m.y * n.x;
  S t2 = m.x * n.y;
  return {t1 - t2, detail::magnitude_scale<S>(t1, t2)};
}

template <class S>
bool is_isogonal_pair(const Point<S>& v, const Point<S>& s1, const Point<S>& s2,
                      const Point<S>& x, const Point<S>& y) {
  return residual_zero(isogonal_residual(v, s1, s2, x, y));
}

}  // namespace rectpoint
