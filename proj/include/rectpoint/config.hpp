#pragma once

#include <string>

#include "rectpoint/geometry.hpp"
#include "rectpoint/triangle.hpp"

namespace rectpoint {

// The rectangle-plus-point parameterization: P at the origin, A(a,b),
// B(c,b), C(c,d), D(a,d), center I((a+c)/2, (b+d)/2).
template <class S>
struct RectConfig {
  S a, b, c, d;

  Point<S> P() const {
    const S z = scalar_traits<S>::constant(a, 0);
    return {z, z};
  }
  Point<S> A() const { return {a, b}; }
  Point<S> B() const { return {c, b}; }
  Point<S> C() const { return {c, d}; }
  Point<S> D() const { return {a, d}; }
  Point<S> I() const {
    const S two = scalar_traits<S>::constant(a, 2);
    return {(a + c) / two, (b + d) / two};
  }

  Triangle<S> PAB() const { return {P(), A(), B()}; }
  Triangle<S> PBC() const { return {P(), B(), C()}; }
  Triangle<S> PCD() const { return {P(), C(), D()}; }
  Triangle<S> PDA() const { return {P(), D(), A()}; }
};

// Two rectangles sharing center I; the second is completed by
// c2 = a1 + c1 - a2 and d2 = b1 + d1 - b2 so the shared center holds by
// construction.
template <class S>
struct TwoRectConfig {
  S a1, b1, c1, d1, a2, b2;

  S c2() const { return a1 + c1 - a2; }
  S d2() const { return b1 + d1 - b2; }

  Point<S> P() const {
    const S z = scalar_traits<S>::constant(a1, 0);
    return {z, z};
  }
  Point<S> A1() const { return {a1, b1}; }
  Point<S> B1() const { return {c1, b1}; }
  Point<S> C1() const { return {c1, d1}; }
  Point<S> D1() const { return {a1, d1}; }
  Point<S> A2() const { return {a2, b2}; }
  Point<S> B2() const { return {c2(), b2}; }
  Point<S> C2() const { return {c2(), d2()}; }
  Point<S> D2() const { return {a2, d2()}; }
  Point<S> I() const {
    const S two = scalar_traits<S>::constant(a1, 2);
    return {(a1 + c1) / two, (b1 + d1) / two};
  }
};

// Empty string when the configuration is valid, else a degeneracy tag.
// `sampled` additionally requires nonzero parameters (keeps P off all four
// side lines, so the triangles PAB..PDA are non-degenerate).
template <class S>
std::string config_violation(const RectConfig<S>& cfg, bool sampled) {
  const double sc = detail::magnitude_scale<S>(cfg.a, cfg.b, cfg.c, cfg.d);
  if (effectively_zero<S>(cfg.a - cfg.c, sc)) return "improper rectangle (a = c)";
  if (effectively_zero<S>(cfg.b - cfg.d, sc)) return "improper rectangle (b = d)";
  if (!sampled) return {};
  if (effectively_zero<S>(cfg.a, sc) || effectively_zero<S>(cfg.b, sc) ||
      effectively_zero<S>(cfg.c, sc) || effectively_zero<S>(cfg.d, sc)) {
    return "zero parameter (P on a side line)";
  }
  for (const Triangle<S>& t : {cfg.PAB(), cfg.PBC(), cfg.PCD(), cfg.PDA()}) {
    if (are_collinear(t.u, t.v, t.w)) return "degenerate triangle";
  }
  return {};
}

template <class S>
std::string config_violation(const TwoRectConfig<S>& cfg, bool sampled) {
  const S c2 = cfg.c2(), d2 = cfg.d2();
  const double sc =
      detail::magnitude_scale<S>(cfg.a1, cfg.b1, cfg.c1, cfg.d1, cfg.a2, cfg.b2, c2, d2);
  if (effectively_zero<S>(cfg.a1 - cfg.c1, sc)) return "improper rectangle 1 (a1 = c1)";
  if (effectively_zero<S>(cfg.b1 - cfg.d1, sc)) return "improper rectangle 1 (b1 = d1)";
  if (effectively_zero<S>(cfg.a2 - c2, sc)) return "improper rectangle 2 (a2 = c2)";
  if (effectively_zero<S>(cfg.b2 - d2, sc)) return "improper rectangle 2 (b2 = d2)";
  if (!sampled) return {};
  for (const S* v : {&cfg.a1, &cfg.b1, &cfg.c1, &cfg.d1, &cfg.a2, &cfg.b2, &c2, &d2}) {
    if (effectively_zero<S>(*v, sc)) return "zero parameter (P on a side line)";
  }
  return {};
}

// Deterministic exact-rational configurations: the draw depends only on
// (seed, index, trial, slot), and invariant violations retry on an internal
// sub-counter, so any parallel schedule reproduces the sequential stream.
inline RectConfig<BigRat> sample_rect_config(std::uint64_t seed, std::uint64_t index,
                                             std::uint64_t trial = 0) {
  for (std::uint64_t sub = 0;; ++sub) {
    const std::uint64_t t = trial * 1024 + sub;
    RectConfig<BigRat> cfg{draw_rational(seed, index, t, 0), draw_rational(seed, index, t, 1),
                           draw_rational(seed, index, t, 2), draw_rational(seed, index, t, 3)};
    if (config_violation(cfg, /*sampled=*/true).empty()) return cfg;
    if (sub > 512) throw std::logic_error("sample_rect_config: rejection loop stuck");
  }
}

inline TwoRectConfig<BigRat> sample_two_rect_config(std::uint64_t seed, std::uint64_t index,
                                                    std::uint64_t trial = 0) {
  for (std::uint64_t sub = 0;; ++sub) {
    const std::uint64_t t = trial * 1024 + sub;
    TwoRectConfig<BigRat> cfg{draw_rational(seed, index, t, 0), draw_rational(seed, index, t, 1),
                              draw_rational(seed, index, t, 2), draw_rational(seed, index, t, 3),
                              draw_rational(seed, index, t, 4), draw_rational(seed, index, t, 5)};
    if (config_violation(cfg, /*sampled=*/true).empty()) return cfg;
    if (sub > 512) throw std::logic_error("sample_two_rect_config: rejection loop stuck");
  }
}

// Generic symbolic configurations: the parameters are the ring variables
// themselves, so every predicate becomes a polynomial identity.
inline RectConfig<RatFun> generic_rect_config() {
  return {RatFun::variable(4, 0), RatFun::variable(4, 1), RatFun::variable(4, 2),
          RatFun::variable(4, 3)};
}

inline TwoRectConfig<RatFun> generic_two_rect_config() {
  return {RatFun::variable(6, 0), RatFun::variable(6, 1), RatFun::variable(6, 2),
          RatFun::variable(6, 3), RatFun::variable(6, 4), RatFun::variable(6, 5)};
}

inline RectConfig<double> to_float(const RectConfig<BigRat>& cfg) {
  return {rat_to_double(cfg.a), rat_to_double(cfg.b), rat_to_double(cfg.c),
          rat_to_double(cfg.d)};
}

inline TwoRectConfig<double> to_float(const TwoRectConfig<BigRat>& cfg) {
  return {rat_to_double(cfg.a1), rat_to_double(cfg.b1), rat_to_double(cfg.c1),
          rat_to_double(cfg.d1), rat_to_double(cfg.a2), rat_to_double(cfg.b2)};
}

}  // namespace rectpoint
