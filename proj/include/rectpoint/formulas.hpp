#pragma once

#include <array>
#include <variant>
#include <vector>

#include "rectpoint/config.hpp"

namespace rectpoint {

enum class EqKind { point, line };

// One transcribed display equation. Points carry x = first, y = second;
// lines are in the slope-intercept shape they are displayed in,
// y = intercept + slope*x, with slope = first and intercept = second.
// All fractions are kept exactly as displayed (no rearrangement), so a
// mismatch against the independently constructed pipeline flags a
// transcription error.
struct EquationSpec {
  int number;
  const char* name;
  EqKind kind;
  const char* first_num;
  const char* first_den;
  const char* second_num;
  const char* second_den;
};

inline const std::vector<EquationSpec>& equation_catalog() {
  static const std::vector<EquationSpec> catalog = {
      {1, "d_a", EqKind::line, "-a", "b", "a^2 + b^2", "2*b"},
      {2, "d_b", EqKind::line, "-c", "b", "b^2 + c^2", "2*b"},
      {3, "d_c", EqKind::line, "-c", "d", "c^2 + d^2", "2*d"},
      {4, "d_d", EqKind::line, "-a", "d", "a^2 + d^2", "2*d"},
      {5, "O_a", EqKind::point, "a + c", "2", "-a*c + b^2", "2*b"},
      {6, "O_b", EqKind::point, "-b*d + c^2", "2*c", "b + d", "2"},
      {7, "O_c", EqKind::point, "a + c", "2", "-a*c + d^2", "2*d"},
      {8, "O_d", EqKind::point, "-b*d + a^2", "2*a", "b + d", "2"},
      {9, "G_a", EqKind::point, "a + c", "3", "2*b", "3"},
      {10, "G_b", EqKind::point, "2*c", "3", "b + d", "3"},
      {11, "G_c", EqKind::point, "a + c", "3", "2*d", "3"},
      {12, "G_d", EqKind::point, "2*a", "3", "b + d", "3"},
      {13, "eps_a", EqKind::line, "-b^2 - 3*a*c", "a*b + b*c", "b^2 + a*c", "b"},
      {14, "eps_b", EqKind::line, "-b*c - c*d", "c^2 + 3*b*d",
       "b*c^2 + b*d^2 + b^2*d + c^2*d", "c^2 + 3*b*d"},
      {15, "eps_c", EqKind::line, "-d^2 - 3*a*c", "a*d + c*d", "d^2 + a*c", "d"},
      {16, "eps_d", EqKind::line, "-a*b - a*d", "a^2 + 3*b*d",
       "b*d^2 + a^2*b + a^2*d + b^2*d", "a^2 + 3*b*d"},
      {17, "Q", EqKind::point, "a^2*c - a*b*d + a*c^2 - b*c*d", "3*a*c - b*d",
       "2*a*b*c + 2*a*c*d", "3*a*c - b*d"},
      {18, "R", EqKind::point, "-2*a*b*d - 2*b*c*d", "a*c - 3*b*d",
       "a*b*c + a*c*d - b^2*d - b*d^2", "a*c - 3*b*d"},
      {19, "QR", EqKind::line, "-b - d", "a + c", "b + d", "1"},
      {20, "S_a", EqKind::point, "a^2*c + a*b^2 + a*c^2 + b^2*c",
       "2*a^2 - 2*a*c + 2*b^2 + 2*c^2", "a^2*b + 2*b^3 + b*c^2",
       "2*a^2 - 2*a*c + 2*b^2 + 2*c^2"},
      {21, "S_b", EqKind::point, "b^2*c + 2*c^3 + c*d^2",
       "2*b^2 - 2*b*d + 2*c^2 + 2*d^2", "b^2*d + b*c^2 + b*d^2 + c^2*d",
       "2*b^2 - 2*b*d + 2*c^2 + 2*d^2"},
      {22, "S_c", EqKind::point, "a^2*c + a*c^2 + a*d^2 + c*d^2",
       "2*a^2 - 2*a*c + 2*c^2 + 2*d^2", "a^2*d + c^2*d + 2*d^3",
       "2*a^2 - 2*a*c + 2*c^2 + 2*d^2"},
      {23, "S_d", EqKind::point, "2*a^3 + a*b^2 + a*d^2",
       "2*a^2 + 2*b^2 - 2*b*d + 2*d^2", "a^2*b + a^2*d + b^2*d + b*d^2",
       "2*a^2 + 2*b^2 - 2*b*d + 2*d^2"},
      {24, "beta_a", EqKind::line,
       "-b^4 - a*c^3 + a^2*c^2 - a^3*c - 2*a*b^2*c",
       "b*c^3 + a^3*b - a*b*c^2 - a^2*b*c",
       "b^4 + a^2*b^2 + a^2*c^2 + b^2*c^2", "2*b*c^2 + 2*a^2*b - 4*a*b*c"},
      {25, "beta_b", EqKind::line,
       "-c*d^3 - b^3*c + b*c*d^2 + b^2*c*d",
       "c^4 + b*d^3 - b^2*d^2 + b^3*d + 2*b*c^2*d",
       "b*c^4 + b^2*d^3 + b^3*c^2 + b^3*d^2 + c^2*d^3 + c^4*d + b*c^2*d^2 + b^2*c^2*d",
       "2*c^4 + 2*b*d^3 - 2*b^2*d^2 + 2*b^3*d + 4*b*c^2*d"},
      {26, "beta_c", EqKind::line,
       "-d^4 - a*c^3 + a^2*c^2 - a^3*c - 2*a*c*d^2",
       "a^3*d + c^3*d - a*c^2*d - a^2*c*d",
       "d^4 + a^2*c^2 + a^2*d^2 + c^2*d^2", "2*a^2*d + 2*c^2*d - 4*a*c*d"},
      {27, "beta_d", EqKind::line,
       "-a*b^3 - a*d^3 + a*b*d^2 + a*b^2*d",
       "a^4 + b*d^3 - b^2*d^2 + b^3*d + 2*a^2*b*d",
       "a^2*b^3 + a^2*d^3 + a^4*b + a^4*d + b^2*d^3 + b^3*d^2 + a^2*b*d^2 + a^2*b^2*d",
       "2*a^4 + 2*b*d^3 - 2*b^2*d^2 + 2*b^3*d + 4*a^2*b*d"},
      {28, "M", EqKind::point,
       "-a^3*b*d + a^3*c^2 - a^2*b*c*d + a^2*c^3 - a*b^3*d - a*b^2*d^2 - a*b*c^2*d "
       "- a*b*d^3 - b^3*c*d - b^2*c*d^2 - b*c^3*d - b*c*d^3",
       "2*a^3*c - 2*a^2*c^2 - 4*a*b*c*d + 2*a*c^3 - 2*b^3*d - 2*b^2*d^2 - 2*b*d^3",
       "a^3*b*c + a^3*c*d + a^2*b*c^2 + a^2*c^2*d + a*b^3*c + a*b^2*c*d + a*b*c^3 "
       "+ a*b*c*d^2 + a*c^3*d + a*c*d^3 - b^3*d^2 - b^2*d^3",
       "2*a^3*c - 2*a^2*c^2 - 4*a*b*c*d + 2*a*c^3 - 2*b^3*d - 2*b^2*d^2 - 2*b*d^3"},
      {29, "N", EqKind::point,
       "-a^3*b*d + a^3*c^2 - a^2*b*c*d + a^2*c^3 - a*b^3*d - a*b^2*d^2 - a*b*c^2*d "
       "- a*b*d^3 - b^3*c*d - b^2*c*d^2 - b*c^3*d - b*c*d^3",
       "2*a^3*c + 2*a^2*c^2 + 4*a*b*c*d + 2*a*c^3 - 2*b^3*d + 2*b^2*d^2 - 2*b*d^3",
       "a^3*b*c + a^3*c*d + a^2*b*c^2 + a^2*c^2*d + a*b^3*c + a*b^2*c*d + a*b*c^3 "
       "+ a*b*c*d^2 + a*c^3*d + a*c*d^3 - b^3*d^2 - b^2*d^3",
       "2*a^3*c + 2*a^2*c^2 + 4*a*b*c*d + 2*a*c^3 - 2*b^3*d + 2*b^2*d^2 - 2*b*d^3"},
      {30, "MN", EqKind::line,
       "b^2*d^3 + b^3*d^2 - a*b*c^3 - a*c*d^3 - a*b^3*c - a*c^3*d - a^2*b*c^2 "
       "- a^2*c^2*d - a^3*b*c - a^3*c*d - a*b*c*d^2 - a*b^2*c*d",
       "-a^2*c^3 - a^3*c^2 + a*b*d^3 + a*b^2*d^2 + a*b^3*d + b*c*d^3 + b*c^3*d "
       "+ a^3*b*d + b^2*c*d^2 + b^3*c*d + a*b*c^2*d + a^2*b*c*d",
       "0", "1"},
  };
  return catalog;
}

// The same objects constructed from first principles, shared across the
// 30 comparisons.
template <class S>
struct FormulaPipeline {
  // members initialize strictly in declaration order, each from the ones
  // before it
  explicit FormulaPipeline(const RectConfig<S>& cfg)
      : d_a(perpendicular_bisector(cfg.P(), cfg.A())),
        d_b(perpendicular_bisector(cfg.P(), cfg.B())),
        d_c(perpendicular_bisector(cfg.P(), cfg.C())),
        d_d(perpendicular_bisector(cfg.P(), cfg.D())),
        O_a(intersect_lines(d_a, d_b)),
        O_b(intersect_lines(d_b, d_c)),
        O_c(intersect_lines(d_c, d_d)),
        O_d(intersect_lines(d_d, d_a)),
        G_a(centroid(cfg.PAB())),
        G_b(centroid(cfg.PBC())),
        G_c(centroid(cfg.PCD())),
        G_d(centroid(cfg.PDA())),
        eps_a(line_through(O_a, G_a)),
        eps_b(line_through(O_b, G_b)),
        eps_c(line_through(O_c, G_c)),
        eps_d(line_through(O_d, G_d)),
        Q(intersect_lines(eps_a, eps_c)),
        R(intersect_lines(eps_b, eps_d)),
        QR(line_through(Q, R)),
        S_a(symmedian_point(cfg.PAB())),
        S_b(symmedian_point(cfg.PBC())),
        S_c(symmedian_point(cfg.PCD())),
        S_d(symmedian_point(cfg.PDA())),
        beta_a(line_through(O_a, S_a)),
        beta_b(line_through(O_b, S_b)),
        beta_c(line_through(O_c, S_c)),
        beta_d(line_through(O_d, S_d)),
        M(intersect_lines(beta_a, beta_c)),
        N(intersect_lines(beta_b, beta_d)),
        MN(line_through(M, N)) {}

  std::variant<Point<S>, Line<S>> object(int number) const {
    switch (number) {
      case 1: return d_a; case 2: return d_b; case 3: return d_c; case 4: return d_d;
      case 5: return O_a; case 6: return O_b; case 7: return O_c; case 8: return O_d;
      case 9: return G_a; case 10: return G_b; case 11: return G_c; case 12: return G_d;
      case 13: return eps_a; case 14: return eps_b; case 15: return eps_c; case 16: return eps_d;
      case 17: return Q; case 18: return R; case 19: return QR;
      case 20: return S_a; case 21: return S_b; case 22: return S_c; case 23: return S_d;
      case 24: return beta_a; case 25: return beta_b; case 26: return beta_c; case 27: return beta_d;
      case 28: return M; case 29: return N; case 30: return MN;
      default: throw std::invalid_argument("equation number out of range");
    }
  }

  Line<S> d_a, d_b, d_c, d_d;
  Point<S> O_a, O_b, O_c, O_d;
  Point<S> G_a, G_b, G_c, G_d;
  Line<S> eps_a, eps_b, eps_c, eps_d;
  Point<S> Q, R;
  Line<S> QR;
  Point<S> S_a, S_b, S_c, S_d;
  Line<S> beta_a, beta_b, beta_c, beta_d;
  Point<S> M, N;
  Line<S> MN;
};

namespace detail {

// Substitute the configuration parameters into a transcribed fraction.
template <class S>
S eval_fraction(const char* num, const char* den, std::span<const S> point, const S& model) {
  auto lift = [&](const BigRat& c) { return scalar_traits<S>::from_rat(model, c); };
  const S n = MultiPoly::parse(num, 4).template eval_in<S>(point, lift);
  const S d = MultiPoly::parse(den, 4).template eval_in<S>(point, lift);
  if (effectively_zero<S>(d, magnitude_scale<S>(d))) {
    throw construction_error("transcription denominator vanishes");
  }
  return n / d;
}

}  // namespace detail

template <class S>
struct EquationComparison {
  int number;
  std::string name;
  bool match;
  std::variant<Point<S>, Line<S>> derived;
  std::variant<Point<S>, Line<S>> transcribed;
  std::vector<std::pair<std::string, Residual<S>>> residuals;
};

// Checks every displayed equation against the pipeline over the given
// scalar field. Over RatFun with the generic configuration this is a
// polynomial-identity check; over BigRat it is an exact spot check (and
// throws construction_error when a displayed denominator vanishes there).
template <class S>
std::vector<EquationComparison<S>> compare_equations(
    const RectConfig<S>& cfg, const std::vector<EquationSpec>& catalog = equation_catalog()) {
  const FormulaPipeline<S> pipeline(cfg);
  const std::array<S, 4> point{cfg.a, cfg.b, cfg.c, cfg.d};
  const std::span<const S> pt(point);

  std::vector<EquationComparison<S>> out;
  out.reserve(catalog.size());
  for (const EquationSpec& eq : catalog) {
    EquationComparison<S> cmp{eq.number, eq.name, true, pipeline.object(eq.number),
                              Point<S>{cfg.a, cfg.a}, {}};
    const S first = detail::eval_fraction<S>(eq.first_num, eq.first_den, pt, cfg.a);
    const S second = detail::eval_fraction<S>(eq.second_num, eq.second_den, pt, cfg.a);
    const std::string tag = "eq" + std::to_string(eq.number) + " " + eq.name;
    if (eq.kind == EqKind::point) {
      Point<S> t{first, second};
      cmp.transcribed = t;
      const Point<S>& dpt = std::get<Point<S>>(cmp.derived);
      cmp.residuals.push_back(
          {tag + " x", {dpt.x - t.x, detail::magnitude_scale<S>(dpt.x, t.x)}});
      cmp.residuals.push_back(
          {tag + " y", {dpt.y - t.y, detail::magnitude_scale<S>(dpt.y, t.y)}});
    } else {
      // y = intercept + slope*x  <=>  slope*x - y + intercept = 0
      Line<S> t{first, scalar_traits<S>::constant(first, -1), second};
      cmp.transcribed = t;
      const Line<S>& dl = std::get<Line<S>>(cmp.derived);
      auto cross = [&](const S& x1, const S& x2, const S& y1, const S& y2) -> Residual<S> {
        S t1 = x1 * y2;
        S t2 = x2 * y1;
        return {t1 - t2, detail::magnitude_scale<S>(t1, t2)};
      };
      cmp.residuals.push_back({tag + " uv", cross(dl.u, dl.v, t.u, t.v)});
      cmp.residuals.push_back({tag + " uw", cross(dl.u, dl.w, t.u, t.w)});
      cmp.residuals.push_back({tag + " vw", cross(dl.v, dl.w, t.v, t.w)});
    }
    for (const auto& [nm, r] : cmp.residuals) {
      if (!residual_zero(r)) cmp.match = false;
    }
    out.push_back(std::move(cmp));
  }
  return out;
}

// --- display helpers ------------------------------------------------------

inline std::string point_string(const Point<RatFun>& p) {
  return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
}

// Clears denominators and normalizes scale and sign, so two projectively
// equal lines print identically.
inline std::string canonical_line_string(const Line<RatFun>& l) {
  MultiPoly U = l.u.num() * l.v.den() * l.w.den();
  MultiPoly V = l.v.num() * l.u.den() * l.w.den();
  MultiPoly W = l.w.num() * l.u.den() * l.v.den();
  BigRat content(0);
  for (const MultiPoly* p : {&U, &V, &W}) {
    if (!p->is_zero()) content = rat_gcd(content, p->content());
  }
  if (!rat_is_zero(content)) {
    U.divide_by(content);
    V.divide_by(content);
    W.divide_by(content);
  }
  const MultiPoly* lead = !U.is_zero() ? &U : (!V.is_zero() ? &V : &W);
  if (sgn(lead->leading_coefficient()) < 0) {
    U.negate_in_place();
    V.negate_in_place();
    W.negate_in_place();
  }
  return "(" + U.to_string() + ")*x + (" + V.to_string() + ")*y + (" + W.to_string() +
         ") = 0";
}

struct FormulaCheck {
  int number;
  std::string name;
  std::string transcribed;
  std::string derived;
  bool match;
};

// Symbolic transcription check of all 30 displayed equations against the
// generic pipeline.
inline std::vector<FormulaCheck> run_formula_checks(
    const std::vector<EquationSpec>& catalog = equation_catalog()) {
  std::vector<FormulaCheck> out;
  for (const auto& cmp : compare_equations<RatFun>(generic_rect_config(), catalog)) {
    FormulaCheck fc{cmp.number, cmp.name, {}, {}, cmp.match};
    if (std::holds_alternative<Point<RatFun>>(cmp.derived)) {
      fc.transcribed = point_string(std::get<Point<RatFun>>(cmp.transcribed));
      fc.derived = point_string(std::get<Point<RatFun>>(cmp.derived));
    } else {
      fc.transcribed = canonical_line_string(std::get<Line<RatFun>>(cmp.transcribed));
      fc.derived = canonical_line_string(std::get<Line<RatFun>>(cmp.derived));
    }
    out.push_back(std::move(fc));
  }
  return out;
}

}  // namespace rectpoint
