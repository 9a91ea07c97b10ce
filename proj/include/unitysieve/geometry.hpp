#pragma once

// Exact triangle geometry over Q(zeta_N). A triangle is described by the
// three points where its incircle (the unit circle, centered at the origin)
// touches the sides. Vertices, bisector feet, squared distances and
// equality claims are all computed in the field; only angle certification
// and SVG output leave exact arithmetic, and the former carries an error
// bound.

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitysieve/ball.hpp"
#include "unitysieve/bilaurent.hpp"
#include "unitysieve/cyclofield.hpp"

namespace usv {

// Tangency points z1, z2, z3 on the unit circle: side BC touches at z1,
// CA at z2, AB at z3.
struct TangencyTriple {
  CycloElem z1, z2, z3;

  TangencyTriple(CycloElem a, CycloElem b, CycloElem c)
      : z1(std::move(a)), z2(std::move(b)), z3(std::move(c)) {
    for (const CycloElem* z : {&z1, &z2, &z3}) {
      if (z->modulus() != z1.modulus())
        throw std::invalid_argument("tangency points live in different fields");
      if (!z->as_root_of_unity())
        throw std::invalid_argument("tangency points must be roots of unity");
    }
    if (z1 == z2 || z2 == z3 || z1 == z3)
      throw std::invalid_argument("tangency points must be distinct");
    if ((z2 + z3).is_zero() || (z1 + z3).is_zero() || (z1 + z2).is_zero())
      throw std::invalid_argument("antipodal tangency points give parallel sides");
  }
};

// Vertices, internal bisector feet, and (when defined) external bisector
// feet. An external foot is missing exactly when the external bisector at
// the vertex is parallel to the opposite side.
struct TrianglePoints {
  CycloElem A, B, C;
  CycloElem A1, B1, C1;
  std::optional<CycloElem> A2, B2, C2;
  std::vector<std::string> degeneracies;
};

// Real nonnegative field element |p - q|^2 = (p - q) * conj(p - q).
inline CycloElem squared_distance(const CycloElem& p, const CycloElem& q) {
  CycloElem d = p - q;
  return d * d.conj();
}

inline bool equal_lengths(const CycloElem& p1, const CycloElem& q1, const CycloElem& p2,
                          const CycloElem& q2) {
  return squared_distance(p1, q1) == squared_distance(p2, q2);
}

namespace detail {

// A complex line a*z + b*conj(z) = c with conj(a) = -... (chord form).
struct Line {
  CycloElem a, b, c;
};

// Tangent to the unit circle at the unit point t: conj(t) z + t conj(z) = 2.
inline Line tangent_line(const CycloElem& t) {
  return {t.conj(), t, CycloElem::from_rational(t.modulus(), 2)};
}

// Perpendicular to the segment origin-V at V: conj(V) z + V conj(z) = 2 V conj(V).
inline Line perpendicular_at(const CycloElem& v) {
  CycloElem two = CycloElem::from_rational(v.modulus(), 2);
  return {v.conj(), v, two * v * v.conj()};
}

inline std::optional<CycloElem> intersect(const Line& l1, const Line& l2) {
  CycloElem det = l1.a * l2.b - l2.a * l1.b;
  if (det.is_zero()) return std::nullopt;
  return (l1.c * l2.b - l2.c * l1.b) * det.inv();
}

// Strictly inside the open segment (b, c): t = (p - b)/(c - b) must be a
// real number in (0, 1). Collinearity of p with b, c is a precondition.
inline bool inside_segment(const CycloElem& p, const CycloElem& b, const CycloElem& c) {
  CycloElem t = (p - b) * (c - b).inv();
  if (!sign_predicate(SignKind::im_zero, t))
    throw std::logic_error("inside_segment: point not on the line");
  CycloElem one = CycloElem::from_rational(t.modulus(), 1);
  return sign_predicate(SignKind::re_positive, t) &&
         sign_predicate(SignKind::re_positive, one - t);
}

}  // namespace detail

// Builds the triangle from its tangency points. The angle bisector at each
// vertex passes through the origin, so its foot on the opposite side is the
// intersection of the vertex-origin line with that side; the closed form
// for vertex A is 2 z1 z2 z3 / (z1^2 + z2 z3). The other bisector at the
// vertex is perpendicular to the first. Which of the two feet is the
// internal one is decided by an exact inside-the-segment test: when the
// unit circle is an excircle rather than the incircle, the roles swap.
inline TrianglePoints triangle_from_tangency(const TangencyTriple& t) {
  long n = t.z1.modulus();
  CycloElem two = CycloElem::from_rational(n, 2);
  auto vertex = [&](const CycloElem& u, const CycloElem& v) {
    return two * u * v * (u + v).inv();
  };
  TrianglePoints pts{vertex(t.z2, t.z3), vertex(t.z1, t.z3), vertex(t.z1, t.z2),
                     CycloElem(n),       CycloElem(n),       CycloElem(n),
                     std::nullopt,       std::nullopt,       std::nullopt,
                     {}};

  CycloElem prod = t.z1 * t.z2 * t.z3;
  auto feet = [&](const char* name, const CycloElem& v, const CycloElem& tz,
                  const CycloElem& b, const CycloElem& c, CycloElem& internal,
                  std::optional<CycloElem>& external) {
    CycloElem denom = tz * tz + prod * tz.inv();  // z_i^2 + product of the others
    if (denom.is_zero())
      throw std::runtime_error(std::string("bisector foot undefined at ") + name);
    CycloElem through_origin = two * prod * denom.inv();
    std::optional<CycloElem> perp =
        detail::intersect(detail::tangent_line(tz), detail::perpendicular_at(v));
    bool origin_foot_inside = detail::inside_segment(through_origin, b, c);
    if (origin_foot_inside) {
      internal = through_origin;
      external = perp;
      if (!perp)
        pts.degeneracies.push_back(std::string(name) +
                                   "2: bisector parallel to the opposite side");
    } else {
      if (!perp || !detail::inside_segment(*perp, b, c))
        throw std::runtime_error(std::string("no internal bisector foot at ") + name);
      internal = *perp;
      external = through_origin;
    }
  };
  feet("A", pts.A, t.z1, pts.B, pts.C, pts.A1, pts.A2);
  feet("B", pts.B, t.z2, pts.A, pts.C, pts.B1, pts.B2);
  feet("C", pts.C, t.z3, pts.A, pts.B, pts.C1, pts.C2);
  return pts;
}

// ---- certified angles ----------------------------------------------------

struct AngleInterval {
  double lo = 0, hi = 0;
  double mid() const { return (lo + hi) / 2; }
  double width() const { return hi - lo; }
};

// Unsigned angle at vertex `v` between rays to `p` and `q`, certified: the
// exact angle lies in the returned interval. Works on the exact complex
// number w = (p - v) * conj(q - v), whose argument is the angle.
inline AngleInterval certified_angle(const CycloElem& v, const CycloElem& p,
                                     const CycloElem& q, double target_width = 1e-12) {
  CycloElem w = (p - v) * (q - v).conj();
  if (w.is_zero()) throw std::invalid_argument("certified_angle: coincident points");
  ComplexBall b = embed_numeric(w, target_width / 16);
  double r = b.abs_d();
  if (r <= 2 * b.radius) throw std::runtime_error("certified_angle: ball touches zero");
  double theta = std::fabs(std::atan2(b.im_d(), b.re_d()));
  // perturbing w by radius eps rotates arg by at most asin(eps/|w|) <= 2 eps/|w|
  double err = 2 * b.radius / r + 1e-14;
  return {theta - err, theta + err};
}

inline std::array<AngleInterval, 3> triangle_angles(const TrianglePoints& t) {
  return {certified_angle(t.A, t.B, t.C), certified_angle(t.B, t.A, t.C),
          certified_angle(t.C, t.A, t.B)};
}

// Checks that the certified interval pins the angle to p*pi/q within 1e-9.
inline bool angle_is(const AngleInterval& a, int p, int q) {
  double target = M_PI * p / q;
  return a.width() < 1e-9 && a.lo <= target + 1e-9 && a.hi >= target - 1e-9 &&
         std::fabs(a.mid() - target) < 1e-9;
}

// ---- the angle window ----------------------------------------------------

enum class WindowCheck { in_window, outside_window, not_applicable };

// A triangle whose internal bisector feet form an isosceles triangle while
// the triangle itself is scalene has its largest angle in the open window
// (102.6, 104.5) degrees. Returns not_applicable when the premise fails,
// otherwise certifies which side of the window the largest angle is on.
inline WindowCheck sharygin_angle_window(const TrianglePoints& t) {
  CycloElem ab = squared_distance(t.A, t.B), bc = squared_distance(t.B, t.C),
            ca = squared_distance(t.C, t.A);
  bool scalene = ab != bc && bc != ca && ab != ca;
  CycloElem f12 = squared_distance(t.A1, t.B1), f23 = squared_distance(t.B1, t.C1),
            f13 = squared_distance(t.A1, t.C1);
  bool feet_isosceles = f12 == f23 || f23 == f13 || f12 == f13;
  if (!scalene || !feet_isosceles) return WindowCheck::not_applicable;
  auto angles = triangle_angles(t);
  AngleInterval largest = angles[0];
  for (const auto& a : angles)
    if (a.mid() > largest.mid()) largest = a;
  const double deg = M_PI / 180.0;
  if (largest.lo > 102.6 * deg && largest.hi < 104.5 * deg) return WindowCheck::in_window;
  if (largest.hi < 102.6 * deg || largest.lo > 104.5 * deg)
    return WindowCheck::outside_window;
  throw std::runtime_error("sharygin_angle_window: certified interval straddles the window");
}

// ---- the bisectral isosceles condition as a Laurent identity ------------

// Q(u, v, w) = u^3 v + v^3 u - u^3 w - v^3 w + u^2 w^2 + v^2 w^2 vanishes
// exactly when the bisectral triangle of the triangle with tangency points
// (u, v, w) is isosceles at the right pair of feet.
template <typename T>
T isosceles_feet_form(const T& u, const T& v, const T& w) {
  T u3 = u * u * u, v3 = v * v * v;
  return u3 * v + v3 * u - u3 * w - v3 * w + u * u * w * w + v * v * w * w;
}

// Specializing w = -1 and v = 1/y and clearing denominators turns the
// condition into the six-term polynomial: y^3 Q(x, y^-1, -1) = f(x, y).
inline BiLaurent condition_identity_lhs() {
  BiLaurent x = BiLaurent::monomial(1, 0);
  BiLaurent y_inv = BiLaurent::monomial(0, -1);
  BiLaurent minus_one(-1);
  return BiLaurent::monomial(0, 3) * isosceles_feet_form(x, y_inv, minus_one);
}

// ---- the three named triangles ------------------------------------------

enum class NamedTriangle { heptagonal, pentadecagonal_first, pentadecagonal_second };

inline std::string triangle_name(NamedTriangle w) {
  switch (w) {
    case NamedTriangle::heptagonal: return "heptagonal";
    case NamedTriangle::pentadecagonal_first: return "pentadecagonal-first";
    default: return "pentadecagonal-second";
  }
}

// Tangency exponents at modulus 210, from the filtered solution (a, b) =
// (15, 30): z = (zeta^(2a), zeta^(-a), -1) up to relabeling for the
// heptagonal case, and the two pentadecagonal cases from the S2 solutions
// carried along for the length equalities.
inline TangencyTriple named_tangency(NamedTriangle w, long n = 210) {
  if (n % 210 != 0) throw std::invalid_argument("modulus must be a multiple of 210");
  long s = n / 210;
  auto z = [&](long e) { return root_of_unity(n, e * s); };
  switch (w) {
    case NamedTriangle::heptagonal: return {z(30), z(195), z(105)};
    case NamedTriangle::pentadecagonal_first: return {z(112), z(28), z(105)};
    default: return {z(154), z(196), z(105)};
  }
}

struct EqualityClaim {
  std::string lhs, rhs;  // segment labels like "C1A1"
  bool holds = false;
};

namespace detail {

inline const CycloElem& point_by_label(const TrianglePoints& t, const std::string& lab) {
  auto need = [&](const std::optional<CycloElem>& p) -> const CycloElem& {
    if (!p) throw std::runtime_error("point " + lab + " is undefined (degenerate)");
    return *p;
  };
  if (lab == "A") return t.A;
  if (lab == "B") return t.B;
  if (lab == "C") return t.C;
  if (lab == "A1") return t.A1;
  if (lab == "B1") return t.B1;
  if (lab == "C1") return t.C1;
  if (lab == "A2") return need(t.A2);
  if (lab == "B2") return need(t.B2);
  if (lab == "C2") return need(t.C2);
  throw std::invalid_argument("unknown point label " + lab);
}

inline std::pair<std::string, std::string> split_segment(const std::string& seg) {
  // labels are one letter plus an optional digit
  std::size_t cut = (seg.size() > 1 && std::isdigit(static_cast<unsigned char>(seg[1])))
                        ? 2
                        : 1;
  return {seg.substr(0, cut), seg.substr(cut)};
}

}  // namespace detail

inline bool check_segment_equality(const TrianglePoints& t, const std::string& lhs,
                                   const std::string& rhs) {
  auto [p1, q1] = detail::split_segment(lhs);
  auto [p2, q2] = detail::split_segment(rhs);
  return equal_lengths(detail::point_by_label(t, p1), detail::point_by_label(t, q1),
                       detail::point_by_label(t, p2), detail::point_by_label(t, q2));
}

inline std::vector<std::pair<std::string, std::string>> named_claims(NamedTriangle w) {
  switch (w) {
    case NamedTriangle::heptagonal:
      return {{"C1A1", "C1B1"}, {"A2B2", "A2C1"}};
    case NamedTriangle::pentadecagonal_first:
      return {{"C1A2", "C1B2"}, {"AA2", "BB2"}};
    default:
      return {{"C2A1", "C2B2"}, {"AA1", "BB2"}};
  }
}

// Expected angles p*pi/q at vertices A, B, C.
inline std::array<std::pair<int, int>, 3> named_angles(NamedTriangle w) {
  switch (w) {
    case NamedTriangle::heptagonal:
      return {{{1, 7}, {2, 7}, {4, 7}}};
    case NamedTriangle::pentadecagonal_first:
      return {{{11, 15}, {1, 15}, {3, 15}}};
    default:
      return {{{2, 15}, {7, 15}, {6, 15}}};
  }
}

inline std::vector<EqualityClaim> verify_named_triangle(NamedTriangle w, long n = 210) {
  TrianglePoints t = triangle_from_tangency(named_tangency(w, n));
  std::vector<EqualityClaim> out;
  for (const auto& [lhs, rhs] : named_claims(w))
    out.push_back({lhs, rhs, check_segment_equality(t, lhs, rhs)});
  return out;
}

// ---- figures -------------------------------------------------------------

struct PlanePoint {
  double x = 0, y = 0;
};

// Double coordinates of every defined point, keyed by label, in label order.
inline std::map<std::string, PlanePoint> figure_coordinates(const TrianglePoints& t) {
  std::map<std::string, PlanePoint> out;
  auto put = [&](const std::string& lab, const CycloElem& p) {
    ComplexBall b = embed_numeric(p, 1e-12);
    out[lab] = {b.re_d(), b.im_d()};
  };
  put("A", t.A);
  put("B", t.B);
  put("C", t.C);
  put("A1", t.A1);
  put("B1", t.B1);
  put("C1", t.C1);
  if (t.A2) put("A2", *t.A2);
  if (t.B2) put("B2", *t.B2);
  if (t.C2) put("C2", *t.C2);
  return out;
}

namespace detail {

inline std::string fmt_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline void svg_polygon(std::ostream& os, const std::map<std::string, PlanePoint>& pts,
                        const std::vector<std::string>& labels, const char* stroke,
                        const char* width) {
  os << "  <polygon points=\"";
  bool first = true;
  for (const auto& lab : labels) {
    const auto& p = pts.at(lab);
    if (!first) os << " ";
    os << fmt_coord(p.x) << "," << fmt_coord(-p.y);
    first = false;
  }
  os << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width
     << "\"/>\n";
}

}  // namespace detail

// Deterministic SVG of a named triangle with its incircle, bisector feet
// and the highlighted bisectral triangle(s).
inline std::string figure_svg(NamedTriangle w, long n = 210) {
  TrianglePoints t = triangle_from_tangency(named_tangency(w, n));
  auto pts = figure_coordinates(t);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-2.5 -2.5 5 5\">\n";
  os << "  <!-- " << triangle_name(w) << " triangle -->\n";
  os << "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#888888\""
        " stroke-width=\"0.012\"/>\n";
  detail::svg_polygon(os, pts, {"A", "B", "C"}, "#000000", "0.018");
  std::vector<std::vector<std::string>> highlights;
  switch (w) {
    case NamedTriangle::heptagonal:
      highlights = {{"A1", "B1", "C1"}, {"A2", "B2", "C1"}};
      break;
    case NamedTriangle::pentadecagonal_first:
      highlights = {{"A2", "B2", "C1"}};
      break;
    default:
      highlights = {{"A1", "B2", "C2"}};
      break;
  }
  const char* colors[] = {"#cc2222", "#2255cc"};
  for (std::size_t i = 0; i < highlights.size(); ++i)
    detail::svg_polygon(os, pts, highlights[i], colors[i % 2], "0.015");
  for (const auto& [lab, p] : pts) {
    os << "  <circle cx=\"" << detail::fmt_coord(p.x) << "\" cy=\""
       << detail::fmt_coord(-p.y) << "\" r=\"0.035\" fill=\"#222222\"/>\n";
    os << "  <text x=\"" << detail::fmt_coord(p.x + 0.06) << "\" y=\""
       << detail::fmt_coord(-p.y - 0.06) << "\" font-size=\"0.14\">" << lab
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace usv
