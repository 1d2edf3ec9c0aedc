#pragma once

// Exact area of a disk ∩ triangle.
//
// Each side of the triangle meets the circle 0, 1 or 2 times. The counts for
// sides AB, BC and CA form the base-3 number Code = 9*n3 + 3*n2 + n1, and each
// of the 27 values belongs to one of ten families that differ only by a
// relabelling of the vertices. A case is first rotated or reflected onto its
// family representative, then the intersection is assembled from triangle
// areas T(.,.,.) and chord lenses L(.,.) according to which vertices are
// inside (i), on (e) or outside (o) the circle.
//
// Contacts on side AB are ordered from A, on BC from B and on CA from C.

#include <array>
#include <cmath>
#include <iostream>
#include <optional>
#include <string_view>

#include "diskarea/circular_regions.hpp"
#include "diskarea/geom_core.hpp"
#include "diskarea/oracles.hpp"
#include "diskarea/polygon.hpp"

namespace diskarea {

struct IntersectionCode {
  int n1 = 0;  // side AB
  int n2 = 0;  // side BC
  int n3 = 0;  // side CA

  constexpr int value() const { return 9 * n3 + 3 * n2 + n1; }
  static constexpr IntersectionCode from_value(int code) {
    return {code % 3, (code / 3) % 3, code / 9};
  }
  friend constexpr bool operator==(IntersectionCode, IntersectionCode) = default;
};

struct CaseContext {
  double dA = 0.0;
  double dB = 0.0;
  double dC = 0.0;
  ContactList ab;  // A1, A2
  ContactList bc;  // B1, B2
  ContactList ca;  // C1, C2
  std::array<bool, 3> on_circle{};
};

struct Classification {
  IntersectionCode code;
  CaseContext ctx;
};

inline Classification classify(const Triangle& t, const Circle& k, const EpsilonPolicy& eps) {
  Classification out;
  CaseContext& ctx = out.ctx;
  ctx.dA = distance(k.center, t.a);
  ctx.dB = distance(k.center, t.b);
  ctx.dC = distance(k.center, t.c);
  ctx.on_circle = {std::abs(ctx.dA - k.radius) <= eps.on_circle,
                   std::abs(ctx.dB - k.radius) <= eps.on_circle,
                   std::abs(ctx.dC - k.radius) <= eps.on_circle};
  const auto side = [&](Point2 from, Point2 to) {
    if (distance(from, to) <= eps.geometry) return ContactList{};
    return segment_circle_intersections({from, to}, k, eps);
  };
  ctx.ab = side(t.a, t.b);
  ctx.bc = side(t.b, t.c);
  ctx.ca = side(t.c, t.a);
  out.code = {static_cast<int>(ctx.ab.size()), static_cast<int>(ctx.bc.size()),
              static_cast<int>(ctx.ca.size())};
  return out;
}

/// Closed containment: on the boundary or odd crossing number.
inline bool point_in_triangle(Point2 p, const Triangle& t, const EpsilonPolicy& eps) {
  const double to_boundary = std::min({point_segment_distance(p, t.a, t.b),
                                       point_segment_distance(p, t.b, t.c),
                                       point_segment_distance(p, t.c, t.a)});
  if (to_boundary <= eps.geometry) return true;
  int crossings = 0;
  const std::array<Point2, 3> v{t.a, t.b, t.c};
  for (int i = 0; i < 3; ++i) {
    const Point2 a = v[i], b = v[(i + 1) % 3];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x > p.x) ++crossings;
    }
  }
  return crossings % 2 == 1;
}

/// Representative of the family a code belongs to.
constexpr int representative_code(int code) {
  switch (code) {
    case 0: return 0;
    case 1: case 3: case 9: return 1;
    case 2: case 6: case 18: return 18;
    case 4: case 10: case 12: return 12;
    case 5: case 7: case 11: case 15: case 19: case 21: return 5;
    case 8: case 20: case 24: return 8;
    case 13: return 13;
    case 14: case 16: case 22: return 14;
    case 17: case 23: case 25: return 17;
    case 26: return 26;
    default: return -1;
  }
}

struct CanonicalCase {
  int representative = 0;
  IntersectionCode code;
  Triangle triangle;
  CaseContext ctx;
};

namespace detail {

// (A, B, C) -> (B, C, A)
inline CanonicalCase rotated(const CanonicalCase& c) {
  CanonicalCase r = c;
  r.triangle = {c.triangle.b, c.triangle.c, c.triangle.a};
  r.ctx.dA = c.ctx.dB;
  r.ctx.dB = c.ctx.dC;
  r.ctx.dC = c.ctx.dA;
  r.ctx.ab = c.ctx.bc;
  r.ctx.bc = c.ctx.ca;
  r.ctx.ca = c.ctx.ab;
  r.ctx.on_circle = {c.ctx.on_circle[1], c.ctx.on_circle[2], c.ctx.on_circle[0]};
  r.code = {c.code.n2, c.code.n3, c.code.n1};
  return r;
}

// (A, B, C) -> (A, C, B); every side is walked the other way.
inline CanonicalCase reflected(const CanonicalCase& c) {
  CanonicalCase r = c;
  r.triangle = {c.triangle.a, c.triangle.c, c.triangle.b};
  r.ctx.dB = c.ctx.dC;
  r.ctx.dC = c.ctx.dB;
  r.ctx.ab = c.ctx.ca.reversed();
  r.ctx.bc = c.ctx.bc.reversed();
  r.ctx.ca = c.ctx.ab.reversed();
  r.ctx.on_circle = {c.ctx.on_circle[0], c.ctx.on_circle[2], c.ctx.on_circle[1]};
  r.code = {c.code.n3, c.code.n2, c.code.n1};
  return r;
}

}  // namespace detail

/// Relabels the triangle so that its code becomes the family representative.
/// The geometry is unchanged; only names move.
inline CanonicalCase canonicalize_case(IntersectionCode code, const Triangle& t,
                                       const CaseContext& ctx) {
  const int rep = representative_code(code.value());
  CanonicalCase c{rep, code, t, ctx};
  for (int turn = 0; turn < 3; ++turn) {
    if (c.code.value() == rep) return c;
    const CanonicalCase m = detail::reflected(c);
    if (m.code.value() == rep) return m;
    c = detail::rotated(c);
  }
  return c;  // unreachable: every code reaches its representative
}

enum class Resolution {
  direct,     // matched a sub-case on the first attempt
  perturbed,  // matched after nudging R by 2*eps.on_circle
  oracle,     // no sub-case matched; grid quadrature was used
  degenerate  // collinear triangle
};

struct DiskTriangleResult {
  double area = 0.0;
  int code = 0;
  int representative = 0;
  std::string_view branch;  // "<representative>/<vertex pattern>[<half-space outcome>]"
  Resolution resolution = Resolution::direct;
};

namespace detail {

struct Branch {
  double area;
  std::string_view label;
};

class CaseEvaluator {
 public:
  CaseEvaluator(const CanonicalCase& c, const Circle& k, const EpsilonPolicy& eps)
      : A(c.triangle.a), B(c.triangle.b), C(c.triangle.c), ab(c.ctx.ab), bc(c.ctx.bc),
        ca(c.ctx.ca), P(k.center), R(k.radius), disk(kPi * k.radius * k.radius), k_(k),
        eps_(eps), tri_(c.triangle) {
    const auto status = [&](double d, bool on) {
      if (on) return 'e';
      return d < R ? 'i' : 'o';
    };
    pattern_ = {status(c.ctx.dA, c.ctx.on_circle[0]), status(c.ctx.dB, c.ctx.on_circle[1]),
                status(c.ctx.dC, c.ctx.on_circle[2])};
  }

  std::optional<Branch> evaluate(int representative) const {
    switch (representative) {
      case 0: return code0();
      case 1: return code1();
      case 18: return code18();
      case 12: return code12();
      case 5: return code5();
      case 8: return code8();
      case 13: return code13();
      case 14: return code14();
      case 17: return code17();
      case 26: return code26();
      default: return std::nullopt;
    }
  }

 private:
  bool is(std::string_view p) const {
    return p[0] == pattern_[0] && p[1] == pattern_[1] && p[2] == pattern_[2];
  }

  double T(Point2 a, Point2 b, Point2 c) const { return triangle_area(a, b, c); }

  // Minor lens cut by chord xy; a vanishing chord has no area.
  double L(Point2 x, Point2 y) const {
    if (distance(x, y) <= eps_.geometry) return 0.0;
    return minor_lens_area({k_, x, y}, eps_);
  }

  bool same(Point2 c, Point2 p, Point2 a, Point2 b) const {
    if (distance(a, b) <= eps_.geometry) return true;
    return same_half_space(c, p, a, b, eps_);
  }

  bool p_inside() const { return point_in_triangle(P, tri_, eps_); }

  std::optional<Branch> code0() const {
    if (is("iii")) return Branch{T(A, B, C), "0/iii"};
    if (is("ooo")) {
      return p_inside() ? Branch{disk, "0/ooo:in"} : Branch{0.0, "0/ooo:out"};
    }
    return std::nullopt;
  }

  // A single tangency on AB.
  std::optional<Branch> code1() const {
    if (is("ooo")) {
      return p_inside() ? Branch{disk, "1/ooo:in"} : Branch{0.0, "1/ooo:out"};
    }
    return std::nullopt;
  }

  // One chord on CA; the lens on B's side of it is the intersection.
  std::optional<Branch> code18() const {
    if (!is("ooo")) return std::nullopt;
    const Point2 C1 = ca[0], C2 = ca[1];
    if (same(B, P, C1, C2)) return Branch{disk - L(C1, C2), "18/ooo:major"};
    return Branch{L(C1, C2), "18/ooo:minor"};
  }

  // One contact on BC and one on CA.
  std::optional<Branch> code12() const {
    const Point2 B1 = bc[0], C1 = ca[0];
    if (is("iie")) return Branch{T(A, B, C), "12/iie"};
    if (is("iio")) return Branch{L(C1, B1) + T(A, B, B1) + T(A, B1, C1), "12/iio"};
    if (is("ooo")) {
      if (p_inside()) return Branch{disk, "12/ooo"};
      return std::nullopt;
    }
    if (is("ooi")) {
      if (same(C, P, B1, C1)) return Branch{T(C, B1, C1) + L(B1, C1), "12/ooi:same"};
      return Branch{T(C, B1, C1) + disk - L(B1, C1), "12/ooi:opposite"};
    }
    if (is("ooe")) return Branch{0.0, "12/ooe"};
    return std::nullopt;
  }

  // Chord A1A2 on AB plus a single contact on BC.
  std::optional<Branch> code5() const {
    if (!is("ooo") && !is("oeo")) return std::nullopt;
    const Point2 A1 = ab[0], A2 = ab[1];
    const bool oeo = is("oeo");
    if (p_inside()) return Branch{disk - L(A1, A2), oeo ? "5/oeo:in" : "5/ooo:in"};
    return Branch{L(A1, A2), oeo ? "5/oeo:out" : "5/ooo:out"};
  }

  // Chords on AB and BC.
  std::optional<Branch> code8() const {
    const Point2 A1 = ab[0], A2 = ab[1], B1 = bc[0], B2 = bc[1];
    const bool out = same(B, P, A1, B2);
    const double far_lens = out ? L(A1, B2) : disk - L(A1, B2);
    if (is("ooo")) {
      return Branch{far_lens + T(B1, A1, B2) + T(A2, A1, B1) + L(A2, B1),
                    out ? "8/ooo:same" : "8/ooo:opposite"};
    }
    if (is("oeo")) return Branch{far_lens + T(B, A1, B2), out ? "8/oeo:same" : "8/oeo:opposite"};
    return std::nullopt;
  }

  // One contact per side.
  std::optional<Branch> code13() const {
    const Point2 A1 = ab[0], B1 = bc[0], C1 = ca[0];
    if (is("ooo")) {
      if (p_inside()) return Branch{disk, "13/ooo"};
      return std::nullopt;
    }
    if (is("eoi")) return Branch{L(A, B1) + T(A, C, B1), "13/eoi"};
    if (is("eio")) return Branch{L(A, B1) + T(A, B, B1), "13/eio"};
    if (is("oei")) return Branch{L(B, C1) + T(C, B, C1), "13/oei"};
    if (is("ieo")) return Branch{L(B, C1) + T(A, B, C1), "13/ieo"};
    if (is("ioe")) return Branch{L(C, A1) + T(C, A, A1), "13/ioe"};
    if (is("oie")) return Branch{L(C, A1) + T(C, B, A1), "13/oie"};
    if (is("ioo")) {
      if (same(P, A, A1, C1)) return Branch{L(A1, C1) + T(A, A1, C1), "13/ioo:same"};
      return Branch{disk - L(A1, C1) + T(A, A1, C1), "13/ioo:opposite"};
    }
    if (is("oio")) {
      if (same(P, B, A1, B1)) return Branch{L(A1, B1) + T(B, A1, B1), "13/oio:same"};
      return Branch{disk - L(A1, B1) + T(B, A1, B1), "13/oio:opposite"};
    }
    if (is("ooi")) {
      if (same(P, C, C1, B1)) return Branch{L(C1, B1) + T(C, C1, B1), "13/ooi:same"};
      return Branch{disk - L(C1, B1) + T(C, C1, B1), "13/ooi:opposite"};
    }
    return std::nullopt;
  }

  // Chord on AB, single contacts on BC and CA.
  std::optional<Branch> code14() const {
    const Point2 A1 = ab[0], A2 = ab[1], B1 = bc[0], C1 = ca[0];
    if (is("ooo")) {
      if (same(P, C, A1, A2)) return Branch{disk - L(A1, A2), "14/ooo:same"};
      return Branch{L(A1, A2), "14/ooo:opposite"};
    }
    if (is("ooi")) {
      return Branch{L(A1, C1) + L(B1, A2) + T(C, C1, A1) + T(C, A1, A2) + T(C, B1, A2), "14/ooi"};
    }
    if (is("eei")) return Branch{T(A, B, C), "14/eei"};
    if (is("eeo")) return Branch{L(A, B), "14/eeo"};
    if (is("oei")) return Branch{L(A1, C1) + T(B, C, A1) + T(C, A1, C1), "14/oei"};
    if (is("oeo")) {
      if (same(P, C, B, A)) return Branch{disk - L(A1, B), "14/oeo:same"};
      return Branch{L(A1, B), "14/oeo:opposite"};
    }
    if (is("eoi")) return Branch{L(B1, A2) + T(A, C, A2) + T(C, B1, A2), "14/eoi"};
    if (is("eoo")) {
      if (same(P, C, B, A)) return Branch{disk - L(A, A2), "14/eoo:same"};
      return Branch{L(A, A2), "14/eoo:opposite"};
    }
    return std::nullopt;
  }

  // Chords on AB and BC, single contact on CA.
  std::optional<Branch> code17() const {
    const Point2 A1 = ab[0], A2 = ab[1], B1 = bc[0], B2 = bc[1];
    if (is("ooo")) {
      const bool out = same(P, B, B2, A1);
      const double far_lens = out ? L(A1, B2) : disk - L(A1, B2);
      return Branch{L(B1, A2) + far_lens + T(B1, A2, B2) + T(A1, A2, B2),
                    out ? "17/ooo:same" : "17/ooo:opposite"};
    }
    if (is("eeo")) return Branch{L(A, B2) + T(A, B, B2), "17/eeo"};
    if (is("oee")) return Branch{L(C, A1) + T(B, C, A1), "17/oee"};
    if (is("oeo")) {
      const bool out = same(P, B, B2, A1);
      const double far_lens = out ? L(A1, B2) : disk - L(A1, B2);
      return Branch{far_lens + T(A1, B, B2), out ? "17/oeo:same" : "17/oeo:opposite"};
    }
    if (is("eoo")) return Branch{L(A1, B2) + L(A2, B1) + T(A, B2, B1) + T(A, B1, A2), "17/eoo"};
    if (is("ooe")) return Branch{L(A1, C) + L(A2, B1) + T(C, A2, A1) + T(C, B1, A2), "17/ooe"};
    return std::nullopt;
  }

  // Two contacts on every side.
  std::optional<Branch> code26() const {
    const Point2 A1 = ab[0], A2 = ab[1], B1 = bc[0], B2 = bc[1], C1 = ca[0], C2 = ca[1];
    if (is("ooo")) {
      return Branch{L(A2, B1) + L(B2, C1) + L(A1, C2) + T(A2, B1, A1) + T(A1, C2, B1) +
                        T(C2, B1, B2) + T(B2, C1, C2),
                    "26/ooo"};
    }
    if (is("eee")) return Branch{T(A, B, C), "26/eee"};
    if (is("eeo")) return Branch{L(C1, B2) + T(A, B, C1) + T(B, C1, B2), "26/eeo"};
    if (is("eoe")) return Branch{L(A2, B1) + T(A, C, A2) + T(C, A2, B1), "26/eoe"};
    if (is("oee")) return Branch{L(A1, C2) + T(C, B, A1) + T(C, A1, C2), "26/oee"};
    if (is("eoo")) {
      return Branch{L(A2, B1) + L(B2, C1) + T(A, A2, B1) + T(A, B1, B2) + T(A, C1, B2), "26/eoo"};
    }
    if (is("oeo")) {
      // Pentagon A1 B B2 C1 C2 fanned from B.
      return Branch{L(A1, C2) + L(C1, B2) + T(A1, B, C2) + T(B, C1, C2) + T(B, B2, C1), "26/oeo"};
    }
    if (is("ooe")) {
      return Branch{L(A1, C2) + L(A2, B1) + T(C, C2, A1) + T(C, A1, A2) + T(C, B1, A2), "26/ooe"};
    }
    return std::nullopt;
  }

 public:
  const Point2 A, B, C;
  const ContactList ab, bc, ca;
  const Point2 P;
  const double R;
  const double disk;

 private:
  Circle k_;
  EpsilonPolicy eps_;
  Triangle tri_;
  std::array<char, 3> pattern_{};
};

struct Attempt {
  int code;
  int representative;
  std::optional<Branch> branch;
};

inline Attempt attempt(const Triangle& t, const Circle& k, const EpsilonPolicy& eps) {
  const Classification cls = classify(t, k, eps);
  const CanonicalCase canon = canonicalize_case(cls.code, t, cls.ctx);
  const CaseEvaluator eval(canon, k, eps);
  return {cls.code.value(), canon.representative, eval.evaluate(canon.representative)};
}

}  // namespace detail

/// Area of triangle ∩ disk with the sub-case that produced it.
///
/// Configurations that only tolerance ambiguity can produce (no sub-case
/// matches) are retried with R nudged by +-2*eps.on_circle; failing that the
/// area comes from a 4000x4000 grid quadrature and `resolution` says so.
inline DiskTriangleResult disk_triangle_intersection(const Triangle& t, const Circle& k,
                                                     const EpsilonPolicy& eps) {
  if (!(k.radius > 0.0) || !std::isfinite(k.radius) || !is_finite(k.center)) {
    throw GeometryError(ErrorKind::InvalidArgument, "circle needs a finite positive radius");
  }
  DiskTriangleResult out;
  const double longest =
      std::max({distance(t.a, t.b), distance(t.b, t.c), distance(t.c, t.a)});
  if (triangle_area(t) <= eps.geometry * longest) {
    out.resolution = Resolution::degenerate;
    out.branch = "degenerate";
    return out;
  }

  detail::Attempt first = detail::attempt(t, k, eps);
  out.code = first.code;
  out.representative = first.representative;
  if (first.branch) {
    out.area = first.branch->area;
    out.branch = first.branch->label;
    return out;
  }
  for (const double sign : {1.0, -1.0}) {
    const Circle nudged{k.center, k.radius + sign * 2.0 * eps.on_circle};
    if (!(nudged.radius > 0.0)) continue;
    const detail::Attempt retry = detail::attempt(t, nudged, eps);
    if (retry.branch) {
      out.area = retry.branch->area;
      out.branch = retry.branch->label;
      out.resolution = Resolution::perturbed;
      return out;
    }
  }
  std::clog << "diskarea: warning: no sub-case for code " << out.code << " (triangle (" << t.a.x
            << "," << t.a.y << ") (" << t.b.x << "," << t.b.y << ") (" << t.c.x << "," << t.c.y
            << "), circle (" << k.center.x << "," << k.center.y << ") r=" << k.radius
            << "); using grid quadrature\n";
  const Polygon poly({t.a, t.b, t.c});
  out.area = grid_oracle(poly, k.center, k.radius, 4000).estimate;
  out.branch = "oracle";
  out.resolution = Resolution::oracle;
  return out;
}

inline double disk_triangle_area(const Triangle& t, const Circle& k, const EpsilonPolicy& eps) {
  return disk_triangle_intersection(t, k, eps).area;
}

inline double disk_triangle_area(const Triangle& t, const Circle& k) {
  return disk_triangle_area(t, k, EpsilonPolicy::for_scale(k.radius));
}

}  // namespace diskarea
