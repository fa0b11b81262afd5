#include "pantograph/hexagon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pantograph {

namespace {

// Extended-precision walk machinery for the realization. Double coordinates
// can only hold a point's hyperbolic position to about cosh(rho) * 1e-16,
// rho its distance from the imaginary axis, so the boundary walk runs in
// long double and the hexagon is re-centred before rounding to doubles.
using LC = std::complex<long double>;

struct LMat {
  long double a, b, c, d;
  LMat operator*(const LMat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  LC operator()(LC z) const { return (a * z + b) / (c * z + d); }
};

constexpr long double kLPi = 3.14159265358979323846264338327950288L;

LMat lmove_up(long double l) {
  const long double e = std::exp(l / 2);
  return {e, 0, 0, 1 / e};
}

LMat lrotate(long double phi) {
  const long double c = std::cos(phi / 2);
  const long double s = std::sin(phi / 2);
  return {c, s, -s, c};
}

}  // namespace

RightHexagon build_hexagon(double c1, double c2, double c3) {
  if (!(c1 > 0.0) || !(c2 > 0.0) || !(c3 > 0.0))
    throw std::domain_error("build_hexagon: sides must be positive");
  RightHexagon h;
  h.c = {c1, c2, c3};
  h.s = {hexagon_sixth_side(c3, c1, c2),   // s1, between c3 and c1
         hexagon_sixth_side(c2, c3, c1),   // s2, between c2 and c3
         hexagon_sixth_side(c1, c2, c3)};  // s3, between c1 and c2

  // Walk the boundary counterclockwise from the anchor, heading along c1;
  // a left quarter turn after each side keeps the interior on the left.
  const std::array<double, 6> sides = side_lengths(h);
  LMat g{1, 0, 0, 1};
  std::array<LC, 6> v;
  for (int k = 0; k < 6; ++k) {
    v[static_cast<size_t>(k)] = g(LC(0, 1));
    g = g * lmove_up(sides[static_cast<size_t>(k)]) * lrotate(kLPi / 2);
  }

  // Re-centre on the middle diagonal (anchor to v3): putting it on the
  // imaginary axis with its midpoint at i keeps every vertex within one
  // half-cuff of the axis, where double coordinates are faithful.
  const LC i1(0, 1);
  const LC q = v[3];
  const LC cayley = (q - i1) / (q + i1);
  const long double ang = std::atan2(cayley.imag(), cayley.real());
  const long double u = std::norm(q - i1) / (2 * q.imag());
  const long double e2 = std::acosh(1 + u);
  const LMat center = lmove_up(-e2 / 2) * lrotate(-ang);
  for (int k = 0; k < 6; ++k) {
    const LC z = center(v[static_cast<size_t>(k)]);
    h.vertices[static_cast<size_t>(k)] =
        HPoint{static_cast<double>(z.real()), static_cast<double>(z.imag())};
  }
  return h;
}

std::array<double, 6> side_lengths(const RightHexagon& h) {
  return {h.c[0], h.s[2], h.c[1], h.s[1], h.c[2], h.s[0]};
}

double closure_residual(const RightHexagon& h) {
  Isometry g;
  for (double len : side_lengths(h)) g = g * move_up(len) * rotate_i(kPi / 2);
  return g.dist_to_identity();
}

std::array<GeodesicTriangle, 4> triangulate(const RightHexagon& h) {
  const double c1 = h.c[0], c2 = h.c[1], c3 = h.c[2];
  const double s1 = h.s[0], s2 = h.s[1], s3 = h.s[2];

  // Outer right triangle at the c1 end of the fan: legs c1 (v0->v1) and
  // s3 (v1->v2), right angle at v1, hypotenuse e1 = v0..v2.
  const double e1 = right_triangle_hypotenuse(c1, s3);
  const auto t0_angles = right_triangle_angles(c1, s3, e1);  // {at v2, at v0}

  // Outer right triangle at the s1 end: legs c3 (v4->v5) and s1 (v5->v0),
  // right angle at v5, hypotenuse e3 = v0..v4.
  const double e3 = right_triangle_hypotenuse(c3, s1);
  const auto t3_angles = right_triangle_angles(c3, s1, e3);  // {at v0, at v4}

  // Inner triangle (v0,v2,v3): sides e1 and c2 enclose, at v2, what remains
  // of the hexagon's right angle after the outer triangle's share.
  const double gamma1 = kPi / 2 - t0_angles[0];
  const SasSolution t1 = triangle_solve_sas(e1, c2, gamma1);

  // Inner triangle (v0,v3,v4): sides s2 and e3 enclose the remainder at v4.
  const double gamma2 = kPi / 2 - t3_angles[1];
  const SasSolution t2 = triangle_solve_sas(s2, e3, gamma2);

  // Both inner triangles determine the middle diagonal e2 = v0..v3.
  if (std::abs(t1.a - t2.a) > 1e-9 * std::max(1.0, std::abs(t1.a)))
    throw ConsistencyError("triangulate: middle diagonal mismatch " +
                           std::to_string(t1.a) + " vs " + std::to_string(t2.a));
  const double e2 = 0.5 * (t1.a + t2.a);

  const auto v = [&h](int k) { return h.vertices[static_cast<size_t>(k)]; };
  std::array<GeodesicTriangle, 4> out;
  out[0] = {{s3, e1, c1},
            {t0_angles[1], kPi / 2, t0_angles[0]},
            {0, 1, 2},
            {v(0), v(1), v(2)}};
  out[1] = {{c2, e2, e1},
            {t1.beta, gamma1, t1.alpha},
            {0, 2, 3},
            {v(0), v(2), v(3)}};
  out[2] = {{s2, e3, e2},
            {t2.alpha, t2.beta, gamma2},
            {0, 3, 4},
            {v(0), v(3), v(4)}};
  out[3] = {{c3, s1, e3},
            {t3_angles[0], t3_angles[1], kPi / 2},
            {0, 4, 5},
            {v(0), v(4), v(5)}};
  return out;
}

std::array<double, 3> diagonal_lengths(const RightHexagon& h) {
  const auto tris = triangulate(h);
  // e1 is opposite vertex 1 of triangle 0; e2 opposite vertex 1 of triangle
  // 1; e3 opposite vertex 1 of triangle 2 (sides[1] in each record).
  return {tris[0].sides[1], tris[1].sides[1], tris[2].sides[1]};
}

HexagonDelta compare_hexagons(const RightHexagon& h0, const RightHexagon& h1) {
  HexagonDelta d;
  const auto push = [](double x0, double x1, double& add, double& mul) {
    add = std::abs(x1 - x0);
    mul = std::abs(x1 / x0 - 1.0);
  };
  const auto l0 = side_lengths(h0);
  const auto l1 = side_lengths(h1);
  for (int k = 0; k < 6; ++k) {
    push(l0[static_cast<size_t>(k)], l1[static_cast<size_t>(k)],
         d.side_add[static_cast<size_t>(k)], d.side_mul[static_cast<size_t>(k)]);
  }
  const auto e0 = diagonal_lengths(h0);
  const auto e1 = diagonal_lengths(h1);
  for (int k = 0; k < 3; ++k) {
    push(e0[static_cast<size_t>(k)], e1[static_cast<size_t>(k)],
         d.diag_add[static_cast<size_t>(k)], d.diag_mul[static_cast<size_t>(k)]);
  }
  const auto t0 = triangulate(h0);
  const auto t1 = triangulate(h1);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      const size_t k = static_cast<size_t>(3 * i + j);
      push(t0[static_cast<size_t>(i)].angles[static_cast<size_t>(j)],
           t1[static_cast<size_t>(i)].angles[static_cast<size_t>(j)],
           d.angle_add[k], d.angle_mul[k]);
    }
  }
  double m = 0.0;
  for (double x : d.side_mul) m = std::max(m, x);
  for (double x : d.diag_mul) m = std::max(m, x);
  for (double x : d.angle_mul) m = std::max(m, x);
  d.max_deviation = m;
  return d;
}

Geodesic side_line(const RightHexagon& h, int k) {
  if (k < 0 || k > 5) throw std::domain_error("side_line: side index out of range");
  return Geodesic::through(h.vertices[static_cast<size_t>(k)],
                           h.vertices[static_cast<size_t>((k + 1) % 6)]);
}

Isometry cuff_frame(const RightHexagon& h, int slot) {
  if (slot < 0 || slot > 2) throw std::domain_error("cuff_frame: slot out of range");
  return side_line(h, 2 * slot).frame;
}

}  // namespace pantograph
