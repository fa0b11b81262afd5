// Core upper-half-plane geometry: points, isometries, geodesics, stable
// distance/trig kernels, and the polar / Fermi coordinate charts.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace pantograph {

inline constexpr double kPi = 3.14159265358979323846;

// Thrown when computed quantities fail an internal cross-check (as opposed
// to a domain_error, which signals inputs outside the supported regime).
struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double norm() const { return std::hypot(x, y); }
};

struct Mat2 {
  // Row-major 2x2 real matrix.
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  Mat2() = default;
  Mat2(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  Mat2 inverse() const {
    const double dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
  }
  double max_abs() const;
};

struct HPoint {
  double x = 0.0;
  double y = 1.0;  // strictly positive
  HPoint() = default;
  HPoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y > 0.0)) throw std::domain_error("HPoint: y must be positive");
  }
  std::complex<double> z() const { return {x, y}; }
};

inline HPoint to_hpoint(std::complex<double> z) { return {z.real(), z.imag()}; }

// acosh(1+u) for u >= 0, accurate down to u ~ 0.
double acosh1p(double u);

// Hyperbolic distance in the upper half-plane.
double dist(const HPoint& p, const HPoint& q);

// Orientation-preserving isometry of the upper half-plane, stored as a real
// 2x2 matrix acting by Mobius transformation; kept normalized to det +1.
struct Isometry {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  Isometry() = default;
  Isometry(double a_, double b_, double c_, double d_);
  static Isometry raw(double a, double b, double c, double d);  // no renormalize
  Mat2 mat() const { return {a, b, c, d}; }

  HPoint operator()(const HPoint& p) const;
  std::complex<double> operator()(std::complex<double> z) const;
  // Derivative of the Mobius action at z (holomorphic, so a single complex
  // number d(gz)/dz = 1/(cz+d)^2).
  std::complex<double> deriv(std::complex<double> z) const;

  Isometry operator*(const Isometry& o) const;
  Isometry inverse() const { return Isometry::raw(d, -b, -c, a); }
  double trace() const { return a + d; }
  // max |entry| deviation from +/-Id, whichever sign is closer.
  double dist_to_identity() const;
};

// Translation by length l along the imaginary axis (i e^t -> i e^{t+l}).
Isometry move_up(double l);
// Rotation about i by angle phi, counterclockwise (derivative e^{i phi} at i).
Isometry rotate_i(double phi);
// Cayley-style flip: fixes i, reverses the imaginary axis' direction and
// swaps its sides (z -> -1/z).
Isometry flip();
// Maps i to p fixing the "up" direction (vertical translation of charts).
Isometry translate_to(const HPoint& p);

// Angle at p of the direction toward q, measured counterclockwise from the
// upward vertical at p. Range (-pi, pi].
double direction_angle(const HPoint& p, const HPoint& q);

// Isometry sending i to p with the upward vertical rotated to point along
// `angle` (same convention as direction_angle).
Isometry frame_at(const HPoint& p, double angle);

// Unit-speed angle between the two geodesic rays p->q1 and p->q2 at p,
// in [0, pi].
double angle_at(const HPoint& p, const HPoint& q1, const HPoint& q2);

// Oriented geodesic: the image of the (upward) imaginary axis under `frame`.
struct Geodesic {
  Isometry frame;  // i maps to the point at arclength 0

  HPoint point_at(double s) const;  // arclength parametrization
  // Signed distance of z from the line: negative on the left of the
  // direction of travel (x < 0 side in the frame's coordinates).
  double signed_dist(const HPoint& z) const;
  // Arclength coordinate of the foot of the perpendicular from z.
  double foot(const HPoint& z) const;
  static Geodesic through(const HPoint& p, const HPoint& q);
};

// Reflection in a geodesic, represented by its action as a Mobius map
// applied to the conjugate: z -> (a zbar + b)/(c zbar + d). Products of two
// reflections hand back the ordinary Isometry of the composition.
struct Reflection {
  // det is normalized to -1; action uses the conjugated variable.
  double a, b, c, d;
  explicit Reflection(const Geodesic& axis);
  HPoint operator()(const HPoint& p) const;
};

// Orientation-preserving composition r1 * r2 (apply r2 first).
Isometry compose_reflections(const Reflection& r1, const Reflection& r2);

// ---- hyperbolic trigonometry kernels ----------------------------------

// Given the three pairwise non-adjacent side lengths (c1, c2, c3) of a
// right-angled hexagon, returns the length of the side adjacent to both c1
// and c2 (the one "opposite" c3). Uses a cancellation-free rearrangement:
//   cosh(s) - 1 = (cosh(c1 - c2) + cosh c3) / (sinh c1 sinh c2).
double hexagon_sixth_side(double c1, double c2, double c3);

// Hypotenuse of a right triangle with legs a, b.
double right_triangle_hypotenuse(double a, double b);

// Acute angles of a right triangle with legs a, b and hypotenuse e:
// returns {alpha, beta} with alpha opposite leg a, beta opposite leg b.
// The side triple must satisfy cosh e = cosh a cosh b (relative tolerance
// 1e-6); inconsistent triples raise a domain error.
std::array<double, 2> right_triangle_angles(double a, double b, double e);

struct SasSolution {
  double a;      // side opposite the given angle
  double alpha;  // angle opposite side b
  double beta;   // angle opposite side c
};
// Solve a triangle from sides b, c enclosing angle gamma (SAS).
SasSolution triangle_solve_sas(double b, double c, double gamma);

// ---- polar chart around a point ----------------------------------------

// Geodesic polar coordinates: r = hyperbolic radius, theta = angle.
// Metric: dr^2 + sinh^2(r) dtheta^2.
struct PolarPoint {
  double r = 0.0;     // >= 0
  double theta = 0.0; // radians
};

// Chart centered at frame * i, with theta measured from the frame's "up"
// direction; `orient` = +1 for counterclockwise theta, -1 for clockwise.
struct PolarChart {
  Isometry frame;
  int orient = +1;

  PolarPoint to_polar(const HPoint& z) const;
  HPoint from_polar(const PolarPoint& q) const;
  // Jacobian d(r,theta)/d(x,y) at z (rows: dr, dtheta). Undefined at the
  // center (r = 0) -> domain error.
  Mat2 jacobian_to(const HPoint& z) const;
  // Jacobian d(x,y)/d(r,theta) at q.
  Mat2 jacobian_from(const PolarPoint& q) const;
};

// ---- Fermi chart along a geodesic ---------------------------------------

// Fermi coordinates along a geodesic: rho = signed perpendicular distance
// (negative on the left of the direction of travel), t = arclength of the
// foot point in units of the core length L.
// Metric: drho^2 + L^2 cosh^2(rho) dt^2.
struct FermiPoint {
  double rho = 0.0;
  double t = 0.0;
};

struct FermiChart {
  Geodesic axis;
  double L = 1.0;

  FermiPoint to_fermi(const HPoint& z) const;
  HPoint from_fermi(const FermiPoint& q) const;
  Mat2 jacobian_to(const HPoint& z) const;         // d(rho,t)/d(x,y)
  Mat2 jacobian_from(const FermiPoint& q) const;   // d(x,y)/d(rho,t)
};

// Euclidean->hyperbolic length distortion of a linear map J acting on
// tangent vectors at src (metric |v|/y): ratio = (|J v| / y_dst)/(|v| / y_src).
double metric_ratio(const Mat2& J, const HPoint& src, const HPoint& dst, const Vec2& v);

// Half-width of the standard embedded collar around a closed geodesic of
// length L: w(L) = asinh(1 / sinh(L/2)).
double collar_width(double L);

}  // namespace pantograph
