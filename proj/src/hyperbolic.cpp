#include "pantograph/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

namespace pantograph {

namespace {

double clamp_unit(double x) { return std::max(-1.0, std::min(1.0, x)); }

// 2 sinh^2(x/2) = cosh(x) - 1, computed without cancellation.
double coshm1(double x) {
  const double s = std::sinh(0.5 * x);
  return 2.0 * s * s;
}

// Wrap an angle into (-pi, pi].
double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

// Real 2x2 matrix representing multiplication by the complex number c.
Mat2 conformal(std::complex<double> c) {
  return {c.real(), -c.imag(), c.imag(), c.real()};
}

}  // namespace

double Mat2::max_abs() const {
  return std::max(std::max(std::abs(a), std::abs(b)),
                  std::max(std::abs(c), std::abs(d)));
}

double acosh1p(double u) {
  if (u < 0.0) {
    if (u > -1e-12) return 0.0;  // forgive roundoff from stable rearrangements
    throw std::domain_error("acosh1p: negative argument");
  }
  if (u < 1e-4) return std::log1p(u + std::sqrt(u * (u + 2.0)));
  return std::acosh(1.0 + u);
}

double dist(const HPoint& p, const HPoint& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  const double u = (dx * dx + dy * dy) / (2.0 * p.y * q.y);
  return acosh1p(u);
}

Isometry::Isometry(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
  const double det = a * d - b * c;
  if (!(det > 0.0)) throw std::domain_error("Isometry: determinant must be positive");
  const double s = 1.0 / std::sqrt(det);
  a *= s;
  b *= s;
  c *= s;
  d *= s;
}

Isometry Isometry::raw(double a, double b, double c, double d) {
  Isometry g;
  g.a = a;
  g.b = b;
  g.c = c;
  g.d = d;
  return g;
}

HPoint Isometry::operator()(const HPoint& p) const {
  return to_hpoint((*this)(p.z()));
}

std::complex<double> Isometry::operator()(std::complex<double> z) const {
  return (a * z + b) / (c * z + d);
}

std::complex<double> Isometry::deriv(std::complex<double> z) const {
  const std::complex<double> w = c * z + d;
  return 1.0 / (w * w);
}

Isometry Isometry::operator*(const Isometry& o) const {
  return Isometry(a * o.a + b * o.c, a * o.b + b * o.d,
                  c * o.a + d * o.c, c * o.b + d * o.d);
}

double Isometry::dist_to_identity() const {
  const double plus = std::max(std::max(std::abs(a - 1.0), std::abs(d - 1.0)),
                               std::max(std::abs(b), std::abs(c)));
  const double minus = std::max(std::max(std::abs(a + 1.0), std::abs(d + 1.0)),
                                std::max(std::abs(b), std::abs(c)));
  return std::min(plus, minus);
}

Isometry move_up(double l) {
  const double e = std::exp(0.5 * l);
  return Isometry(e, 0.0, 0.0, 1.0 / e);
}

Isometry rotate_i(double phi) {
  const double c = std::cos(0.5 * phi);
  const double s = std::sin(0.5 * phi);
  return Isometry(c, s, -s, c);
}

Isometry flip() { return Isometry(0.0, -1.0, 1.0, 0.0); }

Isometry translate_to(const HPoint& p) {
  const double sy = std::sqrt(p.y);
  return Isometry(sy, p.x / sy, 0.0, 1.0 / sy);
}

double direction_angle(const HPoint& p, const HPoint& q) {
  const std::complex<double> zp = p.z();
  const std::complex<double> zq = q.z();
  const std::complex<double> w = (zq - zp) / (zq - std::conj(zp));
  const double a = std::arg(w);
  // std::arg can return -pi on the cut (negative real, -0 imaginary);
  // keep the documented range (-pi, pi].
  return (a <= -kPi) ? kPi : a;
}

Isometry frame_at(const HPoint& p, double angle) {
  return translate_to(p) * rotate_i(angle);
}

double angle_at(const HPoint& p, const HPoint& q1, const HPoint& q2) {
  const double d = wrap_angle(direction_angle(p, q1) - direction_angle(p, q2));
  return std::abs(d);
}

HPoint Geodesic::point_at(double s) const {
  return to_hpoint(frame(std::complex<double>(0.0, std::exp(s))));
}

double Geodesic::signed_dist(const HPoint& z) const {
  const std::complex<double> w = frame.inverse()(z.z());
  return std::asinh(w.real() / w.imag());
}

double Geodesic::foot(const HPoint& z) const {
  const std::complex<double> w = frame.inverse()(z.z());
  return 0.5 * std::log(std::norm(w));
}

Geodesic Geodesic::through(const HPoint& p, const HPoint& q) {
  if (dist(p, q) <= 0.0) throw std::domain_error("Geodesic::through: coincident points");
  return Geodesic{frame_at(p, direction_angle(p, q))};
}

Reflection::Reflection(const Geodesic& axis) {
  // Conjugate the reflection z -> -conj(z) (matrix diag(-1,1) acting on the
  // conjugated variable) by the axis frame. All matrices are real, so the
  // anti-holomorphic bookkeeping reduces to ordinary products.
  const Mat2 f = axis.frame.mat();
  const Mat2 m = f * Mat2{-1.0, 0.0, 0.0, 1.0} * f.inverse();
  const double det = m.det();
  const double s = 1.0 / std::sqrt(-det);
  a = m.a * s;
  b = m.b * s;
  c = m.c * s;
  d = m.d * s;
}

HPoint Reflection::operator()(const HPoint& p) const {
  const std::complex<double> zbar = std::conj(p.z());
  return to_hpoint((a * zbar + b) / (c * zbar + d));
}

Isometry compose_reflections(const Reflection& r1, const Reflection& r2) {
  // (r1 o r2)(z) = M1 * conj(M2 * conj(z)) = (M1 M2) z for real matrices.
  return Isometry(r1.a * r2.a + r1.b * r2.c, r1.a * r2.b + r1.b * r2.d,
                  r1.c * r2.a + r1.d * r2.c, r1.c * r2.b + r1.d * r2.d);
}

// ---- hyperbolic trigonometry kernels ----------------------------------

double hexagon_sixth_side(double c1, double c2, double c3) {
  if (!(c1 > 0.0) || !(c2 > 0.0) || !(c3 > 0.0))
    throw std::domain_error("hexagon_sixth_side: sides must be positive");
  const double u = (std::cosh(c1 - c2) + std::cosh(c3)) /
                   (std::sinh(c1) * std::sinh(c2));
  return acosh1p(u);
}

double right_triangle_hypotenuse(double a, double b) {
  if (a < 0.0 || b < 0.0)
    throw std::domain_error("right_triangle_hypotenuse: negative leg");
  // cosh(e) - 1 = (cosh a - 1) cosh b + (cosh b - 1), cancellation-free.
  const double u = coshm1(a) * std::cosh(b) + coshm1(b);
  return acosh1p(u);
}

std::array<double, 2> right_triangle_angles(double a, double b, double e) {
  if (!(a > 0.0) || !(b > 0.0) || !(e > 0.0))
    throw std::domain_error("right_triangle_angles: sides must be positive");
  const double lhs = std::cosh(e);
  const double rhs = std::cosh(a) * std::cosh(b);
  if (std::abs(lhs - rhs) > 1e-6 * std::max(1.0, rhs))
    throw std::domain_error("right_triangle_angles: sides violate cosh(e) = cosh(a)cosh(b)");
  const double se = std::sinh(e);
  const double alpha = std::asin(clamp_unit(std::sinh(a) / se));
  const double beta = std::asin(clamp_unit(std::sinh(b) / se));
  return {alpha, beta};
}

SasSolution triangle_solve_sas(double b, double c, double gamma) {
  if (!(b > 0.0) || !(c > 0.0))
    throw std::domain_error("triangle_solve_sas: sides must be positive");
  if (!(gamma > 0.0) || !(gamma < kPi))
    throw std::domain_error("triangle_solve_sas: angle must lie in (0, pi)");
  const double sb = std::sinh(b);
  const double sc = std::sinh(c);
  const double sg = std::sin(0.5 * gamma);
  // cosh(a) - 1 = 2 sinh^2((b-c)/2) + 2 sinh b sinh c sin^2(gamma/2).
  const double u = coshm1(b - c) + 2.0 * sb * sc * sg * sg;
  const double a = acosh1p(u);
  const double sa = std::sinh(a);
  const double alpha =
      std::acos(clamp_unit((std::cosh(a) * std::cosh(c) - std::cosh(b)) / (sa * sc)));
  const double beta =
      std::acos(clamp_unit((std::cosh(a) * std::cosh(b) - std::cosh(c)) / (sa * sb)));
  return {a, alpha, beta};
}

// ---- polar chart --------------------------------------------------------

PolarPoint PolarChart::to_polar(const HPoint& z) const {
  const std::complex<double> w = frame.inverse()(z.z());
  const std::complex<double> zeta = (w - std::complex<double>(0.0, 1.0)) /
                                    (w + std::complex<double>(0.0, 1.0));
  const double t = std::abs(zeta);
  const double r = (t < 1e-8) ? 2.0 * t : std::log1p(2.0 * t / (1.0 - t));
  const double theta = (t == 0.0) ? 0.0 : orient * std::arg(zeta);
  return {r, theta};
}

HPoint PolarChart::from_polar(const PolarPoint& q) const {
  const double t = std::tanh(0.5 * q.r);
  const std::complex<double> zeta =
      t * std::exp(std::complex<double>(0.0, orient * q.theta));
  const std::complex<double> w = std::complex<double>(0.0, 1.0) *
                                 (1.0 + zeta) / (1.0 - zeta);
  return to_hpoint(frame(w));
}

Mat2 PolarChart::jacobian_to(const HPoint& z) const {
  const Isometry inv = frame.inverse();
  const std::complex<double> w = inv(z.z());
  const std::complex<double> dw = inv.deriv(z.z());
  const std::complex<double> i1(0.0, 1.0);
  const std::complex<double> zeta = (w - i1) / (w + i1);
  const std::complex<double> dzeta = 2.0 * i1 / ((w + i1) * (w + i1)) * dw;
  const double xi = zeta.real(), eta = zeta.imag();
  const double t = std::abs(zeta);
  if (t < 1e-14) throw std::domain_error("PolarChart::jacobian_to: chart center");
  // r = 2 atanh|zeta|, theta = orient * atan2(eta, xi).
  const double gr = 2.0 / ((1.0 - t * t) * t);
  const Mat2 polar_of_zeta{gr * xi, gr * eta,
                           -orient * eta / (t * t), orient * xi / (t * t)};
  return polar_of_zeta * conformal(dzeta);
}

Mat2 PolarChart::jacobian_from(const PolarPoint& q) const {
  const double t = std::tanh(0.5 * q.r);
  const double dt = 0.5 * (1.0 - t * t);  // d tanh(r/2) / dr
  const std::complex<double> phase =
      std::exp(std::complex<double>(0.0, orient * q.theta));
  const std::complex<double> zeta = t * phase;
  const std::complex<double> dzeta_dr = dt * phase;
  const std::complex<double> dzeta_dth =
      std::complex<double>(0.0, static_cast<double>(orient)) * zeta;
  const std::complex<double> one(1.0, 0.0);
  const std::complex<double> dw_dzeta =
      2.0 * std::complex<double>(0.0, 1.0) / ((one - zeta) * (one - zeta));
  const std::complex<double> w = std::complex<double>(0.0, 1.0) *
                                 (1.0 + zeta) / (1.0 - zeta);
  const std::complex<double> dz = frame.deriv(w);
  const std::complex<double> col_r = dz * dw_dzeta * dzeta_dr;
  const std::complex<double> col_th = dz * dw_dzeta * dzeta_dth;
  return {col_r.real(), col_th.real(), col_r.imag(), col_th.imag()};
}

// ---- Fermi chart ---------------------------------------------------------

FermiPoint FermiChart::to_fermi(const HPoint& z) const {
  const std::complex<double> w = axis.frame.inverse()(z.z());
  const double rho = std::asinh(w.real() / w.imag());
  const double t = 0.5 * std::log(std::norm(w)) / L;
  return {rho, t};
}

HPoint FermiChart::from_fermi(const FermiPoint& q) const {
  const double sech = 1.0 / std::cosh(q.rho);
  const std::complex<double> w =
      std::exp(q.t * L) * std::complex<double>(std::tanh(q.rho), sech);
  return to_hpoint(axis.frame(w));
}

Mat2 FermiChart::jacobian_to(const HPoint& z) const {
  const Isometry inv = axis.frame.inverse();
  const std::complex<double> w = inv(z.z());
  const std::complex<double> dw = inv.deriv(z.z());
  const double x = w.real(), y = w.imag();
  const double n2 = x * x + y * y;
  const double rn = std::sqrt(n2);
  const Mat2 fermi_of_w{y / (y * rn), -x / (y * rn),
                        x / (L * n2), y / (L * n2)};
  return fermi_of_w * conformal(dw);
}

Mat2 FermiChart::jacobian_from(const FermiPoint& q) const {
  const double sech = 1.0 / std::cosh(q.rho);
  const double tanh_r = std::tanh(q.rho);
  const double e = std::exp(q.t * L);
  const std::complex<double> w(e * tanh_r, e * sech);
  const std::complex<double> dw_drho =
      e * sech * std::complex<double>(sech, -tanh_r);
  const std::complex<double> dw_dt = L * w;
  const std::complex<double> dz = axis.frame.deriv(w);
  const std::complex<double> col_rho = dz * dw_drho;
  const std::complex<double> col_t = dz * dw_dt;
  return {col_rho.real(), col_t.real(), col_rho.imag(), col_t.imag()};
}

double metric_ratio(const Mat2& J, const HPoint& src, const HPoint& dst, const Vec2& v) {
  const double nv = v.norm();
  if (!(nv > 0.0)) throw std::domain_error("metric_ratio: zero vector");
  const Vec2 u = J * v;
  return (u.norm() / dst.y) / (nv / src.y);
}

double collar_width(double L) {
  if (!(L > 0.0)) throw std::domain_error("collar_width: length must be positive");
  return std::asinh(1.0 / std::sinh(0.5 * L));
}

}  // namespace pantograph
