// Right-angled hexagons: solving from three alternating (half-cuff) sides,
// concrete upper-half-plane realizations, fan triangulation from the anchor
// vertex, and side/diagonal/angle comparison of two solved hexagons.
//
// Conventions (fixed here and relied on downstream):
//   * vertices[0..5] are traversed counterclockwise (interior on the left),
//     with side k running from vertices[k] to vertices[(k+1) % 6];
//   * side lengths in traversal order are [c1, s3, c2, s2, c3, s1], so the
//     cuff sides are sides 0/2/4 and seam s_j sits between the two cuff
//     sides other than c_j;
//   * the anchor vertex is vertices[0], the corner between s1 and c1;
//   * the realization is canonical: vertices[0] = i and side c1 runs up the
//     imaginary axis, which makes equal inputs yield bit-identical hexagons;
//   * diagonals e1, e2, e3 join the anchor to vertices 2, 3, 4; the fan has
//     right triangles at its two ends (legs c1,s3 and legs c3,s1) and two
//     inner triangles solved by SAS, both of which determine e2 — the two
//     values are cross-checked and a mismatch raises ConsistencyError.
#pragma once

#include <array>

#include "pantograph/hyperbolic.hpp"

namespace pantograph {

struct RightHexagon {
  std::array<double, 3> c;         // half-cuff side lengths c1, c2, c3
  std::array<double, 3> s;         // seam side lengths s1, s2, s3
  std::array<HPoint, 6> vertices;  // ccw realization, anchor first
};

// Geodesic triangle with vertices listed counterclockwise, anchor first.
// sides[k] is the length of the side opposite vertices k; angles[k] is the
// interior angle at vertex k.
struct GeodesicTriangle {
  std::array<double, 3> sides;
  std::array<double, 3> angles;
  std::array<int, 3> vertex_labels;    // hexagon vertex ids, [0] = anchor
  std::array<HPoint, 3> realization;   // positions matching vertex_labels
};

// Per-side (traversal order), per-diagonal (e1,e2,e3) and per-angle
// (triangle-major, vertex-minor) deviations between two solved hexagons,
// both additive |x1 - x0| and multiplicative |x1/x0 - 1|.
struct HexagonDelta {
  std::array<double, 6> side_add{}, side_mul{};
  std::array<double, 3> diag_add{}, diag_mul{};
  std::array<double, 12> angle_add{}, angle_mul{};
  double max_deviation = 0.0;  // max over all multiplicative entries
};

// Solve the right-angled hexagon with alternating sides c1, c2, c3 and
// realize it canonically in the upper half-plane. Inputs must be positive.
RightHexagon build_hexagon(double c1, double c2, double c3);

// Lengths of the six sides in traversal order [c1, s3, c2, s2, c3, s1].
std::array<double, 6> side_lengths(const RightHexagon& h);

// Compose the six side-translations alternated with right-angle turns, as
// read off the hexagon's side-length fields; return the distance of the
// product from the identity. Near zero iff the sides close up a right-angled
// hexagon. Independent of the stored realization (conjugation-invariant).
double closure_residual(const RightHexagon& h);

// Fan triangulation from the anchor vertex: triangles (v0,v1,v2),
// (v0,v2,v3), (v0,v3,v4), (v0,v4,v5) in this order.
std::array<GeodesicTriangle, 4> triangulate(const RightHexagon& h);

// Diagonal lengths {e1, e2, e3} from the solved triangulation.
std::array<double, 3> diagonal_lengths(const RightHexagon& h);

// Deviations between corresponding sides, diagonals and triangulation
// angles of two solved hexagons.
HexagonDelta compare_hexagons(const RightHexagon& h0, const RightHexagon& h1);

// Oriented geodesic along side k, from vertices[k] to vertices[(k+1)%6].
Geodesic side_line(const RightHexagon& h, int k);

// Frame at the start of the cuff side of slot s in {0,1,2} (sides 0, 2, 4):
// maps i to the side's start vertex with "up" pointing along the side.
Isometry cuff_frame(const RightHexagon& h, int slot);

}  // namespace pantograph
