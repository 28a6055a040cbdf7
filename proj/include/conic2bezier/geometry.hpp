#pragma once

#include <utility>

namespace conic2bezier {

inline constexpr double kPi = 3.141592653589793;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
    friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

double norm(Point2 v);
constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
constexpr Point2 midpoint(Point2 a, Point2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

bool is_finite(Point2 p);

/// Throws InvalidInput naming `what` when `p` has a NaN or infinite coordinate.
void require_finite(Point2 p, const char* what);
void require_finite(double v, const char* what);

/// Ellipse given by its center and the end points of a pair of conjugate
/// diameters. The map u -> C + [P-C | Q-C] u sends the unit circle onto it,
/// so (1,0) lands on P and (0,1) on Q. Collinear or coincident points are
/// allowed and describe a flattened ellipse.
struct ConjugateEllipse {
    Point2 C;
    Point2 P;
    Point2 Q;

    friend constexpr bool operator==(const ConjugateEllipse&, const ConjugateEllipse&) = default;
};

/// x' = m11 x + m12 y + tx, y' = m21 x + m22 y + ty.
struct AffineMap2 {
    double m11 = 1.0, m12 = 0.0;
    double m21 = 0.0, m22 = 1.0;
    double tx = 0.0, ty = 0.0;

    static constexpr AffineMap2 identity() { return {}; }
    static constexpr AffineMap2 scale(double sx, double sy) { return {sx, 0.0, 0.0, sy, 0.0, 0.0}; }
    static constexpr AffineMap2 translate(double dx, double dy) { return {1.0, 0.0, 0.0, 1.0, dx, dy}; }

    constexpr double det() const { return m11 * m22 - m12 * m21; }
    constexpr bool reverses_orientation() const { return det() < 0.0; }

    constexpr Point2 operator()(Point2 p) const {
        return {m11 * p.x + m12 * p.y + tx, m21 * p.x + m22 * p.y + ty};
    }

    friend constexpr bool operator==(const AffineMap2&, const AffineMap2&) = default;
};

/// Inscribed ellipse of the parallelogram with consecutive vertices v0, v1, v2.
ConjugateEllipse ellipse_from_parallelogram(Point2 v0, Point2 v1, Point2 v2);

/// Circumscribed ellipse of the parallelogram centered at `center` with
/// adjacent vertices w0, w1. Those vertices are conjugate-diameter end points.
ConjugateEllipse ellipse_from_inscribed_parallelogram(Point2 center, Point2 w0, Point2 w1);

/// Conventional center / radii / rotation description. The principal axes
/// become the conjugate pair.
ConjugateEllipse ellipse_from_axes(Point2 center, double rx, double ry, double rotation);

/// Rotates a center-relative conjugate pair by `phi` around its ellipse:
/// P' = P cos phi + Q sin phi, Q' = Q cos phi - P sin phi.
std::pair<Point2, Point2> rotate_conjugate_pair(Point2 p, Point2 q, double phi);

/// C + M u, where the columns of M are P - C and Q - C.
Point2 map_unit_to_ellipse(const ConjugateEllipse& e, Point2 u);

/// True when |det M| exceeds the invertibility threshold used by
/// ellipse_membership.
bool is_invertible(const ConjugateEllipse& e);

/// Signed residual |M^-1 (pt - C)| - 1: zero on the ellipse, negative
/// inside, positive outside. Throws DegenerateEllipse when M is not
/// invertible.
double ellipse_membership(const ConjugateEllipse& e, Point2 pt);

ConjugateEllipse apply_affine(const AffineMap2& t, const ConjugateEllipse& e);

}  // namespace conic2bezier
