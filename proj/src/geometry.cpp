#include "conic2bezier/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "conic2bezier/errors.hpp"

namespace conic2bezier {

namespace {

// |det M| must exceed this fraction of the squared longer column.
constexpr double kDegeneracyRatio = 1e-12;

void require_finite(const ConjugateEllipse& e) {
    require_finite(e.C, "ellipse center C");
    require_finite(e.P, "ellipse point P");
    require_finite(e.Q, "ellipse point Q");
}

}  // namespace

double norm(Point2 v) { return std::hypot(v.x, v.y); }

bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void require_finite(Point2 p, const char* what) {
    if (!is_finite(p)) {
        throw InvalidInput(std::string(what) + " must have finite coordinates");
    }
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw InvalidInput(std::string(what) + " must be finite");
    }
}

ConjugateEllipse ellipse_from_parallelogram(Point2 v0, Point2 v1, Point2 v2) {
    require_finite(v0, "vertex V0");
    require_finite(v1, "vertex V1");
    require_finite(v2, "vertex V2");
    return {midpoint(v0, v2), midpoint(v0, v1), midpoint(v1, v2)};
}

ConjugateEllipse ellipse_from_inscribed_parallelogram(Point2 center, Point2 w0, Point2 w1) {
    require_finite(center, "center");
    require_finite(w0, "vertex W0");
    require_finite(w1, "vertex W1");
    return {center, w0, w1};
}

ConjugateEllipse ellipse_from_axes(Point2 center, double rx, double ry, double rotation) {
    require_finite(center, "center");
    require_finite(rx, "rx");
    require_finite(ry, "ry");
    require_finite(rotation, "rotation");
    if (rx < 0.0 || ry < 0.0) {
        throw InvalidInput("radii must be non-negative");
    }
    const double c = std::cos(rotation);
    const double s = std::sin(rotation);
    return {center, center + rx * Point2{c, s}, center + ry * Point2{-s, c}};
}

std::pair<Point2, Point2> rotate_conjugate_pair(Point2 p, Point2 q, double phi) {
    require_finite(p, "P");
    require_finite(q, "Q");
    require_finite(phi, "rotation angle");
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {{p.x * c + q.x * s, p.y * c + q.y * s}, {q.x * c - p.x * s, q.y * c - p.y * s}};
}

Point2 map_unit_to_ellipse(const ConjugateEllipse& e, Point2 u) {
    require_finite(e);
    require_finite(u, "unit-frame point");
    const Point2 a = e.P - e.C;
    const Point2 b = e.Q - e.C;
    return {e.C.x + a.x * u.x + b.x * u.y, e.C.y + a.y * u.x + b.y * u.y};
}

bool is_invertible(const ConjugateEllipse& e) {
    const Point2 a = e.P - e.C;
    const Point2 b = e.Q - e.C;
    const double scale = std::max(norm(a), norm(b));
    return std::abs(cross(a, b)) > kDegeneracyRatio * scale * scale;
}

double ellipse_membership(const ConjugateEllipse& e, Point2 pt) {
    require_finite(e);
    require_finite(pt, "point");
    if (!is_invertible(e)) {
        throw DegenerateEllipse("conjugate diameters are collinear or zero; no inverse map");
    }
    const Point2 a = e.P - e.C;
    const Point2 b = e.Q - e.C;
    const Point2 d = pt - e.C;
    const double det = cross(a, b);
    // Cramer's rule for [a | b] u = d.
    const Point2 u{cross(d, b) / det, cross(a, d) / det};
    return norm(u) - 1.0;
}

ConjugateEllipse apply_affine(const AffineMap2& t, const ConjugateEllipse& e) {
    require_finite(e);
    for (double v : {t.m11, t.m12, t.m21, t.m22, t.tx, t.ty}) {
        require_finite(v, "affine map entry");
    }
    return {t(e.C), t(e.P), t(e.Q)};
}

}  // namespace conic2bezier
