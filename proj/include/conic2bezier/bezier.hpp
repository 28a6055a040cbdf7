#pragma once

#include <cstddef>
#include <vector>

#include "conic2bezier/geometry.hpp"

namespace conic2bezier {

/// Cubic Bezier curve (p1, c1, c2, p2).
struct CubicSegment {
    Point2 p1;
    Point2 c1;
    Point2 c2;
    Point2 p2;

    friend constexpr bool operator==(const CubicSegment&, const CubicSegment&) = default;
};

/// An arc of a conjugate-diameter ellipse. astart is measured from P toward
/// Q; asweep has the same sign convention. Both are in radians.
struct ArcRequest {
    ConjugateEllipse ellipse;
    double astart = 0.0;
    double asweep = 0.0;
};

/// Piecewise cubic curve. Consecutive segments share their joint point by
/// value; `start` is always set, even when there are no segments.
struct BezierChain {
    Point2 start;
    std::vector<CubicSegment> segments;

    bool empty() const { return segments.empty(); }
    std::size_t size() const { return segments.size(); }
    Point2 end() const { return segments.empty() ? start : segments.back().p2; }
};

inline constexpr int kDefaultEllipseSegments = 5;
inline constexpr double kDefaultMaxPhi = kPi / 2;
inline constexpr double kMinMaxPhi = 1e-3;

/// Control-arm length factor (4/3) tan(phi/4) for a unit-radius arc of phi
/// radians. Defined on (0, 2 pi).
double tau(double phi);

/// Bernstein-form evaluation for t in [0, 1].
Point2 eval_cubic(const CubicSegment& s, double t);

/// Closed ellipse as `nsegs` arcs of 2 pi / nsegs, starting and ending at P.
/// Each joint is G1: c1 of a segment is the previous c2 reflected through
/// the shared point. Requires nsegs >= 2.
BezierChain ellipse_to_beziers(const ConjugateEllipse& e, int nsegs = kDefaultEllipseSegments);

/// Four quarter arcs using the fixed recurrence (P, Q) -> (Q, -P) and the
/// literal constant 0.5522847498307934.
BezierChain ellipse_to_beziers_quarters(const ConjugateEllipse& e);

/// Eight eighth arcs using the shared sine/cosine 0.7071067811865475 and
/// the literal constant 0.2652164898395440.
BezierChain ellipse_to_beziers_eighths(const ConjugateEllipse& e);

/// Elliptical arc split into the fewest equal pieces no larger than
/// `maxphi`. A negative sweep runs from the start point away from Q; sweeps
/// beyond a full turn are clamped to 2 pi. A zero sweep yields an empty chain
/// whose start point is still the rotated P.
///
/// maxphi must lie in (0, pi/2]; values below kMinMaxPhi are raised to it.
BezierChain arc_to_beziers(const ArcRequest& req, double maxphi = kDefaultMaxPhi);

/// One segment approximating the arc of `phi` radians that starts at P and
/// heads toward Q. phi in (0, 2 pi).
CubicSegment single_arc_segment(const ConjugateEllipse& e, double phi);

/// Upper bound on the semi-major axis: |P - C| + |Q - C|, tightened to the
/// radius when P - C and Q - C are perpendicular and of equal length.
double radius_bound(const ConjugateEllipse& e);

/// Smallest n >= 1 for which radius_bound(e) * eps_max(sweep / n) <= tol.
/// sweep in (0, 2 pi]; tol > 0.
int segments_for_tolerance(const ConjugateEllipse& e, double sweep, double tol);

/// Applies `t` to every point of the chain.
BezierChain transform_chain(const AffineMap2& t, const BezierChain& chain);

/// Signed area of the polygon through the chain's on-curve points.
/// Positive when the points run counterclockwise in a y-up frame.
double on_curve_signed_area(const BezierChain& chain);

}  // namespace conic2bezier
