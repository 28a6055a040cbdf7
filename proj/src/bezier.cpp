#include "conic2bezier/bezier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "conic2bezier/error_analysis.hpp"
#include "conic2bezier/errors.hpp"

namespace conic2bezier {

namespace {

// segments_for_tolerance gives up beyond this many pieces.
constexpr int kMaxToleranceSegments = 1 << 24;

void require_finite(const ConjugateEllipse& e) {
    require_finite(e.C, "ellipse center C");
    require_finite(e.P, "ellipse point P");
    require_finite(e.Q, "ellipse point Q");
}

// Shared loop of the full-ellipse and arc generators. `p` and `q` are the
// center-relative conjugate pair at the chain start; `start` is the
// absolute start point.
BezierChain trace_arcs(Point2 center, Point2 p, Point2 q, Point2 start, double phi, int nsegs) {
    const double cosp = std::cos(phi);
    const double sinp = std::sin(phi);
    const double t = tau(phi);

    BezierChain chain;
    chain.start = start;
    chain.segments.reserve(static_cast<std::size_t>(nsegs));

    Point2 p2 = start;
    Point2 c2 = p2 - t * q;
    for (int i = 0; i < nsegs; ++i) {
        const Point2 p1 = p2;
        const Point2 c1 = p1 + (p1 - c2);
        const Point2 next_p{p.x * cosp + q.x * sinp, p.y * cosp + q.y * sinp};
        q = Point2{q.x * cosp - p.x * sinp, q.y * cosp - p.y * sinp};
        p = next_p;
        p2 = p + center;
        c2 = p2 - t * q;
        chain.segments.push_back({p1, c1, c2, p2});
    }
    return chain;
}

}  // namespace

double tau(double phi) {
    require_finite(phi, "phi");
    if (!(phi > 0.0 && phi < kTwoPi)) {
        throw InvalidInput("tau: phi must lie in (0, 2*pi)");
    }
    return (4.0 / 3.0) * std::tan(phi / 4.0);
}

Point2 eval_cubic(const CubicSegment& s, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw InvalidInput("eval_cubic: t must lie in [0, 1]");
    }
    const double u = 1.0 - t;
    const double b0 = u * u * u;
    const double b1 = 3.0 * t * u * u;
    const double b2 = 3.0 * t * t * u;
    const double b3 = t * t * t;
    return {b0 * s.p1.x + b1 * s.c1.x + b2 * s.c2.x + b3 * s.p2.x,
            b0 * s.p1.y + b1 * s.c1.y + b2 * s.c2.y + b3 * s.p2.y};
}

BezierChain ellipse_to_beziers(const ConjugateEllipse& e, int nsegs) {
    require_finite(e);
    if (nsegs < 2) {
        throw InvalidInput("ellipse_to_beziers: nsegs must be at least 2");
    }
    const double phi = kTwoPi / nsegs;
    return trace_arcs(e.C, e.P - e.C, e.Q - e.C, e.P, phi, nsegs);
}

BezierChain ellipse_to_beziers_quarters(const ConjugateEllipse& e) {
    require_finite(e);
    constexpr double t = 0.5522847498307934;

    BezierChain chain;
    chain.start = e.P;
    chain.segments.reserve(4);

    Point2 p = e.P - e.C;
    Point2 q = e.Q - e.C;
    Point2 p2 = e.P;
    Point2 c2 = p2 - t * q;
    for (int i = 0; i < 4; ++i) {
        const Point2 p1 = p2;
        const Point2 c1 = p1 + (p1 - c2);
        const Point2 tmp = q;
        q = -p;
        p = tmp;
        p2 = p + e.C;
        c2 = p2 - t * q;
        chain.segments.push_back({p1, c1, c2, p2});
    }
    return chain;
}

BezierChain ellipse_to_beziers_eighths(const ConjugateEllipse& e) {
    require_finite(e);
    constexpr double t = 0.2652164898395440;
    constexpr double sincos = 0.7071067811865475;

    BezierChain chain;
    chain.start = e.P;
    chain.segments.reserve(8);

    Point2 p = e.P - e.C;
    Point2 q = e.Q - e.C;
    Point2 p2 = e.P;
    Point2 c2 = p2 - t * q;
    for (int i = 0; i < 8; ++i) {
        const Point2 p1 = p2;
        const Point2 c1 = p1 + (p1 - c2);
        const Point2 tmp{sincos * (p.x + q.x), sincos * (p.y + q.y)};
        q = Point2{sincos * (q.x - p.x), sincos * (q.y - p.y)};
        p = tmp;
        p2 = p + e.C;
        c2 = p2 - t * q;
        chain.segments.push_back({p1, c1, c2, p2});
    }
    return chain;
}

BezierChain arc_to_beziers(const ArcRequest& req, double maxphi) {
    require_finite(req.ellipse);
    require_finite(req.astart, "astart");
    require_finite(req.asweep, "asweep");
    require_finite(maxphi, "maxphi");
    if (!(maxphi > 0.0 && maxphi <= kPi / 2)) {
        throw InvalidInput("arc_to_beziers: maxphi must lie in (0, pi/2]");
    }
    maxphi = std::max(maxphi, kMinMaxPhi);

    const Point2 center = req.ellipse.C;
    Point2 p = req.ellipse.P - center;
    Point2 q = req.ellipse.Q - center;

    if (req.astart != 0.0) {
        std::tie(p, q) = rotate_conjugate_pair(p, q, req.astart);
    }
    const Point2 start = p + center;

    double asweep = req.asweep;
    if (asweep == 0.0) {
        return BezierChain{start, {}};
    }
    if (asweep < 0.0) {
        q = -q;
        asweep = -asweep;
    }
    if (asweep > kTwoPi) {
        asweep = kTwoPi;
    }

    int nsegs = 1;
    double phi = asweep;
    if (asweep > maxphi) {
        nsegs = static_cast<int>(std::ceil(asweep / maxphi));
        phi = asweep / nsegs;
    }
    return trace_arcs(center, p, q, start, phi, nsegs);
}

CubicSegment single_arc_segment(const ConjugateEllipse& e, double phi) {
    require_finite(e);
    return trace_arcs(e.C, e.P - e.C, e.Q - e.C, e.P, phi, 1).segments.front();
}

double radius_bound(const ConjugateEllipse& e) {
    require_finite(e);
    const Point2 a = e.P - e.C;
    const Point2 b = e.Q - e.C;
    const double la = norm(a);
    const double lb = norm(b);
    const double longer = std::max(la, lb);
    // Perpendicular, equal-length conjugate radii describe a circle.
    constexpr double rel = 1e-12;
    if (std::abs(dot(a, b)) <= rel * longer * longer && std::abs(la - lb) <= rel * longer) {
        return longer;
    }
    return la + lb;
}

int segments_for_tolerance(const ConjugateEllipse& e, double sweep, double tol) {
    require_finite(sweep, "sweep");
    if (std::isnan(tol) || tol <= 0.0) {
        throw InvalidInput("segments_for_tolerance: tolerance must be positive");
    }
    if (!(sweep > 0.0 && sweep <= kTwoPi)) {
        throw InvalidInput("segments_for_tolerance: sweep must lie in (0, 2*pi]");
    }
    const double radius = radius_bound(e);
    auto error_bound = [&](int n) {
        const double phi = sweep / n;
        if (phi >= kTwoPi) {
            return std::numeric_limits<double>::infinity();
        }
        return radius * eps_max(phi);
    };
    auto meets = [&](int n) { return error_bound(n) <= tol; };

    if (meets(1)) {
        return 1;
    }
    // Bracket by doubling, then bisect; the bound is monotone in n.
    int lo = 1;
    int hi = 2;
    while (!meets(hi)) {
        if (hi >= kMaxToleranceSegments) {
            throw InvalidInput("segments_for_tolerance: tolerance too small to reach");
        }
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (meets(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

BezierChain transform_chain(const AffineMap2& t, const BezierChain& chain) {
    BezierChain out;
    out.start = t(chain.start);
    out.segments.reserve(chain.segments.size());
    for (const CubicSegment& s : chain.segments) {
        out.segments.push_back({t(s.p1), t(s.c1), t(s.c2), t(s.p2)});
    }
    return out;
}

double on_curve_signed_area(const BezierChain& chain) {
    if (chain.segments.empty()) {
        return 0.0;
    }
    double twice = 0.0;
    Point2 prev = chain.segments.front().p1;
    for (const CubicSegment& s : chain.segments) {
        twice += cross(prev, s.p2);
        prev = s.p2;
    }
    twice += cross(prev, chain.segments.front().p1);
    return 0.5 * twice;
}

}  // namespace conic2bezier
