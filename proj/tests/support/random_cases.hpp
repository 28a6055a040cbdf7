#pragma once

// Seeded generators for the randomized property checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "conic2bezier/geometry.hpp"

namespace cases {

using conic2bezier::AffineMap2;
using conic2bezier::ConjugateEllipse;
using conic2bezier::Point2;

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Point2 point(double extent = 1e3) { return {uniform(-extent, extent), uniform(-extent, extent)}; }

    double angle() { return uniform(-2.0 * conic2bezier::kPi, 2.0 * conic2bezier::kPi); }

    /// C, P, Q anywhere in [-1e3, 1e3]^2.
    ConjugateEllipse ellipse() { return {point(), point(), point()}; }

    /// As ellipse(), redrawn until the conjugate radii are at least 1e-3 of
    /// the figure size, their lengths within a factor 1e3, and the angle
    /// between them has |sin| >= 1e-3.
    ConjugateEllipse well_conditioned_ellipse() {
        for (;;) {
            const ConjugateEllipse e = ellipse();
            const Point2 a = e.P - e.C;
            const Point2 b = e.Q - e.C;
            const double la = conic2bezier::norm(a);
            const double lb = conic2bezier::norm(b);
            if (la < 1.0 || lb < 1.0) continue;
            if (std::max(la, lb) > 1e3 * std::min(la, lb)) continue;
            if (std::abs(conic2bezier::cross(a, b)) < 1e-3 * la * lb) continue;
            return e;
        }
    }

    /// Rotation * diag(s1, +-s2) * rotation with log-uniform s1, s2 in
    /// [10^-1.5, 10^1.5], so |det| lies in [1e-3, 1e3]; random sign.
    AffineMap2 affine() {
        const double t1 = angle();
        const double t2 = angle();
        const double s1 = std::pow(10.0, uniform(-1.5, 1.5));
        const double s2 = std::pow(10.0, uniform(-1.5, 1.5)) * (uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0);
        const double c1 = std::cos(t1), n1 = std::sin(t1);
        const double c2 = std::cos(t2), n2 = std::sin(t2);
        // [c1 -n1; n1 c1] * diag(s1, s2) * [c2 -n2; n2 c2]
        AffineMap2 m;
        m.m11 = c1 * s1 * c2 - n1 * s2 * n2;
        m.m12 = -c1 * s1 * n2 - n1 * s2 * c2;
        m.m21 = n1 * s1 * c2 + c1 * s2 * n2;
        m.m22 = -n1 * s1 * n2 + c1 * s2 * c2;
        m.tx = uniform(-1e3, 1e3);
        m.ty = uniform(-1e3, 1e3);
        return m;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace cases
