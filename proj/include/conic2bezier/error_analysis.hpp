#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "conic2bezier/bezier.hpp"

namespace conic2bezier {

inline constexpr int kDefaultErrorGrid = 100000;
inline constexpr int kAcceptanceErrorGrid = 1000000;
inline constexpr int kMinErrorGrid = 1000;

/// Radial error |B(t)| - 1 of a segment that approximates an arc of the unit
/// circle centered at the origin.
double eps_pointwise(const CubicSegment& s, double t);

/// Algebraic error |x(t)^2 + y(t)^2 - 1|; equals eps (eps + 2) where eps >= 0.
double psi_pointwise(const CubicSegment& s, double t);

/// Peak algebraic error of the single-segment approximation of a
/// phi-radian unit arc: (4/27) sin^6(phi/4) / cos^2(phi/4), attained at
/// t = (3 +- sqrt 3) / 6. phi in (0, 2 pi).
double psi_max(double phi);

/// Half of psi_max: the peak radial error while it is small against 1.
double eps_max(double phi);

/// The two parameter values where the radial error peaks.
std::pair<double, double> eps_argmax_params();

struct ErrorSample {
    double t;
    double eps;
};

/// Radial error of one unit-arc segment sampled on a uniform t grid.
struct ErrorProfile {
    double phi = 0.0;
    std::vector<ErrorSample> samples;
    double eps_max_sampled = 0.0;
    double t_argmax = 0.0;

    /// Largest sample with t in [t_lo, t_hi]; ties keep the smallest t.
    ErrorSample max_in(double t_lo, double t_hi) const;
    double min_eps() const;
};

/// Samples eps(t) at t = i / grid, i = 0..grid, for the single-segment
/// approximation of the phi-radian arc from (1, 0) toward (0, 1).
ErrorProfile profile_unit_arc(double phi, int grid = kDefaultErrorGrid);

struct ErrorTableRow {
    double phi;
    double eps_closed;
    double eps_sampled;
    double t_argmax;
};

/// Closed-form and sampled peak errors for phi = 0.1 pi .. 0.9 pi.
std::vector<ErrorTableRow> table1_report(int grid = kDefaultErrorGrid);

/// CSV with header phi_radians,eps_closed,eps_sampled,t_argmax and 12
/// significant digits per value.
void write_error_table_csv(std::ostream& out, const std::vector<ErrorTableRow>& rows);

}  // namespace conic2bezier
