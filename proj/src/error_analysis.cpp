#include "conic2bezier/error_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "conic2bezier/errors.hpp"

namespace conic2bezier {

namespace {

void require_unit_param(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw InvalidInput("t must lie in [0, 1]");
    }
}

void require_open_turn(double phi) {
    if (!(phi > 0.0 && phi < kTwoPi)) {
        throw InvalidInput("phi must lie in (0, 2*pi)");
    }
}

std::string format_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

double eps_pointwise(const CubicSegment& s, double t) {
    require_unit_param(t);
    return norm(eval_cubic(s, t)) - 1.0;
}

double psi_pointwise(const CubicSegment& s, double t) {
    require_unit_param(t);
    const Point2 b = eval_cubic(s, t);
    return std::abs(b.x * b.x + b.y * b.y - 1.0);
}

double psi_max(double phi) {
    require_open_turn(phi);
    const double s = std::sin(phi / 4.0);
    const double c = std::cos(phi / 4.0);
    const double s3 = s * s * s;
    return (4.0 / 27.0) * (s3 * s3) / (c * c);
}

double eps_max(double phi) { return 0.5 * psi_max(phi); }

std::pair<double, double> eps_argmax_params() {
    const double r3 = std::sqrt(3.0);
    return {(3.0 - r3) / 6.0, (3.0 + r3) / 6.0};
}

ErrorSample ErrorProfile::max_in(double t_lo, double t_hi) const {
    ErrorSample best{t_lo, -std::numeric_limits<double>::infinity()};
    for (const ErrorSample& s : samples) {
        if (s.t >= t_lo && s.t <= t_hi && s.eps > best.eps) {
            best = s;
        }
    }
    return best;
}

double ErrorProfile::min_eps() const {
    double lo = std::numeric_limits<double>::infinity();
    for (const ErrorSample& s : samples) {
        lo = std::min(lo, s.eps);
    }
    return lo;
}

ErrorProfile profile_unit_arc(double phi, int grid) {
    require_open_turn(phi);
    if (grid < kMinErrorGrid) {
        throw InvalidInput("error grid must have at least 1000 intervals");
    }
    const ConjugateEllipse unit{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
    const CubicSegment seg = single_arc_segment(unit, phi);

    ErrorProfile profile;
    profile.phi = phi;
    profile.samples.reserve(static_cast<std::size_t>(grid) + 1);
    profile.eps_max_sampled = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= grid; ++i) {
        const double t = static_cast<double>(i) / grid;
        const double eps = norm(eval_cubic(seg, t)) - 1.0;
        profile.samples.push_back({t, eps});
        if (eps > profile.eps_max_sampled) {
            profile.eps_max_sampled = eps;
            profile.t_argmax = t;
        }
    }
    return profile;
}

std::vector<ErrorTableRow> table1_report(int grid) {
    std::vector<ErrorTableRow> rows;
    rows.reserve(9);
    for (int k = 1; k <= 9; ++k) {
        const double phi = k * kPi / 10.0;
        const ErrorProfile profile = profile_unit_arc(phi, grid);
        rows.push_back({phi, eps_max(phi), profile.eps_max_sampled, profile.t_argmax});
    }
    return rows;
}

void write_error_table_csv(std::ostream& out, const std::vector<ErrorTableRow>& rows) {
    out << "phi_radians,eps_closed,eps_sampled,t_argmax\n";
    for (const ErrorTableRow& r : rows) {
        out << format_sig12(r.phi) << ',' << format_sig12(r.eps_closed) << ','
            << format_sig12(r.eps_sampled) << ',' << format_sig12(r.t_argmax) << '\n';
    }
}

}  // namespace conic2bezier
