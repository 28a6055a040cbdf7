#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "conic2bezier/errors.hpp"
#include "conic2bezier/scene.hpp"

namespace conic2bezier {

namespace {

void validate(const LoweringOptions& options) {
    require_finite(options.maxphi, "maxphi");
    if (!(options.maxphi > 0.0 && options.maxphi <= kPi / 2)) {
        throw InvalidInput("maxphi must lie in (0, pi/2]");
    }
    if (options.nsegs_ellipse < 2) {
        throw InvalidInput("ellipse segment count must be at least 2");
    }
    if (options.tolerance && !(*options.tolerance > 0.0)) {
        throw InvalidInput("tolerance must be positive");
    }
}

class PathWriter {
public:
    explicit PathWriter(int precision) : precision_(precision) {}

    void move(Point2 p) { command('M', {p}); }
    void line(Point2 p) { command('L', {p}); }
    void cubic(const CubicSegment& s) { command('C', {s.c1, s.c2, s.p2}); }
    void close() {
        separate();
        out_ += 'Z';
    }

    void curves(const BezierChain& chain) {
        for (const CubicSegment& s : chain.segments) {
            cubic(s);
        }
    }

    std::string str() && { return std::move(out_); }

private:
    void separate() {
        if (!out_.empty()) {
            out_ += ' ';
        }
    }

    void command(char op, std::initializer_list<Point2> points) {
        separate();
        out_ += op;
        bool first = true;
        for (Point2 p : points) {
            if (!first) {
                out_ += ' ';
            }
            first = false;
            out_ += format_coordinate(p.x, precision_);
            out_ += ' ';
            out_ += format_coordinate(p.y, precision_);
        }
    }

    int precision_;
    std::string out_;
};

std::string escape_attribute(const std::string& value) {
    std::string out;
    out.reserve(value.size());
    for (char ch : value) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

LoweredItem lower_item(const SceneItem& item, const LoweringOptions& options) {
    validate(options);
    const ConjugateEllipse e = item.transform ? apply_affine(*item.transform, item.ellipse) : item.ellipse;

    LoweredItem out;
    out.kind = item.kind;
    out.center = e.C;

    if (item.kind == ItemKind::Ellipse) {
        int nsegs = options.nsegs_ellipse;
        if (options.tolerance) {
            nsegs = std::max(2, segments_for_tolerance(e, kTwoPi, *options.tolerance));
        }
        out.chain = ellipse_to_beziers(e, nsegs);
        return out;
    }

    double maxphi = options.maxphi;
    const double sweep = std::min(std::abs(item.asweep), kTwoPi);
    if (options.tolerance && sweep > 0.0) {
        const int n = segments_for_tolerance(e, sweep, *options.tolerance);
        maxphi = std::min(maxphi, sweep / n);
    }
    out.chain = arc_to_beziers({e, item.astart, item.asweep}, maxphi);
    return out;
}

std::string format_coordinate(double v, int precision) {
    if (precision < kMinPrecision || precision > kMaxPrecision) {
        throw InvalidInput("precision must lie in [1, 12]");
    }
    require_finite(v, "coordinate");
    char buf[400];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
    std::string s(buf, res.ptr);
    if (const auto dot = s.find('.'); dot != std::string::npos) {
        const auto last = s.find_last_not_of('0');
        s.erase(last == dot ? dot : last + 1);
    }
    if (s == "-0") {
        s = "0";
    }
    return s;
}

std::string path_data(const LoweredItem& item, int precision) {
    PathWriter w(precision);
    switch (item.kind) {
        case ItemKind::Ellipse:
            w.move(item.chain.start);
            w.curves(item.chain);
            w.close();
            break;
        case ItemKind::Arc:
            w.move(item.chain.start);
            w.curves(item.chain);
            break;
        case ItemKind::Pie:
            w.move(item.center);
            w.line(item.chain.start);
            w.curves(item.chain);
            if (!item.chain.empty()) {
                w.line(item.center);
            }
            w.close();
            break;
    }
    return std::move(w).str();
}

std::string emit_svg(const Scene& scene, const LoweringOptions& options) {
    const int prec = scene.precision;
    const std::string w = format_coordinate(scene.width, prec);
    const std::string h = format_coordinate(scene.height, prec);

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
           "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
    for (const SceneItem& item : scene.items) {
        out += "  <path d=\"" + path_data(lower_item(item, options), prec) + "\"";
        for (const auto& [key, value] : item.style) {
            out += " " + key + "=\"" + escape_attribute(value) + "\"";
        }
        out += "/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace conic2bezier
