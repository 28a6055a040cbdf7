#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conic2bezier/bezier.hpp"
#include "conic2bezier/geometry.hpp"

namespace conic2bezier {

inline constexpr int kDefaultPrecision = 6;
inline constexpr int kMinPrecision = 1;
inline constexpr int kMaxPrecision = 12;

enum class ItemKind { Ellipse, Arc, Pie };

struct SceneItem {
    ItemKind kind = ItemKind::Ellipse;
    ConjugateEllipse ellipse;
    double astart = 0.0;  // arc and pie only
    double asweep = 0.0;  // arc and pie only
    std::optional<AffineMap2> transform;
    std::map<std::string, std::string> style;  // copied to SVG attributes, sorted by key
};

struct Scene {
    double width = 0.0;
    double height = 0.0;
    std::vector<SceneItem> items;
    int precision = kDefaultPrecision;
};

/// Parses a JSON scene document. `default_precision` applies when the
/// document has no "precision" member. Throws ParseError for malformed JSON
/// and ValidationError for schema violations.
Scene parse_scene(std::string_view text, int default_precision = kDefaultPrecision);

/// Value of CONIC2BEZIER_PRECISION if set, kDefaultPrecision otherwise.
/// Throws ValidationError when the variable is not an integer in [1, 12].
int precision_from_environment();

struct LoweringOptions {
    double maxphi = kDefaultMaxPhi;
    int nsegs_ellipse = kDefaultEllipseSegments;
    /// When set, segment counts come from segments_for_tolerance instead.
    std::optional<double> tolerance;
};

/// Curve for one scene item, already transformed to user space. Pie slices
/// additionally carry the center for their two straight edges.
struct LoweredItem {
    ItemKind kind = ItemKind::Ellipse;
    BezierChain chain;
    Point2 center;
};

/// The item's transform is applied to C, P and Q before lowering; the arc
/// angles are left as given.
LoweredItem lower_item(const SceneItem& item, const LoweringOptions& options = {});

/// Fixed-point text with `precision` decimals, ties to even, trailing zeros
/// dropped, and "-0" written as "0".
std::string format_coordinate(double v, int precision);

/// Path data using only absolute M, C, L and Z commands.
///   ellipse: M start C.. Z
///   arc:     M start C..           (zero sweep: M start)
///   pie:     M center L start C.. L center Z
std::string path_data(const LoweredItem& item, int precision);

/// Complete SVG document, one <path> per item in scene order.
std::string emit_svg(const Scene& scene, const LoweringOptions& options = {});

}  // namespace conic2bezier
