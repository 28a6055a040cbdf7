#include "conic2bezier/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "conic2bezier/error_analysis.hpp"
#include "conic2bezier/errors.hpp"
#include "conic2bezier/scene.hpp"

namespace conic2bezier {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("cannot read " + path);
    }
    return text;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open " + path + " for writing");
    }
    file << content;
    file.flush();
    if (!file) {
        throw IoError("cannot write " + path);
    }
}

std::string sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lower conjugate-diameter ellipses and arcs to cubic Bezier SVG paths", "conic2bezier"};
    app.require_subcommand(1);

    std::string scene_path;
    std::string output_path;
    double max_phi = kDefaultMaxPhi;
    int nsegs = kDefaultEllipseSegments;
    std::optional<double> tolerance;
    auto* render = app.add_subcommand("render", "Render a JSON scene to SVG");
    render->add_option("scene-file", scene_path, "Scene description (JSON)")->required();
    render->add_option("-o,--output", output_path, "Output SVG file (default: stdout)");
    render->add_option("--max-phi", max_phi, "Largest arc angle per Bezier segment, radians");
    render->add_option("--nsegs", nsegs, "Segments per full ellipse");
    render->add_option("--tolerance", tolerance, "Radial error budget in user units; overrides --nsegs");

    std::string table_path;
    int grid = kDefaultErrorGrid;
    auto* table = app.add_subcommand("error-table", "Peak radial error for unit arcs of 0.1pi..0.9pi as CSV");
    table->add_option("-o,--output", table_path, "Output CSV file (default: stdout)");
    table->add_option("--grid", grid, "Sampling intervals per segment")->check(CLI::Range(kMinErrorGrid, 100000000));

    double phi = 0.0;
    int probe_grid = kDefaultErrorGrid;
    auto* probe = app.add_subcommand("probe", "Closed-form and sampled error for one unit arc");
    probe->add_option("--phi", phi, "Arc angle in radians")->required();
    probe->add_option("--grid", probe_grid, "Sampling intervals")->check(CLI::Range(kMinErrorGrid, 100000000));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (render->parsed()) {
            const std::string text = read_file(scene_path);
            const Scene scene = parse_scene(text, precision_from_environment());
            LoweringOptions options;
            options.maxphi = max_phi;
            options.nsegs_ellipse = nsegs;
            options.tolerance = tolerance;
            write_output(output_path, emit_svg(scene, options), out);
        } else if (table->parsed()) {
            std::ostringstream csv;
            write_error_table_csv(csv, table1_report(grid));
            write_output(table_path, csv.str(), out);
        } else if (probe->parsed()) {
            const ErrorProfile profile = profile_unit_arc(phi, probe_grid);
            out << "phi=" << sig12(phi) << '\n'
                << "eps_max=" << sig12(eps_max(phi)) << '\n'
                << "psi_max=" << sig12(psi_max(phi)) << '\n'
                << "eps_sampled=" << sig12(profile.eps_max_sampled) << '\n'
                << "t_argmax=" << sig12(profile.t_argmax) << '\n';
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace conic2bezier
