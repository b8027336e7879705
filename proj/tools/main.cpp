#include <algorithm>
#include <functional>
#include <limits>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "geocurves/karcher.hpp"
#include "geocurves/spline.hpp"

#include "config.hpp"
#include "emit.hpp"

namespace geocurves::cli {

namespace {

struct Options {
    std::string config_path;
    std::string out = "-";
    std::string format = "csv";
    std::string svg;
    std::optional<int> samples_override;
};

int samples_of(const CurveConfig& cfg, const Options& opt) {
    const int m = opt.samples_override.value_or(cfg.samples);
    if (m < 2) throw ValidationError("flag --samples must be >= 2");
    return m;
}

std::vector<double> rational_weights(const CurveConfig& cfg) {
    if (cfg.obstacle)
        return distance_weights(*cfg.space, cfg.control_points, {cfg.obstacle->center, cfg.obstacle->radius},
                                cfg.obstacle->mode);
    if (!cfg.weights) throw ValidationError("config field 'weights': missing");
    return *cfg.weights;
}

/// curve evaluator over [0,1] for the sampling verbs; splines are sampled
/// over their own knot interval, reported in real parameter values
std::function<SpacePoint(double)> make_evaluator(const CurveConfig& cfg,
                                                 std::function<double(double)>& param_map) {
    const Space& space = *cfg.space;
    param_map = [](double t) { return t; };

    if (cfg.algorithm == "bezier") {
        ControlPolygon poly = make_polygon(space, cfg.control_points);
        return [&space, poly](double t) { return de_casteljau(space, poly, t); };
    }
    if (cfg.algorithm == "rational") {
        ControlPolygon poly = make_polygon(space, cfg.control_points, rational_weights(cfg));
        return [&space, poly](double t) { return rational_de_casteljau(space, poly, t); };
    }
    if (cfg.algorithm == "neville") {
        const auto nodes = *cfg.nodes;
        const auto points = cfg.control_points;
        if (nodes.size() != points.size())
            throw ValidationError("config field 'nodes': count differs from control_points");
        return [&space, nodes, points](double t) {
            return aitken_neville(space, nodes, points, t);
        };
    }
    if (cfg.algorithm == "centroid") {
        // warm-started sequential sampling is the documented default; the
        // evaluator keeps the previous solution as its seed
        const auto points = cfg.control_points;
        auto previous = std::make_shared<std::optional<SpacePoint>>();
        return [&space, points, previous](double t) {
            SpacePoint q = centroid_curve(space, points, t, *previous);
            *previous = q;
            return q;
        };
    }
    if (cfg.algorithm == "spline") {
        auto spline = std::make_shared<SplineDef>(
            cfg.closed ? close_spline(space, cfg.control_points, *cfg.degree)
                       : make_spline(space, ControlPolygon{cfg.control_points, std::nullopt},
                                     KnotVector(*cfg.knots, *cfg.degree)));
        const double a = spline->knots.param_begin();
        const double b = spline->knots.param_end();
        param_map = [a, b](double t) { return a + t * (b - a); };
        return [&space, spline, a, b](double t) {
            return de_boor(space, *spline, a + t * (b - a));
        };
    }
    throw ValidationError("config field 'algorithm': '" + cfg.algorithm +
                          "' is not a sampling algorithm");
}

int cmd_sample(const Options& opt) {
    const CurveConfig cfg = load_config(opt.config_path);
    std::function<double(double)> param_map;
    const auto evaluator = make_evaluator(cfg, param_map);
    std::vector<CurveSample> samples = sample_curve(evaluator, samples_of(cfg, opt));
    for (auto& s : samples) s.t = param_map(s.t);

    SampleRun run{cfg.algorithm, cfg.space_name, input_hash(cfg.raw), cfg.raw, std::move(samples)};
    if (opt.format == "json")
        emit(opt.out, to_json(run).dump(2) + "\n");
    else
        emit(opt.out, to_csv(run.samples));
    if (!opt.svg.empty()) write_file(opt.svg, to_svg(cfg.space_name, run.samples, cfg.control_points));
    return 0;
}

int cmd_split(const Options& opt) {
    const CurveConfig cfg = load_config(opt.config_path);
    if (!cfg.split_point) throw ValidationError("config field 's': missing");
    const double s = *cfg.split_point;
    const Space& space = *cfg.space;
    ControlPolygon poly = make_polygon(space, cfg.control_points);
    const auto [left, right] = split(space, poly, s);

    const int m = samples_of(cfg, opt);
    std::vector<CurveSample> stitched;
    for (const auto& sample : sample_curve(
             [&](double t) { return de_casteljau(space, left, t); }, m))
        stitched.push_back({s * sample.t, sample.point});
    for (const auto& sample : sample_curve(
             [&](double t) { return de_casteljau(space, right, t); }, m))
        stitched.push_back({s + (1.0 - s) * sample.t, sample.point});

    if (opt.format == "json") {
        nlohmann::json doc;
        doc["algorithm"] = "split";
        doc["space"] = cfg.space_name;
        doc["input_hash"] = input_hash(cfg.raw);
        doc["config"] = cfg.raw;
        doc["s"] = s;
        const auto dump_controls = [](const ControlPolygon& p) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& q : p.points)
                arr.push_back(std::vector<double>(q.coords.data(), q.coords.data() + q.coords.size()));
            return arr;
        };
        doc["left"]["control_points"] = dump_controls(left);
        doc["right"]["control_points"] = dump_controls(right);
        emit(opt.out, doc.dump(2) + "\n");
    } else {
        emit(opt.out, to_csv(stitched));
    }
    if (!opt.svg.empty()) write_file(opt.svg, to_svg(cfg.space_name, stitched, cfg.control_points));
    return 0;
}

int cmd_compare(const Options& opt) {
    const CurveConfig cfg = load_config(opt.config_path);
    const Space& space = *cfg.space;
    if (!space.caps().has_log_exp)
        throw ValidationError("config field 'space': compare needs a space with log/exp maps");
    ControlPolygon poly = make_polygon(space, cfg.control_points);

    const int m = samples_of(cfg, opt);
    std::optional<SpacePoint> previous;
    double max_distance = 0.0;
    std::ostringstream csv;
    csv << "t,distance\n";
    nlohmann::json rows = nlohmann::json::array();
    for (int j = 0; j < m; ++j) {
        const double t = static_cast<double>(j) / (m - 1);
        const SpacePoint p = de_casteljau(space, poly, t);
        const SpacePoint q = centroid_curve(space, cfg.control_points, t, previous);
        previous = q;
        const double d = space.distance(p, q);
        max_distance = std::max(max_distance, d);
        csv << format_double(t) << "," << format_double(d) << "\n";
        rows.push_back({{"t", t}, {"distance", d}});
    }

    if (opt.format == "json") {
        nlohmann::json doc;
        doc["algorithm"] = "compare";
        doc["space"] = cfg.space_name;
        doc["input_hash"] = input_hash(cfg.raw);
        doc["config"] = cfg.raw;
        doc["samples"] = std::move(rows);
        doc["max_distance"] = max_distance;
        emit(opt.out, doc.dump(2) + "\n");
    } else {
        emit(opt.out, csv.str());
    }
    std::cout << "max distance = " << format_double(max_distance) << "\n";
    return 0;
}

int cmd_counterexample(const Options& opt) {
    const CurveConfig cfg = load_config(opt.config_path);
    if (!cfg.alpha) throw ValidationError("config field 'alpha': missing");
    const SphereMidpointReport report = sphere_counterexample(*cfg.alpha);

    if (opt.format == "json") {
        nlohmann::json doc;
        doc["algorithm"] = "counterexample";
        doc["space"] = "sphere";
        doc["input_hash"] = input_hash(cfg.raw);
        doc["config"] = cfg.raw;
        doc["alpha"] = report.alpha;
        doc["cos_theta"] = report.cos_theta;
        doc["z"] = report.z;
        doc["min_abs_inner"] = report.min_abs_inner;
        doc["lower_bound"] = report.lower_bound;
        doc["casteljau_defect"] = report.casteljau_defect;
        doc["p_half"] = std::vector<double>(report.p_half.coords.data(),
                                            report.p_half.coords.data() + 3);
        doc["verdict"] = report.verdict;
        emit(opt.out, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "alpha=" << format_double(report.alpha) << "\n";
        out << "cos_theta=" << format_double(report.cos_theta) << "\n";
        out << "z=" << format_double(report.z) << "\n";
        out << "min_abs_inner=" << format_double(report.min_abs_inner) << "\n";
        out << "lower_bound=" << format_double(report.lower_bound) << "\n";
        out << "casteljau_defect=" << format_double(report.casteljau_defect) << "\n";
        out << "p_half=" << format_double(report.p_half.coords[0]) << ","
            << format_double(report.p_half.coords[1]) << ","
            << format_double(report.p_half.coords[2]) << "\n";
        out << "verdict=" << (report.verdict ? "true" : "false") << "\n";
        emit(opt.out, out.str());
    }
    return 0;
}

int cmd_validate(const Options& opt) {
    load_config(opt.config_path);
    std::cout << "ok\n";
    return 0;
}

int dispatch(const std::string& verb, const Options& opt) {
    if (verb == "sample") return cmd_sample(opt);
    if (verb == "split") return cmd_split(opt);
    if (verb == "compare") return cmd_compare(opt);
    if (verb == "counterexample") return cmd_counterexample(opt);
    if (verb == "validate") return cmd_validate(opt);
    throw ValidationError("unknown verb '" + verb + "'");
}

} // namespace
} // namespace geocurves::cli

int main(int argc, char** argv) {
    using namespace geocurves;
    using namespace geocurves::cli;

    CLI::App app{"Bezier, B-spline and centroid curves in geodesic spaces"};
    app.require_subcommand(1);

    Options opt;
    int samples_flag = std::numeric_limits<int>::min();
    std::string verb;
    for (const char* name : {"sample", "split", "compare", "counterexample", "validate"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", opt.config_path, "curve definition file")->required();
        sub->add_option("--out", opt.out, "output path ('-' for stdout)");
        sub->add_option("--format", opt.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--svg", opt.svg, "also write an SVG polyline");
        sub->add_option("--samples", samples_flag, "override the sample count");
        sub->callback([&verb, name] { verb = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (samples_flag != std::numeric_limits<int>::min()) opt.samples_override = samples_flag;

    try {
        return dispatch(verb, opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
