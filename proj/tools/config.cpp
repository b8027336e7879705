#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "geocurves/e3.hpp"
#include "geocurves/manhattan.hpp"
#include "geocurves/paris.hpp"
#include "geocurves/spd2.hpp"
#include "geocurves/sphere.hpp"

namespace geocurves::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
    throw ValidationError("config field '" + field + "': " + why);
}

const json& require(const json& doc, const std::string& field) {
    if (!doc.contains(field)) bad_field(field, "missing");
    return doc.at(field);
}

double as_number(const json& j, const std::string& field) {
    if (!j.is_number()) bad_field(field, "expected a number");
    return j.get<double>();
}

int as_int(const json& j, const std::string& field) {
    if (!j.is_number_integer()) bad_field(field, "expected an integer");
    return j.get<int>();
}

std::vector<double> as_vector(const json& j, const std::string& field) {
    if (!j.is_array()) bad_field(field, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : j) {
        if (!e.is_number()) bad_field(field, "expected an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

Eigen::VectorXd as_eigen(const json& j, const std::string& field) {
    const std::vector<double> v = as_vector(j, field);
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::shared_ptr<const Space> build_space(const json& doc, std::string& name_out) {
    const json& s = require(doc, "space");
    if (!s.is_string()) bad_field("space", "expected one of euclidean/sphere/manhattan/paris/spd2/e3");
    const std::string name = s.get<std::string>();
    name_out = name;
    if (name == "euclidean") {
        const int dim = as_int(require(doc, "dim"), "dim");
        if (dim < 1) bad_field("dim", "must be >= 1");
        return std::make_shared<EuclideanSpace>(dim);
    }
    if (name == "sphere") return std::make_shared<SphereSpace>();
    if (name == "manhattan") {
        const double k = doc.contains("k") ? as_number(doc.at("k"), "k") : 0.0;
        return std::make_shared<ManhattanSpace>(k);
    }
    if (name == "paris") {
        Eigen::VectorXd hub = as_eigen(require(doc, "hub"), "hub");
        return std::make_shared<ParisSpace>(std::move(hub));
    }
    if (name == "spd2") return std::make_shared<Spd2Space>();
    if (name == "e3") return std::make_shared<MotionGroupSpace>();
    bad_field("space", "unknown space '" + name + "'");
}

// Text configs quantize coordinates; mild constraint drift (within 1e-6) is
// renormalized, anything worse is rejected.
SpacePoint parse_point(const Space& space, const json& j, const std::string& field) {
    switch (space.kind()) {
        case SpaceKind::sphere: {
            Eigen::VectorXd v = as_eigen(j, field);
            if (v.size() != 3) bad_field(field, "sphere points need 3 coordinates");
            if (std::abs(v.norm() - 1.0) > 1e-6) bad_field(field, "not a unit vector");
            v.normalize();
            return space.make_point(std::move(v));
        }
        case SpaceKind::spd2: {
            if (!j.is_array() || j.size() != 2) bad_field(field, "expected [[a,b],[b,c]]");
            const auto row0 = as_vector(j.at(0), field);
            const auto row1 = as_vector(j.at(1), field);
            if (row0.size() != 2 || row1.size() != 2) bad_field(field, "expected [[a,b],[b,c]]");
            Eigen::Matrix2d m;
            m << row0[0], row0[1], row1[0], row1[1];
            const double det = m.determinant();
            if (!(det > 0.0) || std::abs(det - 1.0) > 1e-6)
                bad_field(field, "determinant must be one");
            m /= std::sqrt(det);
            return space.make_point(spd2_point(m).coords);
        }
        case SpaceKind::e3: {
            if (!j.is_object()) bad_field(field, "expected {rotation, translation}");
            const auto rot = as_vector(require(j, "rotation"), field + ".rotation");
            const auto trans = as_vector(require(j, "translation"), field + ".translation");
            if (rot.size() != 9) bad_field(field + ".rotation", "expected 9 numbers, row-major");
            if (trans.size() != 3) bad_field(field + ".translation", "expected 3 numbers");
            Eigen::Matrix3d r;
            r << rot[0], rot[1], rot[2], rot[3], rot[4], rot[5], rot[6], rot[7], rot[8];
            return space.make_point(
                e3_point(r, Eigen::Vector3d(trans[0], trans[1], trans[2])).coords);
        }
        default: {
            Eigen::VectorXd v = as_eigen(j, field);
            return space.make_point(std::move(v));
        }
    }
}

} // namespace

std::string input_hash(const nlohmann::json& doc) {
    const std::string text = doc.dump();
    uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

CurveConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ParseError("config '" + path + "': " + e.what());
    }
    return parse_config(doc);
}

CurveConfig parse_config(const nlohmann::json& doc) {
    static const std::set<std::string> algorithms{
        "bezier", "rational", "spline", "centroid", "neville", "split", "counterexample"};

    CurveConfig cfg;
    cfg.raw = doc;
    cfg.space = build_space(doc, cfg.space_name);

    const json& alg = require(doc, "algorithm");
    if (!alg.is_string() || !algorithms.contains(alg.get<std::string>()))
        bad_field("algorithm", "expected one of bezier/rational/spline/centroid/neville/split/counterexample");
    cfg.algorithm = alg.get<std::string>();

    if (cfg.algorithm != "counterexample") {
        const json& pts = require(doc, "control_points");
        if (!pts.is_array() || pts.size() < 2)
            bad_field("control_points", "expected an array of at least two points");
        for (size_t i = 0; i < pts.size(); ++i)
            cfg.control_points.push_back(
                parse_point(*cfg.space, pts.at(i), "control_points[" + std::to_string(i) + "]"));
    }

    if (doc.contains("samples")) {
        cfg.samples = as_int(doc.at("samples"), "samples");
        if (cfg.samples < 2) bad_field("samples", "must be >= 2");
    }

    if (doc.contains("weights")) cfg.weights = as_vector(doc.at("weights"), "weights");
    if (doc.contains("knots")) cfg.knots = as_vector(doc.at("knots"), "knots");
    if (doc.contains("degree")) cfg.degree = as_int(doc.at("degree"), "degree");
    if (doc.contains("closed")) {
        if (!doc.at("closed").is_boolean()) bad_field("closed", "expected a boolean");
        cfg.closed = doc.at("closed").get<bool>();
    }
    if (doc.contains("s")) cfg.split_point = as_number(doc.at("s"), "s");
    if (doc.contains("nodes")) cfg.nodes = as_vector(doc.at("nodes"), "nodes");
    if (doc.contains("alpha")) cfg.alpha = as_number(doc.at("alpha"), "alpha");

    if (doc.contains("obstacle")) {
        const json& ob = doc.at("obstacle");
        ObstacleSpec spec;
        spec.center = parse_point(*cfg.space, require(ob, "center"), "obstacle.center");
        spec.radius = as_number(require(ob, "radius"), "obstacle.radius");
        if (!(spec.radius > 0.0)) bad_field("obstacle.radius", "must be positive");
        const json& mode = require(ob, "mode");
        if (mode == "attract")
            spec.mode = WeightMode::attract;
        else if (mode == "avoid")
            spec.mode = WeightMode::avoid;
        else
            bad_field("obstacle.mode", "expected 'attract' or 'avoid'");
        cfg.obstacle = spec;
    }

    // per-algorithm field requirements
    if (cfg.algorithm == "rational" && !cfg.weights && !cfg.obstacle)
        bad_field("weights", "rational curves need 'weights' or an 'obstacle' spec");
    if (cfg.algorithm == "spline") {
        if (!cfg.degree) bad_field("degree", "splines need an explicit degree");
        if (cfg.closed && cfg.knots)
            bad_field("knots", "closed splines build their own periodic knots");
        if (!cfg.closed && !cfg.knots) bad_field("knots", "open splines need a knot vector");
    }
    if (cfg.algorithm == "neville" && !cfg.nodes) bad_field("nodes", "neville needs 'nodes'");
    if (cfg.algorithm == "split" && !cfg.split_point) bad_field("s", "split needs 's'");
    if (cfg.algorithm == "counterexample") {
        if (!cfg.alpha) bad_field("alpha", "counterexample needs 'alpha'");
        if (cfg.space_name != "sphere") bad_field("space", "counterexample runs on the sphere");
    }
    return cfg;
}

} // namespace geocurves::cli
