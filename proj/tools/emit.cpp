#include "emit.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "config.hpp"

namespace geocurves::cli {

namespace fs = std::filesystem;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const std::vector<CurveSample>& samples) {
    std::ostringstream out;
    const Eigen::Index dim = samples.empty() ? 0 : samples.front().point.coords.size();
    out << "t";
    for (Eigen::Index c = 0; c < dim; ++c) out << ",c" << c;
    out << "\n";
    for (const auto& s : samples) {
        out << format_double(s.t);
        for (Eigen::Index c = 0; c < dim; ++c) out << "," << format_double(s.point.coords[c]);
        out << "\n";
    }
    return out.str();
}

nlohmann::json to_json(const SampleRun& run) {
    nlohmann::json doc;
    doc["algorithm"] = run.algorithm;
    doc["space"] = run.space;
    doc["input_hash"] = run.hash;
    doc["config"] = run.config;
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : run.samples) {
        nlohmann::json rec;
        rec["t"] = s.t;
        rec["coords"] = std::vector<double>(s.point.coords.data(),
                                            s.point.coords.data() + s.point.coords.size());
        samples.push_back(std::move(rec));
    }
    doc["samples"] = std::move(samples);
    return doc;
}

namespace {

// fixed camera: orthographic onto the xy-plane (poses project by their
// translation part, spd2 matrices by their diagonal)
Eigen::Vector2d project(const std::string& space_name, const SpacePoint& p) {
    if (space_name == "e3") {
        return {p.coords[4 * 1 + 0], p.coords[4 * 2 + 0]};
    }
    if (space_name == "spd2") {
        return {p.coords[0], p.coords[3]};
    }
    if (p.coords.size() == 1) return {p.coords[0], 0.0};
    return {p.coords[0], p.coords[1]};
}

std::string polyline(const std::vector<Eigen::Vector2d>& pts) {
    std::ostringstream out;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) out << " ";
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f", pts[i].x(), -pts[i].y());
        out << buf;
    }
    return out.str();
}

} // namespace

std::string to_svg(const std::string& space_name, const std::vector<CurveSample>& samples,
                   const std::vector<SpacePoint>& control_points) {
    std::vector<Eigen::Vector2d> curve, controls;
    for (const auto& s : samples) curve.push_back(project(space_name, s.point));
    for (const auto& p : control_points) controls.push_back(project(space_name, p));

    Eigen::Vector2d lo = curve.front(), hi = curve.front();
    for (const auto* group : {&curve, &controls})
        for (const auto& p : *group) {
            lo = lo.cwiseMin(p);
            hi = hi.cwiseMax(p);
        }
    const Eigen::Vector2d span = (hi - lo).cwiseMax(1e-6);
    const double margin = 0.05 * std::max(span.x(), span.y());

    std::ostringstream out;
    char header[256];
    std::snprintf(header, sizeof(header),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.6f %.6f %.6f %.6f\">\n",
                  lo.x() - margin, -hi.y() - margin, span.x() + 2 * margin, span.y() + 2 * margin);
    out << header;
    const double stroke = 0.01 * std::max(span.x(), span.y());
    if (!controls.empty())
        out << "  <polyline fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"" << 4 * stroke
            << "\" stroke-width=\"" << stroke << "\" points=\"" << polyline(controls) << "\"/>\n";
    out << "  <polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"" << 1.5 * stroke
        << "\" points=\"" << polyline(curve) << "\"/>\n";
    out << "</svg>\n";
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write to '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw IoError("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw IoError("cannot rename '" + tmp.string() + "' to '" + target.string() + "'");
    }
}

void emit(const std::string& path_or_dash, const std::string& content) {
    if (path_or_dash == "-" || path_or_dash.empty()) {
        std::cout << content;
        return;
    }
    write_file(path_or_dash, content);
}

} // namespace geocurves::cli
