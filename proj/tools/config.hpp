#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "geocurves/bezier.hpp"
#include "geocurves/space.hpp"

namespace geocurves::cli {

/// Config file errors before any geometry is touched.
class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

struct ObstacleSpec {
    SpacePoint center;
    double radius = 0.0;
    WeightMode mode = WeightMode::attract;
};

struct CurveConfig {
    std::shared_ptr<const Space> space;
    std::string space_name;
    std::string algorithm;
    std::vector<SpacePoint> control_points;
    std::optional<std::vector<double>> weights;
    std::optional<std::vector<double>> knots;
    std::optional<int> degree;
    bool closed = false;
    int samples = 101;
    std::optional<double> split_point;
    std::optional<std::vector<double>> nodes;
    std::optional<ObstacleSpec> obstacle;
    std::optional<double> alpha;
    nlohmann::json raw;
};

CurveConfig load_config(const std::string& path);
CurveConfig parse_config(const nlohmann::json& doc);

/// FNV-1a of the canonical config dump; ties outputs to their inputs.
std::string input_hash(const nlohmann::json& doc);

} // namespace geocurves::cli
