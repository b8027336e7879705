#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "geocurves/sample.hpp"

namespace geocurves::cli {

struct SampleRun {
    std::string algorithm;
    std::string space;
    std::string hash;
    nlohmann::json config;
    std::vector<CurveSample> samples;
};

std::string to_csv(const std::vector<CurveSample>& samples);
nlohmann::json to_json(const SampleRun& run);

/// Orthographic 2D projection per space with the control polygon overlaid.
std::string to_svg(const std::string& space_name, const std::vector<CurveSample>& samples,
                   const std::vector<SpacePoint>& control_points);

/// Write-to-temp then atomic rename; no partial files on error.
void write_file(const std::string& path, const std::string& content);

/// "-" designates stdout.
void emit(const std::string& path_or_dash, const std::string& content);

std::string format_double(double v);

} // namespace geocurves::cli
