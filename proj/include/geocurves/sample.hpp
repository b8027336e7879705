#pragma once

#include <functional>
#include <vector>

#include "geocurves/point.hpp"

namespace geocurves {

struct CurveSample {
    double t = 0.0;
    SpacePoint point;
};

/// Evaluate at m parameters uniform on [0,1], endpoints included. The
/// evaluator must be a pure function of t; samples are returned in
/// parameter order.
std::vector<CurveSample> sample_curve(const std::function<SpacePoint(double)>& evaluator, int m);

} // namespace geocurves
