#include "geocurves/sample.hpp"

#include <string>

#include "geocurves/errors.hpp"

namespace geocurves {

std::vector<CurveSample> sample_curve(const std::function<SpacePoint(double)>& evaluator, int m) {
    if (m < 2) throw ValidationError("sampling needs at least 2 parameters, got " + std::to_string(m));
    std::vector<CurveSample> samples;
    samples.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(m - 1);
        samples.push_back({t, evaluator(t)});
    }
    return samples;
}

} // namespace geocurves
