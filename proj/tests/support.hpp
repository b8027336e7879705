#pragma once

#include <vector>

#include "geocurves/bezier.hpp"
#include "geocurves/e3.hpp"
#include "geocurves/point.hpp"
#include "geocurves/space.hpp"

#include "oracles.hpp"

namespace support {

using geocurves::SpaceKind;
using geocurves::SpacePoint;

inline SpacePoint pt(SpaceKind kind, std::initializer_list<double> coords) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (double c : coords) v[i++] = c;
    return {kind, v};
}

inline SpacePoint euc(std::initializer_list<double> coords) {
    return pt(SpaceKind::euclidean, coords);
}

inline SpacePoint sph(double x, double y, double z) {
    Eigen::Vector3d v(x, y, z);
    return {SpaceKind::sphere, Eigen::VectorXd(v.normalized())};
}

inline std::vector<Eigen::VectorXd> coords_of(const std::vector<SpacePoint>& pts) {
    std::vector<Eigen::VectorXd> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(p.coords);
    return out;
}

inline geocurves::ControlPolygon poly_of(std::vector<SpacePoint> pts) {
    return {std::move(pts), std::nullopt};
}

inline double coord_dist(const SpacePoint& a, const SpacePoint& b) {
    return (a.coords - b.coords).norm();
}

inline geocurves::SpacePoint random_pose(oracles::Rng& rng, double translation_scale = 1.0) {
    return geocurves::e3_point(rng.rotation(), translation_scale * Eigen::Vector3d(rng.gauss(), rng.gauss(), rng.gauss()));
}

/// points lie on one geodesic iff every triple has a vanishing betweenness
/// defect; strictness assertions are skipped for such inputs
inline bool on_common_geodesic(const geocurves::Space& space, const std::vector<SpacePoint>& pts,
                               double tol = 1e-9) {
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            for (size_t k = j + 1; k < pts.size(); ++k) {
                const double ab = space.distance(pts[i], pts[j]);
                const double bc = space.distance(pts[j], pts[k]);
                const double ac = space.distance(pts[i], pts[k]);
                const double defect = std::min({std::abs(ab + bc - ac), std::abs(ab + ac - bc),
                                                std::abs(ac + bc - ab)});
                if (defect >= tol) return false;
            }
    return true;
}

} // namespace support
