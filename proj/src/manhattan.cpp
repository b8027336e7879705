#include "geocurves/manhattan.hpp"

#include <array>
#include <cmath>

namespace geocurves {

namespace {

double taxicab(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return std::abs(a.x() - b.x()) + std::abs(a.y() - b.y());
}

} // namespace

ManhattanSpace::ManhattanSpace(double slope)
    : Space(SpaceKind::manhattan, 2,
            SpaceCaps{.has_log_exp = false, .is_unique_geodesic = false, .satisfies_condition_1 = false},
            "all of R^2; one representative geodesic per pair"),
      slope_(slope) {
    if (!std::isfinite(slope))
        throw ValidationError("manhattan slope must be finite");
}

void ManhattanSpace::do_validate(const SpacePoint&) const {}

double ManhattanSpace::do_distance(const SpacePoint& x, const SpacePoint& y) const {
    return taxicab(x.coords.head<2>(), y.coords.head<2>());
}

SpacePoint ManhattanSpace::do_affine(double t, const SpacePoint& xp, const SpacePoint& yp) const {
    const Eigen::Vector2d x = xp.coords.head<2>();
    const Eigen::Vector2d y = yp.coords.head<2>();

    const Eigen::Vector2d c = 0.5 * (x + y);
    const Eigen::Vector2d u = Eigen::Vector2d(1.0, slope_).normalized();
    const Eigen::Vector2d xs = c + (x - c).dot(u) * u;
    const Eigen::Vector2d ys = c + (y - c).dot(u) * u;

    const std::array<std::pair<Eigen::Vector2d, Eigen::Vector2d>, 3> segments{{
        {x, xs}, {xs, ys}, {ys, y}}};

    double total = 0.0;
    std::array<double, 3> len{};
    for (size_t i = 0; i < 3; ++i) {
        len[i] = taxicab(segments[i].first, segments[i].second);
        total += len[i];
    }
    if (total == 0.0) return xp;

    // walk to taxicab arc length t * total; zero-length segments drop out
    double s = t * total;
    for (size_t i = 0; i < 3; ++i) {
        if (len[i] == 0.0) continue;
        if (s <= len[i]) {
            const double u01 = s / len[i];
            Eigen::Vector2d p = (1.0 - u01) * segments[i].first + u01 * segments[i].second;
            return {kind(), Eigen::VectorXd(p)};
        }
        s -= len[i];
    }
    return yp;
}

} // namespace geocurves
