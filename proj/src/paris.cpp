#include "geocurves/paris.hpp"

#include <algorithm>
#include <cmath>

namespace geocurves {

namespace {
constexpr double kCollinearTol = 1e-10;
}

ParisSpace::ParisSpace(Eigen::VectorXd hub, std::shared_ptr<const Space> base)
    : Space(SpaceKind::paris, base ? base->ambient_dim() : static_cast<int>(hub.size()),
            SpaceCaps{.has_log_exp = false, .is_unique_geodesic = true, .satisfies_condition_1 = false},
            "base-space domain; non-collinear pairs are routed through the hub"),
      base_(base ? std::move(base)
                 : std::make_shared<const EuclideanSpace>(static_cast<int>(hub.size()))) {
    if (!base_->caps().is_unique_geodesic)
        throw ValidationError("paris metric needs a unique geodesic base space");
    hub_ = base_->make_point(std::move(hub));
}

SpacePoint ParisSpace::to_base(const SpacePoint& p) const {
    return {base_->kind(), p.coords};
}

SpacePoint ParisSpace::from_base(SpacePoint p) const {
    return {kind(), std::move(p.coords)};
}

void ParisSpace::do_validate(const SpacePoint& p) const {
    base_->validate_point(to_base(p));
}

bool ParisSpace::collinear_with_hub(const SpacePoint& xp, const SpacePoint& yp) const {
    const SpacePoint x = to_base(xp), y = to_base(yp);
    const double dxy = base_->distance(x, y);
    const double dxc = base_->distance(x, hub_);
    const double dyc = base_->distance(y, hub_);
    const double defect = std::min({std::abs(dxy - dxc - dyc),   // c between x and y
                                    std::abs(dxc - dxy - dyc),   // y between x and c
                                    std::abs(dyc - dxy - dxc)}); // x between y and c
    return defect <= kCollinearTol;
}

double ParisSpace::do_distance(const SpacePoint& x, const SpacePoint& y) const {
    if (collinear_with_hub(x, y))
        return base_->distance(to_base(x), to_base(y));
    return base_->distance(to_base(x), hub_) + base_->distance(to_base(y), hub_);
}

SpacePoint ParisSpace::do_affine(double t, const SpacePoint& xp, const SpacePoint& yp) const {
    const SpacePoint x = to_base(xp), y = to_base(yp);
    if (collinear_with_hub(xp, yp))
        return from_base(base_->affine(t, x, y));

    const double l1 = base_->distance(x, hub_);
    const double l = l1 + base_->distance(y, hub_);
    const double s = l * t;
    if (s <= l1)
        return from_base(base_->affine(std::clamp(s / l1, 0.0, 1.0), x, hub_));
    return from_base(base_->affine(std::clamp((s - l1) / (l - l1), 0.0, 1.0), hub_, y));
}

} // namespace geocurves
