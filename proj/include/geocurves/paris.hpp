#pragma once

#include <memory>

#include "geocurves/space.hpp"

namespace geocurves {

/// Tree-like metric over a base unique geodesic space: pairs on a common
/// geodesic with the hub keep the base metric, every other pair is routed
/// through the hub point c.
class ParisSpace final : public Space {
public:
    /// Base space defaults to the Euclidean plane.
    explicit ParisSpace(Eigen::VectorXd hub,
                        std::shared_ptr<const Space> base = nullptr);

    const SpacePoint& hub() const { return hub_; }
    const Space& base() const { return *base_; }

    /// [x, y, c] = 0: the three points lie on one geodesic, decided by the
    /// betweenness defect of all three orderings at tolerance 1e-10.
    bool collinear_with_hub(const SpacePoint& x, const SpacePoint& y) const;

protected:
    double do_distance(const SpacePoint& x, const SpacePoint& y) const override;
    SpacePoint do_affine(double t, const SpacePoint& x, const SpacePoint& y) const override;
    void do_validate(const SpacePoint& p) const override;

private:
    SpacePoint to_base(const SpacePoint& p) const;
    SpacePoint from_base(SpacePoint p) const;

    std::shared_ptr<const Space> base_;
    SpacePoint hub_; // stored as a base-space point
};

} // namespace geocurves
