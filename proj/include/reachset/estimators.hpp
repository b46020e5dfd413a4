#pragma once

#include <reachset/common.hpp>
#include <reachset/domains.hpp>
#include <reachset/geometry.hpp>
#include <reachset/maps.hpp>

#include <cstdint>

namespace reachset::estimators {

/// Padded-hull estimate of the reachable set: sample inputs, propagate,
/// pad the convex hull of the outputs.
struct RandupResult {
    geometry::HullEstimate hull;  // padding = requested eps
    PointCloud samples_out;
    double elapsed_s = 0.0;  // sampling + propagation + hull only
    std::uint64_t seed = 0;
};

/// Outer-bounding-ball estimate: smallest enclosing ball of the outputs,
/// radius grown by eps.
struct BallResult {
    geometry::Ball ball;
    PointCloud samples_out;
    double elapsed_s = 0.0;
};

struct UnionOfBalls {
    PointCloud centers;
    double radius = 0.0;
};

RandupResult randup(const maps::ReachMap& map, const domains::InputSet& set,
                    const domains::SamplingSpec& spec, int count, double eps);

BallResult gotube_ball(const maps::ReachMap& map, const domains::InputSet& set,
                       const domains::SamplingSpec& spec, int count, double eps);

bool union_contains(const UnionOfBalls& u, const Point& q);

/// Fraction of the reference points contained in the padded hull
/// (tolerance is pure numerical slack; the padding must do the covering).
double empirical_coverage(const RandupResult& estimate, const PointCloud& truth_boundary,
                          double tol);

}  // namespace reachset::estimators
