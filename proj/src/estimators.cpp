#include <reachset/estimators.hpp>

#include <chrono>
#include <limits>

namespace reachset::estimators {

namespace {

using Clock = std::chrono::steady_clock;

PointCloud propagate(const maps::ReachMap& map, const domains::InputSet& set,
                     const domains::SamplingSpec& spec, int count) {
    if (map.in_dim() != set.dim())
        throw DomainError("estimator: map input dimension does not match the input set");
    const PointCloud xs = domains::sample(set, spec, count);
    PointCloud ys(map.out_dim());
    ys.points.reserve(xs.points.size());
    for (const auto& x : xs.points) ys.add(map.eval(x));
    return ys;
}

}  // namespace

RandupResult randup(const maps::ReachMap& map, const domains::InputSet& set,
                    const domains::SamplingSpec& spec, int count, double eps) {
    if (eps < 0.0) throw DomainError("randup: eps must be >= 0");
    const auto t0 = Clock::now();
    RandupResult r;
    r.samples_out = propagate(map, set, spec, count);
    r.hull = geometry::convex_hull(r.samples_out);
    r.hull.padding = eps;
    r.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    r.seed = spec.seed;
    return r;
}

BallResult gotube_ball(const maps::ReachMap& map, const domains::InputSet& set,
                       const domains::SamplingSpec& spec, int count, double eps) {
    if (eps < 0.0) throw DomainError("gotube_ball: eps must be >= 0");
    const auto t0 = Clock::now();
    BallResult r;
    r.samples_out = propagate(map, set, spec, count);
    r.ball = geometry::min_enclosing_ball(r.samples_out);
    r.ball.radius += eps;
    r.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

bool union_contains(const UnionOfBalls& u, const Point& q) {
    if (u.radius < 0.0) throw DomainError("union_contains: radius must be >= 0");
    if (u.centers.empty()) throw DomainError("union_contains: empty center cloud");
    if (q.size() != u.centers.dim) throw DomainError("union_contains: dimension mismatch");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : u.centers.points) best = std::min(best, (q - c).norm());
    return best <= u.radius;
}

double empirical_coverage(const RandupResult& estimate, const PointCloud& truth_boundary,
                          double tol) {
    if (truth_boundary.empty()) throw DomainError("empirical_coverage: empty reference cloud");
    if (truth_boundary.dim != estimate.hull.dim)
        throw DomainError("empirical_coverage: dimension mismatch");
    long covered = 0;
    for (const auto& q : truth_boundary.points)
        if (geometry::hull_contains(estimate.hull, q, tol)) ++covered;
    return static_cast<double>(covered) / static_cast<double>(truth_boundary.size());
}

}  // namespace reachset::estimators
