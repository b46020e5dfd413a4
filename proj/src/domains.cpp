#include <reachset/domains.hpp>
#include <reachset/rng.hpp>

#include <cmath>
#include <string>

namespace reachset::domains {

namespace {

void check_spec(const SamplingSpec& spec) {
    if (spec.kind == Sampling::BetaRadial && !(spec.alpha >= 1.0))
        throw DomainError("SamplingSpec: BetaRadial alpha must be >= 1");
}

Point normal_direction(Rng& rng, int dim) {
    Point z(dim);
    double norm = 0.0;
    do {
        for (int j = 0; j < dim; ++j) z[j] = rng.normal();
        norm = z.norm();
    } while (norm < 1e-150);
    return z / norm;
}

}  // namespace

InputSet InputSet::ball(Point center, double radius) {
    if (center.size() < 1) throw DomainError("InputSet::ball: dimension must be >= 1");
    if (!center.allFinite()) throw DomainError("InputSet::ball: non-finite center");
    if (!(radius > 0.0)) throw DomainError("InputSet::ball: radius must be > 0");
    InputSet s;
    s.dim_ = static_cast<int>(center.size());
    s.shape_ = BallSet{std::move(center), radius};
    return s;
}

InputSet InputSet::axis_rectangle(Point lo, Point hi) {
    if (lo.size() < 1 || lo.size() != hi.size())
        throw DomainError("InputSet::axis_rectangle: bounds must share a dimension >= 1");
    if (!lo.allFinite() || !hi.allFinite())
        throw DomainError("InputSet::axis_rectangle: non-finite bound");
    for (Eigen::Index j = 0; j < lo.size(); ++j)
        if (!(lo[j] < hi[j]))
            throw DomainError("InputSet::axis_rectangle: lo must be < hi componentwise");
    InputSet s;
    s.dim_ = static_cast<int>(lo.size());
    s.shape_ = AxisRectangle{std::move(lo), std::move(hi)};
    return s;
}

bool InputSet::contains(const Point& q, double tol) const {
    if (q.size() != dim_) throw DomainError("InputSet::contains: dimension mismatch");
    if (const auto* b = as_ball()) return (q - b->center).norm() <= b->radius + tol;
    const auto& r = std::get<AxisRectangle>(shape_);
    for (Eigen::Index j = 0; j < q.size(); ++j)
        if (q[j] < r.lo[j] - tol || q[j] > r.hi[j] + tol) return false;
    return true;
}

std::optional<double> InputSet::inward_ball_radius() const {
    if (const auto* b = as_ball()) return b->radius;
    return std::nullopt;
}

PointCloud sample(const InputSet& set, const SamplingSpec& spec, int count) {
    check_spec(spec);
    if (count < 1) throw DomainError("sample: count must be >= 1");
    const int p = set.dim();
    Rng rng(spec.seed);
    PointCloud cloud(p);
    cloud.points.reserve(count);

    if (const auto* ball = set.as_ball()) {
        for (int i = 0; i < count; ++i) {
            double radius = ball->radius;
            if (spec.kind != Sampling::UniformBoundary) {
                double u = rng.uniform01();
                if (spec.kind == Sampling::BetaRadial) u = std::pow(u, 1.0 / spec.alpha);
                radius *= std::pow(u, 1.0 / p);
            }
            cloud.add(ball->center + radius * normal_direction(rng, p));
        }
        return cloud;
    }

    const auto& rect = *set.as_rectangle();
    if (spec.kind == Sampling::BetaRadial)
        throw DomainError("sample: BetaRadial is only defined on ball input sets");

    if (spec.kind == Sampling::UniformVolume) {
        for (int i = 0; i < count; ++i) {
            Point x(p);
            for (int j = 0; j < p; ++j) x[j] = rng.uniform(rect.lo[j], rect.hi[j]);
            cloud.add(std::move(x));
        }
        return cloud;
    }

    // UniformBoundary: pick a face with probability proportional to its
    // surface measure, then sample uniformly within the face.
    std::vector<double> face_measure(p);
    double total = 0.0;
    for (int k = 0; k < p; ++k) {
        double m = 1.0;
        for (int j = 0; j < p; ++j)
            if (j != k) m *= rect.hi[j] - rect.lo[j];
        face_measure[k] = m;
        total += 2.0 * m;
    }
    for (int i = 0; i < count; ++i) {
        double pick = rng.uniform01() * total;
        int axis = 0;
        bool upper = false;
        for (int k = 0; k < p; ++k) {
            if (pick < face_measure[k]) {
                axis = k;
                upper = false;
                break;
            }
            pick -= face_measure[k];
            if (pick < face_measure[k]) {
                axis = k;
                upper = true;
                break;
            }
            pick -= face_measure[k];
            axis = k;  // numerical tail lands on the last face
            upper = true;
        }
        Point x(p);
        for (int j = 0; j < p; ++j)
            x[j] = (j == axis) ? (upper ? rect.hi[j] : rect.lo[j])
                               : rng.uniform(rect.lo[j], rect.hi[j]);
        cloud.add(std::move(x));
    }
    return cloud;
}

double boundary_density_constant(const InputSet& set, const SamplingSpec& spec, double eps_bar) {
    check_spec(spec);
    const auto* ball = set.as_ball();
    if (ball == nullptr)
        throw DomainError("boundary_density_constant: requires a ball input set");
    if (spec.kind != Sampling::BetaRadial)
        throw DomainError("boundary_density_constant: requires a BetaRadial sampling spec");
    if (!(eps_bar > 0.0) || !(eps_bar < ball->radius))
        throw DomainError("boundary_density_constant: requires 0 < eps_bar < radius");
    const int p = set.dim();
    const double shell = std::max(1.0 - eps_bar / ball->radius, 0.0);
    const double base = std::pow(shell, static_cast<double>(p));
    const double numer = 1.0 - std::pow(base, spec.alpha);
    const double denom = 1.0 - base;
    return numer / denom;
}

double boundary_coverage_constant(const InputSet& set, double half_width) {
    const auto* rect = set.as_rectangle();
    if (rect == nullptr)
        throw DomainError("boundary_coverage_constant: requires a rectangle input set");
    if (set.dim() != 2)
        throw DomainError("boundary_coverage_constant: defined for 2-dimensional rectangles");
    double min_side = rect->hi[0] - rect->lo[0];
    double perimeter = 0.0;
    for (int j = 0; j < 2; ++j) {
        const double side = rect->hi[j] - rect->lo[j];
        min_side = std::min(min_side, side);
        perimeter += 2.0 * side;
    }
    if (!(half_width > 0.0) || !(half_width < 0.5 * min_side))
        throw DomainError("boundary_coverage_constant: requires 0 < half_width < min side / 2");
    return 2.0 * half_width / perimeter;
}

}  // namespace reachset::domains
