#pragma once

#include <reachset/common.hpp>

#include <cstdint>
#include <optional>
#include <variant>

namespace reachset::domains {

struct BallSet {
    Point center;
    double radius = 0.0;
};

struct AxisRectangle {
    Point lo;
    Point hi;
};

/// Geometric input domain: a Euclidean ball or an axis-aligned rectangle.
class InputSet {
public:
    static InputSet ball(Point center, double radius);
    static InputSet axis_rectangle(Point lo, Point hi);

    int dim() const { return dim_; }
    const BallSet* as_ball() const { return std::get_if<BallSet>(&shape_); }
    const AxisRectangle* as_rectangle() const { return std::get_if<AxisRectangle>(&shape_); }

    bool contains(const Point& q, double tol = 0.0) const;

    /// Radius of the inward ball touching every boundary point (the
    /// r-convexity constant of the complement). Balls: their own radius.
    /// Rectangles have corners and carry none.
    std::optional<double> inward_ball_radius() const;

private:
    InputSet() = default;
    int dim_ = 0;
    std::variant<BallSet, AxisRectangle> shape_;
};

enum class Sampling {
    UniformVolume,
    UniformBoundary,
    BetaRadial,  // radial CDF u = v^(1/alpha); alpha = 1 is UniformVolume
};

struct SamplingSpec {
    Sampling kind = Sampling::UniformVolume;
    double alpha = 1.0;  // BetaRadial concentration, >= 1
    std::uint64_t seed = 0;
};

inline SamplingSpec uniform_volume(std::uint64_t seed) {
    return {Sampling::UniformVolume, 1.0, seed};
}
inline SamplingSpec uniform_boundary(std::uint64_t seed) {
    return {Sampling::UniformBoundary, 1.0, seed};
}
inline SamplingSpec beta_radial(double alpha, std::uint64_t seed) {
    return {Sampling::BetaRadial, alpha, seed};
}

/// M i.i.d. samples from the set under the spec's distribution.
/// Deterministic given the spec's seed; sequential, so a longer run extends a
/// shorter one with the same seed sample-for-sample.
PointCloud sample(const InputSet& set, const SamplingSpec& spec, int count);

/// Near-boundary density ratio of the Beta-radial distribution on a ball:
/// the probability of landing within eps_bar of the boundary, relative to the
/// same probability under the uniform-volume distribution.
/// Note: this matches the constant used in the guarantee computations, which
/// is a near-boundary mass ratio rather than a global density lower bound.
double boundary_density_constant(const InputSet& set, const SamplingSpec& spec, double eps_bar);

/// Probability mass of a boundary arc of half-width `half_width` under the
/// perimeter-uniform measure on a rectangle boundary: 2*half_width/perimeter.
double boundary_coverage_constant(const InputSet& set, double half_width);

}  // namespace reachset::domains
