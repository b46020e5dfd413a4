#pragma once

#include <reachset/common.hpp>
#include <reachset/specfun.hpp>

#include <functional>
#include <variant>

namespace reachset::bounds {

/// Covering-number upper bounds for the supported boundary families.
struct Circle2D {
    double radius = 0.0;
};
struct RectBoundary2D {
    double perimeter = 0.0;
};
/// General bound (2 * d_sup * sqrt(n) / d)^n for any compact set with
/// circumradius d_sup; use on the full input set when boundary sampling
/// assumptions do not hold.
struct GeneralBall {
    double d_sup = 0.0;
    int n = 0;
};

using CoveringDescriptor = std::variant<Circle2D, RectBoundary2D, GeneralBall>;

/// Upper bound on the d-covering number of the described set.
double covering_bound(const CoveringDescriptor& c, double d);

/// Boundary-ball mass supplied directly (Lambda in (0, 1)).
struct DirectLambda {
    double value = 0.0;
};

/// Boundary-ball mass from the inward-ball geometry: p0 times the volume of
/// B(0, eps/(2L)) intersected with the inward ball of radius r.
struct RConvexLambda {
    int dim = 0;
    double r = 0.0;
    double p0 = 0.0;
};

using LambdaSource = std::variant<DirectLambda, RConvexLambda>;

struct BoundSpec {
    double eps = 0.0;
    double L = 0.0;
    CoveringDescriptor covering;
    LambdaSource lambda_source;
    /// The guarantee additionally assumes that the output-set boundary is the
    /// image of the input-set boundary. When false, cover the full input set
    /// (GeneralBall on X) instead of its boundary.
    bool assumes_boundary_to_boundary = true;
};

/// Probability mass lower bound Lambda for the spec.
double lambda_value(const BoundSpec& spec);

/// Failure-probability bound D * (1 - Lambda)^M. Values above 1 are returned
/// as-is (vacuous bound).
double delta_m(const BoundSpec& spec, long samples);

/// Smallest M with delta_m(spec, M) <= delta_target.
long min_samples(const BoundSpec& spec, double delta_target);

/// Smallest padding (within bisection tolerance 1e-6) whose failure bound at
/// M samples is at most delta_target. `p0_of_eps` supplies the density
/// constant for each candidate eps, since it may depend on eps itself.
double eps_for_delta(int dim, double r, const std::function<double(double)>& p0_of_eps,
                     const CoveringDescriptor& covering, double L, long samples,
                     double delta_target);

}  // namespace reachset::bounds
