#pragma once

#include <reachset/common.hpp>

namespace reachset::specfun {

/// Natural log of the gamma function, x > 0.
double ln_gamma(double x);

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double x, double a, double b);

/// Lebesgue volume of the p-ball of radius r (log form avoids overflow for
/// large p).
double ln_ball_volume(int p, double r);
double ball_volume(int p, double r);

/// Volume of the spherical cap of the p-ball of radius r cut by a hyperplane
/// at signed distance a from the center (a = r: empty cap, a = -r: full ball).
double cap_volume(int p, double r, double a);

/// Intersection of B(0, rho) with B((r,0,...,0), r) in dimension `dim`.
struct CapIntersectionQuery {
    int dim = 0;
    double rho = 0.0;
    double r = 0.0;
};

struct CapIntersectionParts {
    double c1 = 0.0;        // cut distance from the origin-centered ball
    double c2 = 0.0;        // cut distance from the offset ball
    double near_cap = 0.0;  // cap volume of B(0, rho)
    double far_cap = 0.0;   // cap volume of B(rvec, r)
    double volume = 0.0;
    bool clamped_full = false;   // rho >= 2r: offset ball fully contained
    bool clamped_empty = false;  // rho == 0
};

CapIntersectionParts cap_intersection_parts(const CapIntersectionQuery& q);
double cap_intersection_volume(const CapIntersectionQuery& q);

}  // namespace reachset::specfun
