#pragma once

#include <reachset/common.hpp>

namespace reachset::geometry {

/// Convex hull of a point cloud, optionally padded by a closed ball of radius
/// `padding` (Minkowski sum). In dimension 2 the vertices are the extreme
/// points in counter-clockwise order; in dimension >= 3 the vertex list is an
/// implicit representation (possibly the whole cloud) and all set queries go
/// through the projection solver.
struct HullEstimate {
    int dim = 0;
    std::vector<Point> vertices;
    double padding = 0.0;
};

struct Ball {
    Point center;
    double radius = 0.0;
};

struct HausdorffOptions {
    int planar_directions = 4096;    // support grid when a padding is nonzero, dim 2
    int spatial_directions = 65536;  // quasi-random direction grid, dim >= 3
};

HullEstimate convex_hull(const PointCloud& cloud);

/// Euclidean distance from q to the padded hull: max(d(q, conv(V)) - padding, 0).
double point_to_hull_distance(const Point& q, const HullEstimate& hull);

bool hull_contains(const HullEstimate& hull, const Point& q, double tol);

/// Hausdorff distance between two padded hulls. Exact when both paddings are
/// zero (attained at vertices); otherwise evaluated on a direction grid via
/// support functions and reported as approximate.
double hausdorff_hulls(const HullEstimate& a, const HullEstimate& b,
                       const HausdorffOptions& opts = {});

/// Smallest enclosing ball. Exact randomized-incremental solver for
/// dim <= 10; above that a (1 + 1e-6)-approximate solver on the dual
/// quadratic program.
Ball min_enclosing_ball(const PointCloud& cloud);

/// Support function h(u) = padding * |u| + max over vertices of <u, v>.
double support_value(const HullEstimate& hull, const Point& direction);

/// Distance from q to conv(points). Used by the hull queries; exposed for
/// direct use on raw clouds.
double distance_to_convex(const std::vector<Point>& points, const Point& q);

}  // namespace reachset::geometry
