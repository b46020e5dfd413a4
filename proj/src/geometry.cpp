#include <reachset/geometry.hpp>
#include <reachset/rng.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace reachset::geometry {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool lex_less(const Point& a, const Point& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

std::vector<Point> sorted_unique(const std::vector<Point>& pts) {
    std::vector<Point> out = pts;
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end(), [](const Point& a, const Point& b) { return a == b; }),
              out.end());
    return out;
}

double cross2(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; returns the extreme points in counter-clockwise
// order, collinear boundary points removed. Ties are resolved by the
// lexicographic presort.
std::vector<Point> hull_2d(const std::vector<Point>& pts) {
    std::vector<Point> p = sorted_unique(pts);
    const std::size_t n = p.size();
    if (n <= 2) return p;
    std::vector<Point> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(h[k - 2], h[k - 1], p[i]) <= 0.0) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross2(h[k - 2], h[k - 1], p[i]) <= 0.0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

double point_segment_distance(const Point& q, const Point& a, const Point& b) {
    const Point ab = b - a;
    const double len2 = ab.squaredNorm();
    if (len2 == 0.0) return (q - a).norm();
    const double t = std::clamp((q - a).dot(ab) / len2, 0.0, 1.0);
    return (q - (a + t * ab)).norm();
}

// Exact distance to a convex polygon given in CCW order.
double distance_to_polygon(const std::vector<Point>& v, const Point& q) {
    const std::size_t n = v.size();
    if (n == 1) return (q - v[0]).norm();
    if (n == 2) return point_segment_distance(q, v[0], v[1]);
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (cross2(v[i], v[(i + 1) % n], q) < 0.0) {
            inside = false;
            break;
        }
    }
    if (inside) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_distance(q, v[i], v[(i + 1) % n]));
    return best;
}

// Minimum-norm point in the affine hull of the selected columns:
// minimize ||sum a_i w_i||^2 subject to sum a_i = 1, via the bordered
// normal-equation system.
Eigen::VectorXd affine_min_norm(const Matrix& w, const std::vector<int>& active) {
    const int k = static_cast<int>(active.size());
    Matrix sys(k + 1, k + 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sys(i, j) = w.col(active[i]).dot(w.col(active[j]));
    for (int i = 0; i < k; ++i) {
        sys(i, k) = 1.0;
        sys(k, i) = 1.0;
    }
    sys(k, k) = 0.0;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    rhs[k] = 1.0;
    Eigen::VectorXd sol = sys.completeOrthogonalDecomposition().solve(rhs);
    return sol.head(k);
}

// Wolfe's minimum-norm-point algorithm over conv{points} - q.
// Finite in exact arithmetic; tolerance and iteration cap give the
// documented numerical contract.
double min_norm_point_distance(const std::vector<Point>& points, const Point& q) {
    const int n = static_cast<int>(points.size());
    const int d = static_cast<int>(q.size());
    Matrix w(d, n);
    double scale2 = 0.0;
    for (int i = 0; i < n; ++i) {
        w.col(i) = points[i] - q;
        scale2 = std::max(scale2, w.col(i).squaredNorm());
    }
    if (scale2 == 0.0) return 0.0;

    constexpr int max_iter = 10000;
    constexpr double coeff_floor = 1e-12;
    const double gap_tol = 1e-13 * std::max(scale2, 1e-30);

    int start = 0;
    for (int i = 1; i < n; ++i)
        if (w.col(i).squaredNorm() < w.col(start).squaredNorm()) start = i;

    std::vector<int> active{start};
    std::vector<double> lam{1.0};
    Eigen::VectorXd x = w.col(start);

    for (int iter = 0; iter < max_iter; ++iter) {
        int best = 0;
        double best_dot = x.dot(w.col(0));
        for (int i = 1; i < n; ++i) {
            const double dot = x.dot(w.col(i));
            if (dot < best_dot) {
                best_dot = dot;
                best = i;
            }
        }
        if (x.squaredNorm() - best_dot <= gap_tol) return x.norm();
        if (std::find(active.begin(), active.end(), best) != active.end())
            return x.norm();  // no progress possible at this precision
        active.push_back(best);
        lam.push_back(0.0);

        // minor cycle: pull the affine minimizer back into the simplex
        for (int minor = 0; minor <= max_iter; ++minor) {
            if (minor == max_iter)
                throw NumericalError("point projection: minor cycle failed to converge");
            Eigen::VectorXd alpha = affine_min_norm(w, active);
            double min_alpha = alpha.minCoeff();
            if (min_alpha >= coeff_floor) {
                for (std::size_t i = 0; i < active.size(); ++i) lam[i] = alpha[i];
                break;
            }
            double theta = 1.0;
            for (std::size_t i = 0; i < active.size(); ++i)
                if (alpha[i] < coeff_floor && lam[i] > alpha[i])
                    theta = std::min(theta, lam[i] / (lam[i] - alpha[i]));
            std::vector<int> keep_idx;
            std::vector<double> keep_lam;
            for (std::size_t i = 0; i < active.size(); ++i) {
                const double v = (1.0 - theta) * lam[i] + theta * alpha[i];
                if (v > coeff_floor) {
                    keep_idx.push_back(active[i]);
                    keep_lam.push_back(v);
                }
            }
            if (keep_idx.empty()) {
                // numerical corner: keep the largest coefficient
                std::size_t arg = 0;
                for (std::size_t i = 1; i < active.size(); ++i)
                    if (lam[i] > lam[arg]) arg = i;
                keep_idx.push_back(active[arg]);
                keep_lam.push_back(1.0);
            }
            double total = std::accumulate(keep_lam.begin(), keep_lam.end(), 0.0);
            for (auto& v : keep_lam) v /= total;
            active = std::move(keep_idx);
            lam = std::move(keep_lam);
        }
        x.setZero();
        for (std::size_t i = 0; i < active.size(); ++i) x += lam[i] * w.col(active[i]);
        if (x.squaredNorm() <= 1e-28 * scale2) return 0.0;
    }
    throw NumericalError("point projection: iteration cap exceeded");
}

void check_dims(int a, int b, const char* what) {
    if (a != b)
        throw DomainError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
}

// --- smallest enclosing ball -------------------------------------------------

// Smallest ball with all boundary points on its surface (circumsphere within
// their affine hull).
Ball ball_from_boundary(const std::vector<const Point*>& boundary, int dim) {
    Ball b;
    b.center = Point::Zero(dim);
    b.radius = -1.0;  // empty sentinel
    const int k = static_cast<int>(boundary.size());
    if (k == 0) return b;
    if (k == 1) {
        b.center = *boundary[0];
        b.radius = 0.0;
        return b;
    }
    const Point& a0 = *boundary[0];
    Matrix basis(dim, k - 1);
    for (int i = 1; i < k; ++i) basis.col(i - 1) = *boundary[i] - a0;
    Matrix gram = basis.transpose() * basis;
    Eigen::VectorXd rhs(k - 1);
    for (int i = 0; i < k - 1; ++i) rhs[i] = 0.5 * basis.col(i).squaredNorm();
    Eigen::VectorXd t = gram.completeOrthogonalDecomposition().solve(rhs);
    b.center = a0 + basis * t;
    b.radius = (b.center - a0).norm();
    return b;
}

bool ball_covers(const Ball& b, const Point& p) {
    if (b.radius < 0.0) return false;
    const double slack = 1e-12 * std::max(1.0, b.radius * b.radius);
    return (p - b.center).squaredNorm() <= b.radius * b.radius + slack;
}

// Welzl's move-to-front algorithm; recursion depth is bounded by the support
// size (dim + 2), not the number of points.
Ball welzl_mtf(std::vector<const Point*>& pts, std::size_t end,
               std::vector<const Point*>& boundary, int dim) {
    Ball b = ball_from_boundary(boundary, dim);
    if (static_cast<int>(boundary.size()) == dim + 1) return b;
    for (std::size_t i = 0; i < end; ++i) {
        if (!ball_covers(b, *pts[i])) {
            boundary.push_back(pts[i]);
            b = welzl_mtf(pts, i, boundary, dim);
            boundary.pop_back();
            const Point* moved = pts[i];
            for (std::size_t j = i; j > 0; --j) pts[j] = pts[j - 1];
            pts[0] = moved;
        }
    }
    return b;
}

// (1 + 1e-6)-approximate solver for dim > 10: Frank-Wolfe with away steps on
// the dual  max_l  sum l_i |p_i|^2 - |sum l_i p_i|^2  over the simplex.
// The reported radius is the exact covering radius of the final center.
Ball meb_dual_approx(const PointCloud& cloud) {
    const int n = cloud.size();
    const int d = cloud.dim;
    Eigen::VectorXd lam = Eigen::VectorXd::Constant(n, 1.0 / n);
    Point c = Point::Zero(d);
    Eigen::VectorXd norms2(n);
    for (int i = 0; i < n; ++i) {
        norms2[i] = cloud.points[i].squaredNorm();
        c += lam[i] * cloud.points[i];
    }
    const int max_iter = 200000;
    for (int iter = 0; iter < max_iter; ++iter) {
        const double weighted_norms = lam.dot(norms2);
        const double c2 = c.squaredNorm();
        const double avg_grad = weighted_norms - 2.0 * c2;  // sum_i lam_i g_i
        int fw = 0, away = -1;
        double fw_grad = -std::numeric_limits<double>::infinity();
        double away_grad = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            const double g = norms2[i] - 2.0 * cloud.points[i].dot(c);
            if (g > fw_grad) {
                fw_grad = g;
                fw = i;
            }
            if (lam[i] > 1e-14 && g < away_grad) {
                away_grad = g;
                away = i;
            }
        }
        const double scale = std::max(1.0, norms2.maxCoeff());
        if (fw_grad - avg_grad <= 1e-13 * scale) break;
        const bool use_away =
            away >= 0 && lam[away] < 1.0 - 1e-12 && (avg_grad - away_grad) > (fw_grad - avg_grad);
        // exact line search of the concave quadratic along the chosen direction
        Point dir = use_away ? Point(c - cloud.points[away]) : Point(cloud.points[fw] - c);
        const double denom = dir.squaredNorm();
        if (denom <= 0.0) break;
        const double numer = use_away ? (weighted_norms - norms2[away]) - 2.0 * c.dot(dir)
                                      : (norms2[fw] - weighted_norms) - 2.0 * c.dot(dir);
        const double step_max = use_away ? lam[away] / (1.0 - lam[away]) : 1.0;
        const double step = std::clamp(numer / (2.0 * denom), 0.0, step_max);
        if (step <= 0.0) break;
        if (use_away) {
            lam *= (1.0 + step);
            lam[away] -= step;
        } else {
            lam *= (1.0 - step);
            lam[fw] += step;
        }
        c += step * dir;
    }
    Ball b;
    b.center = c;
    double r2 = 0.0;
    for (const auto& p : cloud.points) r2 = std::max(r2, (p - c).squaredNorm());
    b.radius = std::sqrt(r2);
    return b;
}

// Deterministic quasi-random unit directions: R_d Kronecker sequence mapped
// through the inverse normal CDF, then normalized.
double inverse_normal_cdf(double p) {
    // Acklam's rational approximation (relative error ~1e-9).
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double dd[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

std::vector<Point> direction_grid(int dim, int count) {
    std::vector<Point> dirs;
    dirs.reserve(count);
    if (dim == 2) {
        for (int k = 0; k < count; ++k) {
            const double a = 2.0 * kPi * k / count;
            dirs.push_back(make_point({std::cos(a), std::sin(a)}));
        }
        return dirs;
    }
    // generalized golden-ratio sequence in [0,1)^dim
    double phi = 1.0;
    for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (dim + 1));
    std::vector<double> alpha(dim), u(dim, 0.5);
    double ap = 1.0;
    for (int j = 0; j < dim; ++j) {
        ap /= phi;
        alpha[j] = ap;
    }
    for (int k = 0; k < count; ++k) {
        Point v(dim);
        for (int j = 0; j < dim; ++j) {
            u[j] += alpha[j];
            if (u[j] >= 1.0) u[j] -= 1.0;
            const double t = std::min(std::max(u[j], 1e-12), 1.0 - 1e-12);
            v[j] = inverse_normal_cdf(t);
        }
        const double norm = v.norm();
        if (norm < 1e-12) continue;
        dirs.push_back(v / norm);
    }
    return dirs;
}

}  // namespace

HullEstimate convex_hull(const PointCloud& cloud) {
    if (cloud.empty()) throw DomainError("convex_hull: empty cloud");
    HullEstimate h;
    h.dim = cloud.dim;
    h.padding = 0.0;
    if (cloud.dim == 1) {
        Point lo = cloud.points.front(), hi = cloud.points.front();
        for (const auto& p : cloud.points) {
            if (p[0] < lo[0]) lo = p;
            if (p[0] > hi[0]) hi = p;
        }
        h.vertices.push_back(lo);
        if (hi[0] > lo[0]) h.vertices.push_back(hi);
        return h;
    }
    if (cloud.dim == 2) {
        h.vertices = hull_2d(cloud.points);
        return h;
    }
    // dim >= 3: implicit representation by the (deduplicated) cloud
    h.vertices = sorted_unique(cloud.points);
    return h;
}

double distance_to_convex(const std::vector<Point>& points, const Point& q) {
    if (points.empty()) throw DomainError("distance_to_convex: empty vertex set");
    const int dim = static_cast<int>(q.size());
    if (dim == 2) {
        // exact when the vertex list is a CCW polygon; convex_hull guarantees that
        return distance_to_polygon(points, q);
    }
    if (dim == 1) {
        double lo = points.front()[0], hi = lo;
        for (const auto& p : points) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        if (q[0] < lo) return lo - q[0];
        if (q[0] > hi) return q[0] - hi;
        return 0.0;
    }
    return min_norm_point_distance(points, q);
}

double point_to_hull_distance(const Point& q, const HullEstimate& hull) {
    check_dims(static_cast<int>(q.size()), hull.dim, "point_to_hull_distance");
    const double d = distance_to_convex(hull.vertices, q);
    return std::max(d - hull.padding, 0.0);
}

bool hull_contains(const HullEstimate& hull, const Point& q, double tol) {
    if (tol < 0.0) throw DomainError("hull_contains: tol must be >= 0");
    return point_to_hull_distance(q, hull) <= tol;
}

double support_value(const HullEstimate& hull, const Point& direction) {
    check_dims(static_cast<int>(direction.size()), hull.dim, "support_value");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : hull.vertices) best = std::max(best, direction.dot(v));
    return best + hull.padding * direction.norm();
}

double hausdorff_hulls(const HullEstimate& a, const HullEstimate& b,
                       const HausdorffOptions& opts) {
    check_dims(a.dim, b.dim, "hausdorff_hulls");
    if (a.vertices.empty() || b.vertices.empty())
        throw DomainError("hausdorff_hulls: empty hull");
    if (a.dim == 1) {
        double alo, ahi, blo, bhi;
        alo = ahi = a.vertices.front()[0];
        for (const auto& v : a.vertices) {
            alo = std::min(alo, v[0]);
            ahi = std::max(ahi, v[0]);
        }
        blo = bhi = b.vertices.front()[0];
        for (const auto& v : b.vertices) {
            blo = std::min(blo, v[0]);
            bhi = std::max(bhi, v[0]);
        }
        return std::max(std::abs((alo - a.padding) - (blo - b.padding)),
                        std::abs((ahi + a.padding) - (bhi + b.padding)));
    }
    if (a.padding == 0.0 && b.padding == 0.0) {
        // distance-to-convex-set is convex, so each directed sup is attained
        // at a vertex
        double best = 0.0;
        for (const auto& v : a.vertices) best = std::max(best, distance_to_convex(b.vertices, v));
        for (const auto& w : b.vertices) best = std::max(best, distance_to_convex(a.vertices, w));
        return best;
    }
    const int count = a.dim == 2 ? opts.planar_directions : opts.spatial_directions;
    double best = 0.0;
    for (const auto& u : direction_grid(a.dim, count)) {
        double ha = a.padding, hb = b.padding;
        double sa = -std::numeric_limits<double>::infinity();
        double sb = sa;
        for (const auto& v : a.vertices) sa = std::max(sa, u.dot(v));
        for (const auto& w : b.vertices) sb = std::max(sb, u.dot(w));
        best = std::max(best, std::abs(sa + ha - sb - hb));
    }
    return best;
}

Ball min_enclosing_ball(const PointCloud& cloud) {
    if (cloud.empty()) throw DomainError("min_enclosing_ball: empty cloud");
    if (cloud.dim > 10) return meb_dual_approx(cloud);
    std::vector<const Point*> pts;
    pts.reserve(cloud.points.size());
    for (const auto& p : cloud.points) pts.push_back(&p);
    // deterministic shuffle; expected-linear-time behavior of the move-to-front
    // scheme relies on a random insertion order
    Rng rng(0x9D2C5680CA3F1ED5ULL);
    for (std::size_t i = pts.size(); i > 1; --i)
        std::swap(pts[i - 1], pts[rng.below(i)]);
    std::vector<const Point*> boundary;
    Ball b = welzl_mtf(pts, pts.size(), boundary, cloud.dim);
    if (b.radius < 0.0) {
        b.center = *pts[0];
        b.radius = 0.0;
    }
    // tighten the radius to exactly cover the input
    double r2 = 0.0;
    for (const auto& p : cloud.points) r2 = std::max(r2, (p - b.center).squaredNorm());
    b.radius = std::sqrt(r2);
    return b;
}

}  // namespace reachset::geometry
