#include <reachset/specfun.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace reachset::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lentz continued fraction for the incomplete beta (requires x < (a+1)/(a+b+2)
// for fast convergence; callers switch branches via the symmetry relation).
double beta_continued_fraction(double x, double a, double b) {
    constexpr double tiny = 1e-300;
    constexpr double rel_stop = 1e-15;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 1000; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < rel_stop) return h;
    }
    throw NumericalError("incomplete_beta: continued fraction did not converge");
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("ln_gamma: requires x > 0, got " + std::to_string(x));
    return std::lgamma(x);
}

double incomplete_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("incomplete_beta: requires a, b > 0");
    if (!(x >= 0.0) || !(x <= 1.0))
        throw DomainError("incomplete_beta: requires x in [0, 1], got " + std::to_string(x));
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double ln_front =
        ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(x, a, b) / a;
    return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

double ln_ball_volume(int p, double r) {
    if (p < 1) throw DomainError("ln_ball_volume: dimension must be >= 1");
    if (!(r > 0.0)) throw DomainError("ln_ball_volume: radius must be > 0");
    return 0.5 * p * std::log(kPi) - ln_gamma(0.5 * p + 1.0) + p * std::log(r);
}

double ball_volume(int p, double r) {
    if (r == 0.0) return 0.0;
    return std::exp(ln_ball_volume(p, r));
}

double cap_volume(int p, double r, double a) {
    if (p < 1) throw DomainError("cap_volume: dimension must be >= 1");
    if (!(r > 0.0)) throw DomainError("cap_volume: radius must be > 0");
    if (std::abs(a) > r)
        throw DomainError("cap_volume: cut distance |a| = " + std::to_string(std::abs(a)) +
                          " exceeds radius " + std::to_string(r));
    // half-ball volume in log space
    const double ln_half = ln_ball_volume(p, r) - std::log(2.0);
    const double x = 1.0 - (a / r) * (a / r);
    const double reg = incomplete_beta(x, 0.5 * (p + 1.0), 0.5);
    if (a >= 0.0) {
        if (reg == 0.0) return 0.0;
        return std::exp(ln_half + std::log(reg));
    }
    return std::exp(ln_half + std::log(2.0 - reg));
}

CapIntersectionParts cap_intersection_parts(const CapIntersectionQuery& q) {
    if (q.dim < 1) throw DomainError("cap_intersection_volume: dimension must be >= 1");
    if (!(q.r > 0.0)) throw DomainError("cap_intersection_volume: r must be > 0");
    if (q.rho < 0.0) throw DomainError("cap_intersection_volume: rho must be >= 0");

    CapIntersectionParts parts;
    if (q.rho == 0.0) {
        parts.clamped_empty = true;
        return parts;
    }
    if (q.rho >= 2.0 * q.r) {
        // every point of B(rvec, r) has norm <= 2r <= rho
        parts.clamped_full = true;
        parts.volume = ball_volume(q.dim, q.r);
        return parts;
    }
    parts.c1 = q.rho * q.rho / (2.0 * q.r);
    parts.c2 = (2.0 * q.r * q.r - q.rho * q.rho) / (2.0 * q.r);
    parts.near_cap = cap_volume(q.dim, q.rho, parts.c1);
    parts.far_cap = cap_volume(q.dim, q.r, parts.c2);
    parts.volume = parts.near_cap + parts.far_cap;
    return parts;
}

double cap_intersection_volume(const CapIntersectionQuery& q) {
    return cap_intersection_parts(q).volume;
}

}  // namespace reachset::specfun
