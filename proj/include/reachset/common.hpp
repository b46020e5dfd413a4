#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reachset {

/// Violated precondition or invalid argument combination.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative routine failed to reach its documented tolerance.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A solver was asked for a quantity that does not exist in its search range.
class InfeasibleError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

using Point = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Collection of points of one fixed dimension, all coordinates finite.
struct PointCloud {
    int dim = 0;
    std::vector<Point> points;

    PointCloud() = default;

    explicit PointCloud(int dimension) : dim(dimension) {
        if (dimension < 1) throw DomainError("PointCloud: dimension must be >= 1");
    }

    PointCloud(int dimension, std::vector<Point> pts) : PointCloud(dimension) {
        points.reserve(pts.size());
        for (auto& p : pts) add(std::move(p));
    }

    void add(Point p) {
        if (dim < 1) throw DomainError("PointCloud: dimension must be >= 1");
        if (p.size() != dim)
            throw DomainError("PointCloud: point of dimension " + std::to_string(p.size()) +
                              " added to cloud of dimension " + std::to_string(dim));
        if (!p.allFinite()) throw DomainError("PointCloud: non-finite coordinate");
        points.push_back(std::move(p));
    }

    int size() const { return static_cast<int>(points.size()); }
    bool empty() const { return points.empty(); }
};

inline Point make_point(std::initializer_list<double> coords) {
    Point p(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (double c : coords) p[i++] = c;
    return p;
}

}  // namespace reachset
