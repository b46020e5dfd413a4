#pragma once

#include <reachset/common.hpp>
#include <reachset/domains.hpp>

#include <optional>
#include <variant>

namespace reachset::maps {

/// One affine stage of a feed-forward network: y = W x + b.
struct ReluLayer {
    Matrix W;
    Eigen::VectorXd b;
};

/// Feed-forward network with componentwise max(0, .) between stages and an
/// affine output stage. The gradient convention at a kink (pre-activation
/// exactly zero) is a zero mask entry.
class ReluNetwork {
public:
    /// `layers` holds the hidden stages followed by the output stage; at
    /// least the output stage must be present.
    explicit ReluNetwork(std::vector<ReluLayer> layers);

    int in_dim() const { return in_dim_; }
    int out_dim() const { return out_dim_; }
    const std::vector<ReluLayer>& layers() const { return layers_; }

    Point eval(const Point& x) const;
    Matrix jacobian(const Point& x) const;

    /// Weights document: {"layers": [{"W": [[...]], "b": [...]}, ...]},
    /// matrices row-major, last entry the affine output stage.
    static ReluNetwork from_json_text(const std::string& text);
    static ReluNetwork load(const std::string& path);
    std::string to_json_text() const;

private:
    std::vector<ReluLayer> layers_;
    int in_dim_ = 0;
    int out_dim_ = 0;
};

struct AffineMap {
    Matrix A;
    Eigen::VectorXd b;
};

/// f(x) = (scale * x1, x2) on the plane.
struct ScalingMap {
    double scale = 1.0;
};

/// x_{t+1} = A x_t + B u_t with u_t from the network controller, iterated
/// `horizon` times.
struct ClosedLoopMap {
    Matrix A;
    Matrix B;
    ReluNetwork controller;
    int horizon = 0;
};

/// Reachability map: evaluation and Jacobian for each supported family.
class ReachMap {
public:
    ReachMap(AffineMap m);      // NOLINT(google-explicit-constructor)
    ReachMap(ScalingMap m);     // NOLINT(google-explicit-constructor)
    ReachMap(ReluNetwork m);    // NOLINT(google-explicit-constructor)
    ReachMap(ClosedLoopMap m);  // NOLINT(google-explicit-constructor)

    int in_dim() const { return in_dim_; }
    int out_dim() const { return out_dim_; }

    Point eval(const Point& x) const;
    Matrix jacobian(const Point& x) const;

private:
    std::variant<AffineMap, ScalingMap, ReluNetwork, ClosedLoopMap> map_;
    int in_dim_ = 0;
    int out_dim_ = 0;
};

/// Largest singular value via power iteration (relative tolerance 1e-8).
double spectral_norm(const Matrix& m);

/// Number of affine pieces of the map over the input set and the smallest
/// normalized volume among them; both are caller-supplied.
struct ActivationRegionData {
    long region_count = 0;
    double min_region_mass = 0.0;  // in (0, 1)
};

struct LipschitzEstimate {
    double L_hat = 0.0;
    int M_used = 0;
    /// region_count * (1 - min_region_mass)^M; probability that L_hat missed
    /// a region, when region data is supplied.
    std::optional<double> confidence_delta;
};

/// Sampled Lipschitz estimate: max spectral norm of the Jacobian over M
/// uniform-volume samples.
LipschitzEstimate estimate_lipschitz(const ReachMap& map, const domains::InputSet& set,
                                     const domains::SamplingSpec& spec, int count,
                                     std::optional<ActivationRegionData> region_data = {});

/// Exact network realization of u = clamp(-K.x, lo, hi):
/// clamp(v) = lo + relu(v - lo) - relu(v - hi).
ReluNetwork build_saturated_feedback_controller(const Eigen::VectorXd& gain, double lo, double hi);

}  // namespace reachset::maps
