#include <reachset/maps.hpp>
#include <reachset/rng.hpp>

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace reachset::maps {

namespace {

void check_input(const Point& x, int expected, const char* what) {
    if (x.size() != expected)
        throw DomainError(std::string(what) + ": input dimension " + std::to_string(x.size()) +
                          ", expected " + std::to_string(expected));
    if (!x.allFinite()) throw DomainError(std::string(what) + ": non-finite input");
}

}  // namespace

ReluNetwork::ReluNetwork(std::vector<ReluLayer> layers) : layers_(std::move(layers)) {
    if (layers_.empty())
        throw DomainError("ReluNetwork: at least the affine output stage is required");
    for (std::size_t k = 0; k < layers_.size(); ++k) {
        const auto& l = layers_[k];
        if (l.W.rows() < 1 || l.W.cols() < 1 || l.b.size() != l.W.rows())
            throw DomainError("ReluNetwork: layer " + std::to_string(k) + " has inconsistent shapes");
        if (!l.W.allFinite() || !l.b.allFinite())
            throw DomainError("ReluNetwork: layer " + std::to_string(k) + " has non-finite weights");
        if (k > 0 && l.W.cols() != layers_[k - 1].W.rows())
            throw DomainError("ReluNetwork: layer " + std::to_string(k) +
                              " input width does not chain with the previous layer");
    }
    in_dim_ = static_cast<int>(layers_.front().W.cols());
    out_dim_ = static_cast<int>(layers_.back().W.rows());
}

Point ReluNetwork::eval(const Point& x) const {
    check_input(x, in_dim_, "ReluNetwork::eval");
    Point h = x;
    for (std::size_t k = 0; k + 1 < layers_.size(); ++k)
        h = (layers_[k].W * h + layers_[k].b).cwiseMax(0.0);
    return layers_.back().W * h + layers_.back().b;
}

Matrix ReluNetwork::jacobian(const Point& x) const {
    check_input(x, in_dim_, "ReluNetwork::jacobian");
    Point h = x;
    Matrix j = Matrix::Identity(in_dim_, in_dim_);
    for (std::size_t k = 0; k + 1 < layers_.size(); ++k) {
        const Point pre = layers_[k].W * h + layers_[k].b;
        Matrix masked = layers_[k].W * j;
        for (Eigen::Index i = 0; i < pre.size(); ++i)
            if (!(pre[i] > 0.0)) masked.row(i).setZero();
        j = std::move(masked);
        h = pre.cwiseMax(0.0);
    }
    return layers_.back().W * j;
}

ReluNetwork ReluNetwork::from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("network weights: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("layers") || !doc["layers"].is_array() ||
        doc["layers"].empty())
        throw DomainError("network weights: expected an object with a nonempty \"layers\" array");
    std::vector<ReluLayer> layers;
    for (const auto& entry : doc["layers"]) {
        if (!entry.is_object() || !entry.contains("W") || !entry.contains("b"))
            throw DomainError("network weights: each layer needs \"W\" and \"b\"");
        const auto& wj = entry["W"];
        const auto& bj = entry["b"];
        if (!wj.is_array() || wj.empty() || !wj[0].is_array() || wj[0].empty() || !bj.is_array())
            throw DomainError("network weights: \"W\" must be a nonempty 2-d array");
        const std::size_t rows = wj.size();
        const std::size_t cols = wj[0].size();
        ReluLayer layer;
        layer.W.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        for (std::size_t r = 0; r < rows; ++r) {
            if (!wj[r].is_array() || wj[r].size() != cols)
                throw DomainError("network weights: ragged \"W\" rows");
            for (std::size_t c = 0; c < cols; ++c) {
                if (!wj[r][c].is_number())
                    throw DomainError("network weights: non-numeric entry in \"W\"");
                layer.W(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    wj[r][c].get<double>();
            }
        }
        if (bj.size() != rows) throw DomainError("network weights: \"b\" length must match rows of \"W\"");
        layer.b.resize(static_cast<Eigen::Index>(rows));
        for (std::size_t r = 0; r < rows; ++r) {
            if (!bj[r].is_number()) throw DomainError("network weights: non-numeric entry in \"b\"");
            layer.b[static_cast<Eigen::Index>(r)] = bj[r].get<double>();
        }
        layers.push_back(std::move(layer));
    }
    return ReluNetwork(std::move(layers));
}

ReluNetwork ReluNetwork::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("network weights: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

std::string ReluNetwork::to_json_text() const {
    nlohmann::json layers = nlohmann::json::array();
    for (const auto& l : layers_) {
        nlohmann::json wj = nlohmann::json::array();
        for (Eigen::Index r = 0; r < l.W.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index c = 0; c < l.W.cols(); ++c) row.push_back(l.W(r, c));
            wj.push_back(std::move(row));
        }
        nlohmann::json bj = nlohmann::json::array();
        for (Eigen::Index r = 0; r < l.b.size(); ++r) bj.push_back(l.b[r]);
        layers.push_back({{"W", std::move(wj)}, {"b", std::move(bj)}});
    }
    return nlohmann::json{{"layers", std::move(layers)}}.dump(2);
}

ReachMap::ReachMap(AffineMap m) : map_(std::move(m)) {
    const auto& a = std::get<AffineMap>(map_);
    if (a.A.rows() < 1 || a.A.cols() < 1 || a.b.size() != a.A.rows())
        throw DomainError("AffineMap: inconsistent shapes");
    if (!a.A.allFinite() || !a.b.allFinite()) throw DomainError("AffineMap: non-finite entries");
    in_dim_ = static_cast<int>(a.A.cols());
    out_dim_ = static_cast<int>(a.A.rows());
}

ReachMap::ReachMap(ScalingMap m) : map_(m), in_dim_(2), out_dim_(2) {
    if (!(m.scale >= 1.0)) throw DomainError("ScalingMap: scale must be >= 1");
}

ReachMap::ReachMap(ReluNetwork m)
    : map_(std::move(m)),
      in_dim_(std::get<ReluNetwork>(map_).in_dim()),
      out_dim_(std::get<ReluNetwork>(map_).out_dim()) {}

ReachMap::ReachMap(ClosedLoopMap m) : map_(std::move(m)) {
    const auto& cl = std::get<ClosedLoopMap>(map_);
    const Eigen::Index n = cl.A.rows();
    if (cl.A.cols() != n || n < 1) throw DomainError("ClosedLoopMap: A must be square");
    if (cl.B.rows() != n) throw DomainError("ClosedLoopMap: B rows must match the state dimension");
    if (cl.controller.in_dim() != n)
        throw DomainError("ClosedLoopMap: controller input must match the state dimension");
    if (cl.controller.out_dim() != cl.B.cols())
        throw DomainError("ClosedLoopMap: controller output must match B columns");
    if (cl.horizon < 0) throw DomainError("ClosedLoopMap: horizon must be >= 0");
    if (!cl.A.allFinite() || !cl.B.allFinite()) throw DomainError("ClosedLoopMap: non-finite entries");
    in_dim_ = out_dim_ = static_cast<int>(n);
}

Point ReachMap::eval(const Point& x) const {
    check_input(x, in_dim_, "ReachMap::eval");
    if (const auto* a = std::get_if<AffineMap>(&map_)) return a->A * x + a->b;
    if (const auto* s = std::get_if<ScalingMap>(&map_)) return make_point({s->scale * x[0], x[1]});
    if (const auto* n = std::get_if<ReluNetwork>(&map_)) return n->eval(x);
    const auto& cl = std::get<ClosedLoopMap>(map_);
    Point state = x;
    for (int t = 0; t < cl.horizon; ++t) state = cl.A * state + cl.B * cl.controller.eval(state);
    return state;
}

Matrix ReachMap::jacobian(const Point& x) const {
    check_input(x, in_dim_, "ReachMap::jacobian");
    if (const auto* a = std::get_if<AffineMap>(&map_)) return a->A;
    if (const auto* s = std::get_if<ScalingMap>(&map_)) {
        Matrix j = Matrix::Identity(2, 2);
        j(0, 0) = s->scale;
        return j;
    }
    if (const auto* n = std::get_if<ReluNetwork>(&map_)) return n->jacobian(x);
    const auto& cl = std::get<ClosedLoopMap>(map_);
    Point state = x;
    Matrix j = Matrix::Identity(in_dim_, in_dim_);
    for (int t = 0; t < cl.horizon; ++t) {
        j = (cl.A + cl.B * cl.controller.jacobian(state)) * j;
        state = cl.A * state + cl.B * cl.controller.eval(state);
    }
    return j;
}

double spectral_norm(const Matrix& m) {
    if (m.rows() < 1 || m.cols() < 1) throw DomainError("spectral_norm: empty matrix");
    if (m.isZero(0.0)) return 0.0;
    constexpr double rel_tol = 1e-8;
    constexpr int max_iter = 100000;
    Rng rng(0x5DEECE66DULL);
    Eigen::VectorXd v(m.cols());
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
    v.normalize();
    double sigma = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXd mv = m * v;
        const double next = mv.norm();
        if (next == 0.0) {
            // restart away from the null space
            for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
            v.normalize();
            continue;
        }
        v = m.transpose() * mv;
        const double denom = v.norm();
        if (denom == 0.0) return next;
        v /= denom;
        if (std::abs(next - sigma) <= rel_tol * std::max(next, 1e-300)) return next;
        sigma = next;
    }
    return sigma;
}

LipschitzEstimate estimate_lipschitz(const ReachMap& map, const domains::InputSet& set,
                                     const domains::SamplingSpec& spec, int count,
                                     std::optional<ActivationRegionData> region_data) {
    if (count < 1) throw DomainError("estimate_lipschitz: sample count must be >= 1");
    if (spec.kind != domains::Sampling::UniformVolume)
        throw DomainError("estimate_lipschitz: requires uniform-volume sampling");
    if (map.in_dim() != set.dim())
        throw DomainError("estimate_lipschitz: map and input set dimensions differ");
    const PointCloud xs = domains::sample(set, spec, count);
    LipschitzEstimate est;
    est.M_used = count;
    for (const auto& x : xs.points) est.L_hat = std::max(est.L_hat, spectral_norm(map.jacobian(x)));
    if (region_data) {
        if (region_data->region_count < 1 || !(region_data->min_region_mass > 0.0) ||
            !(region_data->min_region_mass < 1.0))
            throw DomainError("estimate_lipschitz: invalid activation region data");
        est.confidence_delta = static_cast<double>(region_data->region_count) *
                               std::pow(1.0 - region_data->min_region_mass, count);
    }
    return est;
}

ReluNetwork build_saturated_feedback_controller(const Eigen::VectorXd& gain, double lo, double hi) {
    if (gain.size() < 1) throw DomainError("saturated feedback: empty gain");
    if (!gain.allFinite()) throw DomainError("saturated feedback: non-finite gain");
    if (!(lo < hi)) throw DomainError("saturated feedback: requires lo < hi");
    const Eigen::Index p = gain.size();
    ReluLayer hidden;
    hidden.W.resize(2, p);
    hidden.W.row(0) = -gain.transpose();
    hidden.W.row(1) = -gain.transpose();
    hidden.b.resize(2);
    hidden.b << -lo, -hi;
    ReluLayer out;
    out.W.resize(1, 2);
    out.W << 1.0, -1.0;
    out.b.resize(1);
    out.b << lo;
    return ReluNetwork({std::move(hidden), std::move(out)});
}

}  // namespace reachset::maps
