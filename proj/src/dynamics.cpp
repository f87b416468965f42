#include "formctl/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace formctl {

namespace {

double lerp_table(const std::vector<double>& ts, const std::vector<double>& vs, double t) {
    if (t <= ts.front()) return vs.front();
    if (t >= ts.back()) return vs.back();
    const auto it = std::upper_bound(ts.begin(), ts.end(), t);
    const size_t hi = static_cast<size_t>(it - ts.begin());
    const size_t lo = hi - 1;
    const double w = (t - ts[lo]) / (ts[hi] - ts[lo]);
    return vs[lo] + w * (vs[hi] - vs[lo]);
}

} // namespace

LeaderOrbit LeaderOrbit::circular(double r_l, double mu) {
    if (!(r_l > 0.0) || !(mu > 0.0)) {
        throw std::invalid_argument("orbit requires r_l > 0 and mu > 0");
    }
    LeaderOrbit orbit;
    orbit.r_l_ = r_l;
    orbit.mu_ = mu;
    orbit.circular_ = true;
    orbit.theta_dot_circular_ = std::sqrt(mu / (r_l * r_l * r_l));
    return orbit;
}

LeaderOrbit LeaderOrbit::tabulated(double r_l, double mu, std::vector<double> t,
                                   std::vector<double> theta_dot,
                                   std::vector<double> theta_ddot) {
    if (!(r_l > 0.0) || !(mu > 0.0)) {
        throw std::invalid_argument("orbit requires r_l > 0 and mu > 0");
    }
    if (t.empty() || t.size() != theta_dot.size() || t.size() != theta_ddot.size()) {
        throw std::invalid_argument("orbit rate tables must be nonempty and equally sized");
    }
    if (!std::is_sorted(t.begin(), t.end())) {
        throw std::invalid_argument("orbit rate table times must be ascending");
    }
    LeaderOrbit orbit;
    orbit.r_l_ = r_l;
    orbit.mu_ = mu;
    orbit.circular_ = false;
    orbit.table_t_ = std::move(t);
    orbit.table_theta_dot_ = std::move(theta_dot);
    orbit.table_theta_ddot_ = std::move(theta_ddot);
    return orbit;
}

double LeaderOrbit::theta_dot(double t) const {
    if (circular_) return theta_dot_circular_;
    return lerp_table(table_t_, table_theta_dot_, t);
}

double LeaderOrbit::theta_ddot(double t) const {
    if (circular_) return 0.0;
    return lerp_table(table_t_, table_theta_ddot_, t);
}

double LeaderOrbit::max_theta_dot() const {
    if (circular_) return theta_dot_circular_;
    double m = 0.0;
    for (double v : table_theta_dot_) m = std::max(m, std::abs(v));
    return m;
}

double follower_radius(const Eigen::Vector3d& q, const LeaderOrbit& orbit) {
    const double r_f = std::hypot(orbit.r_l() + q.x(), q.y(), q.z());
    if (!(r_f > 0.0)) {
        throw std::domain_error("degenerate follower radius r_f = 0");
    }
    return r_f;
}

Eigen::Matrix3d mass_matrix(const AgentParams& params) {
    if (!(params.mass > 0.0)) {
        throw std::invalid_argument("agent mass must be positive");
    }
    return params.mass * Eigen::Matrix3d::Identity();
}

Eigen::Matrix3d coriolis_matrix(const AgentParams& params, const LeaderOrbit& orbit,
                                double t) {
    const double w = params.mass * orbit.theta_dot(t);
    Eigen::Matrix3d c = Eigen::Matrix3d::Zero();
    c(0, 1) = -2.0 * w;
    c(1, 0) = 2.0 * w;
    return c;
}

Eigen::Vector3d gravity_vector(const Eigen::Vector3d& q, const AgentParams& params,
                               const LeaderOrbit& orbit, double t) {
    const double r_l = orbit.r_l();
    const double mu = orbit.mu();
    const double td = orbit.theta_dot(t);
    const double tdd = orbit.theta_ddot(t);
    const double r_f = follower_radius(q, orbit);
    const double r_f3 = r_f * r_f * r_f;
    const double k = mu / r_f3 - td * td;

    Eigen::Vector3d g;
    g.x() = k * q.x() - tdd * q.y() + mu * (r_l / r_f3 - 1.0 / (r_l * r_l));
    g.y() = tdd * q.x() + k * q.y();
    g.z() = mu * q.z() / r_f3;
    return params.mass * g;
}

Eigen::Vector3d el_accel(const AgentState& state, const Eigen::Vector3d& tau,
                         const AgentParams& params, const LeaderOrbit& orbit,
                         double t) {
    if (!(params.mass > 0.0)) {
        throw std::invalid_argument("agent mass must be positive");
    }
    const Eigen::Vector3d coriolis = coriolis_matrix(params, orbit, t) * state.q_dot;
    const Eigen::Vector3d g = gravity_vector(state.q, params, orbit, t);
    return (tau - coriolis - g) / params.mass;
}

BoundConstants bound_constants(const AgentParams& params, const LeaderOrbit& orbit,
                               double region_radius) {
    if (!(region_radius > 0.0) || region_radius >= orbit.r_l()) {
        throw std::invalid_argument("region_radius must lie in (0, r_l)");
    }
    BoundConstants bounds;
    bounds.k_m = params.mass;
    bounds.k_c = 2.0 * params.mass * orbit.max_theta_dot();

    // Deterministic 11^3 grid over the enclosing cube. Circular orbits have
    // constant rates; tabulated ones are scanned at every table breakpoint.
    std::vector<double> sample_times{0.0};
    if (!orbit.is_circular()) {
        sample_times = orbit.rate_table_times();
    }
    constexpr int kGridPoints = 11;
    double worst = 0.0;
    for (int ix = 0; ix < kGridPoints; ++ix) {
        for (int iy = 0; iy < kGridPoints; ++iy) {
            for (int iz = 0; iz < kGridPoints; ++iz) {
                const Eigen::Vector3d q(
                    region_radius * (2.0 * ix / (kGridPoints - 1) - 1.0),
                    region_radius * (2.0 * iy / (kGridPoints - 1) - 1.0),
                    region_radius * (2.0 * iz / (kGridPoints - 1) - 1.0));
                for (double t : sample_times) {
                    worst = std::max(worst, gravity_vector(q, params, orbit, t).norm());
                }
            }
        }
    }
    bounds.k_g = worst;
    return bounds;
}

} // namespace formctl
