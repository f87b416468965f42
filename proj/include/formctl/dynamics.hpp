#pragma once

#include <Eigen/Dense>
#include <vector>

namespace formctl {

/// Leader reference orbit. Circular mode freezes the true anomaly rate at
/// sqrt(mu / r_l^3); tabulated mode interpolates user-supplied rate series.
class LeaderOrbit {
public:
    static LeaderOrbit circular(double r_l, double mu);
    static LeaderOrbit tabulated(double r_l, double mu,
                                 std::vector<double> t,
                                 std::vector<double> theta_dot,
                                 std::vector<double> theta_ddot);

    double r_l() const { return r_l_; }
    double mu() const { return mu_; }
    bool is_circular() const { return circular_; }

    double theta_dot(double t = 0.0) const;
    double theta_ddot(double t = 0.0) const;

    /// Largest |theta_dot| the orbit can produce (used for bound constants).
    double max_theta_dot() const;

    /// Breakpoint times of the tabulated mode; empty for circular orbits.
    const std::vector<double>& rate_table_times() const { return table_t_; }

private:
    LeaderOrbit() = default;

    double r_l_ = 0.0;
    double mu_ = 0.0;
    bool circular_ = true;
    double theta_dot_circular_ = 0.0;
    std::vector<double> table_t_;
    std::vector<double> table_theta_dot_;
    std::vector<double> table_theta_ddot_;
};

/// Physical parameters of one follower. The true bias corrupts the position
/// measurement only; the controller never reads it.
struct AgentParams {
    double mass = 1.0;             // kg
    Eigen::Vector3d true_bias = Eigen::Vector3d::Zero(); // m
};

/// Follower state in the leader orbit frame.
struct AgentState {
    Eigen::Vector3d q = Eigen::Vector3d::Zero();     // relative position, m
    Eigen::Vector3d q_dot = Eigen::Vector3d::Zero(); // relative velocity, m/s
    Eigen::Vector3d b_hat = Eigen::Vector3d::Zero(); // bias estimate, m
};

/// Norm bounds on M, C, g over an operating region.
struct BoundConstants {
    double k_m = 0.0; // kg
    double k_c = 0.0; // kg/s
    double k_g = 0.0; // N
};

/// Follower orbit radius r_f = |(r_l + x, y, z)|. Throws std::domain_error
/// when the follower sits at the attracting center (r_f = 0).
double follower_radius(const Eigen::Vector3d& q, const LeaderOrbit& orbit);

Eigen::Matrix3d mass_matrix(const AgentParams& params);

/// Skew velocity-coupling matrix m * theta_dot * [[0,-2,0],[2,0,0],[0,0,0]].
/// Chosen so that Mdot - 2C is skew symmetric for the constant mass matrix.
Eigen::Matrix3d coriolis_matrix(const AgentParams& params, const LeaderOrbit& orbit,
                                double t = 0.0);

/// Gravity/centrifugal force vector of the relative orbital dynamics.
Eigen::Vector3d gravity_vector(const Eigen::Vector3d& q, const AgentParams& params,
                               const LeaderOrbit& orbit, double t = 0.0);

/// q_ddot = M^-1 (tau - C q_dot - g).
Eigen::Vector3d el_accel(const AgentState& state, const Eigen::Vector3d& tau,
                         const AgentParams& params, const LeaderOrbit& orbit,
                         double t = 0.0);

/// k_m = m, k_c = 2 m max|theta_dot|, k_g = max |g| on an 11^3 grid over the
/// cube [-region_radius, region_radius]^3 (a superset of the operating ball,
/// so the bound is conservative). Requires region_radius in (0, r_l).
BoundConstants bound_constants(const AgentParams& params, const LeaderOrbit& orbit,
                               double region_radius);

} // namespace formctl
