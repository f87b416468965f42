#pragma once

// Model-independent sliding-mode consensus law. This header must stay free of
// any dynamics dependency: the controller sees only measurements, neighbor
// sliding variables, and gains.

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "formctl/graph.hpp"

namespace formctl {

struct ControlGains {
    double alpha = 0.0;        // network coupling gain
    double lambda = 0.0;       // sliding-surface gain, 1/s
    Eigen::VectorXd beta;      // per-agent switching gain, N
    Eigen::VectorXd gamma;     // per-agent velocity switching gain, N s/m

    void validate(int n_agents) const;
};

/// Per-agent outcome of the sufficient gain conditions.
struct AgentGainCheck {
    double beta = 0.0;
    double beta_margin = 0.0;  // beta - k_g
    double gamma = 0.0;
    double gamma_margin = 0.0; // gamma - (k_c + 2 lambda k_m)
    bool pass = false;
};

struct GainReport {
    std::vector<AgentGainCheck> agents;
    bool pass = false;
    std::string note;

    std::string summary() const;
};

/// Exact signum when epsilon = 0 (sgn(0) = 0); otherwise the boundary-layer
/// saturation clamp(x / epsilon, -1, 1).
double smoothed_sign(double x, double epsilon);
Eigen::Vector3d smoothed_sign(const Eigen::Vector3d& x, double epsilon);
Eigen::VectorXd smoothed_sign(const Eigen::VectorXd& x, double epsilon);

/// s_i = q_dot_i + lambda (y_i - b_hat_i) where y_i is the biased position
/// measurement. The controller never sees q_i or b_i separately.
Eigen::Vector3d sliding_variable(const Eigen::Vector3d& q_dot_i,
                                 const Eigen::Vector3d& y_i,
                                 const Eigen::Vector3d& b_hat_i, double lambda);

/// Per-agent control force. The leader's sliding variable is identically
/// zero, so the leader edge contributes -alpha a_i0 s_i.
Eigen::Vector3d control_force_agent(int i, const std::vector<Eigen::Vector3d>& all_s,
                                    const NetworkTopology& topology,
                                    const Eigen::Vector3d& q_dot_i,
                                    const ControlGains& gains,
                                    double sign_epsilon = 0.0);

/// Stacked form tau = -alpha H1 s - B sgn(s) - Gamma Q sgn(s). Equals the
/// agent-wise assembly of control_force_agent up to summation order.
Eigen::VectorXd control_force_stacked(const std::vector<Eigen::Vector3d>& all_s,
                                      const NetworkTopology& topology,
                                      const std::vector<Eigen::Vector3d>& all_q_dot,
                                      const ControlGains& gains,
                                      double sign_epsilon = 0.0);

/// Bias-estimate update law b_hat_dot = -q_dot.
Eigen::Vector3d bias_update(const Eigen::Vector3d& q_dot_i);

/// Checks beta_i > k_g and gamma_i > k_c_i + 2 lambda k_m_i per agent.
/// k-bounds are supplied by the caller (they come from the plant side).
struct AgentBounds {
    double k_m = 0.0;
    double k_c = 0.0;
    double k_g = 0.0;
};

GainReport validate_gains(const ControlGains& gains, const std::vector<AgentBounds>& bounds);

} // namespace formctl
