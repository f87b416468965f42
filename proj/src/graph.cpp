#include "formctl/graph.hpp"

#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace formctl {

void NetworkTopology::validate() const {
    const auto rows = adjacency.rows();
    if (rows != adjacency.cols()) {
        throw std::invalid_argument("adjacency must be square");
    }
    if (rows < 1) {
        throw std::invalid_argument("topology needs at least one follower");
    }
    if (leader_weights.size() != rows) {
        std::ostringstream msg;
        msg << "leader_weights has length " << leader_weights.size()
            << " but adjacency is " << rows << "x" << rows;
        throw std::invalid_argument(msg.str());
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (adjacency(i, i) != 0.0) {
            std::ostringstream msg;
            msg << "adjacency diagonal entry (" << i << "," << i << ") must be zero, got "
                << adjacency(i, i);
            throw std::invalid_argument(msg.str());
        }
        if (!(leader_weights(i) >= 0.0)) {
            std::ostringstream msg;
            msg << "leader weight a_" << i + 1 << "0 must be nonnegative, got "
                << leader_weights(i);
            throw std::invalid_argument(msg.str());
        }
        for (Eigen::Index j = 0; j < rows; ++j) {
            if (!(adjacency(i, j) >= 0.0)) {
                std::ostringstream msg;
                msg << "adjacency entry (" << i << "," << j << ") must be nonnegative, got "
                    << adjacency(i, j);
                throw std::invalid_argument(msg.str());
            }
            if (adjacency(i, j) != adjacency(j, i)) {
                std::ostringstream msg;
                msg << "adjacency not symmetric at pair (" << i << "," << j << "): "
                    << adjacency(i, j) << " vs " << adjacency(j, i);
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

double zero_eigenvalue_tolerance(const Eigen::MatrixXd& m) {
    const double scale = m.cwiseAbs().maxCoeff();
    return 1e-9 * std::max(scale, 1e-300);
}

Eigen::MatrixXd degree_matrix(const NetworkTopology& topology) {
    topology.validate();
    const Eigen::Index n = topology.adjacency.rows();
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    d.diagonal() = topology.adjacency.rowwise().sum();
    return d;
}

Eigen::MatrixXd laplacian(const NetworkTopology& topology) {
    return degree_matrix(topology) - topology.adjacency;
}

Eigen::MatrixXd augmented_matrix(const NetworkTopology& topology) {
    Eigen::MatrixXd h = laplacian(topology);
    h.diagonal() += topology.leader_weights;
    return h;
}

Eigen::MatrixXd kron_expand(const Eigen::MatrixXd& h) {
    const Eigen::Index n = h.rows();
    if (h.cols() != n) {
        throw std::invalid_argument("kron_expand expects a square matrix");
    }
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(3 * n, 3 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out.block<3, 3>(3 * i, 3 * j) = h(i, j) * Eigen::Matrix3d::Identity();
        }
    }
    return out;
}

bool connected_by_traversal(const NetworkTopology& topology) {
    const Eigen::Index n = topology.adjacency.rows();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<Eigen::Index> frontier;
    frontier.push(0);
    seen[0] = 1;
    Eigen::Index count = 1;
    while (!frontier.empty()) {
        const Eigen::Index v = frontier.front();
        frontier.pop();
        for (Eigen::Index w = 0; w < n; ++w) {
            if (!seen[static_cast<size_t>(w)] && topology.adjacency(v, w) > 0.0) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                frontier.push(w);
            }
        }
    }
    return count == n;
}

SpectralReport spectral_report(const NetworkTopology& topology) {
    topology.validate();
    const Eigen::MatrixXd lap = laplacian(topology);
    const Eigen::MatrixXd aug = augmented_matrix(topology);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> lap_solver(lap, Eigen::EigenvaluesOnly);
    if (lap_solver.info() != Eigen::Success) {
        throw std::runtime_error("Laplacian eigensolve failed");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> aug_solver(aug, Eigen::EigenvaluesOnly);
    if (aug_solver.info() != Eigen::Success) {
        throw std::runtime_error("augmented-matrix eigensolve failed");
    }

    SpectralReport report;
    report.eigenvalues = lap_solver.eigenvalues(); // SelfAdjointEigenSolver sorts ascending
    report.min_eig_H = aug_solver.eigenvalues()(0);
    report.connected = connected_by_traversal(topology);

    const double tol = zero_eigenvalue_tolerance(lap);
    const bool spectral_connected =
        topology.n() == 1 || report.eigenvalues(1) > tol;
    if (spectral_connected != report.connected) {
        std::ostringstream msg;
        msg << "connectivity disagreement: traversal says " << (report.connected ? "connected" : "disconnected")
            << " but lambda_2 = " << (topology.n() > 1 ? report.eigenvalues(1) : 0.0)
            << " against tolerance " << tol;
        throw std::runtime_error(msg.str());
    }
    report.algebraic_connectivity = topology.n() > 1 ? report.eigenvalues(1) : 0.0;
    return report;
}

} // namespace formctl
