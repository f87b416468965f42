#pragma once

#include <Eigen/Dense>

namespace formctl {

/// Weighted undirected communication topology of the follower network,
/// plus the per-follower leader link weights a_i0.
///
/// Invariants (checked by validate()): adjacency symmetric, zero diagonal,
/// all weights nonnegative, leader_weights.size() == n.
struct NetworkTopology {
    Eigen::MatrixXd adjacency;      // n x n, a_ij >= 0, a_ii = 0
    Eigen::VectorXd leader_weights; // length n, a_i0 >= 0

    int n() const { return static_cast<int>(adjacency.rows()); }

    /// Throws std::invalid_argument naming the offending entry or pair.
    void validate() const;
};

/// Spectrum summary of the follower Laplacian and the leader-augmented matrix.
struct SpectralReport {
    Eigen::VectorXd eigenvalues;   // eigenvalues of L, ascending
    double algebraic_connectivity; // lambda_2(L)
    double min_eig_H;              // smallest eigenvalue of H = L + diag(a_i0)
    bool connected;                // traversal result, cross-checked against lambda_2
};

/// Tolerance below which a Laplacian eigenvalue counts as zero.
double zero_eigenvalue_tolerance(const Eigen::MatrixXd& m);

Eigen::MatrixXd degree_matrix(const NetworkTopology& topology);

/// L = D - A. Symmetric, zero row sums, positive semidefinite.
Eigen::MatrixXd laplacian(const NetworkTopology& topology);

/// H = L + diag(leader_weights). Positive definite for a connected graph
/// with at least one positive leader weight.
Eigen::MatrixXd augmented_matrix(const NetworkTopology& topology);

/// H1 = H (x) I_3, block (i,j) = H(i,j) * I_3.
Eigen::MatrixXd kron_expand(const Eigen::MatrixXd& h);

/// Breadth-first connectivity over edges with strictly positive weight.
bool connected_by_traversal(const NetworkTopology& topology);

/// Eigen-decomposes L, takes min eig of H, and decides connectivity by
/// traversal cross-checked against lambda_2 > tolerance. Throws
/// std::runtime_error if the two connectivity routes disagree.
SpectralReport spectral_report(const NetworkTopology& topology);

} // namespace formctl
