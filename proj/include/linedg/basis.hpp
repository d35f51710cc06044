#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <utility>

namespace linedg {

enum class NodeRule { GaussLobatto, Uniform };

/// Gauss-Legendre rule with n points on [0,1]; exact for degree <= 2n-1.
/// Weights sum to one.
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n);

/// One-dimensional nodal Lagrange basis on [0,1] with precomputed quadrature
/// and operator tables. Shared by every line solve; immutable once built.
struct NodalBasis1D {
  int p = 0;
  NodeRule rule = NodeRule::GaussLobatto;
  Eigen::VectorXd nodes;         // p+1 values, s_0 = 0, s_p = 1, increasing
  Eigen::VectorXd quad_points;   // n_q points in (0,1)
  Eigen::VectorXd quad_weights;  // n_q positive weights, sum 1
  Eigen::MatrixXd phi_at_quad;   // (p+1) x n_q, phi_i(xi_q)
  Eigen::MatrixXd dphi_at_quad;  // (p+1) x n_q, phi_i'(xi_q)
  Eigen::MatrixXd mass;          // (p+1) x (p+1), SPD
  Eigen::LLT<Eigen::MatrixXd> mass_factor;
  Eigen::MatrixXd diff_at_nodes;  // (p+1) x (p+1), D(j,i) = phi_i'(s_j)
  Eigen::VectorXd node_weights;   // integral of phi_i over [0,1]
  Eigen::VectorXd bary_weights;   // barycentric weights of the node set

  int n() const { return p + 1; }
  int n_quad() const { return static_cast<int>(quad_points.size()); }

  /// Solves M c = rhs for every column through the stored Cholesky factor.
  /// Columns are processed independently, so batched and single-column calls
  /// produce bitwise identical results.
  void apply_inverse_mass(Eigen::Ref<Eigen::MatrixXd> rhs) const;

  /// Lagrange basis values at arbitrary points, (p+1) x npts.
  Eigen::MatrixXd eval_phi(const Eigen::VectorXd& pts) const;
  /// Lagrange basis derivatives at arbitrary points, (p+1) x npts.
  Eigen::MatrixXd eval_dphi(const Eigen::VectorXd& pts) const;
};

/// Builds the nodal basis of degree p >= 1 with the requested node
/// distribution. Quadrature uses ceil((3p+1)/2) Gauss-Legendre points.
NodalBasis1D make_basis(int p, NodeRule rule = NodeRule::GaussLobatto);

}  // namespace linedg
