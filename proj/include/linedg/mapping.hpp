#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <vector>

#include "linedg/basis.hpp"
#include "linedg/mesh.hpp"

namespace linedg {

/// Projects a boundary high-order node onto the true curved boundary;
/// receives the straight-sided position and the face tag.
using CurveProjector = std::function<Eigen::Vector2d(const Eigen::Vector2d&, int tag)>;

/// Per-element isoparametric geometry. Node index convention is
/// nidx = i + (p+1)*j with i along reference direction 0.
struct ElementMapping {
  Eigen::Matrix2Xd nodes_xy;    // 2 x (p+1)^2 high-order node coordinates
  Eigen::VectorXd jac_at_nodes; // det(G) at every node, all positive

  // Row `dir` of the adjugate J*G^{-1} at each line quadrature point:
  // nvec_quad[dir] is 2 x ((p+1)*n_q), column q + n_q*line.
  // Dotting the physical flux with this row gives the contravariant flux.
  std::array<Eigen::Matrix2Xd, 2> nvec_quad;

  // Non-normalized outward normals J*G^{-T}*N at line endpoints:
  // normal_end[dir][side] is 2 x (p+1), one column per line.
  std::array<std::array<Eigen::Matrix2Xd, 2>, 2> normal_end;

  Eigen::Vector2d node(int nidx) const { return nodes_xy.col(nidx); }
};

/// Places high-order nodes (bilinear corners, optional boundary projection
/// with a transfinite blend into the interior) and precomputes metric tables.
/// Throws if det(G) is non-positive anywhere.
std::vector<ElementMapping> compute_mapping(const QuadMesh& mesh, const NodalBasis1D& basis,
                                            const CurveProjector* curve = nullptr);

}  // namespace linedg
