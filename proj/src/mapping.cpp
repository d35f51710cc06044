#include "linedg/mapping.hpp"

#include <stdexcept>
#include <string>

#include "linedg/errors.hpp"

namespace linedg {

namespace {

void place_nodes(const QuadMesh& mesh, const NodalBasis1D& basis, int e,
                 const CurveProjector* curve, Eigen::Matrix2Xd& xy) {
  const int p = basis.p;
  const int np = p + 1;
  const Eigen::Vector2d v0 = mesh.vertices[mesh.elems[e][0]];
  const Eigen::Vector2d v1 = mesh.vertices[mesh.elems[e][1]];
  const Eigen::Vector2d v2 = mesh.vertices[mesh.elems[e][2]];
  const Eigen::Vector2d v3 = mesh.vertices[mesh.elems[e][3]];

  xy.resize(2, np * np);
  for (int j = 0; j < np; ++j) {
    const double sj = basis.nodes[j];
    for (int i = 0; i < np; ++i) {
      const double si = basis.nodes[i];
      xy.col(i + np * j) = (1 - si) * (1 - sj) * v0 + si * (1 - sj) * v1 +
                           si * sj * v2 + (1 - si) * sj * v3;
    }
  }
  if (!curve) return;

  // Project boundary-face nodes onto the curved boundary and blend the
  // displacement linearly into the element interior (transfinite).
  for (int lf = 0; lf < 4; ++lf) {
    const Face& f = mesh.faces[mesh.elem_face[e][lf]];
    if (!f.boundary()) continue;
    const auto fnodes = face_node_indices(p, lf);
    Eigen::Matrix2Xd delta(2, np);
    bool moved = false;
    for (int k = 0; k < np; ++k) {
      const Eigen::Vector2d x0 = xy.col(fnodes[k]);
      const Eigen::Vector2d xp = (*curve)(x0, f.tag);
      delta.col(k) = xp - x0;
      if (delta.col(k).norm() > 0.0) moved = true;
    }
    if (!moved) continue;
    for (int j = 0; j < np; ++j) {
      const double sj = basis.nodes[j];
      for (int i = 0; i < np; ++i) {
        const double si = basis.nodes[i];
        double blend = 0.0;
        int k = 0;  // index of delta along the face parameter
        switch (lf) {
          case 0: blend = 1 - sj; k = i; break;
          case 1: blend = si; k = j; break;
          case 2: blend = sj; k = i; break;      // delta stored in i order below
          case 3: blend = 1 - si; k = j; break;
        }
        // face_node_indices orders faces 2 and 3 against the i/j axis.
        if (lf == 2) k = p - i;
        if (lf == 3) k = p - j;
        xy.col(i + np * j) += blend * delta.col(k);
      }
    }
  }
}

}  // namespace

std::vector<ElementMapping> compute_mapping(const QuadMesh& mesh, const NodalBasis1D& basis,
                                            const CurveProjector* curve) {
  const int p = basis.p;
  const int np = p + 1;
  const int nq = basis.n_quad();
  const Eigen::MatrixXd& D = basis.diff_at_nodes;  // D(j,i) = phi_i'(s_j)

  std::vector<ElementMapping> maps(mesh.num_elems());
  for (int e = 0; e < mesh.num_elems(); ++e) {
    ElementMapping& em = maps[e];
    place_nodes(mesh, basis, e, curve, em.nodes_xy);

    // Nodal derivatives of the mapping in both reference directions.
    Eigen::Matrix2Xd dx1(2, np * np), dx2(2, np * np);
    for (int j = 0; j < np; ++j)
      for (int i = 0; i < np; ++i) {
        Eigen::Vector2d g1 = Eigen::Vector2d::Zero(), g2 = Eigen::Vector2d::Zero();
        for (int k = 0; k < np; ++k) {
          g1 += D(i, k) * em.nodes_xy.col(k + np * j);
          g2 += D(j, k) * em.nodes_xy.col(i + np * k);
        }
        dx1.col(i + np * j) = g1;
        dx2.col(i + np * j) = g2;
      }

    em.jac_at_nodes.resize(np * np);
    for (int n = 0; n < np * np; ++n) {
      const double jac = dx1(0, n) * dx2(1, n) - dx2(0, n) * dx1(1, n);
      if (!(jac > 0.0))
        throw config_error("mapping: element " + std::to_string(e) +
                           " is inverted (J <= 0 at node " + std::to_string(n) + ")");
      em.jac_at_nodes[n] = jac;
    }

    // Line tables. Along a line, the along-line derivative comes from the
    // dphi table and the transverse derivative interpolates its nodal values.
    for (int dir = 0; dir < 2; ++dir) {
      em.nvec_quad[dir].resize(2, np * nq);
      em.normal_end[dir][0].resize(2, np);
      em.normal_end[dir][1].resize(2, np);
      for (int line = 0; line < np; ++line) {
        // a_t: node coordinates along the line; b_t: transverse derivative there.
        Eigen::Matrix2Xd a(2, np), b(2, np);
        for (int t = 0; t < np; ++t) {
          const int nidx = dir == 0 ? (t + np * line) : (line + np * t);
          a.col(t) = em.nodes_xy.col(nidx);
          b.col(t) = dir == 0 ? dx2.col(nidx) : dx1.col(nidx);
        }
        for (int q = 0; q < nq; ++q) {
          Eigen::Vector2d t_along = Eigen::Vector2d::Zero();
          Eigen::Vector2d t_trans = Eigen::Vector2d::Zero();
          for (int t = 0; t < np; ++t) {
            t_along += basis.dphi_at_quad(t, q) * a.col(t);
            t_trans += basis.phi_at_quad(t, q) * b.col(t);
          }
          // dir 0: row (y_X2, -x_X2) of adj(G); dir 1: row (-y_X1, x_X1).
          Eigen::Vector2d nv;
          double jac;
          if (dir == 0) {
            nv = Eigen::Vector2d(t_trans.y(), -t_trans.x());
            jac = t_along.x() * t_trans.y() - t_trans.x() * t_along.y();
          } else {
            nv = Eigen::Vector2d(-t_trans.y(), t_trans.x());
            jac = t_trans.x() * t_along.y() - t_along.x() * t_trans.y();
          }
          if (!(jac > 0.0))
            throw config_error("mapping: element " + std::to_string(e) +
                               " is inverted (J <= 0 at a quadrature point)");
          em.nvec_quad[dir].col(q + nq * line) = nv;
        }
        // Endpoint normals from the nodal transverse derivatives.
        const Eigen::Vector2d b0 = b.col(0), bp = b.col(np - 1);
        if (dir == 0) {
          em.normal_end[dir][0].col(line) = Eigen::Vector2d(-b0.y(), b0.x());
          em.normal_end[dir][1].col(line) = Eigen::Vector2d(bp.y(), -bp.x());
        } else {
          em.normal_end[dir][0].col(line) = Eigen::Vector2d(b0.y(), -b0.x());
          em.normal_end[dir][1].col(line) = Eigen::Vector2d(-bp.y(), bp.x());
        }
      }
    }
  }
  return maps;
}

}  // namespace linedg
