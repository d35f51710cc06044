#include "linedg/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace linedg {

namespace {

// Legendre P_n and P_n' at x in [-1,1] by the three-term recurrence.
void legendre(int n, double x, double& pn, double& dpn) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    pn = 1.0;
    dpn = 0.0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  pn = p1;
  dpn = n * (x * p1 - p0) / (x * x - 1.0);
}

// Interior Gauss-Lobatto nodes are the roots of P_p'. Newton on P_p' using
// P_p'' from the Legendre ODE: (1-x^2) P'' = 2x P' - p(p+1) P.
double lobatto_interior_root(int p, double guess) {
  double x = guess;
  for (int it = 0; it < 100; ++it) {
    double pn, dpn;
    legendre(p, x, pn, dpn);
    const double d2pn = (2.0 * x * dpn - p * (p + 1) * pn) / (1.0 - x * x);
    const double dx = dpn / d2pn;
    x -= dx;
    if (std::abs(dx) < 1e-15) break;
  }
  return x;
}

// Enforce exact symmetry about 0.5 so matching face nodes of neighboring
// elements coincide bitwise.
void symmetrize01(Eigen::VectorXd& v) {
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n / 2; ++i) {
    const double a = 0.5 * (v[i] + (1.0 - v[n - 1 - i]));
    v[i] = a;
    v[n - 1 - i] = 1.0 - a;
  }
  if (n % 2 == 1) v[n / 2] = 0.5;
}

}  // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  Eigen::VectorXd x(n), w(n);
  for (int k = 0; k < (n + 1) / 2; ++k) {
    // Chebyshev-based initial guess for the k-th root of P_n.
    double z = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    double pn = 0.0, dpn = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(n, z, pn, dpn);
      const double dz = pn / dpn;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    legendre(n, z, pn, dpn);
    // z descends from +1; store ascending on [0,1].
    x[n - 1 - k] = 0.5 * (1.0 + z);
    x[k] = 0.5 * (1.0 - z);
    const double wk = 1.0 / ((1.0 - z * z) * dpn * dpn);  // maps to [0,1]
    w[k] = wk;
    w[n - 1 - k] = wk;
  }
  symmetrize01(x);
  return {x, w};
}

void NodalBasis1D::apply_inverse_mass(Eigen::Ref<Eigen::MatrixXd> rhs) const {
  if (rhs.rows() != p + 1)
    throw std::invalid_argument("apply_inverse_mass: rhs row count must be p+1");
  for (Eigen::Index c = 0; c < rhs.cols(); ++c) {
    Eigen::VectorXd col = rhs.col(c);
    rhs.col(c) = mass_factor.solve(col);
  }
}

Eigen::MatrixXd NodalBasis1D::eval_phi(const Eigen::VectorXd& pts) const {
  const int np = p + 1;
  const int nq = static_cast<int>(pts.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(np, nq);
  for (int q = 0; q < nq; ++q) {
    const double x = pts[q];
    int hit = -1;
    for (int i = 0; i < np; ++i)
      if (std::abs(x - nodes[i]) < 1e-14) hit = i;
    if (hit >= 0) {
      out(hit, q) = 1.0;
      continue;
    }
    double denom = 0.0;
    for (int i = 0; i < np; ++i) denom += bary_weights[i] / (x - nodes[i]);
    for (int i = 0; i < np; ++i)
      out(i, q) = (bary_weights[i] / (x - nodes[i])) / denom;
  }
  return out;
}

Eigen::MatrixXd NodalBasis1D::eval_dphi(const Eigen::VectorXd& pts) const {
  const int np = p + 1;
  const int nq = static_cast<int>(pts.size());
  Eigen::MatrixXd phi = eval_phi(pts);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(np, nq);
  for (int q = 0; q < nq; ++q) {
    const double x = pts[q];
    int hit = -1;
    for (int i = 0; i < np; ++i)
      if (std::abs(x - nodes[i]) < 1e-14) hit = i;
    if (hit >= 0) {
      // Differentiation-matrix row at the node s_hit.
      double sum = 0.0;
      for (int i = 0; i < np; ++i) {
        if (i == hit) continue;
        const double dji = (bary_weights[i] / bary_weights[hit]) / (nodes[hit] - nodes[i]);
        out(i, q) = dji;
        sum += dji;
      }
      out(hit, q) = -sum;
      continue;
    }
    for (int i = 0; i < np; ++i) {
      double s = 0.0;
      for (int k = 0; k < np; ++k)
        if (k != i) s += 1.0 / (x - nodes[k]);
      out(i, q) = phi(i, q) * s;
    }
  }
  return out;
}

NodalBasis1D make_basis(int p, NodeRule rule) {
  if (p < 1) throw std::invalid_argument("make_basis: need p >= 1");
  NodalBasis1D b;
  b.p = p;
  b.rule = rule;

  const int np = p + 1;
  b.nodes.resize(np);
  if (rule == NodeRule::Uniform) {
    for (int i = 0; i <= p; ++i) b.nodes[i] = static_cast<double>(i) / p;
  } else {
    b.nodes[0] = 0.0;
    b.nodes[p] = 1.0;
    for (int k = 1; k < p; ++k) {
      // Interior k-th root of P_p', descending guesses mapped to ascending order.
      const double guess = std::cos(M_PI * k / p);
      const double z = lobatto_interior_root(p, guess);
      b.nodes[p - k] = 0.5 * (1.0 + z);
    }
  }
  symmetrize01(b.nodes);
  for (int i = 0; i < p; ++i)
    if (!(b.nodes[i + 1] > b.nodes[i]))
      throw std::runtime_error("make_basis: nodes not strictly increasing");

  b.bary_weights.resize(np);
  for (int i = 0; i < np; ++i) {
    double w = 1.0;
    for (int j = 0; j < np; ++j)
      if (j != i) w /= (b.nodes[i] - b.nodes[j]);
    b.bary_weights[i] = w;
  }

  const int nq = (3 * p + 2) / 2;  // ceil((3p+1)/2)
  auto [qp, qw] = gauss_legendre(nq);
  b.quad_points = qp;
  b.quad_weights = qw;

  b.phi_at_quad = b.eval_phi(b.quad_points);
  b.dphi_at_quad = b.eval_dphi(b.quad_points);
  b.diff_at_nodes = b.eval_dphi(b.nodes).transpose();  // D(j,i) = phi_i'(s_j)

  Eigen::MatrixXd m = b.phi_at_quad * b.quad_weights.asDiagonal() * b.phi_at_quad.transpose();
  b.mass = 0.5 * (m + m.transpose());
  b.mass_factor.compute(b.mass);
  if (b.mass_factor.info() != Eigen::Success)
    throw std::runtime_error("make_basis: mass matrix not SPD");

  b.node_weights = b.phi_at_quad * b.quad_weights;
  return b;
}

}  // namespace linedg
