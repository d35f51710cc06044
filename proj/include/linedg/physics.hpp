#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <memory>

namespace linedg {

struct GasModel {
  double gamma = 1.4;
  double mu = 0.0;     // dynamic viscosity
  double prandtl = 0.72;
};

enum class BcKind { Dirichlet, Neumann, Characteristic, SlipWall, NoSlipAdiabatic };

/// Boundary condition attached to a mesh tag. Dirichlet/Neumann data are
/// callables of position and time filling one value per solution component.
struct BoundaryCondition {
  BcKind kind = BcKind::Dirichlet;
  std::function<void(const Eigen::Vector2d&, double, double*)> dirichlet;
  std::function<void(const Eigen::Vector2d&, double, double*)> neumann;
  Eigen::VectorXd far_state;  // Characteristic far field

  static BoundaryCondition make_dirichlet(std::function<void(const Eigen::Vector2d&, double, double*)> g);
  static BoundaryCondition make_neumann(std::function<void(const Eigen::Vector2d&, double, double*)> g);
  static BoundaryCondition characteristic(const Eigen::VectorXd& far);
  static BoundaryCondition slip_wall();
  static BoundaryCondition no_slip_adiabatic();
};

/// Map from mesh boundary tag to its condition; every tag present in the mesh
/// must be covered.
using BoundaryTable = std::map<int, BoundaryCondition>;

/// Fluxes, sources, Riemann solver, and boundary-state maps for one model.
/// All flux tensors are stored row-per-component, F[c*2 + d]. Jacobians are
/// exact (evaluated through forward-mode derivative scalars inside the
/// implementations).
class PhysicsModel {
 public:
  virtual ~PhysicsModel() = default;

  virtual int components() const = 0;
  virtual bool has_viscous() const = 0;
  virtual bool has_source() const { return false; }

  virtual void inviscid_flux(const double* u, double* F) const = 0;
  virtual void viscous_flux(const double* /*u*/, const double* /*q*/, double* F) const;
  virtual void source(const Eigen::Vector2d& /*x*/, double /*t*/, const double* /*u*/,
                      const double* /*q*/, double* s) const;

  /// Numerical flux F_hat(u_out, u_in) . n for the non-normalized outward
  /// normal n; must satisfy consistency and the conservation identity
  /// F_hat(a,b,n) = -F_hat(b,a,-n).
  virtual void riemann(const double* u_out, const double* u_in, const double* n,
                       double* fhat) const = 0;

  // Jacobians. dF layout: dF[(c*2+d)*m + c']; dFdq: dFdq[(c*2+d)*(2m) + (c'*2+d')].
  virtual void inviscid_flux_jac(const double* u, double* dF) const = 0;
  virtual void viscous_flux_jac(const double* u, const double* q, double* dFdu,
                                double* dFdq) const;
  virtual void riemann_jac(const double* u_out, const double* u_in, const double* n,
                           double* d_out, double* d_in) const = 0;
  virtual void source_jac(const Eigen::Vector2d& x, double t, const double* u, const double* q,
                          double* dSdu, double* dSdq) const;

  // Boundary realizations for the first-order (inviscid) endpoint flux.
  virtual void boundary_inviscid_flux(const BoundaryCondition& bc, const Eigen::Vector2d& x,
                                      double t, const double* n, const double* u_in,
                                      double* fhat) const;
  virtual void boundary_inviscid_flux_jac(const BoundaryCondition& bc, const Eigen::Vector2d& x,
                                          double t, const double* n, const double* u_in,
                                          double* d_in) const;

  // Boundary trace u_hat for the auxiliary gradient equation.
  virtual void boundary_ldg_uhat(const BoundaryCondition& bc, const Eigen::Vector2d& x, double t,
                                 const double* n, double c22, const double* u_in,
                                 const double* q_in, double* uhat) const;
  virtual void boundary_ldg_uhat_jac(const BoundaryCondition& bc, const Eigen::Vector2d& x,
                                     double t, const double* n, double c22, const double* u_in,
                                     const double* q_in, double* du, double* dq) const;

  // Boundary viscous flux F_hat . n (n non-normalized; c11_bd already includes
  // any mesh-size scaling).
  virtual void boundary_ldg_flux(const BoundaryCondition& bc, const Eigen::Vector2d& x, double t,
                                 const double* n, double c11_bd, const double* u_in,
                                 const double* q_in, double* fhat) const;
  virtual void boundary_ldg_flux_jac(const BoundaryCondition& bc, const Eigen::Vector2d& x,
                                     double t, const double* n, double c11_bd, const double* u_in,
                                     const double* q_in, double* du, double* dq) const;
};

// ---------------------------------------------------------------------------
// Concrete models

/// Scalar diffusion: u_t - div(grad u) = f. The viscous flux is -q and the
/// optional source term is a fixed function of position.
class PoissonModel : public PhysicsModel {
 public:
  std::function<double(const Eigen::Vector2d&)> source_fn;  // empty: no source

  int components() const override { return 1; }
  bool has_viscous() const override { return true; }
  bool has_source() const override { return static_cast<bool>(source_fn); }
  void inviscid_flux(const double* u, double* F) const override;
  void viscous_flux(const double* u, const double* q, double* F) const override;
  void source(const Eigen::Vector2d& x, double t, const double* u, const double* q,
              double* s) const override;
  void riemann(const double* u_out, const double* u_in, const double* n,
               double* fhat) const override;
  void inviscid_flux_jac(const double* u, double* dF) const override;
  void viscous_flux_jac(const double* u, const double* q, double* dFdu,
                        double* dFdq) const override;
  void riemann_jac(const double* u_out, const double* u_in, const double* n, double* d_out,
                   double* d_in) const override;
};

/// Linear advection u_t + div(a u) = 0 with upwind numerical flux.
class AdvectionModel : public PhysicsModel {
 public:
  explicit AdvectionModel(const Eigen::Vector2d& velocity) : a_(velocity) {}

  int components() const override { return 1; }
  bool has_viscous() const override { return false; }
  void inviscid_flux(const double* u, double* F) const override;
  void riemann(const double* u_out, const double* u_in, const double* n,
               double* fhat) const override;
  void inviscid_flux_jac(const double* u, double* dF) const override;
  void riemann_jac(const double* u_out, const double* u_in, const double* n, double* d_out,
                   double* d_in) const override;

 private:
  Eigen::Vector2d a_;
};

/// Compressible Euler equations in conservative variables (rho, rho u,
/// rho v, rho E) with the Roe numerical flux.
class EulerModel : public PhysicsModel {
 public:
  explicit EulerModel(const GasModel& gas) : gas_(gas) {}
  const GasModel& gas() const { return gas_; }

  int components() const override { return 4; }
  bool has_viscous() const override { return false; }
  void inviscid_flux(const double* u, double* F) const override;
  void riemann(const double* u_out, const double* u_in, const double* n,
               double* fhat) const override;
  void inviscid_flux_jac(const double* u, double* dF) const override;
  void riemann_jac(const double* u_out, const double* u_in, const double* n, double* d_out,
                   double* d_in) const override;

  void boundary_inviscid_flux(const BoundaryCondition& bc, const Eigen::Vector2d& x, double t,
                              const double* n, const double* u_in, double* fhat) const override;
  void boundary_inviscid_flux_jac(const BoundaryCondition& bc, const Eigen::Vector2d& x, double t,
                                  const double* n, const double* u_in,
                                  double* d_in) const override;

 protected:
  GasModel gas_;
};

/// Compressible Navier-Stokes: Euler inviscid part plus the viscous stress
/// and heat flux evaluated from conservative-variable gradients.
class NavierStokesModel : public EulerModel {
 public:
  explicit NavierStokesModel(const GasModel& gas) : EulerModel(gas) {}

  bool has_viscous() const override { return gas_.mu != 0.0; }
  void viscous_flux(const double* u, const double* q, double* F) const override;
  void viscous_flux_jac(const double* u, const double* q, double* dFdu,
                        double* dFdq) const override;

  void boundary_ldg_uhat(const BoundaryCondition& bc, const Eigen::Vector2d& x, double t,
                         const double* n, double c22, const double* u_in, const double* q_in,
                         double* uhat) const override;
  void boundary_ldg_uhat_jac(const BoundaryCondition& bc, const Eigen::Vector2d& x, double t,
                             const double* n, double c22, const double* u_in, const double* q_in,
                             double* du, double* dq) const override;
  void boundary_ldg_flux(const BoundaryCondition& bc, const Eigen::Vector2d& x, double t,
                         const double* n, double c11_bd, const double* u_in, const double* q_in,
                         double* fhat) const override;
  void boundary_ldg_flux_jac(const BoundaryCondition& bc, const Eigen::Vector2d& x, double t,
                             const double* n, double c11_bd, const double* u_in,
                             const double* q_in, double* du, double* dq) const override;
};

// ---------------------------------------------------------------------------
// Free helpers

/// Physical Euler flux tensor (throws physical_state_error on rho<=0 or p<=0).
void euler_flux(const double* u, const GasModel& gas, double* F);
double euler_pressure(const double* u, const GasModel& gas);

/// Roe flux with Harten entropy fix on the acoustic waves, scaled by |n|.
void roe_flux(const double* u_out, const double* u_in, const double* n, const GasModel& gas,
              double* fhat);

/// Mirror the normal velocity component (slip-wall ghost state).
void mirror_state(const double* u, const double* n, double* ghost);

/// Viscous stress contribution in the +tau convention: row 0 zero, momentum
/// rows tau_ij, energy row u_i tau_ij - heat_j. The model flux is its negative.
void ns_viscous_stress(const double* u, const double* q, const GasModel& gas, double* T);

struct VortexParams {
  double eps = 0.3;
  double r_c = 1.5;
  double mach = 0.5;
  double theta = std::atan2(1.0, 2.0);
  double x0 = 5.0, y0 = 5.0;
  double rho_inf = 1.0;
  double u_inf = 0.5;        // |velocity|, defaults to mach (unit sound speed)
  double p_inf = 1.0 / 1.4;  // unit free-stream sound speed
  double gamma = 1.4;

  Eigen::Vector4d free_stream() const;
};

/// Closed-form isentropic vortex solution in conservative variables.
Eigen::Vector4d vortex_exact(double x, double y, double t, const VortexParams& vp);

struct PoissonManufactured {
  double alpha = 0.1, beta = 0.3;
  double a = 5.1, b = -6.2, c = 4.3, d = 3.4;
};

double poisson_manufactured_u(double x, double y, const PoissonManufactured& mp);
Eigen::Vector2d poisson_manufactured_grad(double x, double y, const PoissonManufactured& mp);
/// Source f = -laplacian(u) of the manufactured solution.
double poisson_source(double x, double y, const PoissonManufactured& mp);

}  // namespace linedg
