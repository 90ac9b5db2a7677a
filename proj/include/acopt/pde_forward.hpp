#pragma once

#include <stdexcept>
#include <vector>

#include "acopt/grid.hpp"
#include "acopt/potentials.hpp"

namespace acopt {

// Thrown when a nonlinear or linear solve cannot reach its tolerance.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SchemeTag { implicit, semi_implicit };

struct ForwardStats {
  long newton_iters = 0;
  long cg_iters = 0;
  int substeps = 0;  // tau bisections triggered by Newton failures

  void merge(const ForwardStats& o) {
    newton_iters += o.newton_iters;
    cg_iters += o.cg_iters;
    substeps += o.substeps;
  }
};

// Space-time phase field: fields at t_0..t_M plus the discretization it
// lives on. Immutable once produced.
struct PhaseTrajectory {
  std::vector<Field> c;  // size M+1
  SpatialGrid grid;
  TimeGrid time;
  double eps = 0.0;
  SchemeTag scheme = SchemeTag::implicit;
  ForwardStats stats;
};

// Distributed control at the right endpoints t_1..t_M; f[m-1] acts on
// the step ending at t_m. Vector-valued controls live in TSigma.
struct ControlField {
  std::vector<Field> f;  // size M

  static ControlField zeros(const SpatialGrid& g, const TimeGrid& t,
                            int ncomp);
};

// Space-time L2(Omega_T) pairing under the right-endpoint rule.
double control_dot(const ControlField& a, const ControlField& b,
                   const SpatialGrid& grid, const TimeGrid& time);
double control_norm(const ControlField& a, const SpatialGrid& grid,
                    const TimeGrid& time);
void control_axpy(double alpha, const ControlField& x, ControlField& y);
void control_scale(ControlField& a, double s);

// One implicit Euler step: solves
//   eps*(c - c_prev)/tau - eps*Lap(c) + (1/eps)*Pi DPsi(c) = f
// by Newton with matrix-free preconditioned cg, residual <= 1e-12 in the
// max norm. If Newton stalls the step is bisected internally (the
// trajectory keeps its uniform grid); stats records how often.
Field step_implicit(const Field& c_prev, const Field& f_m, double tau,
                    double eps, const PotentialModel& model,
                    const SpatialGrid& grid, ForwardStats* stats = nullptr);

// One semi-implicit step: the potential derivative is lagged at c_prev,
// leaving a single SPD solve.
Field step_semi_implicit(const Field& c_prev, const Field& f_m, double tau,
                         double eps, const PotentialModel& model,
                         const SpatialGrid& grid,
                         ForwardStats* stats = nullptr);

struct ForwardParams {
  SpatialGrid grid;
  TimeGrid time;
  double eps = 0.1;
  PotentialModel model = DoubleWell{};
};

PhaseTrajectory solve_forward(const Field& c0, const ControlField& control,
                              SchemeTag scheme, const ForwardParams& params);

// Ginzburg-Landau energy (no elastic term): forward-difference gradient
// squares on cell edges plus lumped potential quadrature.
double energy(const Field& c, double eps, const PotentialModel& model,
              const SpatialGrid& grid);

struct InterfaceDiagnostics {
  double area = 0.0;    // quadrature mass of the superlevel set {c > level}
  double radius = 0.0;  // sqrt(area/pi)
  int components = 0;   // 4-connected components of the superlevel set
};

InterfaceDiagnostics extract_interface(const Field& c, double level,
                                       const SpatialGrid& grid);

}  // namespace acopt
