#pragma once

#include "acopt/grid.hpp"
#include "acopt/potentials.hpp"

namespace acopt {

// All linear systems of the time steppers, the adjoint sweep and the
// linearized sweeps share one operator shape:
//
//   y = alpha*x - beta*Lap(x) + gamma * Pi diag(d2) Pi x
//
// where Pi is the identity (scalar) or the TSigma projection applied
// nodewise (vector), and d2 is a frozen potential-Hessian diagonal.
// With the boundary-halved quadrature weights the operator is
// self-adjoint in the weighted pairing, so cg applies.
struct StepOperator {
  const SpatialGrid* grid = nullptr;
  const Field* d2 = nullptr;  // may be null when gamma == 0
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  bool project = false;

  void apply(const Field& x, Field& y, Field& scratch) const;
};

// Nodewise (block-)Jacobi preconditioner for StepOperator. In the
// vector case each node's N x N block alpha'*I + gamma*Pi D Pi is
// inverted on the decomposition span{1} (+) TSigma.
struct BlockJacobi {
  int ncomp = 1;
  int nn = 0;
  std::vector<double> inv;  // scalar: 1/diag; vector: per-node N x N inverse

  void setup(const StepOperator& op);
  void apply(const Field& r, Field& z) const;
};

struct CgResult {
  int iters = 0;
  double residual = 0.0;
  bool converged = false;
};

// Preconditioned conjugate gradients in the weighted inner product.
// Solves op(x) = b starting from the initial content of x. Stops when
// ||r||_w <= rel_tol * ||b - op(x0)||_w (never below abs_floor).
CgResult cg_solve(const StepOperator& op, const Field& b, Field& x,
                  double rel_tol, int max_iter,
                  const BlockJacobi* precond = nullptr);

}  // namespace acopt
