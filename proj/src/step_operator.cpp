#include "acopt/step_operator.hpp"

#include <cmath>
#include <stdexcept>

namespace acopt {

void StepOperator::apply(const Field& x, Field& y, Field& scratch) const {
  laplacian_apply(x, *grid, y);
  const int n = x.size();
  if (gamma == 0.0 || d2 == nullptr) {
    for (int i = 0; i < n; ++i) y.v[i] = alpha * x.v[i] - beta * y.v[i];
    return;
  }
  if (project) {
    // gamma * Pi diag(d2) Pi x, evaluated nodewise across components.
    if (!scratch.same_shape(x)) scratch = Field(x.nx, x.ny, x.ncomp);
    scratch.v = x.v;
    project_tangent(scratch);
    const int nn = x.nodes();
    for (int k = 0; k < x.ncomp; ++k) {
      const double* dk = d2->comp(k);
      double* sk = scratch.comp(k);
      for (int i = 0; i < nn; ++i) sk[i] *= dk[i];
    }
    project_tangent(scratch);
    for (int i = 0; i < n; ++i)
      y.v[i] = alpha * x.v[i] - beta * y.v[i] + gamma * scratch.v[i];
  } else {
    for (int i = 0; i < n; ++i)
      y.v[i] = alpha * x.v[i] - beta * y.v[i] + gamma * d2->v[i] * x.v[i];
  }
}

void BlockJacobi::setup(const StepOperator& op) {
  const SpatialGrid& g = *op.grid;
  // Reflection keeps the Laplacian diagonal uniform across the grid.
  const double lap_diag = 2.0 / (g.hx * g.hx) + 2.0 / (g.hy * g.hy);
  const double a = op.alpha + op.beta * lap_diag;
  nn = g.nodes();
  if (op.gamma == 0.0 || op.d2 == nullptr) {
    ncomp = 1;
    inv.assign(nn, 1.0 / a);
    return;
  }
  if (!op.project) {
    ncomp = 1;
    inv.resize(nn);
    for (int i = 0; i < nn; ++i) {
      double d = a + op.gamma * op.d2->v[i];
      if (!(d > 0.05 * a)) d = a;  // keep the preconditioner SPD
      inv[i] = 1.0 / d;
    }
    return;
  }
  const int N = op.d2->ncomp;
  ncomp = N;
  inv.assign(static_cast<size_t>(nn) * N * N, 0.0);
  std::vector<double> B(N * N), I(N * N);
  for (int node = 0; node < nn; ++node) {
    // B = a*I + gamma*Pi D Pi + a*(1 1^T)/N. The rank-one term acts on
    // span{1} only, which makes B invertible while leaving its action
    // on TSigma untouched.
    double s = 0.0;
    for (int k = 0; k < N; ++k) s += op.d2->comp(k)[node];
    for (int r = 0; r < N; ++r) {
      const double dr = op.d2->comp(r)[node];
      for (int c = 0; c < N; ++c) {
        const double dc = op.d2->comp(c)[node];
        const double pdp = ((r == c) ? dr : 0.0) - (dr + dc) / N + s / (N * N);
        B[r * N + c] = op.gamma * pdp + ((r == c) ? a : 0.0) + a / N;
      }
    }
    // Gauss-Jordan inverse of the small block.
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) I[r * N + c] = (r == c) ? 1.0 : 0.0;
    for (int col = 0; col < N; ++col) {
      int piv = col;
      for (int r = col + 1; r < N; ++r)
        if (std::abs(B[r * N + col]) > std::abs(B[piv * N + col])) piv = r;
      if (piv != col)
        for (int c = 0; c < N; ++c) {
          std::swap(B[col * N + c], B[piv * N + c]);
          std::swap(I[col * N + c], I[piv * N + c]);
        }
      const double p = B[col * N + col];
      for (int c = 0; c < N; ++c) {
        B[col * N + c] /= p;
        I[col * N + c] /= p;
      }
      for (int r = 0; r < N; ++r) {
        if (r == col) continue;
        const double m = B[r * N + col];
        if (m == 0.0) continue;
        for (int c = 0; c < N; ++c) {
          B[r * N + c] -= m * B[col * N + c];
          I[r * N + c] -= m * I[col * N + c];
        }
      }
    }
    for (int e = 0; e < N * N; ++e) inv[static_cast<size_t>(node) * N * N + e] = I[e];
  }
}

void BlockJacobi::apply(const Field& r, Field& z) const {
  if (!z.same_shape(r)) z = Field(r.nx, r.ny, r.ncomp);
  if (ncomp == 1) {
    // Componentwise scalar diagonal (also covers multi-component fields
    // with an unprojected diagonal operator).
    const int nnodes = nn;
    for (int k = 0; k < r.ncomp; ++k) {
      const double* rk = r.comp(k);
      double* zk = z.comp(k);
      for (int i = 0; i < nnodes; ++i) zk[i] = inv[i] * rk[i];
    }
    return;
  }
  const int N = ncomp;
  for (int node = 0; node < nn; ++node) {
    const double* M = inv.data() + static_cast<size_t>(node) * N * N;
    for (int row = 0; row < N; ++row) {
      double acc = 0.0;
      for (int col = 0; col < N; ++col) acc += M[row * N + col] * r.comp(col)[node];
      z.comp(row)[node] = acc;
    }
  }
}

CgResult cg_solve(const StepOperator& op, const Field& b, Field& x,
                  double rel_tol, int max_iter,
                  const BlockJacobi* precond) {
  const SpatialGrid& g = *op.grid;
  Field r(b.nx, b.ny, b.ncomp), z(b.nx, b.ny, b.ncomp);
  Field d(b.nx, b.ny, b.ncomp), q(b.nx, b.ny, b.ncomp);
  Field scratch;

  op.apply(x, r, scratch);
  for (int i = 0; i < r.size(); ++i) r.v[i] = b.v[i] - r.v[i];

  double r0 = norm_l2(r, g);
  CgResult res;
  res.residual = r0;
  if (r0 == 0.0) {
    res.converged = true;
    return res;
  }
  const double target = rel_tol * r0;

  if (precond)
    precond->apply(r, z);
  else
    z.v = r.v;
  d.v = z.v;
  double rz = inner_product(r, z, g);

  for (int it = 0; it < max_iter; ++it) {
    op.apply(d, q, scratch);
    const double dq = inner_product(d, q, g);
    if (!(dq > 0.0)) break;  // loss of positive definiteness; bail out
    const double step = rz / dq;
    axpy(step, d, x);
    axpy(-step, q, r);
    res.iters = it + 1;
    res.residual = norm_l2(r, g);
    if (res.residual <= target) {
      res.converged = true;
      return res;
    }
    if (precond)
      precond->apply(r, z);
    else
      z.v = r.v;
    const double rz_new = inner_product(r, z, g);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < d.size(); ++i) d.v[i] = z.v[i] + beta * d.v[i];
  }
  return res;
}

}  // namespace acopt
