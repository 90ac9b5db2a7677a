#pragma once

#include <span>
#include <vector>

namespace acopt {

// Uniform node-centered grid on [x_min,x_max] x [y_min,y_max].
// Node (i,j) sits at (x_min + i*hx, y_min + j*hy), row-major storage
// (j outer, i inner). Quadrature weights are hx*hy halved once per
// boundary axis incidence (quartered at corners), so they sum to the
// domain area exactly and make the reflected 5-point Laplacian
// self-adjoint (the lumped-mass P1 pairing on uniform meshes).
struct SpatialGrid {
  double x_min = -1.0, x_max = 1.0;
  double y_min = -1.0, y_max = 1.0;
  int nx = 2, ny = 2;
  double hx = 0.0, hy = 0.0;

  static SpatialGrid make(double x_min, double x_max, double y_min,
                          double y_max, int nx, int ny);

  int nodes() const { return nx * ny; }
  int index(int i, int j) const { return j * nx + i; }
  double x(int i) const { return x_min + i * hx; }
  double y(int j) const { return y_min + j * hy; }
  double area() const { return (x_max - x_min) * (y_max - y_min); }

  double weight(int i, int j) const {
    double w = hx * hy;
    if (i == 0 || i == nx - 1) w *= 0.5;
    if (j == 0 || j == ny - 1) w *= 0.5;
    return w;
  }
};

// Uniform time grid t_m = m*tau, m = 0..M.
struct TimeGrid {
  double T = 1.0;
  int M = 1;
  double tau = 1.0;

  static TimeGrid make(double T, int M);
  double t(int m) const { return m * tau; }
};

// Nodal values with ncomp components stored as contiguous planes:
// v[k*nx*ny + j*nx + i] is component k at node (i,j). ncomp == 1 is a
// scalar field, ncomp == N a vector phase field.
struct Field {
  int nx = 0, ny = 0, ncomp = 1;
  std::vector<double> v;

  Field() = default;
  Field(int nx_, int ny_, int ncomp_ = 1, double init = 0.0)
      : nx(nx_), ny(ny_), ncomp(ncomp_),
        v(static_cast<size_t>(nx_) * ny_ * ncomp_, init) {}

  int nodes() const { return nx * ny; }
  int size() const { return nx * ny * ncomp; }
  double* comp(int k) { return v.data() + static_cast<size_t>(k) * nodes(); }
  const double* comp(int k) const {
    return v.data() + static_cast<size_t>(k) * nodes();
  }
  double& at(int i, int j, int k = 0) { return v[k * nodes() + j * nx + i]; }
  double at(int i, int j, int k = 0) const {
    return v[k * nodes() + j * nx + i];
  }
  bool same_shape(const Field& o) const {
    return nx == o.nx && ny == o.ny && ncomp == o.ncomp;
  }
};

// 5-point Laplacian with ghost-node mirror reflection across the
// boundary (homogeneous Neumann). Applied per component.
void laplacian_apply(const Field& f, const SpatialGrid& grid, Field& out);
Field laplacian_apply(const Field& f, const SpatialGrid& grid);

// Quadrature-weighted L2(Omega) pairing, summed over components.
double inner_product(const Field& a, const Field& b, const SpatialGrid& grid);
double norm_l2(const Field& a, const SpatialGrid& grid);

// Right-endpoint rectangle rule: tau * sum of samples at t_1..t_M.
double time_integral(std::span<const double> samples, const TimeGrid& time);

// Elementwise helpers (shape-checked).
void fill(Field& a, double value);
void scale(Field& a, double s);
void axpy(double alpha, const Field& x, Field& y);  // y += alpha*x
double max_abs(const Field& a);
double min_value(const Field& a);

}  // namespace acopt
