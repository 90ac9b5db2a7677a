#include "acopt/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "acopt/parallel.hpp"

namespace acopt {

SpatialGrid SpatialGrid::make(double x_min, double x_max, double y_min,
                              double y_max, int nx, int ny) {
  if (!(x_max > x_min) || !(y_max > y_min))
    throw std::invalid_argument("SpatialGrid: domain bounds must be ordered");
  if (nx < 2 || ny < 2)
    throw std::invalid_argument("SpatialGrid: need at least 2 nodes per axis");
  SpatialGrid g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.y_min = y_min;
  g.y_max = y_max;
  g.nx = nx;
  g.ny = ny;
  g.hx = (x_max - x_min) / (nx - 1);
  g.hy = (y_max - y_min) / (ny - 1);
  return g;
}

TimeGrid TimeGrid::make(double T, int M) {
  if (!(T > 0.0)) throw std::invalid_argument("TimeGrid: T must be positive");
  if (M < 1) throw std::invalid_argument("TimeGrid: M must be >= 1");
  TimeGrid t;
  t.T = T;
  t.M = M;
  t.tau = T / M;
  return t;
}

static void check_field_grid(const Field& f, const SpatialGrid& g) {
  if (f.nx != g.nx || f.ny != g.ny)
    throw std::invalid_argument("field dimensions do not match grid");
}

void laplacian_apply(const Field& f, const SpatialGrid& grid, Field& out) {
  check_field_grid(f, grid);
  if (!out.same_shape(f)) out = Field(f.nx, f.ny, f.ncomp);
  const int nx = f.nx, ny = f.ny;
  const double ihx2 = 1.0 / (grid.hx * grid.hx);
  const double ihy2 = 1.0 / (grid.hy * grid.hy);
  for (int k = 0; k < f.ncomp; ++k) {
    const double* u = f.comp(k);
    double* r = out.comp(k);
    parallel_chunks(ny, [&, u, r](int jb, int je) {
      for (int j = jb; j < je; ++j) {
        const int jm = (j > 0) ? j - 1 : 1;
        const int jp = (j < ny - 1) ? j + 1 : ny - 2;
        const double* row = u + j * nx;
        const double* rowm = u + jm * nx;
        const double* rowp = u + jp * nx;
        double* dst = r + j * nx;
        for (int i = 0; i < nx; ++i) {
          const int im = (i > 0) ? i - 1 : 1;
          const int ip = (i < nx - 1) ? i + 1 : nx - 2;
          dst[i] = (row[ip] - 2.0 * row[i] + row[im]) * ihx2 +
                   (rowp[i] - 2.0 * row[i] + rowm[i]) * ihy2;
        }
      }
    });
  }
}

Field laplacian_apply(const Field& f, const SpatialGrid& grid) {
  Field out(f.nx, f.ny, f.ncomp);
  laplacian_apply(f, grid, out);
  return out;
}

double inner_product(const Field& a, const Field& b, const SpatialGrid& grid) {
  if (!a.same_shape(b))
    throw std::invalid_argument("inner_product: shape mismatch");
  check_field_grid(a, grid);
  const int nx = a.nx, ny = a.ny;
  const double base = grid.hx * grid.hy;
  double total = 0.0;
  for (int k = 0; k < a.ncomp; ++k) {
    const double* u = a.comp(k);
    const double* w = b.comp(k);
    total += parallel_sum(ny, [&, u, w](int jb, int je) {
      double s = 0.0;
      for (int j = jb; j < je; ++j) {
        const double wy = (j == 0 || j == ny - 1) ? 0.5 * base : base;
        const double* ru = u + j * nx;
        const double* rw = w + j * nx;
        double row = 0.5 * ru[0] * rw[0];
        for (int i = 1; i < nx - 1; ++i) row += ru[i] * rw[i];
        row += 0.5 * ru[nx - 1] * rw[nx - 1];
        s += wy * row;
      }
      return s;
    });
  }
  return total;
}

double norm_l2(const Field& a, const SpatialGrid& grid) {
  return std::sqrt(inner_product(a, a, grid));
}

double time_integral(std::span<const double> samples, const TimeGrid& time) {
  if (static_cast<int>(samples.size()) != time.M)
    throw std::invalid_argument("time_integral: expected exactly M samples");
  double s = 0.0;
  for (double v : samples) s += v;
  return time.tau * s;
}

void fill(Field& a, double value) {
  for (double& x : a.v) x = value;
}

void scale(Field& a, double s) {
  for (double& x : a.v) x *= s;
}

void axpy(double alpha, const Field& x, Field& y) {
  if (!x.same_shape(y)) throw std::invalid_argument("axpy: shape mismatch");
  const int n = x.size();
  const double* xs = x.v.data();
  double* ys = y.v.data();
  parallel_chunks(n, [&](int b, int e) {
    for (int i = b; i < e; ++i) ys[i] += alpha * xs[i];
  });
}

double max_abs(const Field& a) {
  double m = 0.0;
  for (double x : a.v) m = std::max(m, std::abs(x));
  return m;
}

double min_value(const Field& a) {
  double m = a.v.empty() ? 0.0 : a.v[0];
  for (double x : a.v) m = std::min(m, x);
  return m;
}

}  // namespace acopt
