#include "acopt/potentials.hpp"

#include <cmath>
#include <stdexcept>

namespace acopt {

RegularizedObstacle::RegularizedObstacle(double sigma_, int num_phases_)
    : sigma(sigma_), num_phases(num_phases_) {
  if (!(sigma > 0.0) || !(sigma < 0.25))
    throw std::invalid_argument("RegularizedObstacle: sigma must be in (0, 1/4)");
  if (num_phases < 2)
    throw std::invalid_argument("RegularizedObstacle: need at least 2 phases");
}

int model_components(const PotentialModel& model) {
  if (std::holds_alternative<DoubleWell>(model)) return 1;
  return std::get<RegularizedObstacle>(model).num_phases;
}

bool is_vector_model(const PotentialModel& model) {
  return std::holds_alternative<RegularizedObstacle>(model);
}

double psi_tilde(double r, double sigma) {
  if (r >= 0.0) return 0.0;
  if (r > -sigma) return -r * r * r / (6.0 * sigma * sigma);
  const double s = r + 0.5 * sigma;
  return 0.5 * s * s / sigma + sigma / 24.0;
}

double psi_tilde_d1(double r, double sigma) {
  if (r >= 0.0) return 0.0;
  if (r > -sigma) return -0.5 * r * r / (sigma * sigma);
  return (r + 0.5 * sigma) / sigma;
}

double psi_tilde_d2(double r, double sigma) {
  if (r >= 0.0) return 0.0;
  if (r > -sigma) return -r / (sigma * sigma);
  return 1.0 / sigma;
}

double psi_tilde_d3(double r, double sigma) {
  if (r >= 0.0) return 0.0;
  if (r > -sigma) return -1.0 / (sigma * sigma);
  return 0.0;
}

PotentialEval eval_derivatives(const PotentialModel& model,
                               std::span<const double> c) {
  const int n = model_components(model);
  if (static_cast<int>(c.size()) != n)
    throw std::invalid_argument("eval_derivatives: component count mismatch");
  PotentialEval e;
  e.grad.resize(n);
  e.hess_diag.resize(n);
  e.third_diag.resize(n);
  if (std::holds_alternative<DoubleWell>(model)) {
    const double u = c[0];
    const double q = u * u - 1.0;
    e.value = 0.25 * q * q;
    e.grad[0] = u * q;  // c^3 - c
    e.hess_diag[0] = 3.0 * u * u - 1.0;
    e.third_diag[0] = 6.0 * u;
    return e;
  }
  const auto& ob = std::get<RegularizedObstacle>(model);
  for (int i = 0; i < n; ++i) {
    const double r = c[i];
    e.value += -0.5 * r * r + psi_tilde(r, ob.sigma);
    e.grad[i] = -r + psi_tilde_d1(r, ob.sigma);
    e.hess_diag[i] = -1.0 + psi_tilde_d2(r, ob.sigma);
    e.third_diag[i] = psi_tilde_d3(r, ob.sigma);
  }
  return e;
}

namespace {

void check_model_field(const PotentialModel& model, const Field& c) {
  if (c.ncomp != model_components(model))
    throw std::invalid_argument("potential: field component count mismatch");
}

template <typename Fn>
void map_nodes(const PotentialModel& model, const Field& c, Field& out,
               Fn&& fn) {
  check_model_field(model, c);
  if (!out.same_shape(c)) out = Field(c.nx, c.ny, c.ncomp);
  const int n = c.size();
  for (int i = 0; i < n; ++i) out.v[i] = fn(c.v[i]);
}

}  // namespace

void potential_value(const PotentialModel& model, const Field& c, Field& out) {
  // Per-component contribution; summing out's components gives Psi(c).
  if (std::holds_alternative<DoubleWell>(model)) {
    map_nodes(model, c, out, [](double u) {
      const double q = u * u - 1.0;
      return 0.25 * q * q;
    });
    return;
  }
  const double sigma = std::get<RegularizedObstacle>(model).sigma;
  map_nodes(model, c, out, [sigma](double r) {
    return -0.5 * r * r + psi_tilde(r, sigma);
  });
}

void potential_d1(const PotentialModel& model, const Field& c, Field& out) {
  if (std::holds_alternative<DoubleWell>(model)) {
    map_nodes(model, c, out, [](double u) { return u * (u * u - 1.0); });
    return;
  }
  const double sigma = std::get<RegularizedObstacle>(model).sigma;
  map_nodes(model, c, out,
            [sigma](double r) { return -r + psi_tilde_d1(r, sigma); });
}

void potential_d2_diag(const PotentialModel& model, const Field& c,
                       Field& out) {
  if (std::holds_alternative<DoubleWell>(model)) {
    map_nodes(model, c, out, [](double u) { return 3.0 * u * u - 1.0; });
    return;
  }
  const double sigma = std::get<RegularizedObstacle>(model).sigma;
  map_nodes(model, c, out,
            [sigma](double r) { return -1.0 + psi_tilde_d2(r, sigma); });
}

void potential_d3_diag(const PotentialModel& model, const Field& c,
                       Field& out) {
  if (std::holds_alternative<DoubleWell>(model)) {
    map_nodes(model, c, out, [](double u) { return 6.0 * u; });
    return;
  }
  const double sigma = std::get<RegularizedObstacle>(model).sigma;
  map_nodes(model, c, out,
            [sigma](double r) { return psi_tilde_d3(r, sigma); });
}

void project_tangent(std::span<double> v) {
  if (v.size() < 2)
    throw std::invalid_argument("project_tangent: need at least 2 components");
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

void project_tangent(Field& f) {
  if (f.ncomp < 2)
    throw std::invalid_argument("project_tangent: need at least 2 components");
  const int nn = f.nodes();
  const double inv = 1.0 / f.ncomp;
  for (int idx = 0; idx < nn; ++idx) {
    double mean = 0.0;
    for (int k = 0; k < f.ncomp; ++k) mean += f.v[k * nn + idx];
    mean *= inv;
    for (int k = 0; k < f.ncomp; ++k) f.v[k * nn + idx] -= mean;
  }
}

}  // namespace acopt
