#pragma once

#include <span>
#include <variant>
#include <vector>

#include "acopt/grid.hpp"

namespace acopt {

// Smooth scalar double well Psi(c) = 1/4 (c^2 - 1)^2, minima at +-1.
struct DoubleWell {};

// Multi-obstacle potential with the indicator of the Gibbs simplex
// replaced by the C^2 convex penalty psi_tilde_sigma:
//   Psi_sigma(c) = -1/2 |c|^2 + sum_i psi_tilde_sigma(c_i).
// The penalty is piecewise cubic/quadratic and vanishes for c_i >= 0.
struct RegularizedObstacle {
  double sigma;
  int num_phases;

  RegularizedObstacle(double sigma_, int num_phases_);
};

using PotentialModel = std::variant<DoubleWell, RegularizedObstacle>;

// Component count of phase values the model acts on (1 for the scalar
// double well).
int model_components(const PotentialModel& model);
bool is_vector_model(const PotentialModel& model);

// psi_tilde_sigma and its derivatives at a single component value.
double psi_tilde(double r, double sigma);
double psi_tilde_d1(double r, double sigma);
double psi_tilde_d2(double r, double sigma);
double psi_tilde_d3(double r, double sigma);

// Potential value and componentwise derivative diagonals at one phase
// value. For the obstacle model the Hessian and third derivative of
// Psi_sigma are diagonal (Psi_0 contributes -1 to every Hessian entry),
// so diagonals are all that is ever needed.
struct PotentialEval {
  double value = 0.0;
  std::vector<double> grad;
  std::vector<double> hess_diag;
  std::vector<double> third_diag;
};

PotentialEval eval_derivatives(const PotentialModel& model,
                               std::span<const double> c);

// Fieldwise fast paths; `out` has the field's component count.
void potential_value(const PotentialModel& model, const Field& c, Field& out);
void potential_d1(const PotentialModel& model, const Field& c, Field& out);
void potential_d2_diag(const PotentialModel& model, const Field& c,
                       Field& out);
void potential_d3_diag(const PotentialModel& model, const Field& c,
                       Field& out);

// Orthogonal projection onto the simplex tangent space TSigma
// (subtracts the componentwise mean): P v = v - (1/N) sum_i v_i.
void project_tangent(std::span<double> v);
void project_tangent(Field& f);

}  // namespace acopt
