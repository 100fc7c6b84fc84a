// Copyright 2026 The alphageo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include "alphageo/divergence.hpp"
#include "alphageo/families.hpp"
#include "alphageo/simplex.hpp"

namespace alphageo {

/// Minimize divergence(P, target) over the members P of `family`.
///
/// With divergence IAlpha and a linear family this is the relative
/// alpha-entropy projection; with Renyi and an alpha-linear family it is the
/// Renyi projection. Other pairings are accepted and solved the same way.
/// KL is not an admissible objective here.
struct ProjectionProblem {
  FiniteDistribution target;
  ConstraintFamily family;
  DivergenceKind divergence;
  Alpha alpha;
  double tolerance = 1e-9;
  int max_iterations = 200;
};

struct ProjectionResult {
  FiniteDistribution minimizer;
  DivergenceValue objective;
  /// Max-norm of the constraint residual (including sum-to-one) at the
  /// minimizer.
  double residual_norm;
  /// Max-norm of the objective gradient projected onto the tangent space of
  /// the feasible set on the minimizer's support. For order-linear families
  /// of order below one the gradient is taken in the coordinates x^order in
  /// which the constraints are linear. Zero for the grid oracle.
  double stationarity;
  int iterations;
  bool converged;
};

/// Throws InvalidArgument unless the problem is well formed.
void validate(const ProjectionProblem& problem);

/// Affine description {point + basis * t} of the linear slice
/// {x : sum x = 1, F x = 0}. `point` is the least-squares solution closest to
/// the uniform vector; it may have negative entries.
struct AffineSlice {
  Eigen::VectorXd point;
  Eigen::MatrixXd basis;
};
AffineSlice affine_slice(const Eigen::MatrixXd& rows);

/// A member of the family with full support, as far from the simplex
/// boundary as the solver can place it. Throws InfeasibleFamily when the
/// family has no member with full support.
FiniteDistribution feasible_interior_point(const ConstraintFamily& family);

/// Iterative solver.
///
/// Phase one finds an interior member of the family. Phase two runs damped
/// Newton steps on the feasible manifold, expressed in an orthonormal basis
/// of the constraint null space, with a backtracking line search, Gauss-Newton
/// retraction back onto the constraints and step clipping that keeps
/// iterates strictly positive. When no interior stationary point exists the
/// same scheme is repeated on every face of the simplex (alphabets up to 12
/// atoms) and the best certified face is returned.
///
/// Convergence requires stationarity <= tolerance and an objective decrease
/// below 1e-14 over the last five iterations. Hitting max_iterations returns
/// the best iterate with converged == false.
///
/// Throws InfeasibleFamily and ObjectiveInfinite (objective infinite on every
/// feasible point the solver can reach).
ProjectionResult project(const ProjectionProblem& problem);

/// Exhaustive search over the simplex grid with spacing `resolution`.
///
/// Keeps grid points whose family residual has max-norm <= resolution and
/// returns the one with the smallest objective; ties go to the
/// lexicographically smallest mass vector. Requires |X| <= 4 and
/// resolution <= 1e-2 (AlphabetTooLarge / InvalidArgument); throws
/// InfeasibleFamily when no grid point passes the filter.
ProjectionResult project_grid_oracle(const ProjectionProblem& problem,
                                     double resolution);

/// Solves the relative alpha-entropy projection of Q onto a linear family,
/// then, separately, the Renyi projection of order 1/alpha of escort(Q) onto
/// the (1/alpha)-linear family with the same functions. Returns the max-norm
/// distance between escort(P_A, alpha) and P_B.
double project_equivalence_check(const ProjectionProblem& problem);

/// D(P,Q) - D(P,P*) - D(P*,Q) for kind IAlpha or Renyi at the given order.
/// Throws IndeterminateGap when any of the three terms is infinite.
double pythagorean_gap(const FiniteDistribution& p,
                       const FiniteDistribution& p_star,
                       const FiniteDistribution& q, Alpha alpha,
                       DivergenceKind kind);

}  // namespace alphageo
