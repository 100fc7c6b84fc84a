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

#include "alphageo/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

namespace alphageo {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxFaceAlphabet = 12;

double pos_pow(double x, double e) { return x > 0.0 ? std::pow(x, e) : 0.0; }

MatrixXd orthonormal_null_space(const MatrixXd& jacobian) {
  Eigen::ColPivHouseholderQR<MatrixXd> qr(jacobian.transpose());
  qr.setThreshold(1e-12);
  const Index n = jacobian.cols();
  const Index rank = qr.rank();
  const MatrixXd q = qr.householderQ() * MatrixXd::Identity(n, n);
  return q.rightCols(n - rank);
}

// ---------------------------------------------------------------------------
// Objectives on a support set. Inputs are strictly positive vectors holding
// the masses of the support atoms only; atoms outside the support carry zero
// mass and contribute nothing to either divergence.

class Objective {
 public:
  virtual ~Objective() = default;
  virtual double value(const VectorXd& x) const = 0;
  virtual VectorXd gradient(const VectorXd& x) const = 0;
  virtual MatrixXd hessian(const VectorXd& x) const = 0;
};

// I_alpha(x, Q) = (a/(1-a)) (log sum x w - (1/a) log sum x^a),
// w = (q/||q||)^(a-1). Invariant under rescaling of x.
class RelativeAlphaEntropyObjective final : public Objective {
 public:
  RelativeAlphaEntropyObjective(VectorXd weights, double a)
      : w_(std::move(weights)), a_(a), c_(a / (1.0 - a)) {}

  double value(const VectorXd& x) const override {
    if (!w_.allFinite()) return kInf;
    const double t = x.dot(w_);
    if (!(t > 0.0)) return kInf;
    return c_ * (std::log(t) - std::log(power_sum(x)) / a_);
  }

  VectorXd gradient(const VectorXd& x) const override {
    const double t = x.dot(w_);
    const double s = power_sum(x);
    VectorXd g(x.size());
    for (Index i = 0; i < x.size(); ++i) {
      g(i) = c_ * (w_(i) / t - std::pow(x(i), a_ - 1.0) / s);
    }
    return g;
  }

  MatrixXd hessian(const VectorXd& x) const override {
    const double t = x.dot(w_);
    const double s = power_sum(x);
    VectorXd u(x.size());
    for (Index i = 0; i < x.size(); ++i) u(i) = std::pow(x(i), a_ - 1.0);
    MatrixXd h = -(w_ * w_.transpose()) / (t * t) +
                 (a_ / (s * s)) * (u * u.transpose());
    for (Index i = 0; i < x.size(); ++i) {
      h(i, i) -= (a_ - 1.0) * std::pow(x(i), a_ - 2.0) / s;
    }
    return c_ * h;
  }

 private:
  double power_sum(const VectorXd& x) const {
    double s = 0.0;
    for (Index i = 0; i < x.size(); ++i) s += std::pow(x(i), a_);
    return s;
  }

  VectorXd w_;
  double a_;
  double c_;
};

// D_b(x || Q) = log(sum x^b c) / (b-1), c = q^(1-b).
class RenyiObjective final : public Objective {
 public:
  RenyiObjective(VectorXd coefficients, double b)
      : c_(std::move(coefficients)), b_(b) {}

  double value(const VectorXd& x) const override {
    if (!c_.allFinite()) return kInf;
    const double u = power_sum(x);
    if (!(u > 0.0)) return kInf;
    return std::log(u) / (b_ - 1.0);
  }

  VectorXd gradient(const VectorXd& x) const override {
    const double u = power_sum(x);
    VectorXd g(x.size());
    for (Index i = 0; i < x.size(); ++i) {
      g(i) = b_ * std::pow(x(i), b_ - 1.0) * c_(i) / ((b_ - 1.0) * u);
    }
    return g;
  }

  MatrixXd hessian(const VectorXd& x) const override {
    const double u = power_sum(x);
    VectorXd v(x.size());
    for (Index i = 0; i < x.size(); ++i) {
      v(i) = b_ * std::pow(x(i), b_ - 1.0) * c_(i);
    }
    MatrixXd h = -(v * v.transpose()) / (u * u);
    for (Index i = 0; i < x.size(); ++i) {
      h(i, i) += b_ * (b_ - 1.0) * std::pow(x(i), b_ - 2.0) * c_(i) / u;
    }
    return h / (b_ - 1.0);
  }

 private:
  double power_sum(const VectorXd& x) const {
    double u = 0.0;
    for (Index i = 0; i < x.size(); ++i) u += std::pow(x(i), b_) * c_(i);
    return u;
  }

  VectorXd c_;
  double b_;
};

std::unique_ptr<Objective> make_objective(const ProjectionProblem& problem,
                                          const std::vector<Index>& support) {
  const auto& q = problem.target;
  const double a = problem.alpha.value();
  const auto s = static_cast<Index>(support.size());
  VectorXd coeff(s);
  if (problem.divergence == DivergenceKind::IAlpha) {
    const double norm_q = alpha_pseudo_norm(q, problem.alpha);
    for (Index j = 0; j < s; ++j) {
      const double qx = q[static_cast<std::size_t>(support[j])];
      coeff(j) = qx > 0.0 ? std::pow(qx / norm_q, a - 1.0)
                          : (a > 1.0 ? 0.0 : kInf);
    }
    return std::make_unique<RelativeAlphaEntropyObjective>(coeff, a);
  }
  for (Index j = 0; j < s; ++j) {
    const double qx = q[static_cast<std::size_t>(support[j])];
    coeff(j) = qx > 0.0 ? std::pow(qx, 1.0 - a) : (a < 1.0 ? 0.0 : kInf);
  }
  return std::make_unique<RenyiObjective>(coeff, a);
}

// ---------------------------------------------------------------------------
// Constraints on a support set: sum v^sum_power = 1 and F v^row_power = 0.
// In mass coordinates v = x this is (1, order); in the flat coordinates
// v = x^order of an order-linear family it is (1/order, 1).

class FaceConstraints {
 public:
  FaceConstraints(MatrixXd rows, double sum_power, double row_power)
      : rows_(std::move(rows)), sum_power_(sum_power), row_power_(row_power) {}

  Index count() const { return rows_.rows() + 1; }
  bool is_linear() const { return sum_power_ == 1.0 && row_power_ == 1.0; }
  double scale() const { return 1.0 + rows_.cwiseAbs().maxCoeff(); }

  VectorXd value(const VectorXd& v) const {
    VectorXd c(count());
    c(0) = powered(v, sum_power_).sum() - 1.0;
    c.tail(rows_.rows()) = rows_ * powered(v, row_power_);
    return c;
  }

  MatrixXd jacobian(const VectorXd& v) const {
    MatrixXd j(count(), v.size());
    if (sum_power_ == 1.0) {
      j.row(0).setOnes();
    } else {
      j.row(0) = sum_power_ * powered(v, sum_power_ - 1.0).transpose();
    }
    if (row_power_ == 1.0) {
      j.bottomRows(rows_.rows()) = rows_;
    } else {
      const VectorXd d = row_power_ * powered(v, row_power_ - 1.0);
      j.bottomRows(rows_.rows()) = rows_ * d.asDiagonal();
    }
    return j;
  }

  // sum_i mu_i * Hessian(c_i).
  MatrixXd weighted_hessian(const VectorXd& v, const VectorXd& mu) const {
    const Index n = v.size();
    VectorXd diag = VectorXd::Zero(n);
    if (sum_power_ != 1.0) {
      for (Index i = 0; i < n; ++i) {
        diag(i) += mu(0) * sum_power_ * (sum_power_ - 1.0) *
                   std::pow(v(i), sum_power_ - 2.0);
      }
    }
    if (row_power_ != 1.0) {
      const VectorXd combo = rows_.transpose() * mu.tail(rows_.rows());
      for (Index i = 0; i < n; ++i) {
        diag(i) += combo(i) * row_power_ * (row_power_ - 1.0) *
                   std::pow(v(i), row_power_ - 2.0);
      }
    }
    return diag.asDiagonal();
  }

 private:
  static VectorXd powered(const VectorXd& v, double e) {
    if (e == 1.0) return v;
    VectorXd out(v.size());
    for (Index i = 0; i < v.size(); ++i) out(i) = pos_pow(v(i), e);
    return out;
  }

  MatrixXd rows_;
  double sum_power_;
  double row_power_;
};

// f(v^p) as a function of v, for solving in the flat coordinates of an
// order-linear family (p = 1/order).
class PoweredObjective final : public Objective {
 public:
  PoweredObjective(const Objective& inner, double p) : inner_(inner), p_(p) {}

  double value(const VectorXd& v) const override {
    return inner_.value(mass(v));
  }

  VectorXd gradient(const VectorXd& v) const override {
    return inner_.gradient(mass(v)).cwiseProduct(first(v));
  }

  MatrixXd hessian(const VectorXd& v) const override {
    const VectorXd x = mass(v);
    const VectorXd d1 = first(v);
    MatrixXd h = d1.asDiagonal() * inner_.hessian(x) * d1.asDiagonal();
    const VectorXd g = inner_.gradient(x);
    for (Index i = 0; i < v.size(); ++i) {
      h(i, i) += g(i) * p_ * (p_ - 1.0) * std::pow(v(i), p_ - 2.0);
    }
    return h;
  }

  VectorXd mass(const VectorXd& v) const {
    VectorXd x(v.size());
    for (Index i = 0; i < v.size(); ++i) x(i) = pos_pow(v(i), p_);
    return x;
  }

 private:
  VectorXd first(const VectorXd& v) const {
    VectorXd d(v.size());
    for (Index i = 0; i < v.size(); ++i) d(i) = p_ * std::pow(v(i), p_ - 1.0);
    return d;
  }

  const Objective& inner_;
  double p_;
};

std::optional<VectorXd> retract(const FaceConstraints& cons, VectorXd y) {
  const double tight = 1e-15 * cons.scale();
  for (int it = 0; it < 50; ++it) {
    if (!(y.minCoeff() > 0.0)) return std::nullopt;
    const VectorXd c = cons.value(y);
    const double err = c.lpNorm<Eigen::Infinity>();
    if (!std::isfinite(err)) return std::nullopt;
    if (err <= tight) return y;
    const MatrixXd j = cons.jacobian(y);
    const VectorXd dy = j.completeOrthogonalDecomposition().solve(c);
    y -= dy;
    if (cons.is_linear() && it > 0) break;
  }
  if (!(y.minCoeff() > 0.0)) return std::nullopt;
  const double err = cons.value(y).lpNorm<Eigen::Infinity>();
  if (!(err <= 1e-12 * cons.scale())) return std::nullopt;
  return y;
}

// Maximizes a soft minimum of the coordinates over the affine slice,
// tightening the temperature until the hard minimum settles. Returns a
// strictly positive point of the slice or nullopt.
std::optional<VectorXd> interior_point(const MatrixXd& rows) {
  const AffineSlice slice = affine_slice(rows);
  const Index n = slice.point.size();
  MatrixXd a(rows.rows() + 1, n);
  a.row(0).setOnes();
  a.bottomRows(rows.rows()) = rows;
  VectorXd b = VectorXd::Zero(a.rows());
  b(0) = 1.0;
  if ((a * slice.point - b).lpNorm<Eigen::Infinity>() >
      1e-10 * (1.0 + rows.cwiseAbs().maxCoeff())) {
    return std::nullopt;
  }
  const MatrixXd& basis = slice.basis;
  if (basis.cols() == 0) {
    if (slice.point.minCoeff() > 0.0) return slice.point;
    return std::nullopt;
  }

  VectorXd y = VectorXd::Zero(basis.cols());
  auto soft = [&](const VectorXd& yy, double tau) {
    const VectorXd z = -tau * (slice.point + basis * yy);
    const double zmax = z.maxCoeff();
    return zmax + std::log((z.array() - zmax).exp().sum());
  };
  for (double tau = 10.0 * static_cast<double>(n); tau < 1e9; tau *= 10.0) {
    for (int it = 0; it < 60; ++it) {
      const VectorXd r = slice.point + basis * y;
      const VectorXd z = -tau * r;
      const double zmax = z.maxCoeff();
      VectorXd pi = (z.array() - zmax).exp();
      pi /= pi.sum();
      const VectorXd grad = -tau * (basis.transpose() * pi);
      MatrixXd cov = MatrixXd(pi.asDiagonal()) - pi * pi.transpose();
      MatrixXd hess = tau * tau * (basis.transpose() * cov * basis);
      hess.diagonal().array() += 1e-12 * (1.0 + hess.diagonal().maxCoeff());
      const VectorXd step = -hess.ldlt().solve(grad);
      const double f0 = soft(y, tau);
      const double slope = grad.dot(step);
      if (!(slope < 0.0) || grad.lpNorm<Eigen::Infinity>() < 1e-14) break;
      double s = 1.0;
      bool moved = false;
      for (int ls = 0; ls < 50; ++ls) {
        const VectorXd trial = y + s * step;
        if (soft(trial, tau) <= f0 + 1e-4 * s * slope) {
          y = trial;
          moved = true;
          break;
        }
        s *= 0.5;
      }
      if (!moved) break;
    }
    const VectorXd r = slice.point + basis * y;
    // Once the minimum is clearly positive there is no need to sharpen.
    if (r.minCoeff() > 0.0 && tau * r.minCoeff() > 50.0) break;
  }
  const VectorXd r = slice.point + basis * y;
  if (r.minCoeff() > 0.0) return r;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

struct FaceOutcome {
  VectorXd x;
  double value = kInf;
  double stationarity = kInf;
  int iterations = 0;
  bool converged = false;
};

struct Stationarity {
  VectorXd multipliers;
  double norm;
};

Stationarity stationarity(const FaceConstraints& cons, const VectorXd& x,
                          const VectorXd& g) {
  const MatrixXd j = cons.jacobian(x);
  VectorXd mu = j.transpose().completeOrthogonalDecomposition().solve(g);
  const VectorXd pg = g - j.transpose() * mu;
  return {std::move(mu), pg.lpNorm<Eigen::Infinity>()};
}

FaceOutcome solve_face(const Objective& objective, const FaceConstraints& cons,
                       VectorXd x, double tolerance, int max_iterations) {
  FaceOutcome out;
  std::vector<double> history;
  double f = objective.value(x);
  int it = 0;
  for (; it < max_iterations; ++it) {
    const VectorXd g = objective.gradient(x);
    const auto st = stationarity(cons, x, g);
    history.push_back(f);
    out.stationarity = st.norm;
    if (st.norm <= tolerance && it >= 5 &&
        history[static_cast<std::size_t>(it - 5)] - f < 1e-14) {
      out.converged = true;
      break;
    }
    // Iterates collapsing onto a face of the simplex: the stationary point
    // lives on a smaller support.
    if (x.minCoeff() < 1e-13) break;

    const MatrixXd j = cons.jacobian(x);
    const MatrixXd z = orthonormal_null_space(j);
    if (z.cols() == 0) {
      out.converged = st.norm <= tolerance;
      break;
    }
    const MatrixXd h_lagrangian =
        objective.hessian(x) - cons.weighted_hessian(x, st.multipliers);
    const MatrixXd h_reduced = z.transpose() * h_lagrangian * z;
    const VectorXd g_reduced = z.transpose() * g;
    VectorXd direction;
    Eigen::LLT<MatrixXd> llt(h_reduced);
    if (llt.info() == Eigen::Success) {
      direction = -z * llt.solve(g_reduced);
    }
    if (direction.size() == 0 || !direction.allFinite() ||
        !(g.dot(direction) < 0.0)) {
      direction = -z * g_reduced;
    }
    const double slope = g.dot(direction);
    if (!(slope < 0.0)) continue;

    double step = 1.0;
    for (Index i = 0; i < x.size(); ++i) {
      if (direction(i) < 0.0) step = std::min(step, -0.9 * x(i) / direction(i));
    }
    // Near the optimum the predicted decrease drops below the rounding noise
    // of f; a full step is then accepted if f does not visibly increase and
    // stationarity improves.
    const double noise = 16.0 * std::numeric_limits<double>::epsilon() *
                         (1.0 + std::abs(f));
    for (int ls = 0; ls < 60; ++ls) {
      if (auto y = retract(cons, x + step * direction)) {
        const double fy = objective.value(*y);
        bool accept = fy <= f + 1e-4 * step * slope;
        if (!accept && ls == 0 && -slope < noise && fy <= f + noise) {
          accept = stationarity(cons, *y, objective.gradient(*y)).norm <
                   st.norm;
        }
        if (accept) {
          x = std::move(*y);
          f = fy;
          break;
        }
      }
      step *= 0.5;
    }
  }
  out.x = std::move(x);
  out.value = f;
  out.iterations = it;
  return out;
}

struct Candidate {
  std::vector<double> mass;
  double value;
  double stationarity;
  bool converged;
};

enum class FaceStatus { Infeasible, Infinite, Solved };

struct FaceAttempt {
  FaceStatus status;
  Candidate candidate;
  int iterations = 0;
};

FaceAttempt attempt_face(const ProjectionProblem& problem,
                         const std::vector<Index>& support) {
  const auto& rows = problem.family.rows();
  const auto s = static_cast<Index>(support.size());
  MatrixXd face_rows(rows.rows(), s);
  for (Index j = 0; j < s; ++j) face_rows.col(j) = rows.col(support[j]);

  const double order =
      problem.family.is_linear() ? 1.0 : problem.family.order()->value();

  // The order-linear constraint is linear in r = x^order.
  auto r = interior_point(face_rows);
  if (!r) return {FaceStatus::Infeasible, {}, 0};
  VectorXd x0(s);
  for (Index j = 0; j < s; ++j) x0(j) = std::pow((*r)(j), 1.0 / order);
  x0 /= x0.sum();

  const auto objective = make_objective(problem, support);
  if (!std::isfinite(objective->value(x0))) {
    return {FaceStatus::Infinite, {}, 0};
  }

  // Below order one the masses near a face scale like r^(1/order) and the
  // objective gradient like x^(order-1); both are tame in r, so the solve
  // runs there.
  FaceOutcome outcome;
  VectorXd x;
  if (order < 1.0) {
    const PoweredObjective flat(*objective, 1.0 / order);
    VectorXd r0(s);
    for (Index j = 0; j < s; ++j) r0(j) = std::pow(x0(j), order);
    outcome = solve_face(flat, FaceConstraints(face_rows, 1.0 / order, 1.0), r0,
                         problem.tolerance, problem.max_iterations);
    x = flat.mass(outcome.x);
  } else {
    outcome = solve_face(*objective, FaceConstraints(face_rows, 1.0, order), x0,
                         problem.tolerance, problem.max_iterations);
    x = outcome.x;
  }
  Candidate c;
  c.mass.assign(problem.target.size(), 0.0);
  for (Index j = 0; j < s; ++j) {
    c.mass[static_cast<std::size_t>(support[j])] = x(j);
  }
  c.value = outcome.value;
  c.stationarity = outcome.stationarity;
  c.converged = outcome.converged;
  return {FaceStatus::Solved, std::move(c), outcome.iterations};
}

double residual_norm(const FiniteDistribution& p,
                     const ConstraintFamily& family) {
  double sum = 0.0;
  for (double m : p.mass()) sum += m;
  const double r = family_residual(p, family).lpNorm<Eigen::Infinity>();
  return std::max(r, std::abs(sum - 1.0));
}

ProjectionResult finish(const ProjectionProblem& problem,
                        std::vector<double> mass, double stationarity,
                        int iterations, bool converged) {
  auto minimizer = problem.target.with_mass(std::move(mass));
  const auto objective = divergence(problem.divergence, minimizer,
                                    problem.target, problem.alpha);
  const double residual = residual_norm(minimizer, problem.family);
  return {std::move(minimizer), objective,  residual,
          stationarity,         iterations, converged};
}

}  // namespace

void validate(const ProjectionProblem& problem) {
  if (problem.target.labels() != problem.family.labels()) {
    throw Error(ErrorCode::LabelMismatch,
                "target and family use different alphabets");
  }
  if (problem.divergence == DivergenceKind::KL) {
    throw Error(ErrorCode::InvalidArgument,
                "projection objective must be i-alpha or renyi");
  }
  if (problem.alpha.is_one()) {
    throw Error(ErrorCode::InvalidAlpha, "projection needs alpha != 1");
  }
  if (!(problem.tolerance > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  }
  if (problem.max_iterations < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_iterations must be >= 1");
  }
}

AffineSlice affine_slice(const MatrixXd& rows) {
  const Index n = rows.cols();
  MatrixXd a(rows.rows() + 1, n);
  a.row(0).setOnes();
  a.bottomRows(rows.rows()) = rows;
  VectorXd b = VectorXd::Zero(a.rows());
  b(0) = 1.0;
  const VectorXd uniform = VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  AffineSlice slice;
  slice.point =
      uniform + a.completeOrthogonalDecomposition().solve(b - a * uniform);
  slice.basis = orthonormal_null_space(a);
  return slice;
}

FiniteDistribution feasible_interior_point(const ConstraintFamily& family) {
  const double order = family.is_linear() ? 1.0 : family.order()->value();
  auto r = interior_point(family.rows());
  if (!r) {
    throw Error(ErrorCode::InfeasibleFamily,
                "the family has no member with full support");
  }
  std::vector<double> mass(static_cast<std::size_t>(r->size()));
  for (Index i = 0; i < r->size(); ++i) {
    mass[static_cast<std::size_t>(i)] = std::pow((*r)(i), 1.0 / order);
  }
  return FiniteDistribution(family.labels(), std::move(mass));
}

ProjectionResult project(const ProjectionProblem& problem) {
  validate(problem);
  const auto m = static_cast<Index>(problem.target.size());

  std::vector<Index> all(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) all[static_cast<std::size_t>(i)] = i;

  int iterations = 0;
  bool any_feasible = false;
  std::vector<Candidate> candidates;

  auto run = [&](const std::vector<Index>& support) {
    auto attempt = attempt_face(problem, support);
    iterations += attempt.iterations;
    if (attempt.status != FaceStatus::Infeasible) any_feasible = true;
    if (attempt.status == FaceStatus::Solved) {
      candidates.push_back(std::move(attempt.candidate));
    }
  };

  run(all);
  if (!candidates.empty() && candidates.front().converged) {
    auto& c = candidates.front();
    return finish(problem, std::move(c.mass), c.stationarity, iterations,
                  true);
  }

  if (m <= kMaxFaceAlphabet) {
    const std::uint32_t full = (1u << m) - 1u;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      std::vector<Index> support;
      for (Index i = 0; i < m; ++i) {
        if (mask & (1u << i)) support.push_back(i);
      }
      run(support);
    }
  }

  if (candidates.empty()) {
    if (any_feasible) {
      throw Error(ErrorCode::ObjectiveInfinite,
                  "objective is infinite on every feasible point");
    }
    throw Error(ErrorCode::InfeasibleFamily,
                "no probability vector satisfies the constraints");
  }

  const Candidate* best_any = nullptr;
  const Candidate* best_converged = nullptr;
  for (const auto& c : candidates) {
    if (!best_any || c.value < best_any->value) best_any = &c;
    if (c.converged && (!best_converged || c.value < best_converged->value)) {
      best_converged = &c;
    }
  }
  const Candidate* pick = best_any;
  if (best_converged &&
      best_converged->value <= best_any->value + 1e-9 * (1.0 + std::abs(best_any->value))) {
    pick = best_converged;
  }
  return finish(problem, pick->mass, pick->stationarity, iterations,
                pick->converged);
}

ProjectionResult project_grid_oracle(const ProjectionProblem& problem,
                                     double resolution) {
  validate(problem);
  const std::size_t m = problem.target.size();
  if (m > 4) {
    throw Error(ErrorCode::AlphabetTooLarge,
                "grid oracle supports at most 4 atoms");
  }
  if (!(resolution > 0.0) || resolution > 1e-2) {
    throw Error(ErrorCode::InvalidArgument,
                "grid resolution must lie in (0, 1e-2]");
  }
  const long steps = std::lround(1.0 / resolution);
  const double spacing = 1.0 / static_cast<double>(steps);
  const auto& rows = problem.family.rows();
  const double order =
      problem.family.is_linear() ? 1.0 : problem.family.order()->value();
  const auto q = problem.target.mass();

  std::vector<long> counts(m, 0);
  std::vector<double> point(m, 0.0);
  std::vector<double> best;
  double best_value = kInf;
  bool any_feasible = false;
  int visited = 0;

  // Lexicographic order on the count vector, so a strict comparison keeps
  // the lexicographically smallest minimizer.
  auto visit = [&]() {
    ++visited;
    for (std::size_t i = 0; i < m; ++i) {
      point[i] = static_cast<double>(counts[i]) * spacing;
    }
    for (Index r = 0; r < rows.rows(); ++r) {
      double acc = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        acc += rows(r, static_cast<Index>(i)) * pos_pow(point[i], order);
      }
      if (std::abs(acc) > resolution) return;
    }
    any_feasible = true;
    const double v =
        divergence(problem.divergence, point, q, problem.alpha).as_double();
    if (v < best_value) {
      best_value = v;
      best = point;
    }
  };

  auto recurse = [&](auto&& self, std::size_t index, long remaining) -> void {
    if (index + 1 == m) {
      counts[index] = remaining;
      visit();
      return;
    }
    for (long c = 0; c <= remaining; ++c) {
      counts[index] = c;
      self(self, index + 1, remaining - c);
    }
  };
  recurse(recurse, 0, steps);

  if (!any_feasible) {
    throw Error(ErrorCode::InfeasibleFamily,
                "no grid point satisfies the constraints");
  }
  if (best.empty()) {
    throw Error(ErrorCode::ObjectiveInfinite,
                "objective is infinite on every feasible grid point");
  }
  return finish(problem, std::move(best), 0.0, visited, true);
}

double project_equivalence_check(const ProjectionProblem& problem) {
  if (problem.divergence != DivergenceKind::IAlpha ||
      !problem.family.is_linear()) {
    throw Error(ErrorCode::InvalidArgument,
                "equivalence check needs an i-alpha problem over a linear "
                "family");
  }
  const Alpha alpha = problem.alpha;
  const Alpha dual = alpha.reciprocal();
  const auto direct = project(problem);

  ProjectionProblem escorted{escort(problem.target, alpha),
                             problem.family.with_order(dual),
                             DivergenceKind::Renyi,
                             dual,
                             problem.tolerance,
                             problem.max_iterations};
  const auto dual_result = project(escorted);

  const auto image = escort(direct.minimizer, alpha);
  double gap = 0.0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    gap = std::max(gap, std::abs(image[i] - dual_result.minimizer[i]));
  }
  return gap;
}

double pythagorean_gap(const FiniteDistribution& p,
                       const FiniteDistribution& p_star,
                       const FiniteDistribution& q, Alpha alpha,
                       DivergenceKind kind) {
  if (kind == DivergenceKind::KL) {
    throw Error(ErrorCode::InvalidArgument,
                "pythagorean gap is defined for i-alpha and renyi");
  }
  const auto pq = divergence(kind, p, q, alpha);
  const auto pp = divergence(kind, p, p_star, alpha);
  const auto sq = divergence(kind, p_star, q, alpha);
  if (pq.is_infinite() || pp.is_infinite() || sq.is_infinite()) {
    throw Error(ErrorCode::IndeterminateGap,
                "a divergence in the pythagorean relation is infinite");
  }
  return pq.value() - pp.value() - sq.value();
}

}  // namespace alphageo
