#pragma once

#include <functional>
#include <vector>

#include "dskg/mass.hpp"

namespace dskg {

using Profile = std::function<double(double)>;

/// Separable reduction A X = mu X of the target problem. With
/// u(x,t) = y(t) X(x) the equation becomes
///   y'' - mu e^{-2t} y - M^2 y = g(t),  y(0) = c0, y'(0) = c1.
struct ModeProblem {
  double mu = 0.0;  // mu <= 0; -lambda^2 for sin/cos(lambda x), -k^4 for a beam mode
  Mass mass;
  double c0 = 0.0;
  double c1 = 0.0;
  std::function<double(double)> forcing;  // empty means g = 0

  double frequency() const;  // sqrt(-mu)
};

/// n = 1 wave solution with v(x,0) = profile, v_t(x,0) = 0.
double dalembert_v(const Profile& profile, double x, double t);

/// cos(sqrt(-mu) t): time factor of an undamped eigenmode with zero velocity.
double mode_v(double mu, double t);

/// Dense solution of the mode ODE on [0, t_max].
class DenseSolution {
 public:
  struct Node {
    double t;
    double y;
    double dy;
    double ddy;
  };

  explicit DenseSolution(std::vector<Node> nodes);

  double value(double t) const;
  double derivative(double t) const;
  double t_max() const { return nodes_.back().t; }
  std::size_t steps() const { return nodes_.size() - 1; }

 private:
  std::size_t locate(double t) const;
  std::vector<Node> nodes_;
};

/// Dormand-Prince 5(4) with local error control (tol per unit time, mixed
/// absolute/relative) and quintic Hermite dense output built from y, y', y''.
/// Requires M^2 real.
DenseSolution ode_oracle(const ModeProblem& problem, double t_max, double tol);

enum class Boundary { periodic, dirichlet };

/// Nodal data of the 1D grid problem for A = d^2/dx^2.
///
/// Periodic grids have n_x nodes x_min + i dx with dx = (x_max - x_min) / n_x
/// (x_max is identified with x_min). Dirichlet grids include both endpoints,
/// dx = (x_max - x_min) / (n_x - 1), and hold u = 0 there.
struct GridProblem1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_x = 3;
  std::vector<double> phi0;
  std::vector<double> phi1;
  std::function<double(double x, double t)> f;  // empty means f = 0
  Boundary boundary = Boundary::periodic;

  double dx() const;
  std::vector<double> nodes() const;
  void validate() const;
};

/// Space-time samples u[k][i] at times t[k] and nodes x[i].
struct SpaceTimeField {
  std::vector<double> x;
  std::vector<double> t;
  std::vector<std::vector<double>> u;
  double dt = 0.0;

  /// Row whose time is closest to t.
  const std::vector<double>& at(double t) const;
};

/// Leapfrog for u_tt = e^{-2t} u_xx + M^2 u + f with a centred second-order
/// stencil. dt is shortened so that t_max is hit exactly. M must be real or
/// purely imaginary.
SpaceTimeField fd_direct_solver(const GridProblem1D& problem, const Mass& mass,
                                double t_max, double dt);

}  // namespace dskg
