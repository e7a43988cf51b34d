#include "dskg/wave_oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "dskg/error.hpp"

namespace dskg {
namespace {

double real_mass_squared(const Mass& mass, const char* who) {
  if (!mass.is_real_or_imaginary()) {
    raise(ErrorKind::invalid_params,
          std::string(who) + " requires M real or purely imaginary");
  }
  return mass.squared().real();
}

}  // namespace

double ModeProblem::frequency() const { return std::sqrt(-mu); }

double dalembert_v(const Profile& profile, double x, double t) {
  return 0.5 * (profile(x + t) + profile(x - t));
}

double mode_v(double mu, double t) {
  if (mu > 0.0) {
    raise(ErrorKind::invalid_params, "mode_v requires mu <= 0");
  }
  return std::cos(std::sqrt(-mu) * t);
}

DenseSolution::DenseSolution(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) {
    raise(ErrorKind::invalid_params, "dense solution needs at least one node");
  }
}

std::size_t DenseSolution::locate(double t) const {
  if (t < nodes_.front().t || t > nodes_.back().t) {
    std::ostringstream os;
    os << "t = " << t << " outside the integrated interval [0, "
       << nodes_.back().t << "]";
    raise(ErrorKind::domain, os.str());
  }
  const auto it = std::upper_bound(
      nodes_.begin(), nodes_.end(), t,
      [](double v, const Node& n) { return v < n.t; });
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin());
  if (i == 0) return 0;
  i -= 1;
  return std::min(i, nodes_.size() >= 2 ? nodes_.size() - 2 : 0);
}

// Quintic Hermite through (y, y', y'') at both ends of the step.
namespace {

struct Quintic {
  double v[6];
};

Quintic quintic_basis(double s) {
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double s4 = s3 * s;
  const double s5 = s4 * s;
  return {{1 - 10 * s3 + 15 * s4 - 6 * s5, s - 6 * s3 + 8 * s4 - 3 * s5,
           0.5 * s2 - 1.5 * s3 + 1.5 * s4 - 0.5 * s5, 10 * s3 - 15 * s4 + 6 * s5,
           -4 * s3 + 7 * s4 - 3 * s5, 0.5 * s3 - s4 + 0.5 * s5}};
}

Quintic quintic_basis_ds(double s) {
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double s4 = s3 * s;
  return {{-30 * s2 + 60 * s3 - 30 * s4, 1 - 18 * s2 + 32 * s3 - 15 * s4,
           s - 4.5 * s2 + 6 * s3 - 2.5 * s4, 30 * s2 - 60 * s3 + 30 * s4,
           -12 * s2 + 28 * s3 - 15 * s4, 1.5 * s2 - 4 * s3 + 2.5 * s4}};
}

}  // namespace

double DenseSolution::value(double t) const {
  if (nodes_.size() == 1) return nodes_.front().y;
  const std::size_t i = locate(t);
  const Node& a = nodes_[i];
  const Node& b = nodes_[i + 1];
  const double h = b.t - a.t;
  const Quintic q = quintic_basis((t - a.t) / h);
  return q.v[0] * a.y + q.v[1] * h * a.dy + q.v[2] * h * h * a.ddy +
         q.v[3] * b.y + q.v[4] * h * b.dy + q.v[5] * h * h * b.ddy;
}

double DenseSolution::derivative(double t) const {
  if (nodes_.size() == 1) return nodes_.front().dy;
  const std::size_t i = locate(t);
  const Node& a = nodes_[i];
  const Node& b = nodes_[i + 1];
  const double h = b.t - a.t;
  const Quintic q = quintic_basis_ds((t - a.t) / h);
  return (q.v[0] * a.y + q.v[1] * h * a.dy + q.v[2] * h * h * a.ddy +
          q.v[3] * b.y + q.v[4] * h * b.dy + q.v[5] * h * h * b.ddy) /
         h;
}

DenseSolution ode_oracle(const ModeProblem& problem, double t_max, double tol) {
  if (!(tol > 0.0)) {
    raise(ErrorKind::invalid_params, "ode_oracle requires tol > 0");
  }
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
    raise(ErrorKind::invalid_params, "ode_oracle requires finite t_max >= 0");
  }
  if (problem.mu > 0.0) {
    raise(ErrorKind::invalid_params, "mode problems require mu <= 0");
  }
  const double m2 = real_mass_squared(problem.mass, "ode_oracle");
  const double mu = problem.mu;
  const auto g = [&](double t) {
    return problem.forcing ? problem.forcing(t) : 0.0;
  };
  const auto accel = [&](double t, double y) {
    return mu * std::exp(-2.0 * t) * y + m2 * y + g(t);
  };
  using State = std::array<double, 2>;
  const auto rhs = [&](double t, const State& s) -> State {
    return {s[1], accel(t, s[0])};
  };

  // Dormand-Prince 5(4) tableau.
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                   a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  std::vector<DenseSolution::Node> nodes;
  State y{problem.c0, problem.c1};
  double t = 0.0;
  nodes.push_back({t, y[0], y[1], accel(t, y[0])});
  if (t_max == 0.0) return DenseSolution(std::move(nodes));

  double h = std::min(0.01, t_max);
  State k1 = rhs(t, y);
  while (t < t_max) {
    if (t + h > t_max) h = t_max - t;
    if (h < 1e-14 * (1.0 + t)) {
      raise(ErrorKind::step_failure, "ode_oracle step size underflow at t = " +
                                         std::to_string(t));
    }
    auto comb = [&](std::initializer_list<std::pair<double, const State*>> terms) {
      State r = y;
      for (const auto& [c, k] : terms) {
        r[0] += h * c * (*k)[0];
        r[1] += h * c * (*k)[1];
      }
      return r;
    };
    const State k2 = rhs(t + c2 * h, comb({{a21, &k1}}));
    const State k3 = rhs(t + c3 * h, comb({{a31, &k1}, {a32, &k2}}));
    const State k4 = rhs(t + c4 * h, comb({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = rhs(t + c5 * h,
                         comb({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 = rhs(t + h, comb({{a61, &k1}, {a62, &k2}, {a63, &k3},
                                      {a64, &k4}, {a65, &k5}}));
    const State y5 =
        comb({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = rhs(t + h, y5);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                            e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc = tol * h * (1.0 + std::max(std::abs(y[i]), std::abs(y5[i])));
      err = std::max(err, std::abs(e) / sc);
    }
    if (err <= 1.0) {
      t = (t + h >= t_max) ? t_max : t + h;
      y = y5;
      k1 = k7;
      nodes.push_back({t, y[0], y[1], k7[1]});
    }
    // Error per unit step scales like h^4 relative to the per-step target.
    const double factor =
        err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.25), 0.2, 5.0);
    h *= factor;
  }
  return DenseSolution(std::move(nodes));
}

double GridProblem1D::dx() const {
  return boundary == Boundary::periodic ? (x_max - x_min) / n_x
                                        : (x_max - x_min) / (n_x - 1);
}

std::vector<double> GridProblem1D::nodes() const {
  std::vector<double> x(static_cast<std::size_t>(n_x));
  const double h = dx();
  for (int i = 0; i < n_x; ++i) x[i] = x_min + i * h;
  if (boundary == Boundary::dirichlet) x.back() = x_max;
  return x;
}

void GridProblem1D::validate() const {
  if (n_x < 3) raise(ErrorKind::invalid_params, "grid needs n_x >= 3");
  if (!(x_max > x_min)) raise(ErrorKind::invalid_params, "grid needs x_max > x_min");
  if (phi0.size() != static_cast<std::size_t>(n_x) ||
      phi1.size() != static_cast<std::size_t>(n_x)) {
    raise(ErrorKind::invalid_params, "phi0 and phi1 must have n_x entries");
  }
  if (boundary != Boundary::periodic && boundary != Boundary::dirichlet) {
    raise(ErrorKind::boundary_unsupported, "unknown boundary tag");
  }
}

const std::vector<double>& SpaceTimeField::at(double time) const {
  if (t.empty()) raise(ErrorKind::domain, "empty space-time field");
  std::size_t best = 0;
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (std::abs(t[k] - time) < std::abs(t[best] - time)) best = k;
  }
  return u[best];
}

SpaceTimeField fd_direct_solver(const GridProblem1D& problem, const Mass& mass,
                                double t_max, double dt) {
  problem.validate();
  const double m2 = real_mass_squared(mass, "fd_direct_solver");
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
    raise(ErrorKind::invalid_params, "fd_direct_solver requires t_max >= 0");
  }
  const double dx = problem.dx();
  if (!(dt > 0.0) || dt > 0.9 * dx) {
    std::ostringstream os;
    os.precision(17);
    os << "dt = " << dt << " exceeds 0.9 dx = " << 0.9 * dx;
    raise(ErrorKind::cfl_violation, os.str());
  }
  const int steps = std::max(1, static_cast<int>(std::ceil(t_max / dt - 1e-12)));
  const double k = t_max / steps;
  const int n = problem.n_x;
  const bool periodic = problem.boundary == Boundary::periodic;

  SpaceTimeField out;
  out.x = problem.nodes();
  out.dt = k;
  out.t.reserve(steps + 1);
  out.u.reserve(steps + 1);

  const auto source = [&](double time, std::vector<double>& f) {
    f.assign(n, 0.0);
    if (problem.f) {
      for (int i = 0; i < n; ++i) f[i] = problem.f(out.x[i], time);
    }
  };
  const auto laplacian = [&](const std::vector<double>& u,
                             std::vector<double>& lap) {
    lap.assign(n, 0.0);
    const double inv = 1.0 / (dx * dx);
    for (int i = 0; i < n; ++i) {
      if (!periodic && (i == 0 || i == n - 1)) continue;
      const double left = u[(i - 1 + n) % n];
      const double right = u[(i + 1) % n];
      lap[i] = (left - 2.0 * u[i] + right) * inv;
    }
  };
  const auto pin = [&](std::vector<double>& u) {
    if (!periodic) {
      u.front() = 0.0;
      u.back() = 0.0;
    }
  };

  std::vector<double> u0 = problem.phi0;
  pin(u0);
  out.t.push_back(0.0);
  out.u.push_back(u0);
  if (t_max == 0.0) return out;

  std::vector<double> lap, f;
  laplacian(u0, lap);
  source(0.0, f);
  std::vector<double> u1(n);
  for (int i = 0; i < n; ++i) {
    u1[i] = u0[i] + k * problem.phi1[i] +
            0.5 * k * k * (lap[i] + m2 * u0[i] + f[i]);
  }
  pin(u1);
  out.t.push_back(k);
  out.u.push_back(u1);

  for (int s = 1; s < steps; ++s) {
    const double ts = s * k;
    const std::vector<double>& cur = out.u[s];
    const std::vector<double>& prev = out.u[s - 1];
    laplacian(cur, lap);
    source(ts, f);
    const double damp = std::exp(-2.0 * ts);
    std::vector<double> next(n);
    for (int i = 0; i < n; ++i) {
      next[i] = 2.0 * cur[i] - prev[i] +
                k * k * (damp * lap[i] + m2 * cur[i] + f[i]);
    }
    pin(next);
    out.t.push_back(s + 1 == steps ? t_max : (s + 1) * k);
    out.u.push_back(std::move(next));
  }
  return out;
}

}  // namespace dskg
