#include "eitprop/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace eitprop {

void IntegratorConfig::validate() const {
  if (!(atol > 0.0) || !(rtol > 0.0))
    throw InvalidParameterError("integrator tolerances must be > 0");
  if (!(max_step > 0.0))
    throw InvalidParameterError("integrator max step must be > 0");
  if (!(init_step > 0.0))
    throw InvalidParameterError("integrator initial step must be > 0");
}

MasterEqWork::MasterEqWork(int dim, const LindbladSet& lindblad)
    : dim_(dim),
      diss_(lindblad.dissipator_superoperator(dim)),
      t1_(Matrix::Zero(dim, dim)) {}

void MasterEqWork::rhs(const Matrix& h, const Matrix& y, Matrix& out) {
  const Eigen::Index n = dim_;
  Eigen::Map<const Eigen::VectorXcd> yv(y.data(), n * n);
  Eigen::Map<Eigen::VectorXcd> ov(out.data(), n * n);
  ov.noalias() = diss_ * yv;
  t1_.noalias() = h * y;
  t1_.noalias() -= y * h;
  out += Complex(0.0, -1.0) * t1_;
}

std::vector<double> uniform_grid(double t_end, int n_samples) {
  if (n_samples < 2) throw InvalidParameterError("need at least 2 samples");
  std::vector<double> ts(n_samples);
  for (int i = 0; i < n_samples; ++i)
    ts[i] = t_end * static_cast<double>(i) / (n_samples - 1);
  ts.back() = t_end;
  return ts;
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// 4th-order embedded weights
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

class Stepper {
 public:
  Stepper(int dim, const LindbladSet& lindblad, const HamiltonianFn& h_of_t)
      : work_(dim, lindblad), h_of_t_(h_of_t), hbuf_(Matrix::Zero(dim, dim)) {
    for (auto* m : {&k1_, &k2_, &k3_, &k4_, &k5_, &k6_, &k7_, &ytmp_, &err_})
      *m = Matrix::Zero(dim, dim);
  }

  void deriv(double t, const Matrix& y, Matrix& out) {
    h_of_t_(t, hbuf_);
    work_.rhs(hbuf_, y, out);
  }

  // One classical RK4 step in place.
  void rk4(double t, double h, Matrix& y) {
    deriv(t, y, k1_);
    ytmp_ = y + (0.5 * h) * k1_;
    deriv(t + 0.5 * h, ytmp_, k2_);
    ytmp_ = y + (0.5 * h) * k2_;
    deriv(t + 0.5 * h, ytmp_, k3_);
    ytmp_ = y + h * k3_;
    deriv(t + h, ytmp_, k4_);
    y += (h / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
  }

  // One DP54 attempt; returns the scaled error norm and writes the 5th-order
  // solution into ynew.
  double dp54(double t, double h, const Matrix& y, Matrix& ynew,
              double atol, double rtol) {
    deriv(t, y, k1_);
    ytmp_ = y + h * (a21 * k1_);
    deriv(t + c2 * h, ytmp_, k2_);
    ytmp_ = y + h * (a31 * k1_ + a32 * k2_);
    deriv(t + c3 * h, ytmp_, k3_);
    ytmp_ = y + h * (a41 * k1_ + a42 * k2_ + a43 * k3_);
    deriv(t + c4 * h, ytmp_, k4_);
    ytmp_ = y + h * (a51 * k1_ + a52 * k2_ + a53 * k3_ + a54 * k4_);
    deriv(t + c5 * h, ytmp_, k5_);
    ytmp_ = y + h * (a61 * k1_ + a62 * k2_ + a63 * k3_ + a64 * k4_ + a65 * k5_);
    deriv(t + h, ytmp_, k6_);
    ynew = y + h * (b1 * k1_ + b3 * k3_ + b4 * k4_ + b5 * k5_ + b6 * k6_);
    deriv(t + h, ynew, k7_);
    err_ = ynew - (y + h * (e1 * k1_ + e3 * k3_ + e4 * k4_ + e5 * k5_ +
                            e6 * k6_ + e7 * k7_));
    double norm = 0.0;
    for (Eigen::Index i = 0; i < err_.size(); ++i) {
      const double scale =
          atol + rtol * std::max(std::abs(y(i)), std::abs(ynew(i)));
      norm = std::max(norm, std::abs(err_(i)) / scale);
    }
    return norm;
  }

 private:
  MasterEqWork work_;
  const HamiltonianFn& h_of_t_;
  Matrix hbuf_;
  Matrix k1_, k2_, k3_, k4_, k5_, k6_, k7_, ytmp_, err_;
};

void hermitize(Matrix& y) { y = 0.5 * (y + y.adjoint()).eval(); }

}  // namespace

Trajectory evolve(const DensityMatrix& rho0, const HamiltonianFn& h_of_t,
                  const LindbladSet& lindblad,
                  const std::vector<double>& sample_times,
                  const IntegratorConfig& cfg) {
  cfg.validate();
  if (sample_times.size() < 2 || sample_times.front() != 0.0)
    throw InvalidParameterError("sample times must start at 0");
  for (size_t i = 1; i < sample_times.size(); ++i)
    if (!(sample_times[i] > sample_times[i - 1]))
      throw InvalidParameterError("sample times must be strictly ascending");

  const int dim = rho0.dim();
  Stepper stepper(dim, lindblad, h_of_t);
  Matrix y = rho0.matrix();
  Matrix ynew = y;

  Trajectory traj;
  traj.times = sample_times;
  traj.states.reserve(sample_times.size());
  traj.states.push_back(rho0);

  double hstep = std::min(cfg.init_step, cfg.max_step);

  for (size_t seg = 1; seg < sample_times.size(); ++seg) {
    double t = sample_times[seg - 1];
    const double t_goal = sample_times[seg];

    if (cfg.method == IntegratorConfig::Method::FixedRk4) {
      const double span = t_goal - t;
      const int nsub =
          std::max(1, static_cast<int>(std::ceil(span / cfg.max_step - 1e-12)));
      const double h = span / nsub;
      for (int s = 0; s < nsub; ++s) {
        stepper.rk4(t, h, y);
        t += h;
      }
      hermitize(y);
    } else {
      while (t < t_goal - 1e-14 * std::max(1.0, t_goal)) {
        double h = std::min({hstep, cfg.max_step, t_goal - t});
        bool accepted = false;
        while (!accepted) {
          if (h < 1e-14 * std::max(1.0, std::abs(t)))
            throw IntegrationError("adaptive step underflow (stiffness)", t);
          const double err = stepper.dp54(t, h, y, ynew, cfg.atol, cfg.rtol);
          if (err <= 1.0) {
            t += h;
            y = ynew;
            hermitize(y);
            const double grow =
                (err <= 1e-30) ? 5.0
                               : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
            hstep = std::min(h * grow, cfg.max_step);
            accepted = true;
          } else {
            h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
          }
        }
      }
    }
    traj.states.push_back(DensityMatrix(y));
  }
  return traj;
}

Trajectory evolve(const DensityMatrix& rho0, const HamiltonianFn& h_of_t,
                  const LindbladSet& lindblad, double t_end,
                  const IntegratorConfig& cfg, int n_samples) {
  return evolve(rho0, h_of_t, lindblad, uniform_grid(t_end, n_samples), cfg);
}

Trajectory evolve(const DensityMatrix& rho0, const Matrix& h,
                  const LindbladSet& lindblad, double t_end,
                  const IntegratorConfig& cfg, int n_samples) {
  HamiltonianFn fn = [&h](double, Matrix& out) { out = h; };
  return evolve(rho0, fn, lindblad, uniform_grid(t_end, n_samples), cfg);
}

}  // namespace eitprop
