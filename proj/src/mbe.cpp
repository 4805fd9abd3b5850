#include "eitprop/mbe.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <thread>

namespace eitprop {

void PropagationGrid::validate() const {
  if (n_zeta < 2) throw InvalidParameterError("n_zeta must be >= 2");
  if (!(dtau > 0.0)) throw InvalidParameterError("dtau must be > 0");
  if (!(tau_max > dtau)) throw InvalidParameterError("tau_max must exceed dtau");
}

double coupling_constant(const AtomSpec& spec) {
  return 0.5 * spec.wavenumber() * spec.coupling_prefactor();
}

namespace {

struct Workspace {
  explicit Workspace(int dim, const LindbladSet& l)
      : work(dim, l) {
    for (auto* m : {&h0, &hm, &h1, &k1, &k2, &k3, &k4, &ytmp})
      *m = Matrix::Zero(dim, dim);
  }
  MasterEqWork work;
  Matrix h0, hm, h1, k1, k2, k3, k4, ytmp;
};

// One RK4 step of a slice state under linearly interpolated fields.
void advance_state(Workspace& ws, const SystemModel& model, Matrix& y,
                   Complex ws0, Complex wc0, Complex ws1, Complex wc1,
                   double h, int nsub) {
  for (int s = 0; s < nsub; ++s) {
    const double a0 = static_cast<double>(s) / nsub;
    const double a1 = static_cast<double>(s + 1) / nsub;
    const double am = 0.5 * (a0 + a1);
    const Complex s0 = ws0 + (ws1 - ws0) * a0, c0 = wc0 + (wc1 - wc0) * a0;
    const Complex sm = ws0 + (ws1 - ws0) * am, cm = wc0 + (wc1 - wc0) * am;
    const Complex s1 = ws0 + (ws1 - ws0) * a1, c1 = wc0 + (wc1 - wc0) * a1;
    model.fill_hamiltonian(s0, c0, ws.h0);
    model.fill_hamiltonian(sm, cm, ws.hm);
    model.fill_hamiltonian(s1, c1, ws.h1);
    const double hs = h / nsub;
    ws.work.rhs(ws.h0, y, ws.k1);
    ws.ytmp = y + (0.5 * hs) * ws.k1;
    ws.work.rhs(ws.hm, ws.ytmp, ws.k2);
    ws.ytmp = y + (0.5 * hs) * ws.k2;
    ws.work.rhs(ws.hm, ws.ytmp, ws.k3);
    ws.ytmp = y + hs * ws.k3;
    ws.work.rhs(ws.h1, ws.ytmp, ws.k4);
    y += (hs / 6.0) * (ws.k1 + 2.0 * ws.k2 + 2.0 * ws.k3 + ws.k4);
  }
  y = 0.5 * (y + y.adjoint()).eval();
}

class Marcher {
 public:
  Marcher(const SystemModel& model, const AtomSpec& spec,
          const PropagationGrid& grid, const IntegratorConfig& cfg,
          const PropagateOptions& opts)
      : model_(model), spec_(spec), grid_(grid), cfg_(cfg), opts_(opts) {
    model_.validate();
    spec_.validate(model.scheme);
    grid_.validate();
    cfg_.validate();

    classes_ = opts.velocity_classes;
    if (classes_.empty()) classes_.push_back({0.0, 0.0, 1.0});
    nz_ = grid.n_zeta;
    nv_ = static_cast<int>(classes_.size());
    half_od_ = 0.5 * resonant_od(spec);
    du_ = 1.0 / nz_;

    for (const auto& cl : classes_) {
      node_models_.push_back(
          model_.with_detunings(model_.drive.delta_s + cl.shift_s,
                                model_.drive.delta_c + cl.shift_c));
    }

    n_threads_ = opts.n_threads > 0
                     ? opts.n_threads
                     : static_cast<int>(std::thread::hardware_concurrency());
    n_threads_ = std::clamp(n_threads_, 1, nz_ + 1);

    states_.resize(static_cast<size_t>(nz_ + 1) * nv_);
    const int dim = model_.dim();
    for (auto& s : states_) s = Matrix::Zero(dim, dim);

    ws_col_.resize(nz_ + 1);
    wc_col_.resize(nz_ + 1);
    src_s_.resize(nz_ + 1);
    src_c_.resize(nz_ + 1);
  }

  PropagateResult run() {
    const int nt = grid_.n_tau();
    PropagateResult result;
    result.fields.tau.resize(nt + 1);
    for (int j = 0; j <= nt; ++j) result.fields.tau[j] = j * grid_.dtau;
    result.fields.zeta.resize(nz_ + 1);
    for (int i = 0; i <= nz_; ++i)
      result.fields.zeta[i] = spec_.length * i * du_;

    const bool lambda = model_.scheme == Scheme::Lambda;
    const bool full = opts_.store_fields;
    result.fields.signal.resize(full ? nz_ + 1 : 2, nt + 1);
    if (lambda) result.fields.control.resize(full ? nz_ + 1 : 2, nt + 1);

    prepare_initial_columns();
    record_column(result, 0);

    for (int sl : opts_.sample_slices) {
      if (sl < 0 || sl > nz_)
        throw InvalidParameterError("sample slice index outside the grid");
      result.slices.push_back({sl, {mean_state(sl)}});
    }

    std::vector<std::unique_ptr<Workspace>> work;
    const LindbladSet lind = model_.lindblad();
    for (int t = 0; t < n_threads_; ++t)
      work.push_back(std::make_unique<Workspace>(model_.dim(), lind));

    const int nsub = std::max(
        1, static_cast<int>(std::ceil(grid_.dtau / cfg_.max_step - 1e-12)));

    std::vector<Complex> ws_pred(nz_ + 1), wc_pred(nz_ + 1);
    std::vector<Matrix> staged(states_.size());
    const double tau_step = grid_.dtau;

    for (int j = 0; j < nt; ++j) {
      const double tau1 = (j + 1) * tau_step;
      // predictor: field column at tau_{j+1} from current coherences
      gather_sources(states_);
      march_fields(tau1, ws_pred, wc_pred);

      // advance all slices under fields interpolated to the predicted column
      advance_slices(work, staged, ws_pred, wc_pred, tau_step, nsub);
      gather_sources(staged);
      march_fields(tau1, ws_pred, wc_pred);

      // corrector pass with the refreshed column
      advance_slices(work, staged, ws_pred, wc_pred, tau_step, nsub);
      gather_sources(staged);
      march_fields(tau1, ws_pred, wc_pred);

      states_.swap(staged);
      ws_col_ = ws_pred;
      wc_col_ = wc_pred;
      record_column(result, j + 1);
      for (auto& st : result.slices) st.states.push_back(mean_state(st.slice));
    }

    result.max_stability_ratio = max_stability_;
    return result;
  }

 private:
  Matrix& state(int slice, int node) { return states_[slice * nv_ + node]; }

  DensityMatrix mean_state(int slice) {
    Matrix m = Matrix::Zero(model_.dim(), model_.dim());
    for (int k = 0; k < nv_; ++k)
      m += classes_[k].weight * states_[slice * nv_ + k];
    return DensityMatrix(m);
  }

  void gather_sources(const std::vector<Matrix>& st) {
    const bool lambda = model_.scheme == Scheme::Lambda;
    for (int i = 0; i <= nz_; ++i) {
      Complex ss = 0.0, sc = 0.0;
      for (int k = 0; k < nv_; ++k) {
        const Matrix& r = st[i * nv_ + k];
        ss += classes_[k].weight * model_.signal_coherence(r);
        if (lambda) sc += classes_[k].weight * model_.control_coherence(r);
      }
      src_s_[i] = ss;
      src_c_[i] = sc;
    }
  }

  // Trapezoidal integration of d(omega)/du = i (OD/2) rho_ge along the medium.
  void march_fields(double tau, std::vector<Complex>& ws,
                    std::vector<Complex>& wc) {
    const bool lambda = model_.scheme == Scheme::Lambda;
    ws[0] = model_.drive.signal(tau);
    wc[0] = lambda ? model_.drive.control(tau) : Complex(0.0);
    const Complex fac = Complex(0.0, 1.0) * half_od_ * du_ * 0.5;
    const Complex fac_c = fac * opts_.control_eta_scale;
    double max_abs_w = std::abs(ws[0]);
    double max_src = 0.0;
    for (int i = 0; i < nz_; ++i) {
      ws[i + 1] = ws[i] + fac * (src_s_[i] + src_s_[i + 1]);
      max_abs_w = std::max(max_abs_w, std::abs(ws[i + 1]));
      max_src = std::max(max_src, std::abs(src_s_[i]));
      if (lambda) {
        wc[i + 1] = opts_.control_frozen
                        ? wc[0]
                        : wc[i] + fac_c * (src_c_[i] + src_c_[i + 1]);
      }
    }
    const double ratio =
        half_od_ * du_ * max_src / std::max(max_abs_w, 1e-12);
    max_stability_ = std::max(max_stability_, ratio);
    if (ratio > 0.1) {
      const int suggested =
          static_cast<int>(std::ceil(nz_ * ratio / 0.05));
      throw GridRefinementError(
          "zeta-march stability bound exceeded; refine the spatial grid",
          suggested);
    }
  }

  void advance_slices(std::vector<std::unique_ptr<Workspace>>& work,
                      std::vector<Matrix>& staged,
                      const std::vector<Complex>& ws1,
                      const std::vector<Complex>& wc1, double h, int nsub) {
    const bool lambda = model_.scheme == Scheme::Lambda;
    auto run_range = [&](int tid) {
      Workspace& w = *work[tid];
      for (int i = tid; i <= nz_; i += n_threads_) {
        for (int k = 0; k < nv_; ++k) {
          Matrix& dst = staged[i * nv_ + k];
          dst = state(i, k);
          advance_state(w, node_models_[k], dst, ws_col_[i],
                        lambda ? wc_col_[i] : Complex(0.0), ws1[i],
                        lambda ? wc1[i] : Complex(0.0), h, nsub);
        }
      }
    };
    if (n_threads_ == 1) {
      run_range(0);
      return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_threads_);
    for (int t = 0; t < n_threads_; ++t) pool.emplace_back(run_range, t);
    for (auto& th : pool) th.join();
  }

  // Initial slice states and the tau = 0 field columns. For the
  // SignalSteadyState preparation the probe-only profile is solved by fixed
  // point: slice states are the closed two-level steady states of their local
  // field, the field column is re-marched, repeat to convergence.
  void prepare_initial_columns() {
    const Complex w0 = model_.drive.signal(0.0);
    const bool lambda = model_.scheme == Scheme::Lambda;
    std::fill(ws_col_.begin(), ws_col_.end(), w0);
    std::fill(wc_col_.begin(), wc_col_.end(),
              lambda ? model_.drive.control(0.0) : Complex(0.0));

    if (model_.init != InitialState::SignalSteadyState) {
      for (int i = 0; i <= nz_; ++i)
        for (int k = 0; k < nv_; ++k)
          state(i, k) = node_models_[k].initial_state().matrix();
      gather_sources(states_);
      march_fields(0.0, ws_col_, wc_col_);
      return;
    }

    const int e = model_.excited_index();
    std::vector<Complex> prev(ws_col_);
    for (int iter = 0; iter < 5000; ++iter) {
      for (int i = 0; i <= nz_; ++i) {
        for (int k = 0; k < nv_; ++k) {
          const auto [pop_e, rho_ge] = SystemModel::two_level_steady(
              node_models_[k].drive.delta_s, ws_col_[i]);
          Matrix& m = state(i, k);
          m.setZero();
          m(0, 0) = 1.0 - pop_e;
          m(e, e) = pop_e;
          m(0, e) = rho_ge;
          m(e, 0) = std::conj(rho_ge);
        }
      }
      gather_sources(states_);
      march_fields(0.0, ws_col_, wc_col_);
      double delta = 0.0;
      for (int i = 0; i <= nz_; ++i)
        delta = std::max(delta, std::abs(ws_col_[i] - prev[i]));
      if (delta < 1e-14 * std::max(1.0, std::abs(w0))) return;
      prev = ws_col_;
    }
    throw IntegrationError("probe-profile fixed point failed to converge", 0.0);
  }

  void record_column(PropagateResult& result, int j) {
    const bool full = opts_.store_fields;
    const bool lambda = model_.scheme == Scheme::Lambda;
    if (full) {
      for (int i = 0; i <= nz_; ++i) {
        result.fields.signal(i, j) = ws_col_[i];
        if (lambda) result.fields.control(i, j) = wc_col_[i];
      }
    } else {
      result.fields.signal(0, j) = ws_col_[0];
      result.fields.signal(1, j) = ws_col_[nz_];
      if (lambda) {
        result.fields.control(0, j) = wc_col_[0];
        result.fields.control(1, j) = wc_col_[nz_];
      }
    }
  }

  SystemModel model_;
  AtomSpec spec_;
  PropagationGrid grid_;
  IntegratorConfig cfg_;
  PropagateOptions opts_;
  std::vector<VelocityClass> classes_;
  std::vector<SystemModel> node_models_;
  std::vector<Matrix> states_;
  std::vector<Complex> ws_col_, wc_col_, src_s_, src_c_;
  double half_od_ = 0.0, du_ = 0.0, max_stability_ = 0.0;
  int nz_ = 0, nv_ = 1, n_threads_ = 1;
};

}  // namespace

PropagateResult propagate(const SystemModel& model, const AtomSpec& spec,
                          const PropagationGrid& grid,
                          const IntegratorConfig& cfg,
                          const PropagateOptions& opts) {
  Marcher marcher(model, spec, grid, cfg, opts);
  return marcher.run();
}

std::vector<double> PropagateResult::signal_in() const {
  std::vector<double> out(fields.tau.size());
  for (size_t j = 0; j < out.size(); ++j)
    out[j] = std::abs(fields.signal(0, j));
  return out;
}

std::vector<double> PropagateResult::signal_out() const {
  const Eigen::Index last = fields.signal.rows() - 1;
  std::vector<double> out(fields.tau.size());
  for (size_t j = 0; j < out.size(); ++j)
    out[j] = std::abs(fields.signal(last, j));
  return out;
}

std::vector<double> gain_trace(const FieldGrid& fields) {
  const Eigen::Index last = fields.signal.rows() - 1;
  std::vector<double> g(fields.tau.size());
  for (size_t j = 0; j < g.size(); ++j) {
    const double in = std::abs(fields.signal(0, j));
    if (in <= 0.0)
      throw UndefinedGainError("zero input field in the reported window");
    g[j] = std::abs(fields.signal(last, j)) / in;
  }
  return g;
}

std::vector<double> transmission_trace(const FieldGrid& fields) {
  std::vector<double> t = gain_trace(fields);
  for (double& v : t) v *= v;
  return t;
}

double peak_gain(const FieldGrid& fields) {
  const std::vector<double> g = gain_trace(fields);
  const double guard =
      fields.tau.size() > 1 ? fields.tau[1] - fields.tau[0] : 0.0;
  double best = 0.0;
  for (size_t j = 0; j < g.size(); ++j) {
    if (fields.tau[j] <= guard * (1.0 + 1e-9)) continue;
    best = std::max(best, g[j]);
  }
  return best;
}

}  // namespace eitprop
