#pragma once

#include <array>
#include <functional>
#include <vector>

#include "wavekin/error.hpp"
#include "wavekin/grid.hpp"
#include "wavekin/kernel.hpp"

namespace wavekin {

/// Moments and norms of f on the grid (rectangle rule).
struct ObservableRecord {
  double t = 0.0;
  double mass = 0.0;
  std::array<double, 3> momentum{0.0, 0.0, 0.0};
  double energy = 0.0;  // sum f |k|^2 dk^d
  double linf = 0.0;
  double l2 = 0.0;
  double neg_min = 0.0;  // min(0, min f)
};

ObservableRecord observables(const SpectralField& field, double t = 0.0);

struct EvolutionConfig {
  double dt = 0.1;
  double t_end = 1.0;
  int record_every = 1;
  int snapshot_every = 0;  // 0: initial and final state only
};

/// Number of steps implied by dt and t_end; t_end must be a whole number of steps.
long step_count(const EvolutionConfig& config);

/// Raised when a stage or a step produces a non-finite value.
class EvolutionError : public NumericError {
 public:
  EvolutionError(const std::string& what, long step, double last_good_t)
      : NumericError(what), step_(step), last_good_t_(last_good_t) {}
  long step() const { return step_; }
  double last_good_t() const { return last_good_t_; }

 private:
  long step_;
  double last_good_t_;
};

using Rhs = std::function<SpectralField(const SpectralField&)>;

/// Classical four-stage Runge-Kutta step for df/dt = rhs(f).
SpectralField rk4_step(const SpectralField& f, const Rhs& rhs, double dt, long step = 0);

/// rk4_step with the collision operator as right-hand side.
SpectralField rk4_step(const SpectralField& f, KernelPlan& plan, double dt, long step = 0);

/// Receives records and snapshots as a run produces them.
class EvolutionSink {
 public:
  virtual ~EvolutionSink() = default;
  virtual void record(const ObservableRecord&) {}
  virtual void snapshot(const SpectralField&, double /*t*/) {}
  virtual void flush() {}
};

struct RunResult {
  SpectralField final_state;
  std::vector<ObservableRecord> records;
  long steps = 0;
};

/// Steps from t = 0 to t_end. Records are taken at step 0, every
/// record_every steps and at the final step; snapshots likewise with
/// snapshot_every. On a non-finite state the sink is flushed and an
/// EvolutionError carrying the last good time is thrown.
RunResult run(const SpectralField& initial, const Rhs& rhs, const EvolutionConfig& config,
              EvolutionSink* sink = nullptr);
RunResult run(const SpectralField& initial, KernelPlan& plan, const EvolutionConfig& config,
              EvolutionSink* sink = nullptr);

}  // namespace wavekin
