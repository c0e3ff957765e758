#include "wavekin/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wavekin {

ObservableRecord observables(const SpectralField& field, double t) {
  const SpectralGrid& grid = field.grid;
  const double cell = std::pow(grid.spacing(), grid.dim());
  ObservableRecord rec;
  rec.t = t;
  double sq = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double f = field.values[i];
    const Vec3 k = grid.node_point(i);
    rec.mass += f;
    for (int a = 0; a < grid.dim(); ++a) rec.momentum[a] += f * k[a];
    rec.energy += f * (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    rec.linf = std::max(rec.linf, std::abs(f));
    rec.neg_min = std::min(rec.neg_min, f);
    sq += f * f;
  }
  rec.mass *= cell;
  for (double& m : rec.momentum) m *= cell;
  rec.energy *= cell;
  rec.l2 = std::sqrt(sq * cell);
  return rec;
}

long step_count(const EvolutionConfig& config) {
  if (!(config.dt > 0.0)) throw ValidationError("dt must be positive");
  if (!(config.t_end >= 0.0)) throw ValidationError("t_end must be nonnegative");
  if (config.record_every < 1) throw ValidationError("record_every must be >= 1");
  if (config.snapshot_every < 0) throw ValidationError("snapshot_every must be >= 0");
  const double ratio = config.t_end / config.dt;
  const long steps = std::lround(ratio);
  if (std::abs(ratio - steps) > 1e-9 * std::max(1.0, ratio)) {
    std::ostringstream os;
    os << "t_end = " << config.t_end << " is not a whole number of steps of dt = " << config.dt;
    throw ValidationError(os.str());
  }
  return steps;
}

namespace {

bool all_finite(const SpectralField& f) {
  return std::all_of(f.values.begin(), f.values.end(), [](double v) { return std::isfinite(v); });
}

SpectralField axpy(const SpectralField& y, double a, const SpectralField& x) {
  SpectralField out(y.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = y.values[i] + a * x.values[i];
  return out;
}

}  // namespace

SpectralField rk4_step(const SpectralField& f, const Rhs& rhs, double dt, long step) {
  if (!(dt > 0.0)) throw ValidationError("dt must be positive");
  auto stage = [&](const SpectralField& x, int s) {
    SpectralField k = rhs(x);
    if (!all_finite(k)) {
      std::ostringstream os;
      os << "non-finite value in RK4 stage " << s << " of step " << step;
      throw NumericError(os.str());
    }
    return k;
  };
  const SpectralField k1 = stage(f, 1);
  const SpectralField k2 = stage(axpy(f, 0.5 * dt, k1), 2);
  const SpectralField k3 = stage(axpy(f, 0.5 * dt, k2), 3);
  const SpectralField k4 = stage(axpy(f, dt, k3), 4);
  SpectralField out(f.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = f.values[i] +
                    dt / 6.0 * (k1.values[i] + 2.0 * k2.values[i] + 2.0 * k3.values[i] + k4.values[i]);
  }
  return out;
}

SpectralField rk4_step(const SpectralField& f, KernelPlan& plan, double dt, long step) {
  return rk4_step(f, [&plan](const SpectralField& x) { return collision(x, plan); }, dt, step);
}

RunResult run(const SpectralField& initial, const Rhs& rhs, const EvolutionConfig& config,
              EvolutionSink* sink) {
  const long steps = step_count(config);
  RunResult result{initial, {}, 0};
  auto emit = [&](const SpectralField& f, long n) {
    const double t = n * config.dt;
    if (n % config.record_every == 0 || n == steps) {
      result.records.push_back(observables(f, t));
      if (sink) sink->record(result.records.back());
    }
    const bool snap = config.snapshot_every > 0 ? (n % config.snapshot_every == 0) : n == 0;
    if (sink && (snap || n == steps)) sink->snapshot(f, t);
  };

  if (!all_finite(initial)) throw EvolutionError("initial state has non-finite values", 0, 0.0);
  emit(initial, 0);
  for (long n = 1; n <= steps; ++n) {
    const double last_good = (n - 1) * config.dt;
    try {
      SpectralField next = rk4_step(result.final_state, rhs, config.dt, n);
      if (!all_finite(next)) throw NumericError("non-finite state after step " + std::to_string(n));
      result.final_state = std::move(next);
    } catch (const NumericError& e) {
      if (sink) sink->flush();
      std::ostringstream os;
      os << e.what() << "; last good t = " << last_good;
      throw EvolutionError(os.str(), n, last_good);
    }
    result.steps = n;
    emit(result.final_state, n);
  }
  if (sink) sink->flush();
  return result;
}

RunResult run(const SpectralField& initial, KernelPlan& plan, const EvolutionConfig& config,
              EvolutionSink* sink) {
  return run(initial, [&plan](const SpectralField& x) { return collision(x, plan); }, config, sink);
}

}  // namespace wavekin
