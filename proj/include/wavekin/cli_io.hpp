#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wavekin/evolve.hpp"
#include "wavekin/kernel.hpp"
#include "wavekin/states.hpp"

namespace wavekin {

struct InitialCondition {
  std::string kind = "rayleigh_jeans";  // rayleigh_jeans | bi_maxwellian | delta_ring | kz | gaussian | zero
  double mu = 50.0;
  std::vector<double> nu{5.0, 5.0};
  double xi = 100.0;
  BiMaxwellianParams bimax;
  std::vector<RingTerm> radii{{0.0, 1.0 / 3.0}, {0.2, 1.0 / 3.0}};
  std::optional<double> u;  // ring width; default 0.5 sqrt(dk)
  double theta = kKZInverseCascade;
  double eps = 1.0;
  std::vector<std::vector<double>> centers{{}};
  double T = 1.0;
  double rho = 1.0;
};

/// Everything a command needs. Unset optional counts take the defaults
/// N_r = N and N_s = N_sig = 12 (2D) or 6 (3D).
struct RunConfig {
  int dimension = 2;
  int N = 16;
  std::optional<int> N_r, N_s, N_sig;
  double S = 5.0;
  std::optional<double> L_factor;  // L = L_factor * S
  ConvMode conv_mode = ConvMode::exact;
  double dt = 0.1;
  double t_end = 1.0;
  int record_every = 1;
  int snapshot_every = 0;
  int threads = 1;
  std::uint64_t seed = 1;
  std::string output;
  InitialCondition ic;
  std::vector<int> bench_sizes{16, 32, 64};
  int bench_repeats = 3;
  bool stationary_zero_field = false;
  bool compare_zero_input = false;

  int n_r() const { return N_r.value_or(N); }
  int n_s() const { return N_s.value_or(dimension == 2 ? 12 : 6); }
  int n_sig() const { return N_sig.value_or(dimension == 2 ? 12 : 6); }
};

/// Sets one dotted key from its text value. Unknown keys and malformed values
/// raise ValidationError.
void set_config_value(RunConfig& config, const std::string& key, const std::string& value);
/// "key=value"
void apply_override(RunConfig& config, const std::string& assignment);

/// Flat "key = value" lines; '#' starts a comment. Keys not in the text keep
/// their value from `base`.
RunConfig parse_config(std::istream& in, const std::string& source = "config", RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});
std::string serialize_config(const RunConfig& config);

SpectralGrid grid_from_config(const RunConfig& config);
KernelPlan plan_from_config(const RunConfig& config);
SpectralField initial_state(const RunConfig& config, const SpectralGrid& grid);
EvolutionConfig evolution_from_config(const RunConfig& config);

/// Random coefficients of a real field, exactly Hermitian, Nyquist modes zero.
SpectralCoeffs random_hermitian_coeffs(const SpectralGrid& grid, std::uint64_t seed);

// Snapshots --------------------------------------------------------------

/// Binary layout (little endian): "WKES", u32 version, u32 d, u32 N, f64 S,
/// f64 L, f64 t, u32 conv_mode (0 exact, 1 circular), then N^d f64 values,
/// row-major with the last axis fastest.
struct Snapshot {
  static constexpr std::uint32_t kVersion = 1;
  int dim = 2;
  int n = 0;
  double S = 0.0;
  double L = 0.0;
  double t = 0.0;
  ConvMode mode = ConvMode::exact;
  std::vector<double> values;
};

Snapshot make_snapshot(const SpectralField& field, double t, ConvMode mode);
SpectralField snapshot_field(const Snapshot& snap);
void write_snapshot(std::ostream& out, const Snapshot& snap);
Snapshot read_snapshot(std::istream& in);
void save_snapshot(const std::string& path, const Snapshot& snap);
Snapshot load_snapshot(const std::string& path);

// CSV --------------------------------------------------------------------

std::string format_double(double v);  // 17 significant digits
std::string timeseries_header(int dim);
std::string timeseries_row(const ObservableRecord& rec, int dim);
/// Grid values as "k_1,...,k_d,f" rows; 3D writes the central k_3 = 0 plane.
void write_slice_csv(std::ostream& out, const SpectralField& field);

/// Writes timeseries.csv, snapshot_<step>.wkes and slice_<step>.csv into a directory.
class DirectorySink : public EvolutionSink {
 public:
  DirectorySink(std::string directory, int dim, ConvMode mode, double dt);
  void record(const ObservableRecord& rec) override;
  void snapshot(const SpectralField& field, double t) override;
  void flush() override;
  ~DirectorySink() override;

 private:
  std::string dir_;
  ConvMode mode_;
  double dt_;
  int dim_;
  std::unique_ptr<std::ofstream> series_;
};

// Commands ---------------------------------------------------------------

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitNumeric = 2, kExitCheckFailed = 3 };

struct StationaryReport {
  double linf = 0.0;
  double l2 = 0.0;
  double discarded_imag = 0.0;
  std::array<double, 4> term_seconds{};
  double total_seconds = 0.0;
};
StationaryReport compute_stationary(const RunConfig& config, bool time_terms = true);
int cmd_stationary(const RunConfig& config, std::ostream& out);

int cmd_evolve(const RunConfig& config, std::ostream& out);

struct CompareReport {
  double max_relative = 0.0;
  double max_abs = 0.0;
  double tolerance = 1e-12;
  bool pass = false;
};
CompareReport compute_compare(const RunConfig& config);
int cmd_compare(const RunConfig& config, std::ostream& out);

struct BenchRow {
  int n = 0;
  std::array<double, 4> term_seconds{};  // fastest of the repeats
  double total_seconds = 0.0;            // fused evaluation, fastest of the repeats
  std::optional<double> ratio;           // total / previous total
};
std::vector<BenchRow> compute_bench(const RunConfig& config);
int cmd_bench(const RunConfig& config, std::ostream& out);

struct QuadCheck {
  std::string name;
  double error = 0.0;
  bool expected_exact = true;
  bool exact = false;
  bool pass() const { return !expected_exact || exact; }
};
std::vector<QuadCheck> compute_quadcheck(const RunConfig& config);
int cmd_quadcheck(const RunConfig& config, std::ostream& out);

}  // namespace wavekin
