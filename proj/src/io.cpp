#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wavekin/cli_io.hpp"
#include "wavekin/error.hpp"

namespace wavekin {

namespace {

constexpr char kMagic[4] = {'W', 'K', 'E', 'S'};

template <typename T>
void put(std::ostream& out, T v) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &v, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T get(std::istream& in, const char* what) {
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T))) {
    throw ValidationError(std::string("snapshot truncated while reading ") + what);
  }
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  T v;
  std::memcpy(&v, bytes, sizeof(T));
  return v;
}

}  // namespace

Snapshot make_snapshot(const SpectralField& field, double t, ConvMode mode) {
  Snapshot s;
  s.dim = field.grid.dim();
  s.n = field.grid.n();
  s.S = field.grid.support();
  s.L = field.grid.half_box();
  s.t = t;
  s.mode = mode;
  s.values = field.values;
  return s;
}

SpectralField snapshot_field(const Snapshot& snap) {
  return SpectralField(SpectralGrid(snap.dim, snap.n, snap.S, snap.L), snap.values);
}

void write_snapshot(std::ostream& out, const Snapshot& snap) {
  out.write(kMagic, 4);
  put<std::uint32_t>(out, Snapshot::kVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(snap.dim));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(snap.n));
  put<double>(out, snap.S);
  put<double>(out, snap.L);
  put<double>(out, snap.t);
  put<std::uint32_t>(out, snap.mode == ConvMode::exact ? 0u : 1u);
  for (double v : snap.values) put<double>(out, v);
  if (!out) throw ValidationError("failed writing snapshot");
}

Snapshot read_snapshot(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    throw ValidationError("not a snapshot (bad magic)");
  }
  const auto version = get<std::uint32_t>(in, "version");
  if (version != Snapshot::kVersion) {
    throw ValidationError("unsupported snapshot version " + std::to_string(version));
  }
  Snapshot s;
  s.dim = static_cast<int>(get<std::uint32_t>(in, "dimension"));
  s.n = static_cast<int>(get<std::uint32_t>(in, "N"));
  if (s.dim != 2 && s.dim != 3) throw ValidationError("snapshot dimension must be 2 or 3");
  if (s.n < 4 || s.n % 2 != 0 || s.n > 4096) throw ValidationError("snapshot N is invalid");
  s.S = get<double>(in, "S");
  s.L = get<double>(in, "L");
  s.t = get<double>(in, "t");
  const auto mode = get<std::uint32_t>(in, "conv_mode");
  if (mode > 1) throw ValidationError("snapshot conv_mode must be 0 or 1");
  s.mode = mode == 0 ? ConvMode::exact : ConvMode::circular;
  std::size_t count = 1;
  for (int a = 0; a < s.dim; ++a) count *= static_cast<std::size_t>(s.n);
  s.values.resize(count);
  for (double& v : s.values) v = get<double>(in, "payload");
  if (in.peek() != std::char_traits<char>::eof()) throw ValidationError("snapshot has trailing bytes");
  return s;
}

void save_snapshot(const std::string& path, const Snapshot& snap) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path + "' for writing");
  write_snapshot(out, snap);
}

Snapshot load_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return read_snapshot(in);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string timeseries_header(int dim) {
  std::string h = "t,mass";
  for (int a = 0; a < dim; ++a) h += ",mom_" + std::to_string(a);
  return h + ",energy,linf,l2,neg_min\r\n";
}

std::string timeseries_row(const ObservableRecord& rec, int dim) {
  std::string row = format_double(rec.t) + "," + format_double(rec.mass);
  for (int a = 0; a < dim; ++a) row += "," + format_double(rec.momentum[a]);
  for (double v : {rec.energy, rec.linf, rec.l2, rec.neg_min}) row += "," + format_double(v);
  return row + "\r\n";
}

void write_slice_csv(std::ostream& out, const SpectralField& field) {
  const SpectralGrid& g = field.grid;
  const int n = g.n();
  out << (g.dim() == 2 ? "k_1,k_2,f\r\n" : "k_1,k_2,k_3,f\r\n");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ModeTuple idx{i, j, n / 2};
      if (g.dim() == 2) idx[2] = 0;
      out << format_double(g.node(i)) << "," << format_double(g.node(j));
      if (g.dim() == 3) out << "," << format_double(g.node(n / 2));
      out << "," << format_double(field.values[g.flatten(idx)]) << "\r\n";
    }
  }
}

DirectorySink::DirectorySink(std::string directory, int dim, ConvMode mode, double dt)
    : dir_(std::move(directory)), mode_(mode), dt_(dt), dim_(dim) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw ValidationError("cannot create output directory '" + dir_ + "': " + ec.message());
  const std::string path = dir_ + "/timeseries.csv";
  series_ = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*series_) throw ValidationError("cannot open '" + path + "' for writing");
  *series_ << timeseries_header(dim_);
}

DirectorySink::~DirectorySink() = default;

void DirectorySink::record(const ObservableRecord& rec) {
  *series_ << timeseries_row(rec, dim_);
  series_->flush();
}

void DirectorySink::snapshot(const SpectralField& field, double t) {
  char stem[32];
  std::snprintf(stem, sizeof stem, "%06ld", std::lround(t / dt_));
  const std::string base = dir_ + "/";
  save_snapshot(base + "snapshot_" + stem + ".wkes", make_snapshot(field, t, mode_));
  const std::string slice = base + "slice_" + stem + ".csv";
  std::ofstream out(slice, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + slice + "' for writing");
  write_slice_csv(out, field);
}

void DirectorySink::flush() { series_->flush(); }

}  // namespace wavekin
