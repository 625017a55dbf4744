#include "nlkg/io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

static_assert(std::endian::native == std::endian::little,
              "snapshot format is little-endian; big-endian hosts unsupported");

namespace nlkg {

namespace {

void put_bytes(std::ostream& os, const void* p, std::size_t n) {
  os.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

template <typename T>
void put(std::ostream& os, T v) {
  put_bytes(os, &v, sizeof v);
}

template <typename T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!is) throw std::runtime_error("snapshot: truncated file");
  return v;
}

void write_header(std::ostream& os, const Grid& g, SnapshotKind kind) {
  os.write("NLKG", 4);
  put<std::uint32_t>(os, kSnapshotVersion);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(g.dim));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(g.n));
  put<double>(os, g.box_length);
  put<double>(os, g.mass);
  put<double>(os, g.coupling);
  put<std::uint8_t>(os, static_cast<std::uint8_t>(kind));
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("snapshot: cannot open " + path.string() + " for writing");
  return os;
}

std::pair<Grid, SnapshotKind> read_header(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "NLKG", 4) != 0)
    throw std::runtime_error("snapshot: bad magic");
  const auto version = get<std::uint32_t>(is);
  if (version != kSnapshotVersion) throw std::runtime_error("snapshot: unsupported version");
  Grid g;
  g.dim = static_cast<int>(get<std::uint32_t>(is));
  g.n = static_cast<int>(get<std::uint32_t>(is));
  g.box_length = get<double>(is);
  g.mass = get<double>(is);
  g.coupling = get<double>(is);
  const auto kind = static_cast<SnapshotKind>(get<std::uint8_t>(is));
  g = make_grid(g.dim, g.n, g.box_length, g.mass, g.coupling);
  return {g, kind};
}

RealArray read_reals(std::istream& is, Eigen::Index count) {
  RealArray v(count);
  is.read(reinterpret_cast<char*>(v.data()), count * static_cast<Eigen::Index>(sizeof(double)));
  if (!is) throw std::runtime_error("snapshot: truncated payload");
  return v;
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const RealField& f) {
  auto os = open_out(path);
  write_header(os, f.grid, SnapshotKind::RealFieldKind);
  put_bytes(os, f.values.data(), f.values.size() * sizeof(double));
}

void write_snapshot(const std::filesystem::path& path, const PhaseSpacePoint& d) {
  auto os = open_out(path);
  write_header(os, d.grid(), SnapshotKind::PhasePointKind);
  put_bytes(os, d.phi.values.data(), d.phi.values.size() * sizeof(double));
  put_bytes(os, d.pi.values.data(), d.pi.values.size() * sizeof(double));
}

void write_snapshot(const std::filesystem::path& path, const ComplexProfile& z) {
  auto os = open_out(path);
  write_header(os, z.grid, SnapshotKind::ProfileKind);
  put_bytes(os, z.values.data(), z.values.size() * sizeof(Complex));
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("snapshot: cannot open " + path.string());
  const auto [g, kind] = read_header(is);
  switch (kind) {
    case SnapshotKind::RealFieldKind:
      return RealField{g, read_reals(is, g.size())};
    case SnapshotKind::PhasePointKind: {
      RealArray phi = read_reals(is, g.size());
      RealArray pi = read_reals(is, g.size());
      return PhaseSpacePoint{{g, std::move(phi)}, {g, std::move(pi)}};
    }
    case SnapshotKind::ProfileKind: {
      RealArray raw = read_reals(is, 2 * g.size());
      ComplexArray z(g.size());
      for (Eigen::Index i = 0; i < g.size(); ++i) z[i] = Complex(raw[2 * i], raw[2 * i + 1]);
      return ComplexProfile{g, std::move(z)};
    }
  }
  throw std::runtime_error("snapshot: unknown kind");
}

RealField read_real_field(const std::filesystem::path& path) {
  auto s = read_snapshot(path);
  if (auto* f = std::get_if<RealField>(&s)) return std::move(*f);
  throw std::runtime_error("snapshot: " + path.string() + " is not a RealField");
}

PhaseSpacePoint read_phase_point(const std::filesystem::path& path) {
  auto s = read_snapshot(path);
  if (auto* d = std::get_if<PhaseSpacePoint>(&s)) return std::move(*d);
  throw std::runtime_error("snapshot: " + path.string() + " is not a PhaseSpacePoint");
}

ComplexProfile read_profile(const std::filesystem::path& path) {
  auto s = read_snapshot(path);
  if (auto* z = std::get_if<ComplexProfile>(&s)) return std::move(*z);
  throw std::runtime_error("snapshot: " + path.string() + " is not a ComplexProfile");
}

struct CsvWriter::Impl {
  std::ofstream os;
};

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : impl_(new Impl{std::ofstream(path)}) {
  if (!impl_->os) {
    delete impl_;
    throw std::runtime_error("csv: cannot open " + path.string());
  }
  for (std::size_t i = 0; i < header.size(); ++i)
    impl_->os << header[i] << (i + 1 < header.size() ? "," : "\n");
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::row(const std::vector<double>& values) {
  impl_->os << std::setprecision(17);
  for (std::size_t i = 0; i < values.size(); ++i)
    impl_->os << values[i] << (i + 1 < values.size() ? "," : "\n");
}

}  // namespace nlkg
