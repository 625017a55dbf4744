// Binary field snapshots and CSV tables.
//
// Snapshot layout (little-endian):
//   magic "NLKG", version u32, dim u32, n u32, L f64, m f64, lambda f64,
//   kind u8 (0 = RealField, 1 = PhaseSpacePoint, 2 = ComplexProfile),
//   payload: row-major f64 samples (phi then pi for kind 1; interleaved
//   re, im for kind 2).

#pragma once

#include "nlkg/grid.hpp"

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace nlkg {

inline constexpr std::uint32_t kSnapshotVersion = 1;

enum class SnapshotKind : std::uint8_t { RealFieldKind = 0, PhasePointKind = 1, ProfileKind = 2 };

using Snapshot = std::variant<RealField, PhaseSpacePoint, ComplexProfile>;

void write_snapshot(const std::filesystem::path& path, const RealField& f);
void write_snapshot(const std::filesystem::path& path, const PhaseSpacePoint& d);
void write_snapshot(const std::filesystem::path& path, const ComplexProfile& z);

Snapshot read_snapshot(const std::filesystem::path& path);

RealField read_real_field(const std::filesystem::path& path);
PhaseSpacePoint read_phase_point(const std::filesystem::path& path);
ComplexProfile read_profile(const std::filesystem::path& path);

/// Minimal CSV emitter; one row per call after the header.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
  ~CsvWriter();
  void row(const std::vector<double>& values);

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace nlkg
